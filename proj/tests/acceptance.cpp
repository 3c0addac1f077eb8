// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "looksay/io.hpp"
#include "looksay/looksay.hpp"
#include "oracles.hpp"

using namespace looksay;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    } else if (!ok) {
      detail += "; " + what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DigitString ds(const std::string& s) { return DigitString::parse(s); }

VerificationResult g_verification;

Outcome table_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  VerifyOptions opts;
  opts.jobs = 1;
  g_verification = verify_cosmological(opts);
  const double elapsed = seconds_since(t0);

  const std::string golden = read_file(LOOKSAY_TEST_DATA "/decay_table.csv");
  o.require(!golden.empty(), "golden table missing");
  const std::string got = io::decay_table_csv(g_verification.table);
  std::istringstream a(golden), b(got);
  std::size_t cells = 0, mismatched = 0;
  std::string la, lb;
  std::getline(a, la);
  std::getline(b, lb);
  o.require(la == lb, "header differs");
  while (std::getline(a, la)) {
    if (!std::getline(b, lb)) {
      o.require(false, "missing rows");
      break;
    }
    std::istringstream ra(la), rb(lb);
    std::string ca, cb;
    std::getline(ra, ca, ',');
    std::getline(rb, cb, ',');
    for (int k = 0; k < 12; ++k) {
      std::getline(ra, ca, ',');
      std::getline(rb, cb, ',');
      ++cells;
      if (ca != cb) ++mismatched;
    }
  }
  o.require(cells == 16 * 12 && mismatched == 0,
            std::to_string(mismatched) + " of " + std::to_string(cells) + " cells differ");
  const auto& row7 = g_verification.table.row(7);
  o.require(std::vector<std::uint64_t>(row7.begin(), row7.end()) ==
                std::vector<std::uint64_t>{17, 33, 5, 18, 14, 8, 5, 18, 14, 3, 1},
            "row 7 differs");
  o.require(g_verification.table.row_total(7) == 136, "row 7 total");
  o.require(g_verification.table.row_total(16) == 32754, "row 16 total");
  o.require(elapsed < 120, "took " + io::fixed(elapsed, 1) + " s");
  if (o.pass) {
    o.detail = "176 cells and 16 totals exact, single-threaded in " + io::fixed(elapsed, 1) + " s";
  }
  return o;
}

Outcome all_strings_decay() {
  Outcome o;
  const auto& r = g_verification;
  o.require(r.verified, std::to_string(r.counterexamples.size()) + " strings exceeded the cap");
  o.require(r.max_iterations == 10, "max iterations " + std::to_string(r.max_iterations));
  o.require(r.strings_checked == 71775, "checked " + std::to_string(r.strings_checked));
  if (o.pass) o.detail = "max 10 iterations over 71775 strings, 0 failures";
  return o;
}

Outcome eight_strings() {
  Outcome o;
  std::set<std::string> got;
  for (const auto& rec : g_verification.records) {
    if (rec.input.size() == 7 && rec.iterations == 5) got.insert(rec.input.str());
  }
  const std::set<std::string> want{"1121122", "1122122", "1221121", "2112122",
                                   "2121121", "2221121", "1121220", "2122120"};
  o.require(got == want, "set differs");
  if (o.pass) o.detail = "exact set of 8";
  return o;
}

Outcome counting_consistency() {
  Outcome o;
  for (unsigned n = 2; n <= 16; ++n) {
    const auto all = enumerate_essential_ancient(n);
    std::size_t no_zero = 0;
    for (const auto& s : all) no_zero += s.back() != 0;
    const BigInt fc = f_closed(n), fr = f_recursive(n);
    o.require(fc == fr, "f_closed != f_recursive at " + std::to_string(n));
    o.require(fr == BigInt(no_zero), "enumeration count differs at " + std::to_string(n));
    o.require(BigInt(g_verification.table.row_total(n)) == f_recursive(n - 1) + fr,
              "row total differs at " + std::to_string(n));
    o.require(fr == BigInt(oracle::count_12_strings(n)), "brute count differs at " + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 2..16 exact";
  return o;
}

Outcome chart_oracle() {
  Outcome o;
  const auto derived = derive_decay_chart();
  const auto& chart = decay_chart();
  o.require(derived.size() == 24 && derived == chart, "derived chart differs");
  using P = ParticleId;
  o.require(chart[index_of(P::C)].products == std::vector<P>{P::D, P::B}, "C");
  o.require(chart[index_of(P::Wb)].products == std::vector<P>{P::H, P::Zb}, "Wb");
  o.require(chart[index_of(P::St)].products == std::vector<P>{P::E, P::Sb}, "St");
  if (o.pass) o.detail = "24 of 24 rules match";
  return o;
}

Outcome spectral() {
  Outcome o;
  const IntMatrix m = fermion_matrix().entries;
  o.require(build_matrix(fermion_rules(decay_chart())).entries == m, "matrix differs from chart");
  const double lambda = dominant_eigenvalue(m);
  o.require(std::abs(lambda - 1.324717957) < 1e-8, "lambda " + io::fixed(lambda, 12));
  o.require(std::abs(lambda * lambda * lambda - lambda - 1) < 1e-8, "residual");
  const auto div = divide_monic(characteristic_polynomial(m), {-1, -1, 0, 1});
  o.require(div.remainder.empty(), "charpoly not divisible by x^3-x-1");
  const auto p = primitivity_power(m);
  o.require(p.has_value() && *p <= 14, "no positive power <= 14");
  o.require(matrix_power(m, 14).all_positive(), "power 14 not positive");
  if (o.pass) {
    o.detail = "lambda=" + io::fixed(lambda, 9) + ", exact division, first positive power " +
               std::to_string(*p);
  }
  return o;
}

Outcome frequencies() {
  Outcome o;
  const auto f = limiting_frequencies(fermion_matrix().entries);
  // Matrix order E M D B U S T C.
  const double want[8] = {0.1850, 0.1397, 0.1397, 0.1397, 0.1054, 0.1054, 0.1054, 0.0796};
  double sum = 0, worst = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    worst = std::max(worst, std::abs(f[i] - want[i]));
    sum += f[i];
  }
  o.require(worst <= 1e-4, "max deviation " + io::fixed(worst, 6));
  double tier = 0;
  for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}) {
    tier = std::max(tier, std::abs(f[static_cast<std::size_t>(a)] - f[static_cast<std::size_t>(b)]));
  }
  o.require(tier < 1e-9, "tier spread " + std::to_string(tier));
  o.require(std::abs(sum - 1) < 1e-12, "sum " + std::to_string(sum));
  if (o.pass) {
    std::ostringstream d;
    d << "max deviation " << io::fixed(worst, 6) << ", tier spread " << tier;
    o.detail = d.str();
  }
  return o;
}

Outcome growth() {
  Outcome o;
  struct Case {
    int base;
    std::size_t iters;
    double want, tol;
  };
  std::ostringstream d;
  for (const Case& c : {Case{3, 60, 1.3247, 0.005}, Case{2, 50, 1.4655, 0.005}, Case{10, 60, 1.3036, 0.01}}) {
    const auto t0 = Clock::now();
    const auto g = empirical_growth(DigitString::parse("1", c.base), c.iters);
    const double elapsed = seconds_since(t0);
    o.require(std::abs(g.estimate - c.want) <= c.tol,
              "base " + std::to_string(c.base) + " estimate " + io::fixed(g.estimate, 6));
    o.require(elapsed < 30, "base " + std::to_string(c.base) + " took " + io::fixed(elapsed, 1) + " s");
    d << (d.tellp() > 0 ? ", " : "") << "base " << c.base << " " << io::fixed(g.estimate, 5) << " ("
      << io::fixed(elapsed, 1) << " s)";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome fixed_points() {
  Outcome o;
  std::vector<std::string> b3, b2;
  for (const auto& s : fixed_point_search(3, 16)) b3.push_back(s.str());
  for (const auto& s : fixed_point_search(2, 8)) b2.push_back(s.str());
  o.require(b3 == std::vector<std::string>{"11110", "11112", "22"}, "base 3 set differs");
  o.require(b2 == std::vector<std::string>{"111"}, "base 2 set differs");
  if (o.pass) o.detail = "{11110, 11112, 22} and {111}";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t violations = 0;

  // Homomorphism across every full split point, 20 iterations.
  for (int trial = 0; trial < 1000; ++trial) {
    const DigitString s = ds(oracle::random_ancient(rng, 16));
    DigitString whole = s;
    auto parts = decompose(s).segments;
    for (int n = 0; n < 20; ++n) {
      whole = look_and_say_step(whole);
      DigitString joined;
      for (auto& p : parts) joined = joined + (p = look_and_say_step(p));
      if (joined != whole) {
        ++violations;
        break;
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " homomorphism violations");

  // flf against observed leading digits on every ancient string up to length 10.
  std::size_t flf_bad = 0, flf_checked = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const auto& s : oracle::all_strings(len, 3)) {
      const DigitString d = ds(s);
      if (!is_ancient(d)) continue;
      ++flf_checked;
      flf_bad += is_flf(d) != oracle::flf(s, 50);
    }
  }
  o.require(flf_bad == 0, std::to_string(flf_bad) + " flf violations");

  // Run-length contraction on strings with runs up to 10^6.
  std::size_t run_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rr = oracle::random_runs(rng, 1 + static_cast<std::size_t>(trial % 20), 1'000'000);
    std::vector<Run> runs;
    std::uint64_t m = 0;
    for (auto [d, n] : rr.runs) {
      runs.push_back({static_cast<Digit>(d), n});
      m = std::max(m, n);
    }
    const DigitString first = look_and_say_step(runs, 3);
    if (m > 7 && static_cast<double>(max_run_length(first)) >
                     3 + 2 * std::log(static_cast<double>(m)) / std::log(3.0)) {
      ++run_bad;
    }
    DigitString cur = nth_iterate(first, 2);
    if (max_run_length(cur) > 7) ++run_bad;
    // From runs <= 7, the second iterate and the next 20 are run bounded.
    cur = nth_iterate(cur, 2);
    for (int n = 0; n <= 20; ++n, cur = look_and_say_step(cur)) {
      if (!is_run_bounded(cur)) {
        ++run_bad;
        break;
      }
    }
  }
  o.require(run_bad == 0, std::to_string(run_bad) + " run-bound violations");

  std::size_t sat_bad = 0;
  for (std::size_t i = 0; i < kFermionCount; ++i) {
    ParticleMultiset ms;
    ms.add(static_cast<ParticleId>(i));
    const auto e = evolve(ms, 14);
    for (std::size_t j = 0; j < kFermionCount; ++j) sat_bad += e.count(static_cast<ParticleId>(j)) == 0;
  }
  o.require(sat_bad == 0, std::to_string(sat_bad) + " missing fermions after 14 steps");
  if (o.pass) {
    o.detail = "0 violations (1000 homomorphism, " + std::to_string(flf_checked) +
               " flf, 1000 run-bound, 8 saturation)";
  }
  return o;
}

Outcome k_values() {
  Outcome o;
  const auto ne = k_value(ds("22"));
  o.require(ne.k() == 1u, "k(22)");
  const auto e = k_value(ds("10"));
  o.require(e.k() == 8u && e.limsup == ParticleSet::of_class(ParticleClass::fermion), "k(10)");
  const auto nu = k_value(ds("1111011112"));
  o.require(nu.k() == 2u && nu.limsup == (ParticleSet{ParticleId::Nm, ParticleId::Nt}), "k(1111011112)");
  std::string seed;
  for (const char* sym : {"Nm", "Nt", "E", "Ph", "Ne", "E", "Gl", "Ne", "E", "Wb", "Ne", "E", "Zb"}) {
    seed += particle(*lookup(sym)).digits;
  }
  const auto all = k_value(ds(seed));
  o.require(all.limsup == ParticleSet::all(), "24-particle seed reached " +
                                                  std::to_string(all.limsup.size()));
  if (o.pass) o.detail = "k = 1, 8, 2; limsup of all 24";
  return o;
}

Outcome intro_iterations() {
  Outcome o;
  CountDescriptor d = CountDescriptor::describe("121355");
  std::size_t step = 1;
  while (step < 3 && counting_step(d) != d) {
    d = counting_step(d);
    ++step;
  }
  o.require(d.render() == "31123315" && counting_step(d) == d,
            "counting reached " + d.render() + " at step " + std::to_string(step));

  std::vector<FrequencyVector> t{{0, 2, 1, 1, 0, 2}};
  while (t.size() < 8) t.push_back(selfdesc_step(t.back()));
  o.require(t[6] == FrequencyVector{3, 1, 1, 1, 0, 0}, "T7 differs");
  o.require(t[7] == FrequencyVector{2, 3, 0, 1, 0, 0}, "T8 differs");
  o.require(selfdesc_step(t[7]) == t[6], "T7/T8 not a 2-cycle");
  if (o.pass) o.detail = "31123315 at step 3; T7/T8 period 2";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"decay table reproduction", table_reproduction},
      {"every essential ancient string decays within 10 iterations", all_strings_decay},
      {"eight length-7 strings taking 5 iterations", eight_strings},
      {"counting consistency", counting_consistency},
      {"decay chart oracle", chart_oracle},
      {"spectral constants", spectral},
      {"limiting frequencies", frequencies},
      {"empirical growth", growth},
      {"fixed points", fixed_points},
      {"property suites", property_suites},
      {"k values", k_values},
      {"counting and self-descriptive iterations", intro_iterations},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
