#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "looksay/io.hpp"
#include "looksay/looksay.hpp"

using namespace looksay;
using nlohmann::json;

namespace {

enum class Format { text, csv, json };

void add_format(CLI::App* cmd, Format& fmt) {
  const std::map<std::string, Format> names{
      {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  cmd->add_option("--format", fmt, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> symbols(const ParticleSet& s) {
  std::vector<std::string> out;
  for (ParticleId id : s.members()) out.emplace_back(particle(id).symbol);
  return out;
}

std::string to_string(const BigInt& n) { return n.str(); }

struct StepArgs {
  std::string input;
  int base = 3;
  std::size_t n = 1;
  bool tokens = false;
  Format fmt = Format::text;
};

int run_step(const StepArgs& a) {
  std::vector<std::string> rows;
  if (a.tokens) {
    TokenString t = TokenString::parse(a.input);
    rows.push_back(t.str());
    for (std::size_t i = 0; i < a.n; ++i) rows.push_back((t = token_step(t)).str());
  } else {
    for (const auto& s : iterate(DigitString::parse(a.input, a.base), a.n).iterates) {
      rows.push_back(s.str());
    }
  }
  switch (a.fmt) {
    case Format::text:
      for (const auto& r : rows) std::cout << r << '\n';
      break;
    case Format::csv:
      std::cout << "iteration,value\n";
      for (std::size_t i = 0; i < rows.size(); ++i) std::cout << i << ',' << (a.tokens ? "\"" + rows[i] + "\"" : rows[i]) << '\n';
      break;
    case Format::json:
      std::cout << json(rows).dump(2) << '\n';
      break;
  }
  return 0;
}

struct DecomposeArgs {
  std::string input;
  SplitMode mode = SplitMode::full;
  Format fmt = Format::text;
};

int run_decompose(const DecomposeArgs& a) {
  const DigitString s = DigitString::parse(a.input);
  const Decomposition dec = decompose(s, a.mode);
  switch (a.fmt) {
    case Format::text:
      std::cout << dec.dotted() << " = " << dec.symbols() << '\n';
      break;
    case Format::csv:
      std::cout << "segment,particle\n";
      for (std::size_t i = 0; i < dec.segments.size(); ++i) {
        std::cout << dec.segments[i].str() << ','
                  << (dec.identified[i] ? particle(*dec.identified[i]).symbol : "") << '\n';
      }
      break;
    case Format::json:
      std::cout << io::decomposition_json(s, dec).dump(2) << '\n';
      break;
  }
  return 0;
}

struct VerifyArgs {
  std::string out;
  unsigned jobs = 1;
  bool progress = false;
  Format fmt = Format::text;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.jobs = a.jobs;
  if (a.progress || isatty(STDERR_FILENO)) {
    opts.progress = [last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
      const std::size_t pct = done * 100 / total;
      if (pct != last || done == total) {
        std::cerr << "\rverifying " << done << "/" << total << " (" << pct << "%)" << std::flush;
        last = pct;
      }
      if (done == total) std::cerr << '\n';
    };
  }
  const VerificationResult r = verify_cosmological(opts);
  const std::string csv = io::decay_table_csv(r.table);

  if (!a.out.empty()) {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw InvalidInput("cannot write " + a.out);
    file << csv;
  }
  switch (a.fmt) {
    case Format::json:
      std::cout << io::verification_json(r).dump(2) << '\n';
      break;
    case Format::csv:
      if (a.out.empty()) std::cout << csv;
      break;
    case Format::text:
      if (a.out.empty()) std::cout << csv;
      for (const auto& s : r.counterexamples) std::cout << "FAIL " << s.str() << " exceeded cap\n";
      if (r.verified) {
        std::cout << "VERIFIED max_iterations=" << r.max_iterations
                  << " strings=" << r.strings_checked << '\n';
      }
      break;
  }
  if (a.fmt == Format::csv) {
    for (const auto& s : r.counterexamples) std::cerr << "FAIL " << s.str() << " exceeded cap\n";
  }
  return r.verified ? 0 : 1;
}

struct GrowthArgs {
  std::string seed = "1";
  int base = 3;
  std::size_t iters = 60;
  bool tokens = false;
  Format fmt = Format::text;
};

int run_growth(const GrowthArgs& a) {
  const GrowthEstimate g = a.tokens ? empirical_growth(TokenString::parse(a.seed), a.iters)
                                    : empirical_growth(DigitString::parse(a.seed, a.base), a.iters);
  switch (a.fmt) {
    case Format::text:
      std::cout << "seed " << g.seed << '\n'
                << "base " << (g.base == 0 ? std::string("tokens") : std::to_string(g.base)) << '\n'
                << "iterations " << a.iters << '\n'
                << "final_length " << g.lengths.back() << '\n'
                << "estimate " << io::fixed(g.estimate, 9) << '\n';
      break;
    case Format::csv:
      std::cout << io::growth_csv(g);
      break;
    case Format::json: {
      json j{{"seed", g.seed},
             {"base", g.base == 0 ? json("tokens") : json(g.base)},
             {"iterations", a.iters},
             {"lengths", g.lengths},
             {"ratios", g.ratios},
             {"estimate", g.estimate}};
      std::cout << j.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

struct FrequencyArgs {
  unsigned power = kDefaultFrequencyPower;
  Format fmt = Format::text;
};

int run_frequencies(const FrequencyArgs& a) {
  const auto f = limiting_frequencies(fermion_matrix().entries, a.power);
  switch (a.fmt) {
    case Format::text:
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::cout << particle(kFermionMatrixOrder[i]).symbol << ' ' << io::fixed(f[i], 6) << ' '
                  << io::fixed(100 * f[i], 2) << "%\n";
      }
      break;
    case Format::csv:
      std::cout << io::frequencies_csv(f);
      break;
    case Format::json: {
      json j = json::object();
      for (std::size_t i = 0; i < f.size(); ++i) {
        j[std::string(particle(kFermionMatrixOrder[i]).symbol)] = f[i];
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

struct SpectrumArgs {
  bool charpoly = false;
  Format fmt = Format::text;
};

int run_spectrum(const SpectrumArgs& a) {
  const IntMatrix m = fermion_matrix().entries;
  const double lambda = dominant_eigenvalue(m);
  const IntPolynomial p = characteristic_polynomial(m);
  const PolyDivision div = divide_monic(p, {-1, -1, 0, 1});
  const auto prim = primitivity_power(m);
  const auto ev = transition_eigenvalues(m);
  switch (a.fmt) {
    case Format::text: {
      std::cout << "lambda " << io::fixed(lambda, 9) << '\n';
      std::vector<std::string> coeffs;
      for (auto c : p) coeffs.push_back(std::to_string(c));
      std::cout << "charpoly " << join(coeffs, " ") << '\n';
      std::cout << "divisible_by_x3-x-1 " << (div.remainder.empty() ? "yes" : "no") << '\n';
      std::cout << "positive_power " << (prim ? std::to_string(*prim) : "none") << '\n';
      for (const auto& z : ev) {
        std::cout << "eigenvalue " << io::fixed(z.real(), 9) << ' ' << io::fixed(z.imag(), 9) << '\n';
      }
      break;
    }
    case Format::csv:
      std::cout << (a.charpoly ? io::charpoly_csv(p) : io::eigenvalues_csv(ev));
      break;
    case Format::json: {
      json eig = json::array();
      for (const auto& z : ev) eig.push_back({z.real(), z.imag()});
      json j{{"lambda", lambda},
             {"charpoly", p},
             {"divisible", div.remainder.empty()},
             {"positive_power", prim ? json(*prim) : json(nullptr)},
             {"eigenvalues", eig}};
      std::cout << j.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

struct AncientArgs {
  std::size_t length = 1;
  bool count_only = false;
  Format fmt = Format::text;
};

int run_ancients(const AncientArgs& a) {
  const auto all = enumerate_essential_ancient(a.length);
  if (a.count_only) {
    if (a.fmt == Format::json) {
      std::cout << json{{"length", a.length}, {"count", all.size()}}.dump(2) << '\n';
    } else if (a.fmt == Format::csv) {
      std::cout << "length,count\n" << a.length << ',' << all.size() << '\n';
    } else {
      std::cout << all.size() << '\n';
    }
    return 0;
  }
  std::vector<std::string> rows;
  for (const auto& s : all) rows.push_back(s.str());
  if (a.fmt == Format::json) {
    std::cout << json(rows).dump(2) << '\n';
    return 0;
  }
  if (a.fmt == Format::csv) std::cout << "string\n";
  for (const auto& r : rows) std::cout << r << '\n';
  return 0;
}

struct KValueArgs {
  std::string seed;
  int iters = kDefaultKMaxIter;
  std::size_t window = kDefaultWindow;
  std::size_t warmup = kDefaultWarmup;
  Format fmt = Format::text;
};

int run_kvalue(const KValueArgs& a) {
  const KValueReport r = k_value(DigitString::parse(a.seed), a.iters, a.window, a.warmup);
  switch (a.fmt) {
    case Format::text:
      if (!r.converged) {
        std::cout << "not common after " << a.iters << " iterations\n";
        break;
      }
      std::cout << "iterations_to_common " << r.iterations_to_common << '\n';
      if (r.stabilized()) {
        std::cout << "k " << *r.k() << '\n';
      } else {
        std::cout << "k " << r.liminf.size() << ".." << r.limsup.size() << '\n';
      }
      std::cout << "limsup " << join(symbols(r.limsup), ",") << '\n';
      std::cout << "liminf " << join(symbols(r.liminf), ",") << '\n';
      break;
    case Format::csv:
      std::cout << "seed,converged,iterations_to_common,liminf_size,limsup_size,k\n"
                << r.seed.str() << ',' << (r.converged ? "true" : "false") << ','
                << r.iterations_to_common << ',' << r.liminf.size() << ',' << r.limsup.size()
                << ',' << (r.k() ? std::to_string(*r.k()) : "") << '\n';
      break;
    case Format::json: {
      json counts = json::object();
      for (ParticleId id : r.particles.support().members()) {
        counts[std::string(particle(id).symbol)] = to_string(r.particles.count(id));
      }
      json j{{"seed", r.seed.str()},
             {"converged", r.converged},
             {"iterations_to_common", r.iterations_to_common},
             {"particles", counts},
             {"limsup", symbols(r.limsup)},
             {"liminf", symbols(r.liminf)},
             {"stabilized", r.stabilized()},
             {"k", r.k() ? json(*r.k()) : json(nullptr)}};
      std::cout << j.dump(2) << '\n';
      break;
    }
  }
  return r.converged ? 0 : 1;
}

struct FixedPointArgs {
  int base = 3;
  std::size_t max_len = 16;
  bool all = false;
  Format fmt = Format::text;
};

int run_fixedpoints(const FixedPointArgs& a) {
  std::vector<std::string> rows;
  for (const auto& s : fixed_point_search(a.base, a.max_len,
                                          a.all ? FixedPointFilter::all : FixedPointFilter::irreducible)) {
    rows.push_back(s.str());
  }
  if (a.fmt == Format::json) {
    std::cout << json(rows).dump(2) << '\n';
    return 0;
  }
  if (a.fmt == Format::csv) std::cout << "string\n";
  for (const auto& r : rows) std::cout << r << '\n';
  return 0;
}

int run_particles(Format fmt) {
  const auto& chart = decay_chart();
  switch (fmt) {
    case Format::text:
      for (const auto& p : registry()) {
        std::vector<std::string> products;
        for (ParticleId id : chart[index_of(p.id)].products) products.emplace_back(particle(id).symbol);
        std::cout << p.symbol << ' ' << p.digits << ' ' << class_name(p.kind) << " -> "
                  << join(products, ".") << '\n';
      }
      break;
    case Format::csv:
      std::cout << "symbol,digits,class,name,products\n";
      for (const auto& p : registry()) {
        std::vector<std::string> products;
        for (ParticleId id : chart[index_of(p.id)].products) products.emplace_back(particle(id).symbol);
        std::cout << p.symbol << ',' << p.digits << ',' << class_name(p.kind) << ',' << p.name << ','
                  << join(products, ".") << '\n';
      }
      break;
    case Format::json:
      std::cout << io::registry_json().dump(2) << '\n';
      break;
  }
  return 0;
}

struct CountingArgs {
  std::string input;
  std::size_t n = 5;
  Format fmt = Format::text;
};

int run_counting(const CountingArgs& a) {
  std::vector<std::string> rows{a.input};
  CountDescriptor d = CountDescriptor::describe(a.input);
  for (std::size_t i = 1; i <= a.n; ++i) {
    rows.push_back(d.render());
    d = counting_step(d);
  }
  if (a.fmt == Format::json) {
    std::cout << json(rows).dump(2) << '\n';
    return 0;
  }
  if (a.fmt == Format::csv) std::cout << "step,value\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (a.fmt == Format::csv) std::cout << i << ',';
    std::cout << rows[i] << '\n';
  }
  return 0;
}

FrequencyVector parse_vector(const std::string& text) {
  FrequencyVector v;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("expected comma-separated counts, got '" + text + "'");
    }
    v.push_back(std::stoull(item));
  }
  if (v.empty()) throw InvalidInput("empty count vector");
  return v;
}

struct SelfDescArgs {
  std::string input;
  std::size_t n = 8;
  Format fmt = Format::text;
};

int run_selfdesc(const SelfDescArgs& a) {
  std::vector<FrequencyVector> rows{parse_vector(a.input)};
  for (std::size_t i = 0; i < a.n; ++i) rows.push_back(selfdesc_step(rows.back()));
  if (a.fmt == Format::json) {
    std::cout << json(rows).dump() << '\n';
    return 0;
  }
  if (a.fmt == Format::csv) std::cout << "step,vector\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> parts;
    for (auto v : rows[i]) parts.push_back(std::to_string(v));
    if (a.fmt == Format::csv) {
      std::cout << i + 1 << ",\"" << join(parts, ",") << "\"\n";
    } else {
      std::cout << "T" << i + 1 << " [" << join(parts, ",") << "]\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Look-and-say sequences in small bases: particles, decay and growth"};
  app.require_subcommand(1);
  app.fallthrough(false);

  StepArgs step;
  auto* c_step = app.add_subcommand("step", "Print a string and its iterates");
  c_step->add_option("string", step.input, "Digit string, or comma-separated tokens with --tokens")
      ->required();
  c_step->add_option("--base", step.base, "Base 2..10")->capture_default_str();
  c_step->add_option("--n", step.n, "Number of steps")->capture_default_str();
  c_step->add_flag("--tokens", step.tokens, "Treat counts as atomic tokens");
  add_format(c_step, step.fmt);

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "Split a base-3 string into irreducible pieces");
  c_dec->add_option("string", dec.input)->required();
  c_dec->add_option("--mode", dec.mode, "full or conservative")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SplitMode>{{"full", SplitMode::full},
                                           {"conservative", SplitMode::conservative}}));
  add_format(c_dec, dec.fmt);

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Check that every essential ancient string decays");
  c_ver->add_option("--out", ver.out, "Write the decay table CSV here");
  c_ver->add_option("--jobs", ver.jobs, "Worker threads")
      ->envname("LOOKSAY_JOBS")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  c_ver->add_flag("--progress", ver.progress, "Report progress on stderr");
  add_format(c_ver, ver.fmt);

  GrowthArgs gro;
  auto* c_gro = app.add_subcommand("growth", "Estimate the length growth rate");
  c_gro->add_option("--seed", gro.seed)->capture_default_str();
  c_gro->add_option("--base", gro.base)->capture_default_str();
  c_gro->add_option("--iters", gro.iters)->capture_default_str();
  c_gro->add_flag("--tokens", gro.tokens, "Count in base infinity");
  add_format(c_gro, gro.fmt);

  FrequencyArgs freq;
  auto* c_freq = app.add_subcommand("frequencies", "Limiting fermion frequencies");
  c_freq->add_option("--power", freq.power)->check(CLI::PositiveNumber)->capture_default_str();
  add_format(c_freq, freq.fmt);

  SpectrumArgs spectrum;
  auto* c_spec = app.add_subcommand("spectrum", "Growth constant and eigenvalues of the fermion matrix");
  c_spec->add_flag("--charpoly", spectrum.charpoly, "With --format csv, emit the characteristic polynomial");
  add_format(c_spec, spectrum.fmt);

  AncientArgs anc;
  auto* c_anc = app.add_subcommand("ancients", "List essential ancient strings of one length");
  c_anc->add_option("--length", anc.length)->required();
  c_anc->add_flag("--count-only", anc.count_only);
  add_format(c_anc, anc.fmt);

  KValueArgs kv;
  auto* c_kv = app.add_subcommand("kvalue", "Particles that persist in the descendants of a string");
  c_kv->add_option("string", kv.seed)->required();
  c_kv->add_option("--iters", kv.iters)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_kv->add_option("--window", kv.window)->check(CLI::PositiveNumber)->capture_default_str();
  c_kv->add_option("--warmup", kv.warmup)->capture_default_str();
  add_format(c_kv, kv.fmt);

  FixedPointArgs fp;
  auto* c_fp = app.add_subcommand("fixedpoints", "Exhaustive search for strings fixed by one step");
  c_fp->add_option("--base", fp.base)->capture_default_str();
  c_fp->add_option("--max-len", fp.max_len)->capture_default_str();
  c_fp->add_flag("--all", fp.all, "Keep concatenations of smaller fixed strings");
  add_format(c_fp, fp.fmt);

  Format particles_fmt = Format::text;
  auto* c_part = app.add_subcommand("particles", "The 24 common strings and their decays");
  add_format(c_part, particles_fmt);

  CountingArgs cnt;
  auto* c_cnt = app.add_subcommand("counting", "Iterate the digit counting sequence");
  c_cnt->add_option("string", cnt.input)->required();
  c_cnt->add_option("--n", cnt.n)->capture_default_str();
  add_format(c_cnt, cnt.fmt);

  SelfDescArgs sd;
  auto* c_sd = app.add_subcommand("selfdesc", "Iterate the self-descriptive count vector");
  c_sd->add_option("vector", sd.input, "Comma-separated counts, e.g. 0,2,1,1,0,2")->required();
  c_sd->add_option("--n", sd.n)->capture_default_str();
  add_format(c_sd, sd.fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_step->parsed()) return run_step(step);
    if (c_dec->parsed()) return run_decompose(dec);
    if (c_ver->parsed()) return run_verify(ver);
    if (c_gro->parsed()) return run_growth(gro);
    if (c_freq->parsed()) return run_frequencies(freq);
    if (c_spec->parsed()) return run_spectrum(spectrum);
    if (c_anc->parsed()) return run_ancients(anc);
    if (c_kv->parsed()) return run_kvalue(kv);
    if (c_fp->parsed()) return run_fixedpoints(fp);
    if (c_part->parsed()) return run_particles(particles_fmt);
    if (c_cnt->parsed()) return run_counting(cnt);
    if (c_sd->parsed()) return run_selfdesc(sd);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
