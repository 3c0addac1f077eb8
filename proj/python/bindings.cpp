#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "looksay/io.hpp"
#include "looksay/looksay.hpp"

namespace py = pybind11;
using namespace looksay;

namespace {

py::int_ to_py(const BigInt& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

SplitMode parse_mode(const std::string& mode) {
  if (mode == "full") return SplitMode::full;
  if (mode == "conservative") return SplitMode::conservative;
  throw InvalidInput("mode must be 'full' or 'conservative', got '" + mode + "'");
}

ParticleId parse_symbol(const std::string& symbol) {
  if (auto id = lookup(symbol)) return *id;
  throw InvalidInput("unknown particle '" + symbol + "'");
}

py::dict multiset_to_dict(const ParticleMultiset& ms) {
  py::dict out;
  for (ParticleId id : ms.support().members()) out[py::str(std::string(particle(id).symbol))] = to_py(ms.count(id));
  return out;
}

ParticleMultiset dict_to_multiset(const std::map<std::string, py::int_>& counts) {
  ParticleMultiset ms;
  for (const auto& [symbol, n] : counts) {
    const std::string text = py::str(n);
    if (text.starts_with('-')) throw InvalidInput("particle counts must be nonnegative");
    ms.add(parse_symbol(symbol), BigInt(text));
  }
  return ms;
}

std::vector<std::string> set_symbols(const ParticleSet& s) {
  std::vector<std::string> out;
  for (ParticleId id : s.members()) out.emplace_back(particle(id).symbol);
  return out;
}

std::vector<std::vector<std::int64_t>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

std::vector<std::string> strings_of(const std::vector<DigitString>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

py::dict growth_dict(const GrowthEstimate& g) {
  py::dict d;
  d["seed"] = g.seed;
  d["base"] = g.base == 0 ? py::object(py::none()) : py::object(py::int_(g.base));
  d["lengths"] = g.lengths;
  d["ratios"] = g.ratios;
  d["estimate"] = g.estimate;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Look-and-say sequences in small bases";

  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("step", [](const std::string& s, int base, std::size_t n) {
        return nth_iterate(DigitString::parse(s, base), n).str();
      }, py::arg("s"), py::arg("base") = 3, py::arg("n") = 1);
  m.def("iterate", [](const std::string& s, std::size_t n, int base) {
        return strings_of(iterate(DigitString::parse(s, base), n).iterates);
      }, py::arg("s"), py::arg("n"), py::arg("base") = 3,
      "The string followed by its first n iterates.");
  m.def("token_step", [](const std::vector<Token>& tokens) {
        const TokenString t = token_step(TokenString(tokens));
        return std::vector<Token>(t.tokens().begin(), t.tokens().end());
      },
        py::arg("tokens"));

  m.def("is_run_bounded", [](const std::string& s) { return is_run_bounded(DigitString::parse(s)); });
  m.def("is_ancient", [](const std::string& s) { return is_ancient(DigitString::parse(s)); });
  m.def("is_flf", [](const std::string& s) { return is_flf(DigitString::parse(s)); });
  m.def("split_points", [](const std::string& s, const std::string& mode) {
        const auto d = DigitString::parse(s);
        return parse_mode(mode) == SplitMode::full ? split_points(d) : split_points_conservative(d);
      }, py::arg("s"), py::arg("mode") = "full");
  m.def("decompose", [](const std::string& s, const std::string& mode) {
        const Decomposition dec = decompose(DigitString::parse(s), parse_mode(mode));
        std::vector<std::pair<std::string, std::optional<std::string>>> out;
        for (std::size_t i = 0; i < dec.segments.size(); ++i) {
          std::optional<std::string> sym;
          if (dec.identified[i]) sym = std::string(particle(*dec.identified[i]).symbol);
          out.emplace_back(dec.segments[i].str(), sym);
        }
        return out;
      }, py::arg("s"), py::arg("mode") = "full",
      "List of (segment, particle symbol or None).");

  m.def("particles", [] {
        std::vector<py::dict> out;
        for (const auto& p : registry()) {
          py::dict d;
          d["symbol"] = std::string(p.symbol);
          d["digits"] = std::string(p.digits);
          d["class"] = std::string(class_name(p.kind));
          d["name"] = std::string(p.name);
          out.push_back(d);
        }
        return out;
      });
  m.def("identify", [](const std::string& s) -> std::optional<std::string> {
        if (auto id = identify(DigitString::parse(s))) return std::string(particle(*id).symbol);
        return std::nullopt;
      });
  m.def("decay_chart", [](bool derive) {
        std::map<std::string, std::vector<std::string>> out;
        const auto chart = derive ? derive_decay_chart() : decay_chart();
        for (const auto& rule : chart) {
          auto& products = out[std::string(particle(rule.parent).symbol)];
          for (ParticleId id : rule.products) products.emplace_back(particle(id).symbol);
        }
        return out;
      }, py::arg("derive") = false);
  m.def("evolve", [](const std::map<std::string, py::int_>& counts, std::size_t n) {
        return multiset_to_dict(evolve(dict_to_multiset(counts), n));
      }, py::arg("counts"), py::arg("n"));
  m.def("limit_sets", [](const std::map<std::string, py::int_>& counts, std::size_t warmup, std::size_t window) {
        const LimitSets s = limit_sets(dict_to_multiset(counts), warmup, window);
        return std::make_pair(set_symbols(s.limsup), set_symbols(s.liminf));
      }, py::arg("counts"), py::arg("warmup") = kDefaultWarmup, py::arg("window") = kDefaultWindow);

  m.def("enumerate_essential_ancient", [](std::size_t length) {
        return strings_of(enumerate_essential_ancient(length));
      });
  m.def("f_closed", [](unsigned n) { return to_py(f_closed(n)); });
  m.def("f_recursive", [](unsigned n) { return to_py(f_recursive(n)); });
  m.def("iterations_to_common", [](const std::string& s, int cap) {
        return iterations_to_common(DigitString::parse(s), cap);
      }, py::arg("s"), py::arg("cap") = kCosmologicalCap);
  m.def("verify", [](unsigned jobs, int cap) {
        VerifyOptions opts;
        opts.jobs = jobs;
        opts.cap = cap;
        VerificationResult r;
        {
          py::gil_scoped_release release;
          r = verify_cosmological(opts);
        }
        std::vector<std::vector<std::uint64_t>> table;
        for (std::size_t len = 1; len <= DecayTable::kRows; ++len) {
          const auto& row = r.table.row(len);
          table.emplace_back(row.begin(), row.end());
        }
        py::dict d;
        d["verified"] = r.verified;
        d["max_iterations"] = r.max_iterations;
        d["strings"] = r.strings_checked;
        d["table"] = table;
        d["counterexamples"] = strings_of(r.counterexamples);
        d["csv"] = io::decay_table_csv(r.table);
        return d;
      }, py::arg("jobs") = 1, py::arg("cap") = kCosmologicalCap);
  m.def("k_value", [](const std::string& s, int max_iter, std::size_t window, std::size_t warmup) {
        const KValueReport r = k_value(DigitString::parse(s), max_iter, window, warmup);
        py::dict d;
        d["converged"] = r.converged;
        d["iterations_to_common"] = r.converged ? py::object(py::int_(r.iterations_to_common)) : py::none();
        d["particles"] = multiset_to_dict(r.particles);
        d["limsup"] = set_symbols(r.limsup);
        d["liminf"] = set_symbols(r.liminf);
        d["stabilized"] = r.stabilized();
        d["k"] = r.k();
        return d;
      }, py::arg("s"), py::arg("max_iter") = kDefaultKMaxIter, py::arg("window") = kDefaultWindow,
      py::arg("warmup") = kDefaultWarmup);

  m.def("transition_matrix", [] { return rows_of(fermion_matrix().entries); },
        "Fermion transition matrix, rows and columns in the order E M D B U S T C.");
  m.def("fermion_order", [] {
        std::vector<std::string> out;
        for (ParticleId id : kFermionMatrixOrder) out.emplace_back(particle(id).symbol);
        return out;
      });
  m.def("dominant_eigenvalue", [](double tol) { return dominant_eigenvalue(fermion_matrix().entries, tol); },
        py::arg("tol") = kDefaultEigenTolerance);
  m.def("characteristic_polynomial", [] { return characteristic_polynomial(fermion_matrix().entries); },
        "Ascending integer coefficients of det(xI - M).");
  m.def("primitivity_power", [] { return primitivity_power(fermion_matrix().entries); });
  m.def("eigenvalues", [] { return transition_eigenvalues(fermion_matrix().entries); });
  m.def("limiting_frequencies", [](unsigned power) {
        const auto f = limiting_frequencies(fermion_matrix().entries, power);
        std::map<std::string, double> out;
        for (std::size_t i = 0; i < f.size(); ++i) out[std::string(particle(kFermionMatrixOrder[i]).symbol)] = f[i];
        return out;
      }, py::arg("power") = kDefaultFrequencyPower);

  m.def("empirical_growth", [](const std::string& seed, int base, std::size_t iters, bool tokens) {
        GrowthEstimate g;
        {
          py::gil_scoped_release release;
          g = tokens ? empirical_growth(TokenString::parse(seed), iters)
                     : empirical_growth(DigitString::parse(seed, base), iters);
        }
        return growth_dict(g);
      }, py::arg("seed") = "1", py::arg("base") = 3, py::arg("iters") = 60, py::arg("tokens") = false);
  m.def("fixed_points", [](int base, std::size_t max_len, bool all) {
        return strings_of(fixed_point_search(base, max_len, all ? FixedPointFilter::all : FixedPointFilter::irreducible));
      }, py::arg("base") = 3, py::arg("max_len") = 16, py::arg("all") = false);

  m.def("counting_step", [](const std::string& text) { return CountDescriptor::describe(text).render(); },
        "Tally the decimal digits of text as count-digit pairs in ascending digit order.");
  m.def("selfdesc_step", [](const FrequencyVector& v) { return selfdesc_step(v); });
}
