#include "looksay/io.hpp"

#include <cstdio>
#include <sstream>

namespace looksay::io {

std::string fixed(double v, int decimals) {
  // Avoid printing "-0.000000".
  if (v == 0) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string decay_table_csv(const DecayTable& table) {
  std::ostringstream out;
  out << "length";
  for (std::size_t k = 0; k < DecayTable::kColumns; ++k) out << ",iter" << k;
  out << ",total\n";
  for (std::size_t len = 1; len <= DecayTable::kRows; ++len) {
    out << len;
    for (auto v : table.row(len)) out << ',' << v;
    out << ',' << table.row_total(len) << '\n';
  }
  return out.str();
}

nlohmann::json decay_table_json(const DecayTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t len = 1; len <= DecayTable::kRows; ++len) {
    const auto& r = table.row(len);
    rows.push_back({{"length", len},
                    {"iterations", std::vector<std::uint64_t>(r.begin(), r.end())},
                    {"total", table.row_total(len)}});
  }
  return rows;
}

nlohmann::json verification_json(const VerificationResult& result) {
  std::vector<std::string> failures;
  for (const auto& s : result.counterexamples) failures.push_back(s.str());
  return {{"verified", result.verified},
          {"max_iterations", result.max_iterations},
          {"strings", result.strings_checked},
          {"table", decay_table_json(result.table)},
          {"counterexamples", failures}};
}

nlohmann::json registry_json() {
  nlohmann::json out = nlohmann::json::array();
  const auto& chart = decay_chart();
  for (const auto& p : registry()) {
    std::vector<std::string> products;
    for (ParticleId id : chart[index_of(p.id)].products) {
      products.emplace_back(particle(id).symbol);
    }
    out.push_back({{"symbol", p.symbol},
                   {"digits", p.digits},
                   {"class", class_name(p.kind)},
                   {"name", p.name},
                   {"products", products}});
  }
  return out;
}

nlohmann::json decomposition_json(const DigitString& input, const Decomposition& dec) {
  nlohmann::json segments = nlohmann::json::array();
  nlohmann::json particles = nlohmann::json::array();
  for (std::size_t i = 0; i < dec.segments.size(); ++i) {
    segments.push_back(dec.segments[i].str());
    if (dec.identified[i]) {
      particles.push_back(particle(*dec.identified[i]).symbol);
    } else {
      particles.push_back(nullptr);
    }
  }
  return {{"input", input.str()},
          {"segments", segments},
          {"particles", particles},
          {"fully_common", dec.fully_common()}};
}

std::string frequencies_csv(std::span<const double> frequencies) {
  std::ostringstream out;
  out << "particle,frequency\n";
  for (std::size_t i = 0; i < frequencies.size() && i < kFermionMatrixOrder.size(); ++i) {
    out << particle(kFermionMatrixOrder[i]).symbol << ',' << fixed(frequencies[i], 6) << '\n';
  }
  return out.str();
}

std::string charpoly_csv(const IntPolynomial& p) {
  std::ostringstream out;
  out << "coeff_degree,coeff_value\n";
  for (std::size_t k = 0; k < p.size(); ++k) out << k << ',' << p[k] << '\n';
  return out.str();
}

std::string eigenvalues_csv(std::span<const std::complex<double>> values) {
  std::ostringstream out;
  out << "re,im\n";
  for (const auto& v : values) out << fixed(v.real(), 9) << ',' << fixed(v.imag(), 9) << '\n';
  return out.str();
}

std::string growth_csv(const GrowthEstimate& g) {
  std::ostringstream out;
  out << "iteration,length,ratio\n";
  for (std::size_t i = 0; i < g.lengths.size(); ++i) {
    out << i << ',' << g.lengths[i] << ',';
    if (i > 0) out << fixed(g.ratios[i - 1], 9);
    out << '\n';
  }
  return out.str();
}

}  // namespace looksay::io
