#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "looksay/cosmology.hpp"
#include "looksay/growth.hpp"
#include "looksay/particles.hpp"
#include "looksay/spectral.hpp"
#include "looksay/splitter.hpp"

namespace looksay::io {

/// Header plus 16 rows:
/// length,iter0,...,iter10,total
std::string decay_table_csv(const DecayTable& table);
nlohmann::json decay_table_json(const DecayTable& table);
nlohmann::json verification_json(const VerificationResult& result);

/// [{symbol, digits, class, products: [...]}, ...] in registry order.
nlohmann::json registry_json();

nlohmann::json decomposition_json(const DigitString& input, const Decomposition& dec);

/// particle,frequency rows in matrix order, 6 decimals.
std::string frequencies_csv(std::span<const double> frequencies);

/// coeff_degree,coeff_value rows, ascending degree.
std::string charpoly_csv(const IntPolynomial& p);

/// re,im rows, 9 decimals.
std::string eigenvalues_csv(std::span<const std::complex<double>> values);

/// iteration,length,ratio rows.
std::string growth_csv(const GrowthEstimate& g);

/// Fixed-point rendering used for every floating value the tools print.
std::string fixed(double v, int decimals);

}  // namespace looksay::io
