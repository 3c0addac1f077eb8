#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "looksay/particles.hpp"

namespace looksay {

/// Dense square matrix of 64-bit integers. Products are overflow checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] std::int64_t trace() const;
  [[nodiscard]] bool all_positive() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix matrix_power(const IntMatrix& m, unsigned p);

/// Fermion transition matrix: entry (i, j) counts copies of fermion i made
/// by one decay of fermion j, rows and columns in kFermionMatrixOrder.
struct TransitionMatrix {
  IntMatrix entries{kFermionCount};
  std::array<ParticleId, kFermionCount> order = kFermionMatrixOrder;

  [[nodiscard]] std::int64_t at(ParticleId row, ParticleId col) const;
};

/// The 8x8 fermion matrix written out entry by entry, independent of the chart.
TransitionMatrix fermion_matrix();

/// Tallies a fermion-only chart (possibly partial) into a matrix. Throws
/// ContractError on any non-fermion parent or product.
TransitionMatrix build_matrix(std::span<const DecayRule> chart);

/// The fermion rows of a full chart.
std::vector<DecayRule> fermion_rules(std::span<const DecayRule> chart);

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr std::size_t kDefaultEigenIterations = 200'000;

/// Power iteration with per-step normalisation. Stops once successive
/// Rayleigh quotients stay within tol for several consecutive steps; the
/// streak guards against a lucky near-zero difference while a complex
/// subdominant pair is still rotating. Throws ConvergenceError past
/// max_iter.
double dominant_eigenvalue(const IntMatrix& m, double tol = kDefaultEigenTolerance,
                           std::size_t max_iter = kDefaultEigenIterations);

/// Integer polynomial, coefficient k multiplies x^k.
using IntPolynomial = std::vector<std::int64_t>;

/// det(xI - m) by the division-free Samuelson-Berkowitz recurrence.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;  ///< trimmed; empty means zero
};

/// Exact division by a monic integer polynomial.
PolyDivision divide_monic(const IntPolynomial& num, const IntPolynomial& den);

/// Evaluates p at x (Horner).
double evaluate(const IntPolynomial& p, double x);

/// Smallest p <= bound with m^p entrywise positive. bound 0 selects the
/// Wielandt bound (n-1)^2 + 1, beyond which no power can become positive.
std::optional<unsigned> primitivity_power(const IntMatrix& m, unsigned bound = 0);

inline constexpr unsigned kDefaultFrequencyPower = 256;

/// Row totals of m^power over the grand total, renormalising after every
/// multiplication to stay in floating point range.
std::vector<double> limiting_frequencies(const IntMatrix& m,
                                         unsigned power = kDefaultFrequencyPower);

/// Roots of p as eigenvalues of its companion matrix. Factors of x are
/// peeled off first and reported as exact zeros.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

/// Eigenvalues of the transition matrix: characteristic polynomial split
/// into x^3 - x - 1 and its cofactor, roots of each factor. Sorted by
/// descending modulus, then by real and imaginary part.
std::vector<std::complex<double>> transition_eigenvalues(const IntMatrix& m);

}  // namespace looksay
