#include "looksay/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "looksay/errors.hpp"

namespace looksay {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t position_in_order(ParticleId id) {
  for (std::size_t i = 0; i < kFermionMatrixOrder.size(); ++i) {
    if (kFermionMatrixOrder[i] == id) return i;
  }
  throw ContractError("particle " + std::string(particle(id).symbol) + " is not a fermion");
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size(), 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidInput("matrix must be square");
    std::size_t j = 0;
    for (std::int64_t v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

bool IntMatrix::all_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v > 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("matrix size mismatch");
  const std::size_t n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  }
  return c;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned p) {
  IntMatrix result = IntMatrix::identity(m.size());
  for (unsigned i = 0; i < p; ++i) result = result * m;
  return result;
}

std::int64_t TransitionMatrix::at(ParticleId row, ParticleId col) const {
  return entries(position_in_order(row), position_in_order(col));
}

TransitionMatrix fermion_matrix() {
  TransitionMatrix t;
  //             E  M  D  B  U  S  T  C
  t.entries = {{0, 1, 0, 0, 0, 0, 1, 0},   // E
               {1, 0, 0, 0, 0, 0, 0, 0},   // M
               {0, 0, 0, 0, 1, 0, 0, 1},   // D
               {0, 0, 0, 0, 0, 0, 1, 1},   // B
               {0, 1, 0, 0, 0, 0, 0, 0},   // U
               {0, 0, 1, 0, 0, 0, 0, 0},   // S
               {0, 0, 0, 1, 0, 0, 0, 0},   // T
               {0, 0, 0, 0, 0, 1, 0, 0}};  // C
  return t;
}

TransitionMatrix build_matrix(std::span<const DecayRule> chart) {
  TransitionMatrix t;
  for (const DecayRule& rule : chart) {
    const std::size_t col = position_in_order(rule.parent);
    for (ParticleId child : rule.products) ++t.entries(position_in_order(child), col);
  }
  return t;
}

std::vector<DecayRule> fermion_rules(std::span<const DecayRule> chart) {
  std::vector<DecayRule> out;
  for (const DecayRule& rule : chart) {
    if (particle(rule.parent).kind == ParticleClass::fermion) out.push_back(rule);
  }
  return out;
}

double dominant_eigenvalue(const IntMatrix& m, double tol, std::size_t max_iter) {
  if (!(tol > 0)) throw InvalidInput("tolerance must be positive");
  const std::size_t n = m.size();
  if (n == 0) throw InvalidInput("empty matrix");
  constexpr int kStreak = 10;

  Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
    }
  }
  Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n)).normalized();
  double previous = 0;
  int streak = 0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd y = a * x;
    const double q = x.dot(y);
    const double norm = y.norm();
    if (norm == 0) throw ConvergenceError("power iteration collapsed to the zero vector");
    x = y / norm;
    if (it > 0 && std::abs(q - previous) < tol) {
      if (++streak >= kStreak) return q;
    } else {
      streak = 0;
    }
    previous = q;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                         " iterations");
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n > 16) throw InvalidInput("characteristic polynomial supports matrices up to 16x16");
  // Coefficients from the highest degree down.
  std::vector<std::int64_t> vect{1};
  if (n > 0) vect.push_back(-m(0, 0));
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<std::int64_t> t(r + 2, 0);
    t[0] = 1;
    t[1] = -m(r, r);
    std::vector<std::int64_t> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      std::int64_t dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot = checked_add(dot, checked_mul(m(r, j), v[j]));
      t[k + 2] = -dot;
      std::vector<std::int64_t> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] = checked_add(next[i], checked_mul(m(i, j), v[j]));
      }
      v = std::move(next);
    }
    std::vector<std::int64_t> updated(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        updated[i] = checked_add(updated[i], checked_mul(t[i - j], vect[j]));
      }
    }
    vect = std::move(updated);
  }
  return IntPolynomial(vect.rbegin(), vect.rend());
}

PolyDivision divide_monic(const IntPolynomial& num, const IntPolynomial& den) {
  IntPolynomial d = den;
  trim(d);
  if (d.empty() || d.back() != 1) throw InvalidInput("divisor must be monic");
  IntPolynomial r = num;
  trim(r);
  const std::size_t dd = d.size() - 1;
  if (r.size() <= dd) return {{}, r};
  IntPolynomial q(r.size() - dd, 0);
  for (std::size_t i = r.size(); i-- > dd;) {
    const std::int64_t c = r[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = checked_add(r[i - dd + j], -checked_mul(c, d[j]));
  }
  trim(r);
  trim(q);
  return {q, r};
}

double evaluate(const IntPolynomial& p, double x) {
  double acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + static_cast<double>(p[i]);
  return acc;
}

std::optional<unsigned> primitivity_power(const IntMatrix& m, unsigned bound) {
  const std::size_t n = m.size();
  if (n == 0) return std::nullopt;
  if (bound == 0) bound = static_cast<unsigned>((n - 1) * (n - 1) + 1);
  IntMatrix power = m;
  for (unsigned p = 1; p <= bound; ++p) {
    if (power.all_positive()) return p;
    if (p < bound) power = power * m;
  }
  return std::nullopt;
}

std::vector<double> limiting_frequencies(const IntMatrix& m, unsigned power) {
  if (power < 1) throw InvalidInput("power must be at least 1");
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = static_cast<double>(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  Eigen::MatrixXd p = a;
  for (unsigned k = 1; k < power; ++k) {
    p = (p * a).eval();
    const double s = p.sum();
    if (s == 0) throw InvalidInput("matrix power vanished");
    p /= s;
  }
  const Eigen::VectorXd rows = p.rowwise().sum();
  const double total = rows.sum();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = rows(i) / total;
  return out;
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& poly) {
  IntPolynomial p = poly;
  trim(p);
  if (p.empty()) throw InvalidInput("zero polynomial has no well-defined roots");
  std::vector<std::complex<double>> roots;
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  roots.assign(zeros, {0.0, 0.0});
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
  const auto d = static_cast<Eigen::Index>(p.size()) - 1;
  if (d <= 0) return roots;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = static_cast<double>(p.back());
  for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    companion(i, d - 1) = -static_cast<double>(p[static_cast<std::size_t>(i)]) / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solve failed");
  for (Eigen::Index i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::vector<std::complex<double>> transition_eigenvalues(const IntMatrix& m) {
  const IntPolynomial charpoly = characteristic_polynomial(m);
  const IntPolynomial plastic{-1, -1, 0, 1};
  std::vector<std::complex<double>> out;
  const PolyDivision div = divide_monic(charpoly, plastic);
  if (div.remainder.empty()) {
    out = polynomial_roots(plastic);
    const auto rest = polynomial_roots(div.quotient);
    out.insert(out.end(), rest.begin(), rest.end());
  } else {
    out = polynomial_roots(charpoly);
  }
  // Conjugate pairs come out of the solver with tiny asymmetries in
  // modulus; round before ordering so the listing is stable.
  auto key = [](double v) { return std::round(v * 1e9) / 1e9; };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (key(std::abs(a)) != key(std::abs(b))) return key(std::abs(a)) > key(std::abs(b));
    if (key(a.real()) != key(b.real())) return key(a.real()) < key(b.real());
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace looksay
