#pragma once

// Dense univariate polynomials and rational functions with floating-point
// coefficients. Coefficients are kept exactly as supplied (ascending degree);
// only trailing exact zeros are dropped.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "solvpot/errors.hpp"

namespace solvpot {

inline constexpr double kDefaultPoleGuard = 1e-10;

template <typename T>
class BasicPolynomial {
 public:
  using value_type = T;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  /// c·yⁿ
  static BasicPolynomial monomial(std::size_t degree, T c = T{1}) {
    std::vector<T> v(degree + 1, T{});
    v[degree] = c;
    return BasicPolynomial(std::move(v));
  }

  /// (y − root)
  static BasicPolynomial linear_factor(T root) { return BasicPolynomial({-root, T{1}}); }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Index of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  T coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : T{}; }

  template <typename U>
  auto operator()(U y) const {
    using R = std::common_type_t<T, U>;
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + R(*it);
    return acc;
  }

  BasicPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<double>(i));
    return BasicPolynomial(std::move(d));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T{});
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T{});
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPolynomial& operator*=(T s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(BasicPolynomial a) { return a *= T{-1}; }
  friend BasicPolynomial operator*(BasicPolynomial a, T s) { return a *= s; }
  friend BasicPolynomial operator*(T s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BasicPolynomial(std::move(r));
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Polynomial = BasicPolynomial<double>;
using ComplexPolynomial = BasicPolynomial<std::complex<double>>;

inline ComplexPolynomial to_complex(const Polynomial& p) {
  std::vector<std::complex<double>> c(p.coeffs().begin(), p.coeffs().end());
  return ComplexPolynomial(std::move(c));
}

/// p^n by repeated multiplication.
template <typename T>
BasicPolynomial<T> pow(const BasicPolynomial<T>& p, unsigned n) {
  BasicPolynomial<T> r{T{1}};
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

inline double poly_eval(const Polynomial& p, double y) { return p(y); }
inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

/// Horner with error-free transformations: as accurate as evaluating in twice
/// the working precision, then rounding.
double compensated_eval(const Polynomial& p, double y);

/// Value and first two derivatives of a function at one point.
struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  /// numerator(y)/denominator(y); throws NearPole when |denominator(y)| ≤ guard.
  double operator()(double y, double guard = kDefaultPoleGuard) const;

  /// Value, first and second derivative via the quotient rule evaluated pointwise.
  Jet2 jet(double y, double guard = kDefaultPoleGuard) const;

  /// Symbolic derivative (N'D − ND')/D² without simplification.
  RationalFunction derivative() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

inline double rat_eval(const RationalFunction& r, double y, double guard = kDefaultPoleGuard) {
  return r(y, guard);
}

}  // namespace solvpot
