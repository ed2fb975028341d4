#pragma once

// Bose invariants of second-order linear ODEs, their I = I₁k² + I₀ split for each
// family, and the master potential V = −I₀/I₁ + (4I₁Ï₁ − 5İ₁²)/(16I₁³).

#include <complex>

#include "solvpot/families.hpp"
#include "solvpot/polyrat.hpp"

namespace solvpot {

/// I(y) of a(y)v'' + b(y)v' + c(y)v = 0:
/// [4ac − 2a·b' + 2b·a' − b²] / (4a²). Throws NearPole when |a(y)| ≤ guard.
double bose_invariant(const Polynomial& a, const Polynomial& b, const Polynomial& c, double y,
                      double guard = kDefaultPoleGuard);
std::complex<double> bose_invariant(const ComplexPolynomial& a, const ComplexPolynomial& b,
                                    const ComplexPolynomial& c, double y, double guard = kDefaultPoleGuard);

/// I₁ and I₀ over the family's shared denominator Q (never simplified).
struct BoseDecomposition {
  RationalFunction i1;
  RationalFunction i0;

  /// I(y, k) = I₁(y)k² + I₀(y)
  double operator()(double y, double k, double guard = kDefaultPoleGuard) const {
    return i1(y, guard) * k * k + i0(y, guard);
  }
};

BoseDecomposition decompose(const FamilySpec& spec);

/// ½{y,x} along a map with (y')² = g = 1/I₁, from g''/4 − 3g'²/(16g).
double half_schwarzian(const BoseDecomposition& d, double y);
double half_schwarzian(const FamilySpec& spec, double y);

/// Master-formula potential from I₁, İ₁, Ï₁ and I₀.
double milson_potential(const BoseDecomposition& d, double y);
double milson_potential(const FamilySpec& spec, double y);

/// J = (y')²·I(y,k) + ½{y,x} with (y')² = 1/I₁. Equals k² − V.
double j_value(const BoseDecomposition& d, double k, double y);
double j_value(const FamilySpec& spec, double k, double y);

}  // namespace solvpot
