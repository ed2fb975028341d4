#include "solvpot/bose.hpp"

#include <cmath>
#include <string>

namespace solvpot {
namespace {

template <typename P>
auto bose_impl(const P& a, const P& b, const P& c, double y, double guard) {
  const auto av = a(y);
  if (!(std::abs(av) > guard)) throw NearPole("leading coefficient vanishes at y=" + std::to_string(y));
  const auto bv = b(y);
  const auto num = 4.0 * av * c(y) - 2.0 * av * b.derivative()(y) + 2.0 * bv * a.derivative()(y) - bv * bv;
  return num / (4.0 * av * av);
}

void check_regular(const FamilySpec& spec, double y) {
  for (double s : spec.singular_points())
    if (std::abs(y - s) <= kSingularGuard) throw NearPole("y=" + std::to_string(y) + " is a singular point");
}

}  // namespace

double bose_invariant(const Polynomial& a, const Polynomial& b, const Polynomial& c, double y, double guard) {
  return bose_impl(a, b, c, y, guard);
}

std::complex<double> bose_invariant(const ComplexPolynomial& a, const ComplexPolynomial& b,
                                    const ComplexPolynomial& c, double y, double guard) {
  return bose_impl(a, b, c, y, guard);
}

BoseDecomposition decompose(const FamilySpec& spec) {
  const Polynomial q = family_q_poly(spec);
  Polynomial s = family_s_poly(spec);
  if (spec.kind() == FamilyKind::Natanzon) s = -s;
  return {RationalFunction(family_r_poly(spec), q), RationalFunction(std::move(s), q)};
}

double half_schwarzian(const BoseDecomposition& d, double y) {
  const RationalFunction g(d.i1.denominator(), d.i1.numerator());
  const Jet2 j = g.jet(y);
  if (!(std::abs(j.value) > kDefaultPoleGuard)) throw NearPole("g(y) vanishes at y=" + std::to_string(y));
  return 0.25 * j.d2 - 3.0 * j.d1 * j.d1 / (16.0 * j.value);
}

double half_schwarzian(const FamilySpec& spec, double y) {
  check_regular(spec, y);
  return half_schwarzian(decompose(spec), y);
}

double milson_potential(const BoseDecomposition& d, double y) {
  const Jet2 i1 = d.i1.jet(y);
  if (!(std::abs(i1.value) > 0.0)) throw NearPole("I1 vanishes at y=" + std::to_string(y));
  const double i0 = d.i0(y);
  return -i0 / i1.value + (4.0 * i1.value * i1.d2 - 5.0 * i1.d1 * i1.d1) / (16.0 * i1.value * i1.value * i1.value);
}

double milson_potential(const FamilySpec& spec, double y) {
  check_regular(spec, y);
  return milson_potential(decompose(spec), y);
}

double j_value(const BoseDecomposition& d, double k, double y) {
  const RationalFunction g(d.i1.denominator(), d.i1.numerator());
  return g(y) * d(y, k) + half_schwarzian(d, y);
}

double j_value(const FamilySpec& spec, double k, double y) {
  check_regular(spec, y);
  return j_value(decompose(spec), k, y);
}

}  // namespace solvpot
