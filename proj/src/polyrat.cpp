#include "solvpot/polyrat.hpp"

#include <cmath>
#include <string>

namespace solvpot {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidSpec("rational function with zero denominator");
}

double RationalFunction::operator()(double y, double guard) const {
  const double d = den_(y);
  if (!(std::abs(d) > guard)) throw NearPole("denominator " + std::to_string(d) + " at y=" + std::to_string(y));
  return num_(y) / d;
}

Jet2 RationalFunction::jet(double y, double guard) const {
  const double d0 = den_(y);
  if (!(std::abs(d0) > guard)) throw NearPole("denominator " + std::to_string(d0) + " at y=" + std::to_string(y));
  const Polynomial dn = num_.derivative();
  const Polynomial dd = den_.derivative();
  const double d1 = dd(y);
  const double d2 = dd.derivative()(y);
  Jet2 j;
  j.value = num_(y) / d0;
  j.d1 = (dn(y) - j.value * d1) / d0;
  j.d2 = (dn.derivative()(y) - 2.0 * j.d1 * d1 - j.value * d2) / d0;
  return j;
}

RationalFunction RationalFunction::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

double compensated_eval(const Polynomial& p, double y) {
  const auto& c = p.coeffs();
  if (c.empty()) return 0.0;
  double s = c.back(), err = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    const double prod = s * y;
    const double prod_err = std::fma(s, y, -prod);
    const double sum = prod + c[i];
    const double z = sum - prod;
    const double sum_err = (prod - (sum - z)) + (c[i] - z);
    s = sum;
    err = err * y + (prod_err + sum_err);
  }
  return s + err;
}

}  // namespace solvpot
