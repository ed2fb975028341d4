#include "solvpot/params.hpp"

#include <cmath>
#include <string>

namespace solvpot {
namespace {

constexpr double kCoincidenceTol = 1e-12;

cplx csqrt(cplx z) { return std::sqrt(z); }

ComplexPolynomial cpoly(std::initializer_list<cplx> c) { return ComplexPolynomial(std::vector<cplx>(c)); }

const ComplexPolynomial kY = ComplexPolynomial::monomial(1);
ComplexPolynomial clin(cplx root) { return ComplexPolynomial::linear_factor(root); }

void require_iwata(const FamilySpec& spec) {
  if (!is_iwata(spec.kind())) throw InvalidSpec("expected an Iwata spec, got " + std::string(kind_name(spec.kind())));
}

void require_heun_a(double a) {
  if (!std::isfinite(a) || std::abs(a) < 1e-12 || std::abs(a - 1.0) < 1e-12)
    throw InvalidSpec("Heun singular point a must not be 0 or 1");
}

template <typename T>
std::vector<T> heun_lambdas(T alpha, T beta, T gamma, T delta, T q, T a) {
  const T eps = alpha + beta + T(1) - gamma - delta;
  const T one(1);
  return {one - (one - gamma) * (one - gamma), one - (one - delta) * (one - delta),
          one - (alpha + beta - gamma - delta) * (alpha + beta - gamma - delta),
          T(4) * alpha * beta - T(2) * gamma * delta - T(2) * (gamma + delta) * eps,
          T(-4) * q + T(2) * a * gamma * delta + T(2) * gamma * eps};
}

template <typename T>
std::vector<T> ghe_lambdas(T mu0, T mu1, T mu2, T ahat, T b0, T b1, T b2) {
  const T a0 = T(1) - mu0, a1 = T(1) - mu1, a2 = T(1) - mu2, a3 = ahat;
  return {T(4) * b0,          T(4) * b1 - T(2) * a1 * a2, T(-2) * a0 * a1,       T(-2) * a0 * a2,
          T(-2) * a0 * a3,    T(-2) * a1 * a3,            T(-2) * a2 * a3,       T(2) * a0 - a0 * a0,
          T(2) * a1 - a1 * a1, T(2) * a2 - a2 * a2,       -a3 * a3,              T(4) * b2};
}

/// The seven η/ξ combinations of the GHE λ's that multiply the R/S basis.
template <typename T>
std::array<T, 7> ghe_basis_combos(const std::vector<T>& l, T a) {
  return {l[7],
          l[8],
          l[9],
          l[10],
          l[4] + l[5] + l[6] + l[11],
          l[1] + l[2] + l[3] + l[5] + a * l[6] + (T(1) + a) * l[11],
          l[0] - l[3] - a * (l[2] + l[5] + l[6] + l[11])};
}

/// Hypergeometric equation from c, a+b and ab.
CanonicalEquation hypergeometric_equation(cplx c, cplx sum, cplx prod) {
  return {cpoly({0.0, 1.0, -1.0}), cpoly({c, -(sum + 1.0)}), cpoly({-prod})};
}

CanonicalEquation natanzon_equation(const FamilySpec& n, double k) {
  const double k2 = k * k;
  const cplx gamma = 1.0 + csqrt(1.0 - (n["c0"] * k2 - n["h0"]));
  const cplx sum = gamma + csqrt(1.0 - (n["c1"] * k2 - n["h1"]));
  const cplx mu = csqrt(1.0 - (n["a"] * k2 - n["f"]));
  return hypergeometric_equation(gamma, sum, (sum * sum - mu * mu) / 4.0);
}

CanonicalEquation heun_equation(const FamilySpec& s, double k) {
  const double k2 = k * k, a = s["a"];
  std::array<cplx, 5> l;
  for (int i = 0; i < 5; ++i) {
    const std::string idx = std::to_string(i);
    l[i] = s["g" + idx] * k2 + s["f" + idx];
  }
  const cplx gamma = 1.0 + csqrt(1.0 - l[0]);
  const cplx delta = 1.0 + csqrt(1.0 - l[1]);
  const cplx sum = gamma + delta + csqrt(1.0 - l[2]);
  const cplx eps = sum + 1.0 - gamma - delta;
  const cplx prod = (l[3] + 2.0 * gamma * delta + 2.0 * (gamma + delta) * eps) / 4.0;
  const cplx q = (-l[4] + 2.0 * a * gamma * delta + 2.0 * gamma * eps) / 4.0;
  const ComplexPolynomial ym1 = clin(1.0), yma = clin(a);
  return {kY * ym1 * yma, gamma * ym1 * yma + delta * kY * yma + eps * kY * ym1, cpoly({-q, prod})};
}

CanonicalEquation confluent_heun_equation(const FamilySpec& s, double k) {
  const double k2 = k * k;
  auto lam = [&](int i) -> cplx {
    const std::string idx = std::to_string(i);
    return s["sigma" + idx] * k2 + s["tau" + idx];
  };
  const cplx delta = 1.0 + csqrt(1.0 - lam(0));
  const cplx gamma = 1.0 + csqrt(1.0 - lam(1));
  const cplx p = csqrt(-lam(2)) / 4.0;
  const cplx l5 = -8.0 * p * gamma;
  const cplx l3 = lam(3) - l5;  // y²(y−1) coefficient is λ₃ + λ₅
  const cplx l4 = lam(4) + l5;  // y(y−1) coefficient is λ₄ − λ₅
  const cplx four_p_alpha = l3 / 4.0 + 2.0 * p * delta;
  const cplx sigma = (-l4 / 2.0 - gamma * delta) / 2.0;
  const ComplexPolynomial ym1 = clin(1.0);
  return {kY * ym1, gamma * ym1 + delta * kY + 4.0 * p * kY * ym1, cpoly({-sigma, four_p_alpha})};
}

CanonicalEquation biconfluent_heun_equation(const FamilySpec& s, double k) {
  const double k2 = k * k;
  const cplx beta = -(s["beta3"] * k2 + s["rho3"]) / 4.0;
  const cplx gamma = (s["beta2"] * k2 + s["rho2"] + beta * beta) / 4.0;
  const cplx delta = -(s["beta1"] * k2 + s["rho1"]) / 2.0;
  const cplx alpha = csqrt(1.0 - (s["beta0"] * k2 + s["rho0"]));
  return {cpoly({0.0, 1.0}), cpoly({1.0 + alpha, -beta, -2.0}),
          cpoly({-(delta + (1.0 + alpha) * beta) / 2.0, gamma - alpha - 2.0})};
}

CanonicalEquation double_confluent_heun_equation(const FamilySpec& s, double k) {
  const double k2 = k * k;
  auto b = [&](int i) {
    const std::string idx = std::to_string(i);
    return (s["mu" + idx] * k2 + s["nu" + idx]) / 4.0;
  };
  // y²v'' + yv' + (B₋₂/y² + B₋₁/y + B₀ + B₁y + B₂y²)v = 0, multiplied through by y².
  const double b0 = b(2) - 0.25;
  return {ComplexPolynomial::monomial(4), ComplexPolynomial::monomial(3), cpoly({b(0), b(1), b0, b(3), b(4)})};
}

CanonicalEquation triconfluent_heun_equation(const FamilySpec& s, double k) {
  const double k2 = k * k;
  auto a = [&](int i) {
    const std::string idx = std::to_string(i);
    return (s["theta" + idx] * k2 + s["omega" + idx]) / 4.0;
  };
  return {cpoly({1.0}), ComplexPolynomial{}, cpoly({a(0), a(1), a(2), 0.0, -2.25})};
}

CanonicalEquation generalized_heun_equation(const FamilySpec& s, double k) {
  const double k2 = k * k;
  const cplx a = s["a"];
  std::array<cplx, 7> e;
  for (int i = 0; i < 7; ++i) {
    const std::string idx = std::to_string(i + 1);
    e[i] = s["eta" + idx] * k2 + s["xi" + idx];
  }
  const cplx mu0 = csqrt(1.0 - e[0]), mu1 = csqrt(1.0 - e[1]), mu2 = csqrt(1.0 - e[2]);
  const cplx ahat = csqrt(-e[3]);
  const auto base = ghe_basis_combos(ghe_lambdas<cplx>(mu0, mu1, mu2, ahat, 0.0, 0.0, 0.0), a);
  const cplx b2 = (e[4] - base[4]) / 4.0;
  const cplx b1 = (e[5] - base[5] - 4.0 * (1.0 + a) * b2) / 4.0;
  const cplx b0 = (e[6] - base[6] + 4.0 * a * b2) / 4.0;
  const ComplexPolynomial ym1 = clin(1.0), yma = clin(a);
  const ComplexPolynomial p = kY * ym1 * yma;
  return {p, (1.0 - mu0) * ym1 * yma + (1.0 - mu1) * kY * yma + (1.0 - mu2) * kY * ym1 + ahat * p,
          cpoly({b0, b1, b2})};
}

bool close(double a, double b) { return std::abs(a - b) <= kCoincidenceTol; }

bool coincide_1_2(const FamilySpec& i, const FamilySpec& ii) {
  return close(ii["rho"], 1.0) && close(ii["rho2"], 1.0) && close(ii["sigma"], i["rho"]) &&
         close(ii["kappa"], i["kappa"]) && close(ii["sigma2"], i["rho"] + i["rho1"]) && close(i["sigma"], 1.0) &&
         close(i["sigma1"], -1.0);
}

bool coincide_2_3(const FamilySpec& ii, const FamilySpec& iii) {
  return close(iii["kappa"], ii["kappa"]) && close(iii["rho"], ii["rho"]) && close(ii["sigma"], 1.0) &&
         close(iii["sigma"], 1.0) && close(ii["sigma2"], 0.0) && close(iii["sigma3"], 0.0) &&
         close(ii["rho2"], iii["rho3"]);
}

bool coincide_1_3(const FamilySpec& i, const FamilySpec& iii) {
  return close(iii["kappa"], i["kappa"]) && close(iii["rho"], 1.0) && close(i["rho"], 1.0) &&
         close(iii["rho3"], 1.0) && close(i["rho1"], -1.0) && close(iii["sigma"], i["sigma"]) &&
         close(i["sigma"] + i["sigma1"], iii["sigma3"]);
}

}  // namespace

HypergeometricTriple hypergeometric_params(const FamilySpec& s, double k) {
  require_iwata(s);
  const double k2 = k * k;
  const double rho = s["rho"], sigma = s["sigma"], kappa = s["kappa"];
  switch (s.kind()) {
    case FamilyKind::IwataI: {
      const double rho1 = s["rho1"], sigma1 = s["sigma1"];
      const cplx c = 1.0 + csqrt(1.0 - sigma - sigma1 - sigma * k2 / kappa);
      const cplx x = csqrt(rho + rho1 + sigma + sigma1 + (1.0 + rho + sigma) * k2 / kappa);
      const cplx i(0.0, 1.0);
      if (kappa > 0) {
        const double split = k / std::sqrt(kappa);
        return {0.5 * (c + i * (x + split)), 0.5 * (c + i * (x - split)), c};
      }
      const double split = k / std::sqrt(-kappa);
      return {0.5 * (c + split + i * x), 0.5 * (c - split + i * x), c};
    }
    case FamilyKind::IwataII: {
      const double rho2 = s["rho2"], sigma2 = s["sigma2"];
      const cplx c = 1.0 + csqrt(1.0 - k2 / kappa);
      const cplx omega = csqrt(1.0 - rho2 - rho * k2 / kappa);
      const cplx a = 0.5 * (c + omega) + 0.5 * csqrt(1.0 - rho2 - sigma2 - (1.0 + rho + sigma) * k2 / kappa);
      return {a, a - omega, c};
    }
    case FamilyKind::IwataIII: {
      const double rho3 = s["rho3"], sigma3 = s["sigma3"];
      const cplx c = 1.0 + csqrt(1.0 - sigma3 - sigma * k2 / kappa);
      const cplx omega = csqrt(1.0 - rho3 - rho * k2 / kappa);
      const cplx a = 0.5 * (c + omega) + 0.5 * csqrt(1.0 - rho3 - sigma3 - (1.0 + rho + sigma) * k2 / kappa);
      return {a, a - omega, c};
    }
    default: break;
  }
  throw InvalidSpec("unreachable");
}

double class_constraint_residual(const FamilySpec& s, const HypergeometricTriple& t, double k) {
  require_iwata(s);
  const double k2 = k * k, kappa = s["kappa"];
  switch (s.kind()) {
    case FamilyKind::IwataI: return std::abs((t.a - t.b) * (t.a - t.b) + k2 / kappa);
    case FamilyKind::IwataII: return std::abs(2.0 * t.c - t.c * t.c - k2 / kappa);
    default: return std::abs(t.c * (t.a + t.b - 1.0) - 2.0 * t.a * t.b - k2 / (2.0 * kappa));
  }
}

LambdaVector heun_lambda_map(const HeunParameters& p) {
  require_heun_a(p.a);
  return {LambdaTarget::Heun, heun_lambdas<double>(p.alpha, p.beta, p.gamma, p.delta, p.q, p.a)};
}

LambdaVector confluent_heun_lambda_map(const ConfluentHeunParameters& p) {
  return {LambdaTarget::ConfluentHeun,
          {1.0 - (1.0 - p.delta) * (1.0 - p.delta), 1.0 - (1.0 - p.gamma) * (1.0 - p.gamma), -16.0 * p.p * p.p,
           8.0 * p.p * (2.0 * p.alpha - p.delta), -2.0 * (2.0 * p.sigma + p.gamma * p.delta), -8.0 * p.p * p.gamma}};
}

LambdaVector generalized_heun_lambda_map(const GeneralizedHeunParameters& p) {
  require_heun_a(p.a);
  return {LambdaTarget::GeneralizedHeun,
          ghe_lambdas<double>(p.mu0, p.mu1, p.mu2, p.alpha, p.beta0, p.beta1, p.beta2)};
}

LambdaVector collapse_heun_to_hypergeometric(double alpha, double beta, double gamma, double delta, double a) {
  const double eps = alpha + beta + 1.0 - gamma - delta;
  if (std::abs(eps) > 1e-12) throw NotCollapsible("alpha+beta+1-gamma-delta = " + std::to_string(eps));
  const double l3 = 4.0 * alpha * beta - 2.0 * gamma * (alpha + beta + 1.0 - gamma);
  return {LambdaTarget::HypergeometricCollapse,
          {1.0 - (1.0 - gamma) * (1.0 - gamma), 1.0 - (alpha + beta - gamma) * (alpha + beta - gamma), 0.0, l3,
           -a * l3}};
}

FamilySpec embed_iwata_to_natanzon(const FamilySpec& s) {
  require_iwata(s);
  const double rho = s["rho"], sigma = s["sigma"], kappa = s["kappa"];
  // Natanzon parameter order: a, c0, c1, f, h0, h1
  switch (s.kind()) {
    case FamilyKind::IwataI: {
      const double rho1 = s["rho1"], sigma1 = s["sigma1"];
      return FamilySpec(FamilyKind::Natanzon, {1.0 / kappa, sigma / kappa, (1.0 + rho + sigma) / kappa, -1.0,
                                               -(sigma + sigma1), -(1.0 + rho + rho1 + sigma + sigma1)});
    }
    case FamilyKind::IwataII: {
      const double rho2 = s["rho2"], sigma2 = s["sigma2"];
      return FamilySpec(FamilyKind::Natanzon, {rho / kappa, 1.0 / kappa, (1.0 + rho + sigma) / kappa, -rho2, 0.0,
                                               -(rho2 + sigma2)});
    }
    default: {
      const double rho3 = s["rho3"], sigma3 = s["sigma3"];
      return FamilySpec(FamilyKind::Natanzon, {rho / kappa, sigma / kappa, (1.0 + rho + sigma) / kappa, -rho3,
                                               -sigma3, -(rho3 + sigma3)});
    }
  }
}

FamilySpec embed_natanzon_to_heun(const FamilySpec& n, double heun_a) {
  if (n.kind() != FamilyKind::Natanzon) throw InvalidSpec("expected a Natanzon spec");
  require_heun_a(heun_a);
  const double a = n["a"], c0 = n["c0"], c1 = n["c1"], f = n["f"], h0 = n["h0"], h1 = n["h1"];
  const double g3 = a - c0 - c1, f3 = h0 + h1 - f;
  // Heun parameter order: a, g0..g4, f0..f4
  return FamilySpec(FamilyKind::Heun,
                    {heun_a, c0, c1, 0.0, g3, -heun_a * g3, -h0, -h1, 0.0, f3, -heun_a * f3});
}

FamilySpec embed_iwata_to_heun(const FamilySpec& iwata, double heun_a) {
  return embed_natanzon_to_heun(embed_iwata_to_natanzon(iwata), heun_a);
}

bool coincidence_check(const FamilySpec& first, const FamilySpec& second) {
  const auto k1 = first.kind(), k2 = second.kind();
  using K = FamilyKind;
  if (k1 == K::IwataI && k2 == K::IwataII) return coincide_1_2(first, second);
  if (k1 == K::IwataII && k2 == K::IwataI) return coincide_1_2(second, first);
  if (k1 == K::IwataII && k2 == K::IwataIII) return coincide_2_3(first, second);
  if (k1 == K::IwataIII && k2 == K::IwataII) return coincide_2_3(second, first);
  if (k1 == K::IwataI && k2 == K::IwataIII) return coincide_1_3(first, second);
  if (k1 == K::IwataIII && k2 == K::IwataI) return coincide_1_3(second, first);
  throw InvalidSpec("coincidence is defined for pairs of distinct Iwata classes");
}

CanonicalEquation canonical_equation(const FamilySpec& spec, double k) {
  switch (spec.kind()) {
    case FamilyKind::IwataI:
    case FamilyKind::IwataII:
    case FamilyKind::IwataIII: {
      const auto t = hypergeometric_params(spec, k);
      return hypergeometric_equation(t.c, t.a + t.b, t.a * t.b);
    }
    case FamilyKind::Natanzon: return natanzon_equation(spec, k);
    case FamilyKind::Heun: return heun_equation(spec, k);
    case FamilyKind::ConfluentHeun: return confluent_heun_equation(spec, k);
    case FamilyKind::BiconfluentHeun: return biconfluent_heun_equation(spec, k);
    case FamilyKind::DoubleConfluentHeun: return double_confluent_heun_equation(spec, k);
    case FamilyKind::TriconfluentHeun: return triconfluent_heun_equation(spec, k);
    case FamilyKind::GeneralizedHeun: return generalized_heun_equation(spec, k);
  }
  throw InvalidSpec("unreachable");
}

}  // namespace solvpot
