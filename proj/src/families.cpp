#include "solvpot/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "solvpot/coordmap.hpp"

namespace solvpot {
namespace {

using namespace std::string_view_literals;

constexpr std::array kIwataINames = {"rho"sv, "sigma"sv, "rho1"sv, "sigma1"sv, "kappa"sv};
constexpr std::array kIwataIINames = {"rho"sv, "sigma"sv, "rho2"sv, "sigma2"sv, "kappa"sv};
constexpr std::array kIwataIIINames = {"rho"sv, "sigma"sv, "rho3"sv, "sigma3"sv, "kappa"sv};
constexpr std::array kNatanzonNames = {"a"sv, "c0"sv, "c1"sv, "f"sv, "h0"sv, "h1"sv};
constexpr std::array kHeunNames = {"a"sv,  "g0"sv, "g1"sv, "g2"sv, "g3"sv, "g4"sv,
                                   "f0"sv, "f1"sv, "f2"sv, "f3"sv, "f4"sv};
constexpr std::array kConfluentNames = {"sigma0"sv, "sigma1"sv, "sigma2"sv, "sigma3"sv, "sigma4"sv,
                                        "tau0"sv,   "tau1"sv,   "tau2"sv,   "tau3"sv,   "tau4"sv};
constexpr std::array kBiconfluentNames = {"beta0"sv, "beta1"sv, "beta2"sv, "beta3"sv,
                                          "rho0"sv,  "rho1"sv,  "rho2"sv,  "rho3"sv};
constexpr std::array kDoubleConfluentNames = {"mu0"sv, "mu1"sv, "mu2"sv, "mu3"sv, "mu4"sv,
                                              "nu0"sv, "nu1"sv, "nu2"sv, "nu3"sv, "nu4"sv};
constexpr std::array kTriconfluentNames = {"theta0"sv, "theta1"sv, "theta2"sv,
                                           "omega0"sv, "omega1"sv, "omega2"sv};
constexpr std::array kGeneralizedNames = {"a"sv,   "eta1"sv, "eta2"sv, "eta3"sv, "eta4"sv,
                                          "eta5"sv, "eta6"sv, "eta7"sv, "xi1"sv,  "xi2"sv,
                                          "xi3"sv,  "xi4"sv,  "xi5"sv,  "xi6"sv,  "xi7"sv};

std::string lower(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return std::tolower(c); });
  return r;
}

Polynomial lin(double root) { return Polynomial::linear_factor(root); }
const Polynomial kY = Polynomial::monomial(1);

// y(y-1) and its square, shared by the hypergeometric-type kinds.
Polynomial hyp_q_core() {
  const Polynomial p = kY * lin(1.0);
  return p * p;
}

/// Basis of the Heun-type R and S: (y-1)²(y-a)², y²(y-a)², y²(y-1)², y²(y-1)(y-a), y(y-1)(y-a).
std::array<Polynomial, 5> heun_basis(double a) {
  const Polynomial ym1 = lin(1.0), yma = lin(a);
  return {ym1 * ym1 * yma * yma, kY * kY * yma * yma, kY * kY * ym1 * ym1, kY * kY * ym1 * yma,
          kY * ym1 * yma};
}

/// GHE basis: the Heun basis with y²(y-1)²(y-a)² and y(y-1)²(y-a)² inserted.
std::array<Polynomial, 7> ghe_basis(double a) {
  const Polynomial ym1 = lin(1.0), yma = lin(a);
  return {ym1 * ym1 * yma * yma,       kY * kY * yma * yma,        kY * kY * ym1 * ym1,
          kY * kY * ym1 * ym1 * yma * yma, kY * ym1 * ym1 * yma * yma, kY * kY * ym1 * yma,
          kY * ym1 * yma};
}

std::array<Polynomial, 5> confluent_basis() {
  const Polynomial ym1 = lin(1.0);
  return {kY * kY, ym1 * ym1, kY * kY * ym1 * ym1, kY * kY * ym1, kY * ym1};
}

template <std::size_t N>
Polynomial combine(const std::array<Polynomial, N>& basis, const std::vector<double>& p, std::size_t offset) {
  Polynomial r;
  for (std::size_t i = 0; i < N; ++i) r += p[offset + i] * basis[i];
  return r;
}

Polynomial ascending(const std::vector<double>& p, std::size_t offset, std::size_t count) {
  return Polynomial(std::vector<double>(p.begin() + static_cast<long>(offset),
                                        p.begin() + static_cast<long>(offset + count)));
}

void check_regular(const FamilySpec& spec, double y, double guard) {
  for (double s : spec.singular_points())
    if (std::abs(y - s) <= guard)
      throw NearPole("y=" + std::to_string(y) + " within guard of singular point " + std::to_string(s));
}

Jet2 operator*(const Jet2& f, const Jet2& g) {
  return {f.value * g.value, f.d1 * g.value + f.value * g.d1, f.d2 * g.value + 2.0 * f.d1 * g.d1 + f.value * g.d2};
}

// The basis kinds are evaluated in factored form: expanding (y-a)² into monomials
// rounds away the double root and costs digits wherever R is small.
std::array<Jet2, 5> heun_basis_jets(double a, double y) {
  const Jet2 t{y, 1.0, 0.0}, ym1{y - 1.0, 1.0, 0.0}, yma{y - a, 1.0, 0.0};
  return {ym1 * ym1 * yma * yma, t * t * yma * yma, t * t * ym1 * ym1, t * t * ym1 * yma, t * ym1 * yma};
}

std::array<Jet2, 7> ghe_basis_jets(double a, double y) {
  const Jet2 t{y, 1.0, 0.0}, ym1{y - 1.0, 1.0, 0.0}, yma{y - a, 1.0, 0.0};
  return {ym1 * ym1 * yma * yma,         t * t * yma * yma,         t * t * ym1 * ym1, t * t * ym1 * ym1 * yma * yma,
          t * ym1 * ym1 * yma * yma, t * t * ym1 * yma, t * ym1 * yma};
}

std::array<Jet2, 5> confluent_basis_jets(double y) {
  const Jet2 t{y, 1.0, 0.0}, ym1{y - 1.0, 1.0, 0.0};
  return {t * t, ym1 * ym1, t * t * ym1 * ym1, t * t * ym1, t * ym1};
}

template <std::size_t N>
Jet2 combine(const std::array<Jet2, N>& basis, const std::vector<double>& p, std::size_t offset) {
  Jet2 r;
  for (std::size_t i = 0; i < N; ++i) {
    r.value += p[offset + i] * basis[i].value;
    r.d1 += p[offset + i] * basis[i].d1;
    r.d2 += p[offset + i] * basis[i].d2;
  }
  return r;
}

/// Jet of R, or of the S numerator, at y.
Jet2 poly_jet(const FamilySpec& spec, bool numerator_s, double y) {
  const auto& p = spec.params();
  switch (spec.kind()) {
    case FamilyKind::Heun: return combine(heun_basis_jets(p[0], y), p, numerator_s ? 6 : 1);
    case FamilyKind::GeneralizedHeun: return combine(ghe_basis_jets(p[0], y), p, numerator_s ? 8 : 1);
    case FamilyKind::ConfluentHeun: return combine(confluent_basis_jets(y), p, numerator_s ? 5 : 0);
    default: break;
  }
  const Polynomial f = numerator_s ? family_s_poly(spec) : family_r_poly(spec);
  const Polynomial d1 = f.derivative();
  return {compensated_eval(f, y), compensated_eval(d1, y), compensated_eval(d1.derivative(), y)};
}

/// Evaluates R and its first two derivatives; throws NearPole at a zero of R.
Jet2 r_jet(const FamilySpec& spec, double y) {
  const Jet2 j = poly_jet(spec, false, y);
  if (!(std::abs(j.value) > kDefaultPoleGuard)) throw NearPole("R(y) vanishes at y=" + std::to_string(y));
  return j;
}

double s_value(const FamilySpec& spec, double y) { return poly_jet(spec, true, y).value; }

/// Shared Iwata form κ u²/R [1/u² + R''/R + (1-2y)R'/(uR) - 5R'²/(4R²)] - N(y)/R, u = y(1-y),
/// where N is the S numerator (κ already folded in). Evaluated as T(y)/R(y)³ with the numerator T
/// assembled coefficient-wise, so exact cancellations stay exact near double roots of R.
double iwata_potential(const FamilySpec& spec, double y) {
  const double kappa = spec["kappa"];
  const Polynomial r = family_r_poly(spec), dr = r.derivative(), d2r = dr.derivative();
  const Polynomial u{0.0, 1.0, -1.0}, t{1.0, -2.0};
  const Polynomial numerator =
      kappa * (r * r + u * u * r * d2r + t * u * r * dr - 1.25 * (u * u * dr * dr)) - family_s_poly(spec) * r * r;
  (void)r_jet(spec, y);  // pole guard
  const double rv = compensated_eval(r, y);
  return compensated_eval(numerator, y) / (rv * rv * rv);
}

double natanzon_potential(const FamilySpec& spec, double y) {
  const double a = spec["a"], c0 = spec["c0"], c1 = spec["c1"], f = spec["f"], h0 = spec["h0"], h1 = spec["h1"];
  const double h = r_jet(spec, y).value;
  const double delta = (a - c0 - c1) * (a - c0 - c1) - 4.0 * c1 * c0;
  const double u = y * (1.0 - y);
  const double bracket = a + (a + (c1 - c0) * (2.0 * y - 1.0)) / (y * (y - 1.0)) - 1.25 * delta / h;
  return u * u / (h * h) * bracket + (f * y * (y - 1.0) + h0 * (1.0 - y) + h1 * y + 1.0) / h;
}

/// Heun and GHE share the same closed form; only R and S differ.
double heun_type_potential(const FamilySpec& spec, double y) {
  const double a = spec["a"];
  const Jet2 r = r_jet(spec, y);
  const double p = y * (y - 1.0) * (y - a);
  const double g = 3.0 * y * y - 2.0 * (a + 1.0) * y + a;
  const double dg = 6.0 * y - 2.0 * (a + 1.0);
  const double bracket = r.d2 + (g * r.d1 - 2.0 * r.value * dg) / p + r.value * g * g / (p * p) -
                         1.25 * r.d1 * r.d1 / r.value;
  return p * p / (r.value * r.value) * bracket - s_value(spec, y) / r.value;
}

double confluent_potential(const FamilySpec& spec, double y, double four_r_sign) {
  const Jet2 r = r_jet(spec, y);
  const double p = y * (y - 1.0);
  const double t = 2.0 * y - 1.0;
  const double bracket = r.d2 + (t * r.d1 + four_r_sign * 4.0 * r.value) / p + t * t * r.value / (p * p) -
                         1.25 * r.d1 * r.d1 / r.value;
  return p * p / (r.value * r.value) * bracket - s_value(spec, y) / r.value;
}

double biconfluent_potential(const FamilySpec& spec, double y) {
  const Jet2 r = r_jet(spec, y);
  const double bracket = r.d2 + r.d1 / y + r.value / (y * y) - 1.25 * r.d1 * r.d1 / r.value;
  return y * y / (r.value * r.value) * bracket - s_value(spec, y) / r.value;
}

double double_confluent_potential(const FamilySpec& spec, double y) {
  const Jet2 r = r_jet(spec, y);
  const double y4 = y * y * y * y;
  const double bracket = r.d2 + 2.0 * r.d1 / y - 1.25 * r.d1 * r.d1 / r.value;
  return y4 / (r.value * r.value) * bracket - s_value(spec, y) / r.value;
}

double triconfluent_potential(const FamilySpec& spec, double y) {
  const double t1 = spec["theta1"], t2 = spec["theta2"];
  const double r = r_jet(spec, y).value;
  const double lin_term = 2.0 * t2 * y + t1;
  return (2.0 * t2 - 1.25 * lin_term * lin_term / r) / (r * r) - s_value(spec, y) / r;
}

}  // namespace

std::string_view kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::IwataI: return "IwataI";
    case FamilyKind::IwataII: return "IwataII";
    case FamilyKind::IwataIII: return "IwataIII";
    case FamilyKind::Natanzon: return "Natanzon";
    case FamilyKind::Heun: return "Heun";
    case FamilyKind::ConfluentHeun: return "ConfluentHeun";
    case FamilyKind::BiconfluentHeun: return "BiconfluentHeun";
    case FamilyKind::DoubleConfluentHeun: return "DoubleConfluentHeun";
    case FamilyKind::TriconfluentHeun: return "TriconfluentHeun";
    case FamilyKind::GeneralizedHeun: return "GeneralizedHeun";
  }
  return "?";
}

FamilyKind kind_from_name(std::string_view name) {
  const std::string n = lower(name);
  for (FamilyKind k : kAllKinds)
    if (lower(kind_name(k)) == n) return k;
  static const std::map<std::string, FamilyKind, std::less<>> aliases = {
      {"iwata1", FamilyKind::IwataI},          {"iwata2", FamilyKind::IwataII},
      {"iwata3", FamilyKind::IwataIII},        {"che", FamilyKind::ConfluentHeun},
      {"bche", FamilyKind::BiconfluentHeun},   {"dche", FamilyKind::DoubleConfluentHeun},
      {"tche", FamilyKind::TriconfluentHeun},  {"ghe", FamilyKind::GeneralizedHeun},
  };
  if (auto it = aliases.find(n); it != aliases.end()) return it->second;
  throw InvalidSpec("unknown family kind '" + std::string(name) + "'");
}

std::span<const std::string_view> parameter_names(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::IwataI: return kIwataINames;
    case FamilyKind::IwataII: return kIwataIINames;
    case FamilyKind::IwataIII: return kIwataIIINames;
    case FamilyKind::Natanzon: return kNatanzonNames;
    case FamilyKind::Heun: return kHeunNames;
    case FamilyKind::ConfluentHeun: return kConfluentNames;
    case FamilyKind::BiconfluentHeun: return kBiconfluentNames;
    case FamilyKind::DoubleConfluentHeun: return kDoubleConfluentNames;
    case FamilyKind::TriconfluentHeun: return kTriconfluentNames;
    case FamilyKind::GeneralizedHeun: return kGeneralizedNames;
  }
  return {};
}

bool is_iwata(FamilyKind kind) noexcept {
  return kind == FamilyKind::IwataI || kind == FamilyKind::IwataII || kind == FamilyKind::IwataIII;
}

int max_r_degree(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::BiconfluentHeun: return 3;
    case FamilyKind::Heun:
    case FamilyKind::ConfluentHeun:
    case FamilyKind::DoubleConfluentHeun: return 4;
    case FamilyKind::GeneralizedHeun: return 6;
    default: return 2;
  }
}

FamilySpec::FamilySpec(FamilyKind kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {
  const auto names = parameter_names(kind_);
  if (params_.size() != names.size())
    throw InvalidSpec(std::string(kind_name(kind_)) + " expects " + std::to_string(names.size()) +
                      " parameters, got " + std::to_string(params_.size()));
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (!std::isfinite(params_[i])) throw InvalidSpec("parameter " + std::string(names[i]) + " is not finite");
  if (is_iwata(kind_) && params_[4] == 0.0) throw InvalidSpec("kappa must be nonzero");
  if (kind_ == FamilyKind::Heun || kind_ == FamilyKind::GeneralizedHeun) {
    const double a = params_[0];
    if (std::abs(a) < 1e-12 || std::abs(a - 1.0) < 1e-12) throw InvalidSpec("singular point a must not be 0 or 1");
  }
  if (family_r_poly(*this).is_zero()) throw InvalidSpec("R(y) is identically zero");
}

FamilySpec FamilySpec::from_named(FamilyKind kind, const std::map<std::string, double, std::less<>>& params) {
  const auto names = parameter_names(kind);
  for (const auto& [name, value] : params)
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw InvalidSpec("unknown parameter '" + name + "' for " + std::string(kind_name(kind)));
  std::vector<double> v;
  v.reserve(names.size());
  for (auto name : names) {
    auto it = params.find(name);
    if (it == params.end()) throw InvalidSpec("missing parameter '" + std::string(name) + "'");
    v.push_back(it->second);
  }
  return FamilySpec(kind, std::move(v));
}

double FamilySpec::operator[](std::string_view name) const {
  const auto names = parameter_names(kind_);
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw InvalidSpec("no parameter '" + std::string(name) + "' in " + std::string(kind_name(kind_)));
  return params_[static_cast<std::size_t>(it - names.begin())];
}

std::vector<double> FamilySpec::singular_points() const {
  switch (kind_) {
    case FamilyKind::Heun:
    case FamilyKind::GeneralizedHeun: return {0.0, 1.0, params_[0]};
    case FamilyKind::BiconfluentHeun:
    case FamilyKind::DoubleConfluentHeun: return {0.0};
    case FamilyKind::TriconfluentHeun: return {};
    default: return {0.0, 1.0};
  }
}

FamilySpec with_param(const FamilySpec& spec, std::string_view name, double value) {
  const auto names = parameter_names(spec.kind());
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InvalidSpec("no parameter '" + std::string(name) + "'");
  auto p = spec.params();
  p[static_cast<std::size_t>(it - names.begin())] = value;
  return FamilySpec(spec.kind(), std::move(p));
}

Polynomial family_r_poly(const FamilySpec& spec) {
  const auto& p = spec.params();
  switch (spec.kind()) {
    case FamilyKind::IwataI: return Polynomial{p[1], p[0], 1.0};
    case FamilyKind::IwataII: return Polynomial{1.0, p[1], p[0]};
    case FamilyKind::IwataIII: return Polynomial{p[1], 1.0, p[0]};
    case FamilyKind::Natanzon: return Polynomial{p[1], p[2] - p[1] - p[0], p[0]};
    case FamilyKind::Heun: return combine(heun_basis(p[0]), p, 1);
    case FamilyKind::ConfluentHeun: return combine(confluent_basis(), p, 0);
    case FamilyKind::BiconfluentHeun: return ascending(p, 0, 4);
    case FamilyKind::DoubleConfluentHeun: return ascending(p, 0, 5);
    case FamilyKind::TriconfluentHeun: return ascending(p, 0, 3);
    case FamilyKind::GeneralizedHeun: return combine(ghe_basis(p[0]), p, 1);
  }
  return {};
}

Polynomial family_s_poly(const FamilySpec& spec) {
  const auto& p = spec.params();
  switch (spec.kind()) {
    case FamilyKind::IwataI: return p[4] * Polynomial{p[1] + p[3], p[0] + p[2], 1.0};
    case FamilyKind::IwataII: return p[4] * Polynomial{0.0, p[3], p[2]};
    case FamilyKind::IwataIII: return p[4] * Polynomial{p[3], 0.0, p[2]};
    case FamilyKind::Natanzon: return Polynomial{p[4], p[5] - p[4] - p[3], p[3]};
    case FamilyKind::Heun: return combine(heun_basis(p[0]), p, 6);
    case FamilyKind::ConfluentHeun: return combine(confluent_basis(), p, 5);
    case FamilyKind::BiconfluentHeun: return Polynomial{p[4], p[5], p[6], p[7], -4.0};
    case FamilyKind::DoubleConfluentHeun: return ascending(p, 5, 5);
    case FamilyKind::TriconfluentHeun: return Polynomial{p[3], p[4], p[5], 0.0, -9.0};
    case FamilyKind::GeneralizedHeun: return combine(ghe_basis(p[0]), p, 8);
  }
  return {};
}

Polynomial family_q_poly(const FamilySpec& spec) {
  const auto& p = spec.params();
  switch (spec.kind()) {
    case FamilyKind::IwataI:
    case FamilyKind::IwataII:
    case FamilyKind::IwataIII: return (4.0 * p[4]) * hyp_q_core();
    case FamilyKind::Natanzon:
    case FamilyKind::ConfluentHeun: return 4.0 * hyp_q_core();
    case FamilyKind::Heun:
    case FamilyKind::GeneralizedHeun: {
      const Polynomial yma = lin(p[0]);
      return 4.0 * hyp_q_core() * yma * yma;
    }
    case FamilyKind::BiconfluentHeun: return Polynomial::monomial(2, 4.0);
    case FamilyKind::DoubleConfluentHeun: return Polynomial::monomial(4, 4.0);
    case FamilyKind::TriconfluentHeun: return Polynomial{4.0};
  }
  return {};
}

double potential_closed_form(const FamilySpec& spec, double y, double guard) {
  check_regular(spec, y, guard);
  switch (spec.kind()) {
    case FamilyKind::IwataI:
    case FamilyKind::IwataII:
    case FamilyKind::IwataIII: return iwata_potential(spec, y);
    case FamilyKind::Natanzon: return natanzon_potential(spec, y);
    case FamilyKind::Heun:
    case FamilyKind::GeneralizedHeun: return heun_type_potential(spec, y);
    case FamilyKind::ConfluentHeun: return confluent_potential(spec, y, -1.0);
    case FamilyKind::BiconfluentHeun: return biconfluent_potential(spec, y);
    case FamilyKind::DoubleConfluentHeun: return double_confluent_potential(spec, y);
    case FamilyKind::TriconfluentHeun: return triconfluent_potential(spec, y);
  }
  return 0.0;
}

double natanzon_potential_intermediate(const FamilySpec& spec, double y, double guard) {
  if (spec.kind() != FamilyKind::Natanzon) throw InvalidSpec("expected a Natanzon spec");
  check_regular(spec, y, guard);
  const double a = spec["a"], c0 = spec["c0"], c1 = spec["c1"];
  const double h = r_jet(spec, y).value;
  const double g = 2.0 * a * y + c1 - c0 - a;
  const double u = y * (1.0 - y);
  const double bracket = 2.0 * a + h / (u * u) + (1.0 - 2.0 * y) * g / u - 1.25 * g * g / h;
  return u * u / (h * h) * bracket + family_s_poly(spec)(y) / h;
}

double confluent_heun_potential_plus_4r(const FamilySpec& spec, double y, double guard) {
  if (spec.kind() != FamilyKind::ConfluentHeun) throw InvalidSpec("expected a ConfluentHeun spec");
  check_regular(spec, y, guard);
  return confluent_potential(spec, y, +1.0);
}

double potential_on_map(const FamilySpec& spec, const CoordinateMap& map, double x, double guard) {
  return potential_closed_form(spec, map_eval(map, x).y, guard);
}

FamilySpec template_spec(FamilyKind kind) {
  std::vector<double> p(parameter_names(kind).size(), 0.0);
  switch (kind) {
    case FamilyKind::IwataI:
    case FamilyKind::IwataII:
    case FamilyKind::IwataIII: p[4] = 1.0; break;
    case FamilyKind::Natanzon: p[0] = 1.0; break;
    case FamilyKind::Heun:
    case FamilyKind::GeneralizedHeun:
      p[0] = 2.0;
      p[1] = 1.0;
      break;
    default: p[0] = 1.0; break;
  }
  return FamilySpec(kind, std::move(p));
}

}  // namespace solvpot
