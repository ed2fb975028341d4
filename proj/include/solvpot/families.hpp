#pragma once

// The ten families of exactly solvable potentials: parameter vectors, the
// characteristic polynomials R (coordinate map), S (energy-independent part)
// and Q (shared Bose-invariant denominator), and the closed-form potentials
// V(y) as functions of the target-equation variable y.

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solvpot/polyrat.hpp"

namespace solvpot {

enum class FamilyKind {
  IwataI,
  IwataII,
  IwataIII,
  Natanzon,
  Heun,
  ConfluentHeun,
  BiconfluentHeun,
  DoubleConfluentHeun,
  TriconfluentHeun,
  GeneralizedHeun,
};

inline constexpr std::array<FamilyKind, 10> kAllKinds = {
    FamilyKind::IwataI,          FamilyKind::IwataII,
    FamilyKind::IwataIII,        FamilyKind::Natanzon,
    FamilyKind::Heun,            FamilyKind::ConfluentHeun,
    FamilyKind::BiconfluentHeun, FamilyKind::DoubleConfluentHeun,
    FamilyKind::TriconfluentHeun, FamilyKind::GeneralizedHeun,
};

/// Guard radius (in y) around singular points for closed-form evaluation.
inline constexpr double kSingularGuard = 1e-6;

std::string_view kind_name(FamilyKind kind);

/// Accepts the canonical names ("IwataI", ...) case-insensitively, plus the
/// short aliases iwata1/iwata2/iwata3, che, bche, dche, tche, ghe.
FamilyKind kind_from_name(std::string_view name);

/// Parameter names in storage order, e.g. IwataI → rho, sigma, rho1, sigma1, kappa.
std::span<const std::string_view> parameter_names(FamilyKind kind);

bool is_iwata(FamilyKind kind) noexcept;

/// Maximum degree of R for the kind.
int max_r_degree(FamilyKind kind) noexcept;

/// Immutable, validated description of one potential family member.
class FamilySpec {
 public:
  /// Throws InvalidSpec on wrong arity, non-finite values or kind constraints
  /// (κ ≠ 0 for Iwata kinds, a ∉ {0,1} for Heun/GHE, R not identically zero).
  FamilySpec(FamilyKind kind, std::vector<double> params);

  static FamilySpec from_named(FamilyKind kind, const std::map<std::string, double, std::less<>>& params);

  FamilyKind kind() const noexcept { return kind_; }
  const std::vector<double>& params() const noexcept { return params_; }

  /// Parameter by name; throws InvalidSpec for unknown names.
  double operator[](std::string_view name) const;

  /// Real roots of Q(y): where the target equation is singular.
  std::vector<double> singular_points() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilyKind kind_;
  std::vector<double> params_;
};

/// Returns a copy of `spec` with one parameter replaced.
FamilySpec with_param(const FamilySpec& spec, std::string_view name, double value);

Polynomial family_r_poly(const FamilySpec& spec);

/// Printed S(y). For Natanzon this is fy²+(h₁−h₀−f)y+h₀, which enters I₀ with
/// a minus sign; every other kind has I₀ = S/Q.
Polynomial family_s_poly(const FamilySpec& spec);

/// Shared denominator Q(y) with I₁ = R/Q. Iwata kinds fold κ into Q.
Polynomial family_q_poly(const FamilySpec& spec);

/// The closed-form potential of the family at y. Throws NearPole within
/// `guard` of a singular point or where R(y) vanishes.
double potential_closed_form(const FamilySpec& spec, double y, double guard = kSingularGuard);

/// Natanzon potential in the intermediate (G-based) form, before eliminating G² with Δ.
double natanzon_potential_intermediate(const FamilySpec& spec, double y, double guard = kSingularGuard);

/// Confluent Heun closed form with +4R in the bracket instead of −4R. Disagrees
/// with the master formula; kept so the discrepancy stays reportable.
double confluent_heun_potential_plus_4r(const FamilySpec& spec, double y, double guard = kSingularGuard);

class CoordinateMap;

/// V(y(x)) along a coordinate map.
double potential_on_map(const FamilySpec& spec, const CoordinateMap& map, double x,
                        double guard = kSingularGuard);

/// A valid default member of each kind (used for CLI templates).
FamilySpec template_spec(FamilyKind kind);

}  // namespace solvpot
