#pragma once

// Verification harness: k-independence of the Bose split, master formula vs.
// closed forms, the symmetry machinery for IwataI, an end-to-end Schrödinger
// residual and a Numerov shooting oracle for bound states.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "solvpot/bose.hpp"
#include "solvpot/coordmap.hpp"
#include "solvpot/families.hpp"

namespace solvpot {

struct VerificationReport {
  std::string check_name;
  std::size_t samples = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;
};

/// One JSON object on a single line (no trailing newline).
std::string to_json_line(const VerificationReport& report);

/// max |(J(y,k) − k²) − J(y,0)| over the grid; relative residual divides by 1 + |J(y,0)|.
VerificationReport check_decomposition(const FamilySpec& spec, const std::vector<double>& y_samples,
                                       const std::vector<double>& k_samples, double tolerance = 1e-9);
VerificationReport check_decomposition(const BoseDecomposition& decomposition, const std::vector<double>& y_samples,
                                       const std::vector<double>& k_samples, double tolerance = 1e-9);

/// max |milson_potential − potential_closed_form|; relative residual divides by 1 + |closed form|.
VerificationReport check_master_vs_closed(const FamilySpec& spec, const std::vector<double>& y_samples,
                                          double tolerance = 1e-9);
/// Same, with the master side computed from an explicit (possibly altered) decomposition.
VerificationReport check_master_vs_closed(const FamilySpec& spec, const BoseDecomposition& decomposition,
                                          const std::vector<double>& y_samples, double tolerance = 1e-9);

/// p(y) = Σ aₙyⁿ and q(y) = R³(y) = Σ bₙyⁿ for IwataI with V = −κp/(4q).
struct SymmetryCoefficients {
  std::array<double, 6> a{};
  std::array<double, 7> b{};
};

SymmetryCoefficients symmetry_coefficients(double rho, double sigma, double rho1, double sigma1);

/// max |p(y(x))q(y(−x)) − p(y(−x))q(y(x))| over x samples. The relative
/// residual divides by 1 + |p(y)q(v)| + |p(v)q(y)|. Throws OutOfDomain when −x is not covered.
VerificationReport symmetry_condition(const FamilySpec& iwata1, const CoordinateMap& map,
                                      const std::vector<double>& x_samples, double tolerance = 1e-12);

/// a₀ = … = a₅ = 0 and b₀aₙ − a₀bₙ = 0 (n = 1..5), each to `tolerance`.
bool check_fine_system(double rho, double sigma, double rho1, double sigma1, double tolerance = 1e-12);

struct FineSearchResult {
  std::size_t draws = 0;
  std::size_t solutions = 0;
  std::size_t solutions_outside_ball = 0;
};

/// Uniform draws in [lo, hi]⁴; counts solutions of the fine system and those farther than `ball` from the origin.
FineSearchResult fine_system_search(std::size_t draws, std::uint64_t seed, double lo = -5.0, double hi = 5.0,
                                    double ball = 1e-6);

/// u(x) = |y'|^{-1/2}·exp(∫b/2a dy)·v(y(x)) on the uniform grid x_min + i·step,
/// with v integrated from v = 1, v' = 1/2 at the left end of the map.
struct LiouvilleSolution {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::complex<double>> u;
};

LiouvilleSolution liouville_solution(const FamilySpec& spec, double k, const CoordinateMap& map, double step);

/// max|u'' + (k² − V)u| / max|u| for the Liouville solution at spacing `fd_step`,
/// with u'' from central differences.
VerificationReport schrodinger_residual(const FamilySpec& spec, double k, const CoordinateMap& map,
                                        double fd_step = 1e-3, double tolerance = 1e-5);

/// Uniformly sampled potential V(x₀ + i·step).
struct PotentialTable {
  double x0 = 0.0;
  double step = 1e-3;
  std::vector<double> values;
};

/// Lowest `count` eigenvalues of u'' + (E − V)u = 0 with u = 0 at both table ends,
/// by Numerov integration and bisection on the node count. Throws NotConverged
/// when an upper bracket cannot be found.
std::vector<double> numerov_eigenvalues(const PotentialTable& table, int count, double tolerance = 1e-10);

/// Random valid spec of the given kind: parameters uniform in [−2, 2],
/// |κ| ∈ [0.25, 2], Heun/GHE a ∈ [1.5, 3].
FamilySpec random_spec(FamilyKind kind, std::mt19937_64& rng);

/// `n` points in [lo, hi] at least 1e-2 from singular points and with
/// |R(y)| ≥ 1e-2 times its coefficient scale, drawn uniformly.
std::vector<double> regular_samples(const FamilySpec& spec, double lo, double hi, std::size_t n,
                                    std::mt19937_64& rng);

}  // namespace solvpot
