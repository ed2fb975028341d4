#pragma once

// Coordinate maps y(x) solving (y')² = g(y) = 1/I₁(y) = Q(y)/R(y).

#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "solvpot/families.hpp"

namespace solvpot {

/// One knot of a sampled map. d2y = g'(y)/2 is kept for Hermite interpolation of dy.
struct MapSample {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;
  double d2y = 0.0;
};

struct MapPoint {
  double y = 0.0;
  double dy = 0.0;
};

/// Sampled monotone solution of the coordinate ODE on a closed x-interval.
class CoordinateMap {
 public:
  /// Samples must have strictly increasing x and a constant sign of dy matching `branch`.
  CoordinateMap(std::vector<MapSample> samples, int branch);

  const std::vector<MapSample>& samples() const noexcept { return samples_; }
  int branch() const noexcept { return branch_; }
  double x_min() const noexcept { return samples_.front().x; }
  double x_max() const noexcept { return samples_.back().x; }
  bool contains(double x) const noexcept { return x >= x_min() && x <= x_max(); }

  /// True when integration stopped before the requested end point.
  bool truncated() const noexcept { return truncated_; }
  void set_truncated(bool t) noexcept { truncated_ = t; }

 private:
  std::vector<MapSample> samples_;
  int branch_;
  bool truncated_ = false;
};

struct SolveOptions {
  double local_tolerance = 1e-8;
  double min_step = 1e-12;
  double guard = kSingularGuard;
};

/// Integrates dy/dx = branch·√g(y) from (x0, y0) to x_end with classical RK4 at
/// nominal `step`, halving while a step-doubling comparison exceeds the local
/// tolerance. Stops early (truncated map) within `guard` of a zero of g.
CoordinateMap solve_map(const FamilySpec& spec, double x0, double y0, int branch, double x_end,
                        double step = 1e-3, const SolveOptions& options = {});

/// Cubic Hermite interpolation of (y, dy) between the bracketing knots.
MapPoint map_eval(const CoordinateMap& map, double x);

/// g(y) = Q(y)/R(y) for the family.
double map_g(const FamilySpec& spec, double y);

/// y = cosh²(αx)
struct Cosh2Map {
  double alpha = 1.0;
};

/// y = 1 + C·exp(sign·2√κ·x)
struct ExpShiftMap {
  double c = 1.0;
  double kappa = 0.25;
  int sign = 1;
};

/// Logistic solution of y' = y(1-y) with y(0) = y0.
struct LogisticMap {
  double y0 = 0.5;
};

using ClosedFormMap = std::variant<Cosh2Map, ExpShiftMap, LogisticMap>;

/// Throws InvalidSpec for α ≤ 0, C = 0, κ ≤ 0, sign ∉ {±1}, y0 ∉ (0,1).
MapPoint closed_form_map(const ClosedFormMap& map, double x);

/// Samples a closed-form map on [x_begin, x_end] (uniform knots, analytic y'').
CoordinateMap sample_closed_form(const ClosedFormMap& map, double x_begin, double x_end, double step);

/// Writes the map as CSV with header x,y,dy (15 significant digits).
void write_map_csv(std::ostream& out, const CoordinateMap& map);

}  // namespace solvpot
