#include "solvpot/coordmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace solvpot {
namespace {

// Raised inside a trial step that leaves the region where √g is real.
struct Forbidden {};

class MapField {
 public:
  MapField(const FamilySpec& spec, int branch)
      : g_(family_q_poly(spec), family_r_poly(spec)), branch_(branch), singular_(spec.singular_points()) {}

  double slope(double y) const {
    double g;
    try {
      g = g_(y);
    } catch (const NearPole&) {
      throw Forbidden{};
    }
    if (!(g > 0.0) || !std::isfinite(g)) throw Forbidden{};
    return branch_ * std::sqrt(g);
  }

  MapSample sample(double x, double y) const {
    const Jet2 j = g_.jet(y);
    return {x, y, branch_ * std::sqrt(std::max(j.value, 0.0)), 0.5 * j.d1};
  }

  double g(double y) const { return g_(y); }

  bool near_singular(double y, double guard) const {
    return std::any_of(singular_.begin(), singular_.end(), [&](double s) { return std::abs(y - s) <= guard; });
  }

 private:
  RationalFunction g_;
  int branch_;
  std::vector<double> singular_;
};

double rk4(const MapField& f, double y, double h) {
  const double k1 = f.slope(y);
  const double k2 = f.slope(y + 0.5 * h * k1);
  const double k3 = f.slope(y + 0.5 * h * k2);
  const double k4 = f.slope(y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_branch(int branch) {
  if (branch != 1 && branch != -1) throw InvalidSpec("branch must be +1 or -1");
}

std::string fmt15(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

CoordinateMap::CoordinateMap(std::vector<MapSample> samples, int branch) : samples_(std::move(samples)), branch_(branch) {
  check_branch(branch_);
  if (samples_.empty()) throw InvalidSpec("coordinate map needs at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (i > 0 && !(samples_[i].x > samples_[i - 1].x)) throw InvalidSpec("map samples must have increasing x");
    if (samples_[i].dy * branch_ < 0.0) throw InvalidSpec("map is not monotone along its branch");
  }
}

double map_g(const FamilySpec& spec, double y) {
  return RationalFunction(family_q_poly(spec), family_r_poly(spec))(y);
}

CoordinateMap solve_map(const FamilySpec& spec, double x0, double y0, int branch, double x_end, double step,
                        const SolveOptions& options) {
  check_branch(branch);
  if (!(step > 0.0)) throw InvalidSpec("step must be positive");
  const MapField field(spec, branch);
  if (field.near_singular(y0, options.guard)) throw BadStart("y0 is within guard of a zero of g");
  double g0;
  try {
    g0 = field.g(y0);
  } catch (const NearPole&) {
    throw BadStart("g(y0) is singular (R(y0) = 0)");
  }
  if (!(g0 > 0.0)) throw BadStart("g(y0) = " + std::to_string(g0) + " is not positive");

  const double dir = x_end >= x0 ? 1.0 : -1.0;
  std::vector<MapSample> out{field.sample(x0, y0)};
  bool truncated = false;
  double x = x0, y = y0, h = step;
  while (dir * (x_end - x) > 1e-14 * std::max(1.0, std::abs(x_end))) {
    const double remaining = dir * (x_end - x);
    const double h_try = std::min(h, remaining);
    double full = 0.0, half = 0.0;
    bool ok = true;
    try {
      full = rk4(field, y, dir * h_try);
      half = rk4(field, rk4(field, y, 0.5 * dir * h_try), 0.5 * dir * h_try);
    } catch (const Forbidden&) {
      ok = false;
    }
    const double err = ok ? std::abs(full - half) : INFINITY;
    const double tol = options.local_tolerance * std::max(1.0, std::abs(y));
    if (!(err <= tol)) {
      h = 0.5 * h_try;
      if (h < options.min_step) {
        if (field.near_singular(y, 1e3 * options.guard)) {
          truncated = true;
          break;
        }
        throw StalledMap("step fell below " + std::to_string(options.min_step) + " at y=" + std::to_string(y));
      }
      continue;
    }
    const double y_new = half + (half - full) / 15.0;
    if (field.near_singular(y_new, options.guard)) {
      truncated = true;
      break;
    }
    x = (h_try == remaining) ? x_end : x + dir * h_try;
    y = y_new;
    out.push_back(field.sample(x, y));
    if (err < tol / 32.0 && h < step) h = std::min(step, 2.0 * h);
  }
  if (dir < 0) std::reverse(out.begin(), out.end());
  CoordinateMap map(std::move(out), branch);
  map.set_truncated(truncated);
  return map;
}

MapPoint map_eval(const CoordinateMap& map, double x) {
  if (!map.contains(x))
    throw OutOfDomain("x=" + std::to_string(x) + " outside [" + std::to_string(map.x_min()) + ", " +
                      std::to_string(map.x_max()) + "]");
  const auto& s = map.samples();
  auto it = std::lower_bound(s.begin(), s.end(), x, [](const MapSample& m, double v) { return m.x < v; });
  if (it != s.end() && it->x == x) return {it->y, it->dy};
  const MapSample& b = *it;
  const MapSample& a = *(it - 1);
  const double h = b.x - a.x;
  const double t = (x - a.x) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t, h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return {h00 * a.y + h10 * h * a.dy + h01 * b.y + h11 * h * b.dy,
          h00 * a.dy + h10 * h * a.d2y + h01 * b.dy + h11 * h * b.d2y};
}

namespace {

struct ClosedFormSample {
  double y, dy, d2y;
};

ClosedFormSample closed_form_full(const ClosedFormMap& map, double x) {
  return std::visit(
      [x](const auto& m) -> ClosedFormSample {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Cosh2Map>) {
          if (!(m.alpha > 0.0)) throw InvalidSpec("cosh2 map needs alpha > 0");
          const double c = std::cosh(m.alpha * x);
          return {c * c, m.alpha * std::sinh(2.0 * m.alpha * x), 2.0 * m.alpha * m.alpha * std::cosh(2.0 * m.alpha * x)};
        } else if constexpr (std::is_same_v<M, ExpShiftMap>) {
          if (m.c == 0.0) throw InvalidSpec("expshift map needs C != 0");
          if (!(m.kappa > 0.0)) throw InvalidSpec("expshift map needs kappa > 0");
          if (m.sign != 1 && m.sign != -1) throw InvalidSpec("expshift sign must be +1 or -1");
          const double rate = m.sign * 2.0 * std::sqrt(m.kappa);
          const double e = m.c * std::exp(rate * x);
          return {1.0 + e, rate * e, rate * rate * e};
        } else {
          if (!(m.y0 > 0.0 && m.y0 < 1.0)) throw InvalidSpec("logistic map needs 0 < y0 < 1");
          const double y = 1.0 / (1.0 + (1.0 - m.y0) / m.y0 * std::exp(-x));
          const double dy = y * (1.0 - y);
          return {y, dy, dy * (1.0 - 2.0 * y)};
        }
      },
      map);
}

}  // namespace

MapPoint closed_form_map(const ClosedFormMap& map, double x) {
  const auto s = closed_form_full(map, x);
  return {s.y, s.dy};
}

CoordinateMap sample_closed_form(const ClosedFormMap& map, double x_begin, double x_end, double step) {
  if (!(x_end > x_begin) || !(step > 0.0)) throw InvalidSpec("sample_closed_form needs x_begin < x_end, step > 0");
  const auto n = static_cast<std::size_t>(std::ceil((x_end - x_begin) / step - 1e-9));
  std::vector<MapSample> samples;
  samples.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = i == n ? x_end : x_begin + static_cast<double>(i) * step;
    const auto s = closed_form_full(map, x);
    samples.push_back({x, s.y, s.dy, s.d2y});
  }
  int branch = 1;
  for (const auto& s : samples)
    if (s.dy != 0.0) {
      branch = s.dy > 0 ? 1 : -1;
      break;
    }
  return CoordinateMap(std::move(samples), branch);
}

void write_map_csv(std::ostream& out, const CoordinateMap& map) {
  out << "x,y,dy\n";
  for (const auto& s : map.samples()) out << fmt15(s.x) << ',' << fmt15(s.y) << ',' << fmt15(s.dy) << '\n';
}

}  // namespace solvpot
