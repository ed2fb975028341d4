#include "solvpot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>

#include "json.hpp"

#include "solvpot/params.hpp"

namespace solvpot {
namespace {

using cplx = std::complex<double>;

struct Accumulator {
  std::size_t samples = 0;
  std::size_t skipped = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;

  void add(double abs_res, double scale) {
    ++samples;
    // NaN must not hide: treat it as an infinite residual.
    if (std::isnan(abs_res)) abs_res = std::numeric_limits<double>::infinity();
    max_abs = std::max(max_abs, abs_res);
    max_rel = std::max(max_rel, abs_res / (1.0 + std::abs(scale)));
  }

  VerificationReport report(std::string name, double tolerance, std::string notes = {}) const {
    if (skipped > 0) {
      if (!notes.empty()) notes += "; ";
      notes += std::to_string(skipped) + " samples skipped near poles";
    }
    return {std::move(name), samples, max_abs, max_rel, tolerance, samples > 0 && max_rel <= tolerance,
            std::move(notes)};
  }
};

double horner(const double* c, std::size_t n, double y) {
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) acc = acc * y + c[i];
  return acc;
}

}  // namespace

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["samples"] = r.samples;
  j["max_abs_residual"] = r.max_abs_residual;
  j["max_rel_residual"] = r.max_rel_residual;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["notes"] = r.notes;
  return j.dump();
}

VerificationReport check_decomposition(const BoseDecomposition& d, const std::vector<double>& y_samples,
                                       const std::vector<double>& k_samples, double tolerance) {
  Accumulator acc;
  for (double y : y_samples) {
    try {
      const double j0 = j_value(d, 0.0, y);
      for (double k : k_samples) acc.add(std::abs(j_value(d, k, y) - k * k - j0), j0);
    } catch (const NearPole&) {
      ++acc.skipped;
    }
  }
  return acc.report("decomposition", tolerance);
}

VerificationReport check_decomposition(const FamilySpec& spec, const std::vector<double>& y_samples,
                                       const std::vector<double>& k_samples, double tolerance) {
  std::vector<double> regular;
  std::size_t dropped = 0;
  const auto sing = spec.singular_points();
  for (double y : y_samples) {
    const bool bad = std::any_of(sing.begin(), sing.end(), [&](double s) { return std::abs(y - s) <= kSingularGuard; });
    bad ? ++dropped : (regular.push_back(y), 0);
  }
  auto r = check_decomposition(decompose(spec), regular, k_samples, tolerance);
  r.check_name = "decomposition:" + std::string(kind_name(spec.kind()));
  if (dropped > 0) r.notes += (r.notes.empty() ? "" : "; ") + std::to_string(dropped) + " samples at singular points";
  return r;
}

VerificationReport check_master_vs_closed(const FamilySpec& spec, const BoseDecomposition& d,
                                          const std::vector<double>& y_samples, double tolerance) {
  Accumulator acc;
  for (double y : y_samples) {
    try {
      const double closed = potential_closed_form(spec, y);
      acc.add(std::abs(milson_potential(d, y) - closed), closed);
    } catch (const NearPole&) {
      ++acc.skipped;
    }
  }
  return acc.report("master_vs_closed:" + std::string(kind_name(spec.kind())), tolerance);
}

VerificationReport check_master_vs_closed(const FamilySpec& spec, const std::vector<double>& y_samples,
                                          double tolerance) {
  return check_master_vs_closed(spec, decompose(spec), y_samples, tolerance);
}

SymmetryCoefficients symmetry_coefficients(double rho, double sigma, double rho1, double sigma1) {
  const double r = rho, s = sigma, r1 = rho1, s1 = sigma1;
  SymmetryCoefficients c;
  c.a[0] = 4 * s * s * (s + s1 - 1);
  c.a[1] = 4 * s * (r1 * s + 3 * r * s + 2 * s1 * r - 3 * r);
  c.a[2] = 12 * r * s + 12 * s * s + 8 * r * r1 * s - 3 * r * r + 4 * s1 * r * r + 12 * r * r * s - 24 * s + 8 * s1 * s;
  c.a[3] = 16 * r * s + 40 * s + 8 * s1 * r + 4 * r1 * r * r + 8 * r1 * s + 4 * r * r * r + 2 * r * r - 8 * r;
  c.a[4] = 9 * r * r + 4 * s1 - 12 * s + 8 * r1 * r + 12 * r;
  c.a[5] = 4 * r1;
  c.b = {s * s * s, 3 * r * s * s, 3 * r * r * s + 3 * s * s, r * r * r + 6 * r * s, 3 * s + 3 * r * r, 3 * r, 1.0};
  return c;
}

VerificationReport symmetry_condition(const FamilySpec& spec, const CoordinateMap& map,
                                      const std::vector<double>& x_samples, double tolerance) {
  if (spec.kind() != FamilyKind::IwataI) throw InvalidSpec("symmetry_condition needs an IwataI spec");
  const auto c = symmetry_coefficients(spec["rho"], spec["sigma"], spec["rho1"], spec["sigma1"]);
  auto p = [&](double y) { return horner(c.a.data(), c.a.size(), y); };
  auto q = [&](double y) { return horner(c.b.data(), c.b.size(), y); };
  Accumulator acc;
  for (double x : x_samples) {
    const double y = map_eval(map, x).y;
    const double v = map_eval(map, -x).y;
    const double lhs = p(y) * q(v), rhs = p(v) * q(y);
    acc.add(std::abs(lhs - rhs), std::abs(lhs) + std::abs(rhs));
  }
  return acc.report("symmetry_condition", tolerance);
}

bool check_fine_system(double rho, double sigma, double rho1, double sigma1, double tolerance) {
  const auto c = symmetry_coefficients(rho, sigma, rho1, sigma1);
  for (double a : c.a)
    if (std::abs(a) > tolerance) return false;
  for (int n = 1; n <= 5; ++n)
    if (std::abs(c.b[0] * c.a[n] - c.a[0] * c.b[n]) > tolerance) return false;
  return true;
}

FineSearchResult fine_system_search(std::size_t draws, std::uint64_t seed, double lo, double hi, double ball) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  FineSearchResult res;
  for (; res.draws < draws; ++res.draws) {
    const double r = u(rng), s = u(rng), r1 = u(rng), s1 = u(rng);
    if (!check_fine_system(r, s, r1, s1)) continue;
    ++res.solutions;
    if (std::sqrt(r * r + s * s + r1 * r1 + s1 * s1) > ball) ++res.solutions_outside_ball;
  }
  return res;
}

namespace {

// State (v, dv/dy, φ) of the canonical equation a v'' + b v' + c v = 0 with φ' = b/(2a).
struct VState {
  cplx v, dv, phi;
};

struct CanonicalField {
  CanonicalEquation eq;

  VState rhs(double y, const VState& s) const {
    const cplx a = eq.a(y), b = eq.b(y), c = eq.c(y);
    if (std::abs(a) < kDefaultPoleGuard) throw NearPole("canonical equation is singular at y=" + std::to_string(y));
    return {s.dv, -(b * s.dv + c * s.v) / a, b / (2.0 * a)};
  }

  VState step(double y, const VState& s, double h) const {
    auto axpy = [](const VState& x, double t, const VState& d) {
      return VState{x.v + t * d.v, x.dv + t * d.dv, x.phi + t * d.phi};
    };
    const VState k1 = rhs(y, s);
    const VState k2 = rhs(y + 0.5 * h, axpy(s, 0.5 * h, k1));
    const VState k3 = rhs(y + 0.5 * h, axpy(s, 0.5 * h, k2));
    const VState k4 = rhs(y + h, axpy(s, h, k3));
    return {s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
            s.dv + h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv),
            s.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi)};
  }
};

constexpr int kSubsteps = 8;

}  // namespace

LiouvilleSolution liouville_solution(const FamilySpec& spec, double k, const CoordinateMap& map, double step) {
  if (!(step > 0.0)) throw InvalidSpec("step must be positive");
  const auto n = static_cast<std::size_t>(std::floor((map.x_max() - map.x_min()) / step + 1e-9));
  if (n < 2) throw InvalidSpec("map is shorter than two grid steps");
  const CanonicalField field{canonical_equation(spec, k)};
  LiouvilleSolution sol;
  sol.x.resize(n + 1);
  sol.y.resize(n + 1);
  sol.u.resize(n + 1);
  VState s{1.0, 0.5, 0.0};
  for (std::size_t i = 0; i <= n; ++i) {
    sol.x[i] = std::min(map.x_min() + static_cast<double>(i) * step, map.x_max());
    const MapPoint m = map_eval(map, sol.x[i]);
    if (i > 0) {
      const double h = (m.y - sol.y[i - 1]) / kSubsteps;
      for (int j = 0; j < kSubsteps; ++j) s = field.step(sol.y[i - 1] + j * h, s, h);
    }
    if (!(std::abs(m.dy) > 0.0)) throw NearPole("map derivative vanishes at x=" + std::to_string(sol.x[i]));
    sol.y[i] = m.y;
    sol.u[i] = std::exp(s.phi) * s.v / std::sqrt(std::abs(m.dy));
  }
  return sol;
}

VerificationReport schrodinger_residual(const FamilySpec& spec, double k, const CoordinateMap& map, double fd_step,
                                        double tolerance) {
  const LiouvilleSolution sol = liouville_solution(spec, k, map, fd_step);
  const auto& u = sol.u;
  const std::size_t n = u.size() - 1;
  double u_max = 0.0;
  for (const cplx& z : u) u_max = std::max(u_max, std::abs(z));
  Accumulator acc;
  const double h2 = fd_step * fd_step;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = potential_closed_form(spec, sol.y[i]);
    const cplx upp = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / h2;
    acc.add(std::abs(upp + (k * k - v) * u[i]) / u_max, 0.0);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "k=%.6g fd_step=%.3g x=[%.6g, %.6g]", k, fd_step, sol.x.front(), sol.x.back());
  return acc.report("schrodinger_residual:" + std::string(kind_name(spec.kind())), tolerance, buf);
}

namespace {

// Number of sign changes of the left-shooting Numerov solution over the grid;
// equals the count of Dirichlet eigenvalues below E.
int numerov_nodes(const PotentialTable& t, double e) {
  const auto& v = t.values;
  const double c = t.step * t.step / 12.0;
  auto f = [&](std::size_t i) { return 1.0 + c * (e - v[i]); };
  double u_prev = 0.0, u = 1e-6;
  double f_prev = f(0), f_cur = f(1);
  int nodes = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double f_next = f(i + 1);
    const double u_next = ((12.0 - 10.0 * f_cur) * u - f_prev * u_prev) / f_next;
    if ((u_next < 0.0) != (u < 0.0) || u_next == 0.0) ++nodes;
    u_prev = u;
    u = u_next;
    if (std::abs(u) > 1e100) {
      u *= 1e-100;
      u_prev *= 1e-100;
    }
    f_prev = f_cur;
    f_cur = f_next;
  }
  return nodes;
}

}  // namespace

std::vector<double> numerov_eigenvalues(const PotentialTable& table, int count, double tolerance) {
  if (count < 1) throw InvalidSpec("count must be at least 1");
  if (table.values.size() < 3 || !(table.step > 0.0)) throw InvalidSpec("potential table needs 3+ samples");
  for (double v : table.values)
    if (!std::isfinite(v)) throw InvalidSpec("potential table has non-finite values");
  const auto [vmin_it, vmax_it] = std::minmax_element(table.values.begin(), table.values.end());
  const double lo0 = *vmin_it;
  const double width = table.step * static_cast<double>(table.values.size() - 1);

  double hi = std::max(*vmax_it, lo0) + 1.0;
  double grow = std::max(1.0, std::pow(M_PI * count / width, 2.0));
  int tries = 0;
  while (numerov_nodes(table, hi) < count) {
    hi += grow;
    grow *= 2.0;
    if (++tries > 200) throw NotConverged("could not bracket eigenvalue " + std::to_string(count - 1));
  }

  std::vector<double> out;
  for (int n = 0; n < count; ++n) {
    double a = lo0, b = hi;
    int iter = 0;
    while (b - a > tolerance * std::max(1.0, std::abs(b))) {
      const double mid = 0.5 * (a + b);
      (numerov_nodes(table, mid) > n ? b : a) = mid;
      if (++iter > 200) throw NotConverged("bisection stalled for eigenvalue " + std::to_string(n));
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

FamilySpec random_spec(FamilyKind kind, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), mag(0.25, 2.0), pos(1.5, 3.0);
  std::bernoulli_distribution coin(0.5);
  const auto names = parameter_names(kind);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<double> p(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == "kappa")
        p[i] = coin(rng) ? mag(rng) : -mag(rng);
      else if (names[i] == "a" && (kind == FamilyKind::Heun || kind == FamilyKind::GeneralizedHeun))
        p[i] = pos(rng);
      else
        p[i] = u(rng);
    }
    try {
      return FamilySpec(kind, std::move(p));
    } catch (const InvalidSpec&) {
    }
  }
  throw InvalidSpec("could not draw a valid random spec");
}

std::vector<double> regular_samples(const FamilySpec& spec, double lo, double hi, std::size_t n,
                                    std::mt19937_64& rng) {
  const Polynomial r = family_r_poly(spec);
  double coeff_scale = 0.0;
  for (double c : r.coeffs()) coeff_scale = std::max(coeff_scale, std::abs(c));
  const auto sing = spec.singular_points();
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t attempt = 0; out.size() < n; ++attempt) {
    if (attempt > 1000 * n) throw InvalidSpec("no regular samples in the requested interval");
    const double y = u(rng);
    if (std::any_of(sing.begin(), sing.end(), [&](double s) { return std::abs(y - s) < 1e-2; })) continue;
    const double scale = coeff_scale * std::pow(std::max(1.0, std::abs(y)), std::max(r.degree(), 0));
    if (std::abs(r(y)) < 1e-2 * scale) continue;
    out.push_back(y);
  }
  return out;
}

}  // namespace solvpot
