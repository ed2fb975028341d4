// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "solvpot/bose.hpp"
#include "solvpot/coordmap.hpp"
#include "solvpot/families.hpp"
#include "solvpot/params.hpp"
#include "solvpot/verify.hpp"

using namespace solvpot;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

FamilySpec iwata(FamilyKind kind, double rho, double sigma, double r, double s, double kappa) {
  return FamilySpec(kind, {rho, sigma, r, s, kappa});
}

FamilySpec mpt(double alpha, double v0) {
  const double rho1 = -v0 / (alpha * alpha);
  return iwata(FamilyKind::IwataI, -1, 0, rho1, -rho1 + 0.75, alpha * alpha);
}

double rel(double a, double b) { return std::abs(a - b) / (1 + std::abs(b)); }

// Largest mixed relative difference of two potentials at regular samples of `first`.
double max_potential_gap(const FamilySpec& first, const FamilySpec& second, std::size_t n, std::mt19937_64& rng) {
  double worst = 0;
  for (double y : regular_samples(first, -3, 3, n, rng)) {
    try {
      worst = std::max(worst, rel(potential_closed_form(second, y), potential_closed_form(first, y)));
    } catch (const NearPole&) {
    }
  }
  return worst;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome master_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  double worst = 0;
  bool ok = true;
  for (FamilyKind kind : kAllKinds)
    for (int draw = 0; draw < 20; ++draw) {
      const auto spec = random_spec(kind, rng);
      const auto r = check_master_vs_closed(spec, regular_samples(spec, -3, 3, 200, rng), 1e-9);
      ok = ok && r.passed && r.samples == 200;
      worst = std::max(worst, r.max_rel_residual);
    }
  const double t = seconds_since(t0);
  return {ok && t < 10.0, fmt("10 kinds x 20 specs x 200 y: max rel %.3g (tol 1e-9), %.2f s", worst, t)};
}

Outcome k_independence() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1002);
  double worst = 0;
  bool ok = true;
  for (FamilyKind kind : kAllKinds)
    for (int draw = 0; draw < 20; ++draw) {
      const auto spec = random_spec(kind, rng);
      const auto r = check_decomposition(spec, regular_samples(spec, -3, 3, 200, rng), {0, 0.7, 1, 2.5}, 1e-9);
      ok = ok && r.passed && r.samples == 800;
      worst = std::max(worst, r.max_rel_residual);
    }
  const double t = seconds_since(t0);
  return {ok && t < 10.0, fmt("k in {0,0.7,1,2.5}: max |J-k^2-J0|/(1+|J0|) %.3g (tol 1e-9), %.2f s", worst, t)};
}

Outcome poschl_teller() {
  const auto spec = mpt(1, 2);
  double worst = 0;
  int n = 0;
  for (double x = 0.2; x <= 4.0 + 1e-12; x += 0.001, ++n) {
    const auto m = closed_form_map(Cosh2Map{1.0}, x);
    worst = std::max(worst, std::abs(potential_closed_form(spec, m.y) - 2.0 / m.y));
  }
  return {worst <= 1e-10, fmt("%.0f points on [0.2,4]: max abs error %.3g (tol 1e-10)", n, worst)};
}

Outcome vanishing_sets() {
  double worst = 0;
  for (const auto& s : {iwata(FamilyKind::IwataI, -2, 1, 0, 0, 1), iwata(FamilyKind::IwataI, -1, 0, 0, 0.75, 1),
                        iwata(FamilyKind::IwataI, 0, 0, 0, 0, 1)})
    for (int i = 1; i < 1000; ++i) {
      const double y = 0.05 + 0.9 * i / 1000.0;
      worst = std::max(worst, std::abs(potential_closed_form(s, y)));
    }
  return {worst <= 1e-12, fmt("three sets on (0.05,0.95): max |V| %.3g (tol 1e-12)", worst)};
}

Outcome embedding_chain() {
  std::mt19937_64 rng(1005);
  std::uniform_real_distribution<double> heun_a(1.5, 4.0);
  double to_nat = 0, to_heun = 0, chained = 0;
  for (FamilyKind kind : {FamilyKind::IwataI, FamilyKind::IwataII, FamilyKind::IwataIII}) {
    const auto spec = random_spec(kind, rng);
    const auto nat = embed_iwata_to_natanzon(spec);
    to_nat = std::max(to_nat, max_potential_gap(spec, nat, 100, rng));
    for (int i = 0; i < 3; ++i) {
      const double a = heun_a(rng);
      to_heun = std::max(to_heun, max_potential_gap(nat, embed_natanzon_to_heun(nat, a), 100, rng));
      chained = std::max(chained, max_potential_gap(spec, embed_iwata_to_heun(spec, a), 100, rng));
    }
  }
  return {to_nat <= 1e-9 && to_heun <= 1e-9 && chained <= 1e-9,
          fmt("Iwata->Natanzon %.3g, Natanzon->Heun %.3g, chained %.3g (rel tol 1e-9)", to_nat, to_heun, chained)};
}

Outcome coincidence() {
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> u(-2, 2), mag(0.25, 2);
  double worst = 0;
  bool ok = true;
  for (int draw = 0; draw < 5; ++draw) {
    const double kappa = mag(rng), r = u(rng), r1 = u(rng), s = u(rng), s1 = u(rng);
    const auto i12 = iwata(FamilyKind::IwataI, r, 1, r1, -1, kappa);
    const auto ii12 = iwata(FamilyKind::IwataII, 1, r, 1, r + r1, kappa);
    const auto ii23 = iwata(FamilyKind::IwataII, r, 1, r1, 0, kappa);
    const auto iii23 = iwata(FamilyKind::IwataIII, r, 1, r1, 0, kappa);
    const auto i13 = iwata(FamilyKind::IwataI, 1, s, -1, s1, kappa);
    const auto iii13 = iwata(FamilyKind::IwataIII, 1, s, 1, s + s1, kappa);
    ok = ok && coincidence_check(i12, ii12) && coincidence_check(ii23, iii23) && coincidence_check(i13, iii13);
    worst = std::max({worst, max_potential_gap(i12, ii12, 100, rng), max_potential_gap(ii23, iii23, 100, rng),
                      max_potential_gap(i13, iii13, 100, rng)});
  }
  const double kappa = 0.8;
  const auto t1 = iwata(FamilyKind::IwataI, 1, 1, -1, -1, kappa);
  const auto t2 = iwata(FamilyKind::IwataII, 1, 1, 1, 0, kappa);
  const auto t3 = iwata(FamilyKind::IwataIII, 1, 1, 1, 0, kappa);
  const bool triple = coincidence_check(t1, t2) && coincidence_check(t2, t3) && coincidence_check(t1, t3);
  worst = std::max({worst, max_potential_gap(t1, t2, 100, rng), max_potential_gap(t1, t3, 100, rng)});
  return {ok && triple && worst <= 1e-10,
          std::string(triple ? "triple set ok" : "triple set FAILED") +
              fmt(", three conditions x 5 draws: max gap %.3g (tol 1e-10)", worst)};
}

Outcome coordinate_maps() {
  struct Case {
    FamilySpec spec;
    double x0, y0;
    ClosedFormMap exact;
  };
  const double c1 = std::cosh(1.0);
  const Case cases[] = {
      {iwata(FamilyKind::IwataI, 0, 0, 0, 0, 0.25), 0.0, 2.0, ExpShiftMap{1.0, 0.25, 1}},
      {FamilySpec(FamilyKind::Natanzon, {0, 4, 4, 0, 0, 0}), 0.0, 0.5, LogisticMap{0.5}},
      {mpt(1, 2), 1.0, c1 * c1, Cosh2Map{1.0}},
  };
  double map_err = 0, ode_res = 0;
  for (const auto& c : cases) {
    const auto map = solve_map(c.spec, c.x0, c.y0, 1, c.x0 + 1.0);
    for (int i = 0; i <= 200; ++i) {
      const double x = c.x0 + i / 200.0;
      const double exact = closed_form_map(c.exact, x).y;
      map_err = std::max(map_err, std::abs(map_eval(map, x).y - exact) / std::max(1.0, std::abs(exact)));
    }
    const RationalFunction i1(family_r_poly(c.spec), family_q_poly(c.spec));
    for (const auto& s : map.samples()) ode_res = std::max(ode_res, std::abs(s.dy * s.dy * i1(s.y) - 1));
  }
  return {map_err <= 1e-6 && ode_res <= 1e-7,
          fmt("exp/logistic/cosh2: max map error %.3g (tol 1e-6), max |y'^2 I1 - 1| %.3g (tol 1e-7)", map_err,
              ode_res)};
}

Outcome symmetry() {
  const auto z = symmetry_coefficients(0, 0, 0, 0);
  bool zero = z.b[6] == 1.0;
  for (double a : z.a) zero = zero && a == 0.0;
  for (int n = 0; n < 6; ++n) zero = zero && z.b[n] == 0.0;
  const auto map = sample_closed_form(ExpShiftMap{1.0, 0.25, 1}, -2.0, 2.0, 1e-3);
  std::vector<double> xs;
  for (int i = 0; i <= 100; ++i) xs.push_back(-1.9 + 3.8 * i / 100.0);
  const auto r = symmetry_condition(iwata(FamilyKind::IwataI, 0, 0, -1, 1, 0.25), map, xs, 1e-12);
  const auto search = fine_system_search(100000, 1008);
  return {zero && r.passed && search.solutions_outside_ball == 0,
          fmt("zero coefficients %.0f, symmetric example residual %.3g (tol 1e-12), fine-system hits outside "
              "ball %.0f / 1e5",
              zero, r.max_rel_residual, static_cast<double>(search.solutions_outside_ball))};
}

Outcome schrodinger() {
  const auto pt_map = sample_closed_form(Cosh2Map{1.0}, 0.2, 4.0, 1e-3);
  double worst = schrodinger_residual(mpt(1, 2), 1.0, pt_map).max_rel_residual;
  std::mt19937_64 rng(1009);
  std::uniform_real_distribution<double> big(0.5, 2.0), small(-0.1, 0.1), f(-1.0, 1.0), a(1.5, 3.0);
  for (int draw = 0; draw < 5; ++draw) {
    const FamilySpec spec(FamilyKind::Heun, {a(rng), big(rng), big(rng), big(rng), small(rng), small(rng), f(rng),
                                             f(rng), f(rng), f(rng), f(rng)});
    const auto map = solve_map(spec, 0.0, 0.3, 1, 0.4);
    worst = std::max(worst, schrodinger_residual(spec, 1.0, map).max_rel_residual);
  }
  PotentialTable t{-12.0, 1e-3, {}};
  for (int i = 0; i <= 24000; ++i) t.values.push_back(-6.0 / std::pow(std::cosh(t.x0 + i * t.step), 2));
  const auto e = numerov_eigenvalues(t, 2);
  const double eig_err = std::max(std::abs(e[0] + 4.0), std::abs(e[1] + 1.0));
  return {worst <= 1e-5 && eig_err <= 1e-4,
          fmt("max residual %.3g (tol 1e-5) over MPT + 5 Heun; Numerov {-4,-1} error %.3g (tol 1e-4)", worst,
              eig_err)};
}

Outcome parameter_maps() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> ks(1e-3, 3.0);
  std::uniform_int_distribution<int> pick(0, 2);
  const FamilyKind classes[] = {FamilyKind::IwataI, FamilyKind::IwataII, FamilyKind::IwataIII};
  double worst = 0;
  for (int draw = 0; draw < 100; ++draw) {
    const auto spec = random_spec(classes[pick(rng)], rng);
    const double k = ks(rng);
    worst = std::max(worst, class_constraint_residual(spec, hypergeometric_params(spec, k), k));
  }
  const auto t = hypergeometric_params(iwata(FamilyKind::IwataI, 0, 0, 0, 0, 1), 1.0);
  const bool exact = t.a == cplx(1, 1) && t.b == cplx(1, 0) && t.c == cplx(2, 0);
  return {worst <= 1e-10 && exact,
          fmt("100 draws: max constraint residual %.3g (tol 1e-10); worked triple exact: %.0f", worst, exact)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"master-oracle equivalence", master_oracle},
      {"k-independence", k_independence},
      {"Poschl-Teller anchor", poschl_teller},
      {"vanishing sets", vanishing_sets},
      {"embedding chain", embedding_chain},
      {"coincidence conditions", coincidence},
      {"coordinate maps", coordinate_maps},
      {"symmetry theorem", symmetry},
      {"end-to-end Schrodinger", schrodinger},
      {"parameter maps", parameter_maps},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::printf("criterion %2d %-28s %s  %s\n", index, name, o.passed ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
