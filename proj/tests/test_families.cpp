#include <cmath>
#include <random>

#include "doctest.h"
#include "solvpot/bose.hpp"
#include "solvpot/coordmap.hpp"
#include "solvpot/families.hpp"

using namespace solvpot;

namespace {

FamilySpec iwata1(double rho, double sigma, double rho1, double sigma1, double kappa) {
  return FamilySpec(FamilyKind::IwataI, {rho, sigma, rho1, sigma1, kappa});
}

FamilySpec mpt(double alpha, double v0) {
  const double rho1 = -v0 / (alpha * alpha);
  return iwata1(-1, 0, rho1, -rho1 + 0.75, alpha * alpha);
}

}  // namespace

TEST_CASE("kind names and aliases") {
  for (FamilyKind k : kAllKinds) CHECK(kind_from_name(kind_name(k)) == k);
  CHECK(kind_from_name("iwata2") == FamilyKind::IwataII);
  CHECK(kind_from_name("GHE") == FamilyKind::GeneralizedHeun);
  CHECK_THROWS_AS(kind_from_name("laguerre"), InvalidSpec);
  CHECK(parameter_names(FamilyKind::GeneralizedHeun).size() == 15);
  CHECK(parameter_names(FamilyKind::Heun).size() == 11);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(FamilySpec(FamilyKind::IwataI, {0, 0, 0, 0}), InvalidSpec);
  CHECK_THROWS_AS(iwata1(0, 0, 0, 0, 0), InvalidSpec);
  CHECK_THROWS_AS(iwata1(0, 0, 0, NAN, 1), InvalidSpec);
  std::vector<double> heun(11, 0.0);
  heun[1] = 1;
  heun[0] = 1.0;
  CHECK_THROWS_AS(FamilySpec(FamilyKind::Heun, heun), InvalidSpec);
  heun[0] = 0.0;
  CHECK_THROWS_AS(FamilySpec(FamilyKind::Heun, heun), InvalidSpec);
  heun[0] = 2.0;
  heun[1] = 0.0;
  CHECK_THROWS_AS(FamilySpec(FamilyKind::Heun, heun), InvalidSpec);  // R ≡ 0
  CHECK_THROWS_AS(FamilySpec::from_named(FamilyKind::IwataI, {{"rho", 1}}), InvalidSpec);
}

TEST_CASE("family_r_poly examples") {
  CHECK(family_r_poly(iwata1(-1, 0, 5, 7, 1)) == Polynomial{0, -1, 1});
  std::vector<double> heun(11, 0.0);
  heun[0] = 2;
  heun[1] = 1;
  const Polynomial r = family_r_poly(FamilySpec(FamilyKind::Heun, heun));
  CHECK(r == Polynomial{4, -12, 13, -6, 1});
  CHECK(family_r_poly(FamilySpec(FamilyKind::TriconfluentHeun, {1, 0, 1, 0, 0, 0})) == Polynomial{1, 0, 1});
}

TEST_CASE("family_r_poly degree bound") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.5, 2);
  for (FamilyKind k : kAllKinds) {
    std::vector<double> p(parameter_names(k).size());
    for (double& x : p) x = u(rng);
    if (k == FamilyKind::Heun || k == FamilyKind::GeneralizedHeun) p[0] = 2.5;
    CHECK(family_r_poly(FamilySpec(k, p)).degree() <= max_r_degree(k));
  }
}

TEST_CASE("family_s_poly examples") {
  CHECK(family_s_poly(FamilySpec(FamilyKind::BiconfluentHeun, {1, 0, 0, 0, 0, 0, 0, 0})) ==
        Polynomial{0, 0, 0, 0, -4});
  CHECK(family_s_poly(FamilySpec(FamilyKind::Natanzon, {1, 1, 1, -1, 0, -1})) == Polynomial{0, 0, -1});
  CHECK(family_s_poly(FamilySpec(FamilyKind::TriconfluentHeun, {1, 0, 1, 0, 0, 0})) ==
        Polynomial{0, 0, 0, 0, -9});
}

TEST_CASE("singular points") {
  CHECK(iwata1(0, 0, 0, 0, 1).singular_points() == std::vector<double>{0, 1});
  CHECK(template_spec(FamilyKind::Heun).singular_points() == std::vector<double>{0, 1, 2});
  CHECK(template_spec(FamilyKind::BiconfluentHeun).singular_points() == std::vector<double>{0});
  CHECK(template_spec(FamilyKind::TriconfluentHeun).singular_points().empty());
}

TEST_CASE("vanishing IwataI sets") {
  for (const auto& s : {iwata1(-2, 1, 0, 0, 1), iwata1(-1, 0, 0, 0.75, 1), iwata1(0, 0, 0, 0, 1)})
    for (double y = 0.05; y < 0.96; y += 0.01) CHECK(std::abs(potential_closed_form(s, y)) <= 1e-12);
}

TEST_CASE("modified Poschl-Teller anchor") {
  const double y = std::cosh(1.0) * std::cosh(1.0);
  CHECK(y == doctest::Approx(2.381098).epsilon(1e-6));
  CHECK(potential_closed_form(mpt(1, 2), y) == doctest::Approx(0.839949).epsilon(1e-6));
  for (double alpha : {0.5, 1.0, 1.7})
    for (double x = 0.2; x <= 4.0; x += 0.1) {
      const double c = std::cosh(alpha * x);
      CHECK(std::abs(potential_closed_form(mpt(alpha, 2), c * c) - 2 / (c * c)) <= 1e-10);
    }
}

TEST_CASE("potential along closed-form maps") {
  const auto map = sample_closed_form(Cosh2Map{1.0}, 0.5, 2.0, 0.01);
  CHECK(potential_on_map(mpt(1, 2), map, 1.0) == doctest::Approx(0.839949).epsilon(1e-6));
  CHECK(std::abs(potential_on_map(iwata1(-2, 1, 0, 0, 1), map, 1.3)) <= 1e-12);
  CHECK_THROWS_AS(potential_on_map(mpt(1, 2), map, 3.0), OutOfDomain);

  // V = κσ₁eˣ/(1+eˣ)²; with κ = 1/4 and σ₁ = 1 this is 1/16 at x = 0.
  const auto sym = sample_closed_form(ExpShiftMap{1.0, 0.25, 1}, -2.0, 2.0, 0.01);
  const auto s = iwata1(0, 0, -1, 1, 0.25);
  CHECK(potential_on_map(s, sym, 0.0) == doctest::Approx(0.0625).epsilon(1e-12));
  for (double x : {-1.5, -0.3, 0.8}) {
    const double e = std::exp(x);
    CHECK(potential_on_map(s, sym, x) == doctest::Approx(0.25 * e / ((1 + e) * (1 + e))).epsilon(1e-10));
  }
}

TEST_CASE("closed form rejects singular points and zeros of R") {
  const auto s = mpt(1, 2);
  CHECK_THROWS_AS(potential_closed_form(s, 1.0), NearPole);
  CHECK_THROWS_AS(potential_closed_form(s, 0.0), NearPole);
  CHECK_THROWS_AS(potential_closed_form(iwata1(0, -4, 0, 0, 1), 2.0), NearPole);
}

TEST_CASE("Natanzon closed and intermediate forms agree") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2, 2), ys(0.05, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const FamilySpec n(FamilyKind::Natanzon, {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)});
    for (int i = 0; i < 20; ++i) {
      const double y = ys(rng);
      double a, b;
      try {
        a = potential_closed_form(n, y);
        b = natanzon_potential_intermediate(n, y);
      } catch (const NearPole&) {
        continue;
      }
      CHECK(std::abs(a - b) <= 1e-12 * (1 + std::abs(a)));
    }
  }
}

TEST_CASE("confluent Heun +4R bracket variant disagrees with the master formula") {
  const FamilySpec s(FamilyKind::ConfluentHeun, {1, 0.5, 0.2, 0.1, 0.3, 0.2, 0.1, 0.4, 0.3, 0.2});
  const double y = 0.37;
  CHECK(potential_closed_form(s, y) == doctest::Approx(milson_potential(s, y)).epsilon(1e-11));
  CHECK(std::abs(confluent_heun_potential_plus_4r(s, y) - milson_potential(s, y)) > 1e-3);
}

TEST_CASE("with_param and named access") {
  const auto s = with_param(mpt(1, 2), "kappa", 4.0);
  CHECK(s["kappa"] == 4.0);
  CHECK(s["rho"] == -1.0);
  CHECK_THROWS_AS(s["nope"], InvalidSpec);
}
