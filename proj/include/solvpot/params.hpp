#pragma once

// Forward and inverse parameter maps between family specs and the canonical
// equations they reduce to (hypergeometric, Heun and its confluent forms, GHE).

#include <complex>
#include <vector>

#include "solvpot/families.hpp"
#include "solvpot/polyrat.hpp"

namespace solvpot {

using cplx = std::complex<double>;

/// (a, b, c) of the hypergeometric equation y(1−y)v'' + [c − (a+b+1)y]v' − ab·v = 0.
struct HypergeometricTriple {
  cplx a;
  cplx b;
  cplx c;
};

/// Triple for an Iwata spec at wavenumber k. All roots on the principal branch.
HypergeometricTriple hypergeometric_params(const FamilySpec& iwata, double k);

/// |lhs − rhs| of the class constraint: IwataI (a−b)² = −k²/κ;
/// IwataII 2c − c² = k²/κ; IwataIII c(a+b−1) − 2ab = k²/(2κ).
double class_constraint_residual(const FamilySpec& iwata, const HypergeometricTriple& t, double k);

enum class LambdaTarget { Heun, ConfluentHeun, HypergeometricCollapse, GeneralizedHeun };

struct LambdaVector {
  LambdaTarget target;
  std::vector<double> values;
};

struct HeunParameters {
  double alpha = 0, beta = 0, gamma = 0, delta = 0, q = 0, a = 2;
};

struct ConfluentHeunParameters {
  double gamma = 0, delta = 0, p = 0, alpha = 0, sigma = 0;
};

/// Parameters of the generalized Heun equation; `alpha` is the constant term α̂ of the v' coefficient.
struct GeneralizedHeunParameters {
  double mu0 = 0, mu1 = 0, mu2 = 0, alpha = 0, beta0 = 0, beta1 = 0, beta2 = 0, a = 2;
};

/// λ₀..λ₄ of the Heun Bose invariant. Throws InvalidSpec for a ∈ {0, 1}.
LambdaVector heun_lambda_map(const HeunParameters& p);
LambdaVector confluent_heun_lambda_map(const ConfluentHeunParameters& p);
/// λ₀..λ₁₁ with α₀..α₂ = 1 − μ₀..μ₂ and α₃ = α̂.
LambdaVector generalized_heun_lambda_map(const GeneralizedHeunParameters& p);

/// λ vector of the Heun invariant after the hypergeometric collapse
/// (q = αβa, ε = 0). Throws NotCollapsible when |α+β+1−γ−δ| > 1e-12.
LambdaVector collapse_heun_to_hypergeometric(double alpha, double beta, double gamma, double delta, double a);

FamilySpec embed_iwata_to_natanzon(const FamilySpec& iwata);

/// Heun spec with R = (y − heun_a)²·H(y); heun_a ∉ {0, 1}.
FamilySpec embed_natanzon_to_heun(const FamilySpec& natanzon, double heun_a);

/// Iwata → Natanzon → Heun in one step.
FamilySpec embed_iwata_to_heun(const FamilySpec& iwata, double heun_a);

/// True iff the pair satisfies its pairwise coincidence conditions to 1e-12.
/// Accepts the pairs (I,II), (II,III), (I,III) in either order.
bool coincidence_check(const FamilySpec& first, const FamilySpec& second);

/// Coefficients of a(y)v'' + b(y)v' + c(y)v = 0 for the canonical equation a
/// spec reduces to at wavenumber k. Coefficients may be complex (principal roots).
struct CanonicalEquation {
  ComplexPolynomial a;
  ComplexPolynomial b;
  ComplexPolynomial c;
};

CanonicalEquation canonical_equation(const FamilySpec& spec, double k);

}  // namespace solvpot
