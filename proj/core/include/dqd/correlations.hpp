#pragma once

#include "dqd/thermal.hpp"

// Quantum correlation measures for the six-element thermal states:
// Wootters concurrence (closed-form R eigenvalues plus a spectral oracle),
// l1-norm coherence, reduced states, the local rotation U(theta, phi=0) and
// correlated coherence. Everything is real; phi != 0 is rejected.

namespace dqd {

// sigma_y (x) sigma_y; real in the computational basis.
Mat4 spin_flip();

// Closed-form eigenvalues of R = rho (sigma_y(x)sigma_y) rho* (...), together
// with the intermediate scalars they are built from:
//   Xi_pm    = (r11 +- r14)^2 - (r22 +- r23)^2
//   Sigma_pm = 2 (r12 +- r13) (-+ r11 - r14 + r23 +- r22)
//   Theta_pm = (r11 +- r14)^2 - 2 (r12 +- r13)^2 + (r22 +- r23)^2
//   lambda   = Theta/2 +- sqrt(Xi^2 - Sigma^2)/2   (per branch)
// lambda is stored descending; small negatives (> -1e-9) from cancellation
// are clamped to zero, anything worse throws dqd::numeric_error.
struct RSpectrum {
  std::array<double, 4> lambda{};
  double theta_minus = 0.0, theta_plus = 0.0;
  double xi_minus = 0.0, xi_plus = 0.0;
  double sigma_minus = 0.0, sigma_plus = 0.0;
};

RSpectrum r_spectrum_analytic(const ThermalState& s);

// Wootters concurrence from the closed form. The square roots sqrt(lambda)
// are evaluated as |mu| of the 2x2 exchange-symmetry blocks of rho * spin_flip
// (algebraically identical to sqrt of the RSpectrum lambdas, but immune to
// the sqrt-of-cancellation blowup near pure states).
double concurrence_analytic(const ThermalState& s);

// Spectral oracle: eigenvalues of R obtained through the symmetric matrix
// sqrt(rho) (sigma_y(x)sigma_y) sqrt(rho), valid for any real density matrix.
double concurrence_of_density(const Mat4& rho);
double concurrence_numeric(const ThermalState& s);

// Eigenvalues of R for an arbitrary real density matrix, descending
// (squares of the symmetrized spectrum above).
std::array<double, 4> r_spectrum_of_density(const Mat4& rho);

// Alternative Wootters combination evaluated over the branch-ordered
// lambdas (minus branch first, larger value first within a branch):
// max{0, |sqrt(l1) - sqrt(l3)| - sqrt(l2) - sqrt(l4)}. Algebraically equal
// to the standard descending-sort combination because the global maximum
// always sits in {l1, l3}; kept so the validation report can cross-check
// the two rules.
double concurrence_branch_form(const ThermalState& s);

// Concurrence along the state's construction path: closed form for analytic
// states, spectral for numeric fallbacks (where the six summed elements can
// no longer resolve a vanishing concurrence).
double concurrence(const ThermalState& s);

// Reduced states; both have diagonal (1/2, 1/2) by the trace constraint.
Mat2 reduced_a(const ThermalState& s);  // off-diagonal 2 r13
Mat2 reduced_b(const ThermalState& s);  // off-diagonal 2 r12

// [[cos t, -sin t], [sin t, cos t]]. theta must lie in [0, pi/2]; phi != 0 is
// rejected (the engine is real-only, every supported result has phi = 0).
Mat2 local_unitary(double theta, double phi = 0.0);

// Sum of absolute off-diagonal entries.
double l1_coherence(const Mat2& m);
double l1_coherence(const Mat4& m);

struct MeasureSet {
  double concurrence = 0.0;
  double c_l1_total = 0.0;
  double c_l1_local = 0.0;
  double c_cc = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

// Rotates the state by U(theta)(x)U(theta) and the reduced states by
// U(theta), then bundles all measures in that basis. c_cc is total minus
// local by construction; the concurrence entry is basis independent.
MeasureSet correlated_coherence(const ThermalState& s, double theta);

// |r11 + r14 - r22 - r23| + |r11 - r14 - r22 + r23|: the closed form of the
// correlated coherence in the theta = pi/4 incoherent basis.
double correlated_coherence_closed_form(const ThermalState& s);

}  // namespace dqd
