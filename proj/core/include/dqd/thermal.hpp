#pragma once

#include <cmath>

#include "dqd/model.hpp"

// Gibbs state rho(T) = exp(-beta H) / Z built two ways: from the closed-form
// element expressions and from the numeric spectral decomposition. Boltzmann
// weights are always taken relative to the ground energy, so nothing
// overflows at large beta; the partition function is reported in the same
// shifted convention.

namespace dqd {

// Absolute temperature, k_B = 1. t = 0 and t = +infinity are both legal;
// beta() maps them to +infinity and 0 respectively.
class Temperature {
 public:
  explicit Temperature(double t);
  static Temperature zero() { return Temperature(0.0); }
  static Temperature infinite();

  double value() const { return t_; }
  double beta() const;
  bool is_zero() const { return t_ == 0.0; }
  bool is_infinite() const { return std::isinf(t_); }

 private:
  double t_;
};

struct RhoElements {
  double r11 = 0.0;
  double r12 = 0.0;
  double r13 = 0.0;
  double r14 = 0.0;
  double r22 = 0.0;
  double r23 = 0.0;
};

// Z in the shifted convention: value = sum_i exp(-beta (e_i - shift)) with
// shift = min_i e_i, so the unshifted Z is value * exp(-beta * shift)
// whenever that is representable. At t = 0 the value degenerates to the
// ground-level multiplicity.
struct PartitionValue {
  double value = 0.0;
  double shift = 0.0;
};

// The density matrix has the six-element symmetric pattern
//   [ r11 r12 r13 r14 ]
//   [ r12 r22 r23 r13 ]
//   [ r13 r23 r22 r12 ]
//   [ r14 r13 r12 r11 ]
// which both construction paths enforce exactly on the stored matrix.
struct ThermalState {
  Mat4 rho;
  RhoElements elements;
  PartitionValue z;
  ModelParams params;
  Temperature temp;
  SpectrumSource path = SpectrumSource::analytic;
  // Largest deviation of the raw spectral synthesis from the six-element
  // pattern before snapping; 0 on the analytic path (exact by construction).
  double structure_defect = 0.0;
};

// Assembles the pattern above from six elements.
Mat4 assemble_rho(const RhoElements& e);

// Closed-form element expressions with shifted Boltzmann weights. At t = 0
// the weights collapse to an equal mixture over the ground manifold. Falls
// back to gibbs_numeric (marking path = numeric) when the closed-form
// spectrum is unavailable.
ThermalState gibbs_analytic(const ModelParams& p, Temperature t);

// Spectral synthesis from the Jacobi decomposition. Verifies the six-element
// pattern (throws dqd::numeric_error beyond 1e-8) and then snaps the matrix
// to it exactly.
ThermalState gibbs_numeric(const ModelParams& p, Temperature t);

// Shifted partition function; throws std::invalid_argument at t = 0 where
// the unshifted Z is undefined (use gibbs_analytic for the T -> 0 state).
PartitionValue partition_function(const ModelParams& p, Temperature t);

}  // namespace dqd
