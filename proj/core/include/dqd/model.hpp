#pragma once

#include "dqd/matrix.hpp"

// Two capacitively coupled double-quantum-dot charge qubits:
//   H = delta1 (sigma_x (x) I) + delta2 (I (x) sigma_x) + v (sigma_z (x) sigma_z)
// in the computational basis (|LL>, |LR>, |RL>, |RR>), indices 0..3, with
// hbar = k_B = 1. The spectrum is available in closed form; the numeric path
// re-derives it through the Jacobi solver and serves as the oracle.

namespace dqd {

struct ModelParams {
  double delta1 = 0.0;  // tunneling of qubit A
  double delta2 = 0.0;  // tunneling of qubit B
  double v = 0.0;       // Coulomb coupling

  // Throws std::invalid_argument when any field is non-finite.
  void validate() const;
};

// n_pm = delta1 +- delta2, a_pm = v + sqrt(n_pm^2 + v^2),
// alpha_pm = 1 / (sqrt(2) sqrt(n_pm^2 + a_pm^2)).
// alpha_pm is infinite when the corresponding branch degenerates
// (n = 0 together with a = 0); the spectrum then falls back to the
// numeric path.
struct DerivedCouplings {
  double n_minus = 0.0;
  double n_plus = 0.0;
  double a_minus = 0.0;
  double a_plus = 0.0;
  double alpha_minus = 0.0;
  double alpha_plus = 0.0;
};

DerivedCouplings derived_couplings(const ModelParams& p);

enum class SpectrumSource { analytic, numeric };

// Energies use the closed-form index convention:
//   e1 = +sqrt(n_minus^2 + v^2), e2 = -e1,
//   e3 = +sqrt(n_plus^2 + v^2),  e4 = -e3.
// states[i] is the unit eigenvector for energies[i]; for v >= 0 and
// delta1*delta2 >= 0 the ground state is states[3].
struct Spectrum {
  std::array<double, 4> energies{};
  std::array<Vec4, 4> states{};
  SpectrumSource source = SpectrumSource::analytic;
};

Mat4 build_hamiltonian(const ModelParams& p);

// Closed-form eigensystem. Falls back to numeric_spectrum (and marks the
// result accordingly) when a branch normalizer degenerates.
Spectrum analytic_spectrum(const ModelParams& p);

// Jacobi diagonalization of build_hamiltonian(p), relabeled to the
// closed-form index convention; eigenvector signs are aligned to positive
// overlap with the closed-form states when those exist.
Spectrum numeric_spectrum(const ModelParams& p);

}  // namespace dqd
