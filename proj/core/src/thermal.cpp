#include "dqd/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dqd/errors.hpp"

namespace dqd {

Temperature::Temperature(double t) : t_(t) {
  if (std::isnan(t) || t < 0.0) {
    std::ostringstream os;
    os << "Temperature: t must be >= 0 (got " << t << ")";
    throw std::invalid_argument(os.str());
  }
}

Temperature Temperature::infinite() {
  return Temperature(std::numeric_limits<double>::infinity());
}

double Temperature::beta() const {
  if (t_ == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / t_;  // 0 at t = infinity
}

Mat4 assemble_rho(const RhoElements& e) {
  return Mat4{{e.r11, e.r12, e.r13, e.r14,  //
               e.r12, e.r22, e.r23, e.r13,  //
               e.r13, e.r23, e.r22, e.r12,  //
               e.r14, e.r13, e.r12, e.r11}};
}

namespace {

// Boltzmann weights relative to the ground energy. At beta = infinity the
// weight is the ground-manifold indicator (degeneracy gap 1e-12, scaled).
std::array<double, 4> shifted_weights(const std::array<double, 4>& energies,
                                      Temperature t, double* e_min_out) {
  const double e_min =
      *std::min_element(energies.begin(), energies.end());
  *e_min_out = e_min;
  std::array<double, 4> w{};
  if (t.is_zero()) {
    const double gap_tol = 1e-12 * std::max(1.0, std::fabs(e_min));
    for (int i = 0; i < 4; ++i) w[i] = (energies[i] - e_min <= gap_tol) ? 1.0 : 0.0;
  } else {
    const double beta = t.beta();
    for (int i = 0; i < 4; ++i) w[i] = std::exp(-beta * (energies[i] - e_min));
  }
  return w;
}

}  // namespace

ThermalState gibbs_analytic(const ModelParams& p, Temperature t) {
  const DerivedCouplings d = derived_couplings(p);
  if (!std::isfinite(d.alpha_minus) || !std::isfinite(d.alpha_plus))
    return gibbs_numeric(p, t);

  const double e_minus = std::hypot(d.n_minus, p.v);
  const double e_plus = std::hypot(d.n_plus, p.v);
  const std::array<double, 4> energies{e_minus, -e_minus, e_plus, -e_plus};

  double e_min = 0.0;
  const auto w = shifted_weights(energies, t, &e_min);
  const double zt = w[0] + w[1] + w[2] + w[3];

  const double am2 = d.alpha_minus * d.alpha_minus;
  const double ap2 = d.alpha_plus * d.alpha_plus;
  const double amsq = d.a_minus * d.a_minus;
  const double apsq = d.a_plus * d.a_plus;
  const double nmsq = d.n_minus * d.n_minus;
  const double npsq = d.n_plus * d.n_plus;
  const double cross_minus = d.a_minus * d.n_minus * am2;
  const double cross_plus = d.a_plus * d.n_plus * ap2;

  const double diag_minus = am2 * (amsq * w[0] + nmsq * w[1]);
  const double diag_plus = ap2 * (apsq * w[2] + npsq * w[3]);
  const double offd_minus = am2 * (nmsq * w[0] + amsq * w[1]);
  const double offd_plus = ap2 * (npsq * w[2] + apsq * w[3]);

  RhoElements e;
  e.r11 = (diag_minus + diag_plus) / zt;
  e.r12 = (cross_minus * (-w[0] + w[1]) + cross_plus * (w[2] - w[3])) / zt;
  e.r13 = (cross_minus * (w[0] - w[1]) + cross_plus * (w[2] - w[3])) / zt;
  e.r14 = (-diag_minus + diag_plus) / zt;
  e.r22 = (offd_minus + offd_plus) / zt;
  e.r23 = (-offd_minus + offd_plus) / zt;

  return ThermalState{assemble_rho(e), e, PartitionValue{zt, e_min}, p, t,
                      SpectrumSource::analytic, 0.0};
}

ThermalState gibbs_numeric(const ModelParams& p, Temperature t) {
  const Spectrum s = numeric_spectrum(p);

  double e_min = 0.0;
  const auto w = shifted_weights(s.energies, t, &e_min);
  const double zt = w[0] + w[1] + w[2] + w[3];

  Mat4 raw;
  for (int i = 0; i < 4; ++i)
    if (w[i] != 0.0) raw = raw + (w[i] / zt) * outer(s.states[i]);

  RhoElements e{raw(0, 0), raw(0, 1), raw(0, 2), raw(0, 3), raw(1, 1),
                raw(1, 2)};
  const Mat4 patterned = assemble_rho(e);
  const double dev = max_abs_diff(raw, patterned);
  if (dev > 1e-8) {
    std::ostringstream os;
    os << "gibbs_numeric: density matrix violates the six-element pattern "
          "(max deviation "
       << dev << ") at delta1=" << p.delta1 << " delta2=" << p.delta2
       << " v=" << p.v << " t=" << t.value();
    throw numeric_error(os.str());
  }

  return ThermalState{patterned, e, PartitionValue{zt, e_min}, p, t,
                      SpectrumSource::numeric, dev};
}

PartitionValue partition_function(const ModelParams& p, Temperature t) {
  if (t.is_zero())
    throw std::invalid_argument(
        "partition_function: undefined at t = 0; use gibbs_analytic for the "
        "T -> 0 state");
  const DerivedCouplings d = derived_couplings(p);
  const double e_minus = std::hypot(d.n_minus, p.v);
  const double e_plus = std::hypot(d.n_plus, p.v);
  const std::array<double, 4> energies{e_minus, -e_minus, e_plus, -e_plus};
  double e_min = 0.0;
  const auto w = shifted_weights(energies, t, &e_min);
  return PartitionValue{w[0] + w[1] + w[2] + w[3], e_min};
}

}  // namespace dqd
