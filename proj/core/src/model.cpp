#include "dqd/model.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dqd {

void ModelParams::validate() const {
  if (!std::isfinite(delta1) || !std::isfinite(delta2) || !std::isfinite(v)) {
    std::ostringstream os;
    os << "ModelParams: all couplings must be finite (delta1=" << delta1
       << ", delta2=" << delta2 << ", v=" << v << ")";
    throw std::invalid_argument(os.str());
  }
}

DerivedCouplings derived_couplings(const ModelParams& p) {
  p.validate();
  DerivedCouplings d;
  d.n_minus = p.delta1 - p.delta2;
  d.n_plus = p.delta1 + p.delta2;
  d.a_minus = p.v + std::hypot(d.n_minus, p.v);
  d.a_plus = p.v + std::hypot(d.n_plus, p.v);
  d.alpha_minus =
      1.0 / (std::sqrt(2.0) * std::hypot(d.n_minus, d.a_minus));
  d.alpha_plus = 1.0 / (std::sqrt(2.0) * std::hypot(d.n_plus, d.a_plus));
  return d;
}

Mat4 build_hamiltonian(const ModelParams& p) {
  p.validate();
  const Mat2 id = Mat2::identity();
  const Mat2 sx = Mat2::pauli_x();
  const Mat2 sz = Mat2::pauli_z();
  return p.delta1 * kron2(sx, id) + p.delta2 * kron2(id, sx) +
         p.v * kron2(sz, sz);
}

namespace {

void normalize(Vec4& v) {
  const double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
}

// Closed-form eigenvectors in the branch index order, or nullopt when a
// branch normalizer is degenerate.
std::optional<std::array<Vec4, 4>> closed_form_states(
    const DerivedCouplings& d) {
  if (!std::isfinite(d.alpha_minus) || !std::isfinite(d.alpha_plus))
    return std::nullopt;
  const double am = d.a_minus, nm = d.n_minus;
  const double ap = d.a_plus, np = d.n_plus;
  std::array<Vec4, 4> s;
  s[0] = Vec4{-am, nm, -nm, am};   // phi1
  s[1] = Vec4{-nm, -am, am, nm};   // phi2
  s[2] = Vec4{ap, np, np, ap};     // phi3
  s[3] = Vec4{np, -ap, -ap, np};   // phi4
  for (auto& v : s) normalize(v);
  return s;
}

}  // namespace

Spectrum analytic_spectrum(const ModelParams& p) {
  const DerivedCouplings d = derived_couplings(p);
  auto states = closed_form_states(d);
  if (!states) return numeric_spectrum(p);

  Spectrum s;
  const double e_minus = std::hypot(d.n_minus, p.v);
  const double e_plus = std::hypot(d.n_plus, p.v);
  s.energies = {e_minus, -e_minus, e_plus, -e_plus};
  s.states = *states;
  s.source = SpectrumSource::analytic;
  return s;
}

Spectrum numeric_spectrum(const ModelParams& p) {
  const DerivedCouplings d = derived_couplings(p);
  const EigenDecomp ed = jacobi_eigensolve(build_hamiltonian(p));

  // ed.values ascend; the closed-form order is (+m-, -m-, +m+, -m+) with
  // m_pm = sqrt(n_pm^2 + v^2). Ascending that list gives the slot
  // permutation below.
  const double m_minus = std::hypot(d.n_minus, p.v);
  const double m_plus = std::hypot(d.n_plus, p.v);
  // Slots in ascending target order: (-m_big, -m_small, +m_small, +m_big).
  std::array<int, 4> slot{};  // slot[k] = closed-form index for position k
  if (m_minus <= m_plus)
    slot = {3, 1, 0, 2};  // -m+ <= -m- <= +m- <= +m+
  else
    slot = {1, 3, 2, 0};

  Spectrum s;
  for (int k = 0; k < 4; ++k) {
    s.energies[slot[k]] = ed.values[k];
    s.states[slot[k]] = ed.vectors[k];
  }

  if (auto ref = closed_form_states(d)) {
    for (int i = 0; i < 4; ++i)
      if (dot(s.states[i], (*ref)[i]) < 0.0)
        for (double& x : s.states[i]) x = -x;
  }
  s.source = SpectrumSource::numeric;
  return s;
}

}  // namespace dqd
