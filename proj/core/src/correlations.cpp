#include "dqd/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dqd/errors.hpp"

namespace dqd {

Mat4 spin_flip() {
  return Mat4{{0.0, 0.0, 0.0, -1.0,  //
               0.0, 0.0, 1.0, 0.0,   //
               0.0, 1.0, 0.0, 0.0,   //
               -1.0, 0.0, 0.0, 0.0}};
}

namespace {

constexpr double kClampTol = 1e-9;

double clamp_nonnegative(double x, const char* what) {
  if (x >= 0.0) return x;
  if (x >= -kClampTol) return 0.0;
  std::ostringstream os;
  os << what << " = " << x << " below the -1e-9 clamp tolerance";
  throw numeric_error(os.str());
}

double wootters_combination(std::array<double, 4> sq) {
  std::sort(sq.begin(), sq.end(), std::greater<>());
  return std::max(0.0, sq[0] - sq[1] - sq[2] - sq[3]);
}

// Exchange-symmetry blocks of rho: the plus (symmetric) block is
// [[p, q], [q, r]] with p = r11 + r14, q = r12 + r13, r = r22 + r23; the
// minus block uses the differences. rho * spin_flip is block diagonal in the
// same basis with eigenvalue pairs
//   mu = [(r - p) +- sqrt((p + r)^2 - 4 q^2)] / 2      (plus block)
//   mu = [(p - r) +- sqrt((p + r)^2 - 4 q^2)] / 2      (minus block)
// and the R eigenvalues are mu^2.
struct Block {
  double p, q, r;
};

std::array<Block, 2> exchange_blocks(const RhoElements& e) {
  return {Block{e.r11 - e.r14, e.r12 - e.r13, e.r22 - e.r23},   // minus
          Block{e.r11 + e.r14, e.r12 + e.r13, e.r22 + e.r23}};  // plus
}

// |mu| pair of one block, stable near pure states.
std::array<double, 2> block_mu_abs(const Block& b) {
  const double sum = b.p + b.r;
  const double diff = b.r - b.p;
  const double disc =
      clamp_nonnegative(sum * sum - 4.0 * b.q * b.q, "block discriminant");
  const double root = std::sqrt(disc);
  return {std::fabs(0.5 * (diff + root)), std::fabs(0.5 * (diff - root))};
}

// Closed-form scalars and the branch-ordered lambdas (minus branch first,
// larger of each branch first), clamped.
struct ClosedForm {
  RSpectrum scalars;                // lambda field left in branch order here
  std::array<double, 4> branch_lambda;
};

ClosedForm closed_form_r(const RhoElements& e) {
  const auto [minus, plus] = exchange_blocks(e);
  ClosedForm cf;
  RSpectrum& out = cf.scalars;
  out.xi_minus = minus.p * minus.p - minus.r * minus.r;
  out.xi_plus = plus.p * plus.p - plus.r * plus.r;
  out.sigma_minus = 2.0 * minus.q * (minus.p - minus.r);
  out.sigma_plus = 2.0 * plus.q * (plus.r - plus.p);
  out.theta_minus =
      minus.p * minus.p - 2.0 * minus.q * minus.q + minus.r * minus.r;
  out.theta_plus = plus.p * plus.p - 2.0 * plus.q * plus.q + plus.r * plus.r;

  const double root_minus = std::sqrt(clamp_nonnegative(
      out.xi_minus * out.xi_minus - out.sigma_minus * out.sigma_minus,
      "Xi-^2 - Sigma-^2"));
  const double root_plus = std::sqrt(clamp_nonnegative(
      out.xi_plus * out.xi_plus - out.sigma_plus * out.sigma_plus,
      "Xi+^2 - Sigma+^2"));

  cf.branch_lambda = {
      clamp_nonnegative(0.5 * (out.theta_minus + root_minus), "lambda1"),
      clamp_nonnegative(0.5 * (out.theta_minus - root_minus), "lambda2"),
      clamp_nonnegative(0.5 * (out.theta_plus + root_plus), "lambda3"),
      clamp_nonnegative(0.5 * (out.theta_plus - root_plus), "lambda4")};
  return cf;
}

}  // namespace

RSpectrum r_spectrum_analytic(const ThermalState& s) {
  ClosedForm cf = closed_form_r(s.elements);
  RSpectrum out = cf.scalars;
  out.lambda = cf.branch_lambda;
  std::sort(out.lambda.begin(), out.lambda.end(), std::greater<>());
  return out;
}

double concurrence_analytic(const ThermalState& s) {
  const auto [minus, plus] = exchange_blocks(s.elements);
  const auto mu_minus = block_mu_abs(minus);
  const auto mu_plus = block_mu_abs(plus);
  return wootters_combination(
      {mu_minus[0], mu_minus[1], mu_plus[0], mu_plus[1]});
}

double concurrence_branch_form(const ThermalState& s) {
  const auto [minus, plus] = exchange_blocks(s.elements);
  auto mu_minus = block_mu_abs(minus);  // sqrt(lambda_1), sqrt(lambda_2)
  auto mu_plus = block_mu_abs(plus);    // sqrt(lambda_3), sqrt(lambda_4)
  if (mu_minus[0] < mu_minus[1]) std::swap(mu_minus[0], mu_minus[1]);
  if (mu_plus[0] < mu_plus[1]) std::swap(mu_plus[0], mu_plus[1]);
  return std::max(0.0, std::fabs(mu_minus[0] - mu_plus[0]) - mu_minus[1] -
                           mu_plus[1]);
}

namespace {

Mat4 sqrt_psd(const Mat4& rho) {
  const EigenDecomp ed = jacobi_eigensolve(rho);
  Mat4 root;
  for (int i = 0; i < 4; ++i) {
    const double ev = clamp_nonnegative(ed.values[i], "density eigenvalue");
    if (ev != 0.0) root = root + std::sqrt(ev) * outer(ed.vectors[i]);
  }
  return root;
}

// Descending |mu| of sqrt(rho) Y sqrt(rho); these are the sqrt(lambda_i).
std::array<double, 4> sqrt_r_eigenvalues(const Mat4& rho) {
  const Mat4 root = sqrt_psd(rho);
  const EigenDecomp ed = jacobi_eigensolve(root * spin_flip() * root);
  std::array<double, 4> mu_abs{};
  for (int i = 0; i < 4; ++i) mu_abs[i] = std::fabs(ed.values[i]);
  std::sort(mu_abs.begin(), mu_abs.end(), std::greater<>());
  return mu_abs;
}

}  // namespace

double concurrence_of_density(const Mat4& rho) {
  const auto mu = sqrt_r_eigenvalues(rho);
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double concurrence_numeric(const ThermalState& s) {
  return concurrence_of_density(s.rho);
}

std::array<double, 4> r_spectrum_of_density(const Mat4& rho) {
  auto mu = sqrt_r_eigenvalues(rho);
  for (double& m : mu) m = m * m;
  return mu;
}

double concurrence(const ThermalState& s) {
  return s.path == SpectrumSource::analytic ? concurrence_analytic(s)
                                            : concurrence_numeric(s);
}

Mat2 reduced_a(const ThermalState& s) {
  const double d = s.elements.r11 + s.elements.r22;
  const double off = 2.0 * s.elements.r13;
  return Mat2{d, off, off, d};
}

Mat2 reduced_b(const ThermalState& s) {
  const double d = s.elements.r11 + s.elements.r22;
  const double off = 2.0 * s.elements.r12;
  return Mat2{d, off, off, d};
}

Mat2 local_unitary(double theta, double phi) {
  if (phi != 0.0)
    throw std::invalid_argument(
        "local_unitary: phi != 0 is unsupported; the engine is real-only and "
        "all supported results fix phi = 0");
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2))
    throw std::invalid_argument("local_unitary: theta must lie in [0, pi/2]");
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return Mat2{c, -sn, sn, c};
}

double l1_coherence(const Mat2& m) {
  return std::fabs(m(0, 1)) + std::fabs(m(1, 0));
}

double l1_coherence(const Mat4& m) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) sum += std::fabs(m(i, j));
  return sum;
}

MeasureSet correlated_coherence(const ThermalState& s, double theta) {
  const Mat2 u = local_unitary(theta);
  const Mat4 rotated = conjugate(kron2(u, u), s.rho);
  const Mat2 rotated_a = conjugate(u, reduced_a(s));
  const Mat2 rotated_b = conjugate(u, reduced_b(s));

  MeasureSet m;
  m.theta = theta;
  m.phi = 0.0;
  m.c_l1_total = l1_coherence(rotated);
  m.c_l1_local = l1_coherence(rotated_a) + l1_coherence(rotated_b);
  m.c_cc = m.c_l1_total - m.c_l1_local;
  m.concurrence = concurrence(s);
  return m;
}

double correlated_coherence_closed_form(const ThermalState& s) {
  const RhoElements& e = s.elements;
  return std::fabs(e.r11 + e.r14 - e.r22 - e.r23) +
         std::fabs(e.r11 - e.r14 - e.r22 + e.r23);
}

}  // namespace dqd
