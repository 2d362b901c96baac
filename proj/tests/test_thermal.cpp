#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "dqd/thermal.hpp"
#include "support/oracles.hpp"

using namespace dqd;

namespace {

double pattern_defect(const Mat4& rho) {
  double worst = 0.0;
  const auto at = [&rho](int r, int c) { return rho(r, c); };
  const double groups[6][2] = {{at(0, 0), at(3, 3)}, {at(1, 1), at(2, 2)},
                               {at(0, 1), at(2, 3)}, {at(0, 2), at(1, 3)},
                               {at(0, 3), at(3, 0)}, {at(1, 2), at(2, 1)}};
  for (const auto& g : groups)
    worst = std::max(worst, std::fabs(g[0] - g[1]));
  worst = std::max(worst, max_abs_diff(rho, rho.transpose()));
  return worst;
}

double max_element_diff(const RhoElements& a, const RhoElements& b) {
  return std::max({std::fabs(a.r11 - b.r11), std::fabs(a.r12 - b.r12),
                   std::fabs(a.r13 - b.r13), std::fabs(a.r14 - b.r14),
                   std::fabs(a.r22 - b.r22), std::fabs(a.r23 - b.r23)});
}

double purity(const Mat4& rho) { return (rho * rho).trace(); }

}  // namespace

TEST_CASE("Temperature: rejects negatives and NaN, keeps the limits") {
  CHECK_THROWS_AS(Temperature(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(Temperature(std::nan("")), std::invalid_argument);
  CHECK(Temperature::zero().beta() ==
        std::numeric_limits<double>::infinity());
  CHECK(Temperature::infinite().beta() == 0.0);
  CHECK(Temperature(2.0).beta() == 0.5);
}

TEST_CASE("gibbs: beta = 0 gives the maximally mixed state") {
  for (const auto& state :
       {gibbs_analytic({10.0, 15.0, 160.0}, Temperature::infinite()),
        gibbs_numeric({10.0, 15.0, 160.0}, Temperature::infinite())}) {
    CHECK(state.elements.r12 == 0.0);
    CHECK(state.elements.r13 == 0.0);
    CHECK(std::fabs(state.elements.r14) < 1e-15);
    CHECK(std::fabs(state.elements.r23) < 1e-15);
    CHECK(state.elements.r11 == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(state.elements.r22 == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(state.z.value == doctest::Approx(4.0).epsilon(1e-15));
  }
}

TEST_CASE("gibbs: diagonal Hamiltonian gives diagonal Boltzmann factors") {
  // delta1 = delta2 = 0, v = 1: H = diag(1,-1,-1,1)
  const double beta = 1.0 / 0.7;
  const ThermalState s = gibbs_numeric({0.0, 0.0, 1.0}, Temperature(0.7));
  const double z = 2.0 * std::exp(-beta) + 2.0 * std::exp(beta);
  CHECK(s.elements.r11 == doctest::Approx(std::exp(-beta) / z).epsilon(1e-12));
  CHECK(s.elements.r22 == doctest::Approx(std::exp(beta) / z).epsilon(1e-12));
  CHECK(std::fabs(s.elements.r12) < 1e-15);
  CHECK(std::fabs(s.elements.r13) < 1e-15);
  CHECK(std::fabs(s.elements.r14) < 1e-15);
  CHECK(std::fabs(s.elements.r23) < 1e-15);
}

TEST_CASE("gibbs: strong coupling at t -> 0 is the pure ground state") {
  const ModelParams p{10.0, 15.0, 160.0};
  const ThermalState s0 = gibbs_analytic(p, Temperature::zero());
  // rho11 ~ 0.055^2, rho22 ~ 0.705^2
  CHECK(s0.elements.r11 == doctest::Approx(0.002996991562).epsilon(1e-9));
  CHECK(s0.elements.r22 == doctest::Approx(0.497003008438).epsilon(1e-9));
  CHECK(purity(s0.rho) == doctest::Approx(1.0).epsilon(1e-12));

  // t = 1e-3 is indistinguishable from the projector at this gap
  const ThermalState s_small = gibbs_numeric(p, Temperature(1e-3));
  CHECK(max_abs_diff(s_small.rho, s0.rho) < 1e-12);
}

TEST_CASE("gibbs: analytic equals numeric at finite temperature") {
  const ThermalState a = gibbs_analytic({10.0, 15.0, 160.0}, Temperature(10.0));
  const ThermalState n = gibbs_numeric({10.0, 15.0, 160.0}, Temperature(10.0));
  CHECK(max_element_diff(a.elements, n.elements) < 1e-10);
}

TEST_CASE("gibbs: rejects negative temperature at the type boundary") {
  CHECK_THROWS_AS(gibbs_analytic({1.0, 1.0, 1.0}, Temperature(-0.5)),
                  std::invalid_argument);
}

TEST_CASE("gibbs: degenerate normalizer falls back to the numeric path") {
  const ThermalState s = gibbs_analytic({5.0, 5.0, 0.0}, Temperature(1.0));
  CHECK(s.path == SpectrumSource::numeric);
  CHECK(std::fabs(s.rho.trace() - 1.0) < 1e-12);
}

TEST_CASE("gibbs: t = 0 with a degenerate ground manifold mixes it equally") {
  // delta1 = 0: the minus and plus branches share |ground| energy
  const ThermalState s = gibbs_analytic({0.0, 7.0, 3.0}, Temperature::zero());
  CHECK(s.z.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::fabs(s.rho.trace() - 1.0) < 1e-12);
  CHECK(purity(s.rho) == doctest::Approx(0.5).epsilon(1e-10));
  const ThermalState n = gibbs_numeric({0.0, 7.0, 3.0}, Temperature::zero());
  CHECK(max_element_diff(s.elements, n.elements) < 1e-10);
}

TEST_CASE("partition_function: trivial values and the shift convention") {
  CHECK(partition_function({3.0, 4.0, 5.0}, Temperature::infinite()).value ==
        doctest::Approx(4.0).epsilon(1e-15));

  // two levels +-1, shift -1: Z~ = 2 + 2 exp(-2)
  const PartitionValue z = partition_function({0.0, 0.0, 1.0}, Temperature(1.0));
  CHECK(z.shift == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(z.value == doctest::Approx(2.0 + 2.0 * std::exp(-2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(partition_function({1.0, 1.0, 1.0}, Temperature::zero()),
                  std::invalid_argument);
}

TEST_CASE("partition_function: matches the direct shifted trace") {
  const ModelParams p{10.0, 15.0, 160.0};
  const Temperature t(10.0);
  const Spectrum s = numeric_spectrum(p);
  double direct = 0.0;
  const double e_min = s.energies[3];
  for (const double e : s.energies) direct += std::exp(-(e - e_min) / 10.0);
  const PartitionValue z = partition_function(p, t);
  CHECK(z.value == doctest::Approx(direct).epsilon(1e-12));
  CHECK(z.shift == doctest::Approx(e_min).epsilon(1e-12));
}

TEST_CASE("thermal state validity and commutation on a random grid") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> delta(0.0, 20.0);
  std::uniform_real_distribution<double> coulomb(0.0, 200.0);
  std::uniform_real_distribution<double> log_t(-2.0, 2.0);
  for (int i = 0; i < 300; ++i) {
    const ModelParams p{delta(rng), delta(rng), coulomb(rng)};
    const Temperature t(i % 7 == 0 ? 0.0 : std::pow(10.0, log_t(rng)));
    const ThermalState s = gibbs_analytic(p, t);

    CHECK(std::fabs(s.rho.trace() - 1.0) < 1e-12);
    CHECK(pattern_defect(s.rho) == 0.0);  // pattern is exact by construction

    const EigenDecomp ed = jacobi_eigensolve(s.rho);
    CHECK(ed.values[0] >= -1e-12);
    CHECK(ed.values[3] <= 1.0 + 1e-12);

    const Mat4 h = build_hamiltonian(p);
    CHECK(max_abs_diff(s.rho * h, h * s.rho) < 1e-10);
  }
}

TEST_CASE("analytic-numeric element agreement on a dense grid") {
  // 20 x 20 x 20 couplings x 10 temperatures
  std::vector<double> deltas, coulombs;
  for (int i = 0; i < 20; ++i) {
    deltas.push_back(20.0 * i / 19.0);
    coulombs.push_back(200.0 * i / 19.0);
  }
  const std::vector<double> temps{0.0,  0.01, 0.1,   0.5,
                                  1.0,  5.0,  25.0,  60.0,
                                  100.0, std::numeric_limits<double>::infinity()};
  double worst = 0.0;
  for (const double d1 : deltas)
    for (const double d2 : deltas)
      for (const double v : coulombs)
        for (const double t : temps) {
          const ModelParams p{d1, d2, v};
          const ThermalState a = gibbs_analytic(p, Temperature(t));
          const ThermalState n = gibbs_numeric(p, Temperature(t));
          worst = std::max(worst, max_element_diff(a.elements, n.elements));
        }
  CHECK(worst < 1e-10);
}

TEST_CASE("purity is non-increasing along a temperature sweep") {
  const ModelParams p{10.0, 15.0, 160.0};
  double previous = 2.0;
  for (const double t : {0.0, 0.01, 0.1, 0.5, 1.0, 5.0, 10.0, 50.0, 200.0}) {
    const double tr2 = purity(gibbs_analytic(p, Temperature(t)).rho);
    CHECK(tr2 <= previous + 1e-12);
    previous = tr2;
  }
}
