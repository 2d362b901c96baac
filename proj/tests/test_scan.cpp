#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dqd/errors.hpp"
#include "dqd/scan.hpp"

using namespace dqd;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

SweepSpec temperature_sweep(ModelParams p, double from, double to,
                            int points) {
  SweepSpec s;
  s.axis = SweepAxis::temperature;
  s.start = from;
  s.stop = to;
  s.points = points;
  s.fixed = p;
  s.theta = kQuarterPi;
  return s;
}

// Implementation-independent threshold oracle: bisection on the spectral
// concurrence of the numerically synthesized Gibbs state.
double threshold_oracle(const ModelParams& p, double lo, double hi) {
  const auto positive = [&p](double t) {
    return concurrence_of_density(gibbs_numeric(p, Temperature(t)).rho) > 0.0;
  };
  REQUIRE(positive(lo));
  REQUIRE(!positive(hi));
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("sweep_grid: endpoints exact, strictly increasing, log option") {
  SweepSpec s = temperature_sweep({1.0, 1.0, 1.0}, 0.5, 32.0, 7);
  auto grid = sweep_grid(s);
  CHECK(grid.size() == 7);
  CHECK(grid.front() == 0.5);
  CHECK(grid.back() == 32.0);
  CHECK(std::is_sorted(grid.begin(), grid.end()));

  s.log_scale = true;
  grid = sweep_grid(s);
  CHECK(grid.front() == 0.5);
  CHECK(grid.back() == 32.0);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  // log spacing: constant ratio
  const double ratio = grid[1] / grid[0];
  for (std::size_t i = 2; i < grid.size(); ++i)
    CHECK(grid[i] / grid[i - 1] == doctest::Approx(ratio).epsilon(1e-12));
}

TEST_CASE("SweepSpec validation names the offending field") {
  SweepSpec s = temperature_sweep({1.0, 1.0, 1.0}, 2.0, 1.0, 10);
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("start"),
                       std::invalid_argument);
  s = temperature_sweep({1.0, 1.0, 1.0}, 1.0, 2.0, 1);
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("points"),
                       std::invalid_argument);
  s = temperature_sweep({1.0, 1.0, 1.0}, 0.0, 2.0, 10);
  s.log_scale = true;
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("log_scale"),
                       std::invalid_argument);
}

TEST_CASE("run_sweep: strong-coupling temperature sweep reproduces the "
          "reference curve shape") {
  const SweepResult r =
      run_sweep(temperature_sweep({10.0, 15.0, 160.0}, 0.01, 100.0, 60));
  REQUIRE(r.rows.size() == 60);
  CHECK(r.rows.front().concurrence == doctest::Approx(0.988).epsilon(0.002));
  // monotone non-increasing
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    CHECK(r.rows[i].concurrence <= r.rows[i - 1].concurrence + 1e-12);
  // vanished by t = 100 > t* ~ 66.9
  CHECK(r.rows.back().concurrence == 0.0);
}

TEST_CASE("run_sweep: Coulomb sweep rises from exact separability") {
  SweepSpec s;
  s.axis = SweepAxis::coulomb;
  s.start = 0.0;
  s.stop = 50.0;
  s.points = 80;
  s.fixed = ModelParams{1.0, 1.0, 0.0};
  s.fixed_temperature = 0.1;
  s.theta = kQuarterPi;
  const SweepResult r = run_sweep(s);
  CHECK(r.rows.front().concurrence < 1e-9);
  CHECK(r.rows.front().path == SpectrumSource::numeric);  // degenerate corner
  const double peak =
      std::max_element(r.rows.begin(), r.rows.end(),
                       [](const SweepRow& a, const SweepRow& b) {
                         return a.concurrence < b.concurrence;
                       })
          ->concurrence;
  CHECK(peak == doctest::Approx(0.9).epsilon(0.02));
}

TEST_CASE("run_sweep: beta = 0 zeroes every measure column") {
  SweepSpec s;
  s.axis = SweepAxis::coulomb;
  s.start = 1.0;
  s.stop = 10.0;
  s.points = 10;
  s.fixed = ModelParams{2.0, 3.0, 0.0};
  s.fixed_temperature = std::numeric_limits<double>::infinity();
  s.theta = kQuarterPi;
  const SweepResult r = run_sweep(s);
  for (const SweepRow& row : r.rows) {
    CHECK(row.concurrence == 0.0);
    CHECK(row.c_l1_total < 1e-14);
    CHECK(row.c_l1_local < 1e-14);
    CHECK(std::fabs(row.c_cc) < 1e-14);
  }
}

TEST_CASE("run_sweep: grid refinement keeps shared points bit-identical") {
  const SweepResult coarse =
      run_sweep(temperature_sweep({10.0, 15.0, 10.0}, 0.5, 20.0, 51));
  const SweepResult fine =
      run_sweep(temperature_sweep({10.0, 15.0, 10.0}, 0.5, 20.0, 101));
  for (std::size_t i = 0; i < coarse.rows.size(); ++i) {
    CHECK(coarse.rows[i].axis_value == fine.rows[2 * i].axis_value);
    CHECK(coarse.rows[i].concurrence == fine.rows[2 * i].concurrence);
    CHECK(coarse.rows[i].c_cc == fine.rows[2 * i].c_cc);
  }
}

TEST_CASE("run_sweep: worker count does not change results") {
  const SweepSpec s = temperature_sweep({10.0, 15.0, 160.0}, 0.0, 50.0, 40);
  setenv("DQDCORR_THREADS", "1", 1);
  const SweepResult serial = run_sweep(s);
  setenv("DQDCORR_THREADS", "4", 1);
  const SweepResult parallel = run_sweep(s);
  unsetenv("DQDCORR_THREADS");
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].concurrence == parallel.rows[i].concurrence);
    CHECK(serial.rows[i].c_cc == parallel.rows[i].c_cc);
  }
}

TEST_CASE("threshold_temperature: strong coupling vanishes near 66.9") {
  const double t_star = threshold_temperature({10.0, 15.0, 160.0}, 0.01, 1e3);
  CHECK(t_star == doctest::Approx(66.9).epsilon(0.005));
  const double oracle = threshold_oracle({10.0, 15.0, 160.0}, 0.01, 1e3);
  CHECK(t_star == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("threshold_temperature: weak-coupling values against the oracle") {
  // v = 10/3 lands on ~9.03 (quoted 9.02 / ~9); v = 10/6 on ~7.3 (quoted 7.2)
  const double t3 = threshold_temperature({10.0, 15.0, 10.0 / 3.0}, 0.01, 1e2);
  CHECK(t3 == doctest::Approx(9.02).epsilon(0.005));
  CHECK(t3 ==
        doctest::Approx(threshold_oracle({10.0, 15.0, 10.0 / 3.0}, 0.01, 1e2))
            .epsilon(1e-4));

  const double t6 = threshold_temperature({10.0, 15.0, 10.0 / 6.0}, 0.01, 1e2);
  CHECK(t6 == doctest::Approx(7.2).epsilon(0.05));

  // v = 10: the engine and the oracle agree on ~13.77
  const double t10 = threshold_temperature({10.0, 15.0, 10.0}, 0.01, 1e2);
  CHECK(t10 ==
        doctest::Approx(threshold_oracle({10.0, 15.0, 10.0}, 0.01, 1e2))
            .epsilon(1e-4));
  CHECK(t10 == doctest::Approx(13.7694).epsilon(1e-3));
}

TEST_CASE("threshold_temperature: bracketing invariant around t*") {
  for (const double v : {160.0, 10.0, 10.0 / 3.0}) {
    const ModelParams p{10.0, 15.0, v};
    const double t_star = threshold_temperature(p, 0.01, 1e3);
    CHECK(concurrence(gibbs_analytic(p, Temperature(t_star - 0.5))) > 0.0);
    CHECK(concurrence(gibbs_analytic(p, Temperature(t_star + 0.5))) == 0.0);
  }
}

TEST_CASE("threshold_temperature: unbracketed endpoints are rejected with "
          "both values reported") {
  // C(t_lo) = 0: the lower endpoint already sits beyond the threshold
  CHECK_THROWS_WITH_AS(threshold_temperature({10.0, 15.0, 160.0}, 900.0, 1e3),
                       doctest::Contains("bracket"), numeric_error);
  // C(t_hi) > 0: upper end still entangled
  CHECK_THROWS_AS(threshold_temperature({10.0, 15.0, 160.0}, 0.01, 1.0),
                  numeric_error);
}

TEST_CASE("figure_dataset: fig2 curves and anchors") {
  const auto curves = figure_dataset(FigureId::fig2);
  REQUIRE(curves.size() == 4);
  CHECK(curves[0].spec.label == "v160");
  CHECK(curves[0].rows.front().axis_value == 0.0);
  CHECK(curves[0].rows.front().concurrence ==
        doctest::Approx(0.988).epsilon(0.002));
  for (const auto& curve : curves) {
    CHECK(curve.rows.size() == 400);
    // non-increasing beyond the global maximum
    const auto peak = std::max_element(
        curve.rows.begin(), curve.rows.end(),
        [](const SweepRow& a, const SweepRow& b) {
          return a.concurrence < b.concurrence;
        });
    for (auto it = peak; std::next(it) != curve.rows.end(); ++it)
      CHECK(std::next(it)->concurrence <= it->concurrence + 1e-12);
  }
}

TEST_CASE("figure_dataset: fig3 anchor at delta1 = 1") {
  const auto curves = figure_dataset(FigureId::fig3);
  REQUIRE(curves.size() == 4);
  CHECK(curves[0].spec.label == "d1_1");
  CHECK(curves[0].rows.front().concurrence ==
        doctest::Approx(0.912).epsilon(0.002));
}

TEST_CASE("figure_dataset: fig4 separability at v = 0") {
  const auto curves = figure_dataset(FigureId::fig4);
  REQUIRE(curves.size() == 4);
  for (const auto& curve : curves) {
    CHECK(curve.rows.front().axis_value == 0.0);
    CHECK(curve.rows.front().concurrence < 1e-9);
  }
}

TEST_CASE("figure_dataset: fig5 and fig6 log grids") {
  const auto fig5a = figure_dataset(FigureId::fig5a);
  REQUIRE(fig5a.size() == 1);
  CHECK(fig5a[0].spec.theta == 0.0);
  CHECK(fig5a[0].spec.log_scale);
  CHECK(fig5a[0].rows.front().axis_value == 1e-2);
  CHECK(fig5a[0].rows.back().axis_value == 1e3);

  const auto fig5c = figure_dataset(FigureId::fig5c);
  CHECK(fig5c[0].spec.theta == doctest::Approx(kQuarterPi).epsilon(1e-15));

  const auto fig6 = figure_dataset(FigureId::fig6);
  REQUIRE(fig6.size() == 2);
  CHECK(fig6[0].spec.label == "v10");
  CHECK(fig6[1].spec.label == "v10over3");
}

TEST_CASE("figure_dataset: ordering property c_cc >= concurrence on the "
          "fig5c/fig6 grids") {
  for (const auto& curves :
       {figure_dataset(FigureId::fig5c), figure_dataset(FigureId::fig6)}) {
    for (const auto& curve : curves)
      for (const SweepRow& row : curve.rows)
        CHECK(row.c_cc >= row.concurrence - 1e-10);
  }
}
