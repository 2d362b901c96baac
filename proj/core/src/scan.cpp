#include "dqd/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "dqd/errors.hpp"
#include "dqd/version.hpp"

namespace dqd {

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::temperature: return "temperature";
    case SweepAxis::coulomb: return "coulomb";
    case SweepAxis::delta1: return "delta1";
    case SweepAxis::delta2: return "delta2";
  }
  return "?";
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
    case FigureId::fig5a: return "fig5a";
    case FigureId::fig5b: return "fig5b";
    case FigureId::fig5c: return "fig5c";
    case FigureId::fig6: return "fig6";
  }
  return "?";
}

void SweepSpec::validate() const {
  fixed.validate();
  if (!(start < stop)) {
    std::ostringstream os;
    os << "SweepSpec: start must be < stop (start=" << start
       << ", stop=" << stop << ")";
    throw std::invalid_argument(os.str());
  }
  if (points < 2) {
    std::ostringstream os;
    os << "SweepSpec: points must be >= 2 (points=" << points << ")";
    throw std::invalid_argument(os.str());
  }
  if (log_scale && !(start > 0.0))
    throw std::invalid_argument(
        "SweepSpec: log_scale requires start > 0");
  if (axis == SweepAxis::temperature) {
    if (start < 0.0)
      throw std::invalid_argument(
          "SweepSpec: temperature start must be >= 0");
    if (std::isinf(stop))
      throw std::invalid_argument(
          "SweepSpec: temperature stop must be finite");
  } else {
    if (std::isnan(fixed_temperature) || fixed_temperature < 0.0)
      throw std::invalid_argument(
          "SweepSpec: fixed_temperature must be >= 0");
    if (!std::isfinite(stop))
      throw std::invalid_argument("SweepSpec: stop must be finite");
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  spec.validate();
  const int n = spec.points;
  std::vector<double> grid(n);
  if (spec.log_scale) {
    const double la = std::log(spec.start);
    const double lb = std::log(spec.stop);
    for (int i = 0; i < n; ++i)
      grid[i] = std::exp(la + (lb - la) * (static_cast<double>(i) / (n - 1)));
  } else {
    for (int i = 0; i < n; ++i)
      grid[i] = spec.start +
                (spec.stop - spec.start) * (static_cast<double>(i) / (n - 1));
  }
  grid.front() = spec.start;
  grid.back() = spec.stop;
  return grid;
}

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("DQDCORR_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Deterministic parallel map: results land at their grid index no matter
// which worker computes them.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

ModelParams params_at(const SweepSpec& spec, double value) {
  ModelParams p = spec.fixed;
  switch (spec.axis) {
    case SweepAxis::coulomb: p.v = value; break;
    case SweepAxis::delta1: p.delta1 = value; break;
    case SweepAxis::delta2: p.delta2 = value; break;
    case SweepAxis::temperature: break;
  }
  return p;
}

SweepRow evaluate_point(const SweepSpec& spec, double value) {
  const ModelParams p = params_at(spec, value);
  const Temperature t(spec.axis == SweepAxis::temperature
                          ? value
                          : spec.fixed_temperature);
  const ThermalState state = gibbs_analytic(p, t);
  const MeasureSet m = correlated_coherence(state, spec.theta);
  return SweepRow{value,       m.concurrence, m.c_l1_total,
                  m.c_l1_local, m.c_cc,       state.path};
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  const std::vector<double> grid = sweep_grid(spec);
  SweepResult result;
  result.spec = spec;
  result.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    result.rows[i] = evaluate_point(spec, grid[i]);
  });
  std::ostringstream os;
  os << kEngineName << " " << kVersion;
  result.provenance = os.str();
  return result;
}

double threshold_temperature(const ModelParams& p, double t_lo, double t_hi,
                             double tol) {
  p.validate();
  if (!(tol > 0.0))
    throw std::invalid_argument("threshold_temperature: tol must be > 0");
  if (!(t_lo >= 0.0 && t_lo < t_hi) || !std::isfinite(t_hi))
    throw std::invalid_argument(
        "threshold_temperature: need 0 <= t_lo < t_hi < inf");

  const auto conc_at = [&p](double t) {
    return concurrence(gibbs_analytic(p, Temperature(t)));
  };
  const double c_lo = conc_at(t_lo);
  const double c_hi = conc_at(t_hi);
  if (!(c_lo > 0.0) || c_hi > 0.0) {
    std::ostringstream os;
    os << "threshold_temperature: endpoints do not bracket a threshold: "
       << "C(" << t_lo << ") = " << c_lo << ", C(" << t_hi << ") = " << c_hi;
    throw numeric_error(os.str());
  }

  // Pre-scan so a non-monotone onset cannot fool the bisection: bracket
  // around the last strictly positive grid point.
  constexpr int kPreScan = 200;
  double lo = t_lo, hi = t_hi;
  for (int i = kPreScan - 1; i >= 1; --i) {
    const double t = t_lo + (t_hi - t_lo) * (static_cast<double>(i) / kPreScan);
    if (conc_at(t) > 0.0) {
      lo = t;
      hi = t_lo + (t_hi - t_lo) * (static_cast<double>(i + 1) / kPreScan);
      break;
    }
  }

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (conc_at(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

SweepSpec temperature_spec(ModelParams fixed, double start, double stop,
                           int points, double theta, bool log_scale,
                           std::string label) {
  SweepSpec s;
  s.axis = SweepAxis::temperature;
  s.start = start;
  s.stop = stop;
  s.points = points;
  s.fixed = fixed;
  s.theta = theta;
  s.log_scale = log_scale;
  s.label = std::move(label);
  return s;
}

}  // namespace

std::vector<SweepResult> figure_dataset(FigureId id) {
  constexpr int kPoints = 400;
  std::vector<SweepResult> out;
  switch (id) {
    case FigureId::fig2: {
      const std::array<std::pair<double, const char*>, 4> curves{
          {{160.0, "v160"},
           {80.0, "v80"},
           {10.0 / 3.0, "v10over3"},
           {10.0 / 6.0, "v10over6"}}};
      for (const auto& [v, label] : curves)
        out.push_back(run_sweep(temperature_spec(
            ModelParams{10.0, 15.0, v}, 0.0, 100.0, kPoints, kQuarterPi,
            false, label)));
      break;
    }
    case FigureId::fig3: {
      for (const double d1 : {1.0, 2.0, 5.0, 10.0}) {
        std::ostringstream label;
        label << "d1_" << static_cast<int>(d1);
        SweepResult r = run_sweep(temperature_spec(
            ModelParams{d1, 8.0, 20.0}, 0.0, 100.0, kPoints, kQuarterPi,
            false, label.str()));
        // Only the d1 = 1 curve has an externally quoted anchor; the rest
        // follow the stated increasing-d1 protocol.
        if (d1 != 1.0) r.provenance += "; curve value not externally quoted";
        out.push_back(std::move(r));
      }
      break;
    }
    case FigureId::fig4: {
      for (const double d : {1.0, 2.0, 5.0, 10.0}) {
        SweepSpec s;
        s.axis = SweepAxis::coulomb;
        s.start = 0.0;
        s.stop = 50.0;
        s.points = kPoints;
        s.fixed = ModelParams{d, d, 0.0};
        s.fixed_temperature = 0.1;
        s.theta = kQuarterPi;
        std::ostringstream label;
        label << "d_" << static_cast<int>(d);
        s.label = label.str();
        out.push_back(run_sweep(s));
      }
      break;
    }
    case FigureId::fig5a:
    case FigureId::fig5b:
    case FigureId::fig5c: {
      const double theta = id == FigureId::fig5a   ? 0.0
                           : id == FigureId::fig5b ? 0.95 * kQuarterPi
                                                   : kQuarterPi;
      const char* label = id == FigureId::fig5a   ? "theta_0"
                          : id == FigureId::fig5b ? "theta_095pi4"
                                                  : "theta_pi4";
      out.push_back(run_sweep(temperature_spec(ModelParams{10.0, 15.0, 160.0},
                                               1e-2, 1e3, kPoints, theta,
                                               true, label)));
      break;
    }
    case FigureId::fig6: {
      const std::array<std::pair<double, const char*>, 2> curves{
          {{10.0, "v10"}, {10.0 / 3.0, "v10over3"}}};
      for (const auto& [v, label] : curves)
        out.push_back(run_sweep(temperature_spec(ModelParams{10.0, 15.0, v},
                                                 1e-2, 1e3, kPoints,
                                                 kQuarterPi, true, label)));
      break;
    }
  }
  return out;
}

}  // namespace dqd
