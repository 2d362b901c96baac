#pragma once

#include <string>
#include <vector>

#include "dqd/correlations.hpp"

// Parameter sweeps over temperature or one coupling, the threshold
// temperature finder, and the canned parameter sets behind the reference
// dataset generators. Sweep points are independent and are evaluated by a
// parallel map; results are assembled in grid order, so output is
// deterministic regardless of scheduling. Worker count comes from the
// DQDCORR_THREADS environment variable (default: hardware concurrency).

namespace dqd {

enum class SweepAxis { temperature, coulomb, delta1, delta2 };

std::string_view to_string(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::temperature;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;          // >= 2
  ModelParams fixed;       // the swept field is ignored
  double fixed_temperature = 0.0;  // used when axis != temperature; inf ok
  double theta = 0.0;      // basis angle for the coherence measures
  bool log_scale = false;  // requires start > 0
  std::string label;       // curve label, used by the dataset generators

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SweepRow {
  double axis_value = 0.0;
  double concurrence = 0.0;
  double c_l1_total = 0.0;
  double c_l1_local = 0.0;
  double c_cc = 0.0;
  SpectrumSource path = SpectrumSource::analytic;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSpec spec;
  std::string provenance;
};

// The grid a spec expands to: points values from start to stop inclusive,
// linear or logarithmic, strictly increasing.
std::vector<double> sweep_grid(const SweepSpec& spec);

SweepResult run_sweep(const SweepSpec& spec);

// Smallest temperature above which the concurrence stays zero, located by a
// 200-point pre-scan (guarding against non-monotone onsets) plus bisection on
// the positivity indicator. Requires concurrence > 0 at t_lo and == 0 at
// t_hi; otherwise throws dqd::numeric_error reporting both endpoint values.
double threshold_temperature(const ModelParams& p, double t_lo, double t_hi,
                             double tol = 1e-4);

// Reference dataset generators, one SweepResult per curve:
//   fig2  - temperature sweeps at delta1=10, delta2=15 for
//           v in {160, 80, 10/3, 10/6}
//   fig3  - temperature sweeps at v=20, delta2=8 for delta1 in {1, 2, 5, 10}
//           (only delta1=1 is an externally quoted curve; the rest follow the
//           stated "increasing delta1" protocol)
//   fig4  - Coulomb sweeps at t=0.1 with delta2=delta1 in {1, 2, 5, 10}
//   fig5a/b/c - log-T sweeps at delta1=10, delta2=15, v=160 with
//           theta in {0, 0.95*pi/4, pi/4}
//   fig6  - log-T sweeps at delta1=10, delta2=15, theta=pi/4 for
//           v in {10, 10/3}
enum class FigureId { fig2, fig3, fig4, fig5a, fig5b, fig5c, fig6 };

std::string_view to_string(FigureId id);

std::vector<SweepResult> figure_dataset(FigureId id);

}  // namespace dqd
