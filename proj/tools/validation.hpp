#pragma once

#include <ostream>
#include <string>
#include <vector>

// Analytic-vs-numeric validation grid: every closed-form quantity is checked
// against its spectral-oracle counterpart on a randomized parameter grid.

namespace dqd::cli {

struct ValidationCategory {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string worst_point;

  bool pass() const { return max_deviation <= tolerance; }
};

struct ValidationReport {
  int points = 0;
  unsigned seed = 0;
  std::vector<ValidationCategory> categories;

  bool pass() const;
};

inline constexpr int kDefaultValidationPoints = 8000;
inline constexpr int kCoarseValidationPoints = 500;
inline constexpr unsigned kDefaultValidationSeed = 12345;

// Draws `points` random (delta1, delta2, v, t) tuples (couplings in [0,20],
// v in [0,200], t a mix of 0, infinity and log-uniform [1e-2, 10^2.5]) and
// accumulates the worst deviation per category.
ValidationReport run_validation(int points, unsigned seed);

void print_report(const ValidationReport& report, std::ostream& out);

}  // namespace dqd::cli
