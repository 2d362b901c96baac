#include "validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "dqd/correlations.hpp"
#include "format.hpp"

namespace dqd::cli {

bool ValidationReport::pass() const {
  return std::all_of(categories.begin(), categories.end(),
                     [](const ValidationCategory& c) { return c.pass(); });
}

namespace {

struct Accumulator {
  ValidationCategory cat;

  Accumulator(std::string name, double tol) {
    cat.name = std::move(name);
    cat.tolerance = tol;
  }

  void feed(double dev, const std::string& point) {
    if (dev > cat.max_deviation) {
      cat.max_deviation = dev;
      cat.worst_point = point;
    }
  }
};

std::string describe(const ModelParams& p, double t) {
  std::ostringstream os;
  os << "(d1=" << fmt12(p.delta1) << ", d2=" << fmt12(p.delta2)
     << ", v=" << fmt12(p.v) << ", t=" << fmt12(t) << ")";
  return os.str();
}

}  // namespace

ValidationReport run_validation(int points, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coupling(0.0, 20.0);
  std::uniform_real_distribution<double> coulomb(0.0, 200.0);
  std::uniform_real_distribution<double> log_t(-2.0, 2.5);

  Accumulator spectrum("spectrum", 1e-10);
  Accumulator elements("rho_elements", 1e-10);
  Accumulator r_eigen("r_eigenvalues", 1e-9);
  Accumulator conc("concurrence", 1e-9);
  Accumulator ccc("ccc_closed_form", 1e-12);
  Accumulator wootters("wootters_form", 1e-12);

  constexpr double kQuarterPi = std::numbers::pi / 4.0;

  for (int i = 0; i < points; ++i) {
    const ModelParams p{coupling(rng), coupling(rng), coulomb(rng)};
    double t_draw = std::pow(10.0, log_t(rng));
    if (i % 10 == 0) t_draw = 0.0;
    if (i % 10 == 1) t_draw = std::numeric_limits<double>::infinity();
    const Temperature t(t_draw);
    const std::string where = describe(p, t_draw);

    const Spectrum sa = analytic_spectrum(p);
    const Spectrum sn = numeric_spectrum(p);
    double dev = 0.0;
    for (int k = 0; k < 4; ++k)
      dev = std::max(dev, std::fabs(sa.energies[k] - sn.energies[k]));
    spectrum.feed(dev, where);

    const ThermalState ga = gibbs_analytic(p, t);
    const ThermalState gn = gibbs_numeric(p, t);
    dev = std::max({std::fabs(ga.elements.r11 - gn.elements.r11),
                    std::fabs(ga.elements.r12 - gn.elements.r12),
                    std::fabs(ga.elements.r13 - gn.elements.r13),
                    std::fabs(ga.elements.r14 - gn.elements.r14),
                    std::fabs(ga.elements.r22 - gn.elements.r22),
                    std::fabs(ga.elements.r23 - gn.elements.r23)});
    elements.feed(dev, where);

    const RSpectrum rs = r_spectrum_analytic(ga);
    const auto rn = r_spectrum_of_density(ga.rho);
    dev = 0.0;
    for (int k = 0; k < 4; ++k)
      dev = std::max(dev, std::fabs(rs.lambda[k] - rn[k]));
    r_eigen.feed(dev, where);

    conc.feed(std::fabs(concurrence_analytic(ga) - concurrence_numeric(ga)),
              where);

    const MeasureSet m = correlated_coherence(ga, kQuarterPi);
    ccc.feed(std::fabs(correlated_coherence_closed_form(ga) - m.c_cc), where);

    wootters.feed(
        std::fabs(concurrence_branch_form(ga) - concurrence_analytic(ga)),
        where);
  }

  ValidationReport report;
  report.points = points;
  report.seed = seed;
  report.categories = {spectrum.cat, elements.cat, r_eigen.cat,
                       conc.cat,     ccc.cat,      wootters.cat};
  return report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
  out << "validation grid: " << report.points << " points, seed "
      << report.seed << "\n";
  for (const auto& c : report.categories) {
    out << c.name << ": max deviation " << fmt12(c.max_deviation) << " (tol "
        << fmt12(c.tolerance) << ") " << (c.pass() ? "PASS" : "FAIL");
    if (!c.pass()) out << " at " << c.worst_point;
    out << "\n";
  }
  out << "overall: " << (report.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace dqd::cli
