#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dqd/scan.hpp"

// Command-line surface: single-point evaluation, sweeps, threshold search,
// reference dataset emission and the analytic-vs-numeric validation report.
// Exit codes: 0 success, 1 usage error, 2 numerical/validation failure,
// 3 I/O failure.

namespace dqd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitIo = 3;

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Command { point, sweep, threshold, figure, validate };
enum class OutputFormat { csv, json };

struct RunConfig {
  Command command = Command::point;
  ModelParams params;
  double temperature = 0.0;  // point evaluation; inf means beta = 0
  double theta = 0.0;
  OutputFormat format = OutputFormat::csv;
  std::string output_path = "-";  // "-" writes to the attached stream

  SweepSpec sweep;  // sweep command

  double t_lo = 1e-2;  // threshold bracket
  double t_hi = 1e3;
  double tol = 1e-4;

  FigureId figure = FigureId::fig2;
  std::string outdir = ".";

  int grid_points = 0;  // validate
  unsigned seed = 0;
};

// Executes one parsed command. Streams are the process stdout/stderr unless
// a test substitutes its own.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Never throws; failures map to the exit codes
// above.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Emitters, exposed for tests: the sweep CSV layout is part of the contract
// (header always present, 12 significant digits, LF endings, '.' decimal).
void write_sweep_csv(const SweepResult& result, std::ostream& out);
void write_sweep_json(const SweepResult& result, std::ostream& out);

}  // namespace dqd::cli
