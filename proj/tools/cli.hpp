#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptmathieu/model.hpp"
#include "ptmathieu/phase.hpp"

namespace ptmathieu::cli {

enum class Command { Spectrum, Sweep, Surface, Trace, Fit };
enum class Format { Csv, Json };

/// File read/write failures (exit code 4).
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_config for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

/// Fully resolved run configuration. Grids are kept in both their textual
/// and expanded form so the output header can echo what was asked for.
struct RunConfig {
  Command command = Command::Spectrum;
  double q = 0.0;
  double delta = 0.0;
  std::vector<int> j{1};
  Boundary bc = Boundary::Neumann;
  int k = 6;
  SweepParam sweep_param = SweepParam::Q;
  std::string grid_text;
  std::vector<double> grid;
  std::string q_grid_text;
  std::vector<double> q_grid;
  std::string delta_grid_text;
  std::vector<double> delta_grid;
  std::pair<double, double> fit_range{2.0, 10.0};
  Side side = Side::PositiveQ;
  std::string input_path;
  std::string output_path; ///< empty or "-" writes to stdout
  Format format = Format::Csv;
  double tol_im = 1e-7;
  double tol_q = 1e-4;
  double convergence_tol = 1e-6;
  int truncation = 64;
  double q_max = 20.0;
  double scan_step = 0.02;
  double jump_threshold = 0.25;
  int workers = 1;
};

/// Grid syntax: "lo:hi:step" (inclusive of hi when it lies on the lattice),
/// "log:lo:hi:count" (log-spaced, both ends included), or a comma list.
/// Throws std::invalid_argument unless the result is nonempty and strictly
/// ascending.
std::vector<double> parse_grid(std::string_view text);

/// printf "%.12g", with negative zero printed as 0.
std::string format_number(double x);

/// Parses arguments (without the program name) and an optional flat
/// "key = value" config file given by --config; flags override the file.
/// Throws std::invalid_argument on any validation failure, IoError when the
/// config file cannot be read, HelpRequested for --help.
RunConfig parse_config(const std::vector<std::string>& args);

/// Parses, runs and writes the artifact. Returns the process exit code:
/// 0 success, 2 config, 3 numerical, 4 I/O. On failure a one-line JSON
/// error record goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptmathieu::cli
