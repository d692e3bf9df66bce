#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptmathieu/errors.hpp"
#include "ptmathieu/eig.hpp"
#include "ptmathieu/fit.hpp"
#include "ptmathieu/parallel.hpp"
#include "ptmathieu/sweep.hpp"

namespace ptmathieu::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view to_string(Command c) {
  switch (c) {
  case Command::Spectrum: return "spectrum";
  case Command::Sweep: return "sweep";
  case Command::Surface: return "surface";
  case Command::Trace: return "trace";
  case Command::Fit: return "fit";
  }
  return "";
}

Command parse_command(std::string_view text) {
  for (Command c : {Command::Spectrum, Command::Sweep, Command::Surface, Command::Trace,
                    Command::Fit}) {
    if (text == to_string(c)) {
      return c;
    }
  }
  throw std::invalid_argument("unknown command '" + std::string(text) +
                              "' (expected spectrum, sweep, surface, trace or fit)");
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return parts;
    }
    start = pos + 1;
  }
}

// ---- output tables ---------------------------------------------------------

using Cell = std::variant<std::monostate, double, long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    return format_number(std::get<double>(c));
  }
  if (std::holds_alternative<long>(c)) {
    return std::to_string(std::get<long>(c));
  }
  if (std::holds_alternative<std::string>(c)) {
    return std::get<std::string>(c);
  }
  return "";
}

Json number_json(double x) { return Json(std::stod(format_number(x))); }

Json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    return number_json(std::get<double>(c));
  }
  if (std::holds_alternative<long>(c)) {
    return Json(std::get<long>(c));
  }
  if (std::holds_alternative<std::string>(c)) {
    return Json(std::get<std::string>(c));
  }
  return Json(nullptr);
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = to_string(c.command);
  j["q"] = number_json(c.q);
  j["delta"] = number_json(c.delta);
  j["j"] = c.j;
  j["bc"] = to_string(c.bc);
  j["k"] = c.k;
  j["sweep_param"] = to_string(c.sweep_param);
  j["grid"] = c.grid_text;
  j["q_grid"] = c.q_grid_text;
  j["delta_grid"] = c.delta_grid_text;
  j["fit_range"] = {number_json(c.fit_range.first), number_json(c.fit_range.second)};
  j["side"] = to_string(c.side);
  j["input"] = c.input_path;
  j["format"] = c.format == Format::Csv ? "csv" : "json";
  j["tol_im"] = number_json(c.tol_im);
  j["tol_q"] = number_json(c.tol_q);
  j["convergence_tol"] = number_json(c.convergence_tol);
  j["truncation"] = c.truncation;
  j["q_max"] = number_json(c.q_max);
  j["scan_step"] = number_json(c.scan_step);
  j["jump_threshold"] = number_json(c.jump_threshold);
  return j;
}

// Result of one command: the table plus command-specific JSON extras.
struct Artifact {
  Table table;
  Json extras = Json::object();
  std::string summary;
};

std::string render(const RunConfig& cfg, const Artifact& art) {
  std::ostringstream os;
  if (cfg.format == Format::Csv) {
    os << "# ptmathieu " << to_string(cfg.command) << " config=" << config_json(cfg).dump() << '\n';
    for (std::size_t i = 0; i < art.table.columns.size(); ++i) {
      os << (i ? "," : "") << art.table.columns[i];
    }
    os << '\n';
    for (const auto& row : art.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << cell_text(row[i]);
      }
      os << '\n';
    }
    return os.str();
  }
  Json doc;
  doc["config"] = config_json(cfg);
  doc["columns"] = art.table.columns;
  Json rows = Json::array();
  for (const auto& row : art.table.rows) {
    Json r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      r[art.table.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  for (const auto& [key, value] : art.extras.items()) {
    doc[key] = value;
  }
  return doc.dump(1) + '\n';
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    f << content;
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename output into '" + path + "'");
  }
}

// ---- commands --------------------------------------------------------------

ModelParams model_of(const RunConfig& c) { return {c.q, c.delta, c.j.front(), c.bc}; }

SweepOptions sweep_options(const RunConfig& c) {
  SweepOptions o;
  o.truncation = c.truncation;
  o.convergence_tol = c.convergence_tol;
  o.tol_im = c.tol_im;
  o.workers = c.workers;
  return o;
}

PhaseOptions phase_options(const RunConfig& c) {
  PhaseOptions o;
  o.k = c.k;
  o.q_max = c.q_max;
  o.tol_q = c.tol_q;
  o.scan_step = c.scan_step;
  o.jump_threshold = c.jump_threshold;
  o.tol_im = c.tol_im;
  o.truncation = c.truncation;
  o.workers = c.workers;
  return o;
}

Artifact run_spectrum(const RunConfig& c) {
  ConvergenceOptions opts;
  opts.n_start = c.truncation;
  opts.tol_im = c.tol_im;
  const Spectrum s = converged_spectrum(model_of(c), c.k, c.convergence_tol, opts);
  Artifact art;
  art.table.columns = {"level", "re", "im"};
  const auto low = s.lowest(c.k);
  for (std::size_t i = 0; i < low.size(); ++i) {
    art.table.rows.push_back({static_cast<long>(i), low[i].real(), low[i].imag()});
  }
  art.extras["n_used"] = s.n_used;
  art.summary = std::to_string(low.size()) + " levels, N=" + std::to_string(s.n_used);
  return art;
}

Json sweep_extras(const Sweep& s, double tol_im) {
  Json events = Json::array();
  for (const auto& e : detect_coalescence(s, tol_im)) {
    events.push_back({{"param", number_json(e.param_value)},
                      {"branch_a", e.branch_a},
                      {"branch_b", e.branch_b},
                      {"a_star", number_json(e.a_star)},
                      {"direction", to_string(e.direction)},
                      {"bracketed", e.bracketed}});
  }
  Json intervals = Json::array();
  for (const auto& curve : s.curves) {
    Json list = Json::array();
    for (const auto& iv : real_intervals(s, curve.label, tol_im)) {
      list.push_back({number_json(iv.lo), number_json(iv.hi)});
    }
    intervals.push_back({{"level", curve.label}, {"real", std::move(list)}});
  }
  return {{"n_used", s.n_used},
          {"ambiguities", s.ambiguities},
          {"events", std::move(events)},
          {"real_intervals", std::move(intervals)}};
}

// Appends (q, delta, level, re, im) rows for one sweep.
void append_sweep_rows(const Sweep& s, std::vector<std::vector<Cell>>& rows) {
  const auto& grid = s.curves.front().grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ModelParams at = with_param(s.base, s.param, grid[i]);
    for (const auto& curve : s.curves) {
      rows.push_back({at.q, at.delta, static_cast<long>(curve.label), curve.values[i].real(),
                      curve.values[i].imag()});
    }
  }
}

Artifact run_sweep(const RunConfig& c) {
  const Sweep s = sweep_levels(model_of(c), c.sweep_param, c.grid, c.k, sweep_options(c));
  Artifact art;
  art.table.columns = {"q", "delta", "level", "re", "im"};
  append_sweep_rows(s, art.table.rows);
  art.extras = sweep_extras(s, c.tol_im);
  art.summary = std::to_string(c.grid.size()) + " points x " + std::to_string(c.k) +
                " levels, N=" + std::to_string(s.n_used) + ", " +
                std::to_string(art.extras["events"].size()) + " coalescence events, " +
                std::to_string(s.ambiguities) + " ambiguities";
  return art;
}

Artifact run_surface(const RunConfig& c) {
  // One q sweep per delta, then rows reordered to (q, delta, level).
  std::vector<Sweep> sweeps(c.delta_grid.size());
  SweepOptions inner = sweep_options(c);
  inner.workers = 1;
  parallel_for(sweeps.size(), c.workers, [&](std::size_t i) {
    ModelParams base = model_of(c);
    base.delta = c.delta_grid[i];
    sweeps[i] = sweep_levels(base, SweepParam::Q, c.q_grid, c.k, inner);
  });
  Artifact art;
  art.table.columns = {"q", "delta", "level", "re", "im"};
  int n_max = 0;
  for (std::size_t qi = 0; qi < c.q_grid.size(); ++qi) {
    for (std::size_t di = 0; di < sweeps.size(); ++di) {
      for (const auto& curve : sweeps[di].curves) {
        art.table.rows.push_back({c.q_grid[qi], c.delta_grid[di], static_cast<long>(curve.label),
                                  curve.values[qi].real(), curve.values[qi].imag()});
      }
    }
  }
  for (const auto& s : sweeps) {
    n_max = std::max(n_max, s.n_used);
  }
  art.extras["n_used_max"] = n_max;
  art.summary = std::to_string(c.q_grid.size()) + " x " + std::to_string(c.delta_grid.size()) +
                " grid, " + std::to_string(c.k) + " levels";
  return art;
}

Artifact run_trace(const RunConfig& c) {
  const PhaseOptions opts = phase_options(c);
  const int j = c.j.front();
  const auto pos = trace_exceptional_line(c.delta_grid, j, c.bc, Side::PositiveQ, opts);
  const auto neg = trace_exceptional_line(c.delta_grid, j, c.bc, Side::NegativeQ, opts);
  auto is_jump_at = [](const ExceptionalLine& line, double d) {
    return std::find(line.jumps.begin(), line.jumps.end(), d) != line.jumps.end();
  };
  Artifact art;
  art.table.columns = {"delta", "q_crit_pos", "q_crit_neg", "jump_flag"};
  auto cell = [](const CriticalValue& v) { return v ? Cell(*v) : Cell(std::monostate{}); };
  for (std::size_t i = 0; i < c.delta_grid.size(); ++i) {
    const double d = c.delta_grid[i];
    const bool jump = is_jump_at(pos, d) || is_jump_at(neg, d);
    art.table.rows.push_back(
        {d, cell(pos.points[i].q_crit), cell(neg.points[i].q_crit), static_cast<long>(jump)});
  }
  auto jumps_json = [](const ExceptionalLine& line) {
    Json a = Json::array();
    for (double d : line.jumps) {
      a.push_back(number_json(d));
    }
    return a;
  };
  art.extras["jumps_pos"] = jumps_json(pos);
  art.extras["jumps_neg"] = jumps_json(neg);
  art.summary = std::to_string(c.delta_grid.size()) + " delta points, " +
                std::to_string(pos.jumps.size()) + " jumps (q>0), " +
                std::to_string(neg.jumps.size()) + " jumps (q<0)";
  return art;
}

// Reads (delta, |q_crit|) for one side from a trace CSV, skipping Unbounded.
std::vector<FitPoint> read_trace_csv(const std::string& path, Side side) {
  std::ifstream f(path);
  if (!f) {
    throw IoError("cannot open '" + path + "'");
  }
  const std::string column = side == Side::PositiveQ ? "q_crit_pos" : "q_crit_neg";
  std::string line;
  int delta_col = -1;
  int q_col = -1;
  std::vector<FitPoint> points;
  while (std::getline(f, line)) {
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto fields = split(line, ',');
    if (delta_col < 0) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "delta") {
          delta_col = static_cast<int>(i);
        }
        if (fields[i] == column) {
          q_col = static_cast<int>(i);
        }
      }
      if (delta_col < 0 || q_col < 0) {
        throw std::invalid_argument("'" + path + "' lacks delta or " + column + " columns");
      }
      continue;
    }
    if (static_cast<int>(fields.size()) <= std::max(delta_col, q_col)) {
      throw std::invalid_argument("'" + path + "': short row '" + line + "'");
    }
    if (fields[q_col].empty()) {
      continue;
    }
    points.push_back({parse_double(fields[delta_col]), std::abs(parse_double(fields[q_col]))});
  }
  if (f.bad()) {
    throw IoError("read from '" + path + "' failed");
  }
  return points;
}

Artifact run_fit(const RunConfig& c) {
  Artifact art;
  art.table.columns = {"j", "bc", "A", "alpha", "residual_rms", "delta_lo", "delta_hi"};
  Json counts = Json::array();
  for (int j : c.j) {
    std::vector<FitPoint> points;
    if (!c.input_path.empty()) {
      points = read_trace_csv(c.input_path, c.side);
    } else {
      const auto line = trace_exceptional_line(c.delta_grid, j, c.bc, c.side, phase_options(c));
      for (const auto& p : line.points) {
        if (p.q_crit) {
          points.push_back({p.delta, std::abs(*p.q_crit)});
        }
      }
    }
    const FitResult fit = power_law_fit(points, c.fit_range);
    art.table.rows.push_back({static_cast<long>(j), std::string(to_string(c.bc)), fit.a_coef,
                              fit.alpha, fit.residual_rms, fit.delta_range.first,
                              fit.delta_range.second});
    counts.push_back({{"j", j}, {"n_points", fit.n_points}});
  }
  art.extras["n_points"] = std::move(counts);
  art.summary = std::to_string(c.j.size()) + " fits";
  return art;
}

// ---- parsing ---------------------------------------------------------------

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

void check_config(RunConfig& c) {
  require(c.tol_im > 0 && c.tol_q > 0 && c.convergence_tol > 0 && c.scan_step > 0 &&
              c.jump_threshold > 0,
          "tolerances and steps must be positive");
  require(c.q_max > 0, "q-max must be positive");
  require(c.k >= 1, "k must be >= 1");
  require(c.truncation >= kMinTruncation && c.truncation <= kMaxTruncation,
          "truncation must lie in [" + std::to_string(kMinTruncation) + ", " +
              std::to_string(kMaxTruncation) + "]");
  require(c.workers >= 1, "workers must be >= 1");
  require(!c.j.empty(), "j is required");
  for (int j : c.j) {
    validate({c.q, c.delta, j, c.bc});
  }
  require(c.command == Command::Fit || c.j.size() == 1,
          "only the fit command accepts several j values");
  require(c.fit_range.first > 0 && c.fit_range.first < c.fit_range.second,
          "fit range must satisfy 0 < lo < hi");

  switch (c.command) {
  case Command::Spectrum:
    break;
  case Command::Sweep:
    require(!c.grid_text.empty(), "sweep requires --grid");
    require(c.k >= 2, "sweep requires k >= 2");
    c.grid = parse_grid(c.grid_text);
    break;
  case Command::Surface:
    require(!c.q_grid_text.empty() && !c.delta_grid_text.empty(),
            "surface requires --q-grid and --delta-grid");
    require(c.k >= 2, "surface requires k >= 2");
    c.q_grid = parse_grid(c.q_grid_text);
    c.delta_grid = parse_grid(c.delta_grid_text);
    break;
  case Command::Trace:
    require(!c.delta_grid_text.empty(), "trace requires --delta-grid");
    require(c.k >= 2, "trace requires k >= 2");
    c.delta_grid = parse_grid(c.delta_grid_text);
    require(c.delta_grid.front() >= 0.0, "trace delta grid must be nonnegative");
    break;
  case Command::Fit:
    if (c.input_path.empty()) {
      require(c.k >= 2, "fit requires k >= 2");
      if (c.delta_grid_text.empty()) {
        c.delta_grid_text = "log:2:10:25";
      }
      c.delta_grid = parse_grid(c.delta_grid_text);
      require(c.delta_grid.front() >= 0.0, "fit delta grid must be nonnegative");
    } else {
      require(c.j.size() == 1, "fit from --input takes a single j label");
    }
    break;
  }
}

} // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") {
    s = "0";
  }
  return s;
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  if (text.starts_with("log:")) {
    const auto parts = split(text.substr(4), ':');
    require(parts.size() == 3, "log grid must be log:lo:hi:count");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double count = parse_double(parts[2]);
    require(lo > 0 && hi > lo, "log grid needs 0 < lo < hi");
    require(count >= 2 && count == std::floor(count) && count <= 1e6,
            "log grid count must be an integer >= 2");
    const int n = static_cast<int>(count);
    for (int i = 0; i < n; ++i) {
      grid.push_back(i == n - 1 ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
  } else if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    require(parts.size() == 3, "range grid must be lo:hi:step");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    require(step > 0 && hi >= lo, "range grid needs step > 0 and hi >= lo");
    const double count = std::floor((hi - lo) / step + 1e-9);
    require(count <= 1e7, "range grid too large");
    for (long i = 0; i <= static_cast<long>(count); ++i) {
      grid.push_back(lo + static_cast<double>(i) * step);
    }
  } else {
    for (auto part : split(text, ',')) {
      grid.push_back(parse_double(part));
    }
  }
  require(!grid.empty(), "empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    require(grid[i] > grid[i - 1], "grid must be strictly ascending: '" + std::string(text) + "'");
  }
  return grid;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig c;
  c.workers = default_workers();
  std::string command;
  std::string bc = "neumann";
  std::string sweep_param = "q";
  std::string side = "positive";
  std::string format = "csv";
  std::vector<double> fit_range;

  CLI::App app{"Spectra and PT-breaking thresholds of the deformed Mathieu operator", "ptmathieu"};
  app.set_config("--config", "", "Flat 'key = value' file; command-line flags take precedence");
  app.allow_config_extras(false);
  app.add_option("command", command, "spectrum | sweep | surface | trace | fit")->required();
  app.add_option("--q", c.q, "Coupling q");
  app.add_option("--delta", c.delta, "Deformation delta");
  app.add_option("--j", c.j, "Frequency index (fit accepts a list)")->delimiter(',');
  app.add_option("--bc", bc, "neumann | dirichlet");
  app.add_option("--k", c.k, "Number of lowest levels");
  app.add_option("--sweep-param", sweep_param, "q | delta");
  // Config files hand comma lists over as arrays; join them back into one grid string.
  auto grid_option = [&](const char* name, std::string& target, const char* help) {
    app.add_option(name, target, help)
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  };
  grid_option("--grid", c.grid_text, "Sweep grid: lo:hi:step, log:lo:hi:count or a,b,c");
  grid_option("--q-grid", c.q_grid_text, "Surface q grid");
  grid_option("--delta-grid", c.delta_grid_text, "Trace, surface or fit delta grid");
  app.add_option("--fit-range", fit_range, "Fit delta range lo,hi")->delimiter(',')->expected(2);
  app.add_option("--side", side, "positive | negative (fit)");
  app.add_option("--input", c.input_path, "Fit from an existing trace CSV");
  app.add_option("-o,--output", c.output_path, "Output path (default stdout)");
  app.add_option("--format", format, "csv | json");
  app.add_option("--tol-im", c.tol_im, "Relative realness tolerance");
  app.add_option("--tol-q", c.tol_q, "Bisection width for critical values");
  app.add_option("--convergence-tol", c.convergence_tol, "Truncation convergence tolerance");
  app.add_option("--truncation", c.truncation, "Starting Galerkin truncation N");
  app.add_option("--q-max", c.q_max, "Search limit for critical q");
  app.add_option("--scan-step", c.scan_step, "Coarse scan step for critical values");
  app.add_option("--jump-threshold", c.jump_threshold, "Relative jump threshold");
  app.add_option("--workers", c.workers, "Worker threads (default PTMATHIEU_WORKERS or 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::FileError& e) {
    throw IoError(e.what());
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  c.command = parse_command(command);
  c.bc = parse_boundary(bc);
  c.sweep_param = parse_sweep_param(sweep_param);
  if (side == "positive") {
    c.side = Side::PositiveQ;
  } else if (side == "negative") {
    c.side = Side::NegativeQ;
  } else {
    throw std::invalid_argument("side must be positive or negative");
  }
  if (format == "csv") {
    c.format = Format::Csv;
  } else if (format == "json") {
    c.format = Format::Json;
  } else {
    throw std::invalid_argument("format must be csv or json");
  }
  if (!fit_range.empty()) {
    c.fit_range = {fit_range[0], fit_range[1]};
  }
  check_config(c);
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto fail = [&](int code, std::string_view kind, const std::string& message) {
    Json record{{"error", kind}, {"exit_code", code}, {"message", message}};
    err << record.dump() << '\n';
    return code;
  };
  try {
    const RunConfig cfg = parse_config(args);
    Artifact art;
    switch (cfg.command) {
    case Command::Spectrum: art = run_spectrum(cfg); break;
    case Command::Sweep: art = run_sweep(cfg); break;
    case Command::Surface: art = run_surface(cfg); break;
    case Command::Trace: art = run_trace(cfg); break;
    case Command::Fit: art = run_fit(cfg); break;
    }
    const std::string content = render(cfg, art);
    const bool to_stdout = cfg.output_path.empty() || cfg.output_path == "-";
    if (to_stdout) {
      out << content;
      out.flush();
    } else {
      write_atomically(cfg.output_path, content);
    }
    (to_stdout ? err : out) << to_string(cfg.command) << ": " << art.summary << " -> "
                            << (to_stdout ? "stdout" : cfg.output_path) << '\n';
    return 0;
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const IoError& e) {
    return fail(4, "io", e.what());
  } catch (const NumericalError& e) {
    return fail(3, "numerical", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(2, "config", e.what());
  } catch (const std::exception& e) {
    return fail(3, "numerical", e.what());
  }
}

} // namespace ptmathieu::cli
