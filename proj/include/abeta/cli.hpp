#ifndef ABETA_CLI_HPP
#define ABETA_CLI_HPP

// Command-line front end. Parsing and dispatch live here so the executable is
// a one-line main and the whole pipeline can be driven from tests.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abeta/beta.hpp"
#include "abeta/bounds.hpp"
#include "abeta/errors.hpp"
#include "abeta/parallel.hpp"
#include "abeta/radii.hpp"
#include "abeta/verify.hpp"

namespace abeta::cli {

enum class ExitCode : int { Ok = 0, ValidationError = 1, VerificationFailure = 2 };

enum class Command { Radius, Rogosinski, FsBound, LogBounds, Verify, Sweep };
enum class OutputFormat { Csv, Json };
enum class SweepVariants { Bohr, Rogosinski, Both };

/// Bad command line or environment; the message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

struct RunConfig {
  Command command = Command::Radius;
  std::vector<double> betas;
  std::vector<int> ms{1};
  std::vector<double> ps{1.0};
  std::vector<int> ns{1};
  std::vector<double> poly;
  std::vector<double> mus{1.0};
  SweepVariants variants = SweepVariants::Both;
  int samples = 1000;
  int atoms = 8;
  std::uint64_t seed = 0;
  int refine = 0;
  double slack = kDefaultSlack;
  double tol = kDefaultRadiusTolerance;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Value parsing

inline double parse_double(const std::string& flag, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError(flag, "expected a finite number, got '" + text + "'");
  }
  return v;
}

inline long long parse_integer(const std::string& flag, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw UsageError(flag, "expected an integer, got '" + text + "'");
  }
  return v;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

/// Rounds to 15 significant digits so 0.1 * 3 prints as 0.3.
inline double snap_grid_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

/// "a,b,c" or "start:stop:step". A range includes start and excludes stop
/// (up to a tolerance of 1e-9 steps).
inline std::vector<double> parse_grid(const std::string& flag, const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError(flag, "range must be start:stop:step");
    const double start = parse_double(flag, parts[0]);
    const double stop = parse_double(flag, parts[1]);
    const double step = parse_double(flag, parts[2]);
    if (!(step > 0.0)) throw UsageError(flag, "range step must be positive");
    if (!(stop > start)) throw UsageError(flag, "range stop must exceed start");
    std::vector<double> out;
    for (long i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (!(v < stop - 1e-9 * step)) break;
      if (out.size() >= 1'000'000) throw UsageError(flag, "range has too many points");
      out.push_back(snap_grid_value(v));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(flag, part));
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

inline std::vector<int> parse_int_list(const std::string& flag, const std::string& text,
                                       int minimum) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const long long v = parse_integer(flag, part);
    if (v < minimum || v > 1'000'000) {
      throw UsageError(flag, "value " + part + " must be an integer >= " + std::to_string(minimum));
    }
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw UsageError(flag, "empty list");
  return out;
}

/// ABETA_THREADS: unset means hardware concurrency; otherwise a positive integer.
inline unsigned resolve_threads(const char* env) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr) return hw;
  const std::string text(env);
  const long long v = parse_integer("ABETA_THREADS", text);
  if (v < 1 || v > 4096) throw UsageError("ABETA_THREADS", "must be a positive integer");
  return static_cast<unsigned>(v);
}

// ---------------------------------------------------------------------------
// Argument parsing

namespace detail {

struct RawArgs {
  std::optional<std::string> beta, beta_grid, m, p, n, poly, mu, mu_grid, variant, samples,
      atoms, seed, refine, slack, tol, format, out;
};

inline void add_common(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--format", raw.format, "output format: csv or json");
  sub->add_option("--out", raw.out, "write output to this file instead of stdout");
}

inline void add_beta(CLI::App* sub, RawArgs& raw, bool grid) {
  sub->add_option("--beta", raw.beta, "beta in [0, 1]");
  if (grid) sub->add_option("--beta-grid", raw.beta_grid, "list a,b,c or range start:stop:step");
}

inline void add_radius_params(CLI::App* sub, RawArgs& raw, bool with_n) {
  sub->add_option("--m", raw.m, "order of the Schwarz zero, m >= 1");
  sub->add_option("--p", raw.p, "exponent p > 0");
  if (with_n) sub->add_option("--N", raw.n, "first tail index N >= 1");
  sub->add_option("--poly", raw.poly, "area polynomial coefficients lambda_1,...,lambda_k");
}

inline std::vector<double> require_betas(const RawArgs& raw, bool allow_one) {
  std::vector<double> betas;
  std::string flag = "--beta";
  if (raw.beta && raw.beta_grid) throw UsageError("--beta", "give either --beta or --beta-grid");
  if (raw.beta) {
    betas.push_back(parse_double("--beta", *raw.beta));
  } else if (raw.beta_grid) {
    flag = "--beta-grid";
    betas = parse_grid(flag, *raw.beta_grid);
  } else {
    throw UsageError("--beta", "required");
  }
  for (double b : betas) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw UsageError(flag, "beta must lie in [0, 1], got " + format_double(b));
    }
    if (!allow_one && b == 1.0) {
      throw UsageError(flag, "beta = 1 is not admissible for radii");
    }
  }
  return betas;
}

inline int single(const std::string& flag, const std::vector<int>& v) {
  if (v.size() != 1) throw UsageError(flag, "expects a single value for this command");
  return v.front();
}

inline double single(const std::string& flag, const std::vector<double>& v) {
  if (v.size() != 1) throw UsageError(flag, "expects a single value for this command");
  return v.front();
}

inline std::vector<double> parse_p_list(const RawArgs& raw) {
  if (!raw.p) return {1.0};
  std::vector<double> out;
  for (const auto& part : split(*raw.p, ',')) {
    const double v = parse_double("--p", part);
    if (!(v > 0.0)) throw UsageError("--p", "must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--p", "empty list");
  return out;
}

inline std::vector<double> parse_poly(const RawArgs& raw) {
  if (!raw.poly || raw.poly->empty()) return {};
  std::vector<double> out;
  for (const auto& part : split(*raw.poly, ',')) {
    const double v = parse_double("--poly", part);
    if (!(v >= 0.0)) throw UsageError("--poly", "coefficients must be nonnegative");
    out.push_back(v);
  }
  return out;
}

inline int parse_count(const std::string& flag, const std::optional<std::string>& raw,
                       int fallback, int minimum) {
  if (!raw) return fallback;
  const long long v = parse_integer(flag, *raw);
  if (v < minimum || v > 100'000'000) {
    throw UsageError(flag, "must be an integer >= " + std::to_string(minimum));
  }
  return static_cast<int>(v);
}

}  // namespace detail

/// Parses argv into a validated RunConfig. Returns std::nullopt after printing
/// help. Throws UsageError on any invalid input.
inline std::optional<RunConfig> parse_args(int argc, const char* const* argv,
                                           std::ostream& help_out) {
  CLI::App app{"Bohr radii and coefficient bounds for the class A_beta", "abeta"};
  app.require_subcommand(1);
  detail::RawArgs raw;

  auto* radius = app.add_subcommand("radius", "sharp Bohr radius");
  detail::add_beta(radius, raw, false);
  detail::add_radius_params(radius, raw, false);
  radius->add_option("--tol", raw.tol, "bracket width tolerance");
  detail::add_common(radius, raw);

  auto* rog = app.add_subcommand("rogosinski", "sharp Bohr-Rogosinski radius");
  detail::add_beta(rog, raw, false);
  detail::add_radius_params(rog, raw, true);
  rog->add_option("--tol", raw.tol, "bracket width tolerance");
  detail::add_common(rog, raw);

  auto* fs = app.add_subcommand("fs-bound", "Fekete-Szego bound table");
  detail::add_beta(fs, raw, true);
  fs->add_option("--mu", raw.mu, "single real mu");
  fs->add_option("--mu-grid", raw.mu_grid, "list or range of mu values");
  detail::add_common(fs, raw);

  auto* lb = app.add_subcommand("log-bounds", "logarithmic coefficient difference bounds");
  detail::add_beta(lb, raw, true);
  detail::add_common(lb, raw);

  auto* ver = app.add_subcommand("verify", "Monte-Carlo check of every implemented inequality");
  detail::add_beta(ver, raw, true);
  detail::add_radius_params(ver, raw, true);
  ver->add_option("--samples", raw.samples, "members per beta");
  ver->add_option("--atoms", raw.atoms, "maximum atoms per sampled measure");
  ver->add_option("--seed", raw.seed, "64-bit seed");
  ver->add_option("--refine", raw.refine, "coordinate-ascent rounds on worst witnesses");
  ver->add_option("--slack", raw.slack, "numerical slack for pass/fail");
  detail::add_common(ver, raw);

  auto* sw = app.add_subcommand("sweep", "radii over a (beta, m, p, N) grid");
  detail::add_beta(sw, raw, true);
  detail::add_radius_params(sw, raw, true);
  sw->add_option("--variant", raw.variant, "bohr, rogosinski or both");
  sw->add_option("--tol", raw.tol, "bracket width tolerance");
  detail::add_common(sw, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    help_out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    throw UsageError("argument", what);
  }

  RunConfig cfg;
  const CLI::App* used = app.get_subcommands().front();
  const std::string name = used->get_name();
  if (name == "radius") cfg.command = Command::Radius;
  else if (name == "rogosinski") cfg.command = Command::Rogosinski;
  else if (name == "fs-bound") cfg.command = Command::FsBound;
  else if (name == "log-bounds") cfg.command = Command::LogBounds;
  else if (name == "verify") cfg.command = Command::Verify;
  else cfg.command = Command::Sweep;

  const bool radii_only = cfg.command == Command::Radius ||
                          cfg.command == Command::Rogosinski ||
                          cfg.command == Command::Sweep;
  cfg.betas = detail::require_betas(raw, !radii_only);
  if (raw.m) cfg.ms = parse_int_list("--m", *raw.m, 1);
  cfg.ps = detail::parse_p_list(raw);
  if (raw.n) cfg.ns = parse_int_list("--N", *raw.n, 1);
  cfg.poly = detail::parse_poly(raw);
  if (raw.mu && raw.mu_grid) throw UsageError("--mu", "give either --mu or --mu-grid");
  if (raw.mu) cfg.mus = {parse_double("--mu", *raw.mu)};
  if (raw.mu_grid) cfg.mus = parse_grid("--mu-grid", *raw.mu_grid);
  if (raw.variant) {
    if (*raw.variant == "bohr") cfg.variants = SweepVariants::Bohr;
    else if (*raw.variant == "rogosinski") cfg.variants = SweepVariants::Rogosinski;
    else if (*raw.variant == "both") cfg.variants = SweepVariants::Both;
    else throw UsageError("--variant", "expected bohr, rogosinski or both");
  }
  cfg.samples = detail::parse_count("--samples", raw.samples, cfg.samples, 0);
  cfg.atoms = detail::parse_count("--atoms", raw.atoms, cfg.atoms, 1);
  cfg.refine = detail::parse_count("--refine", raw.refine, cfg.refine, 0);
  if (raw.seed) {
    const std::string& s = *raw.seed;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || s.front() == '-' || *end != '\0' || errno == ERANGE) {
      throw UsageError("--seed", "expected a nonnegative 64-bit integer, got '" + s + "'");
    }
    cfg.seed = v;
  }
  if (raw.slack) {
    cfg.slack = parse_double("--slack", *raw.slack);
    if (!(cfg.slack >= 0.0)) throw UsageError("--slack", "must be nonnegative");
  }
  if (raw.tol) {
    cfg.tol = parse_double("--tol", *raw.tol);
    if (!(cfg.tol > 0.0 && cfg.tol < 0.5)) throw UsageError("--tol", "must lie in (0, 0.5)");
  }
  cfg.format = (cfg.command == Command::FsBound || cfg.command == Command::LogBounds ||
                cfg.command == Command::Sweep)
                   ? OutputFormat::Csv
                   : OutputFormat::Json;
  if (raw.format) {
    if (*raw.format == "csv") cfg.format = OutputFormat::Csv;
    else if (*raw.format == "json") cfg.format = OutputFormat::Json;
    else throw UsageError("--format", "expected csv or json");
  }
  if (raw.out) {
    if (raw.out->empty()) throw UsageError("--out", "empty path");
    cfg.out_path = *raw.out;
  }
  if (cfg.command == Command::Radius || cfg.command == Command::Rogosinski ||
      cfg.command == Command::Verify) {
    detail::single("--m", cfg.ms);
    detail::single("--p", cfg.ps);
    detail::single("--N", cfg.ns);
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Output

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

struct RadiusRow {
  double beta = 0.0;
  int m = 1;
  double p = 1.0;
  std::optional<int> n_start;
  RadiusVariant variant = RadiusVariant::BohrSchwarz;
  RootResult result;
};

inline const std::vector<std::string>& radius_header() {
  static const std::vector<std::string> h{"beta", "m",        "p",        "N",
                                          "variant", "root", "residual", "iterations"};
  return h;
}

inline std::vector<std::string> radius_fields(const RadiusRow& r) {
  return {format_double(r.beta),
          std::to_string(r.m),
          format_double(r.p),
          r.n_start ? std::to_string(*r.n_start) : std::string{},
          variant_name(r.variant),
          format_double(r.result.root),
          format_double(r.result.residual),
          std::to_string(r.result.iterations)};
}

inline nlohmann::json radius_json(const RadiusRow& r, const std::vector<double>& poly,
                                  double tol) {
  nlohmann::json j;
  j["variant"] = variant_name(r.variant);
  j["beta"] = r.beta;
  j["m"] = r.m;
  j["p"] = r.p;
  j["N"] = r.n_start ? nlohmann::json(*r.n_start) : nlohmann::json(nullptr);
  j["poly"] = poly;
  j["tol"] = tol;
  j["root"] = r.result.root;
  j["residual"] = r.result.residual;
  j["bracket"] = {r.result.lo, r.result.hi};
  j["iterations"] = r.result.iterations;
  return j;
}

inline RadiusRow solve_row(double beta, int m, double p, std::optional<int> n_start,
                           RadiusVariant variant, const std::vector<double>& poly, double tol) {
  RadiusProblem problem;
  problem.variant = variant;
  problem.beta = BetaParam(beta);
  problem.m = m;
  problem.p = p;
  if (n_start) problem.n_start = *n_start;
  problem.area = AreaPolynomial(poly);
  return {beta, m, p, n_start, variant, solve_radius(problem, tol)};
}

}  // namespace detail

/// Executes a validated configuration and writes one document to `out`.
inline ExitCode run(const RunConfig& cfg, std::ostream& out) {
  using nlohmann::json;
  const bool csv = cfg.format == OutputFormat::Csv;

  switch (cfg.command) {
    case Command::Radius:
    case Command::Rogosinski: {
      const bool rog = cfg.command == Command::Rogosinski;
      const auto row = detail::solve_row(
          cfg.betas.front(), cfg.ms.front(), cfg.ps.front(),
          rog ? std::optional<int>(cfg.ns.front()) : std::nullopt,
          rog ? RadiusVariant::BohrRogosinski : RadiusVariant::BohrSchwarz, cfg.poly, cfg.tol);
      if (csv) {
        out << detail::csv_row(detail::radius_header()) << detail::csv_row(detail::radius_fields(row));
      } else {
        json j = detail::radius_json(row, cfg.poly, cfg.tol);
        j["command"] = rog ? "rogosinski" : "radius";
        out << j.dump(2) << '\n';
      }
      return ExitCode::Ok;
    }

    case Command::FsBound: {
      json rows = json::array();
      if (csv) out << detail::csv_row({"beta", "mu", "bound"});
      for (double b : cfg.betas) {
        for (double mu : cfg.mus) {
          const double bound = fekete_szego_bound(mu, BetaParam(b));
          if (csv) {
            out << detail::csv_row({format_double(b), format_double(mu), format_double(bound)});
          } else {
            rows.push_back({{"beta", b}, {"mu", mu}, {"bound", bound}});
          }
        }
      }
      if (!csv) out << json{{"command", "fs-bound"}, {"rows", rows}}.dump(2) << '\n';
      return ExitCode::Ok;
    }

    case Command::LogBounds: {
      json rows = json::array();
      if (csv) {
        out << detail::csv_row({"beta", "gamma_lower", "gamma_upper", "Gamma_lower", "Gamma_upper"});
      }
      for (double b : cfg.betas) {
        const BoundPair g = log_diff_bounds(BetaParam(b));
        const BoundPair G = inverse_log_diff_bounds(BetaParam(b));
        if (csv) {
          out << detail::csv_row({format_double(b), format_double(g.lower), format_double(g.upper),
                                  format_double(G.lower), format_double(G.upper)});
        } else {
          rows.push_back({{"beta", b},
                          {"gamma_lower", g.lower},
                          {"gamma_upper", g.upper},
                          {"Gamma_lower", G.lower},
                          {"Gamma_upper", G.upper}});
        }
      }
      if (!csv) out << json{{"command", "log-bounds"}, {"rows", rows}}.dump(2) << '\n';
      return ExitCode::Ok;
    }

    case Command::Verify: {
      SweepConfig sc;
      sc.samples = cfg.samples;
      sc.max_atoms = cfg.atoms;
      sc.seed = cfg.seed;
      sc.m = cfg.ms.front();
      sc.p = cfg.ps.front();
      sc.n_start = cfg.ns.front();
      sc.area = AreaPolynomial(cfg.poly);
      sc.refine_iterations = cfg.refine;
      sc.check.slack = cfg.slack;
      sc.threads = cfg.threads;
      const SweepSummary summary = falsification_sweep(cfg.betas, sc);
      if (csv) {
        out << detail::csv_row(
            {"beta", "inequality", "checks", "violations", "max_excess", "pass", "witness"});
        for (const auto& r : summary.rows) {
          out << detail::csv_row({format_double(r.beta), r.inequality_id, std::to_string(r.checks),
                                  std::to_string(r.violations), format_double(r.max_excess),
                                  r.pass() ? "true" : "false", r.witness});
        }
      } else {
        json rows = json::array();
        for (const auto& r : summary.rows) {
          rows.push_back({{"beta", r.beta},
                          {"inequality", r.inequality_id},
                          {"checks", r.checks},
                          {"violations", r.violations},
                          {"max_excess", r.max_excess},
                          {"pass", r.pass()},
                          {"witness", r.witness}});
        }
        json doc{{"command", "verify"},
                 {"samples", cfg.samples},
                 {"atoms", cfg.atoms},
                 {"seed", cfg.seed},
                 {"slack", cfg.slack},
                 {"pass", summary.pass()},
                 {"rows", rows}};
        out << doc.dump(2) << '\n';
      }
      return summary.pass() ? ExitCode::Ok : ExitCode::VerificationFailure;
    }

    case Command::Sweep: {
      struct Cell {
        double beta;
        int m;
        double p;
        std::optional<int> n;
        RadiusVariant variant;
      };
      std::vector<Cell> cells;
      for (double b : cfg.betas) {
        for (int m : cfg.ms) {
          for (double p : cfg.ps) {
            if (cfg.variants != SweepVariants::Rogosinski) {
              cells.push_back({b, m, p, std::nullopt, RadiusVariant::BohrSchwarz});
            }
            if (cfg.variants != SweepVariants::Bohr) {
              for (int n : cfg.ns) cells.push_back({b, m, p, n, RadiusVariant::BohrRogosinski});
            }
          }
        }
      }
      std::vector<detail::RadiusRow> rows(cells.size());
      parallel_for_index(cells.size(), cfg.threads, [&](std::size_t i) {
        const Cell& c = cells[i];
        rows[i] = detail::solve_row(c.beta, c.m, c.p, c.n, c.variant, cfg.poly, cfg.tol);
      });
      if (csv) {
        out << detail::csv_row(detail::radius_header());
        for (const auto& r : rows) out << detail::csv_row(detail::radius_fields(r));
      } else {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(detail::radius_json(r, cfg.poly, cfg.tol));
        out << json{{"command", "sweep"}, {"rows", arr}}.dump(2) << '\n';
      }
      return ExitCode::Ok;
    }
  }
  return ExitCode::Ok;
}

/// Full entry point: parse, read ABETA_THREADS, run, write to --out or `out`.
/// Diagnostics go to `err` as a single line.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                      const char* threads_env) {
  try {
    auto cfg = parse_args(argc, argv, out);
    if (!cfg) return static_cast<int>(ExitCode::Ok);
    cfg->threads = resolve_threads(threads_env);
    if (cfg->out_path) {
      std::ostringstream buffer;
      const ExitCode code = run(*cfg, buffer);
      std::ofstream file(*cfg->out_path, std::ios::binary);
      if (!file) throw UsageError("--out", "cannot open '" + *cfg->out_path + "' for writing");
      file << buffer.str();
      if (!file.flush()) throw UsageError("--out", "write failed for '" + *cfg->out_path + "'");
      return static_cast<int>(code);
    }
    return static_cast<int>(run(*cfg, out));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
  }
  return static_cast<int>(ExitCode::ValidationError);
}

}  // namespace abeta::cli

#endif  // ABETA_CLI_HPP
