#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "eisenfun/check.hpp"
#include "eisenfun/cli.hpp"
#include "eisenfun/eft.hpp"
#include "eisenfun/error.hpp"
#include "eisenfun/phf.hpp"

namespace eisenfun::cli {

namespace {

using Cell = std::optional<double>;

// Evaluates `fn`, turning poles and undefined points into empty cells.
template <class Fn>
Cell guarded(Fn&& fn) {
  try {
    const double v = fn();
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const PoleError&) {
    return std::nullopt;
  } catch (const ExistenceError&) {
    return std::nullopt;
  }
}

struct EftBuiltin {
  RealFunction f;
  QuadratureSpec quad;
};

EftBuiltin eft_builtin(const std::string& name) {
  if (name.empty() || name == "gaussian") return {gaussian, QuadratureSpec{10.0, 1e-12, 20}};
  if (name == "expdecay") return {exp_decay, QuadratureSpec{60.0, 1e-10, 22}};
  throw UsageError("unknown function '" + name + "' (expected gaussian or expdecay)");
}

SeriesSpec series_builtin(const std::string& name) {
  if (name.empty() || name == "exp") return exp_scaled_series();
  if (name == "cosh") return cosh_series();
  if (name == "gaussian") return gaussian_series();
  if (name == "cos" || name == "sin") {
    // Real and imaginary parts of exp(i x).
    const bool cos_part = name == "cos";
    SeriesSpec s = exp_scaled_series({0.0, 1.0});
    auto rotation = s.coeff;
    s.coeff = [rotation, cos_part](int n) {
      const Complex c = rotation(n);
      return Complex{cos_part ? c.real() : c.imag(), 0.0};
    };
    s.eval = [cos_part](Complex z) { return cos_part ? std::cos(z) : std::sin(z); };
    return s;
  }
  throw UsageError("unknown series '" + name + "' (expected exp, cosh, cos, sin or gaussian)");
}

std::string fig_name(int id, Format format) {
  return "fig" + std::to_string(id) + (format == Format::json ? ".json" : ".csv");
}

DataTable figure1(const RunConfig& cfg) {
  DataTable t{{"x", "re1", "im1", "re2", "im2", "modulus"}, {}};
  for (double x : linspace(resolve_range(cfg, {0.0, 6.0, 121}))) {
    const Complex first = exp_unit_closed(x, 1);
    const Complex second = exp_unit_closed(x, 2);
    t.rows.push_back({x, first.real(), first.imag(), second.real(), second.imag(), std::abs(first)});
  }
  return t;
}

DataTable figure2(const RunConfig& cfg) {
  DataTable t{{"x", "e0", "e1", "e2", "e0r", "e1r", "e2r"}, {}};
  const auto xs = linspace(resolve_range(cfg, {-3.0, 3.0, 121}));
  const PhfTable values = phf_table(3, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    t.rows.push_back({xs[i], values.at(i, 0), values.at(i, 1), values.at(i, 2),
                      phf_reflect(0, xs[i]), phf_reflect(1, xs[i]), phf_reflect(2, xs[i])});
  }
  return t;
}

DataTable figure3(const RunConfig& cfg) {
  DataTable t{{"k", "re", "im"}, {}};
  const Range fallback{-4.0, 4.0, 81};
  const Range range{cfg.k_min.value_or(fallback.min), cfg.k_max.value_or(fallback.max),
                    cfg.steps.value_or(fallback.steps)};
  for (double k : linspace(range)) {
    Cell re;
    Cell im;
    try {
      const Complex v = eft(gaussian, k, 1);
      re = v.real();
      im = v.imag();
    } catch (const ExistenceError&) {
    }
    t.rows.push_back({k, re, im});
  }
  return t;
}

DataTable figure4(const RunConfig& cfg) {
  DataTable t{{"x", "t10", "t21", "t20"}, {}};
  const TangentIndex t10(1, 0);
  const TangentIndex t21(2, 1);
  const TangentIndex t20(2, 0);
  for (double x : linspace(resolve_range(cfg, {-2.0, 2.0, 81}))) {
    t.rows.push_back({x, guarded([&] { return tangent(t10, x); }),
                      guarded([&] { return tangent(t21, x); }),
                      guarded([&] { return tangent(t20, x); })});
  }
  return t;
}

DataTable figure5(const RunConfig& cfg) {
  DataTable t{{"x", "eisen_sec", "sech"}, {}};
  for (double x : linspace(resolve_range(cfg, {-3.0, 5.0, 161}))) {
    t.rows.push_back({x, guarded([&] { return secant(x); }), 1.0 / std::cosh(x)});
  }
  return t;
}

std::ostream* open_output(const RunConfig& cfg, std::ostream& fallback, std::ofstream& file) {
  if (cfg.out.empty()) return &fallback;
  file.open(cfg.out, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!file) throw std::filesystem::filesystem_error("cannot open output file", cfg.out,
                                                     std::make_error_code(std::errc::io_error));
  return &file;
}

int emit(const RunConfig& cfg, const DataTable& table, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = open_output(cfg, out, file);
  write_table(*os, table, cfg.format);
  os->flush();
  if (!*os) return kIoError;
  return kOk;
}

}  // namespace

std::vector<double> linspace(const Range& range) {
  if (range.steps < 2) throw UsageError("steps must be >= 2");
  if (!(range.min < range.max)) throw UsageError("min must be smaller than max");
  std::vector<double> xs(static_cast<std::size_t>(range.steps));
  const double span = range.max - range.min;
  for (int i = 0; i < range.steps; ++i) {
    xs[static_cast<std::size_t>(i)] = range.min + span * i / (range.steps - 1);
  }
  xs.back() = range.max;
  return xs;
}

Range resolve_range(const RunConfig& cfg, const Range& fallback) {
  return {cfg.min.value_or(fallback.min), cfg.max.value_or(fallback.max),
          cfg.steps.value_or(fallback.steps)};
}

DataTable figure_table(int id, const RunConfig& cfg) {
  switch (id) {
    case 1:
      return figure1(cfg);
    case 2:
      return figure2(cfg);
    case 3:
      return figure3(cfg);
    case 4:
      return figure4(cfg);
    case 5:
      return figure5(cfg);
    default:
      throw UsageError("figure id must be 1..5");
  }
}

DataTable phf_value_table(const RunConfig& cfg) {
  if (cfg.order < 2) throw UsageError("order must be >= 2");
  DataTable t;
  t.columns.push_back("x");
  for (int k = 0; k < cfg.order; ++k) t.columns.push_back("e" + std::to_string(k));
  const auto xs = linspace(resolve_range(cfg, {-3.0, 3.0, 61}));
  const PhfTable values = phf_table(cfg.order, xs, cfg.tol.value_or(kDefaultSeriesTol));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Cell> row{xs[i]};
    for (double v : values.row(i)) row.emplace_back(v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

DataTable eft_table(const RunConfig& cfg) {
  EftBuiltin builtin = eft_builtin(cfg.fn);
  if (cfg.tol) builtin.quad.abs_tol = *cfg.tol;
  const Range fallback{-2.0, 2.0, 41};
  const Range range{cfg.k_min.value_or(fallback.min), cfg.k_max.value_or(fallback.max),
                    cfg.steps.value_or(fallback.steps)};
  DataTable t{{"k", "re1", "im1", "re2", "im2", "f0", "f1", "f2"}, {}};
  for (double k : linspace(range)) {
    std::vector<Cell> row{k};
    for (int variant = 1; variant <= 2; ++variant) {
      try {
        const Complex v = eft(builtin.f, k, variant, builtin.quad);
        row.emplace_back(v.real());
        row.emplace_back(v.imag());
      } catch (const ExistenceError&) {
        row.emplace_back(std::nullopt);
        row.emplace_back(std::nullopt);
      }
    }
    for (int m = 0; m < 3; ++m) {
      row.push_back(guarded([&] { return eft_component(builtin.f, m, k, builtin.quad); }));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

DataTable decompose_table(const RunConfig& cfg) {
  if (cfg.order < 2) throw UsageError("order must be >= 2");
  SeriesSpec f = series_builtin(cfg.fn);
  if (cfg.tol) f.tol = *cfg.tol;
  DataTable t;
  t.columns.push_back("x");
  for (int k = 0; k < cfg.order; ++k) t.columns.push_back("f" + std::to_string(k));
  for (double x : linspace(resolve_range(cfg, {-3.0, 3.0, 61}))) {
    std::vector<Cell> row{x};
    for (int k = 0; k < cfg.order; ++k) row.emplace_back(parity_project(f, cfg.order, k, x).real());
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<std::filesystem::path> run_figure(const RunConfig& cfg,
                                              const std::filesystem::path& directory) {
  std::vector<int> ids;
  if (cfg.figure_id) {
    ids.push_back(*cfg.figure_id);
  } else {
    ids = {1, 2, 3, 4, 5};
  }
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;
  for (int id : ids) {
    const DataTable table = figure_table(id, cfg);
    const auto path = directory / fig_name(id, cfg.format);
    std::ofstream file(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
      throw std::filesystem::filesystem_error("cannot open figure file", path,
                                              std::make_error_code(std::errc::io_error));
    }
    write_table(file, table, cfg.format);
    file.flush();
    if (!file) {
      throw std::filesystem::filesystem_error("cannot write figure file", path,
                                              std::make_error_code(std::errc::io_error));
    }
    written.push_back(path);
  }
  return written;
}

int run_check(const RunConfig& cfg, std::ostream& report) {
  SuiteOptions options;
  options.tolerance_override = cfg.tol;
  const auto results = run_identity_suite(options);

  DataTable table{{"max_residual", "tolerance", "passed", "expected_failure"}, {}};
  int failures = 0;
  for (const auto& r : results) {
    const char* status = nullptr;
    if (r.expected_failure) {
      status = r.passed() ? "EXPECTED-FAIL" : "UNEXPECTED-PASS";
    } else {
      status = r.passed() ? "PASS" : "FAIL";
    }
    if (!r.passed()) ++failures;
    char line[96];
    std::snprintf(line, sizeof(line), "%-15s residual=%-12.3e tol=%-9.1e ", status, r.max_residual,
                  r.tolerance);
    report << line << r.name;
    if (!r.note.empty()) report << "  (" << r.note << ")";
    report << '\n';
    table.rows.push_back({r.max_residual, r.tolerance, r.passed() ? 1.0 : 0.0,
                          r.expected_failure ? 1.0 : 0.0});
  }
  report << results.size() << " checks, " << failures << " failed\n";

  if (!cfg.out.empty()) {
    std::ofstream file;
    std::ostream* os = open_output(cfg, report, file);
    table.columns.insert(table.columns.begin(), "check");
    // Names are not numeric; the machine-readable report carries the row index.
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      table.rows[i].insert(table.rows[i].begin(), static_cast<double>(i));
    }
    write_table(*os, table, cfg.format);
    if (!*os) return kIoError;
  }
  return failures == 0 ? kOk : kCheckFailure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("tolerance must be positive");
    if (cfg.command == "figure") {
      const auto written = run_figure(cfg, cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out));
      for (const auto& p : written) out << p.string() << '\n';
      return kOk;
    }
    if (cfg.command == "table") return emit(cfg, phf_value_table(cfg), out);
    if (cfg.command == "eft") return emit(cfg, eft_table(cfg), out);
    if (cfg.command == "decompose") return emit(cfg, decompose_table(cfg), out);
    if (cfg.command == "check") return run_check(cfg, out);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace eisenfun::cli
