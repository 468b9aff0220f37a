// Copyright 2026 The sphermoments Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sphermoments_cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "sphermoments/errors.hpp"
#include "sphermoments/moments.hpp"
#include "sphermoments/oracle.hpp"
#include "sphermoments_cli/bench.hpp"
#include "sphermoments_cli/dist_io.hpp"
#include "sphermoments_cli/errors.hpp"
#include "sphermoments_cli/suites.hpp"

namespace sphermoments::cli {
namespace {

constexpr const char* kSweepColumns =
    "CSV columns (sweep): value, fa, ratio, mean_norm, eig_1 ... eig_n.\n"
    "  value      grid point (k, or t for A = diag(t, 1, ..., 1))\n"
    "  fa         FA_2 or FA_3; empty for n >= 4\n"
    "  ratio      largest / smallest eigenvalue of D; \"inf\" if the smallest is 0\n"
    "  mean_norm  |E[q]|\n"
    "  eig_i      eigenvalues of D, descending";

constexpr const char* kBenchColumns =
    "CSV columns (bench): n, k, oracle, oracle_size, repeats, closed_form_seconds,\n"
    "oracle_seconds, speedup, asserted, pass.\n"
    "  oracle        quad (n = 2, 3) or mc (n >= 4)\n"
    "  oracle_size   quadrature resolution or Monte Carlo samples\n"
    "  *_seconds     median wall time per call over the repeats\n"
    "  asserted      1 where the speedup is checked (n = 3, resolution 256)\n"
    "  pass          0 if an asserted row is below --required-speedup (exit 1)";

Json ratio_json(double ratio) { return std::isinf(ratio) ? Json("inf") : Json(ratio); }

std::string csv_number(double x) { return std::isinf(x) ? "inf" : format_number(x); }

std::uint64_t default_seed() {
  const char* env = std::getenv("SPHERMOMENTS_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::istringstream in(env);
  std::uint64_t seed = 0;
  if (!(in >> seed) || !in.eof() || std::string(env).front() == '-') {
    throw InputError(std::string("SPHERMOMENTS_SEED is not an unsigned integer: '") + env + "'");
  }
  return seed;
}

SphericalDistribution distribution_from(const std::string& inline_json, const std::string& ref) {
  if (!inline_json.empty() && !ref.empty()) throw InputError("give only one of --dist-json and --dist");
  if (!inline_json.empty()) return parse_distribution(inline_json);
  if (!ref.empty()) return load_distribution(ref);
  throw InputError("a distribution is required (--dist-json JSON or --dist @path)");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

double max_report_dev(const AnisotropyReport& a, const AnisotropyReport& b) {
  double dev = (a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() /
               std::max(a.eigenvalues.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  if (a.fa && b.fa) dev = std::max(dev, std::abs(*a.fa - *b.fa));
  if (std::isfinite(a.ratio) && std::isfinite(b.ratio)) {
    dev = std::max(dev, std::abs(a.ratio - b.ratio) / a.ratio);
  } else if (a.ratio != b.ratio) {
    dev = std::numeric_limits<double>::infinity();
  }
  return dev;
}

// ---- moments ---------------------------------------------------------------

struct MomentsArgs {
  std::string dist_json;
  std::string dist;
  std::string oracle = "none";
  std::uint64_t seed = 0;
  std::int64_t samples = 1'000'000;
  int resolution = 256;
};

int cmd_moments(const MomentsArgs& args, std::ostream& out) {
  const SphericalDistribution dist = distribution_from(args.dist_json, args.dist);
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["distribution"] = distribution_to_json(dist);
  doc["normalized"] = dist.is_normalized();

  std::optional<MomentReport> closed;
  if (has_closed_form(dist.kind())) closed = closed_form_moments(dist);
  doc["closed_form"] = closed ? moment_report_to_json(*closed) : Json(nullptr);

  std::optional<MomentReport> oracle;
  if (args.oracle == "quad") {
    oracle = quad_moments(dist, QuadratureSpec::for_dimension(dist.dim(), args.resolution));
  } else if (args.oracle == "mc") {
    oracle = mc_moments(dist, McSpec(dist.dim(), args.samples, args.seed));
  }
  doc["oracle"] = oracle ? moment_report_to_json(*oracle) : Json(nullptr);

  if (closed && oracle) {
    doc["max_abs_dev"] = std::max((closed->mean - oracle->mean).cwiseAbs().maxCoeff(),
                                  (closed->covariance - oracle->covariance).cwiseAbs().maxCoeff());
  } else {
    doc["max_abs_dev"] = nullptr;
  }
  out << write_json(doc) << '\n';
  return kExitOk;
}

// ---- anisotropy ------------------------------------------------------------

struct AnisotropyArgs {
  std::string dist_json;
  std::string dist;
  double s = 1.0;
  double mu = 1.0;
};

int cmd_anisotropy(const AnisotropyArgs& args, std::ostream& out) {
  const SphericalDistribution dist = distribution_from(args.dist_json, args.dist);
  const MotilityParams params(args.s, args.mu);
  const DiffusionTensor tensor = diffusion_tensor(dist, params);
  const AnisotropyReport report = preferred_report(dist, params);

  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["distribution"] = distribution_to_json(dist);
  doc["params"] = {{"s", args.s}, {"mu", args.mu}};
  doc["tensor"] = to_json(tensor.d);
  const Json report_json = anisotropy_report_to_json(report);
  for (const auto& [key, value] : report_json.items()) doc[key] = value;
  if (report.path == ReportPath::kClosedForm) {
    doc["generic_max_dev"] = max_report_dev(report, anisotropy_report(dist, params));
  }
  out << write_json(doc) << '\n';
  return report.bounds.all_within() ? kExitOk : kExitFailure;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string param;
  std::vector<double> grid;
  std::vector<double> grid_log;
  std::string kind;
  std::optional<int> n;
  std::string dist_json;
  std::string dist;
  double s = 1.0;
  double mu = 1.0;
  std::string format = "csv";
  std::string out_path;
};

std::vector<double> sweep_grid(const SweepArgs& args) {
  if (!args.grid.empty() && !args.grid_log.empty()) throw InputError("give only one of --grid and --grid-log");
  std::vector<double> grid = args.grid;
  if (!args.grid_log.empty()) {
    const double lo = args.grid_log[0];
    const double hi = args.grid_log[1];
    const double count = args.grid_log[2];
    if (!(lo > 0.0) || !(hi >= lo) || !(count >= 1) || count != std::floor(count) || !std::isfinite(hi)) {
      throw InputError("--grid-log expects LO HI COUNT with 0 < LO <= HI and integer COUNT >= 1");
    }
    const int pts = static_cast<int>(count);
    for (int i = 0; i < pts; ++i) {
      const double t = pts == 1 ? 0.0 : static_cast<double>(i) / (pts - 1);
      grid.push_back(i == 0 ? lo : i == pts - 1 ? hi : std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    }
  }
  if (grid.empty()) throw InputError("the sweep grid is empty (use --grid or --grid-log)");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    if (!std::isfinite(v)) throw InputError("grid values must be finite");
    if (args.param == "k" && v < 0.0) throw InputError("k grid values must be >= 0");
    if (args.param == "eigen_ratio" && !(v > 0.0)) throw InputError("eigen_ratio grid values must be > 0");
    if (i > 0 && !(v > grid[i - 1])) throw InputError("grid must be strictly increasing");
  }
  return grid;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  const std::vector<double> grid = sweep_grid(args);
  const MotilityParams params(args.s, args.mu);

  std::function<SphericalDistribution(double)> make;
  Json base;
  if (args.param == "k") {
    const std::string kind = args.kind.empty() ? "bimodal_vmf" : args.kind;
    if (kind != "vmf" && kind != "bimodal_vmf") throw InputError("a k sweep needs kind vmf or bimodal_vmf");
    Vector u;
    if (!args.dist_json.empty() || !args.dist.empty()) {
      const SphericalDistribution given = distribution_from(args.dist_json, args.dist);
      if (given.kind() != *parse_distribution_kind(kind)) {
        if (!args.kind.empty()) throw InputError("--kind disagrees with the base distribution");
      }
      if (given.kind() != DistributionKind::kVmf && given.kind() != DistributionKind::kBimodalVmf) {
        throw InputError("a k sweep needs a vmf or bimodal_vmf base distribution");
      }
      if (args.n && *args.n != given.dim()) throw InputError("--n disagrees with the base distribution");
      u = given.mean_direction();
      const bool bimodal = given.kind() == DistributionKind::kBimodalVmf;
      make = [u, bimodal](double k) {
        return bimodal ? SphericalDistribution::bimodal_vmf(u, k) : SphericalDistribution::vmf(u, k);
      };
      base = distribution_to_json(given);
    } else {
      const int n = args.n.value_or(3);
      if (n < 2) throw InputError("--n must be >= 2");
      u = Vector::Unit(n, 0);
      const bool bimodal = kind == "bimodal_vmf";
      make = [u, bimodal](double k) {
        return bimodal ? SphericalDistribution::bimodal_vmf(u, k) : SphericalDistribution::vmf(u, k);
      };
      base = distribution_to_json(make(0.0));
      base.erase("k");
    }
  } else {
    if (!args.dist_json.empty() || !args.dist.empty()) {
      throw InputError("an eigen_ratio sweep takes --n, not a base distribution");
    }
    if (!args.kind.empty() && args.kind != "peanut") throw InputError("an eigen_ratio sweep needs kind peanut");
    const int n = args.n.value_or(2);
    if (n < 2) throw InputError("--n must be >= 2");
    make = [n](double t) {
      Vector d = Vector::Ones(n);
      d(0) = t;
      return SphericalDistribution::peanut(d.asDiagonal());
    };
    base = {{"schema", kSchemaVersion}, {"kind", "peanut"}, {"n", n}, {"A", "diag(t, 1, ..., 1)"}};
  }

  struct Row {
    double value;
    AnisotropyReport report;
    double mean_norm;
  };
  std::vector<Row> rows;
  for (double v : grid) {
    const SphericalDistribution dist = make(v);
    dist.require_valid();
    rows.push_back({v, preferred_report(dist, params), closed_form_moments(dist).mean.norm()});
  }

  std::string text;
  if (args.format == "json") {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["parameter"] = args.param;
    doc["base"] = base;
    doc["params"] = {{"s", args.s}, {"mu", args.mu}};
    Json out_rows = Json::array();
    for (const Row& r : rows) {
      Json row;
      row["value"] = r.value;
      row["fa"] = r.report.fa ? Json(*r.report.fa) : Json(nullptr);
      row["ratio"] = ratio_json(r.report.ratio);
      row["mean_norm"] = r.mean_norm;
      row["eigenvalues"] = to_json(r.report.eigenvalues);
      out_rows.push_back(row);
    }
    doc["rows"] = out_rows;
    text = write_json(doc) + "\n";
  } else {
    std::ostringstream csv;
    const Eigen::Index n = rows.front().report.eigenvalues.size();
    csv << "value,fa,ratio,mean_norm";
    for (Eigen::Index i = 0; i < n; ++i) csv << ",eig_" << i + 1;
    csv << '\n';
    for (const Row& r : rows) {
      csv << format_number(r.value) << ',' << (r.report.fa ? format_number(*r.report.fa) : "") << ','
          << csv_number(r.report.ratio) << ',' << format_number(r.mean_norm);
      for (Eigen::Index i = 0; i < n; ++i) csv << ',' << format_number(r.report.eigenvalues(i));
      csv << '\n';
    }
    text = csv.str();
  }
  write_output(text, args.out_path, out);
  return kExitOk;
}

// ---- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string level = "smoke";
  std::uint64_t seed = 0;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  const SuiteConfig config{args.level == "full" ? Level::kFull : Level::kSmoke, args.seed};
  const std::vector<SuiteResult> results = run_validation_suites(config);
  bool passed = true;
  Json suites = Json::array();
  for (const SuiteResult& r : results) {
    passed = passed && r.passed;
    suites.push_back(to_json(r));
  }
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["level"] = args.level;
  doc["seed"] = args.seed;
  doc["passed"] = passed;
  doc["suites"] = suites;
  out << write_json(doc) << '\n';
  return passed ? kExitOk : kExitFailure;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<int> ns = {3};
  std::vector<double> ks = {1.0, 5.0, 20.0};
  int repeats = 5;
  int resolution = 256;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  double required_speedup = kRequiredSpeedup;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  if (args.repeats < 1) throw InputError("--repeats must be >= 1");
  for (int n : args.ns) {
    if (n < 2) throw InputError("--n values must be >= 2");
  }
  for (double k : args.ks) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw InputError("--k-grid values must be finite and >= 0");
  }
  bool ok = true;
  out << "n,k,oracle,oracle_size,repeats,closed_form_seconds,oracle_seconds,speedup,asserted,pass\n";
  for (int n : args.ns) {
    for (double k : args.ks) {
      BenchOptions options;
      options.n = n;
      options.k = k;
      options.repeats = args.repeats;
      options.resolution = args.resolution;
      options.samples = args.samples;
      options.seed = args.seed;
      const BenchRow row = bench_vmf_covariance(options);
      const bool asserted = speedup_asserted(row);
      const bool pass = !asserted || row.speedup >= args.required_speedup;
      ok = ok && pass;
      out << row.n << ',' << format_number(row.k) << ',' << row.oracle << ',' << row.oracle_size << ','
          << row.repeats << ',' << format_number(row.closed_form_seconds, 6) << ','
          << format_number(row.oracle_seconds, 6) << ',' << format_number(row.speedup, 6) << ','
          << (asserted ? 1 : 0) << ',' << (pass ? 1 : 0) << '\n';
    }
  }
  return ok ? kExitOk : kExitFailure;
}

void add_dist_options(CLI::App* cmd, std::string& inline_json, std::string& ref) {
  cmd->add_option("--dist-json", inline_json, "Distribution as inline JSON");
  cmd->add_option("--dist", ref, "Distribution as inline JSON, or @path to a JSON file");
}

}  // namespace

AnisotropyReport preferred_report(const SphericalDistribution& dist, const MotilityParams& params) {
  dist.require_valid();
  if (dist.kind() == DistributionKind::kPeanut && max_asymmetry(dist.anisotropy()) == 0.0) {
    return peanut_closed_form_report(AnisotropyMatrix(dist.anisotropy()), params);
  }
  if (dist.kind() == DistributionKind::kBimodalVmf) {
    return vmf_closed_form_report(dist.dim(), dist.concentration(), UnitVector(dist.mean_direction()), params);
  }
  return anisotropy_report(dist, params);
}

Json moment_report_to_json(const MomentReport& report) {
  Json out;
  out["source"] = to_string(report.source);
  out["mean"] = to_json(report.mean);
  out["second_moment"] = to_json(report.second_moment);
  out["covariance"] = to_json(report.covariance);
  if (report.oracle) {
    const OracleDetails& o = *report.oracle;
    out["method"] = o.method;
    if (o.resolution) out["resolution"] = *o.resolution;
    if (o.samples) out["samples"] = *o.samples;
    if (o.seed) out["seed"] = *o.seed;
    if (o.generator) out["generator"] = *o.generator;
    out["mass"] = o.mass;
    if (o.mass_standard_error) out["mass_standard_error"] = *o.mass_standard_error;
    if (o.mean_standard_error && o.second_moment_standard_error) {
      out["standard_errors"] = {{"mean", to_json(*o.mean_standard_error)},
                                {"second_moment", to_json(*o.second_moment_standard_error)}};
    }
    out["warnings"] = o.warnings;
  }
  return out;
}

Json anisotropy_report_to_json(const AnisotropyReport& report) {
  Json out;
  out["eigenvalues"] = to_json(report.eigenvalues);
  out["fa"] = report.fa ? Json(*report.fa) : Json(nullptr);
  out["ratio"] = ratio_json(report.ratio);
  out["path"] = to_string(report.path);
  out["bounds"] = {{"fa2_max", kPeanutFa2Max}, {"fa3_max", kPeanutFa3Max}, {"r_max", kPeanutRatioMax}};
  out["bound_flags"] = {{"applies", report.bounds.applies},
                        {"fa_within", report.bounds.fa_within},
                        {"ratio_within", report.bounds.ratio_within}};
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  CLI::App app{"Closed-form moments and diffusion anisotropy of spherical distributions.\n"
               "Seeds default to $SPHERMOMENTS_SEED (0 if unset).",
               "sphermoments"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 failed check, 2 input error, 3 I/O error.");

  MomentsArgs moments_args;
  moments_args.seed = seed;
  CLI::App* moments = app.add_subcommand("moments", "Mean, second moment and covariance (JSON)");
  add_dist_options(moments, moments_args.dist_json, moments_args.dist);
  moments->add_option("--oracle", moments_args.oracle, "Numerical reference")
      ->check(CLI::IsMember({"none", "quad", "mc"}))
      ->capture_default_str();
  moments->add_option("--seed", moments_args.seed, "Monte Carlo seed")->capture_default_str();
  moments->add_option("--samples", moments_args.samples, "Monte Carlo samples")->capture_default_str();
  moments->add_option("--resolution", moments_args.resolution, "Quadrature points per dimension")
      ->capture_default_str();

  AnisotropyArgs aniso_args;
  CLI::App* aniso = app.add_subcommand("anisotropy", "Diffusion tensor, FA and anisotropy ratio (JSON)");
  add_dist_options(aniso, aniso_args.dist_json, aniso_args.dist);
  aniso->add_option("--s", aniso_args.s, "Speed")->capture_default_str();
  aniso->add_option("--mu", aniso_args.mu, "Turning rate")->capture_default_str();

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "FA, R, eigenvalues and |E[q]| over a parameter grid");
  sweep->add_option("--param", sweep_args.param, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"k", "eigen_ratio"}));
  sweep->add_option("--grid", sweep_args.grid, "Comma-separated grid values")->delimiter(',');
  sweep->add_option("--grid-log", sweep_args.grid_log, "Log-spaced grid: LO HI COUNT")->expected(3);
  sweep->add_option("--kind", sweep_args.kind, "vmf or bimodal_vmf (k), peanut (eigen_ratio)")
      ->check(CLI::IsMember({"vmf", "bimodal_vmf", "peanut"}));
  sweep->add_option("--n", sweep_args.n, "Dimension (default 3 for k, 2 for eigen_ratio)");
  add_dist_options(sweep, sweep_args.dist_json, sweep_args.dist);
  sweep->add_option("--s", sweep_args.s, "Speed")->capture_default_str();
  sweep->add_option("--mu", sweep_args.mu, "Turning rate")->capture_default_str();
  sweep->add_option("--format", sweep_args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--out", sweep_args.out_path, "Output file (default stdout)");
  sweep->footer(kSweepColumns);

  ValidateArgs validate_args;
  validate_args.seed = seed;
  CLI::App* validate = app.add_subcommand("validate", "Run the validation suites (JSON summary)");
  validate->add_option("--level", validate_args.level, "Suite size")
      ->check(CLI::IsMember({"smoke", "full"}))
      ->capture_default_str();
  validate->add_option("--seed", validate_args.seed, "Base seed")->capture_default_str();

  BenchArgs bench_args;
  bench_args.seed = seed;
  CLI::App* bench = app.add_subcommand("bench", "Closed form vs oracle timing (CSV)");
  bench->add_option("--n", bench_args.ns, "Comma-separated dimensions")->delimiter(',')->capture_default_str();
  bench->add_option("--k-grid", bench_args.ks, "Comma-separated concentrations")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--repeats", bench_args.repeats, "Repeats; the median is reported")->capture_default_str();
  bench->add_option("--resolution", bench_args.resolution, "Quadrature points per dimension")
      ->capture_default_str();
  bench->add_option("--samples", bench_args.samples, "Monte Carlo samples")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "Monte Carlo seed")->capture_default_str();
  bench->add_option("--required-speedup", bench_args.required_speedup, "Threshold for asserted rows")
      ->capture_default_str();
  bench->footer(kBenchColumns);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*moments) return cmd_moments(moments_args, out);
    if (*aniso) return cmd_anisotropy(aniso_args, out);
    if (*sweep) return cmd_sweep(sweep_args, out);
    if (*validate) return cmd_validate(validate_args, out);
    if (*bench) return cmd_bench(bench_args, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& v : e.violations()) err << "  - " << v << '\n';
    return kExitInput;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    // DomainError derives from logic_error; ShapeError, UnsupportedError
    // and PreconditionError from invalid_argument.
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace sphermoments::cli
