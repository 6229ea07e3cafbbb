#include "ipaac/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ipaac/errors.hpp"
#include "ipaac/study.hpp"
#include "ipaac/verify.hpp"

namespace ipaac {

namespace {

// ============================================================================
// Shared options
// ============================================================================

struct ProblemOptions {
  std::string kernel = "scalar";
  std::string field;  // empty: case 1 for scalar, tensor-quadratic for tensor
  std::string scheme = "ipa-ac";
  std::string constrained = "nodal";
  double kappa = 1.0;
  double tol = kDefaultSolverTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
};

void add_problem_options(CLI::App& cmd, ProblemOptions& o) {
  cmd.add_option("--kernel", o.kernel, "Kernel: scalar or tensor")
      ->check(CLI::IsMember({"scalar", "tensor"}))
      ->capture_default_str();
  cmd.add_option("--case", o.field, "Manufactured solution: 1, 2, 3 or tensor-quadratic")
      ->check(CLI::IsMember({"1", "2", "3", "tensor-quadratic"}));
  cmd.add_option("--scheme", o.scheme, "Quadrature scheme: fa, pa-ac or ipa-ac")
      ->check(CLI::IsMember({"fa", "pa-ac", "ipa-ac"}))
      ->capture_default_str();
  cmd.add_option("--kappa", o.kappa, "Tensor material constant")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--tol", o.tol, "Relative residual tolerance of the solver")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-iter", o.max_iter, "Solver iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--constrained-data", o.constrained, "Dirichlet data sampling: nodal or quad-point")
      ->check(CLI::IsMember({"nodal", "quad-point"}))
      ->capture_default_str();
}

KernelKind kernel_of(const ProblemOptions& o) { return *parse_kernel(o.kernel); }

CaseId case_of(const ProblemOptions& o) {
  if (o.field.empty()) return kernel_of(o) == KernelKind::Tensor ? CaseId::TensorQuadratic : CaseId::Case1;
  return *parse_case(o.field);
}

void check_consistent(const ProblemOptions& o) {
  const bool vector_case = case_of(o) == CaseId::TensorQuadratic;
  if (kernel_of(o) == KernelKind::Tensor && !vector_case)
    throw ConfigError("the tensor kernel needs --case tensor-quadratic");
  if (kernel_of(o) == KernelKind::Scalar && vector_case)
    throw ConfigError("--case tensor-quadratic needs --kernel tensor");
}

ConstrainedData constrained_of(const ProblemOptions& o) {
  return o.constrained == "nodal" ? ConstrainedData::Nodal : ConstrainedData::QuadPoint;
}

// ============================================================================
// Commands
// ============================================================================

int cmd_solve(const ProblemOptions& o, double h, double delta, std::ostream& out) {
  check_consistent(o);
  SolveConfig config;
  config.h = h;
  config.delta = delta;
  config.kernel = kernel_of(o);
  config.field = case_of(o);
  config.scheme = *parse_scheme(o.scheme);
  config.kappa = o.kappa;
  config.tol = o.tol;
  config.max_iter = o.max_iter;
  config.constrained_data = constrained_of(o);
  const CaseResult res = solve_case(config);
  out << "kernel " << to_string(config.kernel) << ", case " << to_string(config.field) << ", scheme "
      << to_string(config.scheme) << '\n';
  out << "h " << format_number(h) << ", delta " << format_number(delta) << ", m " << format_number(delta / h) << '\n';
  out << "interior nodes " << res.interior_nodes << ", stencil size " << res.stencil_size << '\n';
  out << "iterations " << res.solution.iterations << ", residual " << format_number(res.solution.residual) << '\n';
  out << "error_inf " << format_number(res.error) << '\n';
  return 0;
}

struct StudyArgs {
  std::string regime;
  std::optional<double> h;
  std::optional<double> delta;
  std::optional<double> m;
  std::vector<double> h_list;
  std::vector<double> delta_list;
  std::string out_path;
  std::string plot_path;
  unsigned threads = 0;
};

Regime make_regime(const StudyArgs& a) {
  auto need = [](bool present, const char* what) {
    if (!present) throw ConfigError(what);
  };
  if (a.regime == "h") {
    need(a.delta.has_value(), "--regime h needs --delta");
    need(!a.h_list.empty(), "--regime h needs --h-list");
    return FixedDelta{*a.delta, a.h_list};
  }
  if (a.regime == "delta") {
    need(a.h.has_value(), "--regime delta needs --h");
    need(!a.delta_list.empty(), "--regime delta needs --delta-list");
    return FixedH{*a.h, a.delta_list};
  }
  need(a.m.has_value(), "--regime ac needs --m");
  need(!a.h_list.empty(), "--regime ac needs --h-list");
  return FixedRatio{*a.m, a.h_list};
}

int cmd_study(const ProblemOptions& o, const StudyArgs& a, std::ostream& out) {
  check_consistent(o);
  StudyOptions options;
  options.kernel = kernel_of(o);
  options.field = case_of(o);
  options.scheme = *parse_scheme(o.scheme);
  options.kappa = o.kappa;
  options.tol = o.tol;
  options.max_iter = o.max_iter;
  options.constrained_data = constrained_of(o);
  options.threads = a.threads;
  const StudyTable table = run_study(make_regime(a), options);

  if (a.out_path.empty() || a.out_path == "-") {
    write_csv(out, table);
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file " + a.out_path);
    write_csv(file, table);
    if (!file) throw ConfigError("failed writing " + a.out_path);
  }
  if (!a.plot_path.empty()) {
    std::ofstream file(a.plot_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open plot data file " + a.plot_path);
    write_plot_data(file, table);
  }
  return 0;
}

int cmd_geom_verify(std::size_t trials, std::size_t pairs, std::uint64_t seed, std::ostream& out) {
  const GeometryReport r = verify_geometry(trials, pairs, seed);
  out << "tiling area      " << (r.configurations - r.tiling_failures) << '/' << r.configurations
      << " pass (max rel error " << format_number(r.max_area_error) << ")\n";
  out << "tiling moment    " << (r.configurations - r.moment_failures) << '/' << r.configurations
      << " pass (max rel error " << format_number(r.max_moment_error) << ")\n";
  out << "oracle agreement " << (r.oracle_pairs - r.oracle_failures) << '/' << r.oracle_pairs << " pass\n";
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? 0 : 1;
}

int cmd_forcing_verify(std::size_t points, std::uint64_t seed, double tol, std::ostream& out) {
  const ForcingReport r = verify_forcing(points, seed, tol);
  out << "oracle equivalence " << (r.checks - r.failures) << '/' << r.checks << " pass (max error "
      << format_number(r.max_error) << ")\n";
  out << "identities         " << (r.identity_failures == 0 ? "pass" : "fail") << " (max rel error "
      << format_number(r.max_identity_error) << ")\n";
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"IPA-AC peridynamics quadrature: solves, convergence studies and verification suites", "ipaac"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  ProblemOptions solve_opts;
  double solve_h = 0.0;
  double solve_delta = 0.0;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one manufactured problem and report the max-norm error");
  solve_cmd->set_help_flag("--help", "Print this help message and exit");
  add_problem_options(*solve_cmd, solve_opts);
  solve_cmd->add_option("--h", solve_h, "Mesh size (1/h must be an integer)")->required();
  solve_cmd->add_option("--delta", solve_delta, "Horizon")->required();

  ProblemOptions study_opts;
  StudyArgs study;
  auto* study_cmd = app.add_subcommand("study", "Run a convergence study and write a CSV table");
  study_cmd->set_help_flag("--help", "Print this help message and exit");
  add_problem_options(*study_cmd, study_opts);
  study_cmd->add_option("--regime", study.regime, "h: fixed delta; delta: fixed h; ac: fixed ratio m")
      ->required()
      ->check(CLI::IsMember({"h", "delta", "ac"}));
  study_cmd->add_option("--h", study.h, "Fixed mesh size (regime delta)");
  study_cmd->add_option("--delta", study.delta, "Fixed horizon (regime h)");
  study_cmd->add_option("--m", study.m, "Fixed ratio delta/h (regime ac)");
  study_cmd->add_option("--h-list", study.h_list, "Comma-separated decreasing mesh sizes")->delimiter(',');
  study_cmd->add_option("--delta-list", study.delta_list, "Comma-separated decreasing horizons")->delimiter(',');
  study_cmd->add_option("--out", study.out_path, "CSV output path (default stdout)");
  study_cmd->add_option("--plot-data", study.plot_path, "Two-column (parameter, error) output path");
  study_cmd->add_option("--threads", study.threads, "Worker threads (default IPAAC_THREADS or all cores)");

  std::size_t trials = 200;
  std::size_t pairs = 1000;
  std::uint64_t geom_seed = 1;
  auto* geom_cmd = app.add_subcommand("geom-verify", "Randomized geometry invariant suite");
  geom_cmd->set_help_flag("--help", "Print this help message and exit");
  geom_cmd->add_option("--trials", trials, "Random tiling configurations")->capture_default_str();
  geom_cmd->add_option("--oracle-pairs", pairs, "Random (disc, cell) pairs against the quadtree oracle")
      ->capture_default_str();
  geom_cmd->add_option("--seed", geom_seed, "Random seed")->capture_default_str();

  std::size_t points = 100;
  std::uint64_t forcing_seed = 1;
  double forcing_tol = kForcingTolerance;
  auto* forcing_cmd = app.add_subcommand("forcing-verify", "Moment forcing against the quadrature oracle");
  forcing_cmd->set_help_flag("--help", "Print this help message and exit");
  forcing_cmd->add_option("--points", points, "Random points per (case, kernel, delta)")->capture_default_str();
  forcing_cmd->add_option("--seed", forcing_seed, "Random seed")->capture_default_str();
  forcing_cmd->add_option("--tol", forcing_tol, "Agreement tolerance")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_opts, solve_h, solve_delta, out);
    if (*study_cmd) return cmd_study(study_opts, study, out);
    if (*geom_cmd) return cmd_geom_verify(trials, pairs, geom_seed, out);
    if (*forcing_cmd) return cmd_forcing_verify(points, forcing_seed, forcing_tol, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ipaac
