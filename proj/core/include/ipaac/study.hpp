#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ipaac/assembly.hpp"
#include "ipaac/manufactured.hpp"
#include "ipaac/quadrature.hpp"

namespace ipaac {

enum class KernelKind { Scalar, Tensor };

std::string_view to_string(KernelKind k);
std::optional<KernelKind> parse_kernel(std::string_view s);

/// Everything needed for one manufactured-solution solve.
struct SolveConfig {
  double h = 0.1;
  double delta = 0.4;
  KernelKind kernel = KernelKind::Scalar;
  CaseId field = CaseId::Case1;
  Scheme scheme = Scheme::IPAAC;
  double kappa = 1.0;
  double tol = kDefaultSolverTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  ConstrainedData constrained_data = ConstrainedData::Nodal;
};

struct CaseResult {
  double error = 0.0;  ///< discrete max-norm error against the exact field
  Solution solution;
  std::size_t interior_nodes = 0;
  std::size_t stencil_size = 0;
};

/// grid -> patches -> forcing -> assemble -> solve -> error.
CaseResult solve_case(const SolveConfig& config);

// ============================================================================
// Convergence studies
// ============================================================================

/// Fixed horizon, refining mesh.
struct FixedDelta {
  double delta = 0.4;
  std::vector<double> h_list;
};
/// Fixed mesh, shrinking horizon.
struct FixedH {
  double h = 0.01;
  std::vector<double> delta_list;
};
/// Fixed ratio m = delta / h, refining both.
struct FixedRatio {
  double m = 3.0;
  std::vector<double> h_list;
};
using Regime = std::variant<FixedDelta, FixedH, FixedRatio>;

/// Throws ConfigError unless the swept list is non-empty and strictly
/// decreasing and every (h, delta) pair is a valid grid.
void validate(const Regime& regime);

enum class SweptParameter { H, Delta };

struct StudyRow {
  double h = 0.0;
  double delta = 0.0;
  double m = 0.0;
  double error = 0.0;
  std::optional<double> order;
};

struct StudyTable {
  SweptParameter swept = SweptParameter::H;
  KernelKind kernel = KernelKind::Scalar;
  CaseId field = CaseId::Case1;
  Scheme scheme = Scheme::IPAAC;
  std::vector<StudyRow> rows;

  /// Value of the swept parameter in a row.
  double parameter(const StudyRow& row) const { return swept == SweptParameter::H ? row.h : row.delta; }
};

struct StudyOptions {
  KernelKind kernel = KernelKind::Scalar;
  CaseId field = CaseId::Case1;
  Scheme scheme = Scheme::IPAAC;
  double kappa = 1.0;
  double tol = kDefaultSolverTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  ConstrainedData constrained_data = ConstrainedData::Nodal;
  /// Worker threads for independent rows; 0 means default_thread_count().
  unsigned threads = 0;
};

/// Solves every row of the regime (rows may run concurrently; output keeps
/// input order) and fills observed orders. A failing row throws StudyError
/// naming its configuration.
StudyTable run_study(const Regime& regime, const StudyOptions& options);

/// Observed order log(e1/e2) / log(p1/p2). Throws std::domain_error for
/// non-positive inputs or p1 == p2.
double order_between(double e1, double e2, double p1, double p2);

/// Fills row orders against the previous row; the first row has none.
void compute_orders(StudyTable& table);

/// IPAAC_THREADS if set to a positive integer, else the hardware concurrency.
unsigned default_thread_count();

// ============================================================================
// CSV
// ============================================================================

inline constexpr std::string_view kCsvHeader = "h,delta,m,error_inf,order";

/// Scientific notation with six significant digits.
std::string format_number(double v);

/// Header line then one line per row; blank order on the first row.
void write_csv(std::ostream& out, const StudyTable& table);
/// Parses write_csv output (metadata other than the rows is not stored).
/// Throws ConfigError on malformed input.
StudyTable read_csv(std::istream& in);

/// Two columns (swept parameter, error) for log-log plotting.
void write_plot_data(std::ostream& out, const StudyTable& table);

}  // namespace ipaac
