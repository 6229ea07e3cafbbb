#include "ipaac/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ipaac/errors.hpp"
#include "ipaac/grid.hpp"

namespace ipaac {

std::string_view to_string(KernelKind k) { return k == KernelKind::Scalar ? "scalar" : "tensor"; }

std::optional<KernelKind> parse_kernel(std::string_view s) {
  if (s == "scalar") return KernelKind::Scalar;
  if (s == "tensor") return KernelKind::Tensor;
  return std::nullopt;
}

CaseResult solve_case(const SolveConfig& config) {
  const Grid grid = Grid::build(config.h, config.delta);
  const PatchList patches = build_patches(grid, config.delta, config.scheme);
  const PolyField field = make_field(config.field);
  const AssemblyOptions options{config.constrained_data};

  CaseResult result;
  result.interior_nodes = grid.interior_count();
  result.stencil_size = patches.stencil().size();
  if (config.kernel == KernelKind::Scalar) {
    const ScalarKernel kernel(config.delta);
    const auto forcing = interior_forcing(field, kernel, grid);
    result.solution = solve(assemble(patches, kernel, field, forcing, options), config.tol, config.max_iter);
  } else {
    const TensorKernel kernel(config.delta, config.kappa);
    const auto forcing = interior_forcing(field, kernel, grid);
    result.solution = solve(assemble(patches, kernel, field, forcing, options), config.tol, config.max_iter);
  }
  result.error = linf_error(result.solution, field, grid);
  return result;
}

// ============================================================================
// Studies
// ============================================================================

namespace {

struct RowConfig {
  double h;
  double delta;
};

std::vector<RowConfig> expand(const Regime& regime) {
  std::vector<RowConfig> rows;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FixedDelta>) {
          for (const double h : r.h_list) rows.push_back({h, r.delta});
        } else if constexpr (std::is_same_v<T, FixedH>) {
          for (const double d : r.delta_list) rows.push_back({r.h, d});
        } else {
          for (const double h : r.h_list) rows.push_back({h, r.m * h});
        }
      },
      regime);
  return rows;
}

const std::vector<double>& swept_list(const Regime& regime) {
  return std::visit(
      [](const auto& r) -> const std::vector<double>& {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FixedH>)
          return r.delta_list;
        else
          return r.h_list;
      },
      regime);
}

std::string describe(const RowConfig& row) {
  std::ostringstream s;
  s << "h = " << row.h << ", delta = " << row.delta;
  return s.str();
}

}  // namespace

void validate(const Regime& regime) {
  const auto& list = swept_list(regime);
  if (list.empty()) throw ConfigError("study regime needs at least one value to sweep");
  for (std::size_t k = 1; k < list.size(); ++k)
    if (!(list[k] < list[k - 1])) throw ConfigError("swept values must be strictly decreasing");
  for (const RowConfig& row : expand(regime)) {
    try {
      Grid::validate(row.h, row.delta);
    } catch (const ConfigError& e) {
      throw ConfigError(describe(row) + ": " + e.what());
    }
  }
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("IPAAC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

StudyTable run_study(const Regime& regime, const StudyOptions& options) {
  validate(regime);
  const std::vector<RowConfig> configs = expand(regime);

  StudyTable table;
  table.swept = std::holds_alternative<FixedH>(regime) ? SweptParameter::Delta : SweptParameter::H;
  table.kernel = options.kernel;
  table.field = options.field;
  table.scheme = options.scheme;
  table.rows.resize(configs.size());

  std::vector<std::exception_ptr> failures(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < configs.size(); k = next++) {
      try {
        SolveConfig sc;
        sc.h = configs[k].h;
        sc.delta = configs[k].delta;
        sc.kernel = options.kernel;
        sc.field = options.field;
        sc.scheme = options.scheme;
        sc.kappa = options.kappa;
        sc.tol = options.tol;
        sc.max_iter = options.max_iter;
        sc.constrained_data = options.constrained_data;
        const CaseResult res = solve_case(sc);
        table.rows[k] = {sc.h, sc.delta, sc.delta / sc.h, res.error, std::nullopt};
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };

  const unsigned threads =
      std::min<unsigned>(options.threads ? options.threads : default_thread_count(),
                         static_cast<unsigned>(configs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t k = 0; k < configs.size(); ++k) {
    if (!failures[k]) continue;
    try {
      std::rethrow_exception(failures[k]);
    } catch (const std::exception& e) {
      throw StudyError("study row " + std::to_string(k) + " (" + describe(configs[k]) + ") failed: " + e.what());
    }
  }
  compute_orders(table);
  return table;
}

double order_between(double e1, double e2, double p1, double p2) {
  if (!(e1 > 0.0) || !(e2 > 0.0) || !(p1 > 0.0) || !(p2 > 0.0))
    throw std::domain_error("observed order needs positive errors and parameters");
  if (p1 == p2) throw std::domain_error("observed order needs distinct parameters");
  return std::log(e1 / e2) / std::log(p1 / p2);
}

void compute_orders(StudyTable& table) {
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    if (k == 0) {
      table.rows[k].order.reset();
      continue;
    }
    const StudyRow& prev = table.rows[k - 1];
    StudyRow& row = table.rows[k];
    row.order = order_between(prev.error, row.error, table.parameter(prev), table.parameter(row));
  }
}

}  // namespace ipaac
