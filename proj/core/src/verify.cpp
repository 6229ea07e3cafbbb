#include "ipaac/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "ipaac/geometry.hpp"
#include "ipaac/kernels.hpp"
#include "ipaac/manufactured.hpp"

namespace ipaac {

// ============================================================================
// Geometry
// ============================================================================

namespace {

void check_tiling(std::mt19937_64& rng, GeometryReport& report) {
  std::uniform_real_distribution<double> radius_dist(0.01, 1.0);
  std::uniform_real_distribution<double> ratio_dist(0.05, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius_dist(rng);
  const double h = r * ratio_dist(rng);
  const Vec2 c{(unit(rng) - 0.5) * 4.0, (unit(rng) - 0.5) * 4.0};

  const int i0 = static_cast<int>(std::floor((c.x - r) / h)) - 1;
  const int i1 = static_cast<int>(std::floor((c.x + r) / h)) + 1;
  const int j0 = static_cast<int>(std::floor((c.y - r) / h)) - 1;
  const int j1 = static_cast<int>(std::floor((c.y + r) / h)) + 1;
  const Disc disc{c, r};
  double area = 0.0;
  Vec2 moment{0.0, 0.0};
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      const Patch p = intersect(disc, Cell{{i * h, j * h}, h});
      area += p.area;
      moment = moment + p.centroid * p.area;
    }
  }
  const double exact = std::numbers::pi * r * r;
  const double area_err = std::abs(area - exact) / exact;
  const double scale = exact * std::max(1.0, norm(c));
  const double moment_err = norm(moment - c * exact) / scale;
  ++report.configurations;
  report.max_area_error = std::max(report.max_area_error, area_err);
  report.max_moment_error = std::max(report.max_moment_error, moment_err);
  if (!(area_err <= kTilingTolerance)) ++report.tiling_failures;
  if (!(moment_err <= kTilingTolerance)) ++report.moment_failures;
}

void check_oracle(std::mt19937_64& rng, GeometryReport& report) {
  std::uniform_real_distribution<double> radius_dist(0.05, 1.0);
  std::uniform_real_distribution<double> side_dist(0.02, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius_dist(rng);
  const double h = side_dist(rng);
  // Place the cell so it usually straddles the circle.
  const double theta = 2.0 * std::numbers::pi * unit(rng);
  const double dist = r * (0.5 + unit(rng));
  const Vec2 center{dist * std::cos(theta), dist * std::sin(theta)};
  const Cell cell{center - Vec2{0.5 * h, 0.5 * h}, h};
  const Disc disc{{0.0, 0.0}, r};
  const Patch exact = intersect(disc, cell);
  const OracleEstimate est = intersect_oracle(disc, cell, kOracleDepth);
  ++report.oracle_pairs;
  const double slack = 1e-14 * h * h;
  if (!(std::abs(exact.area - est.area) <= est.area_bound + slack)) ++report.oracle_failures;
}

}  // namespace

GeometryReport verify_geometry(std::size_t configurations, std::size_t oracle_pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GeometryReport report;
  for (std::size_t k = 0; k < configurations; ++k) check_tiling(rng, report);
  for (std::size_t k = 0; k < oracle_pairs; ++k) check_oracle(rng, report);
  return report;
}

// ============================================================================
// Forcing
// ============================================================================

namespace {

PolyField doubled(const PolyField& f) { return PolyField({f[0], f[0]}); }

void compare(const std::vector<double>& a, const std::vector<double>& b, double tol, ForcingReport& report) {
  double err = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) err = std::max(err, std::abs(a[k] - b[k]) / std::max(1.0, std::abs(a[k])));
  ++report.checks;
  report.max_error = std::max(report.max_error, err);
  if (!(err <= tol)) ++report.failures;
}

void identity(const std::vector<double>& v, double expected, ForcingReport& report) {
  for (const double x : v) {
    const double err = std::abs(x - expected) / std::abs(expected);
    report.max_identity_error = std::max(report.max_identity_error, err);
    if (!(err <= kIdentityTolerance)) {
      ++report.identity_failures;
      return;
    }
  }
}

}  // namespace

ForcingReport verify_forcing(std::size_t points, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr std::array<double, 3> deltas{0.03, 0.1, 0.4};
  constexpr std::array<CaseId, 4> cases{CaseId::Case1, CaseId::Case2, CaseId::Case3, CaseId::TensorQuadratic};
  // The oracle must resolve well below the comparison tolerance.
  const double oracle_tol = tol * 1e-2;

  ForcingReport report;
  for (const double delta : deltas) {
    const ScalarKernel scalar(delta);
    const TensorKernel tensor(delta);
    for (const CaseId c : cases) {
      const PolyField field = make_field(c);
      const PolyField vector_field = field.components() == 2 ? field : doubled(field);
      for (std::size_t k = 0; k < points; ++k) {
        const Vec2 x{unit(rng), unit(rng)};
        compare(nonlocal_apply(field, scalar, x), nonlocal_apply_oracle(field, scalar, x, oracle_tol), tol, report);
        compare(nonlocal_apply(vector_field, tensor, x), nonlocal_apply_oracle(vector_field, tensor, x, oracle_tol),
                tol, report);
        if (c == CaseId::Case1) identity(nonlocal_apply(field, scalar, x), 1.0, report);
        if (c == CaseId::TensorQuadratic) identity(nonlocal_apply(field, tensor, x), 12.0 * tensor.kappa() / 5.0, report);
      }
    }
  }
  return report;
}

}  // namespace ipaac
