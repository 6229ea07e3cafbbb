#pragma once

// Randomized invariant suites behind `geom-verify` and `forcing-verify`.

#include <cstddef>
#include <cstdint>

namespace ipaac {

struct GeometryReport {
  std::size_t configurations = 0;
  std::size_t tiling_failures = 0;   ///< disc area not recovered by a covering tiling
  std::size_t moment_failures = 0;   ///< first moment not recovered
  std::size_t oracle_pairs = 0;
  std::size_t oracle_failures = 0;   ///< exact area outside the quadtree bound
  double max_area_error = 0.0;       ///< relative
  double max_moment_error = 0.0;     ///< relative to pi r^2 max(1, |center|)

  bool passed() const { return tiling_failures + moment_failures + oracle_failures == 0; }
};

inline constexpr double kTilingTolerance = 1e-10;
inline constexpr int kOracleDepth = 12;

/// `configurations` random (radius, h, offset) tilings and `oracle_pairs`
/// random (disc, cell) pairs checked against intersect_oracle.
GeometryReport verify_geometry(std::size_t configurations, std::size_t oracle_pairs, std::uint64_t seed);

struct ForcingReport {
  std::size_t checks = 0;            ///< (point, case, kernel, delta) evaluations
  std::size_t failures = 0;
  double max_error = 0.0;            ///< worst |moment - oracle| / max(1, |moment|)
  std::size_t identity_failures = 0; ///< Case 1 scalar == 1, tensor quadratic == 12 kappa / 5
  double max_identity_error = 0.0;

  bool passed() const { return failures + identity_failures == 0; }
};

inline constexpr double kForcingTolerance = 1e-10;
inline constexpr double kIdentityTolerance = 1e-12;

/// Moment forcing against the polar quadrature oracle at `points` random
/// points for every case, both kernels and delta in {0.03, 0.1, 0.4}. The
/// tensor kernel acts on (u, u) for scalar cases.
ForcingReport verify_forcing(std::size_t points, std::uint64_t seed, double tol = kForcingTolerance);

}  // namespace ipaac
