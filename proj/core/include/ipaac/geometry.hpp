#pragma once

// Exact disc / axis-aligned square intersection: area, centroid and the
// four-way cell taxonomy used by the partial-area quadrature schemes.

#include <string_view>

#include "ipaac/vec2.hpp"

namespace ipaac {

/// Horizon disc. radius must be positive.
struct Disc {
  Vec2 center;
  double radius = 0.0;
};

/// Axis-aligned square cell given by its lower-left corner and side length.
struct Cell {
  Vec2 lower;
  double side = 0.0;

  constexpr Vec2 center() const { return {lower.x + 0.5 * side, lower.y + 0.5 * side}; }
  constexpr Vec2 upper() const { return {lower.x + side, lower.y + side}; }
};

enum class CellClass {
  Full,             ///< cell entirely inside the disc
  StandardPartial,  ///< truncated, center inside the disc
  BoundaryPartial,  ///< truncated, center outside the disc
  Excluded,         ///< no overlap
};

std::string_view to_string(CellClass c);

/// Intersection of a disc and a cell. For Excluded patches the centroid is
/// the cell center; for Full patches it is the cell center exactly.
struct Patch {
  double area = 0.0;
  Vec2 centroid;
  CellClass cls = CellClass::Excluded;
};

/// Relative area tolerance that snaps near-tangent intersections to
/// Excluded (area < tol * side^2) or Full (area > (1 - tol) * side^2).
inline constexpr double kClassifyTolerance = 1e-14;

/// Exact area and centroid of disc ∩ cell.
///
/// The intersection boundary is split into straight pieces (parts of the
/// square boundary inside the disc) and circular arcs (parts of the circle
/// inside the square); area and first moments follow from Green's theorem
/// evaluated in closed form on each piece. Throws std::invalid_argument for a
/// non-positive radius or side.
Patch intersect(const Disc& disc, const Cell& cell);

struct OracleEstimate {
  double area = 0.0;
  Vec2 centroid;
  /// Guaranteed bound on |area - exact area|: total area of the unresolved
  /// leaves straddling the circle.
  double area_bound = 0.0;
};

/// Quadtree estimate of disc ∩ cell, independent of intersect().
///
/// Sub-squares fully inside are counted exactly, fully outside are dropped,
/// straddling ones are split until `depth` levels; leaf squares still
/// straddling are clipped by the tangent line of the circle nearest to the
/// leaf center. Throws std::invalid_argument if depth < 1.
OracleEstimate intersect_oracle(const Disc& disc, const Cell& cell, int depth);

}  // namespace ipaac
