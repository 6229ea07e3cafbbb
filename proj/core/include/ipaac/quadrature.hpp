#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ipaac/geometry.hpp"
#include "ipaac/grid.hpp"

namespace ipaac {

/// One-point quadrature schemes for the horizon integral.
enum class Scheme {
  FA,     ///< full cell area when the cell center is within the horizon
  PAAC,   ///< exact partial areas, kernel at the cell center
  IPAAC,  ///< exact partial areas, kernel at the centroid of the intersection
};

std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view s);

/// A neighbor of one node: effective area and quadrature point.
struct NeighborEntry {
  std::size_t neighbor = 0;
  double weight = 0.0;
  Vec2 quad_point;
  CellClass cls = CellClass::Excluded;
};

/// A lattice offset with its quadrature data, relative to the source node.
/// `bond` is quad_point - x_i.
struct StencilEntry {
  int di = 0;
  int dj = 0;
  double weight = 0.0;
  Vec2 bond;
  CellClass cls = CellClass::Excluded;
};

/// Per-node neighborhoods under a quadrature scheme.
///
/// On a uniform lattice the patch of cell j inside the horizon of node i
/// depends only on the offset j - i, so the list is stored as a single
/// stencil evaluated about the origin; per-node entries are the stencil
/// offsets that land inside the grid. The self cell is never included.
class PatchList {
 public:
  PatchList(const Grid& grid, Scheme scheme, std::vector<StencilEntry> stencil);

  Scheme scheme() const { return scheme_; }
  const Grid& grid() const { return *grid_; }
  std::span<const StencilEntry> stencil() const { return stencil_; }

  /// Materialized neighbor entries of a node (offsets falling off the
  /// extended grid are skipped).
  std::vector<NeighborEntry> neighbors(std::size_t node) const;

 private:
  const Grid* grid_;
  Scheme scheme_;
  std::vector<StencilEntry> stencil_;
};

/// Builds the neighborhood stencil for `scheme`. The grid must have been
/// built with this delta (throws ConfigError otherwise). The grid must
/// outlive the returned list.
PatchList build_patches(const Grid& grid, double delta, Scheme scheme);

struct PatchSummary {
  std::size_t full = 0;
  std::size_t standard_partial = 0;
  std::size_t boundary_partial = 0;
  double total_weight = 0.0;
};

PatchSummary patch_summary(const PatchList& patches, std::size_t node);

}  // namespace ipaac
