#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ipaac/geometry.hpp"
#include "ipaac/vec2.hpp"

namespace ipaac {

enum class NodeKind { Interior, Constrained };

struct Node {
  std::size_t index = 0;
  Vec2 position;
  NodeKind kind = NodeKind::Interior;
};

/// Integer lattice coordinates of a node; (0,0) is the cell touching the
/// origin from inside the unit square.
struct LatticeIndex {
  int i = 0;
  int j = 0;
  friend constexpr bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// Cell-centered uniform grid over [0,1]^2 extended by a lattice-aligned
/// fictitious layer of ceil(delta/h) cells on every side.
///
/// Nodes are indexed row-major over the extended lattice (x fastest). Nodes
/// whose centers lie in (0,1)^2 are Interior; the layer nodes are Constrained
/// and carry Dirichlet volume data.
class Grid {
 public:
  /// Throws ConfigError if 1/h is not an integer (within 1e-9) or delta <= h.
  static Grid build(double h, double delta);
  /// Checks the build() preconditions without allocating.
  static void validate(double h, double delta);

  double h() const { return h_; }
  double delta() const { return delta_; }
  /// Cells per side of the unit square.
  int cells_per_side() const { return n_; }
  /// Width of the fictitious layer in cells.
  int layer_cells() const { return layer_; }
  /// Nodes per side of the extended lattice.
  int side() const { return n_ + 2 * layer_; }

  std::size_t size() const { return nodes_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(std::size_t index) const { return nodes_[index]; }

  /// Interior node indices in row-major order; position k is the degree of
  /// freedom k of assembled systems.
  std::span<const std::size_t> interior() const { return interior_; }
  std::size_t interior_count() const { return interior_.size(); }

  LatticeIndex lattice(std::size_t index) const;
  std::optional<std::size_t> index_of(LatticeIndex l) const;
  Vec2 position(LatticeIndex l) const;
  /// The square cell owned by a node.
  Cell cell(std::size_t index) const;

  /// Distance from a point to the boundary of the unit square, for points inside it.
  static double distance_to_boundary(const Vec2& p);

 private:
  Grid() = default;

  double h_ = 0.0;
  double delta_ = 0.0;
  int n_ = 0;
  int layer_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> interior_;
};

/// All nodes whose cells may meet the horizon disc of `index`: lattice offsets
/// with Chebyshev distance <= layer_cells + 1 that exist in the grid,
/// excluding the node itself.
std::vector<std::size_t> candidate_neighbors(const Grid& grid, std::size_t index);

}  // namespace ipaac
