#include "ipaac/quadrature.hpp"

#include <cmath>

#include "ipaac/errors.hpp"

namespace ipaac {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::FA:
      return "fa";
    case Scheme::PAAC:
      return "pa-ac";
    case Scheme::IPAAC:
      return "ipa-ac";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view s) {
  if (s == "fa") return Scheme::FA;
  if (s == "pa-ac" || s == "paac") return Scheme::PAAC;
  if (s == "ipa-ac" || s == "ipaac") return Scheme::IPAAC;
  return std::nullopt;
}

PatchList::PatchList(const Grid& grid, Scheme scheme, std::vector<StencilEntry> stencil)
    : grid_(&grid), scheme_(scheme), stencil_(std::move(stencil)) {}

std::vector<NeighborEntry> PatchList::neighbors(std::size_t node) const {
  const LatticeIndex c = grid_->lattice(node);
  const Vec2 x = grid_->node(node).position;
  std::vector<NeighborEntry> out;
  out.reserve(stencil_.size());
  for (const StencilEntry& e : stencil_) {
    if (auto j = grid_->index_of({c.i + e.di, c.j + e.dj})) out.push_back({*j, e.weight, x + e.bond, e.cls});
  }
  return out;
}

PatchList build_patches(const Grid& grid, double delta, Scheme scheme) {
  if (delta != grid.delta()) throw ConfigError("patch list horizon differs from the grid's horizon");
  const double h = grid.h();
  const Disc horizon{{0.0, 0.0}, delta};
  const int reach = grid.layer_cells() + 1;
  // Boundary-inclusive center test for FA; the slack absorbs δ = m·h products
  // that land one ulp off the lattice distance.
  const double fa_radius2 = delta * delta * (1.0 + 1e-12);

  std::vector<StencilEntry> stencil;
  for (int dj = -reach; dj <= reach; ++dj) {
    for (int di = -reach; di <= reach; ++di) {
      if (di == 0 && dj == 0) continue;
      const Vec2 center{di * h, dj * h};
      const Cell cell{{center.x - 0.5 * h, center.y - 0.5 * h}, h};
      const Patch patch = intersect(horizon, cell);
      switch (scheme) {
        case Scheme::FA:
          if (norm2(center) <= fa_radius2) stencil.push_back({di, dj, h * h, center, patch.cls});
          break;
        case Scheme::PAAC:
          if (patch.area > 0.0) stencil.push_back({di, dj, patch.area, center, patch.cls});
          break;
        case Scheme::IPAAC:
          if (patch.area > 0.0) stencil.push_back({di, dj, patch.area, patch.centroid, patch.cls});
          break;
      }
    }
  }
  return PatchList(grid, scheme, std::move(stencil));
}

PatchSummary patch_summary(const PatchList& patches, std::size_t node) {
  PatchSummary s;
  for (const NeighborEntry& e : patches.neighbors(node)) {
    switch (e.cls) {
      case CellClass::Full:
        ++s.full;
        break;
      case CellClass::StandardPartial:
        ++s.standard_partial;
        break;
      case CellClass::BoundaryPartial:
        ++s.boundary_partial;
        break;
      case CellClass::Excluded:
        break;
    }
    s.total_weight += e.weight;
  }
  return s;
}

}  // namespace ipaac
