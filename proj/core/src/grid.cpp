#include "ipaac/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ipaac/errors.hpp"

namespace ipaac {

void Grid::validate(double h, double delta) {
  if (!(h > 0.0) || !(delta > 0.0)) throw ConfigError("mesh size h and horizon delta must be positive");
  const double cells = 1.0 / h;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9 || rounded < 1.0) {
    std::ostringstream msg;
    msg << "mesh size h = " << h << " does not divide the unit interval (1/h must be an integer)";
    throw ConfigError(msg.str());
  }
  if (!(delta > h)) {
    std::ostringstream msg;
    msg << "horizon delta = " << delta << " must exceed mesh size h = " << h
        << " for a connected neighborhood graph";
    throw ConfigError(msg.str());
  }
}

Grid Grid::build(double h, double delta) {
  validate(h, delta);
  const double rounded = std::round(1.0 / h);

  Grid g;
  g.h_ = h;
  g.delta_ = delta;
  g.n_ = static_cast<int>(rounded);
  // δ/h is often an integer up to rounding (0.03/0.01); don't let the last ulp add a layer.
  g.layer_ = static_cast<int>(std::ceil(delta / h - 1e-9));

  const int side = g.side();
  g.nodes_.reserve(static_cast<std::size_t>(side) * side);
  for (int j = -g.layer_; j < g.n_ + g.layer_; ++j) {
    for (int i = -g.layer_; i < g.n_ + g.layer_; ++i) {
      const bool interior = i >= 0 && i < g.n_ && j >= 0 && j < g.n_;
      const std::size_t index = g.nodes_.size();
      g.nodes_.push_back({index, g.position({i, j}), interior ? NodeKind::Interior : NodeKind::Constrained});
      if (interior) g.interior_.push_back(index);
    }
  }
  return g;
}

LatticeIndex Grid::lattice(std::size_t index) const {
  const int side = this->side();
  const int row = static_cast<int>(index / static_cast<std::size_t>(side));
  const int col = static_cast<int>(index % static_cast<std::size_t>(side));
  return {col - layer_, row - layer_};
}

std::optional<std::size_t> Grid::index_of(LatticeIndex l) const {
  const int lo = -layer_;
  const int hi = n_ + layer_;
  if (l.i < lo || l.i >= hi || l.j < lo || l.j >= hi) return std::nullopt;
  return static_cast<std::size_t>(l.j + layer_) * static_cast<std::size_t>(side()) +
         static_cast<std::size_t>(l.i + layer_);
}

Vec2 Grid::position(LatticeIndex l) const { return {(l.i + 0.5) * h_, (l.j + 0.5) * h_}; }

Cell Grid::cell(std::size_t index) const {
  const LatticeIndex l = lattice(index);
  return {{l.i * h_, l.j * h_}, h_};
}

double Grid::distance_to_boundary(const Vec2& p) {
  return std::min({p.x, 1.0 - p.x, p.y, 1.0 - p.y});
}

std::vector<std::size_t> candidate_neighbors(const Grid& grid, std::size_t index) {
  const LatticeIndex c = grid.lattice(index);
  const int reach = grid.layer_cells() + 1;
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>((2 * reach + 1) * (2 * reach + 1)));
  for (int dj = -reach; dj <= reach; ++dj)
    for (int di = -reach; di <= reach; ++di) {
      if (di == 0 && dj == 0) continue;
      if (auto k = grid.index_of({c.i + di, c.j + dj})) out.push_back(*k);
    }
  return out;
}

}  // namespace ipaac
