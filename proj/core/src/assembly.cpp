#include "ipaac/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "ipaac/errors.hpp"
#include "ipaac/manufactured.hpp"

namespace ipaac {

namespace {

// Coupling block C(xi) A for one stencil entry, comps*comps row-major.
void coupling_block(const ScalarKernel& k, const StencilEntry& e, std::size_t comps, double* out) {
  const double c = k(e.bond) * e.weight;
  for (std::size_t a = 0; a < comps; ++a)
    for (std::size_t b = 0; b < comps; ++b) out[a * comps + b] = a == b ? c : 0.0;
}

void coupling_block(const TensorKernel& k, const StencilEntry& e, std::size_t, double* out) {
  if (norm2(e.bond) == 0.0) throw AssemblyError("zero-length bond passed to the tensor kernel");
  const Mat2 t = e.weight * k(e.bond);
  out[0] = t.xx;
  out[1] = t.xy;
  out[2] = t.xy;
  out[3] = t.yy;
}

std::size_t field_components(const ScalarKernel&, std::size_t requested) { return requested; }
std::size_t field_components(const TensorKernel&, std::size_t requested) {
  if (requested != 2) throw ConfigError("the tensor kernel needs a two-component field");
  return 2;
}

}  // namespace

class SystemBuilder {
 public:
  template <typename Kernel>
  static DiscreteSystem build(const PatchList& patches, const Kernel& kernel, std::size_t comps) {
    const Grid& grid = patches.grid();
    if (std::abs(kernel.delta() - grid.delta()) > 1e-15 * grid.delta())
      throw ConfigError("kernel horizon differs from the grid's horizon");

    DiscreteSystem sys;
    sys.grid_ = &grid;
    sys.comps_ = comps;
    sys.reach_ = grid.layer_cells() + 1;
    const int width = 2 * sys.reach_ + 1;
    sys.slot_of_offset_.assign(static_cast<std::size_t>(width * width), -1);
    sys.diag_block_.assign(comps * comps, 0.0);

    const auto stencil = patches.stencil();
    sys.blocks_.resize(stencil.size() * comps * comps);
    for (std::size_t k = 0; k < stencil.size(); ++k) {
      const StencilEntry& e = stencil[k];
      double* block = sys.blocks_.data() + k * comps * comps;
      coupling_block(kernel, e, comps, block);
      for (std::size_t t = 0; t < comps * comps; ++t) sys.diag_block_[t] += block[t];
      sys.di_.push_back(e.di);
      sys.dj_.push_back(e.dj);
      sys.slot_of_offset_[static_cast<std::size_t>((e.dj + sys.reach_) * width + (e.di + sys.reach_))] =
          static_cast<int>(k);
    }
    return sys;
  }

  // F_i = b_i + sum over constrained neighbors of C(xi) A g_j.
  static void fill_rhs(DiscreteSystem& sys, const PatchList& patches, const PolyField& boundary,
                       std::span<const double> forcing, const AssemblyOptions& options) {
    const Grid& grid = *sys.grid_;
    const std::size_t comps = sys.comps_;
    if (boundary.components() != comps) throw ConfigError("boundary data has the wrong number of components");
    if (forcing.size() != grid.interior_count() * comps)
      throw ConfigError("forcing must provide one value per interior node and component");

    sys.rhs_.assign(forcing.begin(), forcing.end());
    const auto stencil = patches.stencil();
    const auto interior = grid.interior();
    for (std::size_t row = 0; row < interior.size(); ++row) {
      const std::size_t node = interior[row];
      const LatticeIndex c = grid.lattice(node);
      const Vec2 x = grid.node(node).position;
      for (std::size_t k = 0; k < stencil.size(); ++k) {
        const StencilEntry& e = stencil[k];
        const auto j = grid.index_of({c.i + e.di, c.j + e.dj});
        if (!j) throw std::logic_error("horizon of an interior node leaves the extended grid");
        if (grid.node(*j).kind == NodeKind::Interior) continue;
        const Vec2 at = options.constrained_data == ConstrainedData::Nodal ? grid.node(*j).position : x + e.bond;
        const std::vector<double> g = boundary(at);
        const double* block = sys.blocks_.data() + k * comps * comps;
        for (std::size_t a = 0; a < comps; ++a)
          for (std::size_t b = 0; b < comps; ++b) sys.rhs_[row * comps + a] += block[a * comps + b] * g[b];
      }
    }
  }
};

DiscreteSystem assemble(const PatchList& patches, const ScalarKernel& kernel, const PolyField& boundary,
                        std::span<const double> forcing, const AssemblyOptions& options) {
  DiscreteSystem sys = SystemBuilder::build(patches, kernel, field_components(kernel, boundary.components()));
  SystemBuilder::fill_rhs(sys, patches, boundary, forcing, options);
  return sys;
}

DiscreteSystem assemble(const PatchList& patches, const TensorKernel& kernel, const PolyField& boundary,
                        std::span<const double> forcing, const AssemblyOptions& options) {
  DiscreteSystem sys = SystemBuilder::build(patches, kernel, field_components(kernel, boundary.components()));
  SystemBuilder::fill_rhs(sys, patches, boundary, forcing, options);
  return sys;
}

// ============================================================================
// DiscreteSystem
// ============================================================================

int DiscreteSystem::slot(int di, int dj) const {
  if (std::abs(di) > reach_ || std::abs(dj) > reach_) return -1;
  const int width = 2 * reach_ + 1;
  return slot_of_offset_[static_cast<std::size_t>((dj + reach_) * width + (di + reach_))];
}

void DiscreteSystem::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t nd = size();
  if (x.size() != nd || y.size() != nd) throw std::invalid_argument("vector size does not match the system");
  const std::size_t c = comps_;
  const int n = grid_->cells_per_side();

  // Diagonal blocks.
  for (std::size_t node = 0; node < nd / c; ++node)
    for (std::size_t a = 0; a < c; ++a) {
      double s = 0.0;
      for (std::size_t b = 0; b < c; ++b) s += diag_block_[a * c + b] * x[node * c + b];
      y[node * c + a] = s;
    }

  // Off-diagonal couplings, one stencil slot at a time over the range of
  // interior rows whose neighbor is also interior.
  for (std::size_t k = 0; k < di_.size(); ++k) {
    const int di = di_[k];
    const int dj = dj_[k];
    const int i0 = std::max(0, -di), i1 = std::min(n, n - di);
    const int j0 = std::max(0, -dj), j1 = std::min(n, n - dj);
    if (i0 >= i1 || j0 >= j1) continue;
    const double* block = blocks_.data() + k * c * c;
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(dj) * n + di;
    if (c == 1) {
      const double w = block[0];
      for (int j = j0; j < j1; ++j) {
        const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(j) * n;
        for (int i = i0; i < i1; ++i) y[base + i] -= w * x[base + i + shift];
      }
    } else {
      for (int j = j0; j < j1; ++j) {
        const std::ptrdiff_t base = static_cast<std::ptrdiff_t>(j) * n;
        for (int i = i0; i < i1; ++i) {
          const std::size_t r = static_cast<std::size_t>(base + i);
          const std::size_t s = static_cast<std::size_t>(base + i + shift);
          for (std::size_t a = 0; a < c; ++a) {
            double acc = 0.0;
            for (std::size_t b = 0; b < c; ++b) acc += block[a * c + b] * x[s * c + b];
            y[r * c + a] -= acc;
          }
        }
      }
    }
  }
}

std::vector<DiscreteSystem::Entry> DiscreteSystem::row(std::size_t r) const {
  const std::size_t c = comps_;
  const std::size_t local = r / c;
  const std::size_t a = r % c;
  const int n = grid_->cells_per_side();
  const int i = static_cast<int>(local % static_cast<std::size_t>(n));
  const int j = static_cast<int>(local / static_cast<std::size_t>(n));

  std::vector<Entry> out;
  out.reserve(di_.size() * c + c);
  for (std::size_t b = 0; b < c; ++b) {
    const double v = diag_block_[a * c + b];
    if (v != 0.0) out.push_back({local * c + b, v});
  }
  for (std::size_t k = 0; k < di_.size(); ++k) {
    const int ni = i + di_[k];
    const int nj = j + dj_[k];
    if (ni < 0 || ni >= n || nj < 0 || nj >= n) continue;
    const std::size_t other = static_cast<std::size_t>(nj) * static_cast<std::size_t>(n) + static_cast<std::size_t>(ni);
    for (std::size_t b = 0; b < c; ++b) {
      const double v = blocks_[k * c * c + a * c + b];
      if (v != 0.0) out.push_back({other * c + b, -v});
    }
  }
  std::sort(out.begin(), out.end(), [](const Entry& l, const Entry& rr) { return l.col < rr.col; });
  return out;
}

double DiscreteSystem::entry(std::size_t r, std::size_t col) const {
  const std::size_t c = comps_;
  const int n = grid_->cells_per_side();
  const std::size_t lr = r / c, lc = col / c;
  const std::size_t a = r % c, b = col % c;
  if (lr == lc) return diag_block_[a * c + b];
  const int di = static_cast<int>(lc % static_cast<std::size_t>(n)) - static_cast<int>(lr % static_cast<std::size_t>(n));
  const int dj = static_cast<int>(lc / static_cast<std::size_t>(n)) - static_cast<int>(lr / static_cast<std::size_t>(n));
  const int k = slot(di, dj);
  if (k < 0) return 0.0;
  return -blocks_[static_cast<std::size_t>(k) * c * c + a * c + b];
}

std::vector<double> DiscreteSystem::diagonal() const {
  std::vector<double> d(size());
  for (std::size_t r = 0; r < d.size(); ++r) d[r] = diag_block_[(r % comps_) * comps_ + (r % comps_)];
  return d;
}

// ============================================================================
// Unconstrained operator
// ============================================================================

namespace {

template <typename Kernel>
std::vector<double> apply_impl(const PatchList& patches, const Kernel& kernel, std::span<const double> nodal,
                               std::size_t comps) {
  const Grid& grid = patches.grid();
  if (nodal.size() != grid.size() * comps) throw ConfigError("nodal values must cover every grid node");
  const auto stencil = patches.stencil();
  std::vector<double> blocks(stencil.size() * comps * comps);
  for (std::size_t k = 0; k < stencil.size(); ++k) coupling_block(kernel, stencil[k], comps, blocks.data() + k * comps * comps);

  std::vector<double> out(grid.interior_count() * comps, 0.0);
  const auto interior = grid.interior();
  for (std::size_t row = 0; row < interior.size(); ++row) {
    const std::size_t node = interior[row];
    const LatticeIndex c = grid.lattice(node);
    for (std::size_t k = 0; k < stencil.size(); ++k) {
      const auto j = grid.index_of({c.i + stencil[k].di, c.j + stencil[k].dj});
      if (!j) throw std::logic_error("horizon of an interior node leaves the extended grid");
      const double* block = blocks.data() + k * comps * comps;
      for (std::size_t a = 0; a < comps; ++a)
        for (std::size_t b = 0; b < comps; ++b)
          out[row * comps + a] -= block[a * comps + b] * (nodal[*j * comps + b] - nodal[node * comps + b]);
    }
  }
  return out;
}

}  // namespace

std::vector<double> apply_operator(const PatchList& patches, const ScalarKernel& kernel,
                                   std::span<const double> nodal, std::size_t components) {
  if (components < 1) throw ConfigError("at least one component required");
  return apply_impl(patches, kernel, nodal, components);
}

std::vector<double> apply_operator(const PatchList& patches, const TensorKernel& kernel,
                                   std::span<const double> nodal) {
  return apply_impl(patches, kernel, nodal, 2);
}

// ============================================================================
// Diagnostics
// ============================================================================

double symmetry_defect(const DiscreteSystem& system) {
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t r = 0; r < system.size(); ++r) {
    for (const auto& e : system.row(r)) {
      scale = std::max(scale, std::abs(e.value));
      if (e.col <= r) continue;
      worst = std::max(worst, std::abs(e.value - system.entry(e.col, r)));
    }
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

MatrixReport matrix_diagnostics(const DiscreteSystem& system) {
  if (system.components() != 1) throw ConfigError("M-matrix diagnostics apply to scalar systems only");
  constexpr double kRelTol = 1e-12;
  const Grid& grid = system.grid();
  MatrixReport rep;
  rep.rows = system.size();

  std::vector<std::vector<std::size_t>> adjacency(rep.rows);
  for (std::size_t r = 0; r < rep.rows; ++r) {
    double diag = 0.0;
    double off = 0.0;
    for (const auto& e : system.row(r)) {
      if (e.col == r) {
        diag = e.value;
        continue;
      }
      if (e.value > 0.0) ++rep.positive_off_diagonal;
      off += std::abs(e.value);
      adjacency[r].push_back(e.col);
    }
    if (!(diag > 0.0)) ++rep.nonpositive_diagonal;
    const double margin = diag - off;
    if (margin < -kRelTol * diag) ++rep.not_weakly_dominant;
    const bool strict = margin > kRelTol * diag;
    if (strict) ++rep.strictly_dominant_rows;
    const Vec2 x = grid.node(system.node_of_row(r)).position;
    if (Grid::distance_to_boundary(x) < grid.delta()) {
      ++rep.boundary_rows;
      if (!strict) ++rep.boundary_not_strict;
    }
  }
  rep.symmetry_defect = symmetry_defect(system);

  // Irreducible iff the coupling graph is connected.
  if (rep.rows > 0) {
    std::vector<char> seen(rep.rows, 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t r = queue.front();
      queue.pop_front();
      for (const std::size_t c : adjacency[r])
        if (!seen[c]) {
          seen[c] = 1;
          ++reached;
          queue.push_back(c);
        }
    }
    rep.irreducible = reached == rep.rows;
  }
  return rep;
}

}  // namespace ipaac
