#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ipaac/grid.hpp"
#include "ipaac/kernels.hpp"
#include "ipaac/quadrature.hpp"

namespace ipaac {

class PolyField;

/// Where Dirichlet data of constrained neighbors is sampled.
enum class ConstrainedData {
  Nodal,      ///< exact field at the constrained node position
  QuadPoint,  ///< exact field at the scheme's quadrature point
};

struct AssemblyOptions {
  ConstrainedData constrained_data = ConstrainedData::Nodal;
};

/// Discrete steady-state system K U = F over the interior degrees of freedom.
///
/// Rows are interior nodes in Grid::interior() order, with vector components
/// interleaved (u1, u2) per node. Bond (i, j) contributes -C(xi) A_j^i to K_ij
/// and +C(xi) A_j^i to K_ii, xi being the scheme's quadrature-point offset;
/// bonds to constrained nodes are moved to the right-hand side.
///
/// The operator is stored as its translation-invariant stencil: every
/// interior row shares the same coupling blocks and the same diagonal, and
/// only which neighbors are free differs near the boundary.
class DiscreteSystem {
 public:
  struct Entry {
    std::size_t col;
    double value;
  };

  const Grid& grid() const { return *grid_; }
  std::size_t components() const { return comps_; }
  std::size_t size() const { return rhs_.size(); }
  std::span<const double> rhs() const { return rhs_; }
  std::size_t node_of_row(std::size_t row) const { return grid_->interior()[row / comps_]; }

  /// y = K x.
  void multiply(std::span<const double> x, std::span<double> y) const;
  /// Nonzero entries of one row, sorted by column, diagonal included.
  std::vector<Entry> row(std::size_t r) const;
  /// K_rc (zero when the two nodes do not interact).
  double entry(std::size_t r, std::size_t c) const;
  std::vector<double> diagonal() const;

 private:
  friend class SystemBuilder;
  DiscreteSystem() = default;

  // Stencil slot of a lattice offset, or -1.
  int slot(int di, int dj) const;

  const Grid* grid_ = nullptr;
  std::size_t comps_ = 1;
  int reach_ = 0;
  std::vector<int> di_, dj_;
  std::vector<double> blocks_;      // comps*comps per stencil slot, row-major
  std::vector<double> diag_block_;  // comps*comps
  std::vector<int> slot_of_offset_;
  std::vector<double> rhs_;
};

/// Assembles the scalar-kernel system. `forcing` holds b at every interior
/// node (components interleaved); `boundary` supplies Dirichlet data on the
/// fictitious layer. Throws ConfigError on size or horizon mismatches.
DiscreteSystem assemble(const PatchList& patches, const ScalarKernel& kernel, const PolyField& boundary,
                        std::span<const double> forcing, const AssemblyOptions& options = {});

/// Tensor-kernel system; the field must have two components. A zero-length
/// bond throws AssemblyError.
DiscreteSystem assemble(const PatchList& patches, const TensorKernel& kernel, const PolyField& boundary,
                        std::span<const double> forcing, const AssemblyOptions& options = {});

/// Unconstrained discrete operator L^h u evaluated at every interior node,
/// with `nodal` holding u at all grid nodes (components interleaved).
std::vector<double> apply_operator(const PatchList& patches, const ScalarKernel& kernel,
                                   std::span<const double> nodal, std::size_t components = 1);
std::vector<double> apply_operator(const PatchList& patches, const TensorKernel& kernel,
                                   std::span<const double> nodal);

// ============================================================================
// Solver
// ============================================================================

struct Solution {
  std::vector<double> values;  ///< per interior node, components interleaved
  std::size_t components = 1;
  double residual = 0.0;       ///< ||F - K U|| / ||F||, recomputed on exit
  std::size_t iterations = 0;
};

inline constexpr double kDefaultSolverTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIterations = 50000;

/// Jacobi-preconditioned conjugate gradient. Throws SolverError when the
/// relative residual stays above `tol` after `max_iter` iterations and
/// StructuralError on non-positive curvature.
Solution solve(const DiscreteSystem& system, double tol = kDefaultSolverTolerance,
               std::size_t max_iter = kDefaultMaxIterations);

// ============================================================================
// Diagnostics
// ============================================================================

/// M-matrix structure of a scalar system.
struct MatrixReport {
  std::size_t rows = 0;
  std::size_t positive_off_diagonal = 0;
  std::size_t nonpositive_diagonal = 0;
  std::size_t not_weakly_dominant = 0;
  std::size_t boundary_rows = 0;         ///< rows within delta of the domain boundary
  std::size_t boundary_not_strict = 0;   ///< of those, rows without strict dominance
  std::size_t strictly_dominant_rows = 0;
  double symmetry_defect = 0.0;          ///< max |K_ij - K_ji| / max |K_ij|
  bool irreducible = false;

  std::size_t violations() const {
    return positive_off_diagonal + nonpositive_diagonal + not_weakly_dominant + boundary_not_strict +
           (irreducible ? 0 : 1) + (strictly_dominant_rows > 0 ? 0 : 1);
  }
};

/// Throws ConfigError for vector-valued systems.
MatrixReport matrix_diagnostics(const DiscreteSystem& system);

/// max |K_ij - K_ji| / max |K_ij| for any system.
double symmetry_defect(const DiscreteSystem& system);

}  // namespace ipaac
