#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ipaac/assembly.hpp"
#include "ipaac/errors.hpp"
#include "ipaac/manufactured.hpp"

using namespace ipaac;

namespace {

std::vector<double> sample(const Grid& g, const PolyField& f) {
  std::vector<double> out;
  for (const Node& n : g.nodes()) {
    const auto v = f(n.position);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<double> deep_interior(const Grid& g, const std::vector<double>& values, std::size_t comps,
                                  double margin) {
  std::vector<double> out;
  const auto interior = g.interior();
  for (std::size_t k = 0; k < interior.size(); ++k)
    if (Grid::distance_to_boundary(g.node(interior[k]).position) > margin)
      for (std::size_t a = 0; a < comps; ++a) out.push_back(values[k * comps + a]);
  return out;
}

DiscreteSystem scalar_system(const Grid& g, const PatchList& patches, CaseId c) {
  const ScalarKernel k(g.delta());
  const PolyField f = make_field(c);
  return assemble(patches, k, f, interior_forcing(f, k, g));
}

}  // namespace

// ============================================================================
// Operator
// ============================================================================

TEST_CASE("constants are annihilated") {
  const Grid g = Grid::build(0.1, 0.33);
  for (const Scheme s : {Scheme::FA, Scheme::PAAC, Scheme::IPAAC}) {
    const PatchList patches = build_patches(g, 0.33, s);
    const std::vector<double> ones(g.size(), 1.0);
    for (const double v : apply_operator(patches, ScalarKernel(0.33), ones)) CHECK(v == 0.0);
    const std::vector<double> ones2(2 * g.size(), 1.0);
    for (const double v : apply_operator(patches, TensorKernel(0.33), ones2)) CHECK(v == 0.0);
  }
}

TEST_CASE("quadratic is mapped to a constant") {
  const double delta = 0.4;
  const double h = 0.0125;
  const Grid g = Grid::build(h, delta);
  const PatchList patches = build_patches(g, delta, Scheme::IPAAC);
  const PolyField v = make_field(CaseId::Case1);
  const auto lv = deep_interior(g, apply_operator(patches, ScalarKernel(delta), sample(g, v)), 1, delta + h);
  REQUIRE(!lv.empty());
  const auto [lo, hi] = std::minmax_element(lv.begin(), lv.end());
  CHECK((*hi - *lo) / std::abs(*hi) <= 1e-12);
  CHECK(std::abs(*hi - 1.0) <= 2.0 * (h / delta) * (h / delta));
}

TEST_CASE("quadratic constant tends to one") {
  double prev = 1.0;
  for (const double h : {0.1, 0.05, 0.025}) {
    const Grid g = Grid::build(h, 0.4);
    const PatchList patches = build_patches(g, 0.4, Scheme::IPAAC);
    const auto lv = apply_operator(patches, ScalarKernel(0.4), sample(g, make_field(CaseId::Case1)));
    const double gap = std::abs(lv.front() - 1.0);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("tensor operator on (v, v) approaches 12/5") {
  double prev = 1e9;
  for (const double h : {0.1, 0.05, 0.025}) {
    const Grid g = Grid::build(h, 0.4);
    const PatchList patches = build_patches(g, 0.4, Scheme::IPAAC);
    const auto lv = apply_operator(patches, TensorKernel(0.4), sample(g, make_field(CaseId::TensorQuadratic)));
    const double gap = std::max(std::abs(lv[0] - 2.4), std::abs(lv[1] - 2.4));
    CHECK(gap < prev);
    CHECK(gap < 0.2);
    prev = gap;
  }
}

// ============================================================================
// Assembled system
// ============================================================================

TEST_CASE("scalar systems are M-matrices") {
  for (const auto& [h, delta] : {std::pair{0.2, 0.4}, {0.05, 0.17}, {0.02, 0.06}}) {
    const Grid g = Grid::build(h, delta);
    for (const Scheme s : {Scheme::FA, Scheme::PAAC, Scheme::IPAAC}) {
      const PatchList patches = build_patches(g, delta, s);
      const MatrixReport r = matrix_diagnostics(scalar_system(g, patches, CaseId::Case1));
      CAPTURE(h);
      CAPTURE(to_string(s));
      CHECK(r.positive_off_diagonal == 0);
      CHECK(r.nonpositive_diagonal == 0);
      CHECK(r.not_weakly_dominant == 0);
      CHECK(r.strictly_dominant_rows > 0);
      CHECK(r.irreducible);
      if (s == Scheme::IPAAC) CHECK(r.violations() == 0);
      CHECK(r.boundary_rows > 0);
      CHECK(r.symmetry_defect <= 1e-13);
    }
  }
}

TEST_CASE("row structure") {
  const Grid g = Grid::build(0.1, 0.25);
  const PatchList patches = build_patches(g, 0.25, Scheme::IPAAC);
  const DiscreteSystem sys = scalar_system(g, patches, CaseId::Case2);
  const auto diag = sys.diagonal();
  for (std::size_t r = 0; r < sys.size(); ++r) {
    const auto row = sys.row(r);
    REQUIRE(std::is_sorted(row.begin(), row.end(), [](auto& a, auto& b) { return a.col < b.col; }));
    double off = 0.0;
    for (const auto& e : row) {
      CHECK(sys.entry(r, e.col) == e.value);
      if (e.col == r)
        CHECK(e.value == diag[r]);
      else
        off += e.value;
    }
    CHECK(diag[r] + off >= -1e-12 * diag[r]);
    const bool band = Grid::distance_to_boundary(g.node(sys.node_of_row(r)).position) < 0.25;
    if (!band) CHECK(std::abs(diag[r] + off) <= 1e-12 * diag[r]);
  }
}

TEST_CASE("tensor systems are symmetric") {
  const Grid g = Grid::build(0.05, 0.17);
  const PatchList patches = build_patches(g, 0.17, Scheme::IPAAC);
  const TensorKernel k(0.17);
  const PolyField f = make_field(CaseId::TensorQuadratic);
  const DiscreteSystem sys = assemble(patches, k, f, interior_forcing(f, k, g));
  CHECK(sys.components() == 2);
  CHECK(sys.size() == 2 * g.interior_count());
  CHECK(symmetry_defect(sys) <= 1e-13);
  CHECK_THROWS_AS(matrix_diagnostics(sys), ConfigError);
}

TEST_CASE("assembly input checks") {
  const Grid g = Grid::build(0.1, 0.25);
  const PatchList patches = build_patches(g, 0.25, Scheme::IPAAC);
  const PolyField f = make_field(CaseId::Case1);
  const std::vector<double> short_forcing(3, 0.0);
  CHECK_THROWS_AS(assemble(patches, ScalarKernel(0.25), f, short_forcing), ConfigError);
  CHECK_THROWS_AS(assemble(patches, ScalarKernel(0.3), f, interior_forcing(f, ScalarKernel(0.3), g)), ConfigError);
  CHECK_THROWS_AS(assemble(patches, TensorKernel(0.25), f, std::vector<double>(g.interior_count(), 0.0)),
                  ConfigError);
}

// ============================================================================
// Solver
// ============================================================================

TEST_CASE("single unknown is solved exactly") {
  const Grid g = Grid::build(1.0, 1.5);
  REQUIRE(g.interior_count() == 1);
  const PatchList patches = build_patches(g, 1.5, Scheme::IPAAC);
  const PolyField f = make_field(CaseId::Case1);
  const ScalarKernel k(1.5);
  const Solution s = solve(assemble(patches, k, f, interior_forcing(f, k, g)));
  CHECK(s.iterations <= 2);
  CHECK(s.residual <= 1e-14);
  const TensorKernel t(1.5);
  const PolyField tf = make_field(CaseId::TensorQuadratic);
  const Solution st = solve(assemble(patches, t, tf, interior_forcing(tf, t, g)));
  CHECK(st.iterations <= 2);
}

TEST_CASE("coarse scalar solve reproduces the reference error") {
  const Grid g = Grid::build(0.2, 0.4);
  const PatchList patches = build_patches(g, 0.4, Scheme::IPAAC);
  const DiscreteSystem sys = scalar_system(g, patches, CaseId::Case1);
  const Solution s = solve(sys);
  CHECK(linf_error(s, make_field(CaseId::Case1), g) == doctest::Approx(3.70e-2).epsilon(0.01));
}

TEST_CASE("reported residual matches a recomputation") {
  const Grid g = Grid::build(0.025, 0.1);
  const PatchList patches = build_patches(g, 0.1, Scheme::IPAAC);
  const DiscreteSystem sys = scalar_system(g, patches, CaseId::Case3);
  const Solution s = solve(sys);
  std::vector<double> ku(sys.size());
  sys.multiply(s.values, ku);
  double rr = 0.0;
  double bb = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    rr += (sys.rhs()[i] - ku[i]) * (sys.rhs()[i] - ku[i]);
    bb += sys.rhs()[i] * sys.rhs()[i];
  }
  const double recomputed = std::sqrt(rr / bb);
  CHECK(s.residual <= kDefaultSolverTolerance);
  CHECK(recomputed <= 10.0 * std::max(s.residual, 1e-16));
  CHECK(s.residual <= 10.0 * std::max(recomputed, 1e-16));
}

TEST_CASE("iteration budget exhaustion throws") {
  const Grid g = Grid::build(0.025, 0.1);
  const PatchList patches = build_patches(g, 0.1, Scheme::IPAAC);
  const DiscreteSystem sys = scalar_system(g, patches, CaseId::Case2);
  try {
    solve(sys, 1e-12, 3);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.iterations() == 3);
    CHECK(e.residual() > 1e-12);
  }
}

TEST_CASE("tensor solution is invariant under kappa") {
  const Grid g = Grid::build(0.05, 0.2);
  const PatchList patches = build_patches(g, 0.2, Scheme::IPAAC);
  const PolyField f = make_field(CaseId::TensorQuadratic);
  const TensorKernel k1(0.2, 1.0);
  const TensorKernel k2(0.2, 7.3);
  const Solution a = solve(assemble(patches, k1, f, interior_forcing(f, k1, g)));
  const Solution b = solve(assemble(patches, k2, f, interior_forcing(f, k2, g)));
  double diff = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
  CHECK(diff <= 10.0 * kDefaultSolverTolerance);
}

TEST_CASE("quad-point constrained data changes partial-cell couplings only") {
  const Grid g = Grid::build(0.1, 0.4);
  const PatchList patches = build_patches(g, 0.4, Scheme::IPAAC);
  const ScalarKernel k(0.4);
  const PolyField f = make_field(CaseId::Case1);
  const auto b = interior_forcing(f, k, g);
  const DiscreteSystem nodal = assemble(patches, k, f, b, {ConstrainedData::Nodal});
  const DiscreteSystem quad = assemble(patches, k, f, b, {ConstrainedData::QuadPoint});
  CHECK(nodal.entry(0, 0) == quad.entry(0, 0));
  double diff = 0.0;
  for (std::size_t i = 0; i < nodal.size(); ++i) diff = std::max(diff, std::abs(nodal.rhs()[i] - quad.rhs()[i]));
  CHECK(diff > 0.0);
}
