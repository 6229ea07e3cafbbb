#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "ipaac/errors.hpp"
#include "ipaac/quadrature.hpp"

using namespace ipaac;

namespace {

std::size_t center_node(const Grid& g) {
  const int mid = g.cells_per_side() / 2;
  return *g.index_of({mid, mid});
}

}  // namespace

TEST_CASE("scheme names") {
  for (const Scheme s : {Scheme::FA, Scheme::PAAC, Scheme::IPAAC}) CHECK(parse_scheme(to_string(s)) == s);
  CHECK(to_string(Scheme::IPAAC) == "ipa-ac");
  CHECK_FALSE(parse_scheme("magic").has_value());
}

TEST_CASE("IPA-AC weight completeness at m = 2") {
  const Grid g = Grid::build(0.2, 0.4);
  const PatchList patches = build_patches(g, 0.4, Scheme::IPAAC);
  const PatchSummary s = patch_summary(patches, center_node(g));
  CHECK(s.total_weight == doctest::Approx(0.4626548).epsilon(1e-7));
  CHECK(std::abs(s.total_weight + 0.04 - std::numbers::pi * 0.16) <= 1e-10 * std::numbers::pi * 0.16);
  // cells whose far corner lies inside radius 2h: the four edge neighbors
  std::size_t full = 0;
  for (int di = -3; di <= 3; ++di)
    for (int dj = -3; dj <= 3; ++dj)
      if ((di || dj) && std::hypot(std::abs(di) + 0.5, std::abs(dj) + 0.5) <= 2.0) ++full;
  CHECK(full == 4);
  CHECK(s.full == full);
  CHECK(s.standard_partial > 0);
  CHECK(s.boundary_partial > 0);
}

TEST_CASE("FA weights count neighbor centers") {
  const Grid g = Grid::build(0.2, 0.4);
  const PatchList patches = build_patches(g, 0.4, Scheme::FA);
  const std::size_t node = center_node(g);
  const Vec2 x = g.node(node).position;
  std::size_t count = 0;
  for (const std::size_t j : candidate_neighbors(g, node))
    if (norm(g.node(j).position - x) <= 0.4 + 1e-12) ++count;
  const PatchSummary s = patch_summary(patches, node);
  CHECK(count == 12);
  CHECK(s.total_weight == doctest::Approx(0.04 * count));
  CHECK(std::abs(s.total_weight - (std::numbers::pi * 0.16 - 0.04)) > 1e-3);
  for (const NeighborEntry& e : patches.neighbors(node)) {
    CHECK(e.weight == doctest::Approx(0.04));
    CHECK(e.quad_point.x == doctest::Approx(g.node(e.neighbor).position.x));
  }
}

TEST_CASE("quadrature points per scheme") {
  const Grid g = Grid::build(0.1, 0.33);
  const std::size_t node = center_node(g);
  const Vec2 x = g.node(node).position;
  const auto pa = build_patches(g, 0.33, Scheme::PAAC).neighbors(node);
  const auto ipa = build_patches(g, 0.33, Scheme::IPAAC).neighbors(node);
  REQUIRE(pa.size() == ipa.size());
  for (std::size_t k = 0; k < pa.size(); ++k) {
    REQUIRE(pa[k].neighbor == ipa[k].neighbor);
    CHECK(pa[k].weight == ipa[k].weight);
    CHECK(pa[k].neighbor != node);
    const Vec2 center = g.node(pa[k].neighbor).position;
    CHECK(pa[k].quad_point.x == doctest::Approx(center.x));
    CHECK(pa[k].quad_point.y == doctest::Approx(center.y));
    CHECK(ipa[k].weight > 0.0);
    CHECK(norm(ipa[k].quad_point - x) <= 0.33 + 1e-12);
    if (ipa[k].cls == CellClass::Full) {
      CHECK(ipa[k].quad_point.x == doctest::Approx(center.x));
      CHECK(ipa[k].quad_point.y == doctest::Approx(center.y));
    }
  }
}

TEST_CASE("first-moment completeness and pair symmetry") {
  for (const auto& [h, delta] : {std::pair{0.2, 0.4}, {0.1, 0.33}, {0.05, 0.17}, {0.01, 0.03}}) {
    const Grid g = Grid::build(h, delta);
    const PatchList patches = build_patches(g, delta, Scheme::IPAAC);
    Vec2 moment{0, 0};
    double total = h * h;
    std::map<std::pair<int, int>, StencilEntry> by_offset;
    for (const StencilEntry& e : patches.stencil()) {
      moment = moment + e.bond * e.weight;
      total += e.weight;
      by_offset[{e.di, e.dj}] = e;
    }
    const double disc = std::numbers::pi * delta * delta;
    CHECK(std::abs(total - disc) <= 1e-10 * disc);
    CHECK(norm(moment) <= 1e-10 * disc * delta);
    for (const auto& [off, e] : by_offset) {
      const auto it = by_offset.find({-off.first, -off.second});
      REQUIRE(it != by_offset.end());
      CHECK(it->second.weight == doctest::Approx(e.weight).epsilon(1e-14));
      CHECK(std::abs(it->second.bond.x + e.bond.x) <= 1e-14);
      CHECK(std::abs(it->second.bond.y + e.bond.y) <= 1e-14);
    }
  }
}

TEST_CASE("scheme nesting") {
  const Grid g = Grid::build(0.05, 0.17);
  const auto fa = build_patches(g, 0.17, Scheme::FA);
  const auto pa = build_patches(g, 0.17, Scheme::PAAC);
  std::map<std::pair<int, int>, double> pa_weight;
  for (const StencilEntry& e : pa.stencil()) pa_weight[{e.di, e.dj}] = e.weight;
  for (const StencilEntry& e : fa.stencil()) CHECK(pa_weight.count({e.di, e.dj}) == 1);
}

TEST_CASE("near-boundary neighbors reach into the fictitious layer") {
  const Grid g = Grid::build(0.1, 0.25);
  const PatchList patches = build_patches(g, 0.25, Scheme::IPAAC);
  const std::size_t corner = g.interior().front();
  std::size_t constrained = 0;
  for (const NeighborEntry& e : patches.neighbors(corner))
    constrained += g.node(e.neighbor).kind == NodeKind::Constrained;
  CHECK(constrained > 0);
  CHECK(patches.neighbors(corner).size() == patches.stencil().size());
}

TEST_CASE("horizon mismatch is rejected") {
  const Grid g = Grid::build(0.1, 0.25);
  CHECK_THROWS_AS(build_patches(g, 0.3, Scheme::IPAAC), ConfigError);
}
