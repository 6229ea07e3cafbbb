#include <doctest.h>

#include <algorithm>
#include <set>

#include "ipaac/errors.hpp"
#include "ipaac/grid.hpp"

using namespace ipaac;

TEST_CASE("coarse grid with a two-cell layer") {
  const Grid g = Grid::build(0.5, 0.6);
  CHECK(g.layer_cells() == 2);
  CHECK(g.side() == 6);
  CHECK(g.size() == 36);
  REQUIRE(g.interior_count() == 4);
  const Vec2 expected[] = {{0.25, 0.25}, {0.75, 0.25}, {0.25, 0.75}, {0.75, 0.75}};
  for (int k = 0; k < 4; ++k) {
    const Vec2 p = g.node(g.interior()[k]).position;
    CHECK(p.x == doctest::Approx(expected[k].x));
    CHECK(p.y == doctest::Approx(expected[k].y));
  }
}

TEST_CASE("grid sizes") {
  const Grid a = Grid::build(0.1, 0.4);
  CHECK(a.layer_cells() == 4);
  CHECK(a.side() == 18);
  CHECK(a.interior_count() == 100);
  const Grid b = Grid::build(0.01, 0.03);
  CHECK(b.layer_cells() == 3);
  CHECK(b.size() == 106u * 106u);
  const Grid c = Grid::build(0.00625, 0.03125);
  CHECK(c.cells_per_side() == 160);
  CHECK(c.layer_cells() == 5);
}

TEST_CASE("invalid configurations") {
  CHECK_THROWS_AS(Grid::build(0.3, 0.6), ConfigError);
  CHECK_THROWS_AS(Grid::build(0.1, 0.1), ConfigError);
  CHECK_THROWS_AS(Grid::build(0.1, 0.05), ConfigError);
  CHECK_THROWS_AS(Grid::build(0.0, 0.5), ConfigError);
  CHECK_THROWS_AS(Grid::build(-0.1, 0.5), ConfigError);
  CHECK_THROWS_AS(Grid::build(2.0, 3.0), ConfigError);
  CHECK_NOTHROW(Grid::validate(0.0125, 0.4));
  CHECK_THROWS_AS(Grid::validate(0.0062, 0.0248), ConfigError);
}

TEST_CASE("node kinds and lattice bookkeeping") {
  const Grid g = Grid::build(0.1, 0.25);
  std::size_t interior = 0;
  for (const Node& n : g.nodes()) {
    const bool in = n.position.x > 0 && n.position.x < 1 && n.position.y > 0 && n.position.y < 1;
    CHECK((n.kind == NodeKind::Interior) == in);
    interior += in;
    const LatticeIndex l = g.lattice(n.index);
    CHECK(g.index_of(l) == n.index);
    CHECK(g.position(l).x == doctest::Approx(n.position.x));
    const Cell c = g.cell(n.index);
    CHECK(c.center().x == doctest::Approx(n.position.x));
    CHECK(c.center().y == doctest::Approx(n.position.y));
  }
  CHECK(interior == g.interior_count());
  CHECK_FALSE(g.index_of({-g.layer_cells() - 1, 0}).has_value());
  CHECK_FALSE(g.index_of({0, g.cells_per_side() + g.layer_cells()}).has_value());
}

TEST_CASE("cells tile the extended square") {
  const Grid g = Grid::build(0.05, 0.12);
  double area = 0.0;
  for (const Node& n : g.nodes()) area += g.cell(n.index).side * g.cell(n.index).side;
  const double width = 1.0 + 2.0 * g.layer_cells() * g.h();
  CHECK(area == doctest::Approx(width * width).epsilon(1e-12));
}

TEST_CASE("interior horizons stay inside the extended grid") {
  for (const auto& [h, delta] : {std::pair{0.1, 0.4}, {0.05, 0.12}, {0.01, 0.03}}) {
    const Grid g = Grid::build(h, delta);
    const double lo = -g.layer_cells() * h;
    const double hi = 1.0 + g.layer_cells() * h;
    for (const std::size_t i : g.interior()) {
      const Vec2 p = g.node(i).position;
      REQUIRE(p.x - delta >= lo - 1e-12);
      REQUIRE(p.x + delta <= hi + 1e-12);
      REQUIRE(p.y - delta >= lo - 1e-12);
      REQUIRE(p.y + delta <= hi + 1e-12);
    }
  }
}

TEST_CASE("candidate neighbors") {
  const Grid g = Grid::build(0.2, 0.4);
  const int reach = g.layer_cells() + 1;
  for (const std::size_t i : g.interior()) {
    const auto cand = candidate_neighbors(g, i);
    const LatticeIndex l = g.lattice(i);
    const bool window_fits = l.i - reach >= -g.layer_cells() && l.j - reach >= -g.layer_cells() &&
                             l.i + reach < g.cells_per_side() + g.layer_cells() &&
                             l.j + reach < g.cells_per_side() + g.layer_cells();
    if (!window_fits) {
      // clipped offsets lie beyond the horizon
      for (const std::size_t j : cand) CHECK(j != i);
      continue;
    }
    CHECK(cand.size() == 48);
    CHECK(std::find(cand.begin(), cand.end(), i) == cand.end());
    const LatticeIndex c = g.lattice(i);
    std::set<std::pair<int, int>> offsets;
    for (const std::size_t j : cand) {
      const LatticeIndex l = g.lattice(j);
      offsets.insert({l.i - c.i, l.j - c.j});
    }
    for (const auto& [di, dj] : offsets) CHECK(offsets.count({-di, -dj}) == 1);
  }
}

TEST_CASE("distance to the unit square boundary") {
  CHECK(Grid::distance_to_boundary({0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(Grid::distance_to_boundary({0.05, 0.7}) == doctest::Approx(0.05));
}
