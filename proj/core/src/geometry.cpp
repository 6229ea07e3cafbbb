#include "ipaac/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ipaac {

std::string_view to_string(CellClass c) {
  switch (c) {
    case CellClass::Full:
      return "full";
    case CellClass::StandardPartial:
      return "standard-partial";
    case CellClass::BoundaryPartial:
      return "boundary-partial";
    case CellClass::Excluded:
      return "excluded";
  }
  return "unknown";
}

namespace {

// Area and first moments accumulated by Green's theorem, in coordinates
// centered on the disc.
struct Moments {
  double area = 0.0;
  double mx = 0.0;
  double my = 0.0;

  void add_segment(const Vec2& a, const Vec2& b) {
    area += 0.5 * cross(a, b);
    mx += (b.y - a.y) * (a.x * a.x + a.x * b.x + b.x * b.x) / 6.0;
    my -= (b.x - a.x) * (a.y * a.y + a.y * b.y + b.y * b.y) / 6.0;
  }

  // Counter-clockwise arc of radius r between two points on the circle whose
  // polar angles are t0 < t1.
  void add_arc(double r, double t0, const Vec2& p0, double t1, const Vec2& p1) {
    const double c0 = p0.x / r, s0 = p0.y / r;
    const double c1 = p1.x / r, s1 = p1.y / r;
    const double r3 = r * r * r;
    area += 0.5 * r * r * (t1 - t0);
    // x dA = x^2/2 dy  ->  r^3/2 cos^3; antiderivative sin - sin^3/3
    mx += 0.5 * r3 * ((s1 - s1 * s1 * s1 / 3.0) - (s0 - s0 * s0 * s0 / 3.0));
    // y dA = -y^2/2 dx ->  r^3/2 sin^3; antiderivative -cos + cos^3/3
    my += 0.5 * r3 * ((-c1 + c1 * c1 * c1 / 3.0) - (-c0 + c0 * c0 * c0 / 3.0));
  }
};

struct Crossing {
  double angle;
  Vec2 point;
};

double squared_distance_to_box(const Vec2& lo, const Vec2& hi) {
  const double dx = std::max({lo.x, 0.0, -hi.x});
  const double dy = std::max({lo.y, 0.0, -hi.y});
  return dx * dx + dy * dy;
}

double squared_farthest_corner(const Vec2& lo, const Vec2& hi) {
  const double fx = std::max(std::abs(lo.x), std::abs(hi.x));
  const double fy = std::max(std::abs(lo.y), std::abs(hi.y));
  return fx * fx + fy * fy;
}

void validate(const Disc& disc, const Cell& cell) {
  if (!(disc.radius > 0.0)) throw std::invalid_argument("disc radius must be positive");
  if (!(cell.side > 0.0)) throw std::invalid_argument("cell side must be positive");
}

Moments boundary_moments(double r, const Vec2& lo, const Vec2& hi) {
  const double r2 = r * r;
  Moments m;

  // Straight pieces: the parts of each square edge that lie inside the disc,
  // traversed counter-clockwise around the square.
  auto horizontal = [&](double y, bool forward) {
    if (y * y >= r2) return;
    const double s = std::sqrt(r2 - y * y);
    const double x0 = std::max(lo.x, -s);
    const double x1 = std::min(hi.x, s);
    if (x1 <= x0) return;
    if (forward)
      m.add_segment({x0, y}, {x1, y});
    else
      m.add_segment({x1, y}, {x0, y});
  };
  auto vertical = [&](double x, bool forward) {
    if (x * x >= r2) return;
    const double s = std::sqrt(r2 - x * x);
    const double y0 = std::max(lo.y, -s);
    const double y1 = std::min(hi.y, s);
    if (y1 <= y0) return;
    if (forward)
      m.add_segment({x, y0}, {x, y1});
    else
      m.add_segment({x, y1}, {x, y0});
  };
  horizontal(lo.y, true);
  vertical(hi.x, true);
  horizontal(hi.y, false);
  vertical(lo.x, false);

  // Circular pieces: arcs of the circle between consecutive crossings with
  // the square's supporting lines, kept when their midpoint is in the square.
  std::vector<Crossing> crossings;
  crossings.reserve(8);
  auto on_x_line = [&](double x) {
    if (x * x > r2) return;
    const double s = std::sqrt(r2 - x * x);
    for (const double y : {-s, s})
      if (y >= lo.y && y <= hi.y) crossings.push_back({std::atan2(y, x), {x, y}});
  };
  auto on_y_line = [&](double y) {
    if (y * y > r2) return;
    const double s = std::sqrt(r2 - y * y);
    for (const double x : {-s, s})
      if (x >= lo.x && x <= hi.x) crossings.push_back({std::atan2(y, x), {x, y}});
  };
  on_x_line(lo.x);
  on_x_line(hi.x);
  on_y_line(lo.y);
  on_y_line(hi.y);

  auto inside_box = [&](double x, double y) {
    return x >= lo.x && x <= hi.x && y >= lo.y && y <= hi.y;
  };

  if (crossings.empty()) {
    // Circle never meets the square boundary: it is either wholly inside the
    // square or wholly outside of it.
    if (inside_box(r, 0.0)) {
      m.area += std::numbers::pi * r2;
    }
    return m;
  }

  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.angle < b.angle; });
  const std::size_t k = crossings.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Crossing& a = crossings[i];
    const Crossing& b = crossings[(i + 1) % k];
    const double t0 = a.angle;
    const double t1 = (i + 1 < k) ? b.angle : b.angle + 2.0 * std::numbers::pi;
    if (t1 - t0 <= 0.0) continue;
    const double tm = 0.5 * (t0 + t1);
    if (inside_box(r * std::cos(tm), r * std::sin(tm))) m.add_arc(r, t0, a.point, t1, b.point);
  }
  return m;
}

}  // namespace

Patch intersect(const Disc& disc, const Cell& cell) {
  validate(disc, cell);
  const double r = disc.radius;
  const double s = cell.side;
  const Vec2 lo = cell.lower - disc.center;
  const Vec2 hi = lo + Vec2{s, s};
  const Vec2 center = cell.center();

  if (squared_distance_to_box(lo, hi) >= r * r) return {0.0, center, CellClass::Excluded};
  if (squared_farthest_corner(lo, hi) <= r * r) return {s * s, center, CellClass::Full};

  const Moments m = boundary_moments(r, lo, hi);
  const double cell_area = s * s;
  if (m.area < kClassifyTolerance * cell_area) return {0.0, center, CellClass::Excluded};
  if (m.area > (1.0 - kClassifyTolerance) * cell_area) return {cell_area, center, CellClass::Full};

  Vec2 centroid = Vec2{m.mx / m.area, m.my / m.area} + disc.center;
  const Vec2 upper = cell.upper();
  centroid.x = std::clamp(centroid.x, cell.lower.x, upper.x);
  centroid.y = std::clamp(centroid.y, cell.lower.y, upper.y);

  const bool center_inside = norm2(center - disc.center) <= r * r;
  return {m.area, centroid, center_inside ? CellClass::StandardPartial : CellClass::BoundaryPartial};
}

// ============================================================================
// Quadtree oracle
// ============================================================================

namespace {

struct OracleSum {
  double area = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double bound = 0.0;
};

// Square [lo, lo+s]^2 clipped by the half-plane {p : p.n <= r}; adds the
// resulting polygon's area and first moments.
void add_clipped_leaf(const Vec2& lo, double s, const Vec2& n, double r, OracleSum& acc) {
  const std::array<Vec2, 4> square = {Vec2{lo.x, lo.y}, Vec2{lo.x + s, lo.y},
                                      Vec2{lo.x + s, lo.y + s}, Vec2{lo.x, lo.y + s}};
  std::array<Vec2, 8> poly{};
  std::size_t count = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec2& a = square[i];
    const Vec2& b = square[(i + 1) % 4];
    const double da = dot(a, n) - r;
    const double db = dot(b, n) - r;
    if (da <= 0.0) poly[count++] = a;
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      poly[count++] = a + (b - a) * t;
    }
  }
  double area = 0.0, mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % count];
    const double c = cross(a, b);
    area += 0.5 * c;
    mx += (a.x + b.x) * c / 6.0;
    my += (a.y + b.y) * c / 6.0;
  }
  acc.area += area;
  acc.mx += mx;
  acc.my += my;
  acc.bound += s * s;
}

void refine(const Vec2& lo, double s, double r, int level, int depth, OracleSum& acc) {
  const Vec2 hi = lo + Vec2{s, s};
  if (squared_distance_to_box(lo, hi) >= r * r) return;
  if (squared_farthest_corner(lo, hi) <= r * r) {
    const double a = s * s;
    acc.area += a;
    acc.mx += a * (lo.x + 0.5 * s);
    acc.my += a * (lo.y + 0.5 * s);
    return;
  }
  if (level >= depth) {
    const Vec2 c = lo + Vec2{0.5 * s, 0.5 * s};
    const double len = norm(c);
    const Vec2 n = len > 0.0 ? c * (1.0 / len) : Vec2{1.0, 0.0};
    add_clipped_leaf(lo, s, n, r, acc);
    return;
  }
  const double h = 0.5 * s;
  refine(lo, h, r, level + 1, depth, acc);
  refine(lo + Vec2{h, 0.0}, h, r, level + 1, depth, acc);
  refine(lo + Vec2{0.0, h}, h, r, level + 1, depth, acc);
  refine(lo + Vec2{h, h}, h, r, level + 1, depth, acc);
}

}  // namespace

OracleEstimate intersect_oracle(const Disc& disc, const Cell& cell, int depth) {
  validate(disc, cell);
  if (depth < 1) throw std::invalid_argument("oracle refinement depth must be >= 1");
  OracleSum acc;
  refine(cell.lower - disc.center, cell.side, disc.radius, 1, depth, acc);
  OracleEstimate out;
  out.area = acc.area;
  out.area_bound = acc.bound;
  out.centroid = acc.area > 0.0 ? Vec2{acc.mx / acc.area, acc.my / acc.area} + disc.center
                                : cell.center();
  return out;
}

}  // namespace ipaac
