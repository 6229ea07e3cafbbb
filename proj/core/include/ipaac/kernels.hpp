#pragma once

#include <array>

#include "ipaac/vec2.hpp"

namespace ipaac {

/// Highest total degree p+q for which closed-form kernel moments are provided.
inline constexpr int kMaxMomentDegree = 6;

/// Symmetric 2x2 matrix.
struct Mat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  constexpr Vec2 operator*(const Vec2& v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
  constexpr Mat2& operator+=(const Mat2& o) {
    xx += o.xx;
    xy += o.xy;
    yy += o.yy;
    return *this;
  }
  friend constexpr Mat2 operator*(double s, const Mat2& m) { return {s * m.xx, s * m.xy, s * m.yy}; }
  constexpr double trace() const { return xx + yy; }
  constexpr double det() const { return xx * yy - xy * xy; }
};

/// Linearly decaying radial micromodulus c1 (1 - |xi|/delta) on the horizon disc,
/// with c1 = 20 / (pi delta^4) so that the second moment over the disc is one.
class ScalarKernel {
 public:
  /// Throws ConfigError unless delta > 0.
  explicit ScalarKernel(double delta);

  double delta() const { return delta_; }
  double c1() const { return c1_; }

  double operator()(const Vec2& xi) const;

  /// M_pq = ∫_{|xi|<=delta} s(xi) xi1^p xi2^q dxi in closed form. Odd p or q
  /// gives exactly 0; throws ConfigError for negative exponents or p+q beyond
  /// kMaxMomentDegree.
  double moment(int p, int q) const;

 private:
  double delta_;
  double c1_;
};

/// Bond-based elastic micromodulus c2 (xi ⊗ xi) / |xi|^3 on the horizon disc.
class TensorKernel {
 public:
  /// Throws ConfigError unless delta > 0 and kappa > 0.
  explicit TensorKernel(double delta, double kappa = 1.0);

  double delta() const { return delta_; }
  double kappa() const { return kappa_; }
  /// Planar scaling constant 72 kappa / (5 pi delta^3).
  double c2() const { return c2_; }
  /// Three-dimensional scaling constant 18 kappa / (pi delta^4). Not used by
  /// the planar solver.
  double c2_3d() const;

  /// Throws std::domain_error for xi = 0. Zero outside the horizon.
  Mat2 operator()(const Vec2& xi) const;

  /// ∫_{|xi|<=delta} c2 xi_a xi_b xi1^p xi2^q / |xi|^3 dxi with a, b in {1, 2}.
  /// Zero whenever the total exponent of either coordinate is odd.
  double moment(int a, int b, int p, int q) const;

 private:
  double delta_;
  double kappa_;
  double c2_;
};

/// ∫_0^{2π} cos^p θ sin^q θ dθ (exact; zero for odd p or q).
double angular_moment(int p, int q);

/// Closed-form moments of one kernel, tabulated up to kMaxMomentDegree.
class MomentTable {
 public:
  explicit MomentTable(const ScalarKernel& kernel);
  explicit MomentTable(const TensorKernel& kernel);

  bool is_tensor() const { return tensor_; }
  /// Scalar-kernel moment M_pq.
  double scalar(int p, int q) const;
  /// Tensor-kernel moment indexed by (a, b, p, q), a, b in {1, 2}.
  double tensor(int a, int b, int p, int q) const;

 private:
  static constexpr int kN = kMaxMomentDegree + 1;
  bool tensor_;
  std::array<std::array<double, kN>, kN> scalar_{};
  std::array<std::array<std::array<double, kN>, kN>, 3> tensor_table_{};  // xx, xy, yy
};

}  // namespace ipaac
