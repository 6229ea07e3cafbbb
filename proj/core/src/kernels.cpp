#include "ipaac/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ipaac/errors.hpp"

namespace ipaac {

namespace {

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

void check_exponents(int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxMomentDegree)
    throw ConfigError("kernel moment exponents (" + std::to_string(p) + "," + std::to_string(q) +
                      ") outside 0 <= p+q <= " + std::to_string(kMaxMomentDegree));
}

}  // namespace

double angular_moment(int p, int q) {
  if (p % 2 != 0 || q % 2 != 0) return 0.0;
  // 2π (p-1)!! (q-1)!! / (p+q)!!
  return 2.0 * std::numbers::pi * double_factorial(p - 1) * double_factorial(q - 1) /
         double_factorial(p + q);
}

// ============================================================================
// Scalar kernel
// ============================================================================

ScalarKernel::ScalarKernel(double delta) : delta_(delta) {
  if (!(delta > 0.0)) throw ConfigError("horizon delta must be positive");
  c1_ = 20.0 / (std::numbers::pi * std::pow(delta, 4));
}

double ScalarKernel::operator()(const Vec2& xi) const {
  const double r = norm(xi);
  if (r >= delta_) return 0.0;
  return c1_ * (1.0 - r / delta_);
}

double ScalarKernel::moment(int p, int q) const {
  check_exponents(p, q);
  if (p % 2 != 0 || q % 2 != 0) return 0.0;
  const int n = p + q;
  // c1 ∫_0^δ (1 - r/δ) r^{n+1} dr = c1 δ^{n+2} / ((n+2)(n+3))
  return c1_ * std::pow(delta_, n + 2) / ((n + 2.0) * (n + 3.0)) * angular_moment(p, q);
}

// ============================================================================
// Tensor kernel
// ============================================================================

TensorKernel::TensorKernel(double delta, double kappa) : delta_(delta), kappa_(kappa) {
  if (!(delta > 0.0)) throw ConfigError("horizon delta must be positive");
  if (!(kappa > 0.0)) throw ConfigError("material constant kappa must be positive");
  c2_ = 72.0 * kappa / (5.0 * std::numbers::pi * std::pow(delta, 3));
}

double TensorKernel::c2_3d() const { return 18.0 * kappa_ / (std::numbers::pi * std::pow(delta_, 4)); }

Mat2 TensorKernel::operator()(const Vec2& xi) const {
  const double r2 = norm2(xi);
  if (r2 == 0.0) throw std::domain_error("tensor kernel is singular at xi = 0");
  const double r = std::sqrt(r2);
  if (r > delta_) return {};
  const double f = c2_ / (r2 * r);
  return {f * xi.x * xi.x, f * xi.x * xi.y, f * xi.y * xi.y};
}

double TensorKernel::moment(int a, int b, int p, int q) const {
  if (a < 1 || a > 2 || b < 1 || b > 2) throw ConfigError("tensor moment indices must be 1 or 2");
  check_exponents(p, q);
  const int e1 = p + (a == 1) + (b == 1);
  const int e2 = q + (a == 2) + (b == 2);
  if (e1 % 2 != 0 || e2 % 2 != 0) return 0.0;
  const int n = e1 + e2;  // >= 2
  // Integrand r^{n-3} times area element r dr: ∫_0^δ r^{n-2} dr = δ^{n-1}/(n-1)
  return c2_ * std::pow(delta_, n - 1) / (n - 1.0) * angular_moment(e1, e2);
}

// ============================================================================
// Moment table
// ============================================================================

MomentTable::MomentTable(const ScalarKernel& kernel) : tensor_(false) {
  for (int p = 0; p < kN; ++p)
    for (int q = 0; p + q < kN; ++q) scalar_[p][q] = kernel.moment(p, q);
}

MomentTable::MomentTable(const TensorKernel& kernel) : tensor_(true) {
  for (int p = 0; p < kN; ++p)
    for (int q = 0; p + q < kN; ++q) {
      tensor_table_[0][p][q] = kernel.moment(1, 1, p, q);
      tensor_table_[1][p][q] = kernel.moment(1, 2, p, q);
      tensor_table_[2][p][q] = kernel.moment(2, 2, p, q);
    }
}

double MomentTable::scalar(int p, int q) const {
  if (tensor_) throw ConfigError("scalar moment requested from a tensor moment table");
  check_exponents(p, q);
  return scalar_[p][q];
}

double MomentTable::tensor(int a, int b, int p, int q) const {
  if (!tensor_) throw ConfigError("tensor moment requested from a scalar moment table");
  if (a < 1 || a > 2 || b < 1 || b > 2) throw ConfigError("tensor moment indices must be 1 or 2");
  check_exponents(p, q);
  return tensor_table_[a + b - 2][p][q];
}

}  // namespace ipaac
