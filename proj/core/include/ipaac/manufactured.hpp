#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ipaac/assembly.hpp"
#include "ipaac/grid.hpp"
#include "ipaac/kernels.hpp"
#include "ipaac/vec2.hpp"

namespace ipaac {

/// Highest total degree of a manufactured polynomial. Matches the moment
/// table so every Taylor term of the field has a closed-form moment.
inline constexpr int kMaxPolyDegree = kMaxMomentDegree;

/// Dense bivariate polynomial sum c_pq x1^p x2^q with p + q <= kMaxPolyDegree.
class Polynomial {
 public:
  Polynomial() = default;

  /// Adds c x1^p x2^q. Throws ConfigError if p + q exceeds kMaxPolyDegree.
  Polynomial& add(double c, int p, int q);
  double coefficient(int p, int q) const;
  /// Total degree, -1 for the zero polynomial.
  int degree() const;

  double operator()(const Vec2& x) const;
  /// Mixed partial derivative d^{p+q} / dx1^p dx2^q at x.
  double derivative(int p, int q, const Vec2& x) const;

 private:
  static constexpr int kN = kMaxPolyDegree + 1;
  std::array<std::array<double, kN>, kN> c_{};
};

/// Vector-valued polynomial field with one or two components.
class PolyField {
 public:
  explicit PolyField(std::vector<Polynomial> components);

  std::size_t components() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t a) const { return comps_[a]; }
  std::vector<double> operator()(const Vec2& x) const;
  int degree() const;

 private:
  std::vector<Polynomial> comps_;
};

enum class CaseId { Case1, Case2, Case3, TensorQuadratic };

std::string_view to_string(CaseId c);
std::optional<CaseId> parse_case(std::string_view s);

/// Case1: x1(1-x1)/2 + x2(1-x2)/2; Case2: x1^3 + 2 x2^2;
/// Case3: x1^3 x2^2 + x2^4; TensorQuadratic: (Case1, Case1).
PolyField make_field(CaseId c);

/// Exact nonlocal operator L u(x) = -∫ C(xi) (u(x+xi) - u(x)) dxi for a
/// polynomial field, from its finite Taylor expansion about x contracted
/// with the closed-form kernel moments. Scalar kernels act per component.
std::vector<double> nonlocal_apply(const PolyField& field, const ScalarKernel& kernel, const Vec2& x);
/// Tensor kernel; the field must have two components (ConfigError otherwise).
std::vector<double> nonlocal_apply(const PolyField& field, const TensorKernel& kernel, const Vec2& x);

/// Same operator by polar quadrature: composite Gauss-Legendre in the radius
/// and the trapezoidal rule in the angle, both doubled until successive
/// estimates differ by less than tol. Throws OracleError when the refinement
/// budget runs out.
std::vector<double> nonlocal_apply_oracle(const PolyField& field, const ScalarKernel& kernel, const Vec2& x,
                                          double tol);
std::vector<double> nonlocal_apply_oracle(const PolyField& field, const TensorKernel& kernel, const Vec2& x,
                                          double tol);

/// Forcing b = L u at every interior node, components interleaved.
std::vector<double> interior_forcing(const PolyField& field, const ScalarKernel& kernel, const Grid& grid);
std::vector<double> interior_forcing(const PolyField& field, const TensorKernel& kernel, const Grid& grid);

/// Discrete max-norm error over interior nodes and components.
double linf_error(const Solution& solution, const PolyField& field, const Grid& grid);

}  // namespace ipaac
