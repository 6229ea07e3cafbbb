#include "ipaac/manufactured.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "ipaac/errors.hpp"

namespace ipaac {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// n (n-1) ... (n-k+1)
double falling(int n, int k) {
  double r = 1.0;
  for (int t = 0; t < k; ++t) r *= n - t;
  return r;
}

}  // namespace

// ============================================================================
// Polynomial
// ============================================================================

Polynomial& Polynomial::add(double c, int p, int q) {
  if (p < 0 || q < 0 || p + q > kMaxPolyDegree)
    throw ConfigError("monomial x1^" + std::to_string(p) + " x2^" + std::to_string(q) +
                      " exceeds the supported polynomial degree " + std::to_string(kMaxPolyDegree));
  c_[p][q] += c;
  return *this;
}

double Polynomial::coefficient(int p, int q) const {
  if (p < 0 || q < 0 || p + q > kMaxPolyDegree) return 0.0;
  return c_[p][q];
}

int Polynomial::degree() const {
  int d = -1;
  for (int p = 0; p < kN; ++p)
    for (int q = 0; p + q < kN; ++q)
      if (c_[p][q] != 0.0) d = std::max(d, p + q);
  return d;
}

double Polynomial::operator()(const Vec2& x) const { return derivative(0, 0, x); }

double Polynomial::derivative(int dp, int dq, const Vec2& x) const {
  double sum = 0.0;
  for (int p = dp; p < kN; ++p)
    for (int q = dq; p + q < kN; ++q) {
      if (c_[p][q] == 0.0) continue;
      sum += c_[p][q] * falling(p, dp) * falling(q, dq) * std::pow(x.x, p - dp) * std::pow(x.y, q - dq);
    }
  return sum;
}

// ============================================================================
// PolyField and the test cases
// ============================================================================

PolyField::PolyField(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (comps_.empty() || comps_.size() > 2) throw ConfigError("a field has one or two components");
}

std::vector<double> PolyField::operator()(const Vec2& x) const {
  std::vector<double> v(comps_.size());
  for (std::size_t a = 0; a < comps_.size(); ++a) v[a] = comps_[a](x);
  return v;
}

int PolyField::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

std::string_view to_string(CaseId c) {
  switch (c) {
    case CaseId::Case1:
      return "1";
    case CaseId::Case2:
      return "2";
    case CaseId::Case3:
      return "3";
    case CaseId::TensorQuadratic:
      return "tensor-quadratic";
  }
  return "unknown";
}

std::optional<CaseId> parse_case(std::string_view s) {
  if (s == "1") return CaseId::Case1;
  if (s == "2") return CaseId::Case2;
  if (s == "3") return CaseId::Case3;
  if (s == "tensor-quadratic") return CaseId::TensorQuadratic;
  return std::nullopt;
}

PolyField make_field(CaseId c) {
  Polynomial quad;
  quad.add(0.5, 1, 0).add(-0.5, 2, 0).add(0.5, 0, 1).add(-0.5, 0, 2);
  switch (c) {
    case CaseId::Case1:
      return PolyField({quad});
    case CaseId::Case2: {
      Polynomial p;
      p.add(1.0, 3, 0).add(2.0, 0, 2);
      return PolyField({p});
    }
    case CaseId::Case3: {
      Polynomial p;
      p.add(1.0, 3, 2).add(1.0, 0, 4);
      return PolyField({p});
    }
    case CaseId::TensorQuadratic:
      return PolyField({quad, quad});
  }
  throw ConfigError("unknown case");
}

// ============================================================================
// Moment-based operator
// ============================================================================

std::vector<double> nonlocal_apply(const PolyField& field, const ScalarKernel& kernel, const Vec2& x) {
  const MomentTable moments(kernel);
  std::vector<double> out(field.components(), 0.0);
  for (std::size_t a = 0; a < field.components(); ++a) {
    double sum = 0.0;
    // Only even-even Taylor terms survive against the symmetric kernel.
    for (int p = 0; p <= kMaxPolyDegree; p += 2)
      for (int q = 0; p + q <= kMaxPolyDegree; q += 2) {
        if (p + q == 0) continue;
        const double d = field[a].derivative(p, q, x);
        if (d != 0.0) sum += d / (factorial(p) * factorial(q)) * moments.scalar(p, q);
      }
    out[a] = -sum;
  }
  return out;
}

std::vector<double> nonlocal_apply(const PolyField& field, const TensorKernel& kernel, const Vec2& x) {
  if (field.components() != 2) throw ConfigError("the tensor kernel needs a two-component field");
  const MomentTable moments(kernel);
  std::vector<double> out(2, 0.0);
  for (int a = 1; a <= 2; ++a) {
    double sum = 0.0;
    for (int b = 1; b <= 2; ++b)
      for (int p = 0; p <= kMaxPolyDegree; ++p)
        for (int q = 0; p + q <= kMaxPolyDegree; ++q) {
          if (p + q == 0) continue;
          const double m = moments.tensor(a, b, p, q);
          if (m == 0.0) continue;
          const double d = field[static_cast<std::size_t>(b - 1)].derivative(p, q, x);
          if (d != 0.0) sum += d / (factorial(p) * factorial(q)) * m;
        }
    out[static_cast<std::size_t>(a - 1)] = -sum;
  }
  return out;
}

// ============================================================================
// Quadrature oracle
// ============================================================================

namespace {

using Rule = boost::math::quadrature::gauss<double, 10>;

// Integrand(r, n, out) accumulates the polar integrand (area element
// included) for the unit direction n at radius r.
template <typename Integrand>
std::vector<double> polar_integral(std::size_t comps, double delta, int radial_panels, int angles,
                                   const Integrand& integrand) {
  std::vector<double> total(comps, 0.0);
  std::vector<double> sample(comps);
  const auto& abscissa = Rule::abscissa();
  const auto& weights = Rule::weights();
  const double panel = delta / radial_panels;
  const double dtheta = 2.0 * std::numbers::pi / angles;
  for (int k = 0; k < radial_panels; ++k) {
    const double mid = (k + 0.5) * panel;
    const double half = 0.5 * panel;
    for (std::size_t g = 0; g < abscissa.size(); ++g) {
      for (const double sign : {-1.0, 1.0}) {
        if (abscissa[g] == 0.0 && sign > 0.0) continue;
        const double r = mid + sign * half * abscissa[g];
        const double wr = weights[g] * half;
        for (int t = 0; t < angles; ++t) {
          const double theta = t * dtheta;
          const Vec2 n{std::cos(theta), std::sin(theta)};
          std::fill(sample.begin(), sample.end(), 0.0);
          integrand(r, n, sample);
          for (std::size_t a = 0; a < comps; ++a) total[a] += wr * dtheta * sample[a];
        }
      }
    }
  }
  return total;
}

template <typename Integrand>
std::vector<double> refine_until(std::size_t comps, double delta, double tol, const Integrand& integrand) {
  if (!(tol > 0.0)) throw ConfigError("oracle tolerance must be positive");
  int panels = 1;
  int angles = 16;
  std::vector<double> prev = polar_integral(comps, delta, panels, angles, integrand);
  constexpr int kMaxRefinements = 8;
  for (int level = 0; level < kMaxRefinements; ++level) {
    panels *= 2;
    angles *= 2;
    std::vector<double> next = polar_integral(comps, delta, panels, angles, integrand);
    double diff = 0.0;
    for (std::size_t a = 0; a < comps; ++a) diff = std::max(diff, std::abs(next[a] - prev[a]));
    if (diff < tol) return next;
    prev = std::move(next);
  }
  throw OracleError("polar quadrature did not reach tolerance " + std::to_string(tol));
}

}  // namespace

std::vector<double> nonlocal_apply_oracle(const PolyField& field, const ScalarKernel& kernel, const Vec2& x,
                                          double tol) {
  const std::size_t comps = field.components();
  const std::vector<double> ux = field(x);
  const double delta = kernel.delta();
  auto integrand = [&](double r, const Vec2& n, std::vector<double>& out) {
    const Vec2 y = x + n * r;
    // minus sign of the operator folded in here; r is the area element
    const double w = -kernel.c1() * (1.0 - r / delta) * r;
    for (std::size_t a = 0; a < comps; ++a) out[a] = w * (field[a](y) - ux[a]);
  };
  return refine_until(comps, delta, tol, integrand);
}

std::vector<double> nonlocal_apply_oracle(const PolyField& field, const TensorKernel& kernel, const Vec2& x,
                                          double tol) {
  if (field.components() != 2) throw ConfigError("the tensor kernel needs a two-component field");
  const std::vector<double> ux = field(x);
  const double c2 = kernel.c2();
  auto integrand = [&](double r, const Vec2& n, std::vector<double>& out) {
    const Vec2 y = x + n * r;
    // c2 (xi ⊗ xi)/|xi|^3 times the area element r reduces to c2 n ⊗ n.
    const Vec2 du{field[0](y) - ux[0], field[1](y) - ux[1]};
    const double proj = -c2 * dot(n, du);
    out[0] = proj * n.x;
    out[1] = proj * n.y;
  };
  return refine_until(2, kernel.delta(), tol, integrand);
}

// ============================================================================
// Forcing and error
// ============================================================================

namespace {

template <typename Kernel>
std::vector<double> forcing_impl(const PolyField& field, const Kernel& kernel, const Grid& grid) {
  std::vector<double> b;
  b.reserve(grid.interior_count() * field.components());
  for (const std::size_t node : grid.interior()) {
    const auto v = nonlocal_apply(field, kernel, grid.node(node).position);
    b.insert(b.end(), v.begin(), v.end());
  }
  return b;
}

}  // namespace

std::vector<double> interior_forcing(const PolyField& field, const ScalarKernel& kernel, const Grid& grid) {
  return forcing_impl(field, kernel, grid);
}

std::vector<double> interior_forcing(const PolyField& field, const TensorKernel& kernel, const Grid& grid) {
  return forcing_impl(field, kernel, grid);
}

double linf_error(const Solution& solution, const PolyField& field, const Grid& grid) {
  const std::size_t comps = field.components();
  if (solution.components != comps || solution.values.size() != grid.interior_count() * comps)
    throw ConfigError("solution does not match the field and grid");
  double err = 0.0;
  const auto interior = grid.interior();
  for (std::size_t k = 0; k < interior.size(); ++k) {
    const Vec2 x = grid.node(interior[k]).position;
    for (std::size_t a = 0; a < comps; ++a)
      err = std::max(err, std::abs(solution.values[k * comps + a] - field[a](x)));
  }
  return err;
}

}  // namespace ipaac
