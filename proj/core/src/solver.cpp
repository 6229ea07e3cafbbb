#include <cmath>
#include <sstream>
#include <vector>

#include "ipaac/assembly.hpp"
#include "ipaac/errors.hpp"

namespace ipaac {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double true_residual(const DiscreteSystem& system, std::span<const double> x, std::vector<double>& r) {
  system.multiply(x, r);
  const auto b = system.rhs();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  return std::sqrt(dot(r, r));
}

}  // namespace

Solution solve(const DiscreteSystem& system, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw ConfigError("solver tolerance must be positive");
  const std::size_t n = system.size();
  const auto b = system.rhs();

  Solution sol;
  sol.components = system.components();
  sol.values.assign(n, 0.0);
  const double bnorm = std::sqrt(dot(b, b));
  if (bnorm == 0.0) return sol;

  const std::vector<double> diag = system.diagonal();
  for (const double d : diag)
    if (!(d > 0.0)) throw StructuralError("non-positive diagonal entry in the stiffness matrix");

  std::vector<double>& x = sol.values;
  std::vector<double> r(b.begin(), b.end());
  std::vector<double> z(n), p(n), ap(n);
  auto precondition = [&] {
    for (std::size_t i = 0; i < n; ++i) z[i] = r[i] / diag[i];
  };
  precondition();
  p = z;
  double rz = dot(r, z);
  double rel = 1.0;

  std::size_t it = 0;
  while (it < max_iter) {
    ++it;
    system.multiply(p, ap);
    const double curvature = dot(p, ap);
    if (!(curvature > 0.0)) {
      std::ostringstream msg;
      msg << "conjugate gradient met non-positive curvature " << curvature << " at iteration " << it;
      throw StructuralError(msg.str());
    }
    const double alpha = rz / curvature;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    rel = std::sqrt(dot(r, r)) / bnorm;
    if (rel <= tol) {
      // The recurrence can drift from b - Kx; confirm before accepting and
      // restart from the true residual otherwise.
      rel = true_residual(system, x, r) / bnorm;
      if (rel <= tol) {
        sol.residual = rel;
        sol.iterations = it;
        return sol;
      }
      precondition();
      p = z;
      rz = dot(r, z);
      continue;
    }
    precondition();
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }

  rel = true_residual(system, x, r) / bnorm;
  std::ostringstream msg;
  msg << "conjugate gradient did not converge in " << max_iter << " iterations (relative residual " << rel
      << ", tolerance " << tol << ")";
  throw SolverError(msg.str(), rel, it);
}

}  // namespace ipaac
