#include "polyloc/error.hpp"
#include "polyloc/localize.hpp"

#include <cmath>
#include <limits>

namespace polyloc {

double jacobi_lambda1(double alpha, double beta) { return (beta - alpha) / (alpha + beta + 2.0); }

double var_s_jacobi(double eps, double alpha, double beta) {
  const double lambda1 = jacobi_lambda1(alpha, beta);
  const double denom = eps - lambda1;
  if (std::abs(denom) <= 4.0 * std::numeric_limits<double>::epsilon() *
                             std::max(1.0, std::abs(eps))) {
    throw DomainError("position variance undefined: (alpha-beta) + (alpha+beta+2) eps = 0");
  }
  return (1.0 - eps * eps) / (denom * denom);
}

double var_f_jacobi(std::span<const double> coeffs, double alpha, double beta) {
  double s = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    const double k = static_cast<double>(l);
    s += k * (k + alpha + beta + 1.0) * coeffs[l] * coeffs[l];
  }
  return s;
}

UncertaintyReport uncertainty_check(const LocalizedPolynomial& p) {
  const JacobiParams& j = p.family.jacobi_params();
  UncertaintyReport r{};
  r.epsilon = epsilon_quadratic(p);
  r.var_s = var_s_jacobi(r.epsilon, j.alpha, j.beta);
  r.var_f = var_f_jacobi(p.expanded_coeffs(), j.alpha, j.beta);
  r.product = r.var_s * r.var_f;
  const double s = j.alpha + j.beta + 2.0;
  r.bound = s * s / 4.0;
  r.holds = r.product > r.bound;
  return r;
}

bool admissible_check(const LocalizedPolynomial& p) {
  const JacobiParams& j = p.family.jacobi_params();
  return epsilon_quadratic(p) > jacobi_lambda1(j.alpha, j.beta);
}

} // namespace polyloc
