#include "polyloc/hermite.hpp"

#include "polyloc/error.hpp"

#include <cmath>
#include <string>

namespace polyloc {

namespace {

const Family& even_block_family() {
  static const Family f = Family::laguerre(-0.5);
  return f;
}

const Family& odd_block_family() {
  static const Family f = Family::laguerre(0.5);
  return f;
}

} // namespace

void validate_hermite_band(Band band) {
  if (band.m % 2 != 0 || band.n % 2 != 0) {
    throw ParityError("Hermite band limits must be even (got m=" + std::to_string(band.m) +
                      ", n=" + std::to_string(band.n) + ")");
  }
  validate_band(band);
}

double var_s_hermite(Band band, std::span<const double> coeffs) {
  validate_hermite_band(band);
  if (coeffs.size() != band.dimension()) {
    throw ParameterError("expected " + std::to_string(band.dimension()) + " Hermite coefficients");
  }
  // Even block has (n-m)/2 + 1 entries, odd block (n-m)/2.
  const std::size_t half_m = band.m / 2;
  const std::size_t half_n = band.n / 2;
  std::vector<double> even;
  std::vector<double> odd;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    (i % 2 == 0 ? even : odd).push_back(coeffs[i]);
  }
  double value = jacobi_matrix(even_block_family(), half_m, half_n).quadratic_form(even);
  if (!odd.empty()) {
    value += jacobi_matrix(odd_block_family(), half_m, half_n - 1).quadratic_form(odd);
  }
  return value;
}

HermiteBlockMinima hermite_block_minima(Band band) {
  validate_hermite_band(band);
  const std::size_t half_m = band.m / 2;
  const std::size_t half_n = band.n / 2;
  HermiteBlockMinima r{};
  const TridiagMatrix even = jacobi_matrix(even_block_family(), half_m, half_n);
  r.even = eigenvalue_at(even, 0);
  if (half_n > half_m) {
    r.odd = eigenvalue_at(jacobi_matrix(odd_block_family(), half_m, half_n - 1), 0);
  }
  return r;
}

HermiteOptimal optimal_hermite_full(std::size_t n) { return optimal_hermite_band(0, n); }

HermiteOptimal optimal_hermite_band(std::size_t m, std::size_t n) {
  const Band band{m, n};
  validate_hermite_band(band);
  const TridiagMatrix even = jacobi_matrix(even_block_family(), m / 2, n / 2);
  EigenPair pair = extreme_eigenpair(even, Extreme::Smallest);

  // The minimizer lives in the even block only if that block has the smaller
  // bottom eigenvalue; check it rather than assume it.
  const HermiteBlockMinima minima = hermite_block_minima(band);
  if (minima.odd && !(pair.value < *minima.odd)) {
    throw NumericalError("odd Laguerre(1/2) block has a smaller eigenvalue than the even block");
  }

  HermiteOptimal h;
  h.band = band;
  h.lambda = pair.value;
  h.coeffs.assign(band.dimension(), 0.0);
  for (std::size_t i = 0; i < pair.vector.size(); ++i) h.coeffs[2 * i] = pair.vector[i];
  return h;
}

double eval_sum_hermite(const HermiteOptimal& h, double x) {
  const std::vector<double> basis = eval_orthonormal(Family::hermite(), h.band.n, x);
  double s = 0.0;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) s += h.coeffs[i] * basis[h.band.m + i];
  return s;
}

double eval_explicit_hermite(const HermiteOptimal& h, double x) {
  const double u = x * x;
  const double du = u - h.lambda;
  if (std::abs(du) < kPoleGuard * std::max(1.0, std::abs(h.lambda))) {
    return eval_sum_hermite(h, x);
  }
  const Family& lag = even_block_family();
  const std::size_t half_m = h.band.m / 2;
  const std::size_t half_n = h.band.n / 2;
  const std::size_t dim = half_n - half_m + 1;
  const std::vector<double> hx = eval_orthonormal(Family::hermite(), h.band.n + 2, x);
  const std::vector<double> q = associated_sequence(lag, dim + 1, half_m, h.lambda);

  std::vector<double> even;
  for (std::size_t i = 0; i < h.coeffs.size(); i += 2) even.push_back(h.coeffs[i]);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    num += even[i] * q[i];
    den += q[i] * q[i];
  }
  const double kappa = num / den;

  // Laguerre polynomials in x^2 are the even Hermite polynomials: p_k(x^2) = h_{2k}(x).
  const double below = h.band.m == 0 ? 0.0 : lag.b(half_m) * hx[h.band.m - 2];
  const double top = lag.b(half_n + 1) * (hx[h.band.n + 2] * q[dim - 1] - q[dim] * hx[h.band.n]);
  return kappa * (top + below) / du;
}

} // namespace polyloc
