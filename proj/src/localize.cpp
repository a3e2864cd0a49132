#include "polyloc/localize.hpp"

#include "polyloc/error.hpp"

#include <cmath>
#include <string>

namespace polyloc {

namespace {

void check_coeff_count(Band band, std::size_t count) {
  if (count != band.dimension()) {
    throw ParameterError("expected " + std::to_string(band.dimension()) +
                         " coefficients for band [" + std::to_string(band.m) + ", " +
                         std::to_string(band.n) + "], got " + std::to_string(count));
  }
}

void check_repro(Band band, std::span<const double> repro) {
  if (repro.size() != band.m) {
    throw ParameterError("reproducing polynomial needs exactly m = " + std::to_string(band.m) +
                         " lower coefficients e_0..e_{m-1}, got " + std::to_string(repro.size()));
  }
}

// Least-squares scale kappa with coeffs ~ kappa * q.
double fit_scale(std::span<const double> coeffs, std::span<const double> q) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    num += coeffs[i] * q[i];
    den += q[i] * q[i];
  }
  return num / den;
}

} // namespace

void validate_band(Band band) {
  if (band.m > band.n) {
    throw BandError("band requires m <= n (got m=" + std::to_string(band.m) +
                    ", n=" + std::to_string(band.n) + ")");
  }
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
  case ProblemKind::Full:
    return "full";
  case ProblemKind::Band:
    return "band";
  case ProblemKind::Reproducing:
    return "reproducing";
  }
  return "unknown";
}

std::vector<double> LocalizedPolynomial::expanded_coeffs() const {
  std::vector<double> full(band.n + 1, 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) full[band.m + i] = coeffs[i];
  if (kind == ProblemKind::Reproducing) {
    for (std::size_t l = 0; l < repro.size(); ++l) full[l] = coeffs[0] * repro[l];
  }
  return full;
}

double LocalizedPolynomial::norm_squared() const {
  double s = 0.0;
  for (double c : expanded_coeffs()) s += c * c;
  return s;
}

LocalizedPolynomial make_polynomial(const Family& family, Band band, std::vector<double> coeffs,
                                    ProblemKind kind, std::vector<double> repro) {
  validate_band(band);
  check_coeff_count(band, coeffs.size());
  if (kind == ProblemKind::Full && band.m != 0) {
    throw BandError("full-space polynomial must start at degree 0");
  }
  if (kind == ProblemKind::Reproducing) {
    check_repro(band, repro);
  } else if (!repro.empty()) {
    throw ParameterError("lower coefficients only apply to the reproducing space");
  }
  LocalizedPolynomial p;
  p.family = family;
  p.band = band;
  p.coeffs = std::move(coeffs);
  p.kind = kind;
  p.repro = std::move(repro);
  return p;
}

ReproducingShift reproducing_shift(const Family& family, std::size_t m,
                                   std::span<const double> repro) {
  if (repro.size() != m) {
    throw ParameterError("reproducing polynomial needs exactly m lower coefficients");
  }
  std::vector<double> r(repro.begin(), repro.end());
  r.push_back(1.0);
  const double eps_r = epsilon_quadratic(family, Band{0, m}, r, ProblemKind::Full);
  double norm2 = 0.0;
  for (double e : r) norm2 += e * e;
  return {eps_r - family.a(m), norm2};
}

double epsilon_quadratic(const Family& family, Band band, std::span<const double> coeffs,
                         ProblemKind kind, std::span<const double> repro) {
  validate_band(band);
  check_coeff_count(band, coeffs.size());
  const TridiagMatrix j = jacobi_matrix(family, band.m, band.n);
  const double base = j.quadratic_form(coeffs);
  if (kind != ProblemKind::Reproducing) return base;
  check_repro(band, repro);
  const ReproducingShift shift = reproducing_shift(family, band.m, repro);
  return base + shift.gamma * coeffs[0] * coeffs[0];
}

double epsilon_quadratic(const LocalizedPolynomial& p) {
  return epsilon_quadratic(p.family, p.band, p.coeffs, p.kind, p.repro);
}

LocalizedPolynomial optimal_full(const Family& family, std::size_t n) {
  LocalizedPolynomial p = optimal_band(family, 0, n);
  p.kind = ProblemKind::Full;
  return p;
}

LocalizedPolynomial optimal_band(const Family& family, std::size_t m, std::size_t n) {
  const TridiagMatrix j = jacobi_matrix(family, m, n);
  EigenPair pair = extreme_eigenpair(j, Extreme::Largest);
  LocalizedPolynomial p;
  p.family = family;
  p.band = Band{m, n};
  p.coeffs = std::move(pair.vector);
  p.lambda = pair.value;
  p.kind = ProblemKind::Band;
  return p;
}

LocalizedPolynomial optimal_reproducing(const Family& family, std::size_t m, std::size_t n,
                                        std::span<const double> repro) {
  validate_band(Band{m, n});
  check_repro(Band{m, n}, repro);
  const ReproducingShift shift = reproducing_shift(family, m, repro);
  const TridiagMatrix j = jacobi_matrix(family, m, n);
  EigenPair pair = extreme_eigen_generalized(j, shift.gamma, shift.delta, Extreme::Largest);
  LocalizedPolynomial p;
  p.family = family;
  p.band = Band{m, n};
  p.coeffs = std::move(pair.vector);
  p.lambda = pair.value;
  p.kind = ProblemKind::Reproducing;
  p.repro.assign(repro.begin(), repro.end());
  return p;
}

double eval_sum(const LocalizedPolynomial& p, double x) {
  const std::vector<double> c = p.expanded_coeffs();
  const std::vector<double> basis = eval_orthonormal(p.family, p.band.n, x);
  double s = 0.0;
  for (std::size_t l = 0; l < c.size(); ++l) s += c[l] * basis[l];
  return s;
}

double eval_explicit(const LocalizedPolynomial& p, double x) {
  const double lambda = p.lambda;
  const double dx = x - lambda;
  if (std::abs(dx) < kPoleGuard * std::max(1.0, std::abs(lambda))) {
    return eval_sum(p, x);
  }
  const std::size_t m = p.band.m;
  const std::size_t n = p.band.n;
  const std::size_t dim = p.band.dimension();
  const Family& f = p.family;
  const std::vector<double> px = eval_orthonormal(f, n + 1, x);
  const double p_below = m == 0 ? 0.0 : px[m - 1];

  std::vector<double> q;
  double extra = 0.0; // contribution of the modified first row
  double lower = 0.0; // sum_{l<m} e_l p_l(x)
  if (p.kind == ProblemKind::Reproducing) {
    const ReproducingShift s = reproducing_shift(f, m, p.repro);
    q = corecursive_sequence(f, dim + 1, m, s.gamma, s.delta, lambda);
    extra = px[m] * ((s.delta - 1.0) * lambda - s.gamma);
    for (std::size_t l = 0; l < m; ++l) lower += p.repro[l] * px[l];
  } else {
    q = associated_sequence(f, dim + 1, m, lambda);
  }
  const double kappa = fit_scale(p.coeffs, q);

  // q[dim] vanishes at the exact eigenvalue; keeping the term makes the
  // rational form insensitive to the last bits of lambda.
  const double b_top = f.b(n + 1);
  const double numerator =
      b_top * (px[n + 1] * q[dim - 1] - q[dim] * px[n]) + extra + f.b(m) * p_below;
  return kappa * (lower + numerator / dx);
}

} // namespace polyloc
