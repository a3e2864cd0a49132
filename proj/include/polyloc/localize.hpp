#ifndef POLYLOC_LOCALIZE_HPP
#define POLYLOC_LOCALIZE_HPP

#include "polyloc/family.hpp"
#include "polyloc/tridiag.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace polyloc {

/// Degree band [m, n] of a polynomial space.
struct Band {
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t dimension() const noexcept { return n - m + 1; }
  friend bool operator==(const Band&, const Band&) = default;
};

/// Throws BandError unless m <= n.
void validate_band(Band band);

/**
 * Which space a polynomial lives in:
 *   Full         span{p_0, ..., p_n}
 *   Band         span{p_m, ..., p_n}
 *   Reproducing  span{R, p_{m+1}, ..., p_n} with R = p_m + sum_{l<m} e_l p_l
 */
enum class ProblemKind { Full, Band, Reproducing };

std::string to_string(ProblemKind kind);

/**
 * A polynomial in one of the three spaces, stored by its expansion
 * coefficients c_m..c_n. For Reproducing the first coefficient multiplies R
 * and `repro` holds (e_0, ..., e_{m-1}).
 *
 * The optimizers below return the maximizer of the mean value
 * eps(P) = int x |P(x)|^2 w(x) dx on the unit sphere of the space, with
 * `lambda` the attained maximum. Values built by hand (random trial
 * polynomials, for instance) may leave `lambda` at 0.
 */
struct LocalizedPolynomial {
  Family family = Family::legendre();
  Band band;
  std::vector<double> coeffs;
  double lambda = 0.0;
  ProblemKind kind = ProblemKind::Full;
  std::vector<double> repro;

  /// c_0..c_n in the orthonormal basis (R expanded, zeros below the band).
  std::vector<double> expanded_coeffs() const;

  /// Squared norm in L^2(w).
  double norm_squared() const;
};

/// Builds a LocalizedPolynomial from raw coefficients, validating sizes.
LocalizedPolynomial make_polynomial(const Family& family, Band band, std::vector<double> coeffs,
                                    ProblemKind kind = ProblemKind::Band,
                                    std::vector<double> repro = {});

/**
 * eps(P) as a quadratic form in the coefficients: c^T J_n^m c for Full and
 * Band, plus (eps(R) - a_m) c_m^2 for Reproducing, where eps(R) is itself the
 * quadratic form over (e_0, ..., e_{m-1}, 1).
 */
double epsilon_quadratic(const Family& family, Band band, std::span<const double> coeffs,
                         ProblemKind kind, std::span<const double> repro = {});
double epsilon_quadratic(const LocalizedPolynomial& p);

/// eps(R) and ||R||^2 for R = p_m + sum e_l p_l.
struct ReproducingShift {
  double gamma; // eps(R) - a_m
  double delta; // ||R||_w^2
};
ReproducingShift reproducing_shift(const Family& family, std::size_t m,
                                   std::span<const double> repro);

LocalizedPolynomial optimal_full(const Family& family, std::size_t n);
LocalizedPolynomial optimal_band(const Family& family, std::size_t m, std::size_t n);
LocalizedPolynomial optimal_reproducing(const Family& family, std::size_t m, std::size_t n,
                                        std::span<const double> repro);

/// Evaluates the series sum_l c_l p_l(x) (with R expanded).
double eval_sum(const LocalizedPolynomial& p, double x);

/**
 * Evaluates an optimizer through its Christoffel-Darboux closed form, a single
 * rational expression in p_{m-1}, p_m, p_n, p_{n+1} at x. Falls back to
 * eval_sum within 1e-6 max(1, |lambda|) of the removable pole x = lambda.
 */
double eval_explicit(const LocalizedPolynomial& p, double x);

/// Smallest relative distance to lambda below which eval_explicit uses the series.
inline constexpr double kPoleGuard = 1e-6;

// --- Jacobi uncertainty quantities ---------------------------------------

/// Sole zero of p_1 for Jacobi(alpha, beta): (beta - alpha) / (alpha + beta + 2).
double jacobi_lambda1(double alpha, double beta);

/// Position variance (1 - eps^2) / ((alpha-beta)/(alpha+beta+2) + eps)^2.
/// Throws DomainError when eps equals jacobi_lambda1(alpha, beta).
double var_s_jacobi(double eps, double alpha, double beta);

/// Frequency variance sum_l l (l + alpha + beta + 1) c_l^2 over c_0..c_n.
double var_f_jacobi(std::span<const double> coeffs, double alpha, double beta);

struct UncertaintyReport {
  double epsilon;
  double var_s;
  double var_f;
  double product;
  double bound;
  bool holds;
};

/// Requires a Jacobi family; propagates DomainError from var_s_jacobi.
UncertaintyReport uncertainty_check(const LocalizedPolynomial& p);

/// True iff eps(P) > lambda_1 (the set on which var_S and eps order equally).
bool admissible_check(const LocalizedPolynomial& p);

} // namespace polyloc

#endif // POLYLOC_LOCALIZE_HPP
