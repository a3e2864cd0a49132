#ifndef POLYLOC_TRIDIAG_HPP
#define POLYLOC_TRIDIAG_HPP

#include "polyloc/family.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace polyloc {

/// Default relative bisection tolerance for eigenvalues.
inline constexpr double kEigenTol = 1e-13;

/**
 * Symmetric tridiagonal matrix with strictly positive off-diagonal.
 *
 * When built by jacobi_matrix() the diagonal holds (a_m, ..., a_n), the
 * off-diagonal (b_{m+1}, ..., b_n), and origin() is m.
 */
class TridiagMatrix {
public:
  TridiagMatrix(std::vector<double> diag, std::vector<double> offdiag, std::size_t origin = 0);

  std::size_t size() const noexcept { return diag_.size(); }
  std::size_t origin() const noexcept { return origin_; }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }

  std::vector<double> multiply(std::span<const double> v) const;
  double quadratic_form(std::span<const double> v) const;

  /// Gershgorin interval containing the whole spectrum.
  std::pair<double, double> gershgorin() const;

  /// Infinity norm (max absolute row sum), an upper bound on the spectral norm.
  double norm() const;

private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
  std::size_t origin_;
};

enum class Extreme { Largest, Smallest };

struct EigenPair {
  double value;
  std::vector<double> vector;
};

/// J_n^m built from the family's recurrence coefficients. Throws BandError if m > n.
TridiagMatrix jacobi_matrix(const Family& family, std::size_t m, std::size_t n);

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const TridiagMatrix& t, double x);

/// k-th smallest eigenvalue (k = 0 is the smallest) by Sturm bisection.
double eigenvalue_at(const TridiagMatrix& t, std::size_t k, double tol = kEigenTol);

/// Eigenvector for a (converged) eigenvalue by inverse iteration; unit norm,
/// first nonzero component positive.
std::vector<double> eigenvector_for(const TridiagMatrix& t, double lambda);

EigenPair extreme_eigenpair(const TridiagMatrix& t, Extreme which, double tol = kEigenTol);

/**
 * Extreme pair of (T + gamma e_1 e_1^T) v = lambda diag(delta, 1, ..., 1) v.
 * The returned vector satisfies v^T diag(delta, 1, ..., 1) v = 1. Throws
 * ParameterError if delta <= 0.
 */
EigenPair extreme_eigen_generalized(const TridiagMatrix& t, double gamma, double delta,
                                    Extreme which, double tol = kEigenTol);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const;
};

/// k-point Gauss rule for the family's weight (Golub-Welsch).
QuadratureRule gauss_quadrature(const Family& family, std::size_t k);

} // namespace polyloc

#endif // POLYLOC_TRIDIAG_HPP
