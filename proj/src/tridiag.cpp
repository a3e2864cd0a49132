#include "polyloc/tridiag.hpp"

#include "polyloc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace polyloc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxBisection = 2000;
constexpr int kMaxInverseIterations = 8;

double norm2(std::span<const double> v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x / scale) * (x / scale);
  return scale * std::sqrt(s);
}

void canonical_sign(std::vector<double>& v) {
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-14 * vmax) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

// Solves (T - shift I) x = rhs in place by Gaussian elimination with partial
// pivoting. Exactly singular pivots are replaced by a tiny multiple of |T|.
void shifted_solve(const TridiagMatrix& t, double shift, std::vector<double>& rhs) {
  const std::size_t n = t.size();
  const auto& a = t.diag();
  const auto& b = t.offdiag();
  const double tiny = kEps * std::max(t.norm(), std::numeric_limits<double>::min());

  // Row i of U holds (u0[i], u1[i], u2[i]) on columns i, i+1, i+2.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
  std::vector<char> swapped(n, 0);
  double cur0 = a[0] - shift;
  double cur1 = n > 1 ? b[0] : 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double sub = b[i];
    const double next0 = a[i + 1] - shift;
    const double next1 = i + 2 < n ? b[i + 1] : 0.0;
    if (std::abs(cur0) >= std::abs(sub)) {
      if (cur0 == 0.0) cur0 = tiny;
      const double l = sub / cur0;
      mult[i] = l;
      u0[i] = cur0;
      u1[i] = cur1;
      u2[i] = 0.0;
      cur0 = next0 - l * cur1;
      cur1 = next1;
    } else {
      const double l = cur0 / sub;
      mult[i] = l;
      swapped[i] = 1;
      u0[i] = sub;
      u1[i] = next0;
      u2[i] = next1;
      cur0 = cur1 - l * next0;
      cur1 = -l * next1;
    }
  }
  if (cur0 == 0.0) cur0 = tiny;
  u0[n - 1] = cur0;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) {
      std::swap(rhs[i], rhs[i + 1]);
    }
    rhs[i + 1] -= mult[i] * rhs[i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = rhs[ii];
    if (ii + 1 < n) s -= u1[ii] * rhs[ii + 1];
    if (ii + 2 < n) s -= u2[ii] * rhs[ii + 2];
    rhs[ii] = s / u0[ii];
  }
}

double residual_norm(const TridiagMatrix& t, double lambda, std::span<const double> v) {
  std::vector<double> r = t.multiply(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= lambda * v[i];
  return norm2(r);
}

} // namespace

TridiagMatrix::TridiagMatrix(std::vector<double> diag, std::vector<double> offdiag,
                             std::size_t origin)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)), origin_(origin) {
  if (diag_.empty()) {
    throw ParameterError("tridiagonal matrix must have at least one row");
  }
  if (offdiag_.size() + 1 != diag_.size()) {
    throw ParameterError("off-diagonal length must be diagonal length - 1");
  }
  for (double b : offdiag_) {
    if (!(b > 0.0)) {
      throw ParameterError("off-diagonal entries must be strictly positive");
    }
  }
}

std::vector<double> TridiagMatrix::multiply(std::span<const double> v) const {
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag_[i] * v[i];
    if (i > 0) s += offdiag_[i - 1] * v[i - 1];
    if (i + 1 < n) s += offdiag_[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

double TridiagMatrix::quadratic_form(std::span<const double> v) const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    s += diag_[i] * v[i] * v[i];
    if (i + 1 < size()) s += 2.0 * offdiag_[i] * v[i] * v[i + 1];
  }
  return s;
}

std::pair<double, double> TridiagMatrix::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < size(); ++i) {
    double r = 0.0;
    if (i > 0) r += offdiag_[i - 1];
    if (i + 1 < size()) r += offdiag_[i];
    lo = std::min(lo, diag_[i] - r);
    hi = std::max(hi, diag_[i] + r);
  }
  return {lo, hi};
}

double TridiagMatrix::norm() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    double r = std::abs(diag_[i]);
    if (i > 0) r += offdiag_[i - 1];
    if (i + 1 < size()) r += offdiag_[i];
    m = std::max(m, r);
  }
  return m;
}

TridiagMatrix jacobi_matrix(const Family& family, std::size_t m, std::size_t n) {
  if (m > n) {
    throw BandError("band requires m <= n (got m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ")");
  }
  std::vector<double> diag;
  std::vector<double> off;
  diag.reserve(n - m + 1);
  off.reserve(n - m);
  for (std::size_t l = m; l <= n; ++l) {
    const RecurrenceCoeffs c = family.coeffs(l);
    diag.push_back(c.a);
    if (l > m) off.push_back(c.b);
  }
  return TridiagMatrix(std::move(diag), std::move(off), m);
}

std::size_t sturm_count(const TridiagMatrix& t, double x) {
  const auto& a = t.diag();
  const auto& b = t.offdiag();
  const double pivmin = kEps * std::max({t.norm(), std::abs(x), std::numeric_limits<double>::min()});
  std::size_t count = 0;
  // An exact zero pivot is nudged positive, i.e. the probe moves just below x,
  // which keeps an eigenvalue sitting exactly at x out of the count.
  double d = a[0] - x;
  if (d == 0.0) d = pivmin;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    d = (a[i] - x) - b[i - 1] * (b[i - 1] / d);
    if (d == 0.0) d = pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

double eigenvalue_at(const TridiagMatrix& t, std::size_t k, double tol) {
  if (k >= t.size()) {
    throw ParameterError("eigenvalue index out of range");
  }
  if (!(tol > 0.0)) {
    throw ParameterError("eigenvalue tolerance must be positive");
  }
  if (t.size() == 1) return t.diag()[0];
  auto [lo, hi] = t.gershgorin();
  const double pad = kEps * std::max(1.0, t.norm()) * 4.0;
  lo -= pad;
  hi += pad;
  // invariant: count(lo) <= k < count(hi)
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max(1.0, std::abs(mid)) || mid <= lo || mid >= hi) {
      return mid;
    }
    if (sturm_count(t, mid) <= k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NumericalError("eigenvalue bisection did not converge");
}

std::vector<double> eigenvector_for(const TridiagMatrix& t, double lambda) {
  const std::size_t n = t.size();
  if (n == 1) return {1.0};
  std::vector<double> v(n);
  constexpr double kGolden = 0.6180339887498949;
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = std::fmod(static_cast<double>(i + 1) * kGolden, 1.0);
    v[i] = 1.0 + 0.5 * frac;
  }
  const double target = 1e-12 * std::max(t.norm(), std::numeric_limits<double>::min());
  double best_res = std::numeric_limits<double>::infinity();
  std::vector<double> best = v;
  for (int it = 0; it < kMaxInverseIterations; ++it) {
    shifted_solve(t, lambda, v);
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv)) {
      throw NumericalError("inverse iteration produced a degenerate vector");
    }
    for (double& x : v) x /= nv;
    const double res = residual_norm(t, lambda, v);
    if (res < best_res) {
      best_res = res;
      best = v;
    }
    if (res <= target && it >= 1) break;
  }
  if (best_res > 1e-10 * std::max(t.norm(), 1e-300)) {
    throw NumericalError("inverse iteration did not reach the residual target");
  }
  canonical_sign(best);
  return best;
}

EigenPair extreme_eigenpair(const TridiagMatrix& t, Extreme which, double tol) {
  const std::size_t k = which == Extreme::Largest ? t.size() - 1 : 0;
  const double lambda = eigenvalue_at(t, k, tol);
  return {lambda, eigenvector_for(t, lambda)};
}

EigenPair extreme_eigen_generalized(const TridiagMatrix& t, double gamma, double delta,
                                    Extreme which, double tol) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ParameterError("generalized eigenproblem requires delta > 0");
  }
  std::vector<double> diag = t.diag();
  std::vector<double> off = t.offdiag();
  const double root = std::sqrt(delta);
  diag[0] = (diag[0] + gamma) / delta;
  if (!off.empty()) off[0] /= root;
  const TridiagMatrix reduced(std::move(diag), std::move(off), t.origin());
  EigenPair pair = extreme_eigenpair(reduced, which, tol);
  pair.vector[0] /= root;
  return pair;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  // Neumaier compensated summation
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double term = weights[i] * f(nodes[i]);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

QuadratureRule gauss_quadrature(const Family& family, std::size_t k) {
  if (k == 0) {
    throw ParameterError("quadrature needs at least one node");
  }
  const TridiagMatrix t = jacobi_matrix(family, 0, k - 1);
  QuadratureRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double x = eigenvalue_at(t, i, 1e-15);
    // Christoffel function instead of mass*v[0]^2: the first eigenvector
    // component underflows in relative accuracy at the outer nodes of
    // unbounded weights.
    double s = 0.0;
    for (double p : eval_orthonormal(family, k - 1, x)) s += p * p;
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / s;
  }
  return rule;
}

} // namespace polyloc
