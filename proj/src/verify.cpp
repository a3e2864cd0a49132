#include "polyloc/verify.hpp"

#include "polyloc/filter.hpp"
#include "polyloc/hermite.hpp"
#include "polyloc/localize.hpp"
#include "polyloc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

namespace polyloc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* label, double value) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s=%.3e", label, value);
  return buf;
}

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(dim);
  double s = 0.0;
  for (double& x : v) {
    x = g(rng);
    s += x * x;
  }
  for (double& x : v) x /= std::sqrt(s);
  return v;
}

const std::vector<Family>& jacobi_families() {
  static const std::vector<Family> f{Family::jacobi(-0.5, -0.5), Family::jacobi(0.0, 0.0),
                                     Family::jacobi(0.5, -0.5), Family::jacobi(-0.5, 1.5)};
  return f;
}

CheckResult chebyshev_eigenvalues(std::size_t nmax) {
  double err = 0.0;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const double expected = std::cos(kPi / (2.0 * n + 2.0));
    err = std::max(err, std::abs(optimal_full(Family::chebyshev_first(), n).lambda - expected));
  }
  return {"chebyshev-eigenvalues", err <= 1e-12, fmt("max_err", err)};
}

CheckResult band_eigenvalues(std::size_t nmax) {
  double err = 0.0;
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      // m = 0 is the full problem (first kind), m >= 1 gives second-kind zeros.
      const double expected = m == 0 ? std::cos(kPi / (2.0 * n + 2.0))
                                     : std::cos(kPi / (static_cast<double>(n - m) + 2.0));
      err = std::max(err, std::abs(optimal_band(Family::chebyshev_first(), m, n).lambda - expected));
    }
  }
  return {"band-eigenvalues", err <= 1e-12, fmt("max_err", err)};
}

CheckResult orthonormality(std::size_t nmax) {
  std::vector<Family> families = jacobi_families();
  families.push_back(Family::laguerre(-0.5));
  families.push_back(Family::laguerre(0.5));
  families.push_back(Family::hermite());
  double err = 0.0;
  for (const Family& f : families) {
    const QuadratureRule rule = gauss_quadrature(f, nmax + 1);
    std::vector<std::vector<double>> values;
    for (double x : rule.nodes) values.push_back(eval_orthonormal(f, nmax, x));
    for (std::size_t i = 0; i <= nmax; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
          g += rule.weights[q] * values[q][i] * values[q][j];
        }
        err = std::max(err, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  return {"orthonormality", err < 1e-10, fmt("max_err", err)};
}

CheckResult epsilon_vs_quadrature(std::size_t trials) {
  std::mt19937_64 rng(20100805);
  double err = 0.0;
  for (const Family& f : jacobi_families()) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = t % 9;
      const std::vector<double> c = random_unit(rng, n + 1);
      const double quad = epsilon_quadratic(f, Band{0, n}, c, ProblemKind::Full);
      const LocalizedPolynomial p = make_polynomial(f, Band{0, n}, c, ProblemKind::Full);
      const QuadratureRule rule = gauss_quadrature(f, n + 2);
      const double integral = rule.integrate([&p](double x) {
        const double v = eval_sum(p, x);
        return x * v * v;
      });
      err = std::max(err, std::abs(quad - integral));
    }
  }
  return {"epsilon-quadrature", err < 1e-10, fmt("max_err", err)};
}

CheckResult maximality(std::size_t trials) {
  std::mt19937_64 rng(7);
  double worst = -1.0;
  for (const Family& f : jacobi_families()) {
    for (std::size_t n = 0; n <= 8; ++n) {
      for (std::size_t m = 0; m <= std::min<std::size_t>(n, 4); ++m) {
        const LocalizedPolynomial opt = optimal_band(f, m, n);
        for (std::size_t t = 0; t < trials; ++t) {
          const std::vector<double> c = random_unit(rng, n - m + 1);
          const double e = epsilon_quadratic(f, Band{m, n}, c, ProblemKind::Band);
          worst = std::max(worst, e - opt.lambda);
        }
      }
    }
  }
  return {"maximality", worst <= 1e-12, fmt("max_excess", worst)};
}

CheckResult explicit_vs_sum(std::size_t nmax) {
  double err = 0.0;
  const std::vector<double> e{0.5, -0.25};
  for (const Family& f : jacobi_families()) {
    for (std::size_t n = 2; n <= nmax; ++n) {
      const std::vector<LocalizedPolynomial> polys{optimal_full(f, n), optimal_band(f, 1, n),
                                                   optimal_reproducing(f, 2, n, e)};
      for (const LocalizedPolynomial& p : polys) {
        double sup = 0.0;
        double diff = 0.0;
        for (int i = 0; i <= 200; ++i) {
          const double x = -1.0 + 2.0 * i / 200.0;
          const double s = eval_sum(p, x);
          sup = std::max(sup, std::abs(s));
          diff = std::max(diff, std::abs(eval_explicit(p, x) - s));
        }
        err = std::max(err, diff / sup);
      }
    }
  }
  return {"explicit-vs-sum", err <= 1e-9, fmt("max_rel_err", err)};
}

CheckResult uncertainty(std::size_t nmax) {
  bool ok = true;
  double margin = std::numeric_limits<double>::infinity();
  for (const Family& f : jacobi_families()) {
    for (std::size_t n = 1; n <= nmax; ++n) {
      const UncertaintyReport r = uncertainty_check(optimal_full(f, n));
      ok = ok && r.holds;
      margin = std::min(margin, r.product - r.bound);
    }
  }
  return {"uncertainty", ok, fmt("min_margin", margin)};
}

CheckResult hermite(std::size_t nmax) {
  const double expected = 1.5 - std::sqrt(1.5);
  const double err = std::abs(optimal_hermite_full(2).lambda - expected);
  bool parity = true;
  for (std::size_t n = 0; n <= nmax; n += 2) {
    const HermiteOptimal h = optimal_hermite_full(n);
    for (std::size_t i = 1; i < h.coeffs.size(); i += 2) parity = parity && h.coeffs[i] == 0.0;
  }
  return {"hermite", err <= 1e-12 && parity, fmt("n2_err", err)};
}

CheckResult hann(std::size_t nmax) {
  double err = 0.0;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const std::vector<double> c = filter_fourier_coeffs(make_filter(FilterKind::Hann, n));
    for (std::size_t j = 0; j <= n; ++j) {
      const double r = std::cos(kPi * j / (2.0 * n + 2.0));
      err = std::max(err, std::abs(c[j] / c[0] - r * r));
    }
  }
  return {"hann-coefficients", err <= 1e-12, fmt("max_err", err)};
}

CheckResult convolution(std::size_t trials) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const TrigFilter h = make_filter(FilterKind::Rogosinski, 6);
  constexpr std::size_t kSamples = 64;
  constexpr std::size_t kQuad = 1024;
  double err = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> a(11), b(11);
    for (std::size_t k = 0; k <= 10; ++k) {
      a[k] = u(rng);
      b[k] = k == 0 ? 0.0 : u(rng);
    }
    auto f = [&](double x) {
      double s = 0.0;
      for (std::size_t k = 0; k <= 10; ++k) s += a[k] * std::cos(k * x) + b[k] * std::sin(k * x);
      return s;
    };
    Signal sig;
    for (std::size_t j = 0; j < kSamples; ++j) sig.samples.push_back(f(Signal::grid_point(j, kSamples)));
    const Signal out = apply_filter(sig, h);
    for (std::size_t j = 0; j < kSamples; ++j) {
      const double tj = sig.t(j);
      double direct = 0.0;
      for (std::size_t i = 0; i < kQuad; ++i) {
        const double s = 2.0 * kPi * i / kQuad - kPi;
        direct += f(s) * h(tj - s);
      }
      direct /= kQuad;
      err = std::max(err, std::abs(out.samples[j] - direct));
    }
  }
  return {"convolution", err <= 1e-10, fmt("max_err", err)};
}

} // namespace

std::vector<CheckResult> run_verification(VerifySuite suite) {
  const bool full = suite == VerifySuite::Full;
  std::vector<CheckResult> out;
  out.push_back(chebyshev_eigenvalues(full ? 50 : 20));
  out.push_back(band_eigenvalues(full ? 30 : 10));
  out.push_back(orthonormality(full ? 30 : 12));
  out.push_back(epsilon_vs_quadrature(full ? 100 : 20));
  out.push_back(maximality(full ? 200 : 20));
  out.push_back(explicit_vs_sum(full ? 20 : 8));
  out.push_back(uncertainty(full ? 40 : 10));
  out.push_back(hermite(full ? 20 : 8));
  out.push_back(hann(full ? 30 : 10));
  out.push_back(convolution(full ? 50 : 5));
  return out;
}

} // namespace polyloc
