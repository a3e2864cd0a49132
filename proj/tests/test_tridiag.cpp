#include "doctest.h"
#include "oracles.hpp"

#include "polyloc/error.hpp"
#include "polyloc/tridiag.hpp"

#include <cmath>
#include <random>

using namespace polyloc;

namespace {

std::vector<Family> jacobi_like() {
  return {Family::chebyshev_first(), Family::legendre(), Family::jacobi(0.5, -0.5),
          Family::jacobi(-0.5, 1.5), Family::laguerre(0.5), Family::hermite()};
}

double residual(const TridiagMatrix& t, const EigenPair& e) {
  const auto tv = t.multiply(e.vector);
  double r = 0.0;
  for (std::size_t i = 0; i < tv.size(); ++i) r += std::pow(tv[i] - e.value * e.vector[i], 2);
  return std::sqrt(r);
}

double norm2(const std::vector<double>& v) { return std::sqrt(oracle::dot(v, v)); }

} // namespace

TEST_CASE("TridiagMatrix validation") {
  CHECK_THROWS_AS(TridiagMatrix({1.0, 2.0}, {}), ParameterError);
  CHECK_THROWS_AS(TridiagMatrix({1.0, 2.0}, {0.0}), ParameterError);
  CHECK_THROWS_AS(TridiagMatrix({1.0, 2.0}, {-0.5}), ParameterError);
  CHECK_NOTHROW(TridiagMatrix({1.0}, {}));
  const TridiagMatrix t({1.0, 2.0, 3.0}, {0.5, 0.25});
  const auto y = t.multiply(std::vector<double>{1.0, 1.0, 1.0});
  CHECK(y[0] == doctest::Approx(1.5));
  CHECK(y[1] == doctest::Approx(2.75));
  CHECK(y[2] == doctest::Approx(3.25));
  CHECK(t.quadratic_form(std::vector<double>{1.0, 1.0, 1.0}) == doctest::Approx(7.5));
}

TEST_CASE("jacobi_matrix examples") {
  const TridiagMatrix c = jacobi_matrix(Family::chebyshev_first(), 0, 1);
  REQUIRE(c.size() == 2);
  CHECK(c.diag()[0] == 0.0);
  CHECK(c.diag()[1] == 0.0);
  CHECK(c.offdiag()[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(extreme_eigenpair(c, Extreme::Largest).value == doctest::Approx(std::cos(oracle::kPi / 4)));

  const TridiagMatrix l = jacobi_matrix(Family::legendre(), 0, 1);
  CHECK(l.offdiag()[0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  const Family lag = Family::laguerre(0.5);
  const TridiagMatrix one = jacobi_matrix(lag, 4, 4);
  REQUIRE(one.size() == 1);
  CHECK(one.diag()[0] == lag.a(4));
  CHECK(one.origin() == 4);

  const TridiagMatrix band = jacobi_matrix(lag, 2, 5);
  CHECK(band.origin() == 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(band.diag()[i] == lag.a(2 + i));
  for (std::size_t i = 0; i < 3; ++i) CHECK(band.offdiag()[i] == lag.b(3 + i));

  CHECK_THROWS_AS(jacobi_matrix(lag, 3, 2), BandError);
}

TEST_CASE("sturm_count examples and monotonicity") {
  const TridiagMatrix one({0.5}, {});
  CHECK(sturm_count(one, 0.0) == 0);
  CHECK(sturm_count(one, 1.0) == 1);
  CHECK(sturm_count(jacobi_matrix(Family::chebyshev_first(), 0, 1), 1.0) == 2);

  const TridiagMatrix t = jacobi_matrix(Family::jacobi(0.5, -0.5), 0, 15);
  const auto ev = oracle::symmetric_eigenvalues(oracle::tridiagonal(t.diag(), t.offdiag()));
  std::size_t prev = 0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = -1.1 + 2.2 * i / 4000.0;
    const std::size_t c = sturm_count(t, x);
    CHECK(c >= prev);
    prev = c;
    const auto want = static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [&](double e) {
      return e < x - 1e-12;
    }));
    const auto want_hi = static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [&](double e) {
      return e < x + 1e-12;
    }));
    CHECK(c >= want);
    CHECK(c <= want_hi);
  }
  // Exact zero pivot: eigenvalue 0 of [[0,1],[1,0]] sits exactly on the probe.
  const TridiagMatrix z({0.0, 0.0}, {1.0});
  CHECK(sturm_count(z, 0.0) == 1);
  CHECK(sturm_count(TridiagMatrix({0.0, 0.0, 0.0}, {1.0, 1.0}), 0.0) == 1);
}

TEST_CASE("extreme eigenpairs agree with a dense solver") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  std::uniform_real_distribution<double> uo(0.05, 1.5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    std::vector<double> d(n), o(n - 1);
    for (double& x : d) x = ud(rng);
    for (double& x : o) x = uo(rng);
    const TridiagMatrix t(d, o);
    const auto ev = oracle::symmetric_eigenvalues(oracle::tridiagonal(d, o));
    const EigenPair hi = extreme_eigenpair(t, Extreme::Largest);
    const EigenPair lo = extreme_eigenpair(t, Extreme::Smallest);
    CHECK(std::abs(hi.value - ev.back()) < 1e-10);
    CHECK(std::abs(lo.value - ev.front()) < 1e-10);
    CHECK(norm2(hi.vector) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(residual(t, hi) <= 1e-10 * t.norm());
    CHECK(residual(t, lo) <= 1e-10 * t.norm());
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(eigenvalue_at(t, k) - ev[k]) < 1e-10);
    }
    // irreducible: leading component nonzero and normalized positive
    CHECK(hi.vector[0] > 0.0);
    CHECK(lo.vector[0] > 0.0);
  }
}

TEST_CASE("extreme eigenpair of 1x1 and Jacobi matrices") {
  const EigenPair e = extreme_eigenpair(TridiagMatrix({0.7}, {}), Extreme::Smallest);
  CHECK(e.value == doctest::Approx(0.7));
  REQUIRE(e.vector.size() == 1);
  CHECK(e.vector[0] == 1.0);

  for (std::size_t n = 1; n <= 60; ++n) {
    const EigenPair c = extreme_eigenpair(jacobi_matrix(Family::chebyshev_first(), 0, n), Extreme::Largest);
    CHECK(std::abs(c.value - std::cos(oracle::kPi / (2.0 * n + 2.0))) < 1e-13);
    for (std::size_t m = 1; m <= n; ++m) {
      const EigenPair b = extreme_eigenpair(jacobi_matrix(Family::chebyshev_first(), m, n), Extreme::Largest);
      CHECK(std::abs(b.value - std::cos(oracle::kPi / (static_cast<double>(n - m) + 2.0))) < 1e-13);
    }
  }
}

TEST_CASE("largest eigenvalue is a zero of the associated polynomial") {
  for (const Family& f : jacobi_like()) {
    for (std::size_t m : {0u, 1u, 3u}) {
      for (std::size_t l = 1; l <= 12; ++l) {
        const TridiagMatrix t = jacobi_matrix(f, m, m + l - 1);
        const double lam = extreme_eigenpair(t, Extreme::Largest).value;
        const double val = eval_associated(f, static_cast<int>(l), m, lam);
        // derivative scale by a symmetric difference
        const double h = 1e-6 * std::max(1.0, std::abs(lam));
        const double slope = std::abs(eval_associated(f, static_cast<int>(l), m, lam + h) -
                                      eval_associated(f, static_cast<int>(l), m, lam - h)) / (2 * h);
        CAPTURE(f.name());
        CAPTURE(l);
        CHECK(std::abs(val) < 1e-8 * std::max(slope, 1.0));
        if (l > 1) {
          // simple: strictly above the second largest
          CHECK(eigenvalue_at(t, l - 1) - eigenvalue_at(t, l - 2) > 0.0);
        }
      }
    }
  }
}

TEST_CASE("generalized problem by diagonal congruence") {
  const TridiagMatrix c21 = jacobi_matrix(Family::chebyshev_first(), 1, 2);

  SUBCASE("identity reduction") {
    for (const Family& f : jacobi_like()) {
      const TridiagMatrix t = jacobi_matrix(f, 2, 9);
      const EigenPair a = extreme_eigenpair(t, Extreme::Largest);
      const EigenPair b = extreme_eigen_generalized(t, 0.0, 1.0, Extreme::Largest);
      CHECK(a.value == b.value);
      for (std::size_t i = 0; i < a.vector.size(); ++i) CHECK(a.vector[i] == doctest::Approx(b.vector[i]));
    }
  }

  SUBCASE("1x1") {
    const EigenPair e = extreme_eigen_generalized(TridiagMatrix({0.4}, {}), 0.2, 2.0, Extreme::Largest);
    CHECK(e.value == doctest::Approx(0.3));
    CHECK(e.vector[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  }

  SUBCASE("Chebyshev J_2^1 against bisection on the co-recursive recurrence") {
    const Family f = Family::chebyshev_first();
    const double gamma = 0.1, delta = 1.25;
    const double want = oracle::largest_root(
        [&](double x) { return eval_corecursive(f, 2, 1, gamma, delta, x); }, -3.0, 3.0);
    const EigenPair e = extreme_eigen_generalized(c21, gamma, delta, Extreme::Largest);
    CHECK(std::abs(e.value - want) < 1e-13);
  }

  SUBCASE("eigen-equation, weighted normalization, co-recursive zero") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ug(-0.5, 0.5);
    std::uniform_real_distribution<double> ud(0.3, 3.0);
    for (const Family& f : jacobi_like()) {
      for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = trial % 3;
        const std::size_t n = m + 1 + trial % 7;
        const double gamma = ug(rng), delta = ud(rng);
        const TridiagMatrix t = jacobi_matrix(f, m, n);
        for (Extreme which : {Extreme::Largest, Extreme::Smallest}) {
          const EigenPair e = extreme_eigen_generalized(t, gamma, delta, which);
          auto lhs = t.multiply(e.vector);
          lhs[0] += gamma * e.vector[0];
          double r = 0.0;
          for (std::size_t i = 0; i < lhs.size(); ++i) {
            const double rhs = e.value * (i == 0 ? delta : 1.0) * e.vector[i];
            r = std::max(r, std::abs(lhs[i] - rhs));
          }
          CHECK(r < 1e-10 * (t.norm() + std::abs(gamma)));
          double wn = delta * e.vector[0] * e.vector[0];
          for (std::size_t i = 1; i < e.vector.size(); ++i) wn += e.vector[i] * e.vector[i];
          CHECK(wn == doctest::Approx(1.0).epsilon(1e-13));
        }
        const EigenPair hi = extreme_eigen_generalized(t, gamma, delta, Extreme::Largest);
        const int deg = static_cast<int>(n - m + 1);
        const double val = eval_corecursive(f, deg, m, gamma, delta, hi.value);
        const double h = 1e-6 * std::max(1.0, std::abs(hi.value));
        const double slope = std::abs(eval_corecursive(f, deg, m, gamma, delta, hi.value + h) -
                                      eval_corecursive(f, deg, m, gamma, delta, hi.value - h)) / (2 * h);
        CHECK(std::abs(val) < 1e-8 * std::max(1.0, slope));
        // matches the dense generalized problem via congruence
        std::vector<double> d = t.diag(), o = t.offdiag();
        d[0] = (d[0] + gamma) / delta;
        if (!o.empty()) o[0] /= std::sqrt(delta);
        CHECK(std::abs(hi.value - oracle::symmetric_eigenvalues(oracle::tridiagonal(d, o)).back()) < 1e-10);
      }
    }
  }

  CHECK_THROWS_AS(extreme_eigen_generalized(c21, 0.0, 0.0, Extreme::Largest), ParameterError);
  CHECK_THROWS_AS(extreme_eigen_generalized(c21, 0.0, -1.0, Extreme::Largest), ParameterError);
}

TEST_CASE("Gauss quadrature") {
  for (std::size_t k = 1; k <= 20; ++k) {
    const QuadratureRule r = gauss_quadrature(Family::chebyshev_first(), k);
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(r.weights[i] == doctest::Approx(oracle::kPi / k).epsilon(1e-13));
      // classical Chebyshev-Gauss nodes
      const double node = std::cos((2.0 * (k - 1 - i) + 1.0) * oracle::kPi / (2.0 * k));
      CHECK(std::abs(r.nodes[i] - node) < 1e-14);
    }
  }
  for (const Family& f : jacobi_like()) {
    const QuadratureRule one = gauss_quadrature(f, 1);
    CHECK(one.nodes[0] == doctest::Approx(f.a(0)));
    CHECK(one.weights[0] == doctest::Approx(f.b(0) * f.b(0)).epsilon(1e-14));
  }
  const QuadratureRule two = gauss_quadrature(Family::legendre(), 2);
  CHECK(std::abs(two.integrate([](double x) { return x * x; }) - 2.0 / 3.0) < 1e-14);
  CHECK_THROWS_AS(gauss_quadrature(Family::legendre(), 0), ParameterError);

  // exact for degree <= 2k-1 against Boost quadrature of monomials
  for (std::size_t k : {3u, 7u}) {
    const Family f = Family::jacobi(-0.5, 1.5);
    const QuadratureRule r = gauss_quadrature(f, k);
    for (int d = 0; d <= static_cast<int>(2 * k - 1); ++d) {
      const double want = oracle::jacobi_integral(-0.5, 1.5, [&](double x) { return std::pow(x, d); });
      CHECK(r.integrate([&](double x) { return std::pow(x, d); }) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("orthonormality through Gauss quadrature, n <= 30") {
  for (const Family& f : jacobi_like()) {
    const QuadratureRule r = gauss_quadrature(f, 31);
    std::vector<std::vector<double>> v;
    for (double x : r.nodes) v.push_back(eval_orthonormal(f, 30, x));
    double err = 0.0;
    for (std::size_t i = 0; i <= 30; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t q = 0; q < r.nodes.size(); ++q) g += r.weights[q] * v[q][i] * v[q][j];
        err = std::max(err, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
    CAPTURE(f.name());
    CHECK(err < 1e-10);
  }
}
