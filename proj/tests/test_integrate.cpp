#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "jacobi_walk/integrate.hpp"
#include "oracles.hpp"

using namespace jacobi_walk;
using oracle::frac;

TEST_CASE("moments") {
  CHECK(moment(0, ModelParams(0, 0)) == 1);
  CHECK(moment(1, ModelParams(0, 0)) == frac(1, 2));
  CHECK(moment(0, ModelParams(1, 0)) == frac(1, 2));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const auto table = moments(30, ModelParams(a, b));
      for (long k = 0; k <= 30; ++k) {
        CHECK(table[k] == moment(k, ModelParams(a, b)));
        CHECK(table[k] == oracle::beta_moment(k, a, b));
      }
    }
  }
  CHECK_THROWS_AS(moment(-1, ModelParams(0, 0)), std::invalid_argument);
}

TEST_CASE("exact polynomial integration") {
  const ModelParams legendre(0, 0);
  const auto q0 = monomial_coefficients(0, legendre).coeffs;
  const auto q1 = monomial_coefficients(1, legendre).coeffs;
  CHECK(integrate_poly_exact(oracle::mul(q0, q1), legendre) == 0);
  CHECK(integrate_poly_exact(oracle::mul(q1, q1), legendre) == frac(1, 3));
  for (int a = 0; a <= 3; ++a) {
    CHECK(integrate_poly_exact(PolynomialCoeffs{{BigRational(1)}}, ModelParams(a, 2)) == moment(0, ModelParams(a, 2)));
  }
  CHECK(integrate_poly_exact(std::vector<BigRational>{}, legendre) == 0);
}

TEST_CASE("tridiagonal eigensolver on a Toeplitz matrix") {
  // diag 2, off-diagonal 1: eigenvalues 2 + 2 cos(k pi / 4), first components
  // squared (1/2) sin^2(k pi / 4).
  const std::vector<double> d{2, 2, 2};
  const std::vector<double> e{1, 1};
  const auto eig = symmetric_tridiagonal_eigen(d, e);
  REQUIRE(eig.values.size() == 3);
  CHECK(eig.values[0] == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(2).epsilon(1e-14));
  CHECK(eig.values[2] == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(eig.first_components[0] * eig.first_components[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(eig.first_components[1] * eig.first_components[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eig.first_components[2] * eig.first_components[2] == doctest::Approx(0.25).epsilon(1e-14));

  const auto single = symmetric_tridiagonal_eigen(std::vector<double>{0.3}, std::vector<double>{});
  CHECK(single.values == std::vector<double>{0.3});
  CHECK(single.first_components == std::vector<double>{1.0});

  // An already-diagonal matrix needs no sweeps.
  const auto diag = symmetric_tridiagonal_eigen(std::vector<double>{3, 1, 2}, std::vector<double>{0, 0});
  CHECK(diag.values == std::vector<double>{1, 2, 3});
}

TEST_CASE("long double eigensolver") {
  const std::vector<long double> d{2, 2, 2};
  const std::vector<long double> e{1, 1};
  const auto eig = symmetric_tridiagonal_eigen(d, e);
  REQUIRE(eig.values.size() == 3);
  CHECK(std::fabs(eig.values[0] - (2 - std::sqrt(2.0L))) <= 1e-18L);
  CHECK(std::fabs(eig.values[2] - (2 + std::sqrt(2.0L))) <= 1e-18L);
  CHECK(std::fabs(eig.first_components[1] * eig.first_components[1] - 0.5L) <= 1e-18L);
  CHECK_THROWS_AS(symmetric_tridiagonal_eigen(d, e, 1e-20L, 0), NumericalError);
}

TEST_CASE("double rule is the extended rule rounded") {
  for (int m : {1, 5, 23, 40}) {
    const auto rule = gauss_jacobi_rule(m, RealParams(3.5, 0.25));
    REQUIRE(rule.extended_nodes.size() == rule.nodes.size());
    REQUIRE(rule.extended_weights.size() == rule.weights.size());
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      CHECK(rule.nodes[k] == static_cast<double>(rule.extended_nodes[k]));
      CHECK(rule.weights[k] == static_cast<double>(rule.extended_weights[k]));
    }
  }
}

TEST_CASE("eigensolver reports non-convergence") {
  const std::vector<double> d{2, 2, 2};
  const std::vector<double> e{1, 1};
  CHECK_THROWS_AS(symmetric_tridiagonal_eigen(d, e, 1e-14, 0), NumericalError);
  CHECK_THROWS_AS(symmetric_tridiagonal_eigen(d, std::vector<double>{1}), std::invalid_argument);
}

TEST_CASE("small Gauss-Jacobi rules") {
  const auto r1 = gauss_jacobi_rule(1, RealParams(0, 0));
  REQUIRE(r1.nodes.size() == 1);
  CHECK(std::fabs(r1.nodes[0] - 0.5) <= 1e-15);
  CHECK(std::fabs(r1.weights[0] - 1.0) <= 1e-15);

  const auto r2 = gauss_jacobi_rule(2, RealParams(0, 0));
  const double h = 1.0 / (2.0 * std::sqrt(3.0));
  CHECK(r2.nodes[0] == doctest::Approx(0.5 - h).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(0.5 + h).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r2.weights[1] == doctest::Approx(0.5).epsilon(1e-14));

  const ModelParams p(2, 1);
  const auto r6 = gauss_jacobi_rule(6, RealParams(p));
  for (long k = 0; k <= 11; ++k) {
    const double want = moment(k, p).get_d();
    const double got = integrate_quadrature([k](double x) { return std::pow(x, static_cast<double>(k)); }, r6);
    CHECK(std::fabs(got - want) <= 1e-12 * want);
  }
  CHECK_THROWS_AS(gauss_jacobi_rule(0, RealParams(0, 0)), std::invalid_argument);
}

TEST_CASE("rule invariants and moment exactness for M <= 40") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      const ModelParams p(a, b);
      const auto mom = moments(79, p);
      for (int m = 1; m <= 40; ++m) {
        const auto rule = gauss_jacobi_rule(m, RealParams(p));
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(m));
        double wsum = 0.0;
        for (int k = 0; k < m; ++k) {
          REQUIRE(rule.nodes[k] > 0.0);
          REQUIRE(rule.nodes[k] < 1.0);
          if (k) REQUIRE(rule.nodes[k] > rule.nodes[k - 1]);
          REQUIRE(rule.weights[k] > 0.0);
          wsum += rule.weights[k];
        }
        REQUIRE(std::fabs(wsum - mom[0].get_d()) <= 1e-13 * mom[0].get_d());
        for (int k = 0; k <= 2 * m - 1; ++k) {
          const double want = mom[k].get_d();
          const double got = integrate_quadrature([k](double x) { return std::pow(x, static_cast<double>(k)); }, rule);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(m);
          CAPTURE(k);
          REQUIRE(std::fabs(got - want) <= 1e-12 * want);
        }
      }
    }
  }
}

TEST_CASE("Gauss-Chebyshev case with non-integer parameters") {
  // x^{-1/2} (1-x)^{-1/2}: total mass pi, equal weights pi / M, nodes
  // (1 + cos((2k-1) pi / 2M)) / 2.
  const int m = 7;
  const auto rule = gauss_jacobi_rule(m, RealParams(-0.5, -0.5));
  for (int k = 0; k < m; ++k) {
    const double node = 0.5 * (1.0 + std::cos((2.0 * (m - k) - 1.0) * std::numbers::pi / (2.0 * m)));
    CHECK(rule.nodes[k] == doctest::Approx(node).epsilon(1e-13));
    CHECK(rule.weights[k] == doctest::Approx(std::numbers::pi / m).epsilon(1e-12));
  }
}

TEST_CASE("integrate_quadrature examples") {
  CHECK(integrate_quadrature([](double) { return 1.0; }, 3, RealParams(0, 0)) == doctest::Approx(1.0).epsilon(1e-15));

  const ModelParams p(1, 1);
  const auto q2 = monomial_coefficients(2, p).coeffs;
  const auto q3 = monomial_coefficients(3, p).coeffs;
  auto horner = [](const std::vector<BigRational>& c, double x) {
    double s = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k].get_d();
    return s;
  };
  const double v = integrate_quadrature([&](double x) { return horner(q2, x) * horner(q3, x); }, 3, RealParams(p));
  CHECK(std::fabs(v) <= 1e-13);

  const double w = integrate_quadrature(
      [](double x) { return x * eval_q<double>(0, x, RealParams(0, 0)) * eval_q<double>(1, x, RealParams(0, 0)); }, 2,
      RealParams(0, 0));
  CHECK(std::fabs(w - 1.0 / 6.0) <= 1e-14);
}

TEST_CASE("quadrature agrees with exact integration on random polynomials") {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, 30);
  std::uniform_int_distribution<int> par(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const ModelParams p(par(gen), par(gen));
    const int d = deg(gen);
    std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = coef(gen);
    c.back() = c.back() == 0 ? BigRational(1) : c.back();
    const double exact = integrate_poly_exact(c, p).get_d();
    const auto rule = gauss_jacobi_rule(d / 2 + 1, RealParams(p));
    const double approx = integrate_quadrature(
        [&](double x) {
          double s = 0.0;
          for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k].get_d();
          return s;
        },
        rule);
    CAPTURE(trial);
    CAPTURE(exact);
    CHECK(std::fabs(approx - exact) <= 1e-12 * std::fabs(exact));
  }
}

TEST_CASE("quadrature cache shares one rule per key") {
  QuadratureCache cache;
  const auto a = cache.get(5, RealParams(1, 2));
  const auto b = cache.get(5, RealParams(1, 2));
  CHECK(a.get() == b.get());
  CHECK(cache.size() == 1);

  std::vector<std::shared_ptr<const QuadratureRule>> got(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < got.size(); ++w) pool.emplace_back([&, w] { got[w] = cache.get(17, RealParams(3, 0)); });
  }
  for (const auto& r : got) {
    CHECK(r.get() == got[0].get());
    CHECK(r->nodes == gauss_jacobi_rule(17, RealParams(3, 0)).nodes);
  }
  CHECK(cache.size() == 2);
}
