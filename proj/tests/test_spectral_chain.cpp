#include <doctest.h>

#include <cmath>

#include "jacobi_walk/spectral_chain.hpp"
#include "oracles.hpp"

using namespace jacobi_walk;
using oracle::frac;

namespace {

std::function<std::vector<oracle::Q>(long)> urn_law(int a, int b) {
  return [a, b](long n) { return oracle::urn_ball_by_ball(n, a, b); };
}

}  // namespace

TEST_CASE("banded transition matrix") {
  const auto m = build_transition<BigRational>(2, ModelParams(0, 0));
  CHECK(m.diag == std::vector<BigRational>{frac(1, 2), frac(1, 2)});
  CHECK(m.sup == std::vector<BigRational>{frac(1, 2)});
  CHECK(m.sub == std::vector<BigRational>{frac(1, 6)});
  CHECK(m.row_sum(0) == 1);
  CHECK(m.row_sum(1) == 1 - frac(1, 3));

  const auto one = build_transition<BigRational>(1, ModelParams(3, 2));
  CHECK(one.diag.size() == 1);
  CHECK(one.diag[0] == step_coefficients<BigRational>(0, ModelParams(3, 2)).b);
  CHECK(one.sub.empty());
  CHECK(one.sup.empty());

  for (int a = 0; a <= 4; ++a) {
    const auto big = build_transition<BigRational>(60, ModelParams(a, 4 - a));
    for (State i = 0; i + 1 < 60; ++i) REQUIRE(big.row_sum(i) == 1);
    CHECK(big.row_sum(59) == 1 - step_coefficients<BigRational>(59, ModelParams(a, 4 - a)).a);
    for (const auto* v : {&big.sub, &big.diag, &big.sup})
      for (const auto& x : *v) REQUIRE(x >= 0);
  }
  CHECK_THROWS_AS(build_transition<double>(0, RealParams(0, 0)), std::invalid_argument);
}

TEST_CASE("exact matrix power") {
  const ModelParams p(0, 0);
  CHECK(matrix_power_transition(0, 5, 5, p) == 1);
  CHECK(matrix_power_transition(0, 5, 4, p) == 0);
  CHECK(matrix_power_transition(2, 0, 0, p) == frac(1, 3));
  for (State i = 0; i < 10; ++i) {
    CHECK(matrix_power_transition(1, i, i + 1, ModelParams(2, 3)) == step_coefficients<BigRational>(i, ModelParams(2, 3)).a);
  }
}

TEST_CASE("matrix power equals the sum over all paths of the urn walk") {
  for (int a : {0, 1, 3}) {
    for (int b : {0, 2}) {
      for (long t = 0; t <= 6; ++t) {
        for (long i = 0; i <= 3; ++i) {
          const auto row = matrix_power_row<BigRational>(t, i, i + t, ModelParams(a, b));
          for (long j = 0; j <= i + t; ++j) {
            REQUIRE(row[j] == oracle::path_sum(t, i, j, urn_law(a, b)));
          }
        }
      }
    }
  }
}

TEST_CASE("two-step row from the origin in the Legendre case") {
  // Paths: 0->0->0 (1/4) + 0->1->0 (1/12); 0->0->1 (1/4) + 0->1->1 (1/4); 0->1->2 (1/6).
  const auto row = matrix_power_row<BigRational>(2, 0, 2, ModelParams(0, 0));
  CHECK(row == std::vector<BigRational>{frac(1, 3), frac(1, 2), frac(1, 6)});
  CHECK(transition_row<BigRational>(2, 0, 2, ModelParams(0, 0)) == row);
}

TEST_CASE("Karlin-McGregor examples") {
  const ModelParams p(0, 0);
  CHECK(km_transition<BigRational>(1, 0, 1, p) == frac(1, 2));
  CHECK(km_transition<double>(1, 0, 1, RealParams(p)) == doctest::Approx(0.5).epsilon(1e-14));
  for (int a = 0; a <= 3; ++a) {
    CHECK(km_transition<BigRational>(0, 3, 3, ModelParams(a, 1)) == 1);
    CHECK(std::fabs(km_transition<double>(0, 3, 3, RealParams(a, 1)) - 1.0) < 1e-13);
  }
  CHECK(km_transition<BigRational>(2, 0, 0, p) == frac(1, 3));
  CHECK(km_transition<BigRational>(2, 0, 0, p) == matrix_power_transition(2, 0, 0, p));
}

TEST_CASE("Karlin-McGregor agrees with the banded power") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; b += 3) {
      const ModelParams p(a, b);
      ExactKarlinMcGregor exact(p);
      FloatKarlinMcGregor approx(p);
      for (State t = 0; t <= 10; ++t) {
        for (State i = 0; i <= 6; ++i) {
          const auto row = matrix_power_row<BigRational>(t, i, 6, p);
          for (State j = 0; j <= 6; ++j) {
            const auto e = exact.transition(t, i, j);
            REQUIRE(e == row[j]);
            REQUIRE(std::fabs(approx.transition(t, i, j) - e.get_d()) <= 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("transition rows") {
  const auto r1 = transition_row<double>(1, 0, 2, RealParams(0, 0));
  CHECK(r1[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r1[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r1[2] == 0.0);

  const auto r3 = transition_row<BigRational>(3, 0, 5, ModelParams(1, 2));
  CHECK(r3[4] == 0);
  CHECK(r3[5] == 0);
  const auto r3f = transition_row<double>(3, 0, 5, RealParams(1, 2));
  CHECK(r3f[4] == 0.0);
  CHECK(r3f[5] == 0.0);

  const auto r2 = transition_row<double>(2, 0, 2, RealParams(0, 0));
  CHECK(std::fabs(r2[0] + r2[1] + r2[2] - 1.0) <= 1e-12);
}

TEST_CASE("rows of P^t are stochastic") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const ModelParams p(a, b);
      for (State t = 0; t <= 8; ++t) {
        for (State i = 0; i <= 5; ++i) {
          const auto exact = transition_row<BigRational>(t, i, i + t, p);
          BigRational s = 0;
          for (const auto& v : exact) s += v;
          REQUIRE(s == 1);
          const auto approx = transition_row<double>(t, i, i + t, RealParams(p));
          double sf = 0.0;
          for (double v : approx) sf += v;
          REQUIRE(std::fabs(sf - 1.0) <= 1e-11);
        }
      }
    }
  }
}

TEST_CASE("reversibility with respect to the invariant measure") {
  for (int a : {0, 2}) {
    for (int b : {1, 3}) {
      const ModelParams p(a, b);
      ExactKarlinMcGregor km(p);
      for (State t = 0; t <= 10; ++t) {
        for (State i = 0; i <= 8; ++i) {
          for (State j = 0; j <= 8; ++j) {
            REQUIRE(invariant_measure<BigRational>(i, p) * km.transition(t, i, j) ==
                    invariant_measure<BigRational>(j, p) * km.transition(t, j, i));
          }
        }
      }
    }
  }
}

TEST_CASE("reachability support") {
  const ModelParams p(1, 2);
  ExactKarlinMcGregor km(p);
  for (State t = 1; t <= 6; ++t) {
    for (State i = 0; i <= 6; ++i) {
      for (State j = 0; j <= 12; ++j) {
        const auto v = km.transition(t, i, j);
        if (std::abs(i - j) > t) {
          REQUIRE(v == 0);
        } else {
          REQUIRE(v > 0);
        }
      }
    }
  }
}

TEST_CASE("spectral bound pi_j * integral |Q_i Q_j| W") {
  const RealParams p(2, 1);
  const auto fine = gauss_jacobi_rule(200, p);
  FloatKarlinMcGregor km(p);
  for (State i = 0; i <= 5; ++i) {
    for (State j = 0; j <= 5; ++j) {
      const double bound = integrate_quadrature(
                               [&](double x) { return std::fabs(eval_q<double>(i, x, p) * eval_q<double>(j, x, p)); },
                               fine) /
                           norm_squared<double>(j, p);
      for (State t = 0; t <= 8; ++t) {
        const double v = km.transition(t, i, j);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        CHECK(v <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("clamp policy") {
  CHECK(clamp_probability(0.25) == 0.25);
  CHECK(clamp_probability(-1e-12) == 0.0);
  CHECK(clamp_probability(1.0 + 1e-12) == 1.0);
  CHECK_THROWS_AS(clamp_probability(-1e-6), NumericalError);
  CHECK_THROWS_AS(clamp_probability(1.001), NumericalError);
  CHECK_THROWS_AS(clamp_probability(std::nan("")), NumericalError);
}

TEST_CASE("engine dispatch") {
  const auto e = km_transition(2, 0, 0, RealParams(0, 0), Engine::exact);
  CHECK(std::get<BigRational>(e) == frac(1, 3));
  CHECK(to_string(e) == "1/3");
  const auto f = km_transition(2, 0, 0, RealParams(0, 0), Engine::floating);
  CHECK(std::get<double>(f) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(km_transition(1, 0, 0, RealParams(0.5, 0), Engine::exact), std::invalid_argument);
  // Non-integer parameters are fine in the float engine; rows still sum to one.
  const auto row = transition_row<double>(4, 1, 5, RealParams(0.5, -0.25));
  double s = 0.0;
  for (double v : row) s += v;
  CHECK(std::fabs(s - 1.0) < 1e-12);
}

TEST_CASE("stationarity residuals") {
  CHECK(stationarity_residual<BigRational>(50, ModelParams(0, 0)) == 0);
  CHECK(stationarity_residual<BigRational>(2, ModelParams(0, 0)) == 0);
  CHECK(stationarity_residual<double>(100, RealParams(3, 2)) <= 1e-12);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      REQUIRE(stationarity_residual<BigRational>(200, ModelParams(a, b)) == 0);
    }
  }
  for (State i = 0; i < 40; ++i) CHECK(invariant_measure<BigRational>(i, ModelParams(0, 0)) == 2 * i + 1);
  CHECK_THROWS_AS(stationarity_residual<double>(1, RealParams(0, 0)), std::invalid_argument);
}

TEST_CASE("float Gram entries with a large pi_j") {
  // alpha = 0, beta = 4: pi_16 is about 1.7e8 and Q_16 reaches 4845 near 0.
  const RealParams p(0, 4);
  FloatKarlinMcGregor km(p);
  CHECK(invariant_measure<double>(16, p) > 1e8);
  for (State j = 0; j <= 20; ++j) {
    CHECK(std::fabs(km.gram(0, j) - (j == 0 ? 1.0 : 0.0)) <= 1e-11);
    CHECK(std::fabs(km.gram(j, j) - 1.0) <= 1e-11);
  }
}
