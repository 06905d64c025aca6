#include "jacobi_walk/jacobi_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jacobi_walk {

namespace {

template <Scalar T>
T as(const State v) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(v);
  } else {
    return BigRational(static_cast<long>(v));
  }
}

template <Scalar T>
struct Shape {
  T alpha;
  T beta;
};

template <Scalar T>
Shape<T> shape(const params_t<T>& p) {
  if constexpr (std::is_floating_point_v<T>) {
    return {static_cast<T>(p.alpha), static_cast<T>(p.beta)};
  } else {
    return {BigRational(p.alpha), BigRational(p.beta)};
  }
}

void require_state(State n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": state index must be >= 0");
}

// x^k for a nonnegative integer k.
template <Scalar T>
T ipow(T x, long k) {
  T r(1);
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

}  // namespace

template <Scalar T>
StepCoefficients<T> step_coefficients(State n, const params_t<T>& params) {
  require_state(n, "step_coefficients");
  const auto [alpha, beta] = shape<T>(params);
  const T nn = as<T>(n);
  StepCoefficients<T> out;
  out.n = n;

  if (n == 0) {
    // (alpha + beta + 1) cancels from A_0, and B_0 is 0/0 in both printed
    // forms when alpha = beta = 0; these are the reduced values.
    const T denom = alpha + beta + T(2);
    out.a = T((beta + T(1)) / denom);
    out.b = T((alpha + T(1)) / denom);
    out.c = T(0);
  } else {
    const T s = T(T(2) * nn + alpha + beta);
    out.a = T((nn + beta + T(1)) * (nn + alpha + beta + T(1)) / ((s + T(1)) * (s + T(2))));
    out.b = T((T(2) * nn * (nn + alpha + beta + T(1)) + (alpha + T(1)) * beta + alpha * (alpha + T(1))) /
              (s * (s + T(2))));
    out.c = T(nn * (nn + alpha) / (s * (s + T(1))));
  }

  if constexpr (std::is_same_v<T, BigRational>) {
    const T s = T(T(2) * nn + alpha + beta);
    const T middle = n == 0 ? T(0) : T(nn * (nn + beta) / s);
    const T three_term = T(T(1) + middle - (nn + T(1)) * (nn + beta + T(1)) / (s + T(2)));
    if (three_term != out.b) {
      throw std::logic_error("B_n forms disagree at n = " + std::to_string(n));
    }
    if (out.sum() != T(1)) {
      throw std::logic_error("A_n + B_n + C_n != 1 at n = " + std::to_string(n));
    }
  }
  return out;
}

template <Scalar T>
StepCoefficients<T> urn_step_probabilities(State n, const ModelParams& params) {
  require_state(n, "urn_step_probabilities");
  const T nn = as<T>(n);
  const T alpha(params.alpha);
  const T beta(params.beta);
  const T main_total = T(T(2) * nn + alpha + beta + T(1));

  StepCoefficients<T> out;
  out.n = n;
  if (n == 0) {
    // No blue ball to draw; the blue-side auxiliary urn (2n+a+b balls) is never formed.
    out.c = T(0);
  } else {
    out.c = T((nn / main_total) * ((nn + alpha) / (T(2) * nn + alpha + beta)));
  }
  out.a = T(((nn + alpha + beta + T(1)) / main_total) * ((nn + beta + T(1)) / (main_total + T(1))));
  out.b = T(T(1) - out.a - out.c);
  return out;
}

template <Scalar T>
std::vector<T> eval_q_all(State n_max, const T& x, const params_t<T>& params) {
  require_state(n_max, "eval_q");
  std::vector<T> q;
  q.reserve(static_cast<std::size_t>(n_max) + 1);
  q.emplace_back(1);
  T prev(0);
  for (State n = 0; n < n_max; ++n) {
    const auto k = step_coefficients<T>(n, params);
    const T& cur = q.back();
    T next = T(((x - k.b) * cur - k.c * prev) / k.a);
    prev = cur;
    q.push_back(std::move(next));
  }
  return q;
}

template <Scalar T>
T eval_q(State n, const T& x, const params_t<T>& params) {
  require_state(n, "eval_q");
  T prev(0);
  T cur(1);
  for (State k = 0; k < n; ++k) {
    const auto c = step_coefficients<T>(k, params);
    T next = T(((x - c.b) * cur - c.c * prev) / c.a);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<PolynomialCoeffs> monomial_table(State n_max, const ModelParams& params) {
  require_state(n_max, "monomial_coefficients");
  std::vector<PolynomialCoeffs> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  table.push_back(PolynomialCoeffs{{BigRational(1)}});
  for (State n = 0; n < n_max; ++n) {
    const auto k = step_coefficients<BigRational>(n, params);
    const auto& cur = table.back().coeffs;
    std::vector<BigRational> next(cur.size() + 1);
    // (x - B_n) Q_n
    for (std::size_t d = 0; d < cur.size(); ++d) {
      next[d + 1] += cur[d];
      next[d] -= k.b * cur[d];
    }
    if (n > 0) {
      const auto& prev = table[table.size() - 2].coeffs;
      for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= k.c * prev[d];
    }
    for (auto& v : next) v /= k.a;
    table.push_back(PolynomialCoeffs{std::move(next)});
  }
  return table;
}

PolynomialCoeffs monomial_coefficients(State n, const ModelParams& params) {
  auto table = monomial_table(n, params);
  return std::move(table.back());
}

BigRational weight_mass(const ModelParams& p) {
  const auto a = static_cast<unsigned long>(p.alpha);
  const auto b = static_cast<unsigned long>(p.beta);
  return BigRational(factorial(a) * factorial(b) / factorial(a + b + 1));
}

double weight_mass(const RealParams& p) {
  if (p.is_integral()) return weight_mass(p.to_model()).get_d();
  return std::exp(std::lgamma(p.alpha + 1.0) + std::lgamma(p.beta + 1.0) -
                  std::lgamma(p.alpha + p.beta + 2.0));
}

template <>
BigRational norm_squared<BigRational>(State i, const ModelParams& p) {
  require_state(i, "norm_squared");
  const auto ii = static_cast<unsigned long>(i);
  const auto a = static_cast<unsigned long>(p.alpha);
  const auto b = static_cast<unsigned long>(p.beta);
  const BigRational fb = factorial(b);
  return BigRational(factorial(ii) * factorial(ii + a) * fb * fb /
                     (factorial(ii + b) * factorial(ii + a + b) * BigRational(2 * ii + a + b + 1)));
}

namespace {

// norm_squared(i) / norm_squared(0) with the Gamma ratios unrolled into
// products; the (alpha + beta + 1) factor is cancelled analytically so that
// alpha + beta = -1 stays finite.
double norm_ratio(State i, const RealParams& p) {
  double r = 1.0;
  for (State k = 1; k <= i; ++k) {
    const double kk = static_cast<double>(k);
    r *= kk * (kk + p.alpha) / (kk + p.beta);
    if (k >= 2) r /= kk + p.alpha + p.beta;
  }
  if (i == 0) return 1.0;
  return r / (2.0 * static_cast<double>(i) + p.alpha + p.beta + 1.0);
}

}  // namespace

template <>
double norm_squared<double>(State i, const RealParams& p) {
  require_state(i, "norm_squared");
  return weight_mass(p) * norm_ratio(i, p);
}

template <>
BigRational invariant_measure<BigRational>(State i, const ModelParams& p) {
  return BigRational(norm_squared<BigRational>(0, p) / norm_squared<BigRational>(i, p));
}

template <>
double invariant_measure<double>(State i, const RealParams& p) {
  require_state(i, "invariant_measure");
  return 1.0 / norm_ratio(i, p);
}

double weight(double x, const RealParams& p) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("weight: x must lie in [0,1]");
  if (p.is_integral()) {
    return ipow(x, static_cast<long>(p.alpha)) * ipow(1.0 - x, static_cast<long>(p.beta));
  }
  return std::pow(x, p.alpha) * std::pow(1.0 - x, p.beta);
}

BigRational weight(const BigRational& x, const ModelParams& p) {
  if (x < 0 || x > 1) throw std::domain_error("weight: x must lie in [0,1]");
  return BigRational(ipow(x, p.alpha) * ipow(BigRational(1 - x), p.beta));
}

template StepCoefficients<double> step_coefficients<double>(State, const RealParams&);
template StepCoefficients<BigRational> step_coefficients<BigRational>(State, const ModelParams&);
template StepCoefficients<double> urn_step_probabilities<double>(State, const ModelParams&);
template StepCoefficients<BigRational> urn_step_probabilities<BigRational>(State, const ModelParams&);
template double eval_q<double>(State, const double&, const RealParams&);
template BigRational eval_q<BigRational>(State, const BigRational&, const ModelParams&);
template std::vector<double> eval_q_all<double>(State, const double&, const RealParams&);
template std::vector<BigRational> eval_q_all<BigRational>(State, const BigRational&, const ModelParams&);
template StepCoefficients<long double> step_coefficients<long double>(State, const RealParams&);
template long double eval_q<long double>(State, const long double&, const RealParams&);
template std::vector<long double> eval_q_all<long double>(State, const long double&, const RealParams&);

}  // namespace jacobi_walk
