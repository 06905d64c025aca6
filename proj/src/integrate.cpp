#include "jacobi_walk/integrate.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <tuple>

namespace jacobi_walk {

BigRational moment(long k, const ModelParams& params) {
  if (k < 0) throw std::invalid_argument("moment: k must be >= 0");
  const auto a = static_cast<unsigned long>(params.alpha);
  const auto b = static_cast<unsigned long>(params.beta);
  const auto kk = static_cast<unsigned long>(k);
  return BigRational(factorial(a + kk) * factorial(b) / factorial(a + b + kk + 1));
}

std::vector<BigRational> moments(long k_max, const ModelParams& params) {
  if (k_max < 0) return {};
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  out.push_back(moment(0, params));
  for (long k = 0; k < k_max; ++k) {
    out.push_back(BigRational(out.back() * ratio(params.alpha + k + 1, params.alpha + params.beta + k + 2)));
  }
  return out;
}

BigRational integrate_poly_exact(std::span<const BigRational> coeffs, std::span<const BigRational> moment_table) {
  if (moment_table.size() < coeffs.size()) {
    throw std::invalid_argument("integrate_poly_exact: moment table shorter than polynomial");
  }
  BigRational sum(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) != 0) sum += coeffs[k] * moment_table[k];
  }
  return sum;
}

BigRational integrate_poly_exact(std::span<const BigRational> coeffs, const ModelParams& params) {
  if (coeffs.empty()) return BigRational(0);
  const auto table = moments(static_cast<long>(coeffs.size()) - 1, params);
  return integrate_poly_exact(coeffs, table);
}

BigRational integrate_poly_exact(const PolynomialCoeffs& p, const ModelParams& params) {
  return integrate_poly_exact(std::span<const BigRational>(p.coeffs), params);
}

namespace {

// Beta(alpha + 1, beta + 1) in long double.
long double extended_weight_mass(const RealParams& p) {
  if (p.is_integral()) {
    // alpha! beta! / (alpha + beta + 1)!
    long double r = 1.0L / (p.alpha + p.beta + 1.0L);
    for (int k = 1; k <= static_cast<int>(p.beta); ++k) r *= k / (p.alpha + k);
    return r;
  }
  return std::exp(std::lgamma(p.alpha + 1.0L) + std::lgamma(p.beta + 1.0L) - std::lgamma(p.alpha + p.beta + 2.0L));
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int points, const RealParams& params) {
  if (points < 1) throw std::invalid_argument("gauss_jacobi_rule: need at least one point");

  const auto m = static_cast<std::size_t>(points);
  std::vector<long double> diag(m);
  std::vector<long double> off(m - 1);
  auto k = step_coefficients<long double>(0, params);
  for (std::size_t n = 0; n < m; ++n) {
    diag[n] = k.b;
    if (n + 1 < m) {
      const auto next = step_coefficients<long double>(static_cast<State>(n + 1), params);
      off[n] = std::sqrt(k.a * next.c);
      k = next;
    }
  }

  auto eig = symmetric_tridiagonal_eigen(diag, off);
  const long double mass = extended_weight_mass(params);

  QuadratureRule rule;
  rule.order = points;
  rule.params = params;
  rule.extended_nodes = std::move(eig.values);
  rule.extended_weights.resize(m);
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    rule.extended_weights[i] = mass * eig.first_components[i] * eig.first_components[i];
    rule.nodes[i] = static_cast<double>(rule.extended_nodes[i]);
    rule.weights[i] = static_cast<double>(rule.extended_weights[i]);
  }

  for (std::size_t i = 0; i < m; ++i) {
    const double x = rule.nodes[i];
    if (!(x > 0.0 && x < 1.0) || (i > 0 && !(x > rule.nodes[i - 1])) || !(rule.weights[i] > 0.0)) {
      throw NumericalError("gauss_jacobi_rule: node/weight bracketing failed at index " + std::to_string(i) +
                           " for M = " + std::to_string(points));
    }
  }
  return rule;
}

double integrate_quadrature(const std::function<double(double)>& f, int points, const RealParams& params) {
  return integrate_quadrature(f, gauss_jacobi_rule(points, params));
}

std::shared_ptr<const QuadratureRule> QuadratureCache::get(int points, const RealParams& params) {
  const Key key{points, params.alpha, params.beta};
  {
    std::shared_lock lock(mutex_);
    if (auto it = rules_.find(key); it != rules_.end()) return it->second;
  }
  auto built = std::make_shared<const QuadratureRule>(gauss_jacobi_rule(points, params));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = rules_.try_emplace(key, std::move(built));
  return it->second;
}

std::size_t QuadratureCache::size() const {
  std::shared_lock lock(mutex_);
  return rules_.size();
}

}  // namespace jacobi_walk
