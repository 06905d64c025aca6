#pragma once

// Two independent ways of integrating against W(x) = x^alpha (1 - x)^beta on
// [0,1]: exact rational moments, and Gauss-Jacobi quadrature built from the
// walk's own recurrence (Golub-Welsch).

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "jacobi_walk/jacobi_core.hpp"
#include "jacobi_walk/params.hpp"
#include "jacobi_walk/rational.hpp"
#include "jacobi_walk/tridiagonal_eigen.hpp"

namespace jacobi_walk {

/// Integral of x^k W(x) over [0,1]: (alpha+k)! beta! / (alpha+beta+k+1)!.
BigRational moment(long k, const ModelParams& params);

/// moment(0..k_max), via the ratio moment(k+1)/moment(k) = (alpha+k+1)/(alpha+beta+k+2).
std::vector<BigRational> moments(long k_max, const ModelParams& params);

/// Exact integral of p(x) W(x) over [0,1].
BigRational integrate_poly_exact(std::span<const BigRational> coeffs, const ModelParams& params);
BigRational integrate_poly_exact(const PolynomialCoeffs& p, const ModelParams& params);

/// Same, with a precomputed moment table covering the polynomial's degree.
BigRational integrate_poly_exact(std::span<const BigRational> coeffs, std::span<const BigRational> moment_table);

/// M-point Gauss-Jacobi rule for W on [0,1]. The weight function is folded
/// into the weights, so sum_m w_m f(x_m) approximates the integral of f W.
///
/// The rule is computed in long double. nodes/weights are those values
/// rounded to double; the extended copies serve sums whose terms cancel
/// heavily, such as pi_j * integral Q_i Q_j W with pi_j near 1e8.
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (0,1)
  std::vector<double> weights;  // positive, summing to weight_mass(params)
  std::vector<long double> extended_nodes;
  std::vector<long double> extended_weights;
  int order = 0;
  RealParams params;
};

/// Builds the rule from the Jacobi matrix with diagonal B_0..B_{M-1} and
/// off-diagonal sqrt(A_n C_{n+1}). Throws NumericalError if the eigensolver
/// fails or the resulting nodes/weights violate their bracketing invariants.
QuadratureRule gauss_jacobi_rule(int points, const RealParams& params);

template <class F>
double integrate_quadrature(F&& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t m = 0; m < rule.nodes.size(); ++m) sum += rule.weights[m] * f(rule.nodes[m]);
  return sum;
}

double integrate_quadrature(const std::function<double(double)>& f, int points, const RealParams& params);

/// Read-mostly cache of rules keyed by (points, alpha, beta). Concurrent
/// lookups share a lock; when two threads build the same rule, the first
/// insert wins and both receive identical values.
class QuadratureCache {
 public:
  std::shared_ptr<const QuadratureRule> get(int points, const RealParams& params);

  std::size_t size() const;

 private:
  using Key = std::tuple<int, double, double>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const QuadratureRule>> rules_;
};

}  // namespace jacobi_walk
