#pragma once

// Dynamics of the walk. (P^t)_{ij} is available two ways:
//
//  * Karlin-McGregor:  (P^t)_{ij} = pi_j * integral_0^1 x^t Q_i(x) Q_j(x) W(x) dx,
//    with pi_j = 1 / norm_squared(j), evaluated exactly (monomial moments) or
//    by Gauss-Jacobi quadrature with floor((t+i+j)/2) + 1 nodes;
//  * repeated banded products on the truncated chain, which is exact because a
//    walk started at i cannot reach beyond i + t in t steps.

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "jacobi_walk/integrate.hpp"
#include "jacobi_walk/jacobi_core.hpp"
#include "jacobi_walk/params.hpp"
#include "jacobi_walk/rational.hpp"

namespace jacobi_walk {

/// Transition matrix restricted to states 0..size-1. Row size-1 loses A_{size-1}
/// to the truncated state; all other rows sum to one.
template <Scalar T>
struct BandedTransition {
  State size = 0;
  std::vector<T> sub;   // C_1 .. C_{size-1}
  std::vector<T> diag;  // B_0 .. B_{size-1}
  std::vector<T> sup;   // A_0 .. A_{size-2}
  params_t<T> params;

  T row_sum(State i) const;

  /// Row vector times matrix: (v P)_k = v_{k-1} A_{k-1} + v_k B_k + v_{k+1} C_{k+1}.
  std::vector<T> left_multiply(std::span<const T> v) const;
};

template <Scalar T>
BandedTransition<T> build_transition(State size, const params_t<T>& params);

/// Row (P^t)_{i, 0..j_max} by t banded products from the unit vector e_i.
template <Scalar T>
std::vector<T> matrix_power_row(State t, State i, State j_max, const params_t<T>& params);

/// (P^t)_{ij} exactly, by banded products on a truncation of size max(i,j)+t+1.
BigRational matrix_power_transition(State t, State i, State j, const ModelParams& params);

/// Exact Karlin-McGregor evaluator; caches polynomials, moments and norms as it grows.
class ExactKarlinMcGregor {
 public:
  explicit ExactKarlinMcGregor(const ModelParams& params) : params_(params) {}

  BigRational transition(State t, State i, State j);

  /// pi_j * integral of Q_i Q_j W (the t = 0 entry): the orthonormality Gram entry.
  BigRational gram(State i, State j) { return transition(0, i, j); }

  const ModelParams& params() const { return params_; }

 private:
  void ensure_degree(State n);
  void ensure_moments(long k_max);

  ModelParams params_;
  std::vector<PolynomialCoeffs> q_;
  std::vector<BigRational> inv_norms_;
  std::vector<BigRational> moments_;
};

/// Quadrature Karlin-McGregor evaluator. Results are clamped into [0,1] when
/// within 1e-9 of the interval; anything further out raises NumericalError.
class FloatKarlinMcGregor {
 public:
  explicit FloatKarlinMcGregor(const RealParams& params,
                               std::shared_ptr<QuadratureCache> cache = std::make_shared<QuadratureCache>())
      : params_(params), cache_(std::move(cache)) {}

  double transition(State t, State i, State j) const;

  /// Unclamped pi_j * integral of x^t Q_i Q_j W.
  double raw_transition(State t, State i, State j) const;

  double gram(State i, State j) const { return raw_transition(0, i, j); }

  const RealParams& params() const { return params_; }

  static int nodes_for(State t, State i, State j) { return static_cast<int>((t + i + j) / 2 + 1); }

 private:
  RealParams params_;
  std::shared_ptr<QuadratureCache> cache_;
};

inline constexpr double kClampSlack = 1e-9;

/// Applies the [0,1] clamp policy; throws NumericalError beyond the slack.
double clamp_probability(double p);

template <Scalar T>
T km_transition(State t, State i, State j, const params_t<T>& params);

using Number = std::variant<double, BigRational>;

/// Engine-dispatched form. Throws std::invalid_argument for the exact engine
/// with non-integer parameters.
Number km_transition(State t, State i, State j, const RealParams& params, Engine engine);

/// km_transition for j = 0..j_max. Entries with |j - i| > t are structural zeros.
template <Scalar T>
std::vector<T> transition_row(State t, State i, State j_max, const params_t<T>& params);

template <>
double km_transition<double>(State t, State i, State j, const RealParams& params);
template <>
BigRational km_transition<BigRational>(State t, State i, State j, const ModelParams& params);
template <>
std::vector<double> transition_row<double>(State t, State i, State j_max, const RealParams& params);
template <>
std::vector<BigRational> transition_row<BigRational>(State t, State i, State j_max, const ModelParams& params);

/// |(pi P)_i - pi_i| / pi_i for i = 0..size-2 using the invariant measure.
/// Relative, because pi_i grows polynomially in i.
template <Scalar T>
std::vector<T> stationarity_residuals(State size, const params_t<T>& params);

/// max over stationarity_residuals; exactly zero in the exact engine.
template <Scalar T>
T stationarity_residual(State size, const params_t<T>& params);

std::string to_string(const Number& v);

}  // namespace jacobi_walk
