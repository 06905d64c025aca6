#pragma once

// Recurrence coefficients, evaluation, norms and invariant measure of the
// Jacobi polynomials Q_n on [0,1] normalized by Q_n(1) = 1:
//
//   x Q_n(x) = A_n Q_{n+1}(x) + B_n Q_n(x) + C_n Q_{n-1}(x),  Q_0 = 1, Q_{-1} = 0,
//
// orthogonal against W(x) = x^alpha (1 - x)^beta. Because A_n + B_n + C_n = 1
// the triple (A_n, B_n, C_n) is also the up/stay/down law of the walk at n.
//
// Every numeric routine comes in two engines selected by the scalar type:
// double (any real alpha, beta > -1) and BigRational (integer alpha, beta).
// long double shares the double engine's parameters; quadrature uses it for
// its internal arithmetic.

#include <cstddef>
#include <type_traits>
#include <vector>

#include "jacobi_walk/params.hpp"
#include "jacobi_walk/rational.hpp"

namespace jacobi_walk {

template <class T>
struct ParamsFor;
template <>
struct ParamsFor<double> {
  using type = RealParams;
};
template <>
struct ParamsFor<long double> {
  using type = RealParams;
};
template <>
struct ParamsFor<BigRational> {
  using type = ModelParams;
};
template <class T>
using params_t = typename ParamsFor<T>::type;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, long double> || std::is_same_v<T, BigRational>;

/// Up (a = A_n), stay (b = B_n) and down (c = C_n) probabilities at state n.
template <Scalar T>
struct StepCoefficients {
  State n = 0;
  T a{};
  T b{};
  T c{};

  T sum() const { return T(a + b + c); }
};

/// Exact monomial coefficients of Q_degree; coeffs[k] multiplies x^k.
struct PolynomialCoeffs {
  std::vector<BigRational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// (A_n, B_n, C_n). C_0 is 0. B_n uses the single-fraction form; the exact
/// engine additionally checks it against the three-term form and checks
/// A_n + B_n + C_n == 1, throwing std::logic_error on mismatch.
template <Scalar T>
StepCoefficients<T> step_coefficients(State n, const params_t<T>& params);

/// The same triple assembled from the urn's factored draw probabilities:
/// down = n/(2n+a+b+1) * (n+a)/(2n+a+b), up = (n+a+b+1)/(2n+a+b+1) * (n+b+1)/(2n+a+b+2),
/// stay = 1 - up - down.
template <Scalar T>
StepCoefficients<T> urn_step_probabilities(State n, const ModelParams& params);

/// Q_n(x) by forward recurrence. Working range for the float engine: n <= 500.
template <Scalar T>
T eval_q(State n, const T& x, const params_t<T>& params);

/// Q_0(x), ..., Q_{n_max}(x).
template <Scalar T>
std::vector<T> eval_q_all(State n_max, const T& x, const params_t<T>& params);

PolynomialCoeffs monomial_coefficients(State n, const ModelParams& params);

/// Monomial coefficients of Q_0..Q_{n_max}, built in one recurrence sweep.
std::vector<PolynomialCoeffs> monomial_table(State n_max, const ModelParams& params);

/// Integral of W over [0,1], i.e. Beta(alpha+1, beta+1).
BigRational weight_mass(const ModelParams& params);
double weight_mass(const RealParams& params);

/// Integral of Q_i^2 W over [0,1] from the Gamma-ratio closed form.
template <Scalar T>
T norm_squared(State i, const params_t<T>& params);

/// pi_i = norm_squared(0) / norm_squared(i), so pi_0 = 1. This is an
/// invariant measure of the walk; it is not summable and is never
/// normalized to a probability vector.
template <Scalar T>
T invariant_measure(State i, const params_t<T>& params);

template <>
double norm_squared<double>(State i, const RealParams& params);
template <>
BigRational norm_squared<BigRational>(State i, const ModelParams& params);
template <>
double invariant_measure<double>(State i, const RealParams& params);
template <>
BigRational invariant_measure<BigRational>(State i, const ModelParams& params);

/// W(x) = x^alpha (1 - x)^beta. Throws std::domain_error outside [0,1].
double weight(double x, const RealParams& params);
BigRational weight(const BigRational& x, const ModelParams& params);

}  // namespace jacobi_walk
