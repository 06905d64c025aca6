#include "jacobi_walk/spectral_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jacobi_walk {

namespace {

void require_nonnegative(State v, const char* name) {
  if (v < 0) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

template <Scalar T>
T absolute(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::fabs(v);
  } else {
    return abs(v);
  }
}

}  // namespace

template <Scalar T>
T BandedTransition<T>::row_sum(State i) const {
  T s = diag.at(static_cast<std::size_t>(i));
  if (i > 0) s += sub[static_cast<std::size_t>(i - 1)];
  if (i + 1 < size) s += sup[static_cast<std::size_t>(i)];
  return s;
}

template <Scalar T>
std::vector<T> BandedTransition<T>::left_multiply(std::span<const T> v) const {
  const auto n = static_cast<std::size_t>(size);
  if (v.size() != n) throw std::invalid_argument("left_multiply: vector size mismatch");
  std::vector<T> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    T acc = T(v[k] * diag[k]);
    if (k > 0) acc += v[k - 1] * sup[k - 1];
    if (k + 1 < n) acc += v[k + 1] * sub[k];
    out[k] = std::move(acc);
  }
  return out;
}

template <Scalar T>
BandedTransition<T> build_transition(State size, const params_t<T>& params) {
  if (size < 1) throw std::invalid_argument("build_transition: size must be >= 1");
  BandedTransition<T> m;
  m.size = size;
  m.params = params;
  m.diag.reserve(static_cast<std::size_t>(size));
  for (State n = 0; n < size; ++n) {
    auto k = step_coefficients<T>(n, params);
    if (n > 0) m.sub.push_back(std::move(k.c));
    m.diag.push_back(std::move(k.b));
    if (n + 1 < size) m.sup.push_back(std::move(k.a));
  }
  return m;
}

template <Scalar T>
std::vector<T> matrix_power_row(State t, State i, State j_max, const params_t<T>& params) {
  require_nonnegative(t, "t");
  require_nonnegative(i, "i");
  require_nonnegative(j_max, "j_max");
  const State size = std::max(i, j_max) + t + 1;
  const auto chain = build_transition<T>(size, params);
  std::vector<T> v(static_cast<std::size_t>(size), T(0));
  v[static_cast<std::size_t>(i)] = T(1);
  for (State s = 0; s < t; ++s) v = chain.left_multiply(v);
  v.resize(static_cast<std::size_t>(j_max) + 1);
  return v;
}

BigRational matrix_power_transition(State t, State i, State j, const ModelParams& params) {
  require_nonnegative(j, "j");
  auto row = matrix_power_row<BigRational>(t, i, j, params);
  return row[static_cast<std::size_t>(j)];
}

void ExactKarlinMcGregor::ensure_degree(State n) {
  if (static_cast<State>(q_.size()) > n) return;
  q_ = monomial_table(n, params_);
  for (auto k = static_cast<State>(inv_norms_.size()); k <= n; ++k) {
    inv_norms_.push_back(BigRational(1 / norm_squared<BigRational>(k, params_)));
  }
}

void ExactKarlinMcGregor::ensure_moments(long k_max) {
  if (static_cast<long>(moments_.size()) > k_max) return;
  moments_ = moments(k_max, params_);
}

BigRational ExactKarlinMcGregor::transition(State t, State i, State j) {
  require_nonnegative(t, "t");
  require_nonnegative(i, "i");
  require_nonnegative(j, "j");
  ensure_degree(std::max(i, j));
  ensure_moments(static_cast<long>(t + i + j));

  const auto& qi = q_[static_cast<std::size_t>(i)].coeffs;
  const auto& qj = q_[static_cast<std::size_t>(j)].coeffs;
  // integral of x^t Q_i Q_j W = sum_{a,b} qi[a] qj[b] m_{a+b+t}
  BigRational sum(0);
  BigRational inner;
  for (std::size_t a = 0; a < qi.size(); ++a) {
    inner = 0;
    for (std::size_t b = 0; b < qj.size(); ++b) {
      inner += qj[b] * moments_[a + b + static_cast<std::size_t>(t)];
    }
    sum += qi[a] * inner;
  }
  return BigRational(sum * inv_norms_[static_cast<std::size_t>(j)]);
}

double clamp_probability(double p) {
  if (std::isnan(p)) throw NumericalError("transition probability is NaN");
  if (p < 0.0) {
    if (p >= -kClampSlack) return 0.0;
    throw NumericalError("transition probability " + to_decimal_string(p) + " is below 0 beyond rounding slack");
  }
  if (p > 1.0) {
    if (p <= 1.0 + kClampSlack) return 1.0;
    throw NumericalError("transition probability " + to_decimal_string(p) + " exceeds 1 beyond rounding slack");
  }
  return p;
}

double FloatKarlinMcGregor::raw_transition(State t, State i, State j) const {
  require_nonnegative(t, "t");
  require_nonnegative(i, "i");
  require_nonnegative(j, "j");
  const auto rule = cache_->get(nodes_for(t, i, j), params_);
  const State deg = std::max(i, j);
  long double sum = 0;
  for (std::size_t m = 0; m < rule->extended_nodes.size(); ++m) {
    const long double x = rule->extended_nodes[m];
    const auto q = eval_q_all<long double>(deg, x, params_);
    sum += rule->extended_weights[m] * std::pow(x, static_cast<long double>(t)) * q[static_cast<std::size_t>(i)] *
           q[static_cast<std::size_t>(j)];
  }
  return static_cast<double>(sum / norm_squared<double>(j, params_));
}

double FloatKarlinMcGregor::transition(State t, State i, State j) const {
  if (std::abs(i - j) > t) {
    require_nonnegative(i, "i");
    require_nonnegative(j, "j");
    return 0.0;
  }
  return clamp_probability(raw_transition(t, i, j));
}

template <>
double km_transition<double>(State t, State i, State j, const RealParams& params) {
  return FloatKarlinMcGregor(params).transition(t, i, j);
}

template <>
BigRational km_transition<BigRational>(State t, State i, State j, const ModelParams& params) {
  return ExactKarlinMcGregor(params).transition(t, i, j);
}

Number km_transition(State t, State i, State j, const RealParams& params, Engine engine) {
  if (engine == Engine::exact) return km_transition<BigRational>(t, i, j, params.to_model());
  return km_transition<double>(t, i, j, params);
}

template <>
std::vector<double> transition_row<double>(State t, State i, State j_max, const RealParams& params) {
  require_nonnegative(j_max, "j_max");
  FloatKarlinMcGregor km(params);
  std::vector<double> row;
  for (State j = 0; j <= j_max; ++j) row.push_back(km.transition(t, i, j));
  return row;
}

template <>
std::vector<BigRational> transition_row<BigRational>(State t, State i, State j_max, const ModelParams& params) {
  require_nonnegative(j_max, "j_max");
  ExactKarlinMcGregor km(params);
  std::vector<BigRational> row;
  for (State j = 0; j <= j_max; ++j) row.push_back(km.transition(t, i, j));
  return row;
}

template <Scalar T>
std::vector<T> stationarity_residuals(State size, const params_t<T>& params) {
  if (size < 2) throw std::invalid_argument("stationarity_residual: size must be >= 2");
  std::vector<T> pi;
  std::vector<StepCoefficients<T>> k;
  for (State n = 0; n < size; ++n) {
    pi.push_back(invariant_measure<T>(n, params));
    k.push_back(step_coefficients<T>(n, params));
  }
  std::vector<T> out;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(size); ++i) {
    T flow = T(pi[i] * k[i].b + pi[i + 1] * k[i + 1].c);
    if (i > 0) flow += pi[i - 1] * k[i - 1].a;
    out.push_back(T(absolute<T>(T(flow - pi[i])) / pi[i]));
  }
  return out;
}

template <Scalar T>
T stationarity_residual(State size, const params_t<T>& params) {
  const auto r = stationarity_residuals<T>(size, params);
  return *std::max_element(r.begin(), r.end());
}

std::string to_string(const Number& v) {
  if (const auto* d = std::get_if<double>(&v)) return to_decimal_string(*d);
  return to_fraction_string(std::get<BigRational>(v));
}

template struct BandedTransition<double>;
template struct BandedTransition<BigRational>;
template BandedTransition<double> build_transition<double>(State, const RealParams&);
template BandedTransition<BigRational> build_transition<BigRational>(State, const ModelParams&);
template std::vector<double> matrix_power_row<double>(State, State, State, const RealParams&);
template std::vector<BigRational> matrix_power_row<BigRational>(State, State, State, const ModelParams&);
template std::vector<double> stationarity_residuals<double>(State, const RealParams&);
template std::vector<BigRational> stationarity_residuals<BigRational>(State, const ModelParams&);
template double stationarity_residual<double>(State, const RealParams&);
template BigRational stationarity_residual<BigRational>(State, const ModelParams&);

}  // namespace jacobi_walk
