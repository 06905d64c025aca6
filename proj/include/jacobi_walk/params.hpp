#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacobi_walk {

/// Index of a state of the walk (number of blue balls in the urn).
using State = std::int64_t;

/// Arithmetic engine selector used at dispatch boundaries (CLI, row solvers).
enum class Engine { floating, exact };

inline const char* to_string(Engine e) { return e == Engine::exact ? "exact" : "float"; }

/// Nonnegative integer parameters (alpha, beta) of the walk and of the
/// weight x^alpha (1 - x)^beta.
struct ModelParams {
  int alpha = 0;
  int beta = 0;

  ModelParams() = default;
  ModelParams(int a, int b) : alpha(a), beta(b) {
    if (a < 0 || b < 0) {
      throw std::invalid_argument("ModelParams: alpha and beta must be nonnegative integers, got (" +
                                  std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Real Jacobi parameters, accepted by the floating-point engine only.
/// Any alpha, beta > -1 gives a valid weight; the urn interpretation needs
/// integers.
struct RealParams {
  double alpha = 0.0;
  double beta = 0.0;

  RealParams() = default;
  RealParams(double a, double b) : alpha(a), beta(b) {
    if (!(a > -1.0) || !(b > -1.0) || !std::isfinite(a) || !std::isfinite(b)) {
      throw std::invalid_argument("RealParams: alpha and beta must be finite and > -1");
    }
  }
  // NOLINTNEXTLINE(google-explicit-constructor)
  RealParams(const ModelParams& p) : alpha(p.alpha), beta(p.beta) {}

  bool is_integral() const {
    return alpha >= 0 && beta >= 0 && alpha == std::floor(alpha) && beta == std::floor(beta) &&
           alpha <= 1e9 && beta <= 1e9;
  }

  /// Throws std::invalid_argument unless both parameters are nonnegative integers.
  ModelParams to_model() const {
    if (!is_integral()) {
      throw std::invalid_argument("exact engine requires nonnegative integer alpha and beta");
    }
    return ModelParams(static_cast<int>(alpha), static_cast<int>(beta));
  }

  friend bool operator==(const RealParams&, const RealParams&) = default;
};

}  // namespace jacobi_walk
