#include "jacobi_walk/tridiagonal_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jacobi_walk {

namespace {

template <class Real>
BasicTridiagonalEigen<Real> ql_implicit(std::span<const Real> diag, std::span<const Real> offdiag, Real tol,
                                        int max_iterations) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n) {
    throw std::invalid_argument("symmetric_tridiagonal_eigen: off-diagonal must have size n - 1");
  }

  std::vector<Real> d(diag.begin(), diag.end());
  std::vector<Real> e(n, Real(0));
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  std::vector<Real> z(n, Real(0));
  z[0] = Real(1);

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Real dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= tol * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_iterations) {
        throw NumericalError("tridiagonal eigensolver: no convergence for eigenvalue " + std::to_string(l) +
                             " within " + std::to_string(max_iterations) + " iterations");
      }

      // Wilkinson-type shift from the leading 2x2 block.
      Real g = (d[l + 1] - d[l]) / (Real(2) * e[l]);
      Real r = std::hypot(g, Real(1));
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      Real s = 1;
      Real c = 1;
      Real p = 0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        Real f = s * e[i];
        const Real b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == Real(0)) {
          d[i + 1] -= p;
          e[m] = 0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + Real(2) * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;

        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  BasicTridiagonalEigen<Real> out;
  out.values.reserve(n);
  out.first_components.reserve(n);
  for (auto k : order) {
    out.values.push_back(d[k]);
    out.first_components.push_back(z[k]);
  }
  return out;
}

}  // namespace

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag,
                                             double tol, int max_iterations) {
  return ql_implicit(diag, offdiag, tol, max_iterations);
}

BasicTridiagonalEigen<long double> symmetric_tridiagonal_eigen(std::span<const long double> diag,
                                                               std::span<const long double> offdiag,
                                                               long double tol, int max_iterations) {
  return ql_implicit(diag, offdiag, tol, max_iterations);
}

}  // namespace jacobi_walk
