#pragma once

#include <cstddef>
#include <functional>

namespace passgain {

// Bisection on a sign change of f in [lo, hi]; stops once hi - lo <= tol.
// Throws NumericError if f(lo) and f(hi) share a sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                   int max_iter = 200);

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t max_evals = 1'000'000;
  // Initial partition width. Oscillatory integrands should pass roughly one
  // period here so the first pass already resolves every oscillation.
  double initial_width = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops to `abs_tol`. Throws NumericError when the evaluation
/// budget runs out first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts = {});

struct EvenSearchResult {
  std::size_t n = 0;
  double value = 0.0;
  std::size_t evals = 0;
};

/// Maximises f over even integers in [n_min, n_max].
///
/// Default mode scans a geometric grid (ratio 1.2) and then checks every
/// even n within +-20% of the coarse winner, which finds the global maximum
/// of unimodal sequences. `exhaustive` visits every even n instead.
EvenSearchResult maximize_over_even(const std::function<double(std::size_t)>& f,
                                    std::size_t n_min, std::size_t n_max, bool exhaustive = false);

}  // namespace passgain
