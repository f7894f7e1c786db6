#include "passgain/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "passgain/error.hpp"

namespace passgain {

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                   int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("bisection needs lo < hi");
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw NumericError("bisection bracket does not enclose a sign change");
  }
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > tol) throw NumericError("bisection did not reach tolerance");
  return 0.5 * (lo + hi);
}

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts) {
  QuadratureResult res;
  if (a == b) return res;
  if (!(a < b)) throw std::invalid_argument("integration bounds must satisfy a <= b");

  std::size_t pieces = 1;
  if (opts.initial_width > 0.0) {
    pieces = static_cast<std::size_t>(std::ceil((b - a) / opts.initial_width));
    pieces = std::max<std::size_t>(pieces, 1);
  }
  if (pieces * 15 > opts.max_evals) {
    throw NumericError("quadrature: initial partition exceeds the evaluation budget");
  }

  std::priority_queue<Segment> heap;
  double value = 0.0;
  double error = 0.0;
  const double width = (b - a) / static_cast<double>(pieces);
  for (std::size_t i = 0; i < pieces; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == pieces ? b : lo + width;
    Segment s = gauss_kronrod15(f, lo, hi);
    value += s.value;
    error += s.error;
    heap.push(s);
  }
  res.evals = pieces * 15;

  while (error > opts.abs_tol) {
    if (res.evals + 30 > opts.max_evals) {
      throw NumericError("quadrature did not converge within the evaluation budget");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NumericError("quadrature interval collapsed below machine resolution");
    }
    const Segment left = gauss_kronrod15(f, worst.a, mid);
    const Segment right = gauss_kronrod15(f, mid, worst.b);
    res.evals += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the pieces so the running updates leave no drift.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  res.value = value;
  res.abs_error = error;
  return res;
}

EvenSearchResult maximize_over_even(const std::function<double(std::size_t)>& f,
                                    std::size_t n_min, std::size_t n_max, bool exhaustive) {
  n_min = std::max<std::size_t>(2, n_min + (n_min % 2));
  n_max -= n_max % 2;
  if (n_min > n_max) throw std::invalid_argument("empty even search range");

  EvenSearchResult best{n_min, f(n_min), 1};
  auto visit = [&](std::size_t n) {
    const double v = f(n);
    ++best.evals;
    if (v > best.value) {
      best.value = v;
      best.n = n;
    }
  };

  if (exhaustive) {
    for (std::size_t n = n_min + 2; n <= n_max; n += 2) visit(n);
    return best;
  }

  std::set<std::size_t> coarse;
  for (double g = static_cast<double>(n_min); g <= static_cast<double>(n_max); g *= 1.2) {
    auto n = static_cast<std::size_t>(std::llround(g / 2.0)) * 2;
    coarse.insert(std::clamp(n, n_min, n_max));
  }
  coarse.insert(n_max);
  for (const std::size_t n : coarse) {
    if (n != n_min) visit(n);
  }

  const double c = static_cast<double>(best.n);
  auto lo = static_cast<std::size_t>(std::floor(c * 0.8));
  auto hi = static_cast<std::size_t>(std::ceil(c * 1.2));
  lo = std::max(n_min, lo + (lo % 2));
  hi = std::min(n_max, hi - (hi % 2));
  for (std::size_t n = lo; n <= hi; n += 2) {
    if (!coarse.contains(n) && n != n_min) visit(n);
  }
  return best;
}

}  // namespace passgain
