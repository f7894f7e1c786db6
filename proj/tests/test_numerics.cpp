#include <cmath>

#include "doctest.h"
#include "passgain/error.hpp"
#include "passgain/numerics.hpp"

using namespace passgain;

TEST_SUITE("numerics") {
  TEST_CASE("bisection finds simple roots") {
    CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(bisect_root([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-10) ==
          doctest::Approx(1.5707963268).epsilon(1e-10));
    CHECK(bisect_root([](double x) { return x; }, 0.0, 1.0, 1e-9) == 0.0);
  }

  TEST_CASE("bisection without a sign change is a numeric error") {
    CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-9),
                    NumericError);
    CHECK_THROWS_AS(bisect_root([](double x) { return x; }, 1.0, -1.0, 1e-9),
                    std::invalid_argument);
  }

  TEST_CASE("quadrature on smooth integrands") {
    const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.abs_error <= 1e-10);

    const double dp = 0.5;
    const double upper = 3.0;
    const auto b = integrate_adaptive(
        [dp](double x) { return 2.0 / std::sqrt(1.0 + dp * dp * x * x); }, 0.0, upper);
    CHECK(b.value == doctest::Approx(2.0 * std::asinh(dp * upper) / dp).epsilon(1e-12));
  }

  TEST_CASE("quadrature resolves fast oscillation with a period-sized partition") {
    const double w = 1760.0;
    QuadratureOptions opts;
    opts.initial_width = 2.0 * M_PI / w;
    const auto r = integrate_adaptive([w](double x) { return std::cos(w * x); }, 0.0, 1.3, opts);
    CHECK(std::abs(r.value - std::sin(w * 1.3) / w) < 1e-10);
  }

  TEST_CASE("quadrature budget exhaustion is reported") {
    QuadratureOptions opts;
    opts.max_evals = 60;
    opts.abs_tol = 1e-14;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::cos(500.0 * x); }, 0.0, 10.0,
                                       opts),
                    NumericError);
    CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
  }

  TEST_CASE("even search agrees with exhaustive scan on unimodal sequences") {
    for (double peak : {2.0, 17.0, 380.0, 3721.0, 9999.0}) {
      auto f = [peak](std::size_t n) {
        const double x = static_cast<double>(n);
        return -std::log(x / peak) * std::log(x / peak);
      };
      const auto hybrid = maximize_over_even(f, 2, 10000);
      const auto full = maximize_over_even(f, 2, 10000, true);
      CHECK(hybrid.n == full.n);
      CHECK(hybrid.n % 2 == 0);
      CHECK(hybrid.evals < full.evals);
    }
  }

  TEST_CASE("even search bounds") {
    auto f = [](std::size_t n) { return static_cast<double>(n); };
    CHECK(maximize_over_even(f, 3, 9).n == 8);
    CHECK(maximize_over_even(f, 2, 2).n == 2);
    CHECK_THROWS_AS(maximize_over_even(f, 10, 4), std::invalid_argument);
  }
}
