#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "passgain/channel.hpp"
#include "passgain/error.hpp"
#include "passgain/gain.hpp"
#include "passgain/refine.hpp"

using namespace passgain;

namespace {

// Solve path(delta + v) = target by bisection on v in [0, hi].
double bisect_shift(double delta, double target, double sign, const oracle::Scene& s,
                    double hi) {
  auto f = [&](double v) {
    const double x = delta + v;
    return std::sqrt(s.d * s.d + x * x) + sign * s.n_eff * x - target;
  };
  return oracle::bisect(f, 0.0, hi, 1e-15);
}

double wrapped(double phase) {
  const double two_pi = 2.0 * kPi;
  double r = std::fmod(phase, two_pi);
  if (r > kPi) r -= two_pi;
  if (r < -kPi) r += two_pi;
  return r;
}

}  // namespace

TEST_SUITE("refine") {
  TEST_CASE("first right-side shift at a quarter wavelength") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    const double delta = k.lambda / 4.0;
    CHECK(combined_path(delta, Side::right, cfg) / k.lambda ==
          doctest::Approx(280.5539).epsilon(1e-6));
    const double t = target_path(delta, Side::right, cfg, k);
    CHECK(t == doctest::Approx(3.0086314535).epsilon(1e-10));
    CHECK(std::round(t / k.lambda) == 281.0);

    const double v = refine_shift(delta, Side::right, cfg, k);
    CHECK(v == doctest::Approx(3.31319389199e-3).epsilon(1e-9));
    oracle::Scene s;
    CHECK(std::abs(v - bisect_shift(delta, t, 1.0, s, k.lambda)) < 1e-12);
  }

  TEST_CASE("unit-index branch matches a hand-solved case") {
    SystemConfig cfg;
    cfg.f_c = 29.9792458e9;  // lambda = 0.01 m exactly
    cfg.n_eff = 1.0;
    cfg.d = 3.0;
    const auto k = derive_constants(cfg);
    CHECK(k.lambda == doctest::Approx(0.01).epsilon(1e-15));
    const double delta = 0.005;
    const double t = target_path(delta, Side::right, cfg, k);
    CHECK(t == doctest::Approx(3.01).epsilon(1e-12));
    const double v = refine_shift(delta, Side::right, cfg, k);
    CHECK(v == doctest::Approx((3.01 * 3.01 - 9.0) / (2.0 * 3.01) - delta).epsilon(1e-12));
    CHECK(v == doctest::Approx(0.004983).epsilon(1e-3));
  }

  TEST_CASE("closed-form shifts agree with bisection on both sides") {
    for (double n_eff : {1.0, 1.0 + 1e-7, 1.2, 1.44, 2.5}) {
      for (double delta_p : {0.5, 1.0, 2.0}) {
        SystemConfig cfg;
        cfg.n_eff = n_eff;
        cfg.delta_p = delta_p;
        const auto k = derive_constants(cfg);
        oracle::Scene s;
        s.n_eff = n_eff;
        for (double delta : {0.001, 0.37, 2.9, 14.0}) {
          const double tr = target_path(delta, Side::right, cfg, k);
          CHECK(std::abs(refine_shift(delta, Side::right, cfg, k) -
                         bisect_shift(delta, tr, 1.0, s, k.lambda * 2.0)) < 1e-10);
          if (n_eff > 1.0 + 1e-9 || delta < 1.0) {
            const double tl = target_path(delta, Side::left, cfg, k);
            const double hi = n_eff > 1.0 + 1e-9 ? k.lambda / (n_eff - 1.0) * 1.01 : 50.0;
            CHECK(std::abs(refine_shift(delta, Side::left, cfg, k) -
                           bisect_shift(delta, tl, -1.0, s, hi)) < 1e-10);
          }
        }
      }
    }
  }

  TEST_CASE("targets are multiples of lambda in the right direction") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    for (double delta = 0.0; delta < 5.0; delta += 0.0371) {
      const double tr = target_path(delta, Side::right, cfg, k);
      const double tl = target_path(delta, Side::left, cfg, k);
      CHECK(std::abs(tr / k.lambda - std::round(tr / k.lambda)) < 1e-9);
      CHECK(std::abs(tl / k.lambda - std::round(tl / k.lambda)) < 1e-9);
      CHECK(tr >= combined_path(delta, Side::right, cfg) - 1e-12);
      CHECK(tl <= combined_path(delta, Side::left, cfg) + 1e-12);
    }
  }

  TEST_CASE("an offset already on a multiple is left in place") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    const double delta = k.lambda / 4.0;
    const double moved = delta + refine_shift(delta, Side::right, cfg, k);
    CHECK(refine_shift(moved, Side::right, cfg, k) == doctest::Approx(0.0).epsilon(1e-15));
  }

  TEST_CASE("unit index cannot reach a left-side multiple far out") {
    SystemConfig cfg;
    cfg.n_eff = 1.0;
    const auto k = derive_constants(cfg);
    // path - delta decays towards zero, so the floor multiple is eventually zero.
    CHECK_THROWS_AS(refine_shift(1e6, Side::left, cfg, k), NumericError);
  }

  TEST_CASE("refined layouts are coherent, spaced and bounded") {
    for (double delta_p : {0.5, 1.0, 2.0}) {
      SystemConfig cfg;
      cfg.delta_p = delta_p;
      cfg.x_u = 1.7;
      const auto k = derive_constants(cfg);
      const double step = delta_p * k.lambda;
      for (std::size_t n : {2u, 4u, 10u, 64u, 500u}) {
        const auto r = build_refined_layout(n, cfg, k);
        const auto xs = r.layout.positions();
        REQUIRE(xs.size() == n);
        for (std::size_t i = 1; i < n; ++i) CHECK(xs[i] - xs[i - 1] >= step - 1e-12);

        for (std::size_t i = 0; i < n / 2; ++i) {
          CHECK(r.right.shifts[i] >= 0.0);
          CHECK(r.right.shifts[i] <= k.lambda);
          CHECK(r.left.shifts[i] >= 0.0);
          CHECK(r.left.shifts[i] <= k.lambda / (cfg.n_eff - 1.0) + 1e-12);
          const double pr = combined_path(r.right.offsets[i], Side::right, cfg);
          const double pl = combined_path(r.left.offsets[i], Side::left, cfg);
          CHECK(std::abs(pr - r.right.targets[i]) <= 1e-9);
          CHECK(std::abs(pl - r.left.targets[i]) <= 1e-9);
        }

        // Every antenna sees the same received phase modulo 2 pi.
        const auto ch = compute_channel(r.layout, cfg, k);
        const double ref = std::arg(ch.h[0] * std::exp(cplx(0.0, -ch.phi[0])));
        for (std::size_t i = 1; i < n; ++i) {
          const double ph = std::arg(ch.h[i] * std::exp(cplx(0.0, -ch.phi[i])));
          CHECK(std::abs(wrapped(ph - ref)) < 1e-6);
        }

        const double g = array_gain_exact(r.layout, cfg, k);
        const double bound = coherent_gain_bound(r.layout, cfg, k);
        CHECK(g >= 0.90 * bound);
        CHECK(g <= bound * (1 + 1e-12));
        CHECK(g >= gain_uniform(n, cfg, k));
      }
    }
  }

  TEST_CASE("refined gain reaches its bound with waveguide loss") {
    SystemConfig cfg;
    cfg.alpha_wg = 0.08;
    cfg.x_0 = -30.0;
    const auto k = derive_constants(cfg);
    for (std::size_t n : {2u, 40u, 400u}) {
      const auto r = build_refined_layout(n, cfg, k);
      const double g = array_gain_exact(r.layout, cfg, k);
      CHECK(g == doctest::Approx(coherent_gain_bound(r.layout, cfg, k)).epsilon(1e-9));
    }
  }

  TEST_CASE("invalid counts") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    CHECK_THROWS_AS(build_refined_layout(0, cfg, k), std::invalid_argument);
    CHECK_THROWS_AS(build_refined_layout(5, cfg, k), std::invalid_argument);
    CHECK_THROWS_AS(target_path(-1.0, Side::right, cfg, k), std::invalid_argument);
  }
}
