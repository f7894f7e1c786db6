#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "passgain/channel.hpp"
#include "passgain/coupling.hpp"
#include "passgain/error.hpp"

using namespace passgain;

TEST_SUITE("linalg") {
  TEST_CASE("Jacobi reconstructs random symmetric matrices") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
      Matrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
      const auto e = jacobi_eigen(m);
      for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k] >= e.values[k - 1]);

      Matrix diag(n);
      for (std::size_t k = 0; k < n; ++k) diag(k, k) = e.values[k];
      const Matrix back = e.vectors * diag * e.vectors.transposed();
      CHECK(frobenius_distance(back, m) < 1e-10);
      CHECK(frobenius_distance(e.vectors.transposed() * e.vectors, Matrix::identity(n)) < 1e-10);
    }
  }

  TEST_CASE("known spectrum") {
    Matrix m(2);
    m(0, 0) = 2.0;
    m(0, 1) = m(1, 0) = 1.0;
    m(1, 1) = 2.0;
    const auto e = jacobi_eigen(m);
    CHECK(e.values[0] == doctest::Approx(1.0));
    CHECK(e.values[1] == doctest::Approx(3.0));
  }

  TEST_CASE("non-symmetric input is rejected") {
    Matrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(jacobi_eigen(m), NumericError);
  }
}

TEST_SUITE("coupling") {
  TEST_CASE("j0 near zero and at multiples of pi") {
    CHECK(sinc_j0(0.0) == 1.0);
    CHECK(sinc_j0(5e-5) == doctest::Approx(std::sin(5e-5) / 5e-5).epsilon(1e-15));
    CHECK(sinc_j0(2e-4) == doctest::Approx(std::sin(2e-4) / 2e-4).epsilon(1e-15));
    CHECK(std::abs(sinc_j0(oracle::pi)) < 1e-15);
    CHECK(sinc_j0(-1.3) == sinc_j0(1.3));
  }

  TEST_CASE("coupling matrix structure") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    for (double x : {0.05, 0.3, 0.5, 0.9}) {
      const auto c = coupling_matrix(8, x * k.lambda, k);
      const Matrix m = c.dense();
      for (std::size_t i = 0; i < 8; ++i) {
        CHECK(m(i, i) == 1.0);
        for (std::size_t j = 0; j < 8; ++j) {
          CHECK(m(i, j) == m(j, i));
          const double dx = x * k.lambda * std::abs(double(i) - double(j));
          const double arg = 2.0 * oracle::pi * dx / k.lambda;
          const double expect = dx == 0.0 ? 1.0 : std::sin(arg) / arg;
          CHECK(m(i, j) == doctest::Approx(expect).epsilon(1e-12));
        }
      }
      // Positive semidefinite up to rounding.
      CHECK(c.spectrum().values.front() > -1e-10);
    }
    CHECK_THROWS_AS(coupling_matrix(3, 0.1, k), std::invalid_argument);
    CHECK_THROWS_AS(coupling_matrix(4, 0.0, k), std::invalid_argument);
  }

  TEST_CASE("half-wavelength spacing decouples the antennas") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    const Matrix m = coupling_matrix(10, k.lambda / 2.0, k).dense();
    CHECK(frobenius_distance(m, Matrix::identity(10)) < 1e-14);
  }

  TEST_CASE("inverse square root squares back to the inverse") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    for (double x : {0.2, 0.35, 0.7}) {
      const Matrix c = coupling_matrix(6, x * k.lambda, k).dense();
      const auto r = inv_sqrt(c);
      if (r.floored != 0) continue;
      const Matrix check = r.value * c * r.value;
      CHECK(frobenius_distance(check, Matrix::identity(6)) < 1e-8);
    }
  }

  TEST_CASE("dense coupling triggers the eigenvalue floor") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    const auto r = inv_sqrt(coupling_matrix(16, 1e-3 * k.lambda, k).dense());
    CHECK(r.floored > 0);
  }

  TEST_CASE("two-antenna coupled gain matches the closed form") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    for (double x = 0.01; x <= 1.0; x += 0.0137) {
      const double delta = x * k.lambda;
      const auto g = gain_mc(2, delta, cfg, k);
      CHECK(g.floored == 0);
      CHECK(g.gain == doctest::Approx(gain_mc_two_closed(delta, cfg, k)).epsilon(1e-9));
    }
    CHECK(gain_mc(2, k.lambda / 2.0, cfg, k).gain ==
          doctest::Approx(6.55465087117e-8).epsilon(1e-10));
    CHECK(gain_mc_two_closed(k.lambda / 2.0, cfg, k) ==
          doctest::Approx(6.55465087117e-8).epsilon(1e-10));
  }

  TEST_CASE("collapsed antennas act as one") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    const double single = k.eta / (cfg.d * cfg.d);
    CHECK(gain_mc_two_closed(1e-6 * k.lambda, cfg, k) / single ==
          doctest::Approx(0.99999999999).epsilon(1e-9));
    CHECK(gain_mc_two_closed(0.0, cfg, k) == doctest::Approx(single).epsilon(1e-15));
    CHECK(gain_mc(2, 1e-4 * k.lambda, cfg, k).gain == doctest::Approx(single).epsilon(1e-6));
  }

  TEST_CASE("coupling-free gain is recovered where j0 vanishes") {
    // At integer multiples of lambda / 2 all off-diagonal entries are zero.
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    for (std::size_t n : {2u, 4u, 8u}) {
      for (double x : {0.5, 1.0}) {
        const auto layout = symmetric_uniform_layout(cfg, n, x * k.lambda);
        CHECK(gain_mc(n, x * k.lambda, cfg, k).gain ==
              doctest::Approx(array_gain_exact(layout, cfg, k)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("f_mc shape") {
    CHECK(f_mc(0.36, 2.0) == doctest::Approx(0.406309342707 / (1.0 + sinc_j0(0.72 * oracle::pi)))
                                 .epsilon(1e-12));
    CHECK(f_mc(0.0, 1.44) == doctest::Approx(0.5));
    const auto best = oracle::grid_max([](double x) { return f_mc(x, 1.44); }, 0.0, 1.0, 1e-4);
    CHECK(best.x == doctest::Approx(0.699).epsilon(0.002));
    CHECK(best.y == doctest::Approx(1.27513).epsilon(1e-5));
    // The best spacing is not the half-wavelength choice.
    CHECK(f_mc(0.5, 1.44) < best.y);
    CHECK_THROWS_AS(f_mc(-0.1, 1.44), std::invalid_argument);
  }

  TEST_CASE("approximate two-antenna form drops only the offset term") {
    const SystemConfig cfg;
    const auto k = derive_constants(cfg);
    for (double x : {0.1, 0.5, 0.7}) {
      const double delta = x * k.lambda;
      const double ratio = gain_mc_two_closed(delta, cfg, k) / gain_mc_two_approx(delta, cfg, k);
      CHECK(ratio == doctest::Approx(cfg.d * cfg.d / (cfg.d * cfg.d + delta * delta / 4.0))
                         .epsilon(1e-12));
    }
  }
}
