#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qfilt/errors.hpp"
#include "qfilt/measurement.hpp"

using namespace qfilt;

TEST_CASE("rho0 limits and quadrature") {
  CHECK(compute_rho0(0.5, 0.0) == 1.0);
  CHECK(compute_rho0(0.5, 1e-14) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(compute_rho0(0.5, 1e6) < 1e-3);
  CHECK(std::abs(compute_rho0(0.5, 0.01) - oracles::rho0_quadrature(0.5, 0.01)) <= 1e-8);
  CHECK_THROWS_AS(compute_rho0(0.0, 0.1), InvalidModelError);
  CHECK_THROWS_AS(compute_rho0(0.5, -1.0), InvalidModelError);

  SUBCASE("random draws stay in [0, 1] and agree with quadrature") {
    SeededRng rng(8, 0);
    for (int i = 0; i < 50; ++i) {
      const double b = rng.uniform(0.1, 2.0);
      const double s = std::pow(10.0, rng.uniform(-9.0, 0.0));
      const double r = compute_rho0(b, s);
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
      CHECK(std::abs(r - oracles::rho0_quadrature(b, s)) <= 1e-8);
    }
  }
  SUBCASE("decreasing in sigma_v") {
    double prev = 1.0;
    for (double s : {1e-6, 1e-4, 1e-2, 1e-1, 1.0, 10.0}) {
      const double r = compute_rho0(0.5, s);
      CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("measurement model") {
  MeasurementModel m(0.01, 0.5);
  CHECK(m.rho0() == compute_rho0(0.5, 0.01));
  m.set_sigma_v(0.2);
  CHECK(std::abs(m.rho0() - compute_rho0(0.5, 0.2)) <= 1e-12);
  m.set_bound_b(1.0);
  CHECK(std::abs(m.rho0() - compute_rho0(1.0, 0.2)) <= 1e-12);
  CHECK_FALSE(m.model_failure_warning());
  m.set_sigma_v(0.4);
  CHECK(m.model_failure_warning());
  CHECK_NOTHROW(MeasurementModel(0.0, -0.5, 0.5));
  CHECK_THROWS_AS(MeasurementModel(0.0, -0.3, 0.5), InvalidModelError);
}

TEST_CASE("likelihood") {
  const MeasurementModel ideal;
  CHECK(likelihood(1, 0.0, ideal) == 0.5);
  CHECK(likelihood(1, 0.5, ideal) == 1.0);
  CHECK(likelihood(0, 0.5, ideal) == 0.0);

  const MeasurementModel noisy(0.05, 0.5);
  SeededRng rng(2, 0);
  for (int i = 0; i < 1000; ++i) {
    const double s = rng.uniform(-0.5, 0.5);
    CHECK(std::abs(likelihood(0, s, noisy) + likelihood(1, s, noisy) - noisy.rho0()) <=
          4 * std::numeric_limits<double>::epsilon());
  }
  SUBCASE("monotone with Lipschitz slope rho0") {
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double s = -0.5 + i * 0.01;
      const double g = likelihood(1, s, noisy);
      CHECK(g > prev);
      prev = g;
    }
    const double h = 1e-6;
    CHECK(std::abs((likelihood(1, 0.1 + h, noisy) - likelihood(1, 0.1, noisy)) / h - noisy.rho0()) < 1e-6);
  }
}

TEST_CASE("sample_outcome") {
  SeededRng rng(4, 0);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(sample_outcome(0.0, rng) == 0);
    REQUIRE(sample_outcome(1.0, rng) == 1);
  }
  const int n = 100000;
  double half = 0.0, born = 0.0;
  for (int i = 0; i < n; ++i) {
    half += sample_outcome(0.5, rng);
    born += sample_outcome(0.5 + ramsey_forward(std::numbers::pi / 3.0), rng);
  }
  CHECK(std::abs(half / n - 0.5) < 4.0 / std::sqrt(n) * 0.5);
  CHECK(std::abs(born / n - 0.75) < 4.0 * std::sqrt(0.75 * 0.25 / n));
}

TEST_CASE("Ramsey signal map") {
  CHECK(ramsey_forward(0.0) == 0.5);
  CHECK(ramsey_forward(std::numbers::pi) == -0.5);
  CHECK(std::abs(ramsey_forward(std::numbers::pi / 2)) < 1e-16);
  CHECK(ramsey_inverse(0.0) == doctest::Approx(std::numbers::pi / 2));
  CHECK(std::abs(ramsey_inverse(ramsey_forward(1.234)) - 1.234) < 1e-10);
  for (int i = 1; i < 100; ++i) {
    const double f = std::numbers::pi * i / 100.0;
    REQUIRE(std::abs(ramsey_inverse(ramsey_forward(f)) - f) < 1e-10);
  }
  const Clamped slightly = ramsey_inverse_checked(0.5 + 1e-12);
  CHECK_FALSE(slightly.out_of_range);
  CHECK(slightly.value == 0.0);
  const Clamped far = ramsey_inverse_checked(-0.6);
  CHECK(far.out_of_range);
  CHECK(far.value == doctest::Approx(std::numbers::pi));

  const SignalMap map = SignalMap::ramsey();
  CHECK(map.domain_min == 0.0);
  CHECK(map.domain_max == doctest::Approx(std::numbers::pi));
  CHECK(map.forward(0.3) == ramsey_forward(0.3));
}
