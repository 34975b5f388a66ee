#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qfilt/errors.hpp"
#include "qfilt/simworld.hpp"

using namespace qfilt;

TEST_CASE("geometry") {
  const Geometry chain = make_geometry(GeometryKind::chain_1d, 3, 1.0);
  CHECK(chain.distance(0, 1) == 1.0);
  CHECK(chain.distance(0, 2) == 2.0);
  CHECK(chain.distance(2, 0) == 2.0);
  CHECK(chain.min_separation() == 1.0);

  const Geometry g4 = make_geometry(GeometryKind::grid_2d, 4, 1.0);
  CHECK(g4.max_separation() == doctest::Approx(std::sqrt(2.0)));

  const Geometry g25 = make_geometry(GeometryKind::grid_2d, 25, 1.0);
  CHECK(g25.max_separation() == doctest::Approx(4.0 * std::sqrt(2.0)));
  CHECK(g25.coordinates()[7][0] == 2.0);
  CHECK(g25.coordinates()[7][1] == 1.0);

  CHECK_THROWS_AS(make_geometry(GeometryKind::grid_2d, 10, 1.0), ConfigError);
  CHECK_THROWS_AS(make_geometry(GeometryKind::chain_1d, 0, 1.0), ConfigError);
  CHECK_THROWS_AS(make_geometry(GeometryKind::chain_1d, 3, 0.0), ConfigError);

  SUBCASE("metric axioms") {
    for (const Geometry& g : {chain, g25, make_geometry(GeometryKind::chain_1d, 7, 0.5)}) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(g.distance(i, i) == 0.0);
        for (std::size_t j = 0; j < g.size(); ++j) {
          REQUIRE(g.distance(i, j) == g.distance(j, i));
          for (std::size_t k = 0; k < g.size(); ++k) {
            REQUIRE(g.distance(i, k) <= g.distance(i, j) + g.distance(j, k) + 1e-12);
          }
        }
      }
    }
  }
  SUBCASE("kind names round-trip") {
    CHECK(parse_geometry_kind(to_string(GeometryKind::grid_2d)) == GeometryKind::grid_2d);
    CHECK(parse_field_kind(to_string(FieldKind::gaussian_2d)) == FieldKind::gaussian_2d);
    CHECK_THROWS_AS(parse_field_kind("spiral"), ConfigError);
  }
}

TEST_CASE("true fields") {
  const double lo = 0.25 * std::numbers::pi;
  const double hi = 0.75 * std::numbers::pi;

  const auto chain = make_geometry(GeometryKind::chain_1d, 25);
  const TrueField lin = make_field(FieldKind::linear_1d, chain);
  CHECK(lin.values.front() == doctest::Approx(lo).epsilon(1e-15));
  CHECK(lin.values.back() == doctest::Approx(hi).epsilon(1e-15));
  for (std::size_t i = 1; i < lin.values.size(); ++i) CHECK(lin.values[i] > lin.values[i - 1]);

  for (std::size_t d : {9, 16, 25}) {
    const auto grid = make_geometry(GeometryKind::grid_2d, d);
    const TrueField sq = make_field(FieldKind::square_2d, grid);
    CHECK(sq.values.front() == lo);
    CHECK(sq.values.back() == lo);
    CHECK(std::count(sq.values.begin(), sq.values.end(), hi) > 0);
    for (double v : sq.values) CHECK((v == lo || v == hi));
  }
  const auto g25 = make_geometry(GeometryKind::grid_2d, 25);
  const TrueField sq25 = make_field(FieldKind::square_2d, g25);
  CHECK(std::count(sq25.values.begin(), sq25.values.end(), hi) == 9);
  CHECK(sq25.values[12] == hi);

  const TrueField gauss = make_field(FieldKind::gaussian_2d, g25);
  CHECK(gauss.values[12] == doctest::Approx(hi));
  const double sigma_g = 2.0 / 2.0;
  for (std::size_t k = 0; k < 25; ++k) {
    const double dx = g25.coordinates()[k][0] - 2.0;
    const double dy = g25.coordinates()[k][1] - 2.0;
    const double expected = lo + 0.5 * std::numbers::pi * std::exp(-(dx * dx + dy * dy) / (2 * sigma_g * sigma_g));
    CHECK(gauss.values[k] == doctest::Approx(expected).epsilon(1e-14));
    CHECK(gauss.values[k] >= lo - 1e-9);
    CHECK(gauss.values[k] <= hi + 1e-9);
  }
  CHECK(gauss.values[13] < gauss.values[12]);
  CHECK(gauss.values[14] < gauss.values[13]);

  CHECK_THROWS_AS(make_field(FieldKind::square_2d, chain), ConfigError);
  CHECK_THROWS_AS(make_field(FieldKind::linear_1d, g25), ConfigError);
}

TEST_CASE("measurement oracle") {
  const auto chain = make_geometry(GeometryKind::chain_1d, 3);
  TrueField field{FieldKind::linear_1d, {std::numbers::pi / 2, 0.0, 0.25 * std::numbers::pi}};
  const MeasurementModel model;
  SeededRng rng(12, 0);
  for (int i = 0; i < 1000; ++i) REQUIRE(oracle_measure(field, 1, model, false, rng) == 1);
  const int n = 100000;
  double half = 0.0, quarter = 0.0;
  for (int i = 0; i < n; ++i) {
    half += oracle_measure(field, 0, model, false, rng);
    quarter += oracle_measure(field, 2, model, false, rng);
  }
  const double p = 0.5 * std::cos(0.25 * std::numbers::pi) + 0.5;
  CHECK(std::abs(half / n - 0.5) < 4.0 * std::sqrt(0.25 / n));
  CHECK(std::abs(quarter / n - p) < 4.0 * std::sqrt(p * (1 - p) / n));
  CHECK(p == doctest::Approx(0.8536).epsilon(1e-4));

  SUBCASE("symmetric truncated noise leaves the mean unchanged") {
    const MeasurementModel noisy(0.01, 0.5);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += oracle_measure(field, 2, noisy, true, rng);
    CHECK(std::abs(mean / n - p) < 4.0 * std::sqrt(0.25 / n));
  }
  CHECK_THROWS(oracle_measure(field, 3, model, false, rng));
}
