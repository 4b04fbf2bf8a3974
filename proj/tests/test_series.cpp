#include <random>

#include "doctest.h"

#include "bts/recurrences.hpp"
#include "bts/series.hpp"

using namespace bts;

namespace {

SeriesTrunc series(std::initializer_list<Rational> v) { return SeriesTrunc{v}; }

// Reciprocal by plain back-substitution, one coefficient at a time.
SeriesTrunc reciprocal_by_substitution(const SeriesTrunc& a, std::size_t order) {
  SeriesTrunc b;
  b.coeffs.assign(order, Rational(0));
  b.coeffs[0] = 1 / a.coeffs[0];
  for (std::size_t i = 1; i < order; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i && j < a.order(); ++j) {
      acc += a.coeffs[j] * b.coeffs[i - j];
    }
    b.coeffs[i] = -acc / a.coeffs[0];
  }
  return b;
}

SeriesTrunc random_series(std::mt19937_64& rng, std::size_t len) {
  SeriesTrunc a;
  for (std::size_t i = 0; i < len; ++i) {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 9) + 1;
    a.coeffs.push_back(make_rational(num, den));
  }
  if (sgn(a.coeffs[0]) == 0) a.coeffs[0] = 3;
  return a;
}

}  // namespace

TEST_CASE("reciprocal examples") {
  CHECK(series_reciprocal(series({1}), 1) == series({1}));
  CHECK(series_reciprocal(series({1, -1}), 4) == series({1, 1, 1, 1}));
  CHECK(series_reciprocal(series({1, Rational(1, 2), Rational(1, 6)}), 3) ==
        series({1, Rational(-1, 2), Rational(1, 12)}));
  CHECK(series_reciprocal(series({2}), 3) == series({Rational(1, 2), 0, 0}));
}

TEST_CASE("reciprocal error paths") {
  CHECK_THROWS_AS(series_reciprocal(series({0, 1}), 3), DomainError);
  CHECK_THROWS_AS(series_reciprocal(series({1, 1}), 0), DomainError);
  CHECK_THROWS_AS(series_reciprocal(SeriesTrunc{}, 2), DomainError);
}

TEST_CASE("a * reciprocal(a) == 1 mod z^order") {
  std::mt19937_64 rng(5);
  for (std::size_t order : {1u, 2u, 3u, 7u, 16u, 33u}) {
    const SeriesTrunc a = random_series(rng, 1 + rng() % 20);
    const SeriesTrunc b = series_reciprocal(a, order);
    REQUIRE(b.order() == order);
    SeriesTrunc one;
    one.coeffs.assign(order, Rational(0));
    one.coeffs[0] = 1;
    CHECK(multiply_truncated(a, b, order) == one);
  }
}

TEST_CASE("Newton iteration equals back-substitution") {
  std::mt19937_64 rng(17);
  for (std::size_t order = 1; order <= 64; order += 9) {
    const SeriesTrunc a = random_series(rng, order);
    CHECK(series_reciprocal(a, order) == reciprocal_by_substitution(a, order));
  }
}

TEST_CASE("multiply_truncated") {
  CHECK(multiply_truncated(series({1, 1}), series({1, 1}), 3) ==
        series({1, 2, 1}));
  CHECK(multiply_truncated(series({1, 1}), series({1, 1}), 2) == series({1, 2}));
  CHECK(multiply_truncated(series({1}), series({5}), 3) == series({5, 0, 0}));
}

TEST_CASE("bernoulli_via_series") {
  CHECK(bernoulli_via_series(0).values == std::vector<Rational>{1});
  CHECK(bernoulli_via_series(2).values ==
        std::vector<Rational>{1, Rational(-1, 2), Rational(1, 6)});
  CHECK(bernoulli_via_series(8).at(8) == Rational(-1, 30));
  const BernoulliSeq b = bernoulli_via_series(120);
  for (std::size_t m = 3; m <= 120; m += 2) CHECK(sgn(b.at(m)) == 0);
  CHECK(b == bernoulli_from_tangent(tangent_numbers(60).seq));
}
