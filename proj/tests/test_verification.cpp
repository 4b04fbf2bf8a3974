#include <cmath>

#include "doctest.h"

#include "bts/recurrences.hpp"
#include "bts/verification.hpp"

using namespace bts;

TEST_CASE("primes and Staudt primes") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(staudt_primes(2) == std::vector<std::uint64_t>{2, 3});
  CHECK(staudt_primes(12) == std::vector<std::uint64_t>{2, 3, 5, 7, 13});
}

TEST_CASE("von Staudt-Clausen examples") {
  CHECK(von_staudt_clausen(2, Rational(1, 6)) == 1);
  CHECK(von_staudt_clausen(12, Rational(-691, 2730)) == 1);
  CHECK(von_staudt_clausen(14, Rational(7, 6)) == 2);
  CHECK_THROWS_AS(von_staudt_clausen(2, Rational(1, 5)), TheoremViolation);
  CHECK_THROWS_AS(von_staudt_clausen(4, Rational(1, 6)), TheoremViolation);
  CHECK_THROWS_AS(von_staudt_clausen(3, Rational(0)), DomainError);
  CHECK_THROWS_AS(von_staudt_clausen(0, Rational(1)), DomainError);
}

TEST_CASE("von Staudt-Clausen over a computed range") {
  const BernoulliSeq b = bernoulli_from_tangent(tangent_numbers(150).seq);
  for (std::uint64_t k = 1; k <= 150; ++k) {
    CHECK_NOTHROW(von_staudt_clausen(2 * k, b.at(2 * k)));
  }
}

TEST_CASE("Fermat denominator check") {
  CHECK(fermat_denominator_check(2, Rational(1, 6)));
  CHECK(fermat_denominator_check(12, Rational(-691, 2730)));
  // 7 does not divide 2^2 - 1 = 3
  CHECK_FALSE(fermat_denominator_check(2, Rational(1, 42)));
  const BernoulliSeq b = bernoulli_from_tangent(tangent_numbers(80).seq);
  for (std::uint64_t k = 1; k <= 80; ++k) {
    CHECK(fermat_denominator_check(2 * k, b.at(2 * k)));
  }
}

TEST_CASE("pi bounds") {
  const auto [lo, hi] = pi_bounds(100);
  CHECK(lo < hi);
  CHECK(lo < Rational(355, 113));
  CHECK(Rational(hi - lo) < Rational(1, 1 << 30));
  CHECK(std::abs(lo.get_d() - M_PI) < 1e-15);
}

TEST_CASE("zeta ratio") {
  const BernoulliSeq b = bernoulli_from_tangent(tangent_numbers(60).seq);
  const ZetaRatio z1 = zeta_ratio_check(1, b.at(2));
  CHECK(z1.approx() == doctest::Approx(1.6449341).epsilon(1e-7));
  CHECK(z1.lower < z1.upper);

  const ZetaRatio z5 = zeta_ratio_check(5, b.at(10));
  CHECK(z5.within_tail_bound(5));
  CHECK(z5.lower > 1);
  CHECK(z5.upper < 1 + Rational(1, 512));

  const ZetaRatio z20 = zeta_ratio_check(20, b.at(40));
  CHECK(Rational(z20.upper - 1) < Rational(1, BigInt(1) << 39));
  CHECK(z20.within_tail_bound(20));

  // a wrong B_2n falls outside the window
  const ZetaRatio bad = zeta_ratio_check(20, b.at(40) * Rational(1001, 1000));
  CHECK_FALSE(bad.within_tail_bound(20));

  double prev = 2;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const ZetaRatio z = zeta_ratio_check(n, b.at(2 * n));
    CHECK(z.within_tail_bound(n));
    CHECK(z.approx() <= prev);
    prev = z.approx();
  }
}

TEST_CASE("size checks") {
  const std::uint64_t n = 80;
  const TangentSeq t = tangent_numbers(n).seq;
  const BernoulliSeq b = bernoulli_from_tangent(t);
  const VerificationReport r = size_checks(t, b);
  CHECK(r.checks.size() == 3);
  CHECK(r.all_pass());
  // T_4 = 272 against its bound 7! (2/pi)^6 ~ 335.2
  CHECK(t.at(4) == 272);
  CHECK(factorial(7).get_d() * std::pow(2 / M_PI, 6) ==
        doctest::Approx(335.2).epsilon(1e-3));

  TangentSeq inflated = t;
  inflated.values[3] *= 2;
  CHECK_FALSE(size_checks(inflated, b).all_pass());
  CHECK_THROWS_AS(size_checks(t, bernoulli_from_tangent(tangent_numbers(10).seq)),
                  DomainError);
}

TEST_CASE("cross_check") {
  for (std::uint64_t n : {1u, 2u, 5u, 40u}) {
    const VerificationReport r = cross_check(n);
    CHECK(r.checks.size() == 6);
    CHECK(r.all_pass());
    CHECK(r.find("tangent: recurrence == fast") != nullptr);
  }
  CHECK_THROWS_AS(cross_check(0), DomainError);
}

TEST_CASE("fixed-point remainder and blocks") {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    const Rational rem = remainder_in_v_units(n);
    CHECK(sgn(rem) > 0);
    CHECK(rem < Rational(1, 10));
    CHECK(packing_identity(n));
    CHECK(block_bound_check(n).all_pass());
  }
  CHECK_THROWS_AS(remainder_in_v_units(1), DomainError);
}

TEST_CASE("stability contrast") {
  const VerificationReport r = stability_contrast(53);
  CHECK(r.checks.size() == 3);
  CHECK(r.all_pass());
}

TEST_CASE("report helpers") {
  VerificationReport r;
  r.add("a", true);
  CHECK(r.all_pass());
  VerificationReport s;
  s.add("b", false, "why");
  r.append(s);
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.find("b") != nullptr);
  CHECK(r.find("b")->witness == "why");
  CHECK(r.find("c") == nullptr);
}

TEST_CASE("verify_all") {
  for (std::uint64_t n : {1u, 2u, 20u, 60u}) {
    const VerificationReport r = verify_all(n);
    INFO("n = " << n);
    for (const Check& c : r.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
}
