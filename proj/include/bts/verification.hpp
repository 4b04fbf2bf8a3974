// Differential checks across engines and executable forms of the
// number-theoretic and analytic identities the sequences satisfy.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bts/sequences.hpp"

namespace bts {

/// A Bernoulli value failed the Von Staudt-Clausen test.
class TheoremViolation : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct VerificationReport {
  std::uint64_t n = 0;
  std::vector<Check> checks;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string witness = {});
  void append(const VerificationReport& other);
  const Check* find(const std::string& name) const;
};

/// Tangent, Secant and Bernoulli numbers up to n by every engine, compared
/// for exact equality. Requires n >= 1.
VerificationReport cross_check(std::uint64_t n);

/// Primes <= limit (simple sieve).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Primes p with (p-1) | m.
std::vector<std::uint64_t> staudt_primes(std::uint64_t m);

/// B_m + sum_{(p-1)|m} 1/p, which must be an integer; also requires
/// den(B_m) to equal the product of those primes. Throws TheoremViolation
/// otherwise, DomainError unless m is positive and even.
BigInt von_staudt_clausen(std::uint64_t m, const Rational& b);

/// True iff every odd prime factor of den(B) divides 2^m - 1. Works without
/// factoring: the odd part of den is stripped of gcds with 2^m - 1 until
/// nothing is left or the gcd is 1.
bool fermat_denominator_check(std::uint64_t m, const Rational& b);

/// Rational lower and upper bounds on pi, each within 2^-bits of it.
std::pair<Rational, Rational> pi_bounds(long bits);

/// Enclosure of rho = |B_2n| (2 pi)^(2n) / (2 (2n)!), which equals zeta(2n).
struct ZetaRatio {
  Rational lower;
  Rational upper;

  double approx() const;
  /// 1 < rho < 1 + 2^(1-2n), established from the enclosure.
  bool within_tail_bound(std::uint64_t n) const;
};

/// pi is carried to at least `precision_bits`, and to 2n + 64 + lg n bits
/// when that is larger.
ZetaRatio zeta_ratio_check(std::uint64_t n, const Rational& b2n,
                           long precision_bits = 256);

/// Growth checks on one computed range:
///  - T_k <= (2k-1)! (2/pi)^(2(k-1)) for every k, rigorous via pi bounds;
///  - bits(T_k) - bits(floor|B_2k|) within 4k +- 16 lg k, for k >= 2;
///  - bits(T_k) / (2k lg k) in [0.8, 1.2], for k >= 50.
/// `b` must cover B_0..B_2n for the same n as `t`.
VerificationReport size_checks(const TangentSeq& t, const BernoulliSeq& b);

/// Every extracted block T'_{k,n} is < 2^(2p) and <= (2n-1)!.
VerificationReport block_bound_check(std::uint64_t n);

/// R_n(z)/z^(2n-1) = sum_{k>n} T'_{k,n} z^(2(k-n)), truncated after
/// `extra_terms` terms and evaluated exactly from the recurrence engine.
Rational remainder_in_v_units(std::uint64_t n, std::uint64_t extra_terms = 5);

/// Packing T'_{k,n} derived from the recurrence engine reproduces V.
bool packing_identity(std::uint64_t n);

/// Float recurrences against exact values at one precision: unstable
/// relative error small up to index 20 and above 1 at index 60; the scaled
/// recurrence below 1e-12 through C_40.
VerificationReport stability_contrast(long precision = 53);

/// Everything above for one n; what the `verify` command runs.
VerificationReport verify_all(std::uint64_t n, long precision = 53);

}  // namespace bts
