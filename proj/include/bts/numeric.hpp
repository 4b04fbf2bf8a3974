// Exact integer and rational primitives shared by every engine.
//
// BigInt and Rational are GMP's C++ classes. GMP keeps zero canonical
// (size 0, no limbs) and mpq_class reduces after every arithmetic operation,
// so the invariants the rest of the library relies on hold by construction.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bts {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Precondition violated by the caller (bad n, zero divisor, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. For the fixed-point engines this
/// means the chosen precision was insufficient, which must never happen.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value does not fit in the requested number of bit blocks.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Number of bits in |x|; 0 for x == 0.
std::uint64_t bit_length(const BigInt& x);

BigInt factorial(std::uint64_t n);

/// a!/b! as the rising product (b+1)(b+2)...a. Requires a >= b.
BigInt factorial_ratio(std::uint64_t a, std::uint64_t b);

/// Nearest integer to num/den with exact halves rounded up.
/// Requires num >= 0 and den > 0.
BigInt round_nearest_div(const BigInt& num, const BigInt& den);

/// num/den, throwing IntegrityError unless den divides num exactly.
BigInt exact_div(const BigInt& num, const BigInt& den);

/// Splits v into `count` blocks of `width` bits, most significant first.
/// Throws OverflowError when v >= 2^(width*count).
std::vector<BigInt> extract_blocks(const BigInt& v, std::uint64_t width,
                                   std::uint64_t count);

/// Inverse of extract_blocks: sum of blocks[k] * 2^(width*(count-1-k)).
/// Blocks are not required to be narrower than `width`.
BigInt pack_blocks(const std::vector<BigInt>& blocks, std::uint64_t width);

/// 2^e as a BigInt.
BigInt pow2(std::uint64_t e);

/// Binomial coefficient C(n, k).
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Canonical reduced fraction num/den; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// `num/den` in lowest terms, or just `num` when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& x);

/// Parses the output of to_string(Rational). Throws DomainError on
/// malformed input.
Rational parse_rational(const std::string& text);
BigInt parse_bigint(const std::string& text);

}  // namespace bts
