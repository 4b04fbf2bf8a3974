#include "bts/numeric.hpp"

#include <cctype>

namespace bts {

std::uint64_t bit_length(const BigInt& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt factorial_ratio(std::uint64_t a, std::uint64_t b) {
  if (a < b) {
    throw DomainError("factorial_ratio: a (" + std::to_string(a) +
                      ") < b (" + std::to_string(b) + ")");
  }
  BigInt r = 1;
  for (std::uint64_t k = b + 1; k <= a; ++k) r *= k;
  return r;
}

BigInt round_nearest_div(const BigInt& num, const BigInt& den) {
  if (sgn(den) <= 0) throw DomainError("round_nearest_div: den must be > 0");
  if (sgn(num) < 0) throw DomainError("round_nearest_div: num must be >= 0");
  // floor((2*num + den) / (2*den)) rounds halves up.
  BigInt twice = num;
  twice <<= 1;
  twice += den;
  BigInt den2 = den;
  den2 <<= 1;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  return q;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("exact_div: division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw IntegrityError("exact_div: " + den.get_str() + " does not divide " +
                         (bit_length(num) > 256 ? std::string("<") +
                              std::to_string(bit_length(num)) + "-bit value>"
                                                : num.get_str()));
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

namespace {

// Writes the `count` blocks of v (v < 2^(width*count)) into out[0..count).
void extract_range(const BigInt& v, std::uint64_t width, std::uint64_t count,
                   BigInt* out) {
  if (count == 1) {
    out[0] = v;
    return;
  }
  const std::uint64_t low_count = count / 2;
  const std::uint64_t shift = width * low_count;
  BigInt high, low;
  mpz_fdiv_q_2exp(high.get_mpz_t(), v.get_mpz_t(), shift);
  mpz_fdiv_r_2exp(low.get_mpz_t(), v.get_mpz_t(), shift);
  extract_range(high, width, count - low_count, out);
  extract_range(low, width, low_count, out + (count - low_count));
}

}  // namespace

std::vector<BigInt> extract_blocks(const BigInt& v, std::uint64_t width,
                                   std::uint64_t count) {
  if (width == 0 || count == 0) {
    throw DomainError("extract_blocks: width and count must be positive");
  }
  if (sgn(v) < 0) throw DomainError("extract_blocks: negative value");
  if (bit_length(v) > width * count) {
    throw OverflowError("extract_blocks: value has " +
                        std::to_string(bit_length(v)) + " bits, capacity " +
                        std::to_string(width * count));
  }
  std::vector<BigInt> blocks(count);
  extract_range(v, width, count, blocks.data());
  return blocks;
}

namespace {

// Divide and conquer keeps the cost near-linear in the total bit count.
BigInt pack_range(const std::vector<BigInt>& blocks, std::size_t lo,
                  std::size_t hi, std::uint64_t width) {
  if (hi - lo == 1) return blocks[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  BigInt high = pack_range(blocks, lo, mid, width);
  high <<= width * (hi - mid);
  high += pack_range(blocks, mid, hi, width);
  return high;
}

}  // namespace

BigInt pack_blocks(const std::vector<BigInt>& blocks, std::uint64_t width) {
  if (blocks.empty()) return 0;
  return pack_range(blocks, 0, blocks.size(), width);
}

BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw DomainError("parse_bigint: empty integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw DomainError("parse_bigint: invalid integer '" + text + "'");
    }
  }
  return BigInt(text, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (sgn(den) <= 0) throw DomainError("parse_rational: bad denominator");
  return make_rational(num, den);
}

}  // namespace bts
