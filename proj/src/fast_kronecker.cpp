#include "bts/fast_kronecker.hpp"

#include <string>

namespace bts {

namespace {

// (2n)!/(2k+1)! for k = 0..n-1, one descending sweep.
std::vector<BigInt> sine_ratios(std::uint64_t n) {
  std::vector<BigInt> r(n);
  r[n - 1] = 2 * n;
  for (std::uint64_t k = n - 1; k-- > 0;) {
    r[k] = r[k + 1] * ((2 * k + 2) * (2 * k + 3));
  }
  return r;
}

// (2n)!/(2k)! for k = 0..last.
std::vector<BigInt> cosine_ratios(std::uint64_t n, std::uint64_t last) {
  std::vector<BigInt> r(last + 1);
  r[last] = factorial_ratio(2 * n, 2 * last);
  for (std::uint64_t k = last; k-- > 0;) {
    r[k] = r[k + 1] * ((2 * k + 1) * (2 * k + 2));
  }
  return r;
}

// Alternating sum sum_k (-1)^k terms[k] 2^(width*(len-1-k)).
BigInt alternating_pack(std::vector<BigInt> terms, std::uint64_t width) {
  for (std::size_t k = 1; k < terms.size(); k += 2) terms[k] = -terms[k];
  return pack_blocks(terms, width);
}

std::vector<BigInt> read_blocks(const BigInt& v, std::uint64_t width,
                                std::uint64_t count) {
  try {
    return extract_blocks(v, width, count);
  } catch (const OverflowError& e) {
    throw IntegrityError(std::string("fixed-point precision failure: ") +
                         e.what());
  }
}

void require_n2(std::uint64_t n, const char* who) {
  if (n < 2) {
    throw DomainError(std::string(who) + ": n must be >= 2, got " +
                      std::to_string(n));
  }
}

void require_p(std::uint64_t p, const char* who) {
  if (p == 0) throw DomainError(std::string(who) + ": p must be positive");
}

}  // namespace

std::uint64_t tangent_block_bits(std::uint64_t n) {
  if (n == 0) throw DomainError("tangent_block_bits: n must be >= 1");
  BigInt nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  // least p with 2^p >= x is bit_length(x - 1)
  return bit_length(nn - 1);
}

std::uint64_t secant_block_bits(std::uint64_t n) {
  std::uint64_t p = tangent_block_bits(n);
  if (n < 2) return p;
  const std::uint64_t lead_bits = bit_length(factorial(2 * n));
  while (2 * p < lead_bits) ++p;
  return p;
}

FastParams compute_scaled_sin_cos(std::uint64_t n,
                                  std::optional<std::uint64_t> p) {
  require_n2(n, "compute_scaled_sin_cos");
  FastParams f;
  f.n = n;
  f.p = p.value_or(tangent_block_bits(n));
  require_p(f.p, "compute_scaled_sin_cos");
  const std::uint64_t width = 2 * f.p;
  f.A = factorial(2 * n - 1) * alternating_pack(sine_ratios(n), width);
  f.C_hat = alternating_pack(cosine_ratios(n, n - 1), width);
  if (sgn(f.A) <= 0 || sgn(f.C_hat) <= 0) {
    throw IntegrityError("compute_scaled_sin_cos: non-positive series value");
  }
  return f;
}

FastParams fast_tangent_trace(std::uint64_t n,
                              std::optional<std::uint64_t> p) {
  FastParams f = compute_scaled_sin_cos(n, p);
  BigInt num = f.A;
  num <<= (2 * n - 2) * f.p;
  f.V = round_nearest_div(num, f.C_hat);
  f.blocks = read_blocks(f.V, 2 * f.p, n);
  return f;
}

TangentSeq fast_tangent_numbers(std::uint64_t n,
                                std::optional<std::uint64_t> p) {
  if (n == 0) throw DomainError("fast_tangent_numbers: n must be >= 1");
  if (n == 1) return TangentSeq{{BigInt(1)}};
  FastParams f = fast_tangent_trace(n, p);
  // T_k = T'_{k,n} / ((2n-1)!/(2k-1)!), k = n, n-1, ..., 1
  TangentSeq t;
  t.values.resize(n);
  BigInt scale = 1;
  for (std::uint64_t k = n; k >= 1; --k) {
    t.values[k - 1] = exact_div(f.blocks[k - 1], scale);
    scale *= (2 * k - 2) * (2 * k - 1);
  }
  return t;
}

FastParams fast_secant_trace(std::uint64_t n,
                             std::optional<std::uint64_t> p) {
  require_n2(n, "fast_secant_trace");
  FastParams f;
  f.n = n;
  f.p = p.value_or(secant_block_bits(n));
  require_p(f.p, "fast_secant_trace");
  const std::uint64_t width = 2 * f.p;
  BigInt fact = factorial(2 * n);
  f.A = fact * fact;
  f.C_hat = alternating_pack(cosine_ratios(n, n), width);
  if (sgn(f.C_hat) <= 0) {
    throw IntegrityError("fast_secant_trace: non-positive cosine value");
  }
  BigInt num = f.A;
  num <<= 4 * n * f.p;
  f.V = round_nearest_div(num, f.C_hat);
  f.blocks = read_blocks(f.V, width, n + 1);
  return f;
}

SecantSeq fast_secant_numbers(std::uint64_t n,
                              std::optional<std::uint64_t> p) {
  if (n == 0) return SecantSeq{{BigInt(1)}};
  if (n == 1) return SecantSeq{{BigInt(1), BigInt(1)}};
  FastParams f = fast_secant_trace(n, p);
  // S_k = S'_{k,n} / ((2n)!/(2k)!)
  SecantSeq s;
  s.values.resize(n + 1);
  BigInt scale = 1;
  for (std::uint64_t k = n + 1; k-- > 0;) {
    s.values[k] = exact_div(f.blocks[k], scale);
    if (k > 0) scale *= (2 * k - 1) * (2 * k);
  }
  return s;
}

Rational quotient_fraction_audit(std::uint64_t n,
                                 std::optional<std::uint64_t> p) {
  FastParams f = fast_tangent_trace(n, p);
  BigInt num = f.A;
  num <<= (2 * n - 2) * f.p;
  Rational d = make_rational(num, f.C_hat) - Rational(f.V);
  return abs(d);
}

Rational secant_quotient_fraction_audit(std::uint64_t n,
                                        std::optional<std::uint64_t> p) {
  FastParams f = fast_secant_trace(n, p);
  BigInt num = f.A;
  num <<= 4 * n * f.p;
  Rational d = make_rational(num, f.C_hat) - Rational(f.V);
  return abs(d);
}

}  // namespace bts
