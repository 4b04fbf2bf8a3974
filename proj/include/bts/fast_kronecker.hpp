// Tangent and Secant numbers read off the binary expansion of a single
// scaled quotient.
//
// With z = 2^-p, (2n-1)! tan z = sum_k T'_{k,n} z^(2k-1) + R_n(z) where
// T'_{k,n} = T_k (2n-1)!/(2k-1)!. When each T'_{k,n} fits in 2p bits and
// the remainder contributes less than half a unit, rounding
//   V = z^(1-2n) (2n-1)! S / C
// to the nearest integer yields the T'_{k,n} as n consecutive 2p-bit
// blocks. S and C are truncated sine and cosine series, scaled so that
// every intermediate is an integer:
//   A     = (2n-1)! sum_{k<n} (-1)^k 2^((2n-2k-2)p) (2n)!/(2k+1)!
//   C_hat =         sum_{k<n} (-1)^k 2^((2n-2k-2)p) (2n)!/(2k)!
//   V     = round(A 2^((2n-2)p) / C_hat).
//
// The secant path uses one more cosine term and n+1 blocks:
//   C_hat_s = sum_{k<=n} (-1)^k 2^((2n-2k)p) (2n)!/(2k)!
//   V_s     = round(((2n)!)^2 2^(4np) / C_hat_s)
//           = sum_{k=0..n} 2^(2(n-k)p) S'_{k,n},  S'_{k,n} = S_k (2n)!/(2k)!.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bts/sequences.hpp"

namespace bts {

/// Least p with 2^p >= n^n, i.e. ceil(n lg n), computed exactly.
std::uint64_t tangent_block_bits(std::uint64_t n);

/// Secant half-block width: tangent_block_bits(n), raised if needed so the
/// leading block S'_{0,n} = (2n)! also fits in 2p bits.
std::uint64_t secant_block_bits(std::uint64_t n);

struct FastParams {
  std::uint64_t n = 0;
  std::uint64_t p = 0;  // z = 2^-p
  BigInt A;             // scaled numerator
  BigInt C_hat;         // scaled denominator
  BigInt V;             // rounded quotient
  std::vector<BigInt> blocks;  // T'_{k,n} (or S'_{k,n}), most significant first

  /// N = 2np + 2, the quotient precision the read-off needs; V has at
  /// most 2np bits.
  std::uint64_t working_bits() const { return 2 * n * p + 2; }
};

/// Fills n, p, A and C_hat. Requires n >= 2. `p` defaults to
/// tangent_block_bits(n); a larger value may be passed to test that the
/// output does not depend on extra precision.
FastParams compute_scaled_sin_cos(std::uint64_t n,
                                  std::optional<std::uint64_t> p = {});

/// Full run of the tangent path with every intermediate retained.
/// Requires n >= 2.
FastParams fast_tangent_trace(std::uint64_t n,
                              std::optional<std::uint64_t> p = {});

TangentSeq fast_tangent_numbers(std::uint64_t n,
                                std::optional<std::uint64_t> p = {});

/// Secant path; n <= 1 returns the known values directly. In the returned
/// params A holds ((2n)!)^2 and C_hat holds C_hat_s.
FastParams fast_secant_trace(std::uint64_t n,
                             std::optional<std::uint64_t> p = {});

SecantSeq fast_secant_numbers(std::uint64_t n,
                              std::optional<std::uint64_t> p = {});

/// Exact |A 2^((2n-2)p) / C_hat - V| for the tangent path. Requires n >= 2.
Rational quotient_fraction_audit(std::uint64_t n,
                                 std::optional<std::uint64_t> p = {});

/// Same distance for the secant path.
Rational secant_quotient_fraction_audit(std::uint64_t n,
                                        std::optional<std::uint64_t> p = {});

}  // namespace bts
