// O(n^2) engines: the in-place three-term recurrences for Tangent and
// Secant numbers, the boustrophedon triangle, Akiyama-Tanigawa, and the
// two floating-point Bernoulli recurrences used for stability experiments.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bts/sequences.hpp"
#include "bts/soft_float.hpp"

namespace bts {

/// In-place Tangent recurrence T_j <- (j-k) T_{j-1} + (j-k+2) T_j.
/// Requires n >= 1.
Counted<TangentSeq> tangent_numbers(std::uint64_t n);

/// Observer called after every update of the tangent working array, with
/// the outer index k (1 for the initialisation pass) and the index j just
/// written. Lets tests follow the dataflow through the in-place buffer.
using TangentTrace =
    std::function<void(std::uint64_t k, std::uint64_t j,
                       const std::vector<BigInt>& state)>;
Counted<TangentSeq> tangent_numbers(std::uint64_t n, const TangentTrace& trace);

/// In-place Secant recurrence S_j <- (j-k) S_{j-1} + (j-k+1) S_j.
Counted<SecantSeq> secant_numbers(std::uint64_t n);

/// B_0..B_{2n} from T_1..T_n via
///   B_{2k} = (-1)^(k-1) k T_k / (2^(2k-1) (2^(2k) - 1)).
/// B_0 = 1 and B_1 = -1/2 are filled in directly.
BernoulliSeq bernoulli_from_tangent(const TangentSeq& t);

/// Inverse conversion: T_k = (-1)^(k-1) 2^(2k) (2^(2k)-1) B_{2k} / (2k).
/// Throws IntegrityError if any result is not a positive integer.
TangentSeq tangent_from_bernoulli(const BernoulliSeq& b);

struct ZigzagResult {
  TangentSeq tangent;
  SecantSeq secant;
  OpCounters counters;
};

/// Addition-only alternating-direction triangle with 2n+1 rows producing
/// T_1..T_n and S_0..S_n together. Requires n >= 1.
ZigzagResult atkinson_tangent_secant(std::uint64_t n);

/// B_0..B_n by the Akiyama-Tanigawa triangle in exact rationals. The
/// triangle produces +1/2 at index 1; it is negated so that every
/// BernoulliSeq uses B_1 = -1/2.
Counted<BernoulliSeq> akiyama_tanigawa_bernoulli(std::uint64_t n);

/// B_0..B_n from sum_{j<=k} C(k+1, j) B_j = 0 evaluated in SoftFloat for
/// k = 1 and even k, with the odd entries past B_1 held at exactly zero.
/// In that form the relative error grows like 4^(k/2) times the unit
/// roundoff. (Also solving for the odd entries lets their rounding noise
/// cancel the drift, and the recurrence then behaves stably.) The output
/// exists to be compared against exact values. Requires n even and
/// positive, precision >= 24.
std::vector<SoftFloat> bernoulli_float_unstable(std::uint64_t n,
                                                long precision);

/// C_0..C_n, C_k = B_{2k}/(2k)!, from
///   sum_{j<=k} C_j / ((2k+1-2j)! 4^(k-j)) = 1/((2k)! 4^k)
/// evaluated in SoftFloat. Requires precision >= 24.
std::vector<SoftFloat> scaled_bernoulli_stable(std::uint64_t n,
                                               long precision);

}  // namespace bts
