// Value types for the computed number sequences.

#pragma once

#include <cstdint>
#include <vector>

#include "bts/numeric.hpp"

namespace bts {

/// T_1..T_n. Indexing is by the mathematical index k (1-based).
struct TangentSeq {
  std::vector<BigInt> values;  // values[k-1] == T_k

  std::size_t n() const { return values.size(); }
  const BigInt& at(std::size_t k) const { return values.at(k - 1); }
  bool operator==(const TangentSeq&) const = default;
};

/// S_0..S_n.
struct SecantSeq {
  std::vector<BigInt> values;  // values[k] == S_k

  std::size_t n() const { return values.empty() ? 0 : values.size() - 1; }
  const BigInt& at(std::size_t k) const { return values.at(k); }
  bool operator==(const SecantSeq&) const = default;
};

/// B_0..B_m with B_1 = -1/2 and all odd entries past 1 equal to zero.
struct BernoulliSeq {
  std::vector<Rational> values;  // values[m] == B_m

  std::size_t max_index() const { return values.empty() ? 0 : values.size() - 1; }
  const Rational& at(std::size_t m) const { return values.at(m); }
  bool operator==(const BernoulliSeq&) const = default;
};

/// Arithmetic performed by one engine invocation. `multiplications` counts
/// BigInt-by-small-integer products and includes `init_multiplications`,
/// the part spent in an initialisation pass before the main double loop.
struct OpCounters {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t init_multiplications = 0;
  std::uint64_t loop_trips = 0;

  bool operator==(const OpCounters&) const = default;
};

template <typename Seq>
struct Counted {
  Seq seq;
  OpCounters counters;
};

}  // namespace bts
