// Plain-text and JSON encodings of sequences and verification reports.
//
// Plain: one `index value` pair per line; rationals in lowest terms as
// `num/den`, integers without a denominator.
// JSON:  {"kind": "...", "n": N, "values": ["...", ...]} with every number
// as a decimal string.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bts/sequences.hpp"
#include "bts/verification.hpp"

namespace bts {

enum class Format { plain, json };

struct SequenceOutput {
  std::string kind;  // "tangent", "secant" or "bernoulli"
  std::uint64_t n = 0;
  std::uint64_t first_index = 0;
  std::vector<Rational> values;

  bool operator==(const SequenceOutput&) const = default;
};

SequenceOutput to_output(const TangentSeq& t);
SequenceOutput to_output(const SecantSeq& s);
/// `n` is the requested count; b covers B_0..B_2n.
SequenceOutput to_output(const BernoulliSeq& b, std::uint64_t n);

std::string format_sequence(const SequenceOutput& seq, Format format);

/// Parses plain output. Only `first_index` and `values` are recovered.
/// Throws DomainError on malformed lines or non-consecutive indices.
SequenceOutput parse_plain(const std::string& text);

/// Parses JSON output. Throws DomainError on malformed input.
SequenceOutput parse_json(const std::string& text);

std::string format_report(const VerificationReport& report, Format format);

}  // namespace bts
