// Truncated power series over exact rationals and the Bernoulli numbers
// obtained as the reciprocal of (exp(z) - 1)/z.

#pragma once

#include <cstdint>
#include <vector>

#include "bts/sequences.hpp"

namespace bts {

struct SeriesTrunc {
  std::vector<Rational> coeffs;  // coeffs[j] multiplies z^j

  std::size_t order() const { return coeffs.size(); }
  bool operator==(const SeriesTrunc&) const = default;
};

/// Product truncated to `order` coefficients (schoolbook).
SeriesTrunc multiply_truncated(const SeriesTrunc& a, const SeriesTrunc& b,
                               std::size_t order);

/// b with a*b == 1 mod z^order, by Newton iteration b <- b(2 - ab) with the
/// number of correct coefficients doubling each step. Throws DomainError if
/// a has a zero constant term or order == 0.
SeriesTrunc series_reciprocal(const SeriesTrunc& a, std::size_t order);

/// B_0..B_n as j! times the coefficients of z/(exp(z) - 1).
BernoulliSeq bernoulli_via_series(std::uint64_t n);

}  // namespace bts
