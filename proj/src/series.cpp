#include "bts/series.hpp"

#include <algorithm>

namespace bts {

SeriesTrunc multiply_truncated(const SeriesTrunc& a, const SeriesTrunc& b,
                               std::size_t order) {
  SeriesTrunc r;
  r.coeffs.assign(order, Rational(0));
  const std::size_t na = std::min(a.order(), order);
  Rational term;
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a.coeffs[i]) == 0) continue;
    const std::size_t nb = std::min(b.order(), order - i);
    for (std::size_t j = 0; j < nb; ++j) {
      if (sgn(b.coeffs[j]) == 0) continue;
      term = a.coeffs[i] * b.coeffs[j];
      r.coeffs[i + j] += term;
    }
  }
  return r;
}

SeriesTrunc series_reciprocal(const SeriesTrunc& a, std::size_t order) {
  if (order == 0) throw DomainError("series_reciprocal: order must be >= 1");
  if (a.coeffs.empty() || sgn(a.coeffs[0]) == 0) {
    throw DomainError("series_reciprocal: constant term must be nonzero");
  }
  SeriesTrunc b;
  b.coeffs.push_back(1 / a.coeffs[0]);
  std::size_t have = 1;
  while (have < order) {
    const std::size_t next = std::min(2 * have, order);
    // e = 1 - a*b vanishes below z^have, so b + b*e agrees with b there and
    // only the new coefficients [have, next) need the correction term.
    SeriesTrunc ab = multiply_truncated(a, b, next);
    SeriesTrunc err;
    err.coeffs.assign(next - have, Rational(0));
    for (std::size_t j = have; j < next; ++j) err.coeffs[j - have] = -ab.coeffs[j];
    SeriesTrunc corr = multiply_truncated(b, err, next - have);
    b.coeffs.resize(next, Rational(0));
    for (std::size_t j = have; j < next; ++j) b.coeffs[j] = corr.coeffs[j - have];
    have = next;
  }
  return b;
}

BernoulliSeq bernoulli_via_series(std::uint64_t n) {
  SeriesTrunc a;
  a.coeffs.reserve(n + 1);
  BigInt fact = 1;  // (j+1)!
  for (std::uint64_t j = 0; j <= n; ++j) {
    fact *= (j + 1);
    a.coeffs.push_back(make_rational(1, fact));
  }
  SeriesTrunc b = series_reciprocal(a, n + 1);
  BernoulliSeq out;
  out.values.reserve(n + 1);
  BigInt jfact = 1;
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (j > 0) jfact *= j;
    out.values.push_back(b.coeffs[j] * Rational(jfact));
  }
  return out;
}

}  // namespace bts
