#include "bts/recurrences.hpp"

#include <utility>

namespace bts {

Counted<TangentSeq> tangent_numbers(std::uint64_t n) {
  return tangent_numbers(n, TangentTrace{});
}

Counted<TangentSeq> tangent_numbers(std::uint64_t n,
                                    const TangentTrace& trace) {
  if (n == 0) throw DomainError("tangent_numbers: n must be >= 1");
  OpCounters c;
  // t[j-1] holds T_j.
  std::vector<BigInt> t(n);
  t[0] = 1;
  if (trace) trace(1, 1, t);
  for (std::uint64_t k = 2; k <= n; ++k) {
    t[k - 1] = t[k - 2] * (k - 1);
    ++c.multiplications;
    ++c.init_multiplications;
    if (trace) trace(1, k, t);
  }
  BigInt scratch;
  for (std::uint64_t k = 2; k <= n; ++k) {
    for (std::uint64_t j = k; j <= n; ++j) {
      // T_j <- (j-k) T_{j-1} + (j-k+2) T_j
      BigInt& tj = t[j - 1];
      scratch = t[j - 2] * (j - k);
      tj *= (j - k + 2);
      tj += scratch;
      c.multiplications += 2;
      ++c.additions;
      ++c.loop_trips;
      if (trace) trace(k, j, t);
    }
  }
  return {TangentSeq{std::move(t)}, c};
}

Counted<SecantSeq> secant_numbers(std::uint64_t n) {
  OpCounters c;
  std::vector<BigInt> s(n + 1);
  s[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    s[k] = s[k - 1] * k;
    ++c.multiplications;
    ++c.init_multiplications;
  }
  BigInt scratch;
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::uint64_t j = k + 1; j <= n; ++j) {
      // S_j <- (j-k) S_{j-1} + (j-k+1) S_j
      scratch = s[j - 1] * (j - k);
      s[j] *= (j - k + 1);
      s[j] += scratch;
      c.multiplications += 2;
      ++c.additions;
      ++c.loop_trips;
    }
  }
  return {SecantSeq{std::move(s)}, c};
}

BernoulliSeq bernoulli_from_tangent(const TangentSeq& t) {
  const std::uint64_t n = t.n();
  BernoulliSeq b;
  b.values.assign(2 * n + 1, Rational(0));
  b.values[0] = 1;
  if (n == 0) return b;
  b.values[1] = Rational(-1, 2);
  for (std::uint64_t k = 1; k <= n; ++k) {
    BigInt num = t.at(k) * k;
    if (k % 2 == 0) num = -num;
    BigInt den = pow2(2 * k - 1) * (pow2(2 * k) - 1);
    b.values[2 * k] = make_rational(num, den);
  }
  return b;
}

TangentSeq tangent_from_bernoulli(const BernoulliSeq& b) {
  const std::uint64_t n = b.max_index() / 2;
  TangentSeq t;
  t.values.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    Rational v = b.at(2 * k) * Rational(pow2(2 * k) * (pow2(2 * k) - 1));
    v /= Rational(2 * k);
    if (k % 2 == 0) v = -v;
    if (v.get_den() != 1 || sgn(v) <= 0) {
      throw IntegrityError("tangent_from_bernoulli: B_" +
                           std::to_string(2 * k) + " = " + to_string(b.at(2 * k)) +
                           " does not yield a positive integer T_" +
                           std::to_string(k));
    }
    t.values.push_back(v.get_num());
  }
  return t;
}

ZigzagResult atkinson_tangent_secant(std::uint64_t n) {
  if (n == 0) throw DomainError("atkinson_tangent_secant: n must be >= 1");
  OpCounters c;
  ZigzagResult r;
  r.secant.values.reserve(n + 1);
  r.tangent.values.reserve(n);
  r.secant.values.emplace_back(1);

  // Row i of the Seidel-Entringer triangle:
  //   E(i,0) = 0,  E(i,m) = E(i,m-1) + E(i-1,i-m),
  // and E(i,i) is the i-th zigzag number (S for even i, T for odd i).
  std::vector<BigInt> prev{BigInt(1)};
  std::vector<BigInt> cur;
  const std::uint64_t rows = 2 * n + 1;
  for (std::uint64_t i = 1; i < rows; ++i) {
    cur.resize(i + 1);
    cur[0] = 0;
    for (std::uint64_t m = 1; m <= i; ++m) {
      cur[m] = cur[m - 1] + prev[i - m];
      ++c.additions;
      ++c.loop_trips;
    }
    if (i % 2 == 1) {
      r.tangent.values.push_back(cur[i]);
    } else {
      r.secant.values.push_back(cur[i]);
    }
    std::swap(prev, cur);
  }
  r.counters = c;
  return r;
}

Counted<BernoulliSeq> akiyama_tanigawa_bernoulli(std::uint64_t n) {
  OpCounters c;
  std::vector<Rational> a(n + 1);
  BernoulliSeq b;
  b.values.reserve(n + 1);
  for (std::uint64_t m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (std::uint64_t j = m; j >= 1; --j) {
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
      ++c.additions;
      ++c.multiplications;
      ++c.loop_trips;
    }
    b.values.push_back(a[0]);
  }
  if (n >= 1) b.values[1] = -b.values[1];
  return {std::move(b), c};
}

std::vector<SoftFloat> bernoulli_float_unstable(std::uint64_t n,
                                                long precision) {
  if (n == 0 || n % 2 != 0) {
    throw DomainError("bernoulli_float_unstable: n must be positive and even");
  }
  if (precision < 24) {
    throw DomainError("bernoulli_float_unstable: precision must be >= 24");
  }
  std::vector<SoftFloat> b;
  b.reserve(n + 1);
  b.emplace_back(precision, 1L);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (k >= 3 && k % 2 == 1) {
      b.emplace_back(precision, 0L);
      continue;
    }
    SoftFloat sum(precision);
    for (std::uint64_t j = 0; j < k; ++j) {
      if (b[j].is_zero()) continue;
      sum += SoftFloat(precision, binomial(k + 1, j)) * b[j];
    }
    SoftFloat divisor(precision, static_cast<long>(k + 1));
    b.push_back(-(sum / divisor));
  }
  return b;
}

std::vector<SoftFloat> scaled_bernoulli_stable(std::uint64_t n,
                                               long precision) {
  if (precision < 24) {
    throw DomainError("scaled_bernoulli_stable: precision must be >= 24");
  }
  // weight[i] = 1/((2i+1)! 4^i), rounded once from the exact value.
  std::vector<SoftFloat> weight;
  weight.reserve(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) {
    weight.emplace_back(precision,
                        make_rational(1, factorial(2 * i + 1) * pow2(2 * i)));
  }
  std::vector<SoftFloat> c;
  c.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    SoftFloat ck(precision, make_rational(1, factorial(2 * k) * pow2(2 * k)));
    for (std::uint64_t j = 0; j < k; ++j) {
      ck -= c[j] * weight[k - j];
    }
    c.push_back(std::move(ck));
  }
  return c;
}

}  // namespace bts
