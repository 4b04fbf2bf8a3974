#include "bts/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <mpfr.h>

#include "bts/fast_kronecker.hpp"
#include "bts/recurrences.hpp"
#include "bts/series.hpp"

namespace bts {

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void VerificationReport::add(std::string name, bool pass,
                             std::string witness) {
  checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string abbreviate(const std::string& s) {
  if (s.size() <= 80) return s;
  return s.substr(0, 36) + "...(" + std::to_string(s.size()) + " chars)..." +
         s.substr(s.size() - 36);
}

template <typename T>
std::string show(const T& v) {
  return abbreviate(to_string(v));
}

// First index where two equally indexed vectors differ, with both values.
template <typename T>
void compare(VerificationReport& r, const std::string& name,
             const std::vector<T>& a, const std::vector<T>& b,
             std::size_t index_base) {
  if (a.size() != b.size()) {
    r.add(name, false,
          "length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      r.add(name, false,
            "index " + std::to_string(i + index_base) + ": " + show(a[i]) +
                " vs " + show(b[i]));
      return;
    }
  }
  r.add(name, true);
}

}  // namespace

VerificationReport cross_check(std::uint64_t n) {
  if (n == 0) throw DomainError("cross_check: n must be >= 1");
  VerificationReport r;
  r.n = n;

  const TangentSeq t_rec = tangent_numbers(n).seq;
  const SecantSeq s_rec = secant_numbers(n).seq;
  const ZigzagResult atk = atkinson_tangent_secant(n);

  compare(r, "tangent: recurrence == fast", t_rec.values,
          fast_tangent_numbers(n).values, 1);
  compare(r, "tangent: recurrence == atkinson", t_rec.values,
          atk.tangent.values, 1);
  compare(r, "secant: recurrence == fast", s_rec.values,
          fast_secant_numbers(n).values, 0);
  compare(r, "secant: recurrence == atkinson", s_rec.values,
          atk.secant.values, 0);

  const BernoulliSeq b_tan = bernoulli_from_tangent(t_rec);
  compare(r, "bernoulli: tangent route == akiyama-tanigawa", b_tan.values,
          akiyama_tanigawa_bernoulli(2 * n).seq.values, 0);
  compare(r, "bernoulli: tangent route == series reciprocal", b_tan.values,
          bernoulli_via_series(2 * n).values, 0);
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> staudt_primes(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(m + 1)) {
    if (m % (p - 1) == 0) out.push_back(p);
  }
  return out;
}

BigInt von_staudt_clausen(std::uint64_t m, const Rational& b) {
  if (m == 0 || m % 2 != 0) {
    throw DomainError("von_staudt_clausen: m must be positive and even");
  }
  Rational sum = b;
  BigInt product = 1;
  for (std::uint64_t p : staudt_primes(m)) {
    sum += Rational(1, p);
    product *= p;
  }
  if (sum.get_den() != 1) {
    throw TheoremViolation("von_staudt_clausen: B_" + std::to_string(m) +
                           " + sum 1/p = " + show(sum) + " is not an integer");
  }
  if (b.get_den() != product) {
    throw TheoremViolation("von_staudt_clausen: den(B_" + std::to_string(m) +
                           ") = " + show(b.get_den()) + ", expected " +
                           show(product));
  }
  return sum.get_num();
}

bool fermat_denominator_check(std::uint64_t m, const Rational& b) {
  BigInt c = b.get_den();
  while (c % 2 == 0) c /= 2;
  const BigInt mersenne = pow2(m) - 1;
  BigInt g;
  while (c != 1) {
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), mersenne.get_mpz_t());
    if (g == 1) return false;
    c /= g;
  }
  return true;
}

std::pair<Rational, Rational> pi_bounds(long bits) {
  mpfr_t lo, hi;
  mpfr_init2(lo, bits + 8);
  mpfr_init2(hi, bits + 8);
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  Rational qlo, qhi;
  mpfr_get_q(qlo.get_mpq_t(), lo);
  mpfr_get_q(qhi.get_mpq_t(), hi);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return {qlo, qhi};
}

namespace {

Rational rational_pow(const Rational& base, std::uint64_t e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return make_rational(num, den);
}

}  // namespace

double ZetaRatio::approx() const { return Rational((lower + upper) / 2).get_d(); }

bool ZetaRatio::within_tail_bound(std::uint64_t n) const {
  return lower > 1 && upper < 1 + make_rational(1, pow2(2 * n - 1));
}

ZetaRatio zeta_ratio_check(std::uint64_t n, const Rational& b2n,
                           long precision_bits) {
  if (n == 0) throw DomainError("zeta_ratio_check: n must be >= 1");
  if (precision_bits < 128) {
    throw DomainError("zeta_ratio_check: precision must be >= 128 bits");
  }
  // rho - 1 is about 2^-2n, so the enclosure must be tighter than that.
  const long needed = static_cast<long>(2 * n + 64 + bit_length(BigInt(n)));
  auto [pi_lo, pi_hi] = pi_bounds(std::max(precision_bits, needed));
  const Rational scale = abs(b2n) / Rational(2 * factorial(2 * n));
  return {scale * rational_pow(2 * pi_lo, 2 * n),
          scale * rational_pow(2 * pi_hi, 2 * n)};
}

VerificationReport size_checks(const TangentSeq& t, const BernoulliSeq& b) {
  const std::uint64_t n = t.n();
  if (b.max_index() < 2 * n) {
    throw DomainError("size_checks: Bernoulli range shorter than 2n");
  }
  VerificationReport r;
  r.n = n;
  const Rational pi_hi = pi_bounds(256).second;

  std::string growth_witness, diff_witness, ratio_witness;
  BigInt odd_factorial = 1;  // (2k-1)!
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (k > 1) odd_factorial *= (2 * k - 2) * (2 * k - 1);
    const BigInt& tk = t.at(k);
    // T_k pi^(2(k-1)) <= (2k-1)! 2^(2(k-1)), with pi replaced by an upper bound
    if (growth_witness.empty()) {
      Rational lhs = Rational(tk) * rational_pow(pi_hi, 2 * (k - 1));
      Rational rhs = Rational(odd_factorial * pow2(2 * (k - 1)));
      if (lhs > rhs) growth_witness = "k = " + std::to_string(k);
    }
    const double lg = std::log2(static_cast<double>(k));
    const double tbits = static_cast<double>(bit_length(tk));
    if (k >= 2 && diff_witness.empty()) {
      const Rational& b2k = b.at(2 * k);
      BigInt ipart;
      mpz_tdiv_q(ipart.get_mpz_t(), b2k.get_num_mpz_t(), b2k.get_den_mpz_t());
      const double diff = tbits - static_cast<double>(bit_length(ipart));
      const double slack = 16.0 * lg;
      if (diff < 4.0 * k - slack || diff > 4.0 * k + slack) {
        std::ostringstream w;
        w << "k = " << k << ": bit difference " << diff;
        diff_witness = w.str();
      }
    }
    if (k >= 50 && ratio_witness.empty()) {
      const double ratio = tbits / (2.0 * k * lg);
      if (ratio < 0.8 || ratio > 1.2) {
        std::ostringstream w;
        w << "k = " << k << ": ratio " << ratio;
        ratio_witness = w.str();
      }
    }
  }
  r.add("size: T_k <= (2k-1)! (2/pi)^(2(k-1))", growth_witness.empty(),
        growth_witness);
  r.add("size: bits(T_k) - bits(B_2k) = 4k +- 16 lg k", diff_witness.empty(),
        diff_witness);
  r.add("size: bits(T_k) / (2k lg k) in [0.8, 1.2] for k >= 50",
        ratio_witness.empty(), ratio_witness);
  return r;
}

VerificationReport block_bound_check(std::uint64_t n) {
  VerificationReport r;
  r.n = n;
  const FastParams f = fast_tangent_trace(n);
  const BigInt limit = pow2(2 * f.p);
  const BigInt fact = factorial(2 * n - 1);
  std::string witness;
  for (std::size_t k = 0; k < f.blocks.size() && witness.empty(); ++k) {
    if (f.blocks[k] >= limit || f.blocks[k] > fact || sgn(f.blocks[k]) < 0) {
      witness = "k = " + std::to_string(k + 1) + ": " + show(f.blocks[k]);
    }
  }
  r.add("fast: blocks < 2^(2p) and <= (2n-1)!", witness.empty(), witness);
  return r;
}

Rational remainder_in_v_units(std::uint64_t n, std::uint64_t extra_terms) {
  if (n < 2) throw DomainError("remainder_in_v_units: n must be >= 2");
  const std::uint64_t p = tangent_block_bits(n);
  const TangentSeq t = tangent_numbers(n + extra_terms).seq;
  Rational sum = 0;
  // T'_{k,n} = T_k (2n-1)!/(2k-1)!, a proper fraction of T_k for k > n
  BigInt den = 1;  // (2k-1)!/(2n-1)!
  for (std::uint64_t k = n + 1; k <= n + extra_terms; ++k) {
    den *= (2 * k - 2) * (2 * k - 1);
    sum += make_rational(t.at(k), den * pow2(2 * (k - n) * p));
  }
  return sum;
}

bool packing_identity(std::uint64_t n) {
  const FastParams f = fast_tangent_trace(n);
  const TangentSeq t = tangent_numbers(n).seq;
  std::vector<BigInt> blocks(n);
  BigInt scale = 1;  // (2n-1)!/(2k-1)!
  for (std::uint64_t k = n; k >= 1; --k) {
    blocks[k - 1] = t.at(k) * scale;
    scale *= (2 * k - 2) * (2 * k - 1);
  }
  return pack_blocks(blocks, 2 * f.p) == f.V;
}

VerificationReport stability_contrast(long precision) {
  VerificationReport r;
  r.n = 60;
  const BernoulliSeq exact = bernoulli_from_tangent(tangent_numbers(40).seq);

  const auto unstable = bernoulli_float_unstable(60, precision);
  double small_max = 0;
  for (std::size_t m = 0; m <= 20; ++m) {
    if (sgn(exact.at(m)) == 0) continue;
    small_max = std::max(small_max, relative_error(unstable[m], exact.at(m)));
  }
  const double err60 = relative_error(unstable[60], exact.at(60));
  std::ostringstream w1, w2, w3;
  w1 << "max relative error " << small_max;
  w2 << "relative error " << err60;
  r.add("stability: unstable recurrence error < 1e-8 for indices <= 20",
        small_max < 1e-8, w1.str());
  r.add("stability: unstable recurrence error > 1 at index 60", err60 > 1,
        w2.str());

  const auto stable = scaled_bernoulli_stable(40, precision);
  double stable_max = 0;
  BigInt fact = 1;
  for (std::uint64_t k = 0; k <= 40; ++k) {
    if (k > 0) fact *= (2 * k - 1) * (2 * k);
    const Rational ck = exact.at(2 * k) / Rational(fact);
    stable_max = std::max(stable_max, relative_error(stable[k], ck));
  }
  w3 << "max relative error " << stable_max;
  r.add("stability: scaled recurrence error < 1e-12 through C_40",
        stable_max < 1e-12, w3.str());
  return r;
}

VerificationReport verify_all(std::uint64_t n, long precision) {
  VerificationReport r = cross_check(n);
  const TangentSeq t = tangent_numbers(n).seq;
  const BernoulliSeq b = bernoulli_from_tangent(t);

  std::string vsc_witness, fermat_witness, zeta_witness;
  const Rational* prev_lower = nullptr;
  std::vector<ZetaRatio> ratios;
  ratios.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t m = 2 * k;
    if (vsc_witness.empty()) {
      try {
        von_staudt_clausen(m, b.at(m));
      } catch (const TheoremViolation& e) {
        vsc_witness = e.what();
      }
    }
    if (fermat_witness.empty() && !fermat_denominator_check(m, b.at(m))) {
      fermat_witness = "m = " + std::to_string(m);
    }
    if (k >= 2 && zeta_witness.empty()) {
      ratios.push_back(zeta_ratio_check(k, b.at(m)));
      const ZetaRatio& z = ratios.back();
      if (!z.within_tail_bound(k)) {
        zeta_witness = "n = " + std::to_string(k) + ": rho ~ " +
                       std::to_string(z.approx());
      } else if (prev_lower != nullptr && !(z.upper < *prev_lower)) {
        zeta_witness = "n = " + std::to_string(k) + ": rho not decreasing";
      }
      prev_lower = &ratios.back().lower;
    }
  }
  r.add("von staudt-clausen: B_2k + sum 1/p integral, den exact",
        vsc_witness.empty(), vsc_witness);
  r.add("fermat: odd primes of den(B_2k) divide 2^2k - 1",
        fermat_witness.empty(), fermat_witness);
  if (n >= 2) {
    r.add("euler: 1 < rho(k) < 1 + 2^(1-2k), decreasing", zeta_witness.empty(),
          zeta_witness);
  }
  r.append(size_checks(t, b));

  if (n >= 2) {
    r.append(block_bound_check(n));
    const Rational audit = quotient_fraction_audit(n);
    r.add("fast: quotient fraction < 0.12", audit < Rational(12, 100),
          "distance ~ " + std::to_string(audit.get_d()));
    r.add("fast: packed T'_{k,n} reproduce V", packing_identity(n));
    if (n <= 30) {
      const Rational rem = remainder_in_v_units(n);
      r.add("fast: 0 < R_n(z)/z^(2n-1) < 0.1",
            sgn(rem) > 0 && rem < Rational(1, 10),
            "remainder ~ " + std::to_string(rem.get_d()));
    }
  }
  r.append(stability_contrast(precision));
  return r;
}

}  // namespace bts
