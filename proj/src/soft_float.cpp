#include "bts/soft_float.hpp"

#include <cmath>
#include <utility>

namespace bts {

namespace {

void check_precision(long precision) {
  if (precision < SoftFloat::kMinPrecision || precision > MPFR_PREC_MAX) {
    throw DomainError("SoftFloat: invalid precision " +
                      std::to_string(precision));
  }
}

void check_same(const SoftFloat& a, const SoftFloat& b) {
  if (a.precision() != b.precision()) {
    throw DomainError("SoftFloat: mixed precisions " +
                      std::to_string(a.precision()) + " and " +
                      std::to_string(b.precision()));
  }
}

}  // namespace

SoftFloat::SoftFloat(long precision) : precision_(precision) {
  check_precision(precision);
  mpfr_init2(value_, precision);
  owns_ = true;
  mpfr_set_zero(value_, 1);
}

SoftFloat::SoftFloat(long precision, long value) : SoftFloat(precision) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

SoftFloat::SoftFloat(long precision, const BigInt& value)
    : SoftFloat(precision) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

SoftFloat::SoftFloat(long precision, const Rational& value)
    : SoftFloat(precision) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

SoftFloat::SoftFloat(const SoftFloat& other) : SoftFloat(other.precision_) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

SoftFloat::SoftFloat(SoftFloat&& other) noexcept
    : precision_(other.precision_) {
  // mpfr_t is an array-of-struct; moving transfers the limb pointer.
  value_[0] = other.value_[0];
  owns_ = std::exchange(other.owns_, false);
}

SoftFloat& SoftFloat::operator=(const SoftFloat& other) {
  if (this != &other) {
    SoftFloat tmp(other);
    *this = std::move(tmp);
  }
  return *this;
}

SoftFloat& SoftFloat::operator=(SoftFloat&& other) noexcept {
  if (this != &other) {
    if (owns_) mpfr_clear(value_);
    precision_ = other.precision_;
    value_[0] = other.value_[0];
    owns_ = std::exchange(other.owns_, false);
  }
  return *this;
}

SoftFloat::~SoftFloat() {
  if (owns_) mpfr_clear(value_);
}

bool SoftFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

Rational SoftFloat::to_rational() const {
  if (!mpfr_number_p(value_)) {
    throw IntegrityError("SoftFloat: value is not finite");
  }
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

double SoftFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

SoftFloat operator+(const SoftFloat& a, const SoftFloat& b) {
  check_same(a, b);
  SoftFloat r(a.precision_);
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

SoftFloat operator-(const SoftFloat& a, const SoftFloat& b) {
  check_same(a, b);
  SoftFloat r(a.precision_);
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

SoftFloat operator*(const SoftFloat& a, const SoftFloat& b) {
  check_same(a, b);
  SoftFloat r(a.precision_);
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

SoftFloat operator/(const SoftFloat& a, const SoftFloat& b) {
  check_same(a, b);
  if (b.is_zero()) throw DomainError("SoftFloat: division by zero");
  SoftFloat r(a.precision_);
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

SoftFloat SoftFloat::operator-() const {
  SoftFloat r(precision_);
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

double relative_error(const SoftFloat& approx, const Rational& exact) {
  Rational diff = approx.to_rational() - exact;
  if (sgn(exact) != 0) diff /= exact;
  return std::fabs(diff.get_d());
}

}  // namespace bts
