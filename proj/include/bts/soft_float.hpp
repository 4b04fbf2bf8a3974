// Binary floating point with a caller-chosen significand width.
//
// Every result is rounded to `precision` bits with round-half-to-even, so
// runs are bit-reproducible for a given precision. Backed by MPFR.

#pragma once

#include <cstdint>

#include <mpfr.h>

#include "bts/numeric.hpp"

namespace bts {

class SoftFloat {
 public:
  static constexpr long kMinPrecision = 2;

  explicit SoftFloat(long precision);
  SoftFloat(long precision, long value);
  SoftFloat(long precision, const BigInt& value);
  SoftFloat(long precision, const Rational& value);

  SoftFloat(const SoftFloat& other);
  SoftFloat(SoftFloat&& other) noexcept;
  SoftFloat& operator=(const SoftFloat& other);
  SoftFloat& operator=(SoftFloat&& other) noexcept;
  ~SoftFloat();

  long precision() const { return precision_; }
  bool is_zero() const;

  /// The stored binary value, exactly.
  Rational to_rational() const;
  double to_double() const;

  friend SoftFloat operator+(const SoftFloat& a, const SoftFloat& b);
  friend SoftFloat operator-(const SoftFloat& a, const SoftFloat& b);
  friend SoftFloat operator*(const SoftFloat& a, const SoftFloat& b);
  friend SoftFloat operator/(const SoftFloat& a, const SoftFloat& b);
  SoftFloat operator-() const;

  SoftFloat& operator+=(const SoftFloat& b) { return *this = *this + b; }
  SoftFloat& operator-=(const SoftFloat& b) { return *this = *this - b; }

 private:
  long precision_;
  mpfr_t value_;
  bool owns_ = false;
};

/// |approx - exact| / |exact| evaluated exactly, then rounded to double.
/// For exact == 0 this returns |approx|.
double relative_error(const SoftFloat& approx, const Rational& exact);

}  // namespace bts
