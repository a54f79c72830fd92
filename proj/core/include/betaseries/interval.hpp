#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "betaseries/rational.hpp"

namespace betaseries {

/// Owning wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

/// Closed interval with MPFR endpoints rounded outward. Every operation
/// returns an interval that contains the exact result for every choice of
/// arguments in the operand intervals.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Rational& value, mpfr_prec_t prec);
  Interval(const Rational& lower, const Rational& upper, mpfr_prec_t prec);

  static Interval from_long(long value, mpfr_prec_t prec);
  static Interval from_integer(const Integer& value, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return lo_.precision(); }

  const Mpfr& lower() const { return lo_; }
  const Mpfr& upper() const { return hi_; }
  Rational lower_q() const { return lo_.to_rational(); }
  Rational upper_q() const { return hi_.to_rational(); }
  Rational width() const { return upper_q() - lower_q(); }
  double midpoint() const;

  bool contains(const Rational& q) const;
  bool contains_zero() const;
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }
  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool certainly_less(const Interval& other) const;
  bool certainly_greater(const Interval& other) const { return other.certainly_less(*this); }

  // floor(x) if it is the same integer across the whole interval.
  std::optional<Integer> unique_floor() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& other) { return *this = *this + other; }
  Interval& operator*=(const Interval& other) { return *this = *this * other; }

  // Convex hull.
  static Interval hull(const Interval& a, const Interval& b);

  friend Interval exp(const Interval& x);
  friend Interval log(const Interval& x);       // requires x > 0
  friend Interval sqrt(const Interval& x);      // requires x >= 0
  friend Interval pow(const Interval& base, const Interval& exponent);  // base > 0
  friend Interval pow(const Interval& base, unsigned long exponent);
  friend Interval lngamma(const Interval& x);   // x >= 2
  friend Interval digamma(const Interval& x);   // x > 0

  std::string debug_string() const;

 private:
  Mpfr lo_;
  Mpfr hi_;
};

}  // namespace betaseries
