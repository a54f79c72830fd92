#pragma once

#include <string>

#include "betaseries/rational.hpp"

namespace betaseries {

/// Closed interval [lower, upper] with exact rational endpoints.
struct RealEnclosure {
  Rational lower;
  Rational upper;

  static RealEnclosure point(const Rational& q) { return {q, q}; }

  Rational width() const { return upper - lower; }
  bool contains(const Rational& q) const { return lower <= q && q <= upper; }
  bool contains(const RealEnclosure& other) const {
    return lower <= other.lower && other.upper <= upper;
  }
  bool contains_zero() const { return lower <= 0 && upper >= 0; }
  bool is_point() const { return lower == upper; }

  // Decimal rendering rounded outward with enough digits for the width.
  std::string lower_decimal() const;
  std::string upper_decimal() const;
  unsigned decimal_digits() const;
};

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator*(const Rational& c, const RealEnclosure& a);

}  // namespace betaseries
