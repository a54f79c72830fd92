#include "betaseries/enclosure.hpp"

#include <algorithm>

namespace betaseries {

unsigned RealEnclosure::decimal_digits() const {
  if (is_point()) return is_integer(lower) ? 0 : 20;
  return digits_for_width(width());
}

std::string RealEnclosure::lower_decimal() const {
  return to_decimal(lower, decimal_digits(), Rounding::down);
}

std::string RealEnclosure::upper_decimal() const {
  return to_decimal(upper, decimal_digits(), Rounding::up);
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  return {a.lower + b.lower, a.upper + b.upper};
}

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  return {a.lower - b.upper, a.upper - b.lower};
}

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  const Rational p[4] = {a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RealEnclosure operator*(const Rational& c, const RealEnclosure& a) {
  if (c >= 0) return {c * a.lower, c * a.upper};
  return {c * a.upper, c * a.lower};
}

}  // namespace betaseries
