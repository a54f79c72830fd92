#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace betaseries {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "17", "-3/4", "0.125", "1e-9", "2.5E+3" exactly. Binary floating
// point never enters the picture.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

// 2^-bits as an exact rational.
Rational dyadic_unit(unsigned long bits);

// Decimal rendering with `digits` fractional digits. The rounding direction
// is explicit so that printed enclosures stay valid.
enum class Rounding { down, up, nearest };
std::string to_decimal(const Rational& q, unsigned digits, Rounding mode);

// Fractional digits needed so that a printed enclosure of width `width`
// shows its leading significant digits plus a few guard digits.
unsigned digits_for_width(const Rational& width);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Approximate conversion for statistics and logging only.
double to_double(const Rational& q);

// Largest integer r with r^2 <= n (n >= 0), and the exact check.
Integer isqrt(const Integer& n);

// Rational bounds on sqrt(q), q >= 0, accurate to about 2^-bits relative.
Rational sqrt_lower(const Rational& q, unsigned long bits);
Rational sqrt_upper(const Rational& q, unsigned long bits);

}  // namespace betaseries
