#include "betaseries/rational.hpp"

#include <cctype>
#include <cmath>

#include "betaseries/error.hpp"

namespace betaseries {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    fail(ErrorCode::parse_error, "not an integer: '" + std::string(text) + "'");
  Integer z(std::string(body), 10);
  return negative ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  const auto e = body.find_first_of("eE");
  if (e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    Integer ez = parse_integer(exp_text);
    if (!ez.fits_slong_p() || std::abs(ez.get_si()) > 100000)
      fail(ErrorCode::parse_error, "exponent out of range in '" + std::string(text) + "'");
    exponent = ez.get_si();
    body = body.substr(0, e);
  }

  std::string digits;
  const auto dot = body.find('.');
  if (dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      fail(ErrorCode::parse_error, "not a decimal: '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(body))
      fail(ErrorCode::parse_error, "not a number: '" + std::string(text) + "'");
    digits = std::string(body);
  }

  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  Rational q = exponent >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational dyadic_unit(unsigned long bits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(Integer(1), den);
}

std::string to_decimal(const Rational& q, unsigned digits, Rounding mode) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational scaled = q * scale;
  Integer n;
  switch (mode) {
    case Rounding::down: n = floor_of(scaled); break;
    case Rounding::up: n = ceil_of(scaled); break;
    case Rounding::nearest: n = floor_of(scaled + Rational(1, 2)); break;
  }
  const bool negative = n < 0;
  if (negative) n = -n;
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative) s.insert(0, "-");
  return s;
}

unsigned digits_for_width(const Rational& width) {
  if (width <= 0) return 12;
  // Smallest d with 10^-d <= width, plus guard digits.
  unsigned d = 0;
  Rational w = width;
  while (w < 1 && d < 4000) {
    w *= 10;
    ++d;
  }
  return d + 2;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rational sqrt_lower(const Rational& q, unsigned long bits) {
  // floor(sqrt(q * 4^bits)) / 2^bits
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * bits);
  const Integer s = isqrt(floor_of(q * scale));
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational r(s, den);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned long bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * bits);
  const Integer m = ceil_of(q * scale);
  Integer s = isqrt(m);
  if (s * s < m) s += 1;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational r(s, den);
  r.canonicalize();
  return r;
}

}  // namespace betaseries
