#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "betaseries/interval.hpp"
#include "betaseries/rational.hpp"
#include "betaseries/support_set.hpp"

namespace betaseries {

enum class SequenceKind { power_floor, log_power, geometric, scaled_factorial, weighted_geometric, explicit_list };

std::string_view sequence_kind_name(SequenceKind kind);

/// A family w(m) = floor(a(m)) of exponents, m >= m0. Real parameters are
/// exact rationals:
///   PowerFloor(rho)          a(m) = m^rho
///   LogPower(y, z)           a(m) = exp((log m)^(1+y) (log log m)^z)
///   Geometric(x)             a(m) = x^m
///   ScaledFactorial(x)       a(m) = x * m!
///   WeightedGeometric(w, k)  a(m) = w * k^m
///   Explicit(values)         a(m) = values[m - m0]
class ExponentSequence {
 public:
  static ExponentSequence power_floor(const Rational& rho);
  static ExponentSequence log_power(const Rational& y, const Rational& z = 0);
  static ExponentSequence geometric(const Rational& x);
  static ExponentSequence scaled_factorial(const Rational& x);
  static ExponentSequence weighted_geometric(const Rational& w, unsigned long k);
  static ExponentSequence explicit_list(std::vector<Integer> values);

  // {"kind": "...", "params": {...}, "m0": int, "leading_constant": bool}
  static ExponentSequence from_json(std::string_view text);
  std::string to_json() const;

  SequenceKind kind() const { return kind_; }
  long m0() const { return m0_; }
  ExponentSequence& set_m0(long m0);
  // Adds the constant term X^0 of the "1 + sum" forms.
  bool leading_constant() const { return leading_constant_; }
  ExponentSequence& set_leading_constant(bool on) {
    leading_constant_ = on;
    return *this;
  }
  ExponentSequence& set_max_bits(unsigned long bits) {
    max_bits_ = bits;
    return *this;
  }
  unsigned long max_bits() const { return max_bits_; }

  const Rational& rho() const { return a_; }
  const Rational& y() const { return a_; }
  const Rational& z() const { return b_; }
  const Rational& x() const { return a_; }
  const Rational& w() const { return a_; }
  unsigned long k() const { return k_; }
  const std::vector<Integer>& values() const { return values_; }

  // Certified floor(a(m)); FloorTieUnresolvable when the floor cannot be
  // separated from an integer within the precision budget.
  Integer term(long m) const;

  // Enclosure of the real value a(m) at the given MPFR precision.
  Interval value(long m, mpfr_prec_t prec) const;

  // Certified a(m) <= r.
  bool value_at_most(long m, const Rational& r) const;

  // Smallest index from which a(m) is strictly increasing (so the floors
  // never decrease and no later term drops below an earlier one).
  long increasing_from() const;

  std::string describe() const;

 private:
  ExponentSequence(SequenceKind kind, long m0, bool leading) : kind_(kind), m0_(m0), leading_constant_(leading) {}
  void validate() const;
  SequenceKind kind_;
  long m0_;
  bool leading_constant_;
  Rational a_ = 0, b_ = 0;
  unsigned long k_ = 0;
  std::vector<Integer> values_;
  unsigned long max_bits_ = 16384;
};

/// Every exponent w(m) < N, with multiplicities (plus 0 for a leading
/// constant). Complete below N.
SupportSet support_up_to(const ExponentSequence& seq, std::uint64_t n);

/// #{m >= m0 : a(m) <= R}, by certified comparison of the real values.
std::uint64_t inverse_count(const ExponentSequence& seq, const Rational& r);

/// psi(y; R) = exp((log R)^(1/(1+y))), the inverse of R -> exp((log R)^(1+y)).
/// DomainError unless R >= 3 and y >= 0.
Interval psi(const Rational& y, const Interval& r);
Interval psi(const Rational& y, const Rational& r, mpfr_prec_t prec);

/// phi(y, z; R) = exp((log R)^(1+y) (log log R)^z).
Interval phi(const Rational& y, const Rational& z, const Interval& r);

}  // namespace betaseries
