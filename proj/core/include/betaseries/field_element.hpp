#pragma once

#include <string>
#include <vector>

#include "betaseries/algebraic_base.hpp"

namespace betaseries {

/// Element of Q(beta) in the power basis 1, beta, ..., beta^(d-1). The
/// representation is always reduced, so equality is coordinate equality.
class FieldElement {
 public:
  FieldElement(AlgebraicBase base, std::vector<Rational> coords);

  static FieldElement rational(const AlgebraicBase& base, const Rational& q);
  static FieldElement beta(const AlgebraicBase& base);
  // beta^n for n >= 0.
  static FieldElement beta_power(const AlgebraicBase& base, unsigned long n);

  const AlgebraicBase& base() const { return base_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_rational() const;
  bool is_zero() const;
  bool has_integer_coords() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& c, const FieldElement& a);
  // Throws DomainError for division by zero.
  FieldElement inverse() const;
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.base_ == b.base_ && a.coords_ == b.coords_;
  }

  std::string to_string() const;

 private:
  AlgebraicBase base_;
  std::vector<Rational> coords_;
};

enum class FieldOp { add, sub, mul };
// Throws BaseMismatch when the operands live over different bases.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

/// Enclosure of the real embedding (beta -> the root > 1) with width at
/// most `target_width`. Exact for rational elements.
RealEnclosure embed_real(const FieldElement& x, const Rational& target_width);

/// Enclosure at a fixed beta precision, without a width target.
RealEnclosure embed_at_bits(const FieldElement& x, unsigned long bits);

/// floor of the real embedding, decided exactly.
Integer certified_floor(const FieldElement& x);

}  // namespace betaseries
