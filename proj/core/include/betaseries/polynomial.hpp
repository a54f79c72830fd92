#pragma once

#include <span>
#include <string>
#include <vector>

#include "betaseries/rational.hpp"

namespace betaseries {

/// Dense univariate polynomial with integer coefficients, ascending degree
/// order, no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // a_i == a_{d-i} for all i.
  bool is_palindromic() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  Polynomial derivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

  // Sum of |a_i|^2.
  Integer norm_squared() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Division by a monic divisor over Z. Returns false if the remainder is
/// nonzero.
bool divides_exactly(const Polynomial& divisor, const Polynomial& dividend, Polynomial* quotient);

/// Rational-coefficient polynomial used by the Sturm machinery.
using RationalPoly = std::vector<Rational>;

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  // Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  // Number of distinct real roots in (a, +inf).
  int count_roots_above(const Rational& a) const;
  int count_real_roots() const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int sign) const;
  std::vector<RationalPoly> chain_;
};

// 1 + max |a_i| / |a_d|: every root has modulus below this.
Rational cauchy_bound(const Polynomial& p);

/// Gaussian rational.
struct ComplexQ {
  Rational re;
  Rational im;
};

ComplexQ evaluate(const Polynomial& p, const ComplexQ& z);
Rational norm_squared(const ComplexQ& z);

/// A certified disk containing exactly one root of the polynomial.
struct RootDisk {
  ComplexQ center;
  Rational radius;  // rational upper bound for the certified radius
};

/// Axis-aligned enclosure derived from a disk.
struct ComplexBox {
  Rational re_lower, re_upper, im_lower, im_upper;
};

ComplexBox bounding_box(const RootDisk& disk);

/// Certified isolation of all complex roots of a squarefree polynomial.
/// Disks are pairwise disjoint and each contains exactly one root.
/// `start_bits` is the initial working precision; escalation doubles it up
/// to `max_bits` (PrecisionBudgetExceeded beyond that).
std::vector<RootDisk> isolate_complex_roots(const Polynomial& p, unsigned long start_bits,
                                            unsigned long max_bits);

// Certified bounds on |center| - radius and |center| + radius.
Rational modulus_lower(const RootDisk& disk, unsigned long bits);
Rational modulus_upper(const RootDisk& disk, unsigned long bits);

/// Disk arithmetic product of all disks: returns a disk containing the
/// product of the enclosed roots.
RootDisk disk_product(std::span<const RootDisk> disks, unsigned long bits);

}  // namespace betaseries
