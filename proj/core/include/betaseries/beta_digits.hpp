#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "betaseries/field_element.hpp"

namespace betaseries {

/// Digits s_1, s_2, ... of an expansion in an algebraic base beta or an
/// integer base b, plus s_0 for integer bases.
struct DigitStream {
  std::optional<AlgebraicBase> beta;  // empty for an integer base
  std::uint64_t b = 0;                // integer base, 0 when beta is set
  Integer integral_part = 0;          // s_0
  std::vector<std::uint64_t> digits;  // digits[n-1] = s_n

  bool is_beta() const { return beta.has_value(); }
  // Largest admissible digit: floor(beta) or b-1.
  Integer max_digit() const;
  std::uint64_t digit(std::uint64_t n) const;  // n >= 1
};

/// First n digits of the Renyi expansion of eta in [0,1), from the exact
/// orbit x -> beta x - floor(beta x) in Q(beta).
DigitStream beta_expand(const FieldElement& eta, std::uint64_t n);

/// s_0 = floor(eta), then n fractional digits in base b (terminating form).
DigitStream base_b_expand(const Rational& eta, std::uint64_t b, std::uint64_t n);

/// Nonzero digit count. Beta streams count 1 <= n <= N; integer-base
/// streams count 0 <= n < N (s_0 included). Throws InsufficientDigits.
std::uint64_t lambda_digits(const DigitStream& stream, std::uint64_t n);

/// Enclosure of the expanded value: partial sum plus
/// [0, max_digit * beta^-N * beta/(beta-1)].
RealEnclosure reconstruct(const DigitStream& stream, const Rational& width);

// CSV "n,digit"; integer-base streams start at n = 0.
void write_digits_csv(std::ostream& out, const DigitStream& stream);

/// s_1..s_N one byte each. UnsupportedBase when a digit may exceed 255.
std::vector<std::uint8_t> digit_bytes(const DigitStream& stream);

}  // namespace betaseries
