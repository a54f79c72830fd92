#include "betaseries/beta_digits.hpp"

#include <ostream>

#include "betaseries/error.hpp"
#include "betaseries/interval.hpp"

namespace betaseries {

Integer DigitStream::max_digit() const {
  if (beta) return beta->floor_beta();
  return Integer(static_cast<unsigned long>(b - 1));
}

std::uint64_t DigitStream::digit(std::uint64_t n) const {
  if (n == 0 || n > digits.size())
    fail(ErrorCode::insufficient_digits, "digit s_" + std::to_string(n) + " not available, stream has " +
                                             std::to_string(digits.size()));
  return digits[n - 1];
}

DigitStream beta_expand(const FieldElement& eta, std::uint64_t n) {
  const AlgebraicBase& base = eta.base();
  if (certified_floor(eta) != 0)
    fail(ErrorCode::out_of_unit_interval, "beta_expand needs 0 <= eta < 1, got " + eta.to_string());
  DigitStream out;
  out.beta = base;
  out.digits.reserve(n);
  const FieldElement beta = FieldElement::beta(base);
  FieldElement x = eta;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (x.is_zero()) {
      out.digits.resize(n, 0);
      break;
    }
    x = beta * x;
    const Integer d = certified_floor(x);
    x = x - FieldElement::rational(base, Rational(d));
    out.digits.push_back(d.get_ui());
  }
  return out;
}

DigitStream base_b_expand(const Rational& eta, std::uint64_t b, std::uint64_t n) {
  if (b < 2) fail(ErrorCode::invalid_argument, "integer base must be at least 2");
  if (eta < 0) fail(ErrorCode::out_of_unit_interval, "base_b_expand needs eta >= 0");
  DigitStream out;
  out.b = b;
  out.integral_part = floor_of(eta);
  out.digits.reserve(n);
  // Long division on the fractional part; yields the terminating form.
  Integer num = eta.get_num() - out.integral_part * eta.get_den();
  const Integer& den = eta.get_den();
  Integer d;
  for (std::uint64_t i = 0; i < n; ++i) {
    num *= static_cast<unsigned long>(b);
    mpz_fdiv_qr(d.get_mpz_t(), num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.digits.push_back(d.get_ui());
  }
  return out;
}

std::uint64_t lambda_digits(const DigitStream& stream, std::uint64_t n) {
  // beta: n <= N over positive n; integer base: n < N from n = 0.
  const std::uint64_t last = stream.is_beta() ? n : (n == 0 ? 0 : n - 1);
  if (last > stream.digits.size())
    fail(ErrorCode::insufficient_digits, "lambda needs " + std::to_string(last) + " digits, stream has " +
                                             std::to_string(stream.digits.size()));
  std::uint64_t count = 0;
  if (!stream.is_beta() && n > 0 && stream.integral_part != 0) ++count;
  for (std::uint64_t i = 0; i < last; ++i) count += stream.digits[i] != 0;
  return count;
}

RealEnclosure reconstruct(const DigitStream& stream, const Rational& width) {
  if (width <= 0) fail(ErrorCode::invalid_argument, "width must be positive");
  const std::uint64_t n = stream.digits.size();
  const Rational s0(stream.integral_part);
  if (!stream.is_beta()) {
    const Rational bq(Integer(static_cast<unsigned long>(stream.b)));
    Rational sum = 0;
    for (std::uint64_t i = n; i-- > 0;) sum = (sum + Integer(static_cast<unsigned long>(stream.digits[i]))) / bq;
    const Rational tail = Rational(stream.max_digit()) * bq / (pow(bq, n) * (bq - 1));
    if (tail > width)
      fail(ErrorCode::horizon_insufficient, "digit tail " + to_decimal(tail, 6, Rounding::up) +
                                                " exceeds width with " + std::to_string(n) + " digits");
    return {s0 + sum, s0 + sum + tail};
  }
  const AlgebraicBase& base = *stream.beta;
  const auto& config = base.precision();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    const RealEnclosure be = base.beta_enclosure(bits);
    const Rational tail = Rational(stream.max_digit()) * be.lower / (pow(be.lower, n) * (be.lower - 1));
    if (tail > width)
      fail(ErrorCode::horizon_insufficient, "digit tail " + to_decimal(tail, 6, Rounding::up) +
                                                " exceeds width with " + std::to_string(n) + " digits");
    const auto prec = static_cast<mpfr_prec_t>(bits + 64);
    const Interval inv = Interval::from_long(1, prec) / Interval(be.lower, be.upper, prec);
    Interval sum(Rational(0), prec);
    for (std::uint64_t i = n; i-- > 0;)
      sum = (sum + Interval::from_integer(Integer(static_cast<unsigned long>(stream.digits[i])), prec)) * inv;
    RealEnclosure e{s0 + sum.lower_q(), s0 + sum.upper_q() + tail};
    if (e.width() <= width) return e;
  }
  fail(ErrorCode::precision_budget_exceeded, "digit reconstruction did not reach width " + width.get_str());
}

void write_digits_csv(std::ostream& out, const DigitStream& stream) {
  out << "n,digit\n";
  if (!stream.is_beta()) out << "0," << stream.integral_part.get_str() << '\n';
  for (std::uint64_t i = 0; i < stream.digits.size(); ++i) out << i + 1 << ',' << stream.digits[i] << '\n';
}

std::vector<std::uint8_t> digit_bytes(const DigitStream& stream) {
  if (stream.max_digit() > 255)
    fail(ErrorCode::unsupported_base, "byte export needs digits below 256");
  return {stream.digits.begin(), stream.digits.end()};
}

}  // namespace betaseries
