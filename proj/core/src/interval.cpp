#include "betaseries/interval.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "betaseries/error.hpp"

namespace betaseries {

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  // Steal the limbs; leave `other` in a valid minimal state.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

Rational Mpfr::to_rational() const {
  if (!mpfr_number_p(value_))
    fail(ErrorCode::domain_error, "non-finite value in interval endpoint");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(const Rational& value, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lower, const Rational& upper, mpfr_prec_t prec)
    : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), lower.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), upper.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::from_long(long value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), value, MPFR_RNDU);
  return r;
}

Interval Interval::from_integer(const Integer& value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), value.get_mpz_t(), MPFR_RNDU);
  return r;
}

double Interval::midpoint() const { return 0.5 * (lo_.to_double() + hi_.to_double()); }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_less_p(hi_.get(), other.lo_.get()) != 0;
}

std::optional<Integer> Interval::unique_floor() const {
  Integer a, b;
  mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDD);
  if (a != b) return std::nullopt;
  return a;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval r(prec);
  // Fast path for the common all-nonnegative case.
  if (mpfr_sgn(a.lo_.get()) >= 0 && mpfr_sgn(b.lo_.get()) >= 0) {
    mpfr_mul(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_mul(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }
  Mpfr t(prec);
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorCode::domain_error, "interval division by an interval containing 0");
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval inv(prec);
  // 1/b is decreasing on each sign branch.
  mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * inv;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.certainly_positive()) fail(ErrorCode::domain_error, "log of an interval not certainly positive");
  Interval r(x.precision());
  mpfr_log(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_.get()) < 0) fail(ErrorCode::domain_error, "sqrt of an interval with negative part");
  Interval r(x.precision());
  mpfr_sqrt(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& base, const Interval& exponent) {
  if (mpfr_sgn(base.lo_.get()) == 0 && mpfr_sgn(base.hi_.get()) == 0 && exponent.certainly_positive())
    return Interval(Rational(0), base.precision());
  return exp(exponent * log(base));
}

Interval pow(const Interval& base, unsigned long exponent) {
  Interval r(base.precision());
  if (mpfr_sgn(base.lo_.get()) >= 0) {
    mpfr_pow_ui(r.lo_.get(), base.lo_.get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), base.hi_.get(), exponent, MPFR_RNDU);
    return r;
  }
  Interval acc = Interval::from_long(1, base.precision());
  for (unsigned long i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

Interval lngamma(const Interval& x) {
  // lngamma is increasing on [2, inf).
  if (mpfr_cmp_ui(x.lo_.get(), 2) < 0) fail(ErrorCode::domain_error, "lngamma interval below 2");
  Interval r(x.precision());
  mpfr_lngamma(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_lngamma(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

Interval digamma(const Interval& x) {
  if (!x.certainly_positive()) fail(ErrorCode::domain_error, "digamma of an interval not certainly positive");
  Interval r(x.precision());
  mpfr_digamma(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_digamma(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

std::string Interval::debug_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo_.to_double() << ", " << hi_.to_double() << "]";
  return os.str();
}

}  // namespace betaseries
