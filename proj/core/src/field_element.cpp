#include "betaseries/field_element.hpp"

#include <sstream>

#include "betaseries/error.hpp"

namespace betaseries {

namespace {

void check_same_base(const FieldElement& a, const FieldElement& b) {
  if (!(a.base() == b.base()))
    fail(ErrorCode::base_mismatch, "field elements over " + a.base().min_poly().to_string() + " and " +
                                       b.base().min_poly().to_string());
}

// Reduce a coefficient vector of any length modulo the monic polynomial.
std::vector<Rational> reduce(std::vector<Rational> c, const Polynomial& p) {
  const int d = p.degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    const Rational lead = c[static_cast<std::size_t>(i)];
    if (lead != 0)
      for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(i - d + j)] -= lead * p.coeff(j);
  }
  c.resize(static_cast<std::size_t>(d), Rational(0));
  return c;
}

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// (q, r) with a = q b + r over Q.
void divmod(std::vector<Rational> a, const std::vector<Rational>& b, std::vector<Rational>& q,
            std::vector<Rational>& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

FieldElement::FieldElement(AlgebraicBase base, std::vector<Rational> coords)
    : base_(std::move(base)), coords_(reduce(std::move(coords), base_.min_poly())) {}

FieldElement FieldElement::rational(const AlgebraicBase& base, const Rational& q) {
  return FieldElement(base, {q});
}

FieldElement FieldElement::beta(const AlgebraicBase& base) {
  return FieldElement(base, {Rational(0), Rational(1)});
}

FieldElement FieldElement::beta_power(const AlgebraicBase& base, unsigned long n) {
  FieldElement result = rational(base, 1);
  FieldElement square = beta(base);
  while (n) {
    if (n & 1) result = result * square;
    square = square * square;
    n >>= 1;
  }
  return result;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::has_integer_coords() const {
  for (const auto& c : coords_)
    if (!is_integer(c)) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coords_;
  for (auto& x : c) x = -x;
  return FieldElement(base_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_base(a, b);
  std::vector<Rational> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.base_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_base(a, b);
  std::vector<Rational> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return FieldElement(a.base_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_base(a, b);
  return FieldElement(a.base_, poly_mul(a.coords_, b.coords_));
}

FieldElement operator*(const Rational& c, const FieldElement& a) {
  std::vector<Rational> r = a.coords_;
  for (auto& x : r) x *= c;
  return FieldElement(a.base_, std::move(r));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::domain_error, "inverse of zero in Q(beta)");
  // Extended Euclid: s*x + t*p = 1, so s is the inverse.
  std::vector<Rational> p;
  for (const auto& c : base_.min_poly().coefficients()) p.emplace_back(c);
  std::vector<Rational> r0 = p, r1 = coords_;
  trim(r1);
  std::vector<Rational> s0, s1{Rational(1)};
  while (r1.size() > 1) {
    std::vector<Rational> q, r;
    divmod(r0, r1, q, r);
    std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because the minimal polynomial is irreducible.
  const Rational inv = 1 / r1[0];
  for (auto& c : s1) c *= inv;
  return FieldElement(base_, std::move(s1));
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << "]";
  return os.str();
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
  }
  return a;
}

RealEnclosure embed_at_bits(const FieldElement& x, unsigned long bits) {
  if (x.is_rational()) return RealEnclosure::point(x.coords()[0]);
  const RealEnclosure b = x.base().beta_enclosure(bits);
  // beta > 1, so beta^i is increasing in beta and each term is monotone.
  RealEnclosure acc = RealEnclosure::point(0);
  Rational lo_pow = 1, hi_pow = 1;
  for (const auto& c : x.coords()) {
    if (c > 0) {
      acc.lower += c * lo_pow;
      acc.upper += c * hi_pow;
    } else if (c < 0) {
      acc.lower += c * hi_pow;
      acc.upper += c * lo_pow;
    }
    lo_pow *= b.lower;
    hi_pow *= b.upper;
  }
  return acc;
}

RealEnclosure embed_real(const FieldElement& x, const Rational& target_width) {
  if (x.is_rational()) return RealEnclosure::point(x.coords()[0]);
  const auto& config = x.base().precision();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    RealEnclosure e = embed_at_bits(x, bits);
    if (e.width() <= target_width) return e;
  }
  fail(ErrorCode::precision_budget_exceeded,
       "embedding of " + x.to_string() + " did not reach width " + target_width.get_str());
}

Integer certified_floor(const FieldElement& x) {
  if (x.is_rational()) return floor_of(x.coords()[0]);
  const auto& config = x.base().precision();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    const RealEnclosure e = embed_at_bits(x, bits);
    const Integer lo = floor_of(e.lower);
    if (lo == floor_of(e.upper)) return lo;
  }
  fail(ErrorCode::precision_budget_exceeded, "certified floor of " + x.to_string() + " ran out of precision");
}

}  // namespace betaseries
