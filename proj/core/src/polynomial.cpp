#include "betaseries/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "betaseries/error.hpp"

namespace betaseries {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_palindromic() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return !coeffs_.empty();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  // Clear the denominator: q^d p(n/q) is an integer with the same sign.
  const Integer& n = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = 0;
  Integer qpow = 1;
  // Horner in homogeneous form: acc = sum a_i n^i q^(d-i).
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it * qpow;
    qpow *= q;
  }
  // The loop multiplied the i-th term by q^(d-i) relative to the leading
  // term, matching the homogeneous form exactly.
  return sgn(acc);
}

Polynomial Polynomial::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
  return Polynomial(std::move(r));
}

Integer Polynomial::norm_squared() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c * c;
  return s;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
  os << "]";
  return os.str();
}

bool divides_exactly(const Polynomial& divisor, const Polynomial& dividend, Polynomial* quotient) {
  if (!divisor.is_monic()) fail(ErrorCode::invalid_argument, "divides_exactly needs a monic divisor");
  const int dd = divisor.degree();
  std::vector<Integer> rem = dividend.coefficients();
  if (static_cast<int>(rem.size()) - 1 < dd) {
    if (quotient) *quotient = Polynomial();
    return dividend.is_zero();
  }
  std::vector<Integer> q(rem.size() - static_cast<std::size_t>(dd), Integer(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const Integer c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeff(j);
  }
  for (int i = 0; i < dd; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  if (quotient) *quotient = Polynomial(std::move(q));
  return true;
}

namespace {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b over Q.
RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_of_rational_poly(const RationalPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.degree() < 1) fail(ErrorCode::invalid_polynomial, "Sturm sequence of a constant");
  RationalPoly p0, p1;
  for (const auto& c : p.coefficients()) p0.emplace_back(c);
  const Polynomial dp = p.derivative();
  for (const auto& c : dp.coefficients()) p1.emplace_back(c);
  chain_.push_back(p0);
  chain_.push_back(p1);
  while (chain_.back().size() > 1) {
    RationalPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;  // not squarefree; chain ends at the gcd
    // Negate and normalize by a positive scalar (keeps the sign pattern).
    const Rational scale = abs(r.back());
    for (auto& c : r) c = -c / scale;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& p : chain_) {
    const int s = sign_of_rational_poly(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(int sign) const {
  int count = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.back());
    if (sign < 0 && (p.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
  return variations_at(a) - variations_at_infinity(+1);
}

int SturmSequence::count_real_roots() const {
  return variations_at_infinity(-1) - variations_at_infinity(+1);
}

Rational cauchy_bound(const Polynomial& p) {
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeff(i))));
  Rational b(m, abs(p.leading()));
  b.canonicalize();
  return b + 1;
}

ComplexQ evaluate(const Polynomial& p, const ComplexQ& z) {
  ComplexQ acc{0, 0};
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    Rational re = acc.re * z.re - acc.im * z.im + Rational(*it);
    Rational im = acc.re * z.im + acc.im * z.re;
    acc.re = std::move(re);
    acc.im = std::move(im);
  }
  return acc;
}

Rational norm_squared(const ComplexQ& z) { return z.re * z.re + z.im * z.im; }

ComplexBox bounding_box(const RootDisk& disk) {
  return {disk.center.re - disk.radius, disk.center.re + disk.radius, disk.center.im - disk.radius,
          disk.center.im + disk.radius};
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth(const Polynomial& p, long double rotation) {
  const int d = p.degree();
  std::vector<long double> a;
  for (const auto& c : p.coefficients()) a.push_back(static_cast<long double>(c.get_d()));
  auto eval = [&](cld z, cld& deriv) {
    cld f = 0;
    deriv = 0;
    for (int i = d; i >= 0; --i) {
      deriv = deriv * z + f;
      f = f * z + a[static_cast<std::size_t>(i)];
    }
    return f;
  };
  const long double radius = to_double(cauchy_bound(p)) * 0.5L + 0.5L;
  std::vector<cld> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k)
    z[static_cast<std::size_t>(k)] =
        std::polar(radius, 2.0L * std::numbers::pi_v<long double> * k / d + rotation);
  for (int iter = 0; iter < 2000; ++iter) {
    long double max_step = 0;
    for (int k = 0; k < d; ++k) {
      cld deriv;
      const cld f = eval(z[static_cast<std::size_t>(k)], deriv);
      if (f == cld(0)) continue;
      const cld w = f / deriv;
      cld s = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) s += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      const cld step = w / (1.0L - w * s);
      z[static_cast<std::size_t>(k)] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
    }
    if (max_step < 1e-18L) break;
  }
  return z;
}

Rational round_dyadic(const Rational& x, unsigned long bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Integer n = floor_of(x * scale + Rational(1, 2));
  Rational r(n, scale);
  r.canonicalize();
  return r;
}

ComplexQ to_exact(cld z) {
  // long double -> double loses a few bits; Newton refinement restores them.
  return {Rational(static_cast<double>(z.real())), Rational(static_cast<double>(z.imag()))};
}

// One Newton step z - f(z)/f'(z), rounded to the dyadic grid.
ComplexQ newton_step(const Polynomial& p, const Polynomial& dp, const ComplexQ& z, unsigned long bits) {
  const ComplexQ f = evaluate(p, z);
  const ComplexQ g = evaluate(dp, z);
  const Rational den = norm_squared(g);
  if (den == 0) return z;
  // f/g = f * conj(g) / |g|^2
  const Rational re = (f.re * g.re + f.im * g.im) / den;
  const Rational im = (f.im * g.re - f.re * g.im) / den;
  return {round_dyadic(z.re - re, bits), round_dyadic(z.im - im, bits)};
}

bool try_certify(const Polynomial& p, const Polynomial& dp, std::vector<ComplexQ>& approx,
                 unsigned long bits, std::vector<RootDisk>& out) {
  const int d = p.degree();
  for (auto& z : approx) {
    // Quadratic convergence: a handful of steps per doubling of bits.
    for (int it = 0; it < 8; ++it) z = newton_step(p, dp, z, bits + 16);
  }
  std::vector<RootDisk> disks;
  disks.reserve(approx.size());
  for (const auto& z : approx) {
    const ComplexQ f = evaluate(p, z);
    const ComplexQ g = evaluate(dp, z);
    const Rational g2 = norm_squared(g);
    if (g2 == 0) return false;
    const Rational r2 = Rational(d * d) * norm_squared(f) / g2;
    disks.push_back({z, sqrt_upper(r2, bits + 8)});
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const ComplexQ diff{disks[i].center.re - disks[j].center.re, disks[i].center.im - disks[j].center.im};
      const Rational dist = sqrt_lower(norm_squared(diff), bits + 8);
      if (dist <= disks[i].radius + disks[j].radius) return false;
    }
  }
  out = std::move(disks);
  return true;
}

}  // namespace

std::vector<RootDisk> isolate_complex_roots(const Polynomial& p, unsigned long start_bits,
                                            unsigned long max_bits) {
  const int d = p.degree();
  if (d < 1) fail(ErrorCode::invalid_polynomial, "root isolation of a constant polynomial");
  if (d == 1) {
    Rational root(-p.coeff(0), p.coeff(1));
    root.canonicalize();
    return {RootDisk{{root, 0}, 0}};
  }
  const Polynomial dp = p.derivative();
  // A few different starting configurations in case Aberth pairs two
  // approximations onto the same root.
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<ComplexQ> approx;
    for (const auto& z : aberth(p, 0.4L + 0.37L * attempt)) approx.push_back(to_exact(z));
    for (unsigned long bits = std::max(start_bits, 64UL); bits <= max_bits; bits *= 2) {
      std::vector<RootDisk> disks;
      if (try_certify(p, dp, approx, bits, disks)) return disks;
      if (bits >= 256 && attempt + 1 < 4) break;
    }
  }
  fail(ErrorCode::precision_budget_exceeded,
       "could not isolate the complex roots of " + p.to_string() + " within the precision budget");
}

Rational modulus_lower(const RootDisk& disk, unsigned long bits) {
  return sqrt_lower(norm_squared(disk.center), bits) - disk.radius;
}

Rational modulus_upper(const RootDisk& disk, unsigned long bits) {
  return sqrt_upper(norm_squared(disk.center), bits) + disk.radius;
}

RootDisk disk_product(std::span<const RootDisk> disks, unsigned long bits) {
  RootDisk acc{{1, 0}, 0};
  for (const auto& d : disks) {
    const Rational acc_mod = sqrt_upper(norm_squared(acc.center), bits);
    const Rational d_mod = sqrt_upper(norm_squared(d.center), bits);
    ComplexQ c{acc.center.re * d.center.re - acc.center.im * d.center.im,
               acc.center.re * d.center.im + acc.center.im * d.center.re};
    const Rational r = acc_mod * d.radius + d_mod * acc.radius + acc.radius * d.radius;
    acc = {std::move(c), r};
  }
  return acc;
}

}  // namespace betaseries
