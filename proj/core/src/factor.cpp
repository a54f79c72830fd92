#include "betaseries/factor.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "betaseries/error.hpp"

namespace betaseries {

namespace {

RationalPoly to_rational(const Polynomial& f) {
  RationalPoly r;
  for (const auto& c : f.coefficients()) r.emplace_back(c);
  return r;
}

void trim_q(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly rem_q(RationalPoly a, const RationalPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

}  // namespace

bool is_squarefree(const Polynomial& f) {
  if (f.degree() <= 1) return !f.is_zero();
  RationalPoly a = to_rational(f);
  const Polynomial df = f.derivative();
  RationalPoly b = to_rational(df);
  while (!b.empty()) {
    RationalPoly r = rem_q(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

namespace modp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inverse(u64 a, u64 p) { return powmod(a, p - 2, p); }

Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly add(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// a = q*b + r
void divmod(Poly a, const Poly& b, u64 p, Poly* q, Poly* r) {
  const u64 inv = inverse(b.back(), p);
  Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const u64 c = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(a);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

Poly monic(Poly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = inverse(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

// base^e mod m, with e given as a GMP integer.
Poly powmod(Poly base, const Integer& e, const Poly& m, u64 p) {
  Poly result{1};
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, p), m, p);
  }
  return result;
}

Poly derivative(const Poly& a, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % p, p));
  trim(d);
  return d;
}

void equal_degree_split(const Poly& g, unsigned degree, u64 p, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (g.size() - 1 == degree) {
    out.push_back(g);
    return;
  }
  const Integer exponent = (pow(Integer(p), degree) - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    Poly a(g.size() - 1);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.size() < 2) continue;
    Poly b = sub(powmod(a, exponent, g, p), Poly{1}, p);
    Poly h = gcd(g, b, p);
    if (h.size() > 1 && h.size() < g.size()) {
      Poly q;
      divmod(g, h, p, &q, nullptr);
      equal_degree_split(h, degree, p, rng, out);
      equal_degree_split(monic(q, p), degree, p, rng, out);
      return;
    }
  }
}

}  // namespace

Poly reduce(const Polynomial& f, u64 p) {
  Poly r;
  for (const auto& c : f.coefficients()) {
    Integer m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
    r.push_back(m.get_ui());
  }
  trim(r);
  return r;
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, u64 seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> factors;
  Poly rest = monic(f, p);
  const Poly x{0, 1};
  Poly h = x;
  for (unsigned i = 1; rest.size() > 1; ++i) {
    if (2 * i > rest.size() - 1) {
      factors.push_back(rest);
      break;
    }
    h = powmod(h, Integer(p), rest, p);
    Poly g = gcd(rest, sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, i, p, rng, factors);
      Poly q;
      divmod(rest, g, p, &q, nullptr);
      rest = std::move(q);
      h = rem(h, rest, p);
    }
  }
  return factors;
}

bool squarefree_mod(const Poly& f, u64 p) {
  return gcd(f, derivative(f, p), p).size() == 1;
}

// s*a + t*b = 1 mod p for coprime a, b.
void xgcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, &q, &r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant.
  const u64 inv = inverse(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  trim(s0);
  trim(t0);
  s = std::move(s0);
  t = std::move(t0);
}

}  // namespace modp

namespace {

using modp::Poly;
using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;

ZPoly to_z(const Poly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZPoly mul_z(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly mod_z(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Lift f = g*h (mod p), g and h monic and coprime mod p, to mod p^steps+1.
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, u64 p, unsigned steps) {
  Poly s, t;
  modp::xgcd(modp::reduce(Polynomial(g), p), modp::reduce(Polynomial(h), p), p, s, t);
  const Poly gp = modp::reduce(Polynomial(g), p);
  const Poly hp = modp::reduce(Polynomial(h), p);
  Integer pk = p;
  for (unsigned k = 0; k < steps; ++k) {
    ZPoly gh = mul_z(g, h);
    ZPoly diff(f.size(), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i] - (i < gh.size() ? gh[i] : Integer(0));
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    const Poly e = modp::reduce(Polynomial(diff), p);
    // t*e = q*g + r, then g += p^k r and h += p^k (s*e + q*h).
    Poly q, r;
    modp::divmod(modp::mul(t, e, p), gp, p, &q, &r);
    Poly u = modp::add(modp::mul(s, e, p), modp::mul(q, hp, p), p);
    const ZPoly rz = to_z(r), uz = to_z(u);
    for (std::size_t i = 0; i < rz.size(); ++i) g[i] += pk * rz[i];
    for (std::size_t i = 0; i < uz.size(); ++i) h[i] += pk * uz[i];
    pk *= p;
  }
}

std::set<int> subset_degrees(const std::vector<Poly>& factors) {
  std::set<int> sums{0};
  for (const auto& f : factors) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + static_cast<int>(f.size()) - 1);
    sums = std::move(next);
  }
  return sums;
}

const u64 kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
                       59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                       131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
                       211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283};

}  // namespace

std::optional<Polynomial> find_factor(const Polynomial& f) {
  if (!f.is_monic()) fail(ErrorCode::not_monic, "find_factor needs a monic polynomial");
  const int d = f.degree();
  if (d <= 1) return std::nullopt;
  if (!is_squarefree(f)) {
    // The monic gcd with the derivative is a proper factor.
    RationalPoly a = to_rational(f), b = to_rational(f.derivative());
    while (!b.empty()) {
      RationalPoly r = rem_q(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    // Monic rational factor of a monic integer polynomial has integer
    // coefficients (Gauss).
    std::vector<Integer> coeffs;
    for (const auto& c : a) coeffs.push_back(Rational(c / a.back()).get_num());
    return Polynomial(std::move(coeffs));
  }

  std::set<int> possible;
  for (int i = 0; i <= d; ++i) possible.insert(i);
  u64 best_prime = 0;
  std::vector<Poly> best_factors;
  int primes_used = 0;
  for (u64 p : kPrimes) {
    const Poly fp = modp::reduce(f, p);
    if (!modp::squarefree_mod(fp, p)) continue;
    auto factors = modp::factor_squarefree(fp, p, 0x9e3779b97f4a7c15ULL ^ p);
    const auto sums = subset_degrees(factors);
    std::set<int> keep;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::inserter(keep, keep.begin()));
    possible = std::move(keep);
    if (best_factors.empty() || factors.size() < best_factors.size()) {
      best_prime = p;
      best_factors = std::move(factors);
    }
    if (possible.size() == 2) return std::nullopt;
    if (++primes_used >= 6) break;
  }
  if (best_prime == 0) fail(ErrorCode::precision_budget_exceeded, "no good prime for " + f.to_string());

  // Zassenhaus: lift the factorization mod best_prime far enough that the
  // Mignotte bound separates true factors, then try subset products.
  const u64 p = best_prime;
  const Integer norm = isqrt(f.norm_squared()) + 1;
  const Integer bound = 2 * pow(Integer(2), static_cast<unsigned long>(d)) * norm;
  unsigned steps = 0;
  Integer modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  ZPoly rest = f.coefficients();
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ZPoly g = to_z(best_factors[i]);
    Poly hp{1};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) hp = modp::mul(hp, best_factors[j], p);
    ZPoly h = to_z(hp);
    hensel_lift(rest, g, h, p, steps);
    lifted.push_back(mod_z(g, modulus));
    rest = mod_z(h, modulus);
  }
  lifted.push_back(rest);

  const std::size_t r = lifted.size();
  const Integer half = modulus / 2;
  for (std::size_t size = 1; size <= r / 2; ++size) {
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      int deg = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (pick[i]) deg += static_cast<int>(lifted[i].size()) - 1;
      if (!possible.count(deg)) continue;
      ZPoly g{Integer(1)};
      for (std::size_t i = 0; i < r; ++i)
        if (pick[i]) g = mod_z(mul_z(g, lifted[i]), modulus);
      for (auto& c : g)
        if (c > half) c -= modulus;
      Polynomial candidate(g);
      if (candidate.is_monic() && divides_exactly(candidate, f, nullptr)) return candidate;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace betaseries
