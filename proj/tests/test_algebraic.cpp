#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "betaseries/algebraic_base.hpp"
#include "betaseries/error.hpp"
#include "betaseries/factor.hpp"
#include "betaseries/field_element.hpp"

using namespace betaseries;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::io_error;
}

// Plain Durand-Kerner in double precision, used only as a cross-check.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  const int d = p.degree();
  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) z[static_cast<std::size_t>(k)] = std::pow(std::complex<double>(0.4, 0.9), k);
  for (int it = 0; it < 500; ++it) {
    for (int k = 0; k < d; ++k) {
      std::complex<double> f = 0;
      for (int i = d; i >= 0; --i) f = f * z[static_cast<std::size_t>(k)] + p.coeff(i).get_d();
      std::complex<double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != k) den *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
      z[static_cast<std::size_t>(k)] -= f / den;
    }
  }
  return z;
}

const AlgebraicBase& golden() {
  static const AlgebraicBase b = AlgebraicBase::create(poly({-1, -1, 1}));
  return b;
}

}  // namespace

TEST_CASE("polynomial parsing accepts numbers and strings") {
  CHECK(parse_polynomial("[-1,-1,1]") == poly({-1, -1, 1}));
  CHECK(parse_polynomial(R"(["-2","1"])") == poly({-2, 1}));
  CHECK(code_of([] { parse_polynomial("[1.5,1]"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_polynomial("{}"); }) == ErrorCode::parse_error);
}

TEST_CASE("sturm counts") {
  const SturmSequence s(poly({-2, 0, 1}));
  CHECK(s.count_real_roots() == 2);
  CHECK(s.count_roots_above(1) == 1);
  CHECK(s.count_roots(-2, 0) == 1);
  const SturmSequence t(poly({1, 0, 1}));
  CHECK(t.count_real_roots() == 0);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(poly({-1, -1, 1})));
  CHECK(is_irreducible(poly({1, -1, -1, -1, 1})));
  CHECK_FALSE(is_irreducible(poly({-1, 0, 1})));
  CHECK_FALSE(is_irreducible(poly({1, 0, 2, 0, 1})));  // (x^2+1)^2
  // x^4 + 1 is irreducible over Q but splits mod every prime, so the
  // degree sieve alone cannot decide it.
  CHECK(is_irreducible(poly({1, 0, 0, 0, 1})));
  // (x^2+x+1)(x^3-x-1) needs a recombined factor.
  const auto f = find_factor(poly({1, 1, 1}) * poly({-1, -1, 0, 1}));
  REQUIRE(f);
  CHECK((f->degree() == 2 || f->degree() == 3));
  // (x^4+1)(x^4+3): every prime gives factors of degree <= 2.
  const auto g = find_factor(poly({1, 0, 0, 0, 1}) * poly({3, 0, 0, 0, 1}));
  REQUIRE(g);
  CHECK(g->degree() == 4);
  // Lehmer's polynomial.
  CHECK(is_irreducible(poly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})));
}

TEST_CASE("classification examples") {
  CHECK(classify_base(poly({-2, 1})) == BaseClass::pisot);
  CHECK(classify_base(poly({-1, -1, 1})) == BaseClass::pisot);
  CHECK(classify_base(poly({-2, 0, 1})) == BaseClass::neither);
  CHECK(classify_base(poly({-1, -1, 0, 1})) == BaseClass::pisot);  // plastic number
  CHECK(classify_base(poly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})) == BaseClass::salem);
  CHECK(code_of([] { classify_base(poly({-1, 2})); }) == ErrorCode::not_monic);
  CHECK(code_of([] { classify_base(poly({-1, 0, 1})); }) == ErrorCode::reducible);
  CHECK(code_of([] { classify_base(poly({1, 0, 1})); }) == ErrorCode::no_root_above_one);
  CHECK(code_of([] { classify_base(poly({-1, 1})); }) == ErrorCode::no_root_above_one);
}

TEST_CASE("quartic x^4-x^3-x^2-x+1 against a numeric root oracle") {
  const Polynomial p = poly({1, -1, -1, -1, 1});
  auto roots = numeric_roots(p);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return std::abs(a) > std::abs(b); });
  // Oracle: one real root > 1, its reciprocal, two roots on the unit circle.
  CHECK(roots[0].real() > 1.5);
  CHECK(std::abs(roots[0].imag()) < 1e-9);
  CHECK(std::abs(std::abs(roots[1]) - 1) < 1e-9);
  CHECK(std::abs(std::abs(roots[2]) - 1) < 1e-9);
  CHECK(std::abs(roots[3]) < 1);
  CHECK(classify_base(p) == BaseClass::salem);
}

TEST_CASE("conjugate disks: moduli and root product") {
  for (const auto& p : {poly({-1, -1, 1}), poly({-1, -1, 0, 1}), poly({-1, -1, -1, 1}),
                        poly({1, -1, -1, -1, 1})}) {
    const auto base = AlgebraicBase::create(p);
    CHECK(base.conjugate_disks().size() == static_cast<std::size_t>(p.degree() - 1));
    if (base.classification() == BaseClass::pisot)
      for (const auto& d : base.conjugate_disks()) CHECK(modulus_upper(d, 128) < 1);
    std::vector<RootDisk> all = base.conjugate_disks();
    all.push_back(base.beta_disk());
    const RootDisk prod = disk_product(all, 128);
    // Product of all roots is (-1)^d a_0.
    Rational expected(p.coeff(0));
    if (p.degree() % 2) expected = -expected;
    const Rational dr = prod.center.re - expected;
    CHECK(dr * dr + prod.center.im * prod.center.im <= prod.radius * prod.radius);
  }
}

TEST_CASE("beta enclosure is deterministic and nested") {
  const auto e64 = golden().beta_enclosure(64);
  const auto e256 = golden().beta_enclosure(256);
  CHECK(e64.contains(e256));
  CHECK(e256.width() <= dyadic_unit(256));
  CHECK(golden().beta_enclosure(64).lower == e64.lower);
  CHECK(golden().beta_enclosure(40).lower == e64.lower);
  CHECK(golden().floor_beta() == 1);
}

TEST_CASE("embed_real examples") {
  const auto beta = FieldElement::beta(golden());
  const auto e = embed_real(beta, Rational(1, 1000000));
  // Agrees with the golden ratio to the printed digits 1.6180339...
  CHECK(RealEnclosure{parse_rational("1.6180339"), parse_rational("1.6180340")}.contains(e));
  CHECK(e.width() <= Rational(1, 1000000));
  const auto one = embed_real(FieldElement::rational(golden(), 1), Rational(1, 10));
  CHECK(one.lower == 1);
  CHECK(one.upper == 1);
  const auto zero = beta - FieldElement::rational(golden(), 1) - beta.inverse();
  CHECK(zero.is_zero());
  CHECK(embed_real(zero, Rational(1, 1000)).contains(0));
}

TEST_CASE("field arithmetic examples") {
  const auto beta = FieldElement::beta(golden());
  const auto one = FieldElement::rational(golden(), 1);
  const auto sq = field_arith(beta, beta, FieldOp::mul);
  CHECK(sq.coords() == std::vector<Rational>{1, 1});
  CHECK(field_arith(beta, FieldElement::rational(golden(), 0), FieldOp::add) == beta);
  CHECK(field_arith(beta - one, beta, FieldOp::mul) == one);
  const auto other = AlgebraicBase::create(poly({-2, 1}));
  CHECK(code_of([&] { field_arith(beta, FieldElement::rational(other, 1), FieldOp::add); }) ==
        ErrorCode::base_mismatch);
}

TEST_CASE("certified floor examples") {
  const auto beta = FieldElement::beta(golden());
  CHECK(certified_floor(FieldElement::rational(golden(), Rational(7, 2))) == 3);
  CHECK(certified_floor(beta) == 1);
  CHECK(certified_floor(beta * beta) == 2);
  CHECK(certified_floor(-beta) == -2);
}

TEST_CASE("field ring laws on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  const auto base = AlgebraicBase::create(poly({-1, -1, -1, 1}));  // tribonacci
  auto random_element = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.emplace_back(coef(rng), 1 + std::abs(coef(rng)));
    for (auto& x : c) x.canonicalize();
    return FieldElement(base, c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(), b = random_element(), c = random_element();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::rational(base, 1));
    // Embedding respects multiplication.
    const auto ea = embed_at_bits(a, 128), eb = embed_at_bits(b, 128);
    const auto eab = embed_at_bits(a * b, 128);
    const auto prod = ea * eb;
    // Both contain the true value, so they must overlap.
    CHECK(eab.lower <= prod.upper);
    CHECK(prod.lower <= eab.upper);
    // Floor contract.
    const Integer n = certified_floor(a);
    const auto fine = embed_at_bits(a, 512);
    CHECK(fine.lower >= Rational(n) - Rational(0));
    CHECK(fine.upper < Rational(n + 1));
  }
}
