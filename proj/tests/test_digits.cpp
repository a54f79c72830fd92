#include <doctest.h>

#include <random>
#include <sstream>

#include "betaseries/beta_digits.hpp"
#include "betaseries/error.hpp"

using namespace betaseries;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::io_error;
}

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

const AlgebraicBase& golden() {
  static const AlgebraicBase b = AlgebraicBase::create(poly({-1, -1, 1}));
  return b;
}

const AlgebraicBase& two() {
  static const AlgebraicBase b = AlgebraicBase::create(poly({-2, 1}));
  return b;
}

std::vector<std::uint64_t> v(std::initializer_list<std::uint64_t> x) { return x; }

}  // namespace

TEST_CASE("beta_expand examples") {
  const FieldElement eta = FieldElement::beta(golden()) - FieldElement::rational(golden(), 1);
  CHECK(beta_expand(eta, 5).digits == v({1, 0, 0, 0, 0}));
  CHECK(beta_expand(FieldElement::rational(golden(), 0), 4).digits == v({0, 0, 0, 0}));
  CHECK(beta_expand(FieldElement::rational(two(), Rational(1, 4)), 4).digits == v({0, 1, 0, 0}));
  CHECK(code_of([] { beta_expand(FieldElement::beta(golden()), 3); }) == ErrorCode::out_of_unit_interval);
  CHECK(code_of([] { beta_expand(FieldElement::rational(two(), -1), 3); }) == ErrorCode::out_of_unit_interval);
}

TEST_CASE("base_b_expand examples") {
  const auto q = base_b_expand(Rational(1, 4), 10, 4);
  CHECK(q.integral_part == 0);
  CHECK(q.digits == v({2, 5, 0, 0}));
  CHECK(base_b_expand(Rational(1, 3), 10, 5).digits == v({3, 3, 3, 3, 3}));
  const auto one = base_b_expand(Rational(1), 2, 3);
  CHECK(one.integral_part == 1);
  CHECK(one.digits == v({0, 0, 0}));
  // 1/2 in base 2 terminates rather than continuing with ones
  CHECK(base_b_expand(Rational(1, 2), 2, 4).digits == v({1, 0, 0, 0}));
}

TEST_CASE("lambda_digits conventions") {
  Rational eta = 0;
  for (unsigned m = 1; m <= 5; ++m) eta += dyadic_unit(m * m);
  CHECK(lambda_digits(base_b_expand(eta, 2, 30), 10) == 3);
  CHECK(lambda_digits(beta_expand(FieldElement::rational(two(), eta), 30), 10) == 3);
  CHECK(lambda_digits(base_b_expand(Rational(0), 7, 10), 10) == 0);
  // integer bases count s_0..s_{N-1}; s_0 = 0 here
  CHECK(lambda_digits(base_b_expand(Rational(1, 3), 10, 10), 5) == 4);
  // beta streams count s_1..s_N
  const auto ones = beta_expand(FieldElement::rational(two(), Rational(1) - dyadic_unit(20)), 20);
  CHECK(lambda_digits(ones, 5) == 5);
  CHECK(lambda_digits(base_b_expand(Rational(5, 2), 10, 3), 1) == 1);
  CHECK(code_of([&] { lambda_digits(ones, 21); }) == ErrorCode::insufficient_digits);
}

TEST_CASE("reconstruct examples") {
  const FieldElement eta = FieldElement::beta(golden()) - FieldElement::rational(golden(), 1);
  const Rational w(1, 1000000);
  const RealEnclosure e = reconstruct(beta_expand(eta, 60), w);
  CHECK(e.width() <= w);
  CHECK(e.lower <= Rational(618034, 1000000));
  CHECK(e.upper >= Rational(618033, 1000000));

  const RealEnclosure z = reconstruct(beta_expand(FieldElement::rational(golden(), 0), 60), w);
  CHECK(z.lower == 0);
  CHECK(z.upper > 0);

  CHECK(reconstruct(base_b_expand(Rational(1, 4), 10, 10), w).contains(Rational(1, 4)));
  CHECK(code_of([&] { reconstruct(base_b_expand(Rational(1, 4), 10, 2), w); }) == ErrorCode::horizon_insufficient);
}

TEST_CASE("round trip and digit range for random field elements") {
  std::mt19937_64 rng(17);
  const AlgebraicBase bases[] = {golden(), AlgebraicBase::create(poly({-1, -1, -1, 1})),
                                 AlgebraicBase::create(poly({-1, -3, 1}))};
  for (const auto& base : bases) {
    for (int trial = 0; trial < 15; ++trial) {
      std::uniform_int_distribution<long> num(-50, 50);
      std::vector<Rational> c;
      for (int i = 0; i < base.degree(); ++i) c.emplace_back(num(rng), 37);
      FieldElement eta(base, c);
      // shift into [0,1)
      eta = eta - FieldElement::rational(base, Rational(certified_floor(eta)));
      const std::uint64_t n = 40 + trial * 10;
      const DigitStream s = beta_expand(eta, n);
      for (auto d : s.digits) CHECK(Integer(static_cast<unsigned long>(d)) <= base.floor_beta());
      const RealEnclosure back = reconstruct(s, Rational(1, 1000));
      const RealEnclosure exact = embed_real(eta, Rational(1, 1000000000));
      CHECK(back.lower <= exact.upper);
      CHECK(exact.lower <= back.upper);
    }
  }
}

TEST_CASE("beta and base-b expansions agree at integer bases") {
  std::mt19937_64 rng(23);
  for (long b : {2L, 3L, 10L}) {
    const AlgebraicBase base = AlgebraicBase::create(poly({-b, 1}));
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<long> den(1, 500);
      const long d = den(rng);
      const Rational eta(std::uniform_int_distribution<long>(0, d - 1)(rng), d);
      CHECK(beta_expand(FieldElement::rational(base, eta), 50).digits ==
            base_b_expand(eta, static_cast<std::uint64_t>(b), 50).digits);
    }
  }
}

TEST_CASE("digit export") {
  std::ostringstream csv;
  write_digits_csv(csv, base_b_expand(Rational(3, 2), 10, 2));
  CHECK(csv.str() == "n,digit\n0,1\n1,5\n2,0\n");
  CHECK(digit_bytes(base_b_expand(Rational(1, 4), 10, 3)) == std::vector<std::uint8_t>{2, 5, 0});
  CHECK(code_of([] { digit_bytes(base_b_expand(Rational(1, 4), 1000, 3)); }) == ErrorCode::unsupported_base);
}
