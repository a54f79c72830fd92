#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "betaseries/error.hpp"
#include "betaseries/exponent_sequence.hpp"

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

std::vector<std::uint64_t> v(std::initializer_list<std::uint64_t> x) { return x; }

}  // namespace

TEST_CASE("term examples") {
  CHECK(ExponentSequence::power_floor(2).term(7) == 49);
  CHECK(ExponentSequence::log_power(1).term(2) == 1);
  CHECK(ExponentSequence::geometric(Rational(3, 2)).term(4) == 5);
  CHECK(ExponentSequence::log_power(1).term(1) == 1);
  CHECK(ExponentSequence::scaled_factorial(Rational(1, 2)).term(4) == 12);
  CHECK(ExponentSequence::weighted_geometric(Rational(3, 2), 3).term(3) == 40);
  // 7^(5/2) = 129.64...
  CHECK(ExponentSequence::power_floor(Rational(5, 2)).term(7) == 129);
}

TEST_CASE("log power terms against a long double oracle") {
  for (const auto& [y, z] : {std::pair{Rational(1), Rational(0)}, {Rational(2), Rational(0)},
                             {Rational(1, 2), Rational(1)}, {Rational(1), Rational(-1)}}) {
    const auto seq = ExponentSequence::log_power(y, z);
    for (long m = seq.m0(); m < 60; ++m) {
      const long double l = std::log(static_cast<long double>(m));
      const long double e = std::pow(l, 1 + static_cast<long double>(y.get_d())) *
                            (z == 0 ? 1.0L : std::pow(std::log(l), static_cast<long double>(z.get_d())));
      const long double oracle = std::exp(e);
      if (oracle > 1e15L) break;
      // Skip the rare case where long double cannot decide the floor.
      if (std::abs(oracle - std::round(oracle)) < 1e-9L * oracle) continue;
      CHECK(seq.term(m) == Integer(static_cast<unsigned long>(std::floor(oracle))));
    }
  }
}

TEST_CASE("support_up_to examples") {
  const auto sq = support_up_to(ExponentSequence::power_floor(2), 10);
  CHECK(sq.elements == v({0, 1, 4, 9}));
  CHECK(sq.max_multiplicity() == 1);
  const auto xi = support_up_to(ExponentSequence::log_power(1), 3);
  CHECK(xi.elements == v({0, 1}));
  CHECK(xi.multiplicity == std::vector<std::uint32_t>{1, 2});
  const auto ex = support_up_to(ExponentSequence::explicit_list({5, 7}), 6);
  CHECK(ex.elements == v({5}));
}

TEST_CASE("lambda and theta examples") {
  const auto s = SupportSet::from_sorted({0, 1, 4, 9}, 10);
  CHECK(lambda_count(s, 10) == 4);
  CHECK(lambda_count(s, 0) == 0);
  CHECK(lambda_count(s, 5) == 3);
  CHECK(code_of([&] { lambda_count(s, 11); }) == ErrorCode::horizon_exceeded);
  CHECK(theta(10, s) == 9);
  CHECK(theta(9, s) == 4);
  CHECK(theta(1, s) == 0);
  CHECK(code_of([&] { theta(0, s); }) == ErrorCode::empty_below_r);
  CHECK(code_of([&] { theta(11, s); }) == ErrorCode::horizon_exceeded);
}

TEST_CASE("theta is an element below R") {
  std::mt19937_64 rng(3);
  const auto s = support_up_to(ExponentSequence::power_floor(Rational(3, 2)), 5000);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t r = 1 + rng() % 5000;
    const auto t = theta(r, s);
    CHECK(t < r);
    CHECK(s.contains(t));
  }
}

TEST_CASE("inverse_count examples") {
  CHECK(inverse_count(ExponentSequence::power_floor(2), 10) == 4);
  CHECK(inverse_count(ExponentSequence::geometric(2), 8) == 4);
  CHECK(inverse_count(ExponentSequence::power_floor(2), 0) == 1);
  CHECK(inverse_count(ExponentSequence::log_power(1), 1) == 1);
  CHECK(inverse_count(ExponentSequence::geometric(Rational(3, 2)), 1) == 1);
}

TEST_CASE("inverse_count round trip against enumeration") {
  for (const Rational rho : {Rational(2), Rational(5, 2), Rational(3)}) {
    const auto seq = ExponentSequence::power_floor(rho);
    // Enumerate m^rho by exact comparison, walking R upward.
    for (std::uint64_t r = 1; r <= 1000000; r += (r < 2000 ? 1 : 997)) {
      const long double root = std::pow(static_cast<long double>(r), 1.0L / static_cast<long double>(rho.get_d()));
      if (std::abs(root - std::round(root)) < 1e-9L) continue;  // exact power
      CHECK(inverse_count(seq, Rational(std::to_string(r))) ==
            static_cast<std::uint64_t>(std::floor(root)) + 1);
    }
  }
}

TEST_CASE("strict monotonicity beyond the recorded threshold") {
  for (const auto& seq :
       {ExponentSequence::power_floor(Rational(3, 2)), ExponentSequence::log_power(1),
        ExponentSequence::log_power(Rational(1, 2), -1), ExponentSequence::geometric(Rational(11, 10)),
        ExponentSequence::scaled_factorial(1)}) {
    const long from = seq.increasing_from();
    // The floors may repeat early but never decrease past the threshold.
    Integer prev = seq.term(from);
    for (long m = from + 1; m < from + 40; ++m) {
      const Integer t = seq.term(m);
      CHECK(t >= prev);
      prev = t;
    }
    CHECK(seq.value(from + 30, 128).certainly_greater(seq.value(from + 29, 128)));
  }
}

TEST_CASE("counting asymptotic for rho = 2") {
  const auto s = support_up_to(ExponentSequence::power_floor(2), 1000000);
  const std::pair<std::uint64_t, double> targets[] = {{1000, 0.05}, {10000, 0.02}, {100000, 0.01}, {1000000, 0.005}};
  for (auto [n, tol] : targets) {
    const double ratio = static_cast<double>(lambda_count(s, n)) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(ratio - 1) <= tol);
  }
}

TEST_CASE("log power multiplicities stay bounded") {
  for (const auto& y : {Rational(1), Rational(2), Rational(1, 2)}) {
    const auto s = support_up_to(ExponentSequence::log_power(y), 1000000);
    CHECK(s.max_multiplicity() >= 1);
    CHECK(s.max_multiplicity() <= 3);
  }
}

TEST_CASE("psi") {
  const Interval e = exp(Interval::from_long(1, 128));
  CHECK(psi(0, e).lower_q() <= e.upper_q());
  CHECK(psi(0, e).upper_q() >= e.lower_q());
  const Interval r = exp(Interval::from_long(4, 128));
  const Interval p = psi(1, r);
  const Interval e2 = exp(Interval::from_long(2, 128));
  CHECK(p.lower_q() <= e2.upper_q());
  CHECK(p.upper_q() >= e2.lower_q());
  CHECK(p.width() < Rational(1, 1000000));
  // exp(sqrt(log 1000)) = 13.85...
  const Interval q = psi(1, 1000, 128);
  CHECK(std::abs(q.midpoint() - std::exp(std::sqrt(std::log(1000.0)))) < 1e-9);
  // Round trip through phi.
  for (const Rational y : {Rational(0), Rational(1, 3), Rational(2)}) {
    const Interval back = phi(y, 0, psi(y, 12345, 256));
    CHECK(back.contains(12345));
    CHECK(back.width() < Rational(1, 1000000));
  }
  CHECK(code_of([] { psi(-1, 10, 64); }) == ErrorCode::domain_error);
  CHECK(code_of([] { psi(1, 1, 64); }) == ErrorCode::domain_error);
}

TEST_CASE("sequence JSON") {
  const auto s = ExponentSequence::from_json(R"({"kind":"PowerFloor","params":{"rho":"2"},"m0":0})");
  CHECK(s.kind() == SequenceKind::power_floor);
  CHECK(s.rho() == 2);
  const auto t = ExponentSequence::from_json(R"({"kind":"LogPower","params":{"y":1.5,"z":"1/2"}})");
  CHECK(t.m0() == 3);
  CHECK(t.y() == Rational(3, 2));
  CHECK(t.leading_constant());
  const auto u = ExponentSequence::from_json(t.to_json());
  CHECK(u.to_json() == t.to_json());
  CHECK(code_of([] { ExponentSequence::from_json(R"({"kind":"LogPower","params":{"y":0}})"); }) ==
        ErrorCode::invalid_sequence);
  CHECK(code_of([] { ExponentSequence::from_json(R"({"kind":"Nope"})"); }) == ErrorCode::invalid_sequence);
  CHECK(code_of([] { ExponentSequence::from_json(R"({"kind":"PowerFloor","params":{"rho":1}})"); }) ==
        ErrorCode::invalid_sequence);
}

TEST_CASE("floor ties are reported") {
  // A budget below the first precision level cannot certify any floor.
  auto seq = ExponentSequence::log_power(1);
  seq.set_max_bits(32);
  CHECK(code_of([&] { seq.term(5); }) == ErrorCode::floor_tie_unresolvable);
}

TEST_CASE("support set run-length round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> values;
    const std::uint64_t horizon = 1 + rng() % 5000;
    for (int i = 0; i < 300; ++i) values.push_back(rng() % horizon);
    if (trial % 2) values.resize(values.size() / 3);
    const auto s = SupportSet::from_values(values, horizon);
    std::stringstream buf;
    write_binary(buf, s);
    CHECK(read_binary(buf) == s);
  }
  std::stringstream bad("XXXX");
  CHECK(code_of([&] { read_binary(bad); }) == ErrorCode::io_error);
}
