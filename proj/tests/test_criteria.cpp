#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "betaseries/criteria.hpp"
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

Verdict verdict_of(const CriteriaReport& r, std::string_view prefix) {
  for (const auto& a : r.assumptions)
    if (a.name.rfind(prefix, 0) == 0) return a.verdict;
  FAIL("no assumption " << prefix);
  return Verdict::indeterminate;
}

}  // namespace

TEST_CASE("G_k is exact") {
  CHECK(g_k(3, Rational(1, 2)) == Rational(1, 8) + 1 - 1);
  CHECK(g_k(4, 0) == 0);
  CHECK(g_k(5, 1) == 3);
}

TEST_CASE("sigma_k examples") {
  const RealEnclosure s3 = sigma_k(3, Rational(1, Integer(1) << 50));
  // (3 - sqrt 5)/2 squared against its defining equation x^2 - 3x + 1 = 0
  CHECK(sgn(s3.lower * s3.lower - 3 * s3.lower + 1) > 0);
  CHECK(sgn(s3.upper * s3.upper - 3 * s3.upper + 1) < 0);
  CHECK(std::abs(s3.lower.get_d() - (3 - std::sqrt(5.0)) / 2) < 1e-12);

  const Rational w(1, 100000000);
  CHECK(std::abs(1 / sigma_k(4, w).lower.get_d() - 5.278) < 1e-3);
  CHECK(std::abs(1 / sigma_k(5, w).lower.get_d() - 8.942) < 1e-3);
  CHECK(std::abs(1 / sigma_k(6, w).lower.get_d() - 13.60) < 1e-2);
  CHECK(code_of([] { sigma_k(2, Rational(1, 10)); }) == ErrorCode::invalid_argument);
}

TEST_CASE("sigma enclosures bracket the sign change and decrease in k") {
  const Rational w(1, Integer(1) << 40);
  RealEnclosure prev = sigma_k(3, w);
  for (unsigned k = 3; k <= 50; ++k) {
    const RealEnclosure s = sigma_k(k, w);
    CHECK(s.width() <= w);
    CHECK(sgn(g_k(k, s.lower)) < 0);
    CHECK(sgn(g_k(k, s.upper)) > 0);
    if (k > 3) CHECK(s.upper < prev.lower);
    prev = s;
  }
}

TEST_CASE("G_A(1/A) > 0 for A = 4..50") {
  for (unsigned a = 4; a <= 50; ++a) CHECK(sgn(g_k(a, Rational(1, a))) > 0);
}

TEST_CASE("check_admissible examples") {
  CHECK(check_admissible(2, 3));
  CHECK_FALSE(check_admissible(4, 5));
  CHECK(check_admissible(4, 6));
  CHECK_FALSE(check_admissible(1, Rational(1, 2)));
  CHECK(code_of([] { check_admissible(3, 3); }) == ErrorCode::tie_undecidable);
}

TEST_CASE("check_admissible is monotone in rho") {
  for (unsigned a = 1; a <= 12; ++a) {
    bool seen_true = false;
    for (int i = 1; i <= 2000; ++i) {
      const Rational rho(i, 20);
      if (a <= 3 && rho == a) continue;
      const bool ok = check_admissible(a, rho);
      if (seen_true) CHECK(ok);
      seen_true = seen_true || ok;
    }
    CHECK(seen_true);
  }
}

TEST_CASE("mai4 sign") {
  CHECK(check_mai4_sign(Rational(1, 10), 1000) < 0);
  CHECK(check_mai4_sign(10, 100000) < 0);
  const int s3 = check_mai4_sign(Rational(1, 10), 3);
  CHECK((s3 == -1 || s3 == 0 || s3 == 1));
  CHECK(code_of([] { check_mai4_sign(0, 10); }) == ErrorCode::invalid_argument);
}

TEST_CASE("fit_growth_exponent") {
  std::vector<std::pair<double, double>> sq, flat;
  for (double r = 10; r <= 1e6; r *= 3) {
    sq.emplace_back(r, std::sqrt(r));
    flat.emplace_back(r, 7);
  }
  const GrowthFit f = fit_growth_exponent(sq);
  CHECK(f.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f.residual < 1e-9);
  CHECK(std::abs(fit_growth_exponent(flat).slope) < 1e-12);
  for (double e : {0.25, 0.5, 0.9}) {
    std::vector<std::pair<double, double>> p;
    for (double r = 2; r < 1e7; r *= 1.7) p.emplace_back(r, 3.5 * std::pow(r, e));
    const GrowthFit g = fit_growth_exponent(p);
    CHECK(std::abs(g.slope - e) < 1e-9);
    CHECK(g.residual < 1e-6);
  }
  CHECK(code_of([] { fit_growth_exponent({{1, 1}, {2, 2}}); }) == ErrorCode::degenerate_samples);
  CHECK(code_of([] { fit_growth_exponent({{1, 1}, {2, 0}, {3, 3}}); }) == ErrorCode::degenerate_samples);
  CHECK(code_of([] { fit_growth_exponent({{5, 1}, {5, 2}, {5, 3}}); }) == ErrorCode::degenerate_samples);
}

TEST_CASE("counting exponent of the squares") {
  const auto s = support_up_to(ExponentSequence::power_floor(2), 1000001);
  std::vector<std::pair<double, double>> p;
  for (auto r : default_cri1_grid()) p.emplace_back(double(r), double(lambda_count(s, r)));
  CHECK(std::abs(fit_growth_exponent(p).slope - 0.5) < 0.02);
}

TEST_CASE("trend policy") {
  const TrendPolicy t;
  CHECK(t.tends_to_zero({1, 0.5, 0.2, 0.05}));
  CHECK_FALSE(t.tends_to_zero({1, 0.5, 0.2, 0.3}));
  CHECK_FALSE(t.tends_to_zero({1, 0.5, 0.2}));
  CHECK(t.tends_to_infinity({1, 2, 5, 20}));
  CHECK_FALSE(t.tends_to_infinity({1, 1, 1, 1}));
}

TEST_CASE("cri1 on squares and powers of two") {
  const auto r = check_cri1({ExponentSequence::power_floor(2), ExponentSequence::geometric(2)}, 1);
  REQUIRE(r.assumptions.size() == 4);
  CHECK(r.all_supported());
}

TEST_CASE("cri1 with a repeated series fails domination") {
  const auto r = check_cri1({ExponentSequence::power_floor(3), ExponentSequence::power_floor(3)}, 2);
  CHECK(verdict_of(r, "3:") == Verdict::violated);
}

TEST_CASE("cri1 assumption 4 notices a factorial last series") {
  const auto r = check_cri1({ExponentSequence::power_floor(2), ExponentSequence::scaled_factorial(1)}, 1);
  CHECK(verdict_of(r, "4:") != Verdict::supported);
  CHECK(code_of([] {
          Cri1Options o;
          o.grid = {10, 20};
          check_cri1({ExponentSequence::power_floor(2), ExponentSequence::geometric(2)}, 1, o);
        }) == ErrorCode::grid_too_small);
}

TEST_CASE("cri1 for two log-power series") {
  // Assumptions 1, 3 and 4 are visible at this scale; the decay required by
  // assumption 2 is far too slow to show a tenfold drop by 10^6.
  const auto r = check_cri1({ExponentSequence::log_power(1), ExponentSequence::log_power(2)}, 2);
  CHECK(verdict_of(r, "1:") == Verdict::supported);
  CHECK(verdict_of(r, "3:") == Verdict::supported);
  CHECK(verdict_of(r, "4:") == Verdict::supported);
}

TEST_CASE("cri2 instances") {
  const auto slow = ExponentSequence::log_power(0, 1).set_m0(3);
  const auto fast = ExponentSequence::log_power(1, 0);
  CHECK(check_cri2(slow, fast).all_supported());
  CHECK(check_cri2(ExponentSequence::log_power(Rational(1, 2), 1).set_m0(3), ExponentSequence::geometric(2))
            .all_supported());
  CHECK(check_cri2(ExponentSequence::log_power(0, 1).set_m0(3), ExponentSequence::geometric(Rational(3, 2)))
            .all_supported());
  // the same pair in the other order fails (cri3)
  CHECK(verdict_of(check_cri2(fast, slow), "u2:") == Verdict::violated);
  CHECK(verdict_of(check_cri2(fast, fast), "u2:") == Verdict::violated);
  // geometric a breaks the derivative bound
  CHECK(verdict_of(check_cri2(ExponentSequence::geometric(2), fast), "a2:") == Verdict::violated);
  // factorial u has unbounded ratios
  CHECK(verdict_of(check_cri2(slow, ExponentSequence::scaled_factorial(1)), "u1:") == Verdict::violated);
  CHECK(code_of([&] { check_cri2(ExponentSequence::explicit_list({Integer(1), Integer(5)}), fast); }) ==
        ErrorCode::no_closed_form_inverse);
}

TEST_CASE("tra1 examples") {
  CHECK(check_tra1(ExponentSequence::power_floor(3), 2, Rational(1, 10)).all_supported());
  CHECK_FALSE(check_tra1(ExponentSequence::power_floor(2), 2, Rational(1, 10)).all_supported());
  CHECK(check_tra1(ExponentSequence::power_floor(3), 1, Rational(1, 2)).all_supported());
  CHECK(code_of([] {
          Tra1Options o;
          o.grid = {10, 20};
          check_tra1(ExponentSequence::power_floor(3), 1, Rational(1, 2), o);
        }) == ErrorCode::grid_too_small);
}

TEST_CASE("report JSON") {
  const auto r = check_tra1(ExponentSequence::power_floor(3), 2, Rational(1, 10));
  const auto doc = nlohmann::json::parse(r.to_json());
  CHECK(doc["criterion"] == "tra1");
  CHECK(doc["assumptions"].size() == 1);
  CHECK(doc["assumptions"][0]["verdict"] == "supported");
  CHECK(doc["assumptions"][0]["statistics"].contains("hits"));
  CHECK(r.to_json() == check_tra1(ExponentSequence::power_floor(3), 2, Rational(1, 10)).to_json());
}
