// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "betaseries/beta_digits.hpp"
#include "betaseries/criteria.hpp"
#include "betaseries/error.hpp"
#include "betaseries/exponent_sequence.hpp"
#include "betaseries/series.hpp"
#include "betaseries/sumset.hpp"

using namespace betaseries;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  Outcome() { detail.precision(8); }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

const AlgebraicBase& two() {
  static const AlgebraicBase b = AlgebraicBase::create(poly({-2, 1}));
  return b;
}

const AlgebraicBase& golden() {
  static const AlgebraicBase b = AlgebraicBase::create(poly({-1, -1, 1}));
  return b;
}

Rational pow10(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
  return fit_growth_exponent(pts).slope;
}

void criterion_1(Outcome& o) {
  struct Target {
    unsigned k;
    double value, tol;
  };
  const Rational w = pow10(-12);
  for (const Target t : {Target{4, 5.278, 1e-3}, Target{5, 8.942, 1e-3}, Target{6, 13.60, 1e-2}}) {
    const RealEnclosure s = sigma_k(t.k, w);
    const double lo = 1 / s.upper.get_d(), hi = 1 / s.lower.get_d();
    o.detail << "1/sigma_" << t.k << " in [" << lo << ", " << hi << "]; ";
    o.require(std::abs(lo - t.value) <= t.tol && std::abs(hi - t.value) <= t.tol,
              "1/sigma_" + std::to_string(t.k));
  }
  // (3 - sqrt 5)/2 is the root of x^2 - 3x + 1 in (0, 1), where the quadratic
  // changes sign from + to -. Exact sign tests on the widened enclosure.
  const RealEnclosure s3 = sigma_k(3, pow10(-14));
  const Rational tol = pow10(-12);
  auto q = [](const Rational& x) { return Rational(x * x - 3 * x + 1); };
  const bool inside = q(s3.lower - tol) > 0 && q(s3.upper + tol) < 0;
  o.detail << "sigma_3 within 1e-12 of (3-sqrt5)/2: " << (inside ? "yes" : "no");
  o.require(inside, "sigma_3");
}

void criterion_2(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Rational w = pow10(-20);
  RealEnclosure prev = sigma_k(3, w);
  unsigned bad = 0;
  for (unsigned k = 4; k <= 51; ++k) {
    const RealEnclosure s = sigma_k(k, w);
    if (!(s.upper < prev.lower)) ++bad;
    prev = s;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << "certified sigma_(k+1) < sigma_k for k = 3..50: " << (bad == 0 ? "all" : "not all") << "; " << secs
           << " s";
  o.require(bad == 0, "monotone");
  o.require(secs < 1, "runtime");
}

void criterion_3(Outcome& o) {
  const std::uint64_t horizon = 1000000;
  const auto grid = geometric_grid(1000, Rational(5, 4), horizon);
  for (unsigned rho : {2u, 3u}) {
    const auto s = support_up_to(ExponentSequence::power_floor(rho), horizon + 1);
    std::vector<std::pair<double, double>> pts;
    for (auto n : grid) pts.emplace_back(double(n), double(lambda_count(s, n)));
    pts.emplace_back(double(horizon), double(lambda_count(s, horizon)));
    const double slope = loglog_slope(pts);
    o.detail << "rho=" << rho << " slope " << slope << " (target " << 1.0 / rho << "); ";
    o.require(std::abs(slope - 1.0 / rho) <= 0.02, "rho=" + std::to_string(rho));
  }
}

void criterion_4(Outcome& o) {
  const std::uint64_t horizon = 1000000;
  const auto s = support_up_to(ExponentSequence::power_floor(2), horizon);
  auto grid = geometric_grid(1000, Rational(5, 4), horizon);
  grid.push_back(horizon);
  for (unsigned k = 1; k <= 2; ++k) {
    const auto ks = k_fold_sum(s, k, horizon);
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : gap_envelope(ks, grid)) pts.emplace_back(double(p.r), double(*p.gap));
    const double slope = loglog_slope(pts), bound = std::pow(0.5, k) + 0.05;
    o.detail << "k=" << k << " gap slope " << slope << " (bound " << bound << "); ";
    o.require(slope <= bound, "k=" + std::to_string(k));
  }
}

std::vector<std::uint64_t> brute_k_fold(const std::vector<std::uint64_t>& a, unsigned k, std::uint64_t horizon) {
  std::set<std::uint64_t> out;
  std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned depth, std::uint64_t sum) {
    if (depth == k) {
      if (sum < horizon) out.insert(sum);
      return;
    }
    for (auto x : a) rec(depth + 1, sum + x);
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

SupportSet make_set(const std::vector<std::uint64_t>& elements, std::uint64_t horizon) {
  SupportSet s;
  s.horizon = horizon;
  s.elements = elements;
  s.multiplicity.assign(elements.size(), 1);
  return s;
}

void criterion_5(Outcome& o) {
  const auto worked = k_fold_sum(make_set({0, 1, 4, 9}, 19), 2, 19);
  const std::vector<std::uint64_t> expect{0, 1, 2, 4, 5, 8, 9, 10, 13, 18};
  o.require(worked.elements == expect, "2*{0,1,4,9}");
  std::mt19937_64 rng(2024);
  unsigned mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::uint64_t> hd(1, 200);
    const std::uint64_t h = hd(rng);
    std::uniform_int_distribution<std::uint64_t> el(0, h - 1);
    std::uniform_int_distribution<unsigned> size(1, 12), kd(1, 3);
    std::set<std::uint64_t> a;
    const unsigned n = size(rng);
    while (a.size() < std::min<std::uint64_t>(n, h)) a.insert(el(rng));
    const std::vector<std::uint64_t> av(a.begin(), a.end());
    const unsigned k = kd(rng);
    if (k_fold_sum(make_set(av, h), k, h).elements != brute_k_fold(av, k, h)) ++mismatches;
  }
  o.detail << "worked example " << (worked.elements == expect ? "matches" : "differs") << "; " << mismatches
           << " mismatches in 200 random instances";
  o.require(mismatches == 0, "random instances");
}

SupportSet random_support(std::mt19937_64& rng, std::uint64_t horizon, double density, unsigned max_mult) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<unsigned> mult(1, max_mult);
  SupportSet s;
  s.horizon = horizon;
  for (std::uint64_t n = 0; n < horizon; ++n)
    if (n == 0 || keep(rng)) {
      s.elements.push_back(n);
      s.multiplicity.push_back(mult(rng));
    }
  return s;
}

void criterion_6(Outcome& o) {
  std::mt19937_64 rng(6);
  unsigned instances = 0, pointwise = 0, prefix_bad = 0, support_bad = 0;
  auto check = [&](const std::vector<SeriesSpec>& specs, const MonomialExponent& k, std::uint64_t h) {
    ++instances;
    const auto rho = rho_coefficients(specs, k, h);
    const unsigned big_k = total_degree(k);
    Integer c = 1;
    for (std::size_t i = 0; i < specs.size(); ++i) c *= pow(Integer(specs[i].coefficient_bound), k[i]);
    Integer prefix = 0;
    for (std::uint64_t m = 0; m < h; ++m) {
      if (rho[m] > c * pow(Integer(1 + m), big_k)) ++pointwise;
      prefix += rho[m];
      Integer lam = c;
      for (std::size_t i = 0; i < specs.size(); ++i) lam *= pow(Integer(lambda_count(specs[i].support, m + 1)), k[i]);
      if (prefix > lam) ++prefix_bad;
    }
    std::vector<SumsetOperand> ops;
    for (std::size_t i = 0; i < specs.size(); ++i) ops.push_back({&specs[i].support, k[i]});
    const SupportSet sum = weighted_sum(ops, h);
    for (std::uint64_t m = 0; m < h; ++m)
      if ((rho[m] > 0) != sum.contains(m)) {
        ++support_bad;
        break;
      }
  };
  const std::uint64_t h = 2000;
  const std::vector<SeriesSpec> paper{
      SeriesSpec::from_support(support_up_to(ExponentSequence::power_floor(2), h)),
      SeriesSpec::from_support(support_up_to(ExponentSequence::log_power(1), h))};
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) check(paper, {a, b}, h);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<SeriesSpec> specs{SeriesSpec::from_support(random_support(rng, 400, 0.1, 3)),
                                        SeriesSpec::from_support(random_support(rng, 400, 0.03, 2))};
    check(specs, {e(rng), e(rng)}, 400);
  }
  o.detail << instances << " instances; pointwise violations " << pointwise << ", prefix violations "
           << prefix_bad << ", support mismatches " << support_bad;
  o.require(pointwise == 0, "pointwise bound");
  o.require(prefix_bad == 0, "prefix bound");
  o.require(support_bad == 0, "support");
}

void criterion_7(Outcome& o) {
  const std::uint64_t h = 6000;
  const std::vector<SeriesSpec> specs{
      SeriesSpec::from_support(support_up_to(ExponentSequence::power_floor(2), h)),
      SeriesSpec::from_support(support_up_to(ExponentSequence::log_power(1), h))};
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::uniform_int_distribution<unsigned> e(0, 2), terms(1, 3);
  std::uniform_int_distribution<std::uint64_t> rd(1, 300);
  unsigned total = 0, bad = 0;
  for (const AlgebraicBase* base : {&two(), &golden()}) {
    for (int poly_i = 0; poly_i < 25; ++poly_i) {
      RelationPolynomial p;
      const unsigned t = terms(rng);
      for (unsigned j = 0; j < t; ++j) {
        std::vector<Rational> a;
        for (int d = 0; d < base->degree(); ++d) a.emplace_back(coord(rng));
        if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) a[0] = 1;
        p.terms.emplace_back(MonomialExponent{e(rng), e(rng)}, FieldElement(*base, a));
      }
      TailSumSystem sys(specs, p, *base);
      for (int j = 0; j < 10; ++j) {
        ++total;
        if (!sys.recurrence_residual(rd(rng), pow10(-9)).contains_zero()) ++bad;
      }
    }
  }
  // 2 Y_0 = rho(1) + Y_1 for the squares at beta = 2
  RelationPolynomial x;
  x.terms.emplace_back(MonomialExponent{1}, FieldElement::rational(two(), 1));
  const std::vector<SeriesSpec> sq{specs[0]};
  const RealEnclosure worked = y_r_recurrence_check(sq, x, two(), 1, pow10(-12));
  o.detail << bad << " of " << total << " residual enclosures miss 0; worked instance residual width "
           << worked.width().get_d() << (worked.contains_zero() ? " contains 0" : " misses 0");
  o.require(bad == 0, "random residuals");
  o.require(worked.contains_zero() && worked.width() <= pow10(-12), "worked instance");
}

void criterion_8(Outcome& o) {
  std::mt19937_64 rng(88);
  unsigned total = 0, miss = 0, range = 0;
  for (const AlgebraicBase* base : {&golden(), &two()}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<long> num(-1000, 1000);
      std::vector<Rational> c;
      for (int i = 0; i < base->degree(); ++i) c.emplace_back(num(rng), 997);
      FieldElement eta(*base, c);
      eta = eta - FieldElement::rational(*base, Rational(certified_floor(eta)));
      const DigitStream s = beta_expand(eta, 200);
      for (auto d : s.digits)
        if (Integer(static_cast<unsigned long>(d)) > base->floor_beta()) ++range;
      const RealEnclosure back = reconstruct(s, pow10(-30));
      const RealEnclosure exact = embed_real(eta, pow10(-80));
      ++total;
      if (!(back.lower <= exact.lower && exact.upper <= back.upper)) ++miss;
    }
  }
  const FieldElement beta_minus_one = FieldElement::beta(golden()) - FieldElement::rational(golden(), 1);
  const DigitStream s = beta_expand(beta_minus_one, 50);
  bool exact_case = s.digits.front() == 1;
  for (std::size_t i = 1; i < s.digits.size(); ++i) exact_case = exact_case && s.digits[i] == 0;
  o.detail << miss << " of " << total << " reconstructions miss eta; " << range << " digit range violations; beta-1 -> "
           << (exact_case ? "1,0,0,..." : "unexpected digits");
  o.require(miss == 0, "round trip");
  o.require(range == 0, "digit range");
  o.require(exact_case, "beta - 1");
}

void criterion_9(Outcome& o) {
  const CriteriaReport cri1 =
      check_cri1({ExponentSequence::log_power(1), ExponentSequence::log_power(2)}, 2);
  o.detail << "cri1:";
  for (const auto& a : cri1.assumptions) o.detail << " (" << a.name.substr(0, 1) << ") " << verdict_name(a.verdict);
  o.require(cri1.all_supported(), "cri1 xi(1), xi(2), A=2");

  const CriteriaReport corollary =
      check_cri2(ExponentSequence::log_power(0, 1).set_m0(3), ExponentSequence::log_power(1, 0));
  const CriteriaReport abc =
      check_cri2(ExponentSequence::log_power(Rational(1, 2), 1).set_m0(3), ExponentSequence::geometric(2));
  o.detail << "; cri2 (m^(log log m), m^(log m)) " << (corollary.all_supported() ? "supported" : "not supported")
           << ", (phi(1/2,1), 2^m) " << (abc.all_supported() ? "supported" : "not supported");
  o.require(corollary.all_supported(), "cri2 corollary pair");
  o.require(abc.all_supported(), "cri2 phi/x^m pair");

  const bool adm = check_admissible(2, 3) && !check_admissible(4, 5) && check_admissible(4, 6);
  o.detail << "; admissible (2,3) (4,5) (4,6) " << (adm ? "true false true" : "mismatch");
  o.require(adm, "admissible");
}

}  // namespace

int main() {
  const std::vector<std::pair<int, void (*)(Outcome&)>> criteria{
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
      {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}};
  int failed = 0;
  for (const auto& [n, fn] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%.2f s) %s\n", n, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
