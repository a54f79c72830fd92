#include "betaseries/criteria.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "betaseries/error.hpp"
#include "betaseries/sumset.hpp"

namespace betaseries {

Rational g_k(unsigned k, const Rational& x) { return pow(Rational(1) - x, k) + Rational(k - 1) * x - 1; }

RealEnclosure sigma_k(unsigned k, const Rational& width) {
  if (k < 3) fail(ErrorCode::invalid_argument, "sigma_k needs k >= 3");
  if (width <= 0) fail(ErrorCode::invalid_argument, "width must be positive");
  // G_k < 0 exactly on (0, sigma_k), G_k(1) = k - 2 > 0.
  Rational lo(1, 2);
  while (sgn(g_k(k, lo)) >= 0) {
    if (sgn(g_k(k, lo)) == 0) return RealEnclosure::point(lo);
    lo /= 2;
  }
  Rational hi = lo == Rational(1, 2) ? Rational(1) : lo * 2;
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const int s = sgn(g_k(k, mid));
    if (s == 0) return RealEnclosure::point(mid);
    (s < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

bool check_admissible(unsigned a, const Rational& rho) {
  if (a < 1) fail(ErrorCode::invalid_argument, "A must be at least 1");
  if (a <= 3) {
    if (rho == a) fail(ErrorCode::tie_undecidable, "rho equals A = " + std::to_string(a));
    return rho > a;
  }
  if (rho <= 1) return false;
  // rho > 1/sigma_A  <=>  1/rho < sigma_A  <=>  G_A(1/rho) < 0.
  const int s = sgn(g_k(a, 1 / rho));
  if (s == 0) fail(ErrorCode::tie_undecidable, "rho equals 1/sigma_A exactly");
  return s < 0;
}

int check_mai4_sign(const Rational& eps, unsigned a) {
  if (a < 3) fail(ErrorCode::invalid_argument, "A must be at least 3");
  if (eps <= 0) fail(ErrorCode::invalid_argument, "eps must be positive");
  const Rational x = 1 / ((Rational(1, 2) + eps) * Rational(a) * a);
  return sgn(g_k(a, x));
}

GrowthFit fit_growth_exponent(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) fail(ErrorCode::degenerate_samples, "need at least 3 samples");
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<std::pair<long double, long double>> pts;
  for (const auto& [r, v] : samples) {
    if (!(r > 0) || !(v > 0)) fail(ErrorCode::degenerate_samples, "samples must be positive");
    pts.emplace_back(std::log(static_cast<long double>(r)), std::log(static_cast<long double>(v)));
  }
  const long double n = pts.size();
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const long double mx = sx / n, my = sy / n;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx <= 0) fail(ErrorCode::degenerate_samples, "all sample abscissae are equal");
  GrowthFit fit;
  const long double slope = sxy / sxx;
  const long double intercept = my - slope * mx;
  long double ss = 0;
  for (const auto& [x, y] : pts) ss += (y - slope * x - intercept) * (y - slope * x - intercept);
  fit.slope = static_cast<double>(slope);
  fit.intercept = static_cast<double>(intercept);
  fit.residual = static_cast<double>(std::sqrt(ss / n));
  return fit;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::supported: return "supported";
    case Verdict::violated: return "violated";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

bool CriteriaReport::all_supported() const {
  return std::all_of(assumptions.begin(), assumptions.end(),
                     [](const AssumptionResult& a) { return a.verdict == Verdict::supported; });
}

bool CriteriaReport::any_indeterminate() const {
  return std::any_of(assumptions.begin(), assumptions.end(),
                     [](const AssumptionResult& a) { return a.verdict == Verdict::indeterminate; });
}

namespace {

double finite(long double x) {
  if (std::isnan(x)) return 0;
  if (x > DBL_MAX) return DBL_MAX;
  if (x < -DBL_MAX) return -DBL_MAX;
  return static_cast<double>(x);
}

}  // namespace

std::string CriteriaReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["criterion"] = criterion;
  doc["assumptions"] = nlohmann::ordered_json::array();
  for (const auto& a : assumptions) {
    nlohmann::ordered_json entry;
    entry["name"] = a.name;
    entry["verdict"] = verdict_name(a.verdict);
    entry["detail"] = a.detail;
    nlohmann::ordered_json stats = nlohmann::ordered_json::object();
    for (const auto& s : a.statistics) {
      auto& arr = stats[s.name] = nlohmann::ordered_json::array();
      for (double v : s.values) arr.push_back(finite(v));
    }
    entry["statistics"] = std::move(stats);
    entry["sample_grid"] = a.sample_grid;
    doc["assumptions"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

bool TrendPolicy::tends_to_zero(const std::vector<double>& v) const {
  if (v.size() < 3) return false;
  for (std::size_t i = v.size() / 2; i + 1 < v.size(); ++i)
    if (v[i + 1] > v[i]) return false;
  return v.back() * factor < v.front();
}

bool TrendPolicy::tends_to_infinity(const std::vector<double>& v) const {
  if (v.size() < 3 || !(v.front() > 0)) return false;
  for (std::size_t i = v.size() / 2; i + 1 < v.size(); ++i)
    if (v[i + 1] < v[i]) return false;
  return v.back() > factor * v.front();
}

std::vector<std::uint64_t> default_cri1_grid() {
  auto grid = geometric_grid(1000, Rational(5, 4), 1000000);
  if (grid.back() != 1000000) grid.push_back(1000000);
  return grid;
}

namespace {

std::string k_label(const std::vector<unsigned>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

std::vector<double> as_doubles(const std::vector<std::uint64_t>& g) { return {g.begin(), g.end()}; }

void check_grid(const std::vector<std::uint64_t>& grid, std::size_t min_points) {
  if (grid.size() < min_points)
    fail(ErrorCode::grid_too_small, "grid needs at least " + std::to_string(min_points) + " points, has " +
                                        std::to_string(grid.size()));
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (grid[i] >= grid[i + 1]) fail(ErrorCode::invalid_argument, "grid must be strictly increasing");
  if (grid.front() == 0) fail(ErrorCode::invalid_argument, "grid points must be positive");
}

}  // namespace

CriteriaReport check_cri1(const std::vector<ExponentSequence>& generators, unsigned a, const Cri1Options& options) {
  const std::size_t r = generators.size();
  if (r < 2) fail(ErrorCode::invalid_argument, "the criterion needs at least two series");
  if (a < 1) fail(ErrorCode::invalid_argument, "A must be at least 1");
  const std::vector<std::uint64_t> grid = options.grid.empty() ? default_cri1_grid() : options.grid;
  check_grid(grid, 4);
  const std::uint64_t horizon = grid.back() + 1;
  const std::vector<double> gd = as_doubles(grid);

  std::vector<SupportSet> supports;
  for (const auto& g : generators) supports.push_back(support_up_to(g, horizon));

  CriteriaReport report;
  report.criterion = "cri1";

  {
    AssumptionResult res;
    res.name = "1: bounded nonnegative coefficients";
    std::uint32_t c7 = 0;
    for (const auto& s : supports) c7 = std::max(c7, s.max_multiplicity());
    res.verdict = options.c7 && c7 > *options.c7 ? Verdict::violated : Verdict::supported;
    res.detail = "largest coefficient below " + std::to_string(horizon) + " is " + std::to_string(c7);
    res.statistics.push_back({"C7", {double(c7)}});
    report.assumptions.push_back(std::move(res));
  }

  std::vector<std::vector<double>> lam(r, std::vector<double>(grid.size()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < grid.size(); ++j) lam[i][j] = double(lambda_count(supports[i], grid[j]));

  {
    AssumptionResult res;
    res.name = "2: sumset gaps o(R / prod lambda^k)";
    res.sample_grid = gd;
    const unsigned k1_max = r == 2 ? a - 1 : a;
    std::vector<unsigned> k(r, 0);
    std::vector<std::string> failing;
    bool done = false;
    while (!done) {
      if (k[0] <= k1_max) {
        std::vector<SumsetOperand> ops;
        for (std::size_t h = 0; h + 2 < r; ++h)
          if (k[h] > 0) ops.push_back({&supports[h], k[h]});
        ops.push_back({&supports[r - 2], 1 + k[r - 2]});
        const SupportSet sum = weighted_sum(ops, horizon);
        const auto env = gap_envelope(sum, grid);
        std::vector<double> ratio;
        for (std::size_t j = 0; j < grid.size(); ++j) {
          if (!env[j].gap) continue;
          long double v = static_cast<long double>(*env[j].gap) / gd[j];
          for (std::size_t h = 0; h < r; ++h) v *= std::pow(static_cast<long double>(lam[h][j]), k[h]);
          ratio.push_back(finite(v));
        }
        if (!options.trend.tends_to_zero(ratio)) failing.push_back(k_label(k));
        res.statistics.push_back({"ratio k=" + k_label(k), std::move(ratio)});
      }
      // odometer over 0..k_cap in every coordinate
      std::size_t i = 0;
      while (i < r && k[i] == options.k_cap) k[i++] = 0;
      if (i == r) done = true;
      else ++k[i];
    }
    res.verdict = failing.empty() ? Verdict::supported : Verdict::violated;
    std::ostringstream d;
    d << "gap * prod lambda^k / R must fall " << options.trend.factor
      << "x end to end and not rise over the last half of the grid";
    if (!failing.empty()) {
      d << "; fails for k in";
      for (const auto& f : failing) d << ' ' << f;
    }
    res.detail = d.str();
    report.assumptions.push_back(std::move(res));
  }

  {
    AssumptionResult res;
    res.name = "3: lambda(S(f_1)) = o(R^(1/A - delta)), lambda(S(f_i)) = o(lambda(S(f_(i-1)))^eps)";
    res.sample_grid = gd;
    const Rational delta = options.delta ? *options.delta : Rational(1, 10 * a);
    const double threshold = Rational(Rational(1, a) - delta).get_d();
    std::vector<std::pair<double, double>> s1;
    for (std::size_t j = 0; j < grid.size(); ++j) s1.emplace_back(gd[j], lam[0][j]);
    const GrowthFit f1 = fit_growth_exponent(s1);
    Verdict v = f1.slope < threshold ? Verdict::supported : Verdict::violated;
    res.statistics.push_back({"lambda_1 exponent", {f1.slope}});
    res.statistics.push_back({"1/A - delta", {threshold}});
    std::ostringstream d;
    d << "fitted exponent of lambda_1 " << f1.slope << " vs " << threshold;
    const double eps = options.epsilon.get_d();
    for (std::size_t i = 1; i < r; ++i) {
      std::vector<std::pair<double, double>> s;
      for (std::size_t j = 0; j < grid.size(); ++j) s.emplace_back(lam[i - 1][j], lam[i][j]);
      try {
        const GrowthFit f = fit_growth_exponent(s);
        res.statistics.push_back({"log lambda_" + std::to_string(i + 1) + " / log lambda_" + std::to_string(i),
                                  {f.slope}});
        d << "; lambda_" << i + 1 << " vs lambda_" << i << " exponent " << f.slope << " vs eps " << eps;
        if (f.slope >= eps) v = Verdict::violated;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::degenerate_samples) throw;
        d << "; lambda_" << i << " constant on the grid";
        if (v == Verdict::supported) v = Verdict::indeterminate;
      }
    }
    res.verdict = v;
    res.detail = d.str();
    report.assumptions.push_back(std::move(res));
  }

  {
    AssumptionResult res;
    res.name = "4: [R, C8 R] meets S(f_r) for R >= C9";
    const auto& el = supports[r - 1].elements;
    const double c9 = gd.front();
    std::vector<double> ratios, at;
    auto it = std::lower_bound(el.begin(), el.end(), grid.front());
    if (it != el.end()) {
      ratios.push_back(double(*it) / c9);
      at.push_back(c9);
      for (; it + 1 != el.end(); ++it) {
        ratios.push_back(double(*(it + 1)) / double(*it));
        at.push_back(double(*it));
      }
    }
    if (ratios.size() < 3) {
      res.verdict = Verdict::indeterminate;
      res.detail = "fewer than 3 elements of S(f_r) above C9 = " + std::to_string(grid.front());
    } else {
      const std::size_t half = ratios.size() / 2;
      const double early = *std::max_element(ratios.begin(), ratios.begin() + half);
      const double late = *std::max_element(ratios.begin() + half, ratios.end());
      const double c8 = std::max(early, late);
      res.verdict = late <= early ? Verdict::supported : Verdict::violated;
      std::ostringstream d;
      d << "C8 = " << c8 << " holds for C9 <= R <= " << static_cast<std::uint64_t>(double(horizon - 1) / c8)
        << "; largest consecutive ratio " << early << " (first half) vs " << late << " (second half)";
      res.detail = d.str();
      res.statistics.push_back({"C8", {c8}});
      res.statistics.push_back({"C9", {c9}});
      res.statistics.push_back({"largest R", {std::floor(double(horizon - 1) / c8)}});
    }
    res.statistics.push_back({"consecutive ratio", ratios});
    res.sample_grid = std::move(at);
    report.assumptions.push_back(std::move(res));
  }
  return report;
}

namespace {

using ld = long double;

ld digamma_ld(ld x) {
  ld acc = 0;
  while (x < 10) {
    acc -= 1 / x;
    x += 1;
  }
  const ld x2 = 1 / (x * x);
  return acc + std::log(x) - 1 / (2 * x) - x2 * (1.0L / 12 - x2 * (1.0L / 120 - x2 / 252));
}

/// log a(R) and friends written in l = log R so that R can be astronomical.
struct LogForm {
  const ExponentSequence& s;

  ld log_a(ld l) const {
    switch (s.kind()) {
      case SequenceKind::power_floor: return s.rho().get_d() * l;
      case SequenceKind::log_power: {
        const ld y = s.y().get_d(), z = s.z().get_d();
        ld v = std::pow(l, 1 + y);
        if (z != 0) v *= std::pow(std::log(l), z);
        return v;
      }
      case SequenceKind::geometric: return std::exp(l) * std::log(ld(s.x().get_d()));
      case SequenceKind::scaled_factorial: return std::log(ld(s.x().get_d())) + std::lgamma(std::exp(l) + 1);
      case SequenceKind::weighted_geometric:
        return std::log(ld(s.w().get_d())) + std::exp(l) * std::log(ld(s.k()));
      case SequenceKind::explicit_list: break;
    }
    fail(ErrorCode::no_closed_form_inverse, "explicit sequences have no closed form");
  }

  // log of d(log a)/dl, i.e. log((log a)'(R) * R).
  ld log_d(ld l) const {
    switch (s.kind()) {
      case SequenceKind::power_floor: return std::log(ld(s.rho().get_d()));
      case SequenceKind::log_power: {
        const ld y = s.y().get_d(), z = s.z().get_d();
        if (z == 0) return std::log(1 + y) + y * std::log(l);
        const ld ll = std::log(l);
        return y * std::log(l) + (z - 1) * std::log(ll) + std::log(z + (1 + y) * ll);
      }
      case SequenceKind::geometric: return l + std::log(std::log(ld(s.x().get_d())));
      case SequenceKind::weighted_geometric: return l + std::log(std::log(ld(s.k())));
      case SequenceKind::scaled_factorial: {
        const ld e = std::exp(l);
        return l + std::log(std::isinf(e) ? l : digamma_ld(e + 1));
      }
      case SequenceKind::explicit_list: break;
    }
    fail(ErrorCode::no_closed_form_inverse, "explicit sequences have no closed form");
  }

  // log u(R+1) - log u(R).
  ld log_step(ld l) const {
    const ld small = std::log1p(std::exp(-l));
    switch (s.kind()) {
      case SequenceKind::power_floor: return s.rho().get_d() * small;
      case SequenceKind::geometric: return std::log(ld(s.x().get_d()));
      case SequenceKind::weighted_geometric: return std::log(ld(s.k()));
      case SequenceKind::scaled_factorial: return l + small;
      case SequenceKind::log_power:
        if (l < 30) return log_a(l + small) - log_a(l);
        return std::exp(log_d(l)) * small;
      case SequenceKind::explicit_list: break;
    }
    fail(ErrorCode::no_closed_form_inverse, "explicit sequences have no closed form");
  }

  // t = log b(e^L) where b is the inverse of a; NaN outside the range.
  ld log_inverse(ld big_l) const {
    switch (s.kind()) {
      case SequenceKind::power_floor: return big_l / s.rho().get_d();
      case SequenceKind::geometric: {
        const ld q = big_l / std::log(ld(s.x().get_d()));
        return q > 0 ? std::log(q) : NAN;
      }
      case SequenceKind::weighted_geometric: {
        const ld q = (big_l - std::log(ld(s.w().get_d()))) / std::log(ld(s.k()));
        return q > 0 ? std::log(q) : NAN;
      }
      case SequenceKind::log_power:
        if (s.z() == 0) return std::pow(big_l, 1 / (1 + ld(s.y().get_d())));
        return bisect(big_l, std::max<ld>(1 + 1e-12L, std::exp(-ld(s.z().get_d()) / (1 + ld(s.y().get_d())))));
      case SequenceKind::scaled_factorial: return bisect(big_l, 0);
      case SequenceKind::explicit_list: break;
    }
    fail(ErrorCode::no_closed_form_inverse, "explicit sequences have no closed form");
  }

  // log_a is increasing from lo on.
  ld bisect(ld target, ld lo) const {
    if (!(log_a(lo) < target)) return NAN;
    ld hi = lo + 1;
    while (log_a(hi) < target) hi = lo + 2 * (hi - lo);
    for (int i = 0; i < 200; ++i) {
      const ld mid = (lo + hi) / 2;
      (log_a(mid) < target ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
  }
};

}  // namespace

std::vector<Rational> default_cri2_grid(const ExponentSequence& a, const ExponentSequence& u, double log_max,
                                        unsigned points) {
  const double r0 = std::max({3.0, double(a.m0()), double(u.m0())});
  const double l0 = std::log(r0);
  std::vector<Rational> grid;
  for (unsigned j = 0; j < points; ++j) {
    const double l = l0 * std::pow(log_max / l0, double(j) / double(points - 1));
    Rational q(l);
    grid.push_back(q);
  }
  return grid;
}

CriteriaReport check_cri2(const ExponentSequence& a, const ExponentSequence& u, const Cri2Options& options) {
  if (a.kind() == SequenceKind::explicit_list || u.kind() == SequenceKind::explicit_list)
    fail(ErrorCode::no_closed_form_inverse, "explicit sequences have no closed-form inverse");
  const std::vector<Rational> grid = options.log_grid.empty() ? default_cri2_grid(a, u) : options.log_grid;
  if (grid.size() < 4) fail(ErrorCode::grid_too_small, "cri2 needs at least 4 grid points");
  std::vector<double> gl;
  for (const auto& q : grid) {
    if (q <= 1) fail(ErrorCode::invalid_argument, "log-grid points must exceed 1");
    gl.push_back(q.get_d());
  }
  for (std::size_t i = 0; i + 1 < gl.size(); ++i)
    if (gl[i] >= gl[i + 1]) fail(ErrorCode::invalid_argument, "grid must be strictly increasing");
  const LogForm fa{a}, fu{u};

  CriteriaReport report;
  report.criterion = "cri2";

  {
    AssumptionResult res;
    res.name = "a1: log a(R) / log R ultimately increasing and unbounded";
    res.sample_grid = gl;
    std::vector<double> q;
    for (double l : gl) q.push_back(finite(fa.log_a(l) / l));
    res.verdict = options.trend.tends_to_infinity(q) ? Verdict::supported : Verdict::violated;
    std::ostringstream d;
    d << "log a/log R from " << q.front() << " to " << q.back() << " over log R in [" << gl.front() << ", "
      << gl.back() << "]; a(m) increasing from m = " << a.increasing_from();
    res.detail = d.str();
    res.statistics.push_back({"log a / log R", std::move(q)});
    report.assumptions.push_back(std::move(res));
  }

  {
    AssumptionResult res;
    res.name = "a2: (log a(R))' < R^(-1+eps) for large R";
    res.sample_grid = gl;
    std::vector<double> expo;
    for (double l : gl) expo.push_back(finite(fa.log_d(l) / l));
    // (log a)' < R^(-1+eps)  <=>  log((log a)' R) / log R < eps
    Verdict v = Verdict::supported;
    std::ostringstream d;
    d << "log((log a)' R)/log R at the last point " << expo.back();
    for (int halving = 0; halving < 3; ++halving) {
      const double eps = options.epsilon.get_d() / double(1 << halving);
      std::size_t from = expo.size();
      while (from > 0 && expo[from - 1] < eps) --from;
      const bool ok = from <= expo.size() / 2;
      if (!ok) v = Verdict::violated;
      d << "; eps " << eps << ": " << (from < expo.size() ? "holds from log R = " + std::to_string(gl[from]) : "never holds");
    }
    res.verdict = v;
    res.detail = d.str();
    res.statistics.push_back({"log((log a)' R) / log R", std::move(expo)});
    report.assumptions.push_back(std::move(res));
  }

  {
    AssumptionResult res;
    res.name = "u1: u(R+1)/u(R) < C11";
    res.sample_grid = gl;
    std::vector<double> ratio;
    for (double l : gl) ratio.push_back(finite(std::exp(fu.log_step(l))));
    const std::size_t half = ratio.size() / 2;
    const double early = *std::max_element(ratio.begin(), ratio.begin() + half);
    const double late = *std::max_element(ratio.begin() + half, ratio.end());
    res.verdict = late <= early && late < DBL_MAX ? Verdict::supported : Verdict::violated;
    std::ostringstream d;
    d << "C11 = " << std::max(early, late) << "; largest ratio " << early << " (first half) vs " << late
      << " (second half); u(m) increasing from m = " << u.increasing_from();
    res.detail = d.str();
    res.statistics.push_back({"C11", {std::max(early, late)}});
    res.statistics.push_back({"u(R+1)/u(R)", std::move(ratio)});
    report.assumptions.push_back(std::move(res));
  }

  {
    AssumptionResult res;
    res.name = "u2: log b(R) / log v(R) unbounded";
    std::vector<double> ratio, at;
    for (double l : gl) {
      const ld lb = fa.log_inverse(l), lv = fu.log_inverse(l);
      if (std::isnan(lb) || std::isnan(lv) || !(lb > 0) || !(lv > 0)) continue;
      ratio.push_back(finite(lb / lv));
      at.push_back(l);
    }
    if (ratio.size() < 3) {
      res.verdict = Verdict::indeterminate;
      res.detail = "inverse functions undefined on most of the grid";
    } else {
      res.verdict = options.trend.tends_to_infinity(ratio) ? Verdict::supported : Verdict::violated;
      std::ostringstream d;
      d << "log b / log v from " << ratio.front() << " to " << ratio.back();
      res.detail = d.str();
    }
    res.statistics.push_back({"log b / log v", std::move(ratio)});
    res.sample_grid = std::move(at);
    report.assumptions.push_back(std::move(res));
  }
  return report;
}

CriteriaReport check_tra1(const ExponentSequence& generator, unsigned a, const Rational& delta,
                          const Tra1Options& options) {
  if (a < 1) fail(ErrorCode::invalid_argument, "A must be at least 1");
  const std::vector<std::uint64_t> grid = options.grid.empty() ? default_cri1_grid() : options.grid;
  check_grid(grid, 3);
  const SupportSet s = support_up_to(generator, grid.back() + 1);
  const Rational e = Rational(1, a) - delta;
  const Integer& p = e.get_num();
  const unsigned long q = e.get_den().get_ui();
  std::vector<double> hits, lam;
  for (auto r : grid) {
    const std::uint64_t l = lambda_count(s, r);
    lam.push_back(double(l));
    const Integer lq = pow(Integer(static_cast<unsigned long>(l)), q);
    const Integer rr(static_cast<unsigned long>(r));
    // lambda < R^(p/q)  <=>  lambda^q < R^p, with p of either sign.
    const bool hit = p >= 0 ? lq < pow(rr, p.get_ui()) : lq * pow(rr, Integer(-p).get_ui()) < 1;
    if (hit) hits.push_back(double(r));
  }
  CriteriaReport report;
  report.criterion = "tra1";
  AssumptionResult res;
  res.name = "lambda(S(f); R) < R^(1/A - delta) for infinitely many R";
  res.sample_grid = as_doubles(grid);
  res.verdict = !hits.empty() && hits.back() * 10 >= double(grid.back()) ? Verdict::supported : Verdict::violated;
  std::ostringstream d;
  d << hits.size() << " of " << grid.size() << " grid points satisfy the bound";
  if (!hits.empty()) d << ", largest " << static_cast<std::uint64_t>(hits.back());
  res.detail = d.str();
  res.statistics.push_back({"lambda", std::move(lam)});
  res.statistics.push_back({"hits", std::move(hits)});
  report.assumptions.push_back(std::move(res));
  return report;
}

}  // namespace betaseries
