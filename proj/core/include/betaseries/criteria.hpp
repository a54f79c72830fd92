#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betaseries/enclosure.hpp"
#include "betaseries/exponent_sequence.hpp"

namespace betaseries {

/// G_k(x) = (1-x)^k + (k-1)x - 1, exactly.
Rational g_k(unsigned k, const Rational& x);

/// Enclosure [lo, hi] of the zero of G_k in (0,1) with G_k(lo) < 0 < G_k(hi)
/// and hi - lo <= width, by dyadic bisection. Requires k >= 3.
RealEnclosure sigma_k(unsigned k, const Rational& width);

/// rho > A when A <= 3, rho > 1/sigma_A when A >= 4. TieUndecidable when
/// rho sits exactly on the boundary.
bool check_admissible(unsigned a, const Rational& rho);

/// Sign (-1, 0, 1) of G_A((1/2 + eps)^-1 A^-2). Requires A >= 3, eps > 0.
int check_mai4_sign(const Rational& eps, unsigned a);

struct GrowthFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // RMS residual in log space
};

/// Least squares line through (log R, log value). DegenerateSamples with
/// fewer than 3 samples, a nonpositive coordinate, or all R equal.
GrowthFit fit_growth_exponent(const std::vector<std::pair<double, double>>& samples);

enum class Verdict { supported, violated, indeterminate };

std::string_view verdict_name(Verdict v);

struct Statistic {
  std::string name;
  std::vector<double> values;
};

struct AssumptionResult {
  std::string name;
  Verdict verdict = Verdict::indeterminate;
  std::string detail;
  std::vector<Statistic> statistics;
  std::vector<double> sample_grid;
};

struct CriteriaReport {
  std::string criterion;
  std::vector<AssumptionResult> assumptions;

  bool all_supported() const;
  bool any_indeterminate() const;
  std::string to_json() const;
};

/// A grid sequence "tends to 0" when it is nonincreasing over the last half
/// of the grid and its last value is below first / factor; "tends to
/// infinity" symmetrically.
struct TrendPolicy {
  double factor = 10;
  bool tends_to_zero(const std::vector<double>& v) const;
  bool tends_to_infinity(const std::vector<double>& v) const;
};

struct Cri1Options {
  std::vector<std::uint64_t> grid;    // default: 1000 * (5/4)^j up to 10^6
  std::optional<Rational> delta;      // default (1/A)/10
  Rational epsilon = Rational(1, 2);
  unsigned k_cap = 1;                 // each k_i ranges over 0..k_cap
  std::optional<std::uint32_t> c7;    // default: the scanned maximum
  TrendPolicy trend;
};

std::vector<std::uint64_t> default_cri1_grid();

/// Empirical check of the four assumptions of the linear independence
/// criterion for the series sum_m X^{w_i(m)} given by `generators`.
CriteriaReport check_cri1(const std::vector<ExponentSequence>& generators, unsigned a,
                          const Cri1Options& options = {});

struct Cri2Options {
  // Sample points l = log R. Default: 61 points geometric in l from
  // log max(3, m0) to 10^6.
  std::vector<Rational> log_grid;
  Rational epsilon = Rational(1, 2);
  TrendPolicy trend;
};

std::vector<Rational> default_cri2_grid(const ExponentSequence& a, const ExponentSequence& u,
                                        double log_max = 1e6, unsigned points = 61);

/// Empirical check of the algebraic independence criterion for
/// a(R) (the slower function) and u(R), using closed forms in log R.
/// NoClosedFormInverse for Explicit sequences.
CriteriaReport check_cri2(const ExponentSequence& a, const ExponentSequence& u, const Cri2Options& options = {});

struct Tra1Options {
  std::vector<std::uint64_t> grid;  // default as for cri1
};

/// Grid R with lambda(S(f); R) < R^(1/A - delta), exactly. Supported when
/// some hit lies in the top decade of the grid.
CriteriaReport check_tra1(const ExponentSequence& generator, unsigned a, const Rational& delta,
                          const Tra1Options& options = {});

}  // namespace betaseries
