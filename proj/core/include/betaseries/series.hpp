#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "betaseries/field_element.hpp"
#include "betaseries/support_set.hpp"

namespace betaseries {

/// Power series sum t_n X^n with t_n the support multiplicities.
struct SeriesSpec {
  SupportSet support;
  std::uint32_t coefficient_bound = 1;  // C7: every t_n <= this
  // True when the series has no terms at or beyond the support horizon
  // (a polynomial), so no tail bound is needed.
  bool finite = false;

  // coefficient_bound defaults to the largest multiplicity (at least 1).
  static SeriesSpec from_support(SupportSet support, std::uint32_t bound = 0);
  void validate() const;
};

struct SeriesValue {
  RealEnclosure enclosure;
  std::uint64_t horizon_used = 0;
  Rational tail_bound;
};

/// Enclosure of sum t_n beta^-n with width <= `width`. Throws
/// HorizonInsufficient (naming the horizon needed) when the support stops
/// short of what the tail bound requires.
SeriesValue evaluate(const SeriesSpec& spec, const AlgebraicBase& base, const Rational& width);

/// Exponent vector k = (k_1, ..., k_r).
using MonomialExponent = std::vector<unsigned>;

unsigned total_degree(const MonomialExponent& k);

/// rho(k; m) for m < horizon: the coefficient of X^m in prod_i f_i(X)^k_i,
/// by exact truncated convolution.
std::vector<Integer> rho_coefficients(const std::vector<SeriesSpec>& specs, const MonomialExponent& k,
                                      std::uint64_t horizon);

/// P(X_1..X_r) = sum A_k X^k with A_k in Z[beta].
struct RelationPolynomial {
  std::vector<std::pair<MonomialExponent, FieldElement>> terms;

  unsigned variables() const;
  unsigned degree() const;
  void validate(std::size_t r) const;
};

// {"terms": [{"k": [1, 0], "A": [1, 0]}, ...]} with A the power-basis
// coordinates (integers).
RelationPolynomial parse_relation(std::string_view json_text, const AlgebraicBase& base);

/// Y_R = sum_k A_k sum_{m>=1} rho(k; m+R) beta^-m, from truncated sums
/// plus a certified geometric-times-polynomial tail.
class TailSumSystem {
 public:
  TailSumSystem(std::vector<SeriesSpec> specs, RelationPolynomial p, AlgebraicBase base);

  // Enclosure of Y_R with all error terms below 2^-bits (roughly).
  RealEnclosure y_at_bits(std::uint64_t r, unsigned long bits);
  RealEnclosure y_r_value(std::uint64_t r, const Rational& width);
  // beta Y_{R-1} - sum_k A_k rho(k;R) - Y_R, which is exactly 0.
  RealEnclosure recurrence_residual(std::uint64_t r, const Rational& width);

  const AlgebraicBase& base() const { return base_; }

 private:
  void ensure_rho(std::uint64_t horizon);
  std::uint64_t tail_terms(std::uint64_t r, unsigned long bits, Rational* tail_out, std::size_t term) const;

  std::vector<SeriesSpec> specs_;
  RelationPolynomial p_;
  AlgebraicBase base_;
  std::uint64_t rho_horizon_ = 0;
  std::vector<std::vector<Integer>> rho_;  // per term
};

RealEnclosure y_r_value(const std::vector<SeriesSpec>& specs, const RelationPolynomial& p,
                        const AlgebraicBase& base, std::uint64_t r, const Rational& width);

RealEnclosure y_r_recurrence_check(const std::vector<SeriesSpec>& specs, const RelationPolynomial& p,
                                   const AlgebraicBase& base, std::uint64_t r, const Rational& width);

enum class YVerdict { at_least, below, indeterminate };

struct YSweepRow {
  std::uint64_t r;
  RealEnclosure value;
  YVerdict verdict;
};

struct YCount {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> indeterminate;
  std::vector<YSweepRow> rows;
};

/// y_N = #{R < N : Y_R >= 1/beta}. R whose enclosure still straddles 1/beta
/// at the precision budget are listed as indeterminate.
YCount y_n_count(const std::vector<SeriesSpec>& specs, const RelationPolynomial& p, std::uint64_t n,
                 const AlgebraicBase& base);

void write_rho_csv(std::ostream& out, const std::vector<Integer>& rho);
void write_sweep_csv(std::ostream& out, const YCount& sweep);

std::string_view verdict_name(YVerdict v);

}  // namespace betaseries
