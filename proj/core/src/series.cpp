#include "betaseries/series.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "betaseries/error.hpp"
#include "betaseries/interval.hpp"

namespace betaseries {

SeriesSpec SeriesSpec::from_support(SupportSet support, std::uint32_t bound) {
  SeriesSpec s;
  s.coefficient_bound = std::max<std::uint32_t>({bound, support.max_multiplicity(), 1});
  s.support = std::move(support);
  return s;
}

void SeriesSpec::validate() const {
  if (support.elements.size() != support.multiplicity.size())
    fail(ErrorCode::invalid_argument, "support elements and multiplicities differ in length");
  if (support.max_multiplicity() > coefficient_bound)
    fail(ErrorCode::invalid_argument, "a coefficient exceeds the declared bound C7=" +
                                          std::to_string(coefficient_bound));
}

namespace {

Interval inverse_beta(const RealEnclosure& b, mpfr_prec_t prec) {
  return Interval::from_long(1, prec) / Interval(b.lower, b.upper, prec);
}

// log of a positive rational, roughly; only used to seed searches.
double approx_log(const Rational& q) {
  long e1 = 0, e2 = 0;
  const double m1 = mpz_get_d_2exp(&e1, q.get_num_mpz_t());
  const double m2 = mpz_get_d_2exp(&e2, q.get_den_mpz_t());
  return std::log(m1 / m2) + static_cast<double>(e1 - e2) * std::log(2.0);
}

Rational geometric_tail(std::uint32_t c7, const Rational& beta_lo, std::uint64_t n) {
  // C7 beta^-N beta / (beta - 1)
  return Rational(c7) * beta_lo / (pow(beta_lo, n) * (beta_lo - 1));
}

std::uint64_t horizon_for_tail(std::uint32_t c7, const Rational& beta_lo, const Rational& target) {
  const double guess = 1 + (approx_log(Rational(c7)) - approx_log(beta_lo - 1) - approx_log(target)) /
                               approx_log(beta_lo);
  std::uint64_t n = guess > 3 ? static_cast<std::uint64_t>(guess) - 2 : 0;
  while (geometric_tail(c7, beta_lo, n) > target) ++n;
  return n;
}

}  // namespace

SeriesValue evaluate(const SeriesSpec& spec, const AlgebraicBase& base, const Rational& width) {
  spec.validate();
  if (width <= 0) fail(ErrorCode::invalid_argument, "width must be positive");
  const auto& config = base.precision();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    const RealEnclosure b = base.beta_enclosure(bits);
    std::uint64_t n = spec.support.horizon;
    Rational tail = 0;
    if (!spec.finite) {
      n = horizon_for_tail(spec.coefficient_bound, b.lower, width / 2);
      if (n > spec.support.horizon)
        fail(ErrorCode::horizon_insufficient, "series needs horizon N=" + std::to_string(n) +
                                                  " but the support stops at " +
                                                  std::to_string(spec.support.horizon));
      tail = geometric_tail(spec.coefficient_bound, b.lower, n);
    }
    const auto prec = static_cast<mpfr_prec_t>(bits + 64);
    const Interval inv = inverse_beta(b, prec);
    Interval sum(Rational(0), prec);
    for (std::size_t i = 0; i < spec.support.size() && spec.support.elements[i] < n; ++i)
      sum += Interval::from_long(spec.support.multiplicity[i], prec) * pow(inv, spec.support.elements[i]);
    RealEnclosure e{sum.lower_q(), sum.upper_q() + tail};
    if (e.width() <= width) return {std::move(e), n, tail};
  }
  fail(ErrorCode::precision_budget_exceeded, "series enclosure did not reach width " + width.get_str());
}

unsigned total_degree(const MonomialExponent& k) {
  unsigned s = 0;
  for (auto x : k) s += x;
  return s;
}

std::vector<Integer> rho_coefficients(const std::vector<SeriesSpec>& specs, const MonomialExponent& k,
                                      std::uint64_t horizon) {
  if (k.size() != specs.size())
    fail(ErrorCode::invalid_argument, "exponent vector has " + std::to_string(k.size()) + " entries for " +
                                          std::to_string(specs.size()) + " series");
  std::vector<Integer> acc(horizon, Integer(0));
  if (horizon == 0) return acc;
  acc[0] = 1;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (k[i] == 0) continue;
    const SupportSet& s = specs[i].support;
    if (s.horizon < horizon && !specs[i].finite)
      fail(ErrorCode::horizon_insufficient, "series " + std::to_string(i + 1) + " is complete below " +
                                                std::to_string(s.horizon) + ", rho needs " +
                                                std::to_string(horizon));
    for (unsigned rep = 0; rep < k[i]; ++rep) {
      std::vector<Integer> next(horizon, Integer(0));
      for (std::size_t j = 0; j < s.size() && s.elements[j] < horizon; ++j) {
        const std::uint64_t n = s.elements[j];
        const unsigned long t = s.multiplicity[j];
        for (std::uint64_t m = n; m < horizon; ++m)
          if (acc[m - n] != 0) mpz_addmul_ui(next[m].get_mpz_t(), acc[m - n].get_mpz_t(), t);
      }
      acc = std::move(next);
    }
  }
  return acc;
}

unsigned RelationPolynomial::variables() const { return terms.empty() ? 0 : static_cast<unsigned>(terms.front().first.size()); }

unsigned RelationPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [k, a] : terms) d = std::max(d, total_degree(k));
  return d;
}

void RelationPolynomial::validate(std::size_t r) const {
  if (terms.empty()) fail(ErrorCode::invalid_argument, "relation polynomial has no terms");
  for (const auto& [k, a] : terms) {
    if (k.size() != r)
      fail(ErrorCode::invalid_argument, "monomial exponent has " + std::to_string(k.size()) +
                                            " entries, expected " + std::to_string(r));
    if (a.is_zero()) fail(ErrorCode::invalid_argument, "relation coefficients must be nonzero");
    if (!a.has_integer_coords()) fail(ErrorCode::invalid_argument, "relation coefficients must lie in Z[beta]");
  }
}

RelationPolynomial parse_relation(std::string_view json_text, const AlgebraicBase& base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("relation is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    fail(ErrorCode::parse_error, "relation JSON needs an array field 'terms'");
  RelationPolynomial p;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("k") || !t["k"].is_array())
      fail(ErrorCode::parse_error, "each term needs an exponent array 'k'");
    MonomialExponent k;
    for (const auto& e : t["k"]) {
      if (!e.is_number_unsigned()) fail(ErrorCode::parse_error, "exponents must be nonnegative integers");
      k.push_back(e.get<unsigned>());
    }
    std::vector<Rational> coords;
    const nlohmann::json a = t.value("A", nlohmann::json(1));
    auto coord = [](const nlohmann::json& v) {
      if (v.is_number_integer()) return Rational(parse_integer(v.dump()));
      if (v.is_string()) return Rational(parse_integer(v.get<std::string>()));
      fail(ErrorCode::parse_error, "coefficient coordinates must be integers");
    };
    if (a.is_array()) {
      if (static_cast<int>(a.size()) > base.degree())
        fail(ErrorCode::parse_error, "coefficient has more coordinates than the field degree");
      for (const auto& c : a) coords.push_back(coord(c));
    } else {
      coords.push_back(coord(a));
    }
    p.terms.emplace_back(std::move(k), FieldElement(base, std::move(coords)));
  }
  return p;
}

TailSumSystem::TailSumSystem(std::vector<SeriesSpec> specs, RelationPolynomial p, AlgebraicBase base)
    : specs_(std::move(specs)), p_(std::move(p)), base_(std::move(base)) {
  for (const auto& s : specs_) s.validate();
  p_.validate(specs_.size());
  for (const auto& [k, a] : p_.terms)
    if (!(a.base() == base_)) fail(ErrorCode::base_mismatch, "relation coefficients live over another base");
  rho_.resize(p_.terms.size());
}

void TailSumSystem::ensure_rho(std::uint64_t horizon) {
  if (horizon <= rho_horizon_) return;
  std::uint64_t limit = UINT64_MAX;
  for (const auto& s : specs_)
    if (!s.finite) limit = std::min(limit, s.support.horizon);
  if (horizon > limit)
    fail(ErrorCode::horizon_insufficient, "Y_R needs supports complete below " + std::to_string(horizon) +
                                              ", have " + std::to_string(limit));
  // Grow geometrically so sweeps over R do not recompute every step.
  const std::uint64_t target = std::min(limit, std::max(horizon, 2 * rho_horizon_));
  for (std::size_t j = 0; j < p_.terms.size(); ++j) rho_[j] = rho_coefficients(specs_, p_.terms[j].first, target);
  rho_horizon_ = target;
}

std::uint64_t TailSumSystem::tail_terms(std::uint64_t r, unsigned long bits, Rational* tail_out,
                                        std::size_t term) const {
  const MonomialExponent& k = p_.terms[term].first;
  const unsigned big_k = total_degree(k);
  Integer c = 1;
  for (std::size_t i = 0; i < k.size(); ++i) c *= pow(Integer(specs_[i].coefficient_bound), k[i]);
  const Rational beta_lo = base_.beta_enclosure(bits).lower;
  const Rational target = dyadic_unit(bits) / static_cast<unsigned long>(p_.terms.size() * 4);
  const Rational a_bound = [&] {
    const RealEnclosure a = embed_at_bits(p_.terms[term].second, bits);
    return std::max(abs(a.lower), abs(a.upper));
  }();
  // Terms t_m = c (1+m+R)^K beta^-m decrease in ratio from m = M+1 on by at
  // most q = ((3+R+M)/(2+R+M))^K / beta_lo, so the tail is <= t_{M+1}/(1-q).
  for (std::uint64_t m = 8;; m *= 2) {
    const Rational base_r(std::to_string(r));
    const Rational q = pow(Rational(base_r + m + 3) / (base_r + m + 2), big_k) / beta_lo;
    if (q >= 1) continue;
    const Rational t_next = Rational(c) * pow(base_r + m + 2, big_k) / pow(beta_lo, m + 1);
    const Rational tail = t_next / (1 - q);
    if (tail * a_bound <= target) {
      *tail_out = tail;
      return m;
    }
  }
}

RealEnclosure TailSumSystem::y_at_bits(std::uint64_t r, unsigned long bits) {
  const auto prec = static_cast<mpfr_prec_t>(bits + 64);
  const RealEnclosure b = base_.beta_enclosure(bits);
  const Interval inv = inverse_beta(b, prec);
  RealEnclosure y = RealEnclosure::point(0);
  for (std::size_t j = 0; j < p_.terms.size(); ++j) {
    if (total_degree(p_.terms[j].first) == 0) continue;  // rho(0; m) = 0 for m >= 1
    Rational tail;
    const std::uint64_t m_terms = tail_terms(r, bits, &tail, j);
    ensure_rho(r + m_terms + 1);
    const auto& rho = rho_[j];
    Interval acc(Rational(0), prec);
    for (std::uint64_t m = m_terms; m >= 1; --m) acc = (acc + Interval::from_integer(rho[r + m], prec)) * inv;
    const RealEnclosure t{acc.lower_q(), acc.upper_q() + tail};
    y = y + embed_at_bits(p_.terms[j].second, bits) * t;
  }
  return y;
}

RealEnclosure TailSumSystem::y_r_value(std::uint64_t r, const Rational& width) {
  const auto& config = base_.precision();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    RealEnclosure y = y_at_bits(r, bits);
    if (y.width() <= width) return y;
  }
  fail(ErrorCode::precision_budget_exceeded, "Y_R enclosure did not reach width " + width.get_str());
}

RealEnclosure TailSumSystem::recurrence_residual(std::uint64_t r, const Rational& width) {
  if (r < 1) fail(ErrorCode::invalid_argument, "the recurrence needs R >= 1");
  const auto& config = base_.precision();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    const RealEnclosure prev = y_at_bits(r - 1, bits);
    const RealEnclosure cur = y_at_bits(r, bits);
    ensure_rho(r + 1);
    RealEnclosure step = RealEnclosure::point(0);
    for (std::size_t j = 0; j < p_.terms.size(); ++j)
      step = step + Rational(rho_[j][r]) * embed_at_bits(p_.terms[j].second, bits);
    RealEnclosure res = base_.beta_enclosure(bits) * prev - step - cur;
    if (res.width() <= width) return res;
  }
  fail(ErrorCode::precision_budget_exceeded, "recurrence residual did not reach width " + width.get_str());
}

RealEnclosure y_r_value(const std::vector<SeriesSpec>& specs, const RelationPolynomial& p,
                        const AlgebraicBase& base, std::uint64_t r, const Rational& width) {
  TailSumSystem sys(specs, p, base);
  return sys.y_r_value(r, width);
}

RealEnclosure y_r_recurrence_check(const std::vector<SeriesSpec>& specs, const RelationPolynomial& p,
                                   const AlgebraicBase& base, std::uint64_t r, const Rational& width) {
  TailSumSystem sys(specs, p, base);
  return sys.recurrence_residual(r, width);
}

YCount y_n_count(const std::vector<SeriesSpec>& specs, const RelationPolynomial& p, std::uint64_t n,
                 const AlgebraicBase& base) {
  TailSumSystem sys(specs, p, base);
  YCount out;
  const auto& config = base.precision();
  for (std::uint64_t r = 0; r < n; ++r) {
    YSweepRow row{r, RealEnclosure::point(0), YVerdict::indeterminate};
    for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
      row.value = sys.y_at_bits(r, bits);
      const RealEnclosure b = base.beta_enclosure(bits);
      const Rational inv_hi = 1 / b.lower, inv_lo = 1 / b.upper;
      if (row.value.lower >= inv_hi) {
        row.verdict = YVerdict::at_least;
        break;
      }
      if (row.value.upper < inv_lo) {
        row.verdict = YVerdict::below;
        break;
      }
    }
    if (row.verdict == YVerdict::at_least) ++out.count;
    if (row.verdict == YVerdict::indeterminate) out.indeterminate.push_back(r);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string_view verdict_name(YVerdict v) {
  switch (v) {
    case YVerdict::at_least: return "at_least";
    case YVerdict::below: return "below";
    case YVerdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

void write_rho_csv(std::ostream& out, const std::vector<Integer>& rho) {
  out << "m,rho\n";
  for (std::size_t m = 0; m < rho.size(); ++m) out << m << ',' << rho[m].get_str() << '\n';
}

void write_sweep_csv(std::ostream& out, const YCount& sweep) {
  out << "R,lower,upper,verdict\n";
  for (const auto& row : sweep.rows)
    out << row.r << ',' << row.value.lower_decimal() << ',' << row.value.upper_decimal() << ','
        << verdict_name(row.verdict) << '\n';
}

}  // namespace betaseries
