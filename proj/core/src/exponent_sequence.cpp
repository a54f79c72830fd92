#include "betaseries/exponent_sequence.hpp"

#include <cmath>
#include <json.hpp>

#include "betaseries/error.hpp"

namespace betaseries {

std::string_view sequence_kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::power_floor: return "PowerFloor";
    case SequenceKind::log_power: return "LogPower";
    case SequenceKind::geometric: return "Geometric";
    case SequenceKind::scaled_factorial: return "ScaledFactorial";
    case SequenceKind::weighted_geometric: return "WeightedGeometric";
    case SequenceKind::explicit_list: return "Explicit";
  }
  return "Explicit";
}

namespace {

constexpr unsigned long kExactExponentLimit = 512;

Integer factorial(long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Integer root_floor(const Integer& n, unsigned long k) {
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

bool exact_power(const Rational& rho) {
  return rho.get_num() <= kExactExponentLimit && rho.get_den() <= kExactExponentLimit;
}

Rational rational_param(const nlohmann::json& v, const char* name) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number()) return parse_rational(v.dump());
  fail(ErrorCode::invalid_sequence, std::string("parameter '") + name + "' must be a number or string");
}

}  // namespace

ExponentSequence ExponentSequence::power_floor(const Rational& rho) {
  ExponentSequence s(SequenceKind::power_floor, 0, false);
  s.a_ = rho;
  s.validate();
  return s;
}

ExponentSequence ExponentSequence::log_power(const Rational& y, const Rational& z) {
  ExponentSequence s(SequenceKind::log_power, z == 0 ? 1 : 3, true);
  s.a_ = y;
  s.b_ = z;
  s.validate();
  return s;
}

ExponentSequence ExponentSequence::geometric(const Rational& x) {
  ExponentSequence s(SequenceKind::geometric, 0, false);
  s.a_ = x;
  s.validate();
  return s;
}

ExponentSequence ExponentSequence::scaled_factorial(const Rational& x) {
  ExponentSequence s(SequenceKind::scaled_factorial, 0, false);
  s.a_ = x;
  s.validate();
  return s;
}

ExponentSequence ExponentSequence::weighted_geometric(const Rational& w, unsigned long k) {
  ExponentSequence s(SequenceKind::weighted_geometric, 0, false);
  s.a_ = w;
  s.k_ = k;
  s.validate();
  return s;
}

ExponentSequence ExponentSequence::explicit_list(std::vector<Integer> values) {
  ExponentSequence s(SequenceKind::explicit_list, 0, false);
  s.values_ = std::move(values);
  s.validate();
  return s;
}

ExponentSequence& ExponentSequence::set_m0(long m0) {
  m0_ = m0;
  validate();
  return *this;
}

void ExponentSequence::validate() const {
  auto bad = [](const std::string& what) { fail(ErrorCode::invalid_sequence, what); };
  if (m0_ < 0) bad("m0 must be nonnegative");
  switch (kind_) {
    case SequenceKind::power_floor:
      if (a_ <= 1) bad("PowerFloor needs rho > 1");
      break;
    case SequenceKind::log_power:
      if (a_ < 0) bad("LogPower needs y >= 0");
      if (a_ == 0 && b_ <= 0) bad("LogPower needs y > 0, or y = 0 and z > 0");
      if (b_ != 0 && m0_ < 3) bad("LogPower with z != 0 is defined from m = 3 on");
      if (b_ == 0 && m0_ < 1) bad("LogPower is defined from m = 1 on");
      break;
    case SequenceKind::geometric:
      if (a_ <= 1) bad("Geometric needs x > 1");
      break;
    case SequenceKind::scaled_factorial:
      if (a_ <= 0) bad("ScaledFactorial needs x > 0");
      break;
    case SequenceKind::weighted_geometric:
      if (a_ <= 0) bad("WeightedGeometric needs w > 0");
      if (k_ < 2) bad("WeightedGeometric needs k >= 2");
      break;
    case SequenceKind::explicit_list:
      for (const auto& v : values_)
        if (v < 0) bad("Explicit values must be nonnegative");
      break;
  }
}

ExponentSequence ExponentSequence::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("sequence is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail(ErrorCode::invalid_sequence, "sequence JSON needs a string field 'kind'");
  const std::string kind = doc["kind"];
  const nlohmann::json params = doc.value("params", nlohmann::json::object());
  auto param = [&](const char* name) {
    if (!params.contains(name)) fail(ErrorCode::invalid_sequence, kind + " needs parameter '" + name + "'");
    return rational_param(params[name], name);
  };
  auto optional_param = [&](const char* name, const Rational& fallback) {
    return params.contains(name) ? rational_param(params[name], name) : fallback;
  };

  std::optional<ExponentSequence> seq;
  if (kind == "PowerFloor") {
    seq = power_floor(param("rho"));
  } else if (kind == "LogPower") {
    seq = log_power(param("y"), optional_param("z", 0));
  } else if (kind == "Geometric") {
    seq = geometric(param("x"));
  } else if (kind == "ScaledFactorial") {
    seq = scaled_factorial(param("x"));
  } else if (kind == "WeightedGeometric") {
    const Rational k = param("k");
    if (!is_integer(k) || k < 2 || !k.get_num().fits_ulong_p())
      fail(ErrorCode::invalid_sequence, "WeightedGeometric needs an integer k >= 2");
    seq = weighted_geometric(param("w"), k.get_num().get_ui());
  } else if (kind == "Explicit") {
    if (!params.contains("values") || !params["values"].is_array())
      fail(ErrorCode::invalid_sequence, "Explicit needs an array parameter 'values'");
    std::vector<Integer> values;
    for (const auto& v : params["values"]) {
      const Rational q = rational_param(v, "values");
      if (!is_integer(q)) fail(ErrorCode::invalid_sequence, "Explicit values must be integers");
      values.push_back(q.get_num());
    }
    seq = explicit_list(std::move(values));
  } else {
    fail(ErrorCode::invalid_sequence, "unknown sequence kind '" + kind + "'");
  }
  if (doc.contains("m0")) {
    if (!doc["m0"].is_number_integer()) fail(ErrorCode::invalid_sequence, "m0 must be an integer");
    seq->set_m0(doc["m0"].get<long>());
  }
  if (doc.contains("leading_constant")) {
    if (!doc["leading_constant"].is_boolean())
      fail(ErrorCode::invalid_sequence, "leading_constant must be a boolean");
    seq->set_leading_constant(doc["leading_constant"].get<bool>());
  }
  return *seq;
}

std::string ExponentSequence::to_json() const {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(sequence_kind_name(kind_));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  switch (kind_) {
    case SequenceKind::power_floor: params["rho"] = a_.get_str(); break;
    case SequenceKind::log_power:
      params["y"] = a_.get_str();
      params["z"] = b_.get_str();
      break;
    case SequenceKind::geometric:
    case SequenceKind::scaled_factorial: params["x"] = a_.get_str(); break;
    case SequenceKind::weighted_geometric:
      params["w"] = a_.get_str();
      params["k"] = k_;
      break;
    case SequenceKind::explicit_list: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& v : values_) arr.push_back(v.get_str());
      params["values"] = arr;
      break;
    }
  }
  doc["params"] = params;
  doc["m0"] = m0_;
  doc["leading_constant"] = leading_constant_;
  return doc.dump();
}

std::string ExponentSequence::describe() const {
  switch (kind_) {
    case SequenceKind::power_floor: return "PowerFloor(rho=" + a_.get_str() + ")";
    case SequenceKind::log_power: return "LogPower(y=" + a_.get_str() + ",z=" + b_.get_str() + ")";
    case SequenceKind::geometric: return "Geometric(x=" + a_.get_str() + ")";
    case SequenceKind::scaled_factorial: return "ScaledFactorial(x=" + a_.get_str() + ")";
    case SequenceKind::weighted_geometric:
      return "WeightedGeometric(w=" + a_.get_str() + ",k=" + std::to_string(k_) + ")";
    case SequenceKind::explicit_list: return "Explicit(" + std::to_string(values_.size()) + " values)";
  }
  return "?";
}

Interval phi(const Rational& y, const Rational& z, const Interval& r) {
  const mpfr_prec_t prec = r.precision();
  if (r.is_point() && r.contains(Rational(1)) && z == 0) return Interval(Rational(1), prec);
  if (!r.certainly_greater(Interval(Rational(1), prec)))
    fail(ErrorCode::domain_error, "phi needs R > 1");
  const Interval l = log(r);
  Interval e = pow(l, Interval(1 + y, prec));
  if (z != 0) {
    const Interval ll = log(l);  // DomainError unless R > e
    if (!ll.certainly_positive()) fail(ErrorCode::domain_error, "phi with z != 0 needs R > e");
    e = e * pow(ll, Interval(z, prec));
  }
  return exp(e);
}

Interval psi(const Rational& y, const Interval& r) {
  if (y < 0) fail(ErrorCode::domain_error, "psi needs y >= 0");
  const mpfr_prec_t prec = r.precision();
  if (!r.certainly_greater(Interval(Rational(1), prec))) fail(ErrorCode::domain_error, "psi needs R > 1");
  Rational e = 1 / (1 + y);
  return exp(pow(log(r), Interval(e, prec)));
}

Interval psi(const Rational& y, const Rational& r, mpfr_prec_t prec) { return psi(y, Interval(r, prec)); }

Interval ExponentSequence::value(long m, mpfr_prec_t prec) const {
  if (m < m0_) fail(ErrorCode::invalid_argument, "index " + std::to_string(m) + " below m0");
  switch (kind_) {
    case SequenceKind::power_floor:
      if (m == 0) return Interval(Rational(0), prec);
      return pow(Interval::from_long(m, prec), Interval(a_, prec));
    case SequenceKind::log_power: return phi(a_, b_, Interval::from_long(m, prec));
    case SequenceKind::geometric: return Interval(pow(a_, static_cast<unsigned long>(m)), prec);
    case SequenceKind::scaled_factorial: return Interval(a_ * factorial(m), prec);
    case SequenceKind::weighted_geometric:
      return Interval(a_ * pow(Integer(k_), static_cast<unsigned long>(m)), prec);
    case SequenceKind::explicit_list: {
      const auto i = static_cast<std::size_t>(m - m0_);
      if (i >= values_.size()) fail(ErrorCode::invalid_argument, "index past the explicit list");
      return Interval::from_integer(values_[i], prec);
    }
  }
  return Interval(prec);
}

Integer ExponentSequence::term(long m) const {
  if (m < m0_) fail(ErrorCode::invalid_argument, "index " + std::to_string(m) + " below m0");
  switch (kind_) {
    case SequenceKind::power_floor:
      if (exact_power(a_))
        return root_floor(pow(Integer(m), a_.get_num().get_ui()), a_.get_den().get_ui());
      break;
    case SequenceKind::log_power:
      if (m == 1 && b_ == 0) return 1;  // log 1 = 0
      break;
    case SequenceKind::geometric: return floor_of(pow(a_, static_cast<unsigned long>(m)));
    case SequenceKind::scaled_factorial: return floor_of(a_ * factorial(m));
    case SequenceKind::weighted_geometric: return floor_of(a_ * pow(Integer(k_), static_cast<unsigned long>(m)));
    case SequenceKind::explicit_list: {
      const auto i = static_cast<std::size_t>(m - m0_);
      if (i >= values_.size()) fail(ErrorCode::invalid_argument, "index past the explicit list");
      return values_[i];
    }
  }
  for (unsigned long bits = 64; bits <= max_bits_; bits *= 2) {
    if (auto f = value(m, static_cast<mpfr_prec_t>(bits)).unique_floor()) return *f;
  }
  fail(ErrorCode::floor_tie_unresolvable,
       describe() + " at m=" + std::to_string(m) + ": floor not separated within " + std::to_string(max_bits_) +
           " bits");
}

bool ExponentSequence::value_at_most(long m, const Rational& r) const {
  switch (kind_) {
    case SequenceKind::power_floor:
      if (exact_power(a_)) {
        if (r < 0) return false;
        // m^(p/q) <= r  <=>  m^p <= r^q
        const unsigned long p = a_.get_num().get_ui(), q = a_.get_den().get_ui();
        return Rational(pow(Integer(m), p)) <= pow(r, q);
      }
      break;
    case SequenceKind::log_power:
      if (m == 1 && b_ == 0) return 1 <= r;
      break;
    case SequenceKind::geometric: return pow(a_, static_cast<unsigned long>(m)) <= r;
    case SequenceKind::scaled_factorial: return a_ * factorial(m) <= r;
    case SequenceKind::weighted_geometric: return a_ * pow(Integer(k_), static_cast<unsigned long>(m)) <= r;
    case SequenceKind::explicit_list: return Rational(term(m)) <= r;
  }
  for (unsigned long bits = 64; bits <= max_bits_; bits *= 2) {
    const Interval v = value(m, static_cast<mpfr_prec_t>(bits));
    if (v.upper_q() <= r) return true;
    if (v.lower_q() > r) return false;
  }
  fail(ErrorCode::floor_tie_unresolvable,
       describe() + " at m=" + std::to_string(m) + ": comparison with " + r.get_str() + " undecided");
}

long ExponentSequence::increasing_from() const {
  switch (kind_) {
    case SequenceKind::power_floor:
    case SequenceKind::geometric:
    case SequenceKind::weighted_geometric: return m0_;
    case SequenceKind::scaled_factorial: return std::max(m0_, 1L);
    case SequenceKind::log_power: {
      if (b_ >= 0) return m0_;
      // d/dR log a(R) has the sign of (1+y) log log R + z.
      const double t = std::exp(std::exp(-b_.get_d() / (1 + a_.get_d())));
      return std::max(m0_, static_cast<long>(std::ceil(t)) + 1);
    }
    case SequenceKind::explicit_list: {
      long from = m0_;
      for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] <= values_[i - 1]) from = m0_ + static_cast<long>(i);
      return from;
    }
  }
  return m0_;
}

SupportSet support_up_to(const ExponentSequence& seq, std::uint64_t n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "support horizon must be >= 1");
  std::vector<std::uint64_t> values;
  if (seq.leading_constant()) values.push_back(0);
  const Integer limit(std::to_string(n));
  auto add = [&](const Integer& t) {
    if (t < limit) values.push_back(t.get_ui());
  };
  if (seq.kind() == SequenceKind::explicit_list) {
    for (const auto& v : seq.values()) add(v);
    return SupportSet::from_values(std::move(values), n);
  }
  const long inc = seq.increasing_from();
  const bool transcendental = seq.kind() == SequenceKind::log_power ||
                              (seq.kind() == SequenceKind::power_floor && !exact_power(seq.rho()));
  for (long m = seq.m0();; ++m) {
    if (transcendental) {
      // A cheap enclosure already above N means the term is too; skip the
      // certified floor.
      const Interval v = seq.value(m, 64);
      if (v.lower_q() >= Rational(limit)) {
        if (m >= inc) break;
        continue;
      }
    }
    const Integer t = seq.term(m);
    if (t >= limit && m >= inc) break;
    add(t);
  }
  return SupportSet::from_values(std::move(values), n);
}

std::uint64_t inverse_count(const ExponentSequence& seq, const Rational& r) {
  if (seq.kind() == SequenceKind::explicit_list) {
    std::uint64_t c = 0;
    for (const auto& v : seq.values())
      if (Rational(v) <= r) ++c;
    return c;
  }
  if (seq.kind() == SequenceKind::power_floor && exact_power(seq.rho())) {
    if (r < 0) return 0;
    // Largest m with m^p <= floor(r^q).
    const unsigned long p = seq.rho().get_num().get_ui(), q = seq.rho().get_den().get_ui();
    const Integer c = root_floor(floor_of(pow(r, q)), p);
    const Integer count = c - seq.m0() + 1;
    return count > 0 ? count.get_ui() : 0;
  }
  const long inc = seq.increasing_from();
  std::uint64_t count = 0;
  for (long m = seq.m0();; ++m) {
    if (seq.value_at_most(m, r))
      ++count;
    else if (m >= inc)
      break;
  }
  return count;
}

}  // namespace betaseries
