#include "betaseries/algebraic_base.hpp"

#include <json.hpp>

#include "betaseries/error.hpp"
#include "betaseries/factor.hpp"

namespace betaseries {

std::string_view base_class_name(BaseClass c) {
  switch (c) {
    case BaseClass::pisot: return "Pisot";
    case BaseClass::salem: return "Salem";
    case BaseClass::neither: return "Neither";
  }
  return "Neither";
}

Polynomial parse_polynomial(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("polynomial is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    fail(ErrorCode::parse_error, "polynomial must be a non-empty JSON array of integers");
  std::vector<Integer> coeffs;
  for (const auto& c : doc) {
    if (c.is_number_integer())
      coeffs.push_back(parse_integer(c.dump()));
    else if (c.is_string())
      coeffs.push_back(parse_integer(c.get<std::string>()));
    else
      fail(ErrorCode::parse_error, "polynomial coefficient is not an integer: " + c.dump());
  }
  return Polynomial(std::move(coeffs));
}

void validate_base_polynomial(const Polynomial& p) {
  if (p.degree() < 1) fail(ErrorCode::invalid_polynomial, "minimal polynomial must have degree >= 1");
  if (!p.is_monic()) fail(ErrorCode::not_monic, "minimal polynomial " + p.to_string() + " is not monic");
  if (auto factor = find_factor(p))
    fail(ErrorCode::reducible,
         "polynomial " + p.to_string() + " is reducible (factor " + factor->to_string() + ")");
}

namespace {

// f(z) = z^n g(z + 1/z) for a palindromic f of degree 2n.
Polynomial trace_polynomial(const Polynomial& f) {
  const int n = f.degree() / 2;
  // T_k(t) = z^k + z^-k as polynomials in t = z + 1/z.
  std::vector<Polynomial> t;
  t.emplace_back(std::vector<Integer>{2});
  t.emplace_back(std::vector<Integer>{0, 1});
  const Polynomial x(std::vector<Integer>{0, 1});
  for (int k = 2; k <= n; ++k) t.push_back(x * t[static_cast<std::size_t>(k - 1)] - t[static_cast<std::size_t>(k - 2)]);
  std::vector<Integer> g(static_cast<std::size_t>(n) + 1, Integer(0));
  g[0] = f.coeff(n);
  for (int k = 1; k <= n; ++k) {
    const auto& tk = t[static_cast<std::size_t>(k)];
    for (int i = 0; i <= tk.degree(); ++i) g[static_cast<std::size_t>(i)] += f.coeff(n + k) * tk.coeff(i);
  }
  return Polynomial(std::move(g));
}

BaseClass salem_test(const Polynomial& f) {
  const Polynomial g = trace_polynomial(f);
  const int n = g.degree();
  const SturmSequence s(g);
  // g(+-2) != 0 because f(+-1) != 0 for irreducible f of degree >= 2.
  const int above = s.count_roots_above(2);
  const int inside = s.count_roots(-2, 2);
  if (above == 1 && inside == n - 1) return BaseClass::salem;
  return BaseClass::neither;
}

BaseClass disk_test(const Polynomial& p, const PrecisionConfig& config) {
  const int d = p.degree();
  for (unsigned long bits = config.start_bits; bits <= config.max_bits; bits *= 2) {
    const auto disks = isolate_complex_roots(p, bits, config.max_bits);
    int inside = 0, outside = 0;
    for (const auto& disk : disks) {
      if (modulus_upper(disk, bits) < 1)
        ++inside;
      else if (modulus_lower(disk, bits) > 1)
        ++outside;
    }
    if (outside >= 2) return BaseClass::neither;
    if (inside == d - 1 && outside == 1) return BaseClass::pisot;
  }
  fail(ErrorCode::precision_budget_exceeded,
       "could not separate the conjugates of " + p.to_string() + " from the unit circle");
}

// Bisection step count is a deterministic function of the start interval.
RealEnclosure bisect(const Polynomial& p, RealEnclosure e, const Rational& target_width) {
  const int sign_hi = p.sign_at(e.upper);
  while (e.width() > target_width) {
    const Rational mid = (e.lower + e.upper) / 2;
    const int s = p.sign_at(mid);
    if (s == 0) return RealEnclosure::point(mid);
    if (s == sign_hi)
      e.upper = mid;
    else
      e.lower = mid;
  }
  return e;
}

}  // namespace

BaseClass classify_base(const Polynomial& p, const PrecisionConfig& config) {
  validate_base_polynomial(p);
  if (p.degree() == 1) {
    if (-p.coeff(0) > 1) return BaseClass::pisot;
    fail(ErrorCode::no_root_above_one, "root " + Integer(-p.coeff(0)).get_str() + " is not above 1");
  }
  const SturmSequence s(p);
  const int above = s.count_roots_above(1);
  if (above == 0) fail(ErrorCode::no_root_above_one, p.to_string() + " has no real root above 1");
  if (above >= 2) return BaseClass::neither;
  if (p.is_palindromic() && p.degree() >= 4) return salem_test(p);
  return disk_test(p, config);
}

AlgebraicBase AlgebraicBase::create(const Polynomial& min_poly, const PrecisionConfig& config) {
  if (config.start_bits < 1 || config.max_bits < config.start_bits)
    fail(ErrorCode::invalid_argument, "precision schedule needs 1 <= start_bits <= max_bits");
  const BaseClass cls = classify_base(min_poly, config);
  if (cls == BaseClass::neither)
    fail(ErrorCode::invalid_polynomial, min_poly.to_string() + " is neither Pisot nor Salem");
  auto data = std::make_shared<Data>();
  data->poly = min_poly;
  data->cls = cls;
  data->config = config;
  if (min_poly.degree() == 1) {
    const Rational beta(-min_poly.coeff(0));
    data->isolating = RealEnclosure::point(beta);
    data->beta_disk = {{beta, 0}, 0};
    return AlgebraicBase(std::move(data));
  }
  data->isolating = {Rational(1), cauchy_bound(min_poly)};
  auto disks = isolate_complex_roots(min_poly, config.start_bits, config.max_bits);
  std::size_t best = 0;
  for (std::size_t i = 1; i < disks.size(); ++i)
    if (norm_squared(disks[i].center) > norm_squared(disks[best].center)) best = i;
  data->beta_disk = disks[best];
  disks.erase(disks.begin() + static_cast<long>(best));
  data->conjugates = std::move(disks);
  return AlgebraicBase(std::move(data));
}

RealEnclosure AlgebraicBase::beta_enclosure(unsigned long bits) const {
  if (data_->isolating.is_point()) return data_->isolating;
  unsigned long level = data_->config.start_bits;
  while (level < bits) level *= 2;
  if (level > data_->config.max_bits)
    fail(ErrorCode::precision_budget_exceeded,
         "requested " + std::to_string(bits) + " bits, budget is " + std::to_string(data_->config.max_bits));
  std::lock_guard lock(data_->mutex);
  auto& cache = data_->cache;
  if (auto it = cache.find(level); it != cache.end()) return it->second;
  // Continue the bisection from the finest cached level below this one.
  RealEnclosure start = data_->isolating;
  if (auto it = cache.lower_bound(level); it != cache.begin()) start = std::prev(it)->second;
  RealEnclosure e = bisect(data_->poly, start, dyadic_unit(level));
  cache.emplace(level, e);
  return e;
}

Integer AlgebraicBase::floor_beta() const {
  if (data_->isolating.is_point()) return floor_of(data_->isolating.lower);
  for (unsigned long bits = data_->config.start_bits; bits <= data_->config.max_bits; bits *= 2) {
    const auto e = beta_enclosure(bits);
    if (floor_of(e.lower) == floor_of(e.upper)) return floor_of(e.lower);
  }
  fail(ErrorCode::precision_budget_exceeded, "could not decide floor(beta)");
}

}  // namespace betaseries
