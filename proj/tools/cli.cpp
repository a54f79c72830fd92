#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

#include "betaseries/algebraic_base.hpp"
#include "betaseries/beta_digits.hpp"
#include "betaseries/criteria.hpp"
#include "betaseries/error.hpp"
#include "betaseries/exponent_sequence.hpp"
#include "betaseries/series.hpp"
#include "betaseries/sumset.hpp"

namespace betaseries::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct GridSpec {
  std::uint64_t start = 1000;
  Rational ratio = Rational(5, 4);
  std::uint64_t max = 1000000;

  std::vector<std::uint64_t> points() const {
    auto g = geometric_grid(start, ratio, max);
    if (!g.empty() && g.back() != max) g.push_back(max);
    return g;
  }
};

struct Settings {
  unsigned long max_bits = 16384;
  Format format = Format::text;
  std::string output;
  GridSpec grid;
  double log_max = 1e6;
  unsigned log_points = 61;
};

// Reads "@path" as the contents of a file, anything else verbatim.
std::string inline_or_file(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) fail(ErrorCode::io_error, "cannot read " + arg.substr(1));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GridSpec parse_grid(const std::string& text) {
  // start:ratio:max
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) fail(ErrorCode::parse_error, "grid must look like start:ratio:max, got " + text);
  GridSpec g;
  g.start = parse_integer(text.substr(0, a)).get_ui();
  g.ratio = parse_rational(text.substr(a + 1, b - a - 1));
  g.max = parse_integer(text.substr(b + 1)).get_ui();
  if (g.start == 0 || g.ratio <= 1 || g.max < g.start)
    fail(ErrorCode::invalid_argument, "grid needs start >= 1, ratio > 1 and max >= start");
  return g;
}

void apply_config(Settings& s, const std::string& path) {
  json doc;
  try {
    doc = json::parse(inline_or_file("@" + path));
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, std::string("config is not valid JSON: ") + e.what());
  }
  if (doc.contains("max_bits")) s.max_bits = doc["max_bits"].get<unsigned long>();
  if (doc.contains("format")) {
    const auto f = doc["format"].get<std::string>();
    s.format = f == "json" ? Format::json : f == "csv" ? Format::csv : Format::text;
  }
  if (doc.contains("output")) s.output = doc["output"].get<std::string>();
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    s.grid.start = g.value("start", s.grid.start);
    if (g.contains("ratio")) s.grid.ratio = parse_rational(g["ratio"].get<std::string>());
    s.grid.max = g.value("max", s.grid.max);
  }
  if (doc.contains("log_grid")) {
    const auto& g = doc["log_grid"];
    if (g.contains("max")) s.log_max = parse_rational(g["max"].get<std::string>()).get_d();
    s.log_points = g.value("points", s.log_points);
  }
}

void validate(const Settings& s) {
  if (s.max_bits < 64) fail(ErrorCode::invalid_argument, "precision budget must be at least 64 bits");
  if (s.grid.points().empty() || s.log_points < 4)
    fail(ErrorCode::invalid_argument, "grids must be nonempty (log grid: at least 4 points)");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

json enclosure_json(const RealEnclosure& e) {
  json j;
  j["lower"] = e.lower_decimal();
  j["upper"] = e.upper_decimal();
  j["lower_exact"] = e.lower.get_str();
  j["upper_exact"] = e.upper.get_str();
  return j;
}

void write_report(std::ostream& out, const CriteriaReport& r, Format f) {
  if (f == Format::json) {
    out << r.to_json() << '\n';
    return;
  }
  if (f == Format::csv) {
    out << "criterion,assumption,verdict,detail\n";
    for (const auto& a : r.assumptions)
      out << r.criterion << ',' << csv_escape(a.name) << ',' << verdict_name(a.verdict) << ','
          << csv_escape(a.detail) << '\n';
    return;
  }
  out << r.criterion << '\n';
  for (const auto& a : r.assumptions)
    out << "  " << a.name << ": " << verdict_name(a.verdict) << "\n    " << a.detail << '\n';
}

int report_status(const CriteriaReport& r) { return r.any_indeterminate() ? indeterminate : ok; }

class Runner {
 public:
  Runner() : app_("Exact and certified computations with beta-expansions and lacunary series", "betaseries") {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--format", format_, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app_.add_option("--output", output_, "Write the result to this file instead of stdout");
    app_.add_option("--config", config_, "JSON run configuration (max_bits, format, output, grid, log_grid)");
    app_.add_option("--max-bits", max_bits_, "Precision budget in bits (env BETASERIES_MAX_BITS)");
    app_.add_option("--grid", grid_, "Sample grid start:ratio:max (default 1000:5/4:1000000)");
    register_base();
    register_series();
    register_digits();
    register_sumset();
    register_rho();
    register_yr();
    register_sigma();
    register_check();
    register_fit();
  }

  int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app_.exit(e, err, err);
      CLI::App* sub = &app_;
      for (auto* s : app_.get_subcommands())
        if (s->parsed()) sub = s;
      err << sub->help();
      return usage_error;
    }
    try {
      settle_settings();
      std::ostringstream buffer;
      int status = ok;
      for (const auto& [sub, action] : actions_)
        if (sub->parsed()) {
          status = action(buffer);
          break;
        }
      if (settings_.output.empty()) {
        out << buffer.str();
      } else {
        std::ofstream f(settings_.output, std::ios::binary);
        if (!f) fail(ErrorCode::io_error, "cannot write " + settings_.output);
        f << buffer.str();
      }
      return status;
    } catch (const Error& e) {
      err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
      return e.code() == ErrorCode::tie_undecidable ? indeterminate : precondition_error;
    }
  }

 private:
  using Action = std::function<int(std::ostream&)>;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Action action) {
    CLI::App* sub = parent->add_subcommand(name, help);
    actions_.emplace_back(sub, std::move(action));
    return sub;
  }

  void settle_settings() {
    if (const char* env = std::getenv("BETASERIES_MAX_BITS")) settings_.max_bits = parse_integer(env).get_ui();
    if (!config_.empty()) apply_config(settings_, config_);
    if (max_bits_) settings_.max_bits = *max_bits_;
    if (!format_.empty()) settings_.format = format_ == "json" ? Format::json : format_ == "csv" ? Format::csv : Format::text;
    if (!output_.empty()) settings_.output = output_;
    if (!grid_.empty()) settings_.grid = parse_grid(grid_);
    validate(settings_);
  }

  PrecisionConfig precision() const { return {64, settings_.max_bits}; }
  Format fmt() const { return settings_.format; }

  AlgebraicBase make_base(const std::string& poly) const {
    return AlgebraicBase::create(parse_polynomial(inline_or_file(poly)), precision());
  }

  ExponentSequence make_sequence(const std::string& text) const {
    ExponentSequence s = ExponentSequence::from_json(inline_or_file(text));
    s.set_max_bits(settings_.max_bits);
    return s;
  }

  FieldElement make_element(const AlgebraicBase& base, const std::string& text) const {
    const std::string body = inline_or_file(text);
    if (body.empty() || body[0] != '[') return FieldElement::rational(base, parse_rational(body));
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::exception& e) {
      fail(ErrorCode::parse_error, std::string("element coordinates are not valid JSON: ") + e.what());
    }
    std::vector<Rational> coords;
    for (const auto& c : doc) coords.push_back(parse_rational(c.is_string() ? c.get<std::string>() : c.dump()));
    return FieldElement(base, std::move(coords));
  }

  // Support of a sequence: built once at the requested horizon.
  SeriesSpec make_spec(const ExponentSequence& seq, std::uint64_t horizon) const {
    return SeriesSpec::from_support(support_up_to(seq, horizon));
  }

  void register_base() {
    auto* base = app_.add_subcommand("base", "Algebraic bases");
    base->require_subcommand(1);
    auto* classify = leaf(base, "classify", "Classify a minimal polynomial as Pisot, Salem or Neither",
                          [this](std::ostream& out) {
                            const Polynomial p = parse_polynomial(inline_or_file(poly_));
                            const BaseClass c = classify_base(p, precision());
                            if (fmt() == Format::json) {
                              json j;
                              j["polynomial"] = p.to_string();
                              j["classification"] = base_class_name(c);
                              out << j.dump(2) << '\n';
                            } else if (fmt() == Format::csv) {
                              out << "polynomial,classification\n"
                                  << csv_escape(p.to_string()) << ',' << base_class_name(c) << '\n';
                            } else {
                              out << base_class_name(c) << '\n';
                            }
                            return ok;
                          });
    classify->add_option("--poly", poly_, "Coefficients, constant term first, e.g. [-1,-1,1]")->required();

    auto* enclose = leaf(base, "enclose", "Certified enclosure of beta", [this](std::ostream& out) {
      const AlgebraicBase b = make_base(poly_);
      const RealEnclosure e = embed_real(FieldElement::beta(b), parse_rational(width_));
      if (fmt() == Format::json) {
        json j = enclosure_json(e);
        j["classification"] = base_class_name(b.classification());
        j["floor_beta"] = b.floor_beta().get_str();
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        out << "lower,upper,classification\n"
            << e.lower_decimal() << ',' << e.upper_decimal() << ',' << base_class_name(b.classification()) << '\n';
      } else {
        out << "beta in [" << e.lower_decimal() << ", " << e.upper_decimal() << "] ("
            << base_class_name(b.classification()) << ")\n";
      }
      return ok;
    });
    enclose->add_option("--poly", poly_, "Minimal polynomial")->required();
    enclose->add_option("--width", width_, "Enclosure width (exact decimal or fraction)")->capture_default_str();
  }

  void register_series() {
    auto* series = app_.add_subcommand("series", "Series values at 1/beta");
    series->require_subcommand(1);
    auto* eval = leaf(series, "eval", "Enclose sum t_n beta^-n", [this](std::ostream& out) {
      const ExponentSequence seq = make_sequence(seqs_.at(0));
      const AlgebraicBase b = make_base(poly_);
      const Rational w = parse_rational(width_);
      std::uint64_t h = horizon_ ? *horizon_ : 64;
      SeriesValue v;
      for (;;) {
        SeriesSpec spec = make_spec(seq, h);
        spec.finite = finite_;
        if (c7_) spec.coefficient_bound = *c7_;
        try {
          v = evaluate(spec, b, w);
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::horizon_insufficient || horizon_ || h > (std::uint64_t(1) << 40)) throw;
          h *= 4;
        }
      }
      if (fmt() == Format::json) {
        json j = enclosure_json(v.enclosure);
        j["horizon_used"] = v.horizon_used;
        j["tail_bound"] = v.tail_bound.get_str();
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        out << "lower,upper,horizon_used,tail_bound\n"
            << v.enclosure.lower_decimal() << ',' << v.enclosure.upper_decimal() << ',' << v.horizon_used << ','
            << v.tail_bound.get_str() << '\n';
      } else {
        out << "[" << v.enclosure.lower_decimal() << ", " << v.enclosure.upper_decimal() << "]\n"
            << "horizon " << v.horizon_used << ", tail bound "
            << to_decimal(v.tail_bound, v.enclosure.decimal_digits(), Rounding::up) << '\n';
      }
      return ok;
    });
    eval->add_option("--seq", seqs_, "Exponent sequence JSON (or @file)")->required()->expected(1);
    eval->add_option("--base", poly_, "Minimal polynomial of beta")->required();
    eval->add_option("--width", width_, "Target enclosure width")->capture_default_str();
    eval->add_option("--horizon", horizon_, "Support horizon (default: grown until the tail bound fits)");
    eval->add_option("--c7", c7_, "Coefficient bound (default: largest multiplicity)");
    eval->add_flag("--finite", finite_, "Treat the support as the whole series (no tail)");
  }

  void register_digits() {
    auto* digits = app_.add_subcommand("digits", "Beta and base-b expansions");
    digits->require_subcommand(1);
    auto stream = [this]() {
      if (poly_.empty() == !int_base_)
        fail(ErrorCode::invalid_argument, "give exactly one of --base (polynomial) or --b (integer base)");
      if (int_base_) return base_b_expand(parse_rational(inline_or_file(eta_)), *int_base_, count_);
      return beta_expand(make_element(make_base(poly_), eta_), count_);
    };
    auto* expand = leaf(digits, "expand", "First n digits", [this, stream](std::ostream& out) {
      const DigitStream s = stream();
      if (!bytes_.empty()) {
        const auto bytes = digit_bytes(s);
        std::ofstream f(bytes_, std::ios::binary);
        if (!f) fail(ErrorCode::io_error, "cannot write " + bytes_);
        f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
      }
      if (fmt() == Format::json) {
        json j;
        j["base"] = s.is_beta() ? s.beta->min_poly().to_string() : std::to_string(s.b);
        j["integral_part"] = s.integral_part.get_str();
        j["digits"] = s.digits;
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        write_digits_csv(out, s);
      } else {
        if (!s.is_beta()) out << s.integral_part.get_str() << '.';
        for (std::size_t i = 0; i < s.digits.size(); ++i) out << (s.is_beta() && i ? " " : "") << s.digits[i];
        out << '\n';
      }
      return ok;
    });
    auto* count = leaf(digits, "count", "Nonzero digit count lambda(eta; N)", [this, stream](std::ostream& out) {
      count_ = limit_;
      const DigitStream s = stream();
      const std::uint64_t c = lambda_digits(s, limit_);
      if (fmt() == Format::json) {
        json j;
        j["N"] = limit_;
        j["count"] = c;
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        out << "N,count\n" << limit_ << ',' << c << '\n';
      } else {
        out << c << '\n';
      }
      return ok;
    });
    for (auto* sub : {expand, count}) {
      sub->add_option("--base", poly_, "Minimal polynomial of beta");
      sub->add_option("--b", int_base_, "Integer base b >= 2");
      sub->add_option("--eta", eta_, "Value: rational, or power-basis coordinates [c0,c1,...]")->required();
    }
    expand->add_option("--n", count_, "Number of digits")->required();
    expand->add_option("--bytes", bytes_, "Also write s_1..s_n as raw bytes to this file");
    count->add_option("--N", limit_, "Count limit N")->required();
  }

  std::vector<SumsetOperand> operands(std::vector<SupportSet>& sets, std::uint64_t horizon) const {
    if (!ks_.empty() && ks_.size() != seqs_.size())
      fail(ErrorCode::invalid_argument, "give one --k per --seq");
    for (const auto& s : seqs_) sets.push_back(support_up_to(make_sequence(s), horizon));
    std::vector<SumsetOperand> ops;
    for (std::size_t i = 0; i < sets.size(); ++i) ops.push_back({&sets[i], ks_.empty() ? 1u : ks_[i]});
    return ops;
  }

  void register_sumset() {
    auto* sumset = app_.add_subcommand("sumset", "Minkowski sums of supports");
    sumset->require_subcommand(1);
    auto* fold = leaf(sumset, "fold", "sum_i k_i S(f_i) below the horizon", [this](std::ostream& out) {
      std::vector<SupportSet> sets;
      const auto ops = operands(sets, horizon_.value_or(settings_.grid.max));
      const SupportSet sum = weighted_sum(ops, horizon_.value_or(settings_.grid.max));
      if (!binary_.empty()) {
        std::ofstream f(binary_, std::ios::binary);
        if (!f) fail(ErrorCode::io_error, "cannot write " + binary_);
        write_binary(f, sum);
      }
      if (fmt() == Format::json) {
        json j;
        j["horizon"] = sum.horizon;
        j["size"] = sum.size();
        j["elements"] = sum.elements;
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        write_csv(out, sum);
      } else {
        out << sum.size() << " elements below " << sum.horizon << '\n';
        for (auto e : sum.elements) out << e << '\n';
      }
      return ok;
    });
    auto* gaps = leaf(sumset, "gaps", "Gaps R - theta(R; sumset) on a grid", [this](std::ostream& out) {
      std::vector<std::uint64_t> samples = samples_;
      if (samples.empty()) samples = settings_.grid.points();
      const std::uint64_t horizon = samples.back();
      std::vector<SupportSet> sets;
      const auto ops = operands(sets, horizon);
      const SupportSet sum = weighted_sum(ops, horizon);
      const auto pts = envelope_ ? gap_envelope(sum, samples) : gap_profile(sum, samples);
      if (fmt() == Format::json) {
        json j;
        j["envelope"] = envelope_;
        j["points"] = json::array();
        for (const auto& p : pts) {
          json row;
          row["R"] = p.r;
          if (p.gap) row["gap"] = *p.gap;
          if (p.error) row["error"] = error_code_name(*p.error);
          j["points"].push_back(row);
        }
        out << j.dump(2) << '\n';
      } else {
        out << (fmt() == Format::csv ? "R,gap,error\n" : "");
        for (const auto& p : pts) {
          out << p.r << (fmt() == Format::csv ? "," : " ");
          if (p.gap) out << *p.gap;
          if (fmt() == Format::csv) out << ',';
          if (p.error) out << (fmt() == Format::csv ? "" : "-") << error_code_name(*p.error);
          out << '\n';
        }
      }
      return ok;
    });
    for (auto* sub : {fold, gaps}) {
      sub->add_option("--seq", seqs_, "Exponent sequence JSON (repeatable)")->required();
      sub->add_option("--k", ks_, "Multiplier k_i for each --seq (default 1)");
    }
    fold->add_option("--horizon", horizon_, "Horizon (default: grid max)");
    fold->add_option("--binary", binary_, "Also write the run-length binary format to this file");
    gaps->add_option("--samples", samples_, "Sample points (default: the grid)")->delimiter(',');
    gaps->add_flag("--envelope", envelope_, "Largest gap in each window between samples");
  }

  void register_rho() {
    auto* rho = leaf(&app_, "rho", "Convolution coefficients rho(k; m) for m < horizon", [this](std::ostream& out) {
      const std::uint64_t h = horizon_.value_or(64);
      std::vector<SeriesSpec> specs;
      for (const auto& s : seqs_) specs.push_back(make_spec(make_sequence(s), h));
      const auto k = parse_exponent(k_json_);
      const auto r = rho_coefficients(specs, k, h);
      if (fmt() == Format::json) {
        json j;
        j["k"] = k;
        j["rho"] = json::array();
        for (const auto& x : r) j["rho"].push_back(x.get_str());
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        write_rho_csv(out, r);
      } else {
        for (std::size_t m = 0; m < r.size(); ++m) out << m << ' ' << r[m].get_str() << '\n';
      }
      return ok;
    });
    rho->add_option("--seq", seqs_, "Exponent sequence JSON (repeatable, one per variable)")->required();
    rho->add_option("--k", k_json_, "Exponent vector, e.g. [2] or [1,0]")->required();
    rho->add_option("--horizon", horizon_, "Number of coefficients (default 64)");
  }

  MonomialExponent parse_exponent(const std::string& text) const {
    json doc;
    try {
      doc = json::parse(inline_or_file(text));
    } catch (const json::exception& e) {
      fail(ErrorCode::parse_error, std::string("exponent vector is not valid JSON: ") + e.what());
    }
    MonomialExponent k;
    for (const auto& e : doc) {
      if (!e.is_number_unsigned()) fail(ErrorCode::parse_error, "exponents must be nonnegative integers");
      k.push_back(e.get<unsigned>());
    }
    return k;
  }

  // Grows the support horizon until the Y_R machinery has what it needs.
  template <typename F>
  auto with_growing_specs(const std::vector<ExponentSequence>& seqs, F&& f) const {
    std::uint64_t h = horizon_.value_or(4096);
    for (;;) {
      std::vector<SeriesSpec> specs;
      for (const auto& s : seqs) specs.push_back(make_spec(s, h));
      try {
        return f(specs);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::horizon_insufficient || horizon_ || h > (std::uint64_t(1) << 30)) throw;
        h *= 4;
      }
    }
  }

  void register_yr() {
    auto* yr = app_.add_subcommand("yr", "Tail sums Y_R of a relation polynomial");
    yr->require_subcommand(1);
    auto setup = [this]() {
      std::vector<ExponentSequence> seqs;
      for (const auto& s : seqs_) seqs.push_back(make_sequence(s));
      return seqs;
    };
    auto* sweep = leaf(yr, "sweep", "y_N = #{R < N : Y_R >= 1/beta}", [this, setup](std::ostream& out) {
      const AlgebraicBase b = make_base(poly_);
      const RelationPolynomial p = parse_relation(inline_or_file(relation_), b);
      const YCount c = with_growing_specs(setup(), [&](const std::vector<SeriesSpec>& specs) {
        return y_n_count(specs, p, count_, b);
      });
      if (fmt() == Format::json) {
        json j;
        j["N"] = count_;
        j["count"] = c.count;
        j["indeterminate"] = c.indeterminate;
        j["rows"] = json::array();
        for (const auto& row : c.rows) {
          json r = enclosure_json(row.value);
          r["R"] = row.r;
          r["verdict"] = verdict_name(row.verdict);
          j["rows"].push_back(r);
        }
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        write_sweep_csv(out, c);
      } else {
        out << "y_" << count_ << " = " << c.count;
        if (!c.indeterminate.empty()) out << " (" << c.indeterminate.size() << " indeterminate)";
        out << '\n';
        for (const auto& row : c.rows)
          out << "  R=" << row.r << " [" << row.value.lower_decimal() << ", " << row.value.upper_decimal() << "] "
              << verdict_name(row.verdict) << '\n';
      }
      return c.indeterminate.empty() ? ok : indeterminate;
    });
    sweep->add_option("--n", count_, "N")->required();

    auto* value = leaf(yr, "value", "Enclosure of Y_R", [this, setup](std::ostream& out) {
      const AlgebraicBase b = make_base(poly_);
      const RelationPolynomial p = parse_relation(inline_or_file(relation_), b);
      const Rational w = parse_rational(width_);
      const RealEnclosure e = with_growing_specs(setup(), [&](const std::vector<SeriesSpec>& specs) {
        return residual_ ? y_r_recurrence_check(specs, p, b, r_, w) : y_r_value(specs, p, b, r_, w);
      });
      if (fmt() == Format::json) {
        json j = enclosure_json(e);
        j["R"] = r_;
        j["quantity"] = residual_ ? "recurrence_residual" : "Y_R";
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        out << "R,lower,upper\n" << r_ << ',' << e.lower_decimal() << ',' << e.upper_decimal() << '\n';
      } else {
        out << (residual_ ? "residual" : "Y") << "_" << r_ << " in [" << e.lower_decimal() << ", "
            << e.upper_decimal() << "]\n";
      }
      return ok;
    });
    value->add_option("--r", r_, "R")->required();
    value->add_option("--width", width_, "Target width")->capture_default_str();
    value->add_flag("--residual", residual_, "Report beta Y_(R-1) - sum A_k rho(k;R) - Y_R instead");
    for (auto* sub : {sweep, value}) {
      sub->add_option("--seq", seqs_, "Exponent sequence JSON, one per variable")->required();
      sub->add_option("--relation", relation_, R"(Relation polynomial {"terms":[{"k":[..],"A":[..]}]})")
          ->required();
      sub->add_option("--base", poly_, "Minimal polynomial of beta")->required();
      sub->add_option("--horizon", horizon_, "Support horizon (default: grown as needed)");
    }
  }

  void register_sigma() {
    auto* sigma = leaf(&app_, "sigma", "Zero sigma_k of G_k(X) = (1-X)^k + (k-1)X - 1 in (0,1)",
                       [this](std::ostream& out) {
                         Integer scale;
                         mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits_ + 2);
                         const RealEnclosure s = sigma_k(k_, Rational(Integer(1), scale));
                         const RealEnclosure inv{1 / s.upper, 1 / s.lower};
                         const unsigned d = digits_ + 2;
                         auto lo = [d](const Rational& q) { return to_decimal(q, d, Rounding::down); };
                         auto hi = [d](const Rational& q) { return to_decimal(q, d, Rounding::up); };
                         if (fmt() == Format::json) {
                           json j;
                           j["k"] = k_;
                           j["lower"] = lo(s.lower);
                           j["upper"] = hi(s.upper);
                           j["reciprocal_lower"] = lo(inv.lower);
                           j["reciprocal_upper"] = hi(inv.upper);
                           out << j.dump(2) << '\n';
                         } else if (fmt() == Format::csv) {
                           out << "k,lower,upper,reciprocal_lower,reciprocal_upper\n"
                               << k_ << ',' << lo(s.lower) << ',' << hi(s.upper) << ',' << lo(inv.lower) << ','
                               << hi(inv.upper) << '\n';
                         } else {
                           out << "sigma_" << k_ << " in [" << lo(s.lower) << ", " << hi(s.upper) << "]\n"
                               << "1/sigma_" << k_ << " in [" << lo(inv.lower) << ", " << hi(inv.upper) << "]\n";
                         }
                         return ok;
                       });
    sigma->add_option("--k", k_, "k >= 3")->required();
    sigma->add_option("--digits", digits_, "Decimal digits")->capture_default_str();
  }

  void register_check() {
    auto* check = app_.add_subcommand("check", "Empirical checks of criterion hypotheses");
    check->require_subcommand(1);

    auto* cri1 = leaf(check, "cri1", "Assumptions 1-4 of the linear independence criterion",
                      [this](std::ostream& out) {
                        std::vector<ExponentSequence> gens;
                        for (const auto& s : seqs_) gens.push_back(make_sequence(s));
                        Cri1Options o;
                        o.grid = settings_.grid.points();
                        if (!delta_.empty()) o.delta = parse_rational(delta_);
                        if (!eps_.empty()) o.epsilon = parse_rational(eps_);
                        o.k_cap = k_cap_;
                        o.c7 = c7_;
                        o.trend.factor = parse_rational(factor_).get_d();
                        const CriteriaReport r = check_cri1(gens, a_, o);
                        write_report(out, r, fmt());
                        return report_status(r);
                      });
    cri1->add_option("--seq", seqs_, "Exponent sequence JSON for f_1, ..., f_r")->required();
    cri1->add_option("--A", a_, "A >= 1")->required();
    cri1->add_option("--delta", delta_, "delta (default 1/(10A))");
    cri1->add_option("--eps", eps_, "epsilon for the domination test (default 1/2)");
    cri1->add_option("--k-cap", k_cap_, "Largest k_i tried")->capture_default_str();
    cri1->add_option("--c7", c7_, "Declared coefficient bound");
    cri1->add_option("--factor", factor_, "Trend factor")->capture_default_str();

    auto* cri2 = leaf(check, "cri2", "Assumptions of the algebraic independence criterion",
                      [this](std::ostream& out) {
                        const ExponentSequence a = make_sequence(a_seq_), u = make_sequence(u_seq_);
                        Cri2Options o;
                        o.log_grid = default_cri2_grid(a, u, settings_.log_max, settings_.log_points);
                        if (!eps_.empty()) o.epsilon = parse_rational(eps_);
                        o.trend.factor = parse_rational(factor_).get_d();
                        const CriteriaReport r = check_cri2(a, u, o);
                        write_report(out, r, fmt());
                        return report_status(r);
                      });
    cri2->add_option("--a", a_seq_, "Sequence a (the slower function)")->required();
    cri2->add_option("--u", u_seq_, "Sequence u")->required();
    cri2->add_option("--eps", eps_, "epsilon for the derivative bound (default 1/2)");
    cri2->add_option("--factor", factor_, "Trend factor")->capture_default_str();
    cri2->add_option_function<std::string>(
        "--log-max", [this](const std::string& v) { settings_.log_max = parse_rational(v).get_d(); },
        "Largest log R sampled (default 1e6)");
    cri2->add_option("--points", settings_.log_points, "Number of log-grid points")->capture_default_str();

    auto* tra1 = leaf(check, "tra1", "lambda(S(f); R) < R^(1/A - delta) for infinitely many R",
                      [this](std::ostream& out) {
                        Tra1Options o;
                        o.grid = settings_.grid.points();
                        const CriteriaReport r =
                            check_tra1(make_sequence(seqs_.at(0)), a_, parse_rational(delta_), o);
                        write_report(out, r, fmt());
                        return report_status(r);
                      });
    tra1->add_option("--seq", seqs_, "Exponent sequence JSON")->required()->expected(1);
    tra1->add_option("--A", a_, "A >= 1")->required();
    tra1->add_option("--delta", delta_, "delta")->required();

    auto* admissible = leaf(check, "admissible", "rho > A (A <= 3) or rho > 1/sigma_A (A >= 4)",
                            [this](std::ostream& out) {
                              const bool v = check_admissible(a_, parse_rational(rho_));
                              if (fmt() == Format::json) {
                                json j;
                                j["A"] = a_;
                                j["rho"] = rho_;
                                j["admissible"] = v;
                                out << j.dump(2) << '\n';
                              } else if (fmt() == Format::csv) {
                                out << "A,rho,admissible\n" << a_ << ',' << rho_ << ',' << (v ? "true" : "false") << '\n';
                              } else {
                                out << (v ? "true" : "false") << '\n';
                              }
                              return ok;
                            });
    admissible->add_option("--A", a_, "A >= 1")->required();
    admissible->add_option("--rho", rho_, "rho (exact decimal or fraction)")->required();

    auto* mai4 = leaf(check, "mai4", "Sign of G_A((1/2 + eps)^-1 A^-2)", [this](std::ostream& out) {
      const int s = check_mai4_sign(parse_rational(eps_.empty() ? "1/10" : eps_), a_);
      const char* name = s < 0 ? "negative" : s > 0 ? "positive" : "zero";
      if (fmt() == Format::json) {
        json j;
        j["A"] = a_;
        j["sign"] = s;
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        out << "A,sign\n" << a_ << ',' << s << '\n';
      } else {
        out << name << '\n';
      }
      return ok;
    });
    mai4->add_option("--A", a_, "A >= 3")->required();
    mai4->add_option("--eps", eps_, "eps > 0 (default 1/10)");
  }

  void register_fit() {
    auto* fit = app_.add_subcommand("fit", "Growth exponent fits");
    fit->require_subcommand(1);
    auto* exponent = leaf(fit, "exponent", "Least squares slope of log value against log R", [this](std::ostream& out) {
      std::vector<std::pair<double, double>> samples;
      auto add = [&](const std::string& r, const std::string& v) {
        samples.emplace_back(parse_rational(r).get_d(), parse_rational(v).get_d());
      };
      if (!input_.empty()) {
        std::istringstream in(inline_or_file("@" + input_));
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          const auto comma = line.find(',');
          if (comma == std::string::npos) fail(ErrorCode::parse_error, "expected R,value rows");
          const std::string r = line.substr(0, comma), v = line.substr(comma + 1);
          if (first && !r.empty() && !std::isdigit(static_cast<unsigned char>(r[0]))) {
            first = false;
            continue;  // header
          }
          first = false;
          add(r, v);
        }
      }
      for (const auto& s : sample_pairs_) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) fail(ErrorCode::parse_error, "samples look like R:value");
        add(s.substr(0, colon), s.substr(colon + 1));
      }
      const GrowthFit f = fit_growth_exponent(samples);
      if (fmt() == Format::json) {
        json j;
        j["samples"] = samples.size();
        j["slope"] = f.slope;
        j["intercept"] = f.intercept;
        j["residual"] = f.residual;
        out << j.dump(2) << '\n';
      } else if (fmt() == Format::csv) {
        out << "slope,intercept,residual\n" << f.slope << ',' << f.intercept << ',' << f.residual << '\n';
      } else {
        out << "slope " << f.slope << ", intercept " << f.intercept << ", residual " << f.residual << '\n';
      }
      return ok;
    });
    exponent->add_option("--input", input_, "CSV file with R,value rows");
    exponent->add_option("--samples", sample_pairs_, "Samples R:value")->delimiter(',');
  }

  CLI::App app_;
  std::vector<std::pair<CLI::App*, Action>> actions_;
  Settings settings_;

  std::string format_, output_, config_, grid_;
  std::optional<unsigned long> max_bits_;

  std::string poly_, width_ = "1e-30", eta_, bytes_, binary_, relation_, k_json_, delta_, eps_, factor_ = "10", rho_;
  std::string a_seq_, u_seq_, input_;
  std::vector<std::string> seqs_, sample_pairs_;
  std::vector<unsigned> ks_;
  std::vector<std::uint64_t> samples_;
  std::optional<std::uint64_t> horizon_;
  std::optional<std::uint32_t> c7_;
  std::optional<std::uint64_t> int_base_;
  std::uint64_t count_ = 0, limit_ = 0, r_ = 0;
  unsigned k_ = 3, digits_ = 6, a_ = 1, k_cap_ = 1;
  bool finite_ = false, envelope_ = false, residual_ = false;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Runner runner;
  return runner.run(argc, argv, out, err);
}

}  // namespace betaseries::cli
