#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "betaorbit/dynamics.hpp"
#include "betaorbit/errors.hpp"
#include "betaorbit/mechanical.hpp"
#include "betaorbit/oracle.hpp"
#include "betaorbit/orbit.hpp"
#include "betaorbit/palindromes.hpp"

namespace betaorbit::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Settings {
  long start_digits = PrecisionPolicy{}.start_digits;
  long max_digits = PrecisionPolicy{}.max_digits;
  std::size_t max_depth = kDefaultMaxDepth;
  int prec = 30;
  bool plain = false;
};

class Report {
 public:
  Report(std::ostream& out, const Settings& s) : out_(out), s_(s) {}

  void header() {
    if (s_.plain) {
      out_ << "# betaorbit " << kVersion << " start_digits=" << s_.start_digits
           << " max_digits=" << s_.max_digits << " max_depth=" << s_.max_depth << "\n";
      return;
    }
    json h = {{"tool", "betaorbit"},
              {"version", kVersion},
              {"start_digits", s_.start_digits},
              {"max_digits", s_.max_digits},
              {"max_depth", s_.max_depth}};
    out_ << json{{"header", h}}.dump() << "\n";
  }

  void emit(const json& record) {
    if (!s_.plain) {
      out_ << record.dump() << "\n";
      return;
    }
    for (const auto& [key, value] : record.items()) {
      if (value.is_array()) {
        out_ << key << ":\n";
        for (const auto& item : value) {
          if (item.is_object()) {
            std::string line;
            for (const auto& [k, v] : item.items()) {
              line += (line.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out_ << "  " << line << "\n";
          } else {
            out_ << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
          }
        }
      } else {
        out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  }

 private:
  std::ostream& out_;
  const Settings& s_;
};

json certificate_json(const std::vector<CertificateEntry>& cert) {
  json arr = json::array();
  for (const auto& c : cert) arr.push_back({{"left", c.left}, {"rel", c.relation}, {"right", c.right}});
  return arr;
}

json orbit_json(const OrbitResult& r) {
  return {{"freq", to_string(r.frequency)},
          {"case", std::string(to_string(r.case_tag))},
          {"repr", "exact-rational"},
          {"generator", r.generator.to_string()},
          {"a", r.a},
          {"b", r.b},
          {"certificate", certificate_json(r.certificate)}};
}

json real_json(const std::string& key, const RealValue& v, int prec) {
  return {{key, v.to_string(prec)}, {"decimal", v.to_decimal(prec)}, {"repr", v.repr_tag(prec)}};
}

std::string word_text(const FiniteWord& w) { return w.empty() ? "" : w.to_string(); }

Rational sample_point(const Rational& from, const Rational& to, std::size_t i, std::size_t n) {
  if (n == 1) return from;
  return from + (to - from) * make_rational(static_cast<long>(i), static_cast<long>(n - 1));
}

struct Row {
  std::string arg, value, status;
};

Row staircase_row(bool freq_mode, const Rational& x, const Settings& s) {
  Row row{to_decimal(x, s.prec), "", ""};
  try {
    if (freq_mode) {
      const FreqResult f = freq_of_beta(BetaNumber(RealValue(x)), s.max_depth);
      row.value = to_decimal(f.frequency, s.prec);
      row.status = "exact-rational";
    } else {
      const RealValue d = delta(x);
      row.value = d.to_decimal(s.prec);
      row.status = d.repr_tag(s.prec);
    }
  } catch (const Undetermined& u) {
    const Rational mid = (u.lo() + u.hi()) / 2;
    row.value = to_decimal(mid, s.prec);
    row.status = "enclosure±" + power_of_ten_bound(Rational((u.hi() - u.lo()) / 2));
  } catch (const DomainError&) {
    row.status = "error:domain";
  } catch (const PrecisionExhausted&) {
    row.status = "error:precision";
  }
  return row;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Beta-expansions and invariant orbit closures of the beta-bar transformation",
               "betaorbit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with defaults (start-digits, max-digits, max-depth, prec, plain)");
  app.add_flag("--plain", s.plain, "Human-readable text instead of JSON lines");
  app.add_option("--start-digits", s.start_digits, "Initial working precision in decimal digits");
  app.add_option("--max-digits", s.max_digits, "Precision cap in decimal digits")
      ->envname("BETA_ORBIT_MAX_PREC");
  app.add_option("--max-depth", s.max_depth, "Letters examined by the case analysis");
  app.add_option("--prec", s.prec, "Decimal digits in printed values");

  std::function<json()> action;
  bool streams_rows = false;

  // expand
  std::string beta_spec, x_spec = "1";
  bool greedy = false;
  std::size_t n = 32;
  auto* expand_cmd = app.add_subcommand("expand", "Digits of x in base beta");
  expand_cmd->add_option("--beta", beta_spec, "Base")->required();
  expand_cmd->add_option("--x", x_spec, "Point in [0, 1]");
  auto* bar_flag = expand_cmd->add_flag("--bar", "Bar expansion (default)");
  expand_cmd->add_flag("--greedy", greedy, "Greedy expansion")->excludes(bar_flag);
  expand_cmd->add_option("-n", n, "Number of digits");
  expand_cmd->callback([&] {
    action = [&]() -> json {
      const BetaNumber beta = BetaNumber::parse(beta_spec);
      DigitStream d = expand(parse_real(x_spec), beta, greedy ? ExpansionKind::Greedy : ExpansionKind::Bar);
      json r = {{"digits", word_text(d.prefix(n))}, {"kind", greedy ? "greedy" : "bar"}};
      const auto e = d.resolve_exact(std::max<std::size_t>(n, 256));
      r["epword"] = e ? json(e->to_string()) : json(nullptr);
      return r;
    };
  });

  // freq
  auto* freq_cmd = app.add_subcommand("freq", "Freq(beta) with case and certificate");
  freq_cmd->add_option("--beta", beta_spec, "Base")->required();
  freq_cmd->callback([&] {
    action = [&]() -> json {
      const FreqResult f = freq_of_beta(BetaNumber::parse(beta_spec), s.max_depth);
      if (f.orbit) return orbit_json(*f.orbit);
      return {{"freq", to_string(f.frequency)}, {"case", "integer"}, {"repr", "exact-rational"}};
    };
  });

  // locate
  std::string t_spec;
  auto* locate_cmd = app.add_subcommand("locate", "Invariant orbit closure inside [t, t+1/beta]");
  locate_cmd->add_option("--beta", beta_spec, "Base")->required();
  locate_cmd->add_option("--t", t_spec, "Left end t")->required();
  locate_cmd->callback([&] {
    action = [&]() -> json {
      return orbit_json(locate_orbit(parse_real(t_spec), BetaNumber::parse(beta_spec), s.max_depth));
    };
  });

  // delta
  std::string alpha_spec;
  auto* delta_cmd = app.add_subcommand("delta", "Delta(alpha), the devil's staircase");
  delta_cmd->add_option("--alpha", alpha_spec, "Rational slope p/q >= 0")->required();
  delta_cmd->callback([&] {
    action = [&]() -> json {
      const Rational alpha = parse_rational(alpha_spec);
      json r = {{"alpha", to_string(alpha)}};
      r.update(real_json("delta", delta(alpha), s.prec));
      return r;
    };
  });

  // xi
  std::size_t terms = 200;
  auto* xi_cmd = app.add_subcommand("xi", "Xi(alpha, beta), the top of the orbit closure of slope alpha");
  xi_cmd->add_option("--alpha", alpha_spec, "Slope (rational, or any real SPEC)")->required();
  xi_cmd->add_option("--beta", beta_spec, "Base")->required();
  xi_cmd->add_option("--terms", terms, "Prefix length for irrational slopes");
  xi_cmd->callback([&] {
    action = [&]() -> json {
      const BetaNumber beta = BetaNumber::parse(beta_spec);
      const RealValue alpha = parse_real(alpha_spec);
      json r = {{"alpha", alpha.to_string(s.prec)}};
      if (const Rational* q = alpha.rational()) {
        r.update(real_json("xi", xi(*q, beta), s.prec));
      } else {
        const Interval e = xi_enclosure(alpha, beta, terms);
        r["xi"] = e.to_string(s.prec);
        r["decimal"] = to_decimal(e.mid(), s.prec);
        r["repr"] = "enclosure±" + power_of_ten_bound(Rational(e.width() / 2));
      }
      return r;
    };
  });

  // christoffel
  long cp = 0, cq = 1;
  Letter offset = 0;
  auto* chr_cmd = app.add_subcommand("christoffel", "Lower, upper and central words of slope p/q");
  chr_cmd->add_option("p", cp, "Numerator")->required();
  chr_cmd->add_option("q", cq, "Denominator")->required();
  chr_cmd->add_option("--alphabet", offset, "Smallest letter a of {a, a+1}");
  chr_cmd->callback([&] {
    action = [&]() -> json {
      const Christoffel c = christoffel(cp, cq);
      auto lift = [&](const FiniteWord& w) {
        std::vector<Letter> l = w.letters();
        for (auto& x : l) x += offset;
        return word_text(FiniteWord(std::move(l)));
      };
      return {{"lower", lift(c.lower)}, {"upper", lift(c.upper)}, {"central", lift(c.central)}};
    };
  });

  // mechanical
  std::string rho_spec = "0";
  bool upper = false;
  auto* mech_cmd = app.add_subcommand("mechanical", "Prefix of a mechanical word");
  mech_cmd->add_option("--alpha", alpha_spec, "Slope")->required();
  mech_cmd->add_option("--rho", rho_spec, "Intercept in [0, 1]");
  mech_cmd->add_flag("--upper", upper, "Upper (ceiling) word");
  mech_cmd->add_option("-n", n, "Length");
  mech_cmd->callback([&] {
    action = [&]() -> json {
      const FiniteWord w = mechanical_prefix(MechSpec{parse_real(alpha_spec), parse_real(rho_spec), upper}, n);
      return {{"word", word_text(w)}, {"flavor", upper ? "upper" : "lower"}};
    };
  });

  // pal
  std::string word;
  auto* pal_cmd = app.add_subcommand("pal", "Pal of a directive word, closure and centrality");
  pal_cmd->add_option("word", word, "Word")->required();
  pal_cmd->callback([&] {
    action = [&]() -> json {
      const FiniteWord w = FiniteWord::parse(word);
      json r = {{"word", word_text(w)},
                {"pal", word_text(pal(w))},
                {"closure", word_text(palindromic_closure(w))},
                {"central", is_central(w)}};
      if (is_central(w)) r["directive"] = word_text(directive_word(w));
      return r;
    };
  });

  // central-prefix
  std::string stream_spec;
  std::size_t max_len = 64;
  Letter small = 0;
  auto* cp_cmd = app.add_subcommand("central-prefix", "Longest central prefix of an eventually periodic word");
  cp_cmd->add_option("--stream", stream_spec, "Word as pre|per")->required();
  cp_cmd->add_option("--max-len", max_len, "Length cap");
  cp_cmd->add_option("--a", small, "Smaller letter a of {a, a+1}");
  cp_cmd->callback([&] {
    action = [&]() -> json {
      const CentralPrefix c = longest_central_prefix(DigitStream::from_word(EpWord::parse(stream_spec)),
                                                     small, small + 1, max_len);
      return {{"u", word_text(c.u)}, {"length", c.u.size()}, {"saturated", c.saturated}};
    };
  });

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "Mechanical / Skew / Unbalanced verdict");
  cls_cmd->add_option("word", word, "Word as pre|per")->required();
  cls_cmd->callback([&] {
    action = [&]() -> json {
      const Classification c = classify_balanced(EpWord::parse(word));
      return std::visit(
          [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, verdict::Mechanical>) {
              return {{"verdict", "Mechanical"}, {"slope", to_string(v.slope)},
                      {"representative", v.representative.to_string()}};
            } else if constexpr (std::is_same_v<T, verdict::Skew>) {
              return {{"verdict", "Skew"}, {"slope", to_string(v.slope)}, {"preperiod", v.preperiod_len}};
            } else if constexpr (std::is_same_v<T, verdict::Unbalanced>) {
              return {{"verdict", "Unbalanced"}, {"witness", word_text(v.witness)}};
            } else {
              return {{"verdict", "NotBinary"}, {"low", v.low}, {"high", v.high}};
            }
          },
          c);
    };
  });

  // diam
  std::string xi_spec;
  auto* diam_cmd = app.add_subcommand("diam", "Orbit diameter classification of xi");
  diam_cmd->add_option("--beta", beta_spec, "Base")->required();
  diam_cmd->add_option("--xi", xi_spec, "Point in [0, 1]")->required();
  diam_cmd->callback([&] {
    action = [&]() -> json {
      const BetaNumber beta = BetaNumber::parse(beta_spec);
      const RealValue x = parse_real(xi_spec);
      const DiamReport rep = diam_classify(x, beta, s.max_depth);
      json r = std::visit(
          [&](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, diam::Mechanical>) {
              json j = {{"verdict", "MechanicalDiam"}, {"slope", to_string(v.slope)}};
              j.update(real_json("diam", v.value, s.prec));
              return j;
            } else if constexpr (std::is_same_v<T, diam::Skew>) {
              json j = {{"verdict", "SkewDiam"}, {"slope", to_string(v.slope)}, {"stable_after", v.stable_after}};
              j.update(real_json("diam", v.value, s.prec));
              return j;
            } else if constexpr (std::is_same_v<T, diam::NotSmall>) {
              return {{"verdict", "NotSmall"}, {"reason", v.reason}};
            } else {
              return {{"verdict", "Undecided"}, {"horizon", v.horizon}};
            }
          },
          rep);
      if (auto b = beta.as_integer(); b && x.is_exact()) {
        if (auto e = expand(x, beta, ExpansionKind::Bar).resolve_exact(s.max_depth)) {
          r["expansion"] = e->to_string();
          r["closed_form"] = to_string(rational_xi_reconstruct(*e, *b));
        }
      }
      return r;
    };
  });

  // staircase
  bool st_delta = false, st_freq = false;
  std::string from_spec, to_spec, out_path;
  std::size_t samples = 50;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  auto* st_cmd = app.add_subcommand("staircase", "CSV samples of Delta or Freq");
  auto* d_flag = st_cmd->add_flag("--delta", st_delta, "Sample Delta(alpha)");
  st_cmd->add_flag("--freq", st_freq, "Sample Freq(beta)")->excludes(d_flag);
  st_cmd->add_option("--from", from_spec, "Left end (rational)")->required();
  st_cmd->add_option("--to", to_spec, "Right end (rational)")->required();
  st_cmd->add_option("--samples", samples, "Number of evenly spaced samples")->check(CLI::PositiveNumber);
  st_cmd->add_option("--out", out_path, "CSV file; '-' for standard output")->required();
  st_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  st_cmd->callback([&] {
    streams_rows = true;
    action = [&]() -> json {
      if (st_delta == st_freq) throw CLI::ValidationError("staircase", "give exactly one of --delta, --freq");
      const Rational from = parse_rational(from_spec), to = parse_rational(to_spec);
      std::vector<Row> rows(samples);
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < samples; i = next++) {
          rows[i] = staircase_row(st_freq, sample_point(from, to, i, samples), s);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned j = 1; j < std::min<std::size_t>(jobs, samples); ++j) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
      std::ostringstream csv;
      csv << "arg,value,status\n";
      for (const auto& r : rows) csv << r.arg << "," << r.value << "," << r.status << "\n";
      if (out_path == "-") {
        out << csv.str();
      } else {
        std::ofstream f(out_path);
        if (!f) throw DomainError("cannot write " + out_path);
        f << csv.str();
      }
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.status.rfind("error", 0) == 0;
      return {{"samples", samples}, {"out", out_path}, {"errors", failed}};
    };
  });

  // verify
  std::string suite = "all";
  int verify_status = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run oracle cross-check suites");
  verify_cmd->add_option("--suite", suite, "Suite name or 'all'");
  verify_cmd->callback([&] {
    action = [&]() -> json {
      std::vector<std::string> names = suite == "all" ? oracle::suite_names() : std::vector<std::string>{suite};
      json results = json::array();
      for (const auto& name : names) {
        const oracle::SuiteResult r = oracle::run_suite(name);
        if (!r.passed) verify_status = kExitVerifyFailed;
        results.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      return {{"suites", results}, {"passed", verify_status == 0}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  PrecisionPolicy policy;
  policy.start_digits = s.start_digits;
  policy.max_digits = std::max(s.max_digits, s.start_digits);
  set_default_precision(policy);

  Report report(out, s);
  auto fail = [&](int code, json record) {
    if (!streams_rows || out_path != "-") report.header();
    report.emit(record);
    return code;
  };
  try {
    json record = action();
    if (streams_rows && out_path == "-") return 0;
    report.header();
    report.emit(record);
    return verify_status;
  } catch (const Undetermined& u) {
    return fail(kExitUndetermined, {{"error", "undetermined"},
                                    {"message", u.what()},
                                    {"freq_lo", to_string(u.lo())},
                                    {"freq_hi", to_string(u.hi())},
                                    {"width", to_string(Rational(u.hi() - u.lo()))}});
  } catch (const PrecisionExhausted& e) {
    json r = {{"error", "precision"}, {"message", e.what()}, {"needed_digits", e.needed_digits()}};
    if (e.digit_index()) r["digit_index"] = *e.digit_index();
    return fail(kExitPrecision, r);
  } catch (const CycleCapExceeded& e) {
    return fail(kExitPrecision, {{"error", "cycle-cap"}, {"message", e.what()}});
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return e.get_exit_code();
  } catch (const DomainError& e) {
    return fail(kExitDomain, {{"error", "domain"}, {"message", e.what()}});
  } catch (const std::invalid_argument& e) {
    return fail(kExitDomain, {{"error", "input"}, {"message", e.what()}});
  } catch (const std::domain_error& e) {
    return fail(kExitDomain, {{"error", "domain"}, {"message", e.what()}});
  }
}

}  // namespace betaorbit::cli
