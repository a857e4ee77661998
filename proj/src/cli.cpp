#include "zflab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "zflab/intervals.hpp"
#include "zflab/oracle.hpp"

namespace zflab::cli {

Caps parse_caps(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("caps must be 'powerset,product'");
  try {
    std::size_t used = 0;
    Caps c;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    c.powerset = std::stoull(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    c.product = std::stoull(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return c;
  } catch (const std::logic_error&) {
    throw InvalidArgument("caps must be 'powerset,product', got '" + text + "'");
  }
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code) {
  RunConfig cfg;
  if (const char* env = std::getenv("ZFLAB_CAPS")) cfg.caps = parse_caps(env);

  CLI::App app{"Finite set-theory workbench for choice-function constructions", "zflab"};
  std::string command;
  std::string kind = std::string(to_string(cfg.kind));
  std::string u2 = std::string(to_string(cfg.variant));
  std::string format = "json";
  std::optional<std::size_t> powerset_cap;
  std::optional<std::uint64_t> product_cap;

  app.add_option("command", command, "verify | enumerate | fuzz | intervals")
      ->required()
      ->check(CLI::IsMember({"verify", "enumerate", "fuzz", "intervals"}));
  app.add_option("--family", cfg.family_path, "family file { \"family\": [<hfs>, ...] }");
  app.add_option("--kind", kind, "order kind")
      ->check(CLI::IsMember({"wellorder", "pol", "unique-universal"}));
  app.add_option("--u2", u2, "where Q_S is separated from")->check(CLI::IsMember({"literal", "union"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--trials", cfg.trials, "fuzz trials");
  app.add_flag("--allow-empty", cfg.allow_empty, "fuzz families may have empty members");
  app.add_option("--out", cfg.out_path, "report path (default stdout)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--powerset-cap", powerset_cap, "largest set whose power set is materialized");
  app.add_option("--product-cap", product_cap, "largest product space enumerated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e);
    return std::nullopt;
  }

  cfg.command = command == "verify"      ? Command::Verify
                : command == "enumerate" ? Command::Enumerate
                : command == "fuzz"      ? Command::Fuzz
                                         : Command::Intervals;
  cfg.kind = parse_order_kind(kind);
  cfg.variant = parse_u2_variant(u2);
  cfg.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
  if (powerset_cap) cfg.caps.powerset = *powerset_cap;
  if (product_cap) cfg.caps.product = *product_cap;
  if ((cfg.command == Command::Verify || cfg.command == Command::Enumerate) &&
      cfg.family_path.empty()) {
    std::cerr << "zflab: " << command << " needs --family\n";
    exit_code = 2;
    return std::nullopt;
  }
  exit_code = 0;
  return cfg;
}

namespace {

class CheckLog {
 public:
  void check(const std::string& name, bool passed, const std::string& context = {}) {
    ++total_;
    if (!passed) {
      Json f{{"check", name}};
      if (!context.empty()) f["context"] = context;
      failures_.push_back(std::move(f));
    }
  }
  void finding(const std::string& text) { findings_.push_back(text); }

  std::size_t total() const { return total_; }
  const Json& failures() const { return failures_; }
  const Json& findings() const { return findings_; }

 private:
  std::size_t total_ = 0;
  Json failures_ = Json::array();
  Json findings_ = Json::array();
};

std::size_t nonempty_members(const Family& f) {
  std::size_t n = 0;
  for (const auto& a : f.members().members()) n += !a.empty();
  return n;
}

// Pipeline plus every cross-check against the oracle and the converse
// construction.
Json check_family(const Family& f, U2Variant v, OrderKind kind, const Caps& caps, CheckLog& log) {
  const std::string ctx = f.members().to_string() + " " + std::string(to_string(v)) + "/" +
                          std::string(to_string(kind));
  const PipelineReport rep = run_pipeline(f, v, kind, caps);
  const auto verdict = oracle::verify_equivalence(f.members(), caps);
  const HfSet f_c = build_Fc(f, v, kind, caps);
  const HfSet truth = oracle::enumerate_choice_functions(f.members(), caps);

  log.check("f_c_all_valid", rep.f_c_all_valid, ctx);
  if (rep.q_s_filter_agrees) log.check("q_s_filter_agrees", *rep.q_s_filter_agrees, ctx);
  if (rep.f_c_routes_agree) log.check("f_c_routes_agree", *rep.f_c_routes_agree, ctx);
  log.check("equivalence_agree", verdict.agree, ctx);
  log.check("f_c_sound", is_subset(f_c, truth), ctx);

  if (v == U2Variant::UnionOfProducts) {
    log.check("f_c_equals_oracle", f_c == truth, ctx);
    log.check("f_c_nonempty_iff_choice", f_c.empty() != verdict.has_choice, ctx);
  } else if (f.size() == 1) {
    log.check("literal_singleton_complete", f_c == truth, ctx);
  } else if (nonempty_members(f) >= 2 && rep.q_s_empty) {
    log.finding("literal U2 gives empty Q_S for " + f.members().to_string());
  }

  bool backward = true;
  for (const auto& g : f_c.members()) {
    const ChoiceFunction cf(g);
    for (const auto& a : f.members().members()) {
      const Relation r = theorem4_order_from_choice(a, cf);
      const auto props = relation_properties(r);
      backward = backward && satisfies(r, OrderKind::PartialOrderWithLeast) && props.least &&
                 *props.least == cf.at(a) && phi3_holds(r, a, cf);
    }
  }
  log.check("choice_orders_are_pols", backward, ctx);

  return Json{{"pipeline", pipeline_to_json(rep)}, {"equivalence", verdict_to_json(verdict)}};
}

Json finish(Json report, const CheckLog& log) {
  report["checks_run"] = log.total();
  report["findings"] = log.findings();
  report["failures"] = log.failures();
  return report;
}

Outcome run_verify(const RunConfig& cfg) {
  const LoadedFamily lf = load_family(cfg.family_path);
  CheckLog log;
  Json report{{"command", "verify"}, {"warnings", lf.warnings}};
  report.update(check_family(lf.family, cfg.variant, cfg.kind, cfg.caps, log));
  return {log.failures().empty() ? 0 : 1, finish(std::move(report), log)};
}

Outcome run_enumerate(const RunConfig& cfg) {
  const LoadedFamily lf = load_family(cfg.family_path);
  const Family& f = lf.family;
  Json orders = Json::array();
  for (const auto& a : f.members().members()) {
    Json rels = Json::array();
    for (const auto& r : enumerate_orders(a, cfg.kind)) rels.push_back(relation_to_json(r));
    orders.push_back(Json{{"member", a.to_string()}, {"relations", rels}});
  }
  auto literals = [](const HfSet& s) {
    Json out = Json::array();
    for (const auto& m : s.members()) out.push_back(m.to_string());
    return out;
  };
  const HfSet q_s = build_QS(f, cfg.variant, cfg.kind, cfg.caps);
  Json report{
      {"command", "enumerate"},
      {"family", f.members().to_string()},
      {"variant", std::string(to_string(cfg.variant))},
      {"kind", std::string(to_string(cfg.kind))},
      {"warnings", lf.warnings},
      {"orders", orders},
      {"q_s", literals(q_s)},
      {"f_c", literals(build_Fc_from_QS(q_s, f))},
      {"choice_functions", literals(oracle::enumerate_choice_functions(f.members(), cfg.caps))},
  };
  return {0, finish(std::move(report), CheckLog{})};
}

Outcome run_fuzz(const RunConfig& cfg) {
  Rng rng(cfg.seed);
  CheckLog log;
  Json families = Json::array();
  std::size_t with_choice = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Family f(random_family(rng, cfg.allow_empty));
    families.push_back(f.members().to_string());
    for (auto v : {U2Variant::UnionOfProducts, U2Variant::Literal}) {
      const Json r = check_family(f, v, cfg.kind, cfg.caps, log);
      if (v == U2Variant::UnionOfProducts) with_choice += r["equivalence"]["has_choice"].get<bool>();
    }
  }
  Json report{
      {"command", "fuzz"},
      {"seed", cfg.seed},
      {"trials", cfg.trials},
      {"allow_empty", cfg.allow_empty},
      {"kind", std::string(to_string(cfg.kind))},
      {"with_choice", with_choice},
      {"without_choice", cfg.trials - with_choice},
      {"families", families},
  };
  return {log.failures().empty() ? 0 : 1, finish(std::move(report), log)};
}

Outcome run_intervals(const RunConfig& cfg) {
  CheckLog log;
  struct Case {
    const char* interval;
    Rational expected;
  };
  const Case cases[] = {{"[1,3]", 2}, {"(-inf,5]", 4}, {"(0,+inf)", 1}, {"(-inf,+inf)", 0}};
  Json values = Json::array();
  for (const auto& c : cases) {
    const Interval i = parse_interval(c.interval);
    const Rational a = choice_value(i);
    values.push_back(Json{{"interval", i.to_string()},
                          {"choice", to_string(a)},
                          {"phi2", phi2_holds(i, a)},
                          {"member", i.contains(a)}});
    log.check("choice_value", a == c.expected, c.interval);
    log.check("phi2_at_choice", phi2_holds(i, a), c.interval);
    log.check("choice_in_interval", i.contains(a), c.interval);
  }

  Rng rng(cfg.seed);
  std::size_t passed = 0;
  const std::size_t instances = 200;
  for (std::size_t k = 0; k < instances; ++k) {
    const Interval i = random_interval(rng);
    const auto rep = sample_check_pol(i, random_sample(i, 8, rng));
    const bool ok = is_pol_with_chosen_least(rep, i);
    passed += ok;
    log.check("sample_pol", ok, i.to_string());
  }

  const Interval hyper[] = {parse_interval("[1,3]"), parse_interval("[0,+inf)")};
  Json point = Json::array();
  for (const auto& x : hyper_choice(std::span<const Interval>(hyper))) point.push_back(to_string(x));

  Json report{
      {"command", "intervals"},
      {"seed", cfg.seed},
      {"choice_values", values},
      {"sample_instances", instances},
      {"sample_passed", passed},
      {"hyper_interval", "[1,3] x [0,+inf)"},
      {"hyper_choice", point},
  };
  return {log.failures().empty() ? 0 : 1, finish(std::move(report), log)};
}

}  // namespace

HfSet random_family(Rng& rng, bool allow_empty) {
  const auto universe = sets_of_rank_at_most(2);
  const auto members = uniform_int(rng, 1, 3);
  std::vector<HfSet> family;
  for (std::int64_t m = 0; m < members; ++m) {
    const auto size = uniform_int(rng, allow_empty ? 0 : 1, 3);
    std::vector<HfSet> elems;
    while (static_cast<std::int64_t>(elems.size()) < size) {
      const HfSet& x = universe[static_cast<std::size_t>(uniform_int(rng, 0, 3))];
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
    }
    family.push_back(make_set(std::move(elems)));
  }
  return make_set(std::move(family));
}

Outcome execute(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::Verify:
        return run_verify(cfg);
      case Command::Enumerate:
        return run_enumerate(cfg);
      case Command::Fuzz:
        return run_fuzz(cfg);
      case Command::Intervals:
        return run_intervals(cfg);
    }
  } catch (const Error& e) {
    return {2, Json{{"error", e.kind()}, {"message", e.what()}}};
  }
  return {2, Json{{"error", "InvalidArgument"}, {"message", "unknown command"}}};
}

int run(int argc, const char* const* argv) {
  int code = 0;
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_command_line(argc, argv, code);
  } catch (const Error& e) {
    std::cerr << "zflab: " << e.what() << "\n";
    return 2;
  }
  if (!cfg) return code;

  const Outcome out = execute(*cfg);
  const std::string text =
      cfg->format == OutputFormat::Text ? render_text(out.report) : out.report.dump(2) + "\n";
  if (out.report.contains("error")) std::cerr << "zflab: " << out.report["message"].get<std::string>() << "\n";
  if (cfg->out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg->out_path, std::ios::binary);
    if (!f) {
      std::cerr << "zflab: cannot write " << cfg->out_path << "\n";
      return 2;
    }
    f << text;
  }
  return out.exit_code;
}

}  // namespace zflab::cli
