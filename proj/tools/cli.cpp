#include "cli.hpp"

#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pomkit/pomkit.hpp"

namespace pomkit::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string expr;
  std::string pa;
  std::string cfg;
  std::string state;
  std::string pomset;
  std::size_t bound = 5;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t budget = Limits{}.max_pomsets;
  std::size_t max_states = Limits{}.max_states;

  Limits limits() const { return {budget, max_states}; }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required ") + flag);
  return value;
}

json expr_json(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Zero: return {{"kind", "zero"}};
    case Expr::Kind::One: return {{"kind", "one"}};
    case Expr::Kind::Lit: return {{"kind", "lit"}, {"letter", e.letter().name()}};
    case Expr::Kind::Star: return {{"kind", "star"}, {"body", expr_json(e.body())}};
    case Expr::Kind::Dagger: return {{"kind", "dagger"}, {"body", expr_json(e.body())}};
    case Expr::Kind::Plus:
    case Expr::Kind::Dot:
    case Expr::Kind::Par: {
      const char* k = e.kind() == Expr::Kind::Plus ? "plus" : e.kind() == Expr::Kind::Dot ? "dot" : "par";
      return {{"kind", k}, {"left", expr_json(e.left())}, {"right", expr_json(e.right())}};
    }
  }
  return {};
}

void print_pomsets(const PomsetSet& set, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& u : set) arr.push_back(to_string(u));
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& u : set) out << to_string(u) << "\n";
}

void print_automaton(const PomsetAutomaton& a, std::optional<State> start, const Options& o,
                     std::ostream& out) {
  if (o.format == "json") {
    out << to_json(a, start) << "\n";
  } else if (o.format == "dot") {
    out << to_dot(a, start);
  } else {
    if (start) out << "start " << a.name(*start) << "\n";
    for (State q : a.states()) {
      out << "state " << a.name(q);
      if (q == a.bottom()) out << " bottom";
      if (q == a.top()) out << " top";
      if (a.accepting(q)) out << " accepting";
      out << "\n";
    }
    for (State q : a.states()) {
      for (const auto& [letter, t] : a.delta_row(q)) {
        out << "delta " << a.name(q) << " " << letter.name() << " " << a.name(t) << "\n";
      }
      for (const auto& [rs, t] : a.gamma_row(q)) {
        out << "gamma " << a.name(q) << " " << a.name(rs.first) << " " << a.name(rs.second) << " "
            << a.name(t) << "\n";
      }
    }
  }
}

struct Loaded {
  PomsetAutomaton automaton;
  State start;
};

// The automaton named by --pa (at --state), or the one explored from --expr.
Loaded automaton_input(const Options& o) {
  if (!o.pa.empty()) {
    PomsetAutomaton a = load_automaton(o.pa);
    State q = o.state.empty() ? a.bottom() : a.state(o.state);
    return {std::move(a), q};
  }
  if (!o.expr.empty()) {
    Exploration x = explore(parse_expr(o.expr), o.limits());
    State q = o.state.empty() ? x.start : x.automaton.state(o.state);
    return {std::move(x.automaton), q};
  }
  throw UsageError("one of --pa or --expr is required");
}

Loaded automaton_with_state(const Options& o) {
  if (!o.pa.empty()) need(o.state, "--state");
  return automaton_input(o);
}

void cmd_parse(const Options& o, std::ostream& out) {
  Expr e = parse_expr(need(o.expr, "--expr"));
  if (o.format == "json") {
    json j = {{"expr", to_string(e)},
              {"ast", expr_json(e)},
              {"class", to_string(canonical_class(e))},
              {"nullable", nullable(e)},
              {"d_par", depth_measures(e).d_par},
              {"d_dagger", depth_measures(e).d_dagger}};
    out << j.dump(2) << "\n";
    return;
  }
  out << to_string(e) << "\n";
}

void cmd_semantics(const Options& o, std::ostream& out) {
  if (!o.pa.empty()) {
    auto in = automaton_with_state(o);
    print_pomsets(language_bounded(in.automaton, in.start, o.bound, o.limits()), o, out);
    return;
  }
  Expr e = parse_expr(need(o.expr, "--expr"));
  print_pomsets(semantics_bounded(e, o.bound, o.limits()), o, out);
}

void cmd_derive(const Options& o, std::ostream& out) {
  Expr e = parse_expr(need(o.expr, "--expr"));
  ExprClass c = canonical_class(e);
  json deltas = json::object();
  for (const auto& a : letters(e)) deltas[a.name()] = to_string(delta_sigma(c, a));
  json forks = json::array();
  for (const auto& [g, h] : fork_candidates(c)) {
    forks.push_back({to_string(g), to_string(h), to_string(gamma_sigma(c, g, h))});
  }
  if (o.format == "json") {
    json j = {{"class", to_string(c)}, {"nullable", nullable(e)}, {"delta", deltas},
              {"gamma", forks}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "class " << to_string(c) << "\n";
  out << "nullable " << (nullable(e) ? "true" : "false") << "\n";
  for (const auto& [a, d] : deltas.items()) out << "delta " << a << " " << d.get<std::string>() << "\n";
  for (const auto& f : forks) {
    out << "gamma " << f[0].get<std::string>() << " " << f[1].get<std::string>() << " "
        << f[2].get<std::string>() << "\n";
  }
}

void cmd_explore(const Options& o, std::ostream& out) {
  Exploration x = explore(parse_expr(need(o.expr, "--expr")), o.limits());
  print_automaton(x.automaton, x.start, o, out);
}

void cmd_classify(const Options& o, std::ostream& out) {
  auto in = automaton_input(o);
  const auto& a = in.automaton;
  StateClassification c = classify_states(a);
  if (o.format == "json") {
    json states = json::array();
    for (State q : a.states()) {
      states.push_back({{"state", a.name(q)},
                        {"kind", std::string(to_string(c.kinds[q.index()]))},
                        {"reasons", c.reasons[q.index()]}});
    }
    out << json{{"states", states}, {"well_nested", c.well_nested()}}.dump(2) << "\n";
    return;
  }
  for (State q : a.states()) {
    out << a.name(q) << ": " << to_string(c.kinds[q.index()]) << "\n";
    for (const auto& r : c.reasons[q.index()]) out << "  - " << r << "\n";
  }
  out << "well-nested: " << (c.well_nested() ? "true" : "false") << "\n";
}

void cmd_pa_to_expr(const Options& o, std::ostream& out) {
  auto in = automaton_with_state(o);
  out << to_string(pa_to_expr(in.automaton, in.start)) << "\n";
}

void cmd_member(const Options& o, std::ostream& out) {
  Pomset u = parse_pomset(need(o.pomset, "--pomset"));
  auto in = automaton_with_state(o);
  out << (accepts(in.automaton, in.start, u) ? "true" : "false") << "\n";
}

void cmd_pa_to_cfg(const Options& o, std::ostream& out) {
  auto in = automaton_with_state(o);
  PomsetCFG g = pa_to_cfg(in.automaton, in.start);
  out << (o.format == "json" ? to_json(g) + "\n" : to_text(g));
}

void cmd_cfg_to_pa(const Options& o, std::ostream& out) {
  GrammarAutomaton ga = cfg_to_pa(load_cfg(need(o.cfg, "--cfg")));
  print_automaton(ga.automaton, ga.start, o, out);
}

void cmd_generate(const Options& o, std::ostream& out) {
  print_pomsets(generate_bounded(load_cfg(need(o.cfg, "--cfg")), o.bound, o.limits()), o, out);
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  Expr e;
  if (o.expr.empty()) {
    std::mt19937_64 rng(o.seed);
    const std::vector<Letter> ab{Letter("a"), Letter("b")};
    e = random_expr(rng, 1 + static_cast<std::size_t>(rng() % 8), ab);
    out << "seed " << o.seed << "\n" << "expr " << to_string(e) << "\n";
  } else {
    e = parse_expr(o.expr);
  }
  Exploration x = explore(e, o.limits());
  Expr back = pa_to_expr(x.automaton, x.start);
  PomsetSet want = semantics_bounded(e, o.bound, o.limits());
  PomsetSet got = semantics_bounded(back, o.bound, o.limits());
  std::optional<std::pair<Pomset, bool>> diff;
  for (const auto& u : want) {
    if (!got.contains(u)) {
      diff = {u, true};
      break;
    }
  }
  for (const auto& u : got) {
    if (diff) break;
    if (!want.contains(u)) diff = {u, false};
  }
  if (o.format == "json") {
    json j = {{"expr", to_string(e)},
              {"states", x.automaton.size()},
              {"extracted", to_string(back)},
              {"bound", o.bound},
              {"equal", !diff},
              {"compared", want.size()}};
    if (diff) {
      j["divergent"] = to_string(diff->first);
      j["only_in"] = diff->second ? "original" : "extracted";
    }
    out << j.dump(2) << "\n";
  } else if (!diff) {
    out << "EQUAL (" << want.size() << " pomsets compared)\n";
  } else {
    out << "DIFFERENT: " << to_string(diff->first) << " only in "
        << (diff->second ? "original" : "extracted") << "\n";
  }
  return diff ? 1 : 0;
}

void cmd_dot(const Options& o, std::ostream& out) {
  if (!o.cfg.empty()) {
    GrammarAutomaton ga = cfg_to_pa(load_cfg(o.cfg));
    out << to_dot(ga.automaton, ga.start);
    return;
  }
  auto in = automaton_input(o);
  std::optional<State> start;
  if (o.pa.empty() || !o.state.empty()) start = in.start;
  out << to_dot(in.automaton, start);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Series-parallel pomset languages: expressions, automata and grammars", "pomkit");
  app.require_subcommand(1, 1);
  Options o;

  auto add = [&](const char* name, const char* help, std::initializer_list<const char*> flags) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (std::string f : flags) {
      if (f == "expr") sub->add_option("--expr", o.expr, "expression text");
      if (f == "pa") sub->add_option("--pa", o.pa, "automaton JSON file");
      if (f == "cfg") sub->add_option("--cfg", o.cfg, "grammar file (text or JSON)");
      if (f == "state") sub->add_option("--state", o.state, "state name");
      if (f == "pomset") sub->add_option("--pomset", o.pomset, "pomset text");
      if (f == "bound") sub->add_option("--bound", o.bound, "maximum pomset size")->capture_default_str();
      if (f == "seed") sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
      if (f == "format") {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}))
            ->capture_default_str();
      }
    }
    sub->add_option("--budget", o.budget, "maximum size of any intermediate pomset set")
        ->capture_default_str();
    sub->add_option("--max-states", o.max_states, "maximum number of explored states")
        ->capture_default_str();
    return sub;
  };

  auto* parse = add("parse", "parse an expression and print it back", {"expr", "format"});
  auto* semantics = add("semantics", "pomsets of an expression (or automaton state) up to --bound",
                        {"expr", "pa", "state", "bound", "format"});
  auto* derive = add("derive", "derivatives of an expression", {"expr", "format"});
  auto* explore_cmd = add("explore", "automaton of derivatives of an expression", {"expr", "format"});
  auto* classify = add("classify", "classify the states of an automaton", {"expr", "pa", "format"});
  auto* to_expr = add("pa-to-expr", "expression for an automaton state", {"pa", "state"});
  auto* member = add("member", "membership of a pomset", {"expr", "pa", "state", "pomset"});
  auto* to_cfg = add("pa-to-cfg", "grammar for an automaton state", {"pa", "state", "format"});
  auto* to_pa = add("cfg-to-pa", "automaton for a grammar", {"cfg", "format"});
  auto* generate = add("generate", "pomsets derivable from a grammar up to --bound",
                       {"cfg", "bound", "format"});
  auto* roundtrip = add("roundtrip", "expression -> automaton -> expression, compared up to --bound",
                        {"expr", "bound", "seed", "format"});
  auto* dot = add("dot", "Graphviz rendering of an automaton", {"expr", "pa", "cfg", "state"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (o.format == "dot" && !explore_cmd->parsed() && !to_pa->parsed()) {
      throw UsageError("--format dot applies only to explore and cfg-to-pa");
    }
    if (parse->parsed()) cmd_parse(o, out);
    if (semantics->parsed()) cmd_semantics(o, out);
    if (derive->parsed()) cmd_derive(o, out);
    if (explore_cmd->parsed()) cmd_explore(o, out);
    if (classify->parsed()) cmd_classify(o, out);
    if (to_expr->parsed()) cmd_pa_to_expr(o, out);
    if (member->parsed()) cmd_member(o, out);
    if (to_cfg->parsed()) cmd_pa_to_cfg(o, out);
    if (to_pa->parsed()) cmd_cfg_to_pa(o, out);
    if (generate->parsed()) cmd_generate(o, out);
    if (roundtrip->parsed()) return cmd_roundtrip(o, out);
    if (dot->parsed()) cmd_dot(o, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pomkit::cli
