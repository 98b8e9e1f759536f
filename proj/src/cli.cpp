#include "tcolor/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcolor/algorithm1.hpp"
#include "tcolor/corpus.hpp"
#include "tcolor/harness.hpp"
#include "tcolor/oracle.hpp"

namespace tcolor {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kBanner = "SCALED RUN (paper precondition violated)";

struct Options {
  std::string input;
  std::string format = "edgelist";
  std::optional<std::uint64_t> prime_override;
  std::optional<std::uint64_t> budget;
  std::string strategy = "gradedlex";
  std::string output;
  bool json = false;
  unsigned threads = 1;
  std::uint32_t max_n = 4;
  std::string claims;
  std::string method = "alg1";
  bool timing = false;
  bool all_graphs = false;
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> force_else_step;
};

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

Graph load_graph(const Options& o) {
  if (o.input.empty()) throw Failure{1, "Usage", "--input is required"};
  std::string text;
  if (o.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f) throw Failure{1, "Input", "cannot open " + o.input};
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  const auto fmt = o.format == "dimacs" ? GraphFormat::Dimacs : GraphFormat::EdgeList;
  return parse_graph(text, fmt);
}

MonomialStrategy strategy_of(const Options& o) { return *parse_strategy(o.strategy); }

std::uint64_t budget_of(const Options& o) { return o.budget.value_or(default_budget()); }

Json colors_json(const std::vector<std::uint32_t>& c) {
  Json out = Json::object();
  for (std::size_t k = 0; k < c.size(); ++k) out[std::to_string(k + 1)] = c[k];
  return out;
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  // A scaled run prints the banner on both streams in text mode and in the
  // document in JSON mode.
  void banner(bool scaled, Json* doc) {
    if (!scaled) return;
    err_ << kBanner << "\n";
    if (doc) {
      (*doc)["banner"] = kBanner;
    } else {
      text_ << kBanner << "\n";
    }
  }

  std::ostream& text() { return text_; }

  void finish(const Json* doc) {
    std::string body = doc ? doc->dump(2) + "\n" : text_.str();
    if (o_.output.empty()) {
      out_ << body;
    } else {
      std::ofstream f(o_.output);
      if (!f) throw Failure{1, "Output", "cannot write " + o_.output};
      f << body;
    }
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream text_;
};

Json run_json(const RunReport& r) {
  Json j;
  j["outcome"] = to_string(r.outcome);
  j["reason"] = r.reason;
  if (r.outcome == Outcome::Falsified) {
    j["falsified"] = {{"claim", r.falsified_claim}, {"step", r.falsified_step}};
    Json w = Json::array();
    for (auto x : r.falsified_witness) w.push_back(x.v);
    j["falsified"]["witness"] = w;
  }
  j["vertex_monomial"] = {{"exponents", r.choice.exponents},
                          {"coefficient", r.choice.coefficient_at_zero.v},
                          {"strategy", to_string(r.choice.strategy)}};
  j["final_alpha"] = r.final_alpha.v;
  auto fe = [](const std::vector<Fe>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x.v);
    return a;
  };
  j["edge_colors"] = fe(r.edge_colors);
  j["vertex_colors"] = fe(r.vertex_colors);
  Json trace = Json::array();
  for (const auto& a : r.alpha_trace) trace.push_back({{"step", a.i}, {"from", a.from.v}, {"to", a.to.v}, {"reason", a.reason}});
  j["alpha_trace"] = trace;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json st{{"i", s.i}, {"hypothesis_fired", s.hypothesis_fired}, {"prefix_adopted", s.prefix_adopted},
            {"points_examined", s.points_examined}, {"M1", s.M1}, {"M2", s.M2}};
    st["beta"] = s.beta ? Json(s.beta->v) : Json(nullptr);
    steps.push_back(st);
  }
  j["steps"] = steps;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"claim", c.claim}, {"step", c.step}, {"ok", c.ok}, {"detail", c.detail}, {"witness", fe(c.witness)}});
  }
  j["checks"] = checks;
  j["flags"] = r.flags;
  j["budget_spent"] = r.budget_spent;
  return j;
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Colored: return 0;
    case Outcome::Falsified: return 2;
    case Outcome::Inconclusive: return 3;
  }
  return 3;
}

AlgParams alg_params(const Options& o) {
  AlgParams ap;
  ap.strategy = strategy_of(o);
  ap.budget = budget_of(o);
  ap.seed = o.seed;
  ap.force_else_step = o.force_else_step;
  return ap;
}

int cmd_color(const Options& o, Emitter& em) {
  const Graph g = load_graph(o);
  Json doc;
  std::vector<std::uint32_t> vc, ec;
  std::uint32_t palette = g.delta + 2;
  bool scaled = false;
  if (o.method == "oracle") {
    Budget b(budget_of(o));
    const auto r = brute_total_chromatic(g, g.delta + 2, b);
    if (r.chi_total == 0) throw Failure{2, "NoColoring", "no total coloring with delta + 2 colors"};
    vc = r.witness.vertex;
    ec = r.witness.edge;
    palette = r.chi_total;
  } else {
    const Context ctx(g, select_prime(g.m(), g.delta, o.prime_override));
    scaled = ctx.prime.below_paper_bound();
    const auto r = run(ctx, alg_params(o));
    if (r.outcome != Outcome::Colored) {
      throw Failure{outcome_code(r.outcome), to_string(r.outcome),
                    r.falsified_claim.empty() ? r.reason : r.falsified_claim + ": " + r.reason};
    }
    // Field colors with alpha renamed to delta + 2.
    ColorAssignment a(g, ctx.palette(r.final_alpha));
    for (std::uint32_t k = 0; k < g.n; ++k) a.vertex[k] = r.vertex_colors[k];
    for (std::uint32_t j = 0; j < g.m(); ++j) a.edge[j] = r.edge_colors[j];
    const auto chk = verify_total_coloring(g, a);
    if (!chk.ok) throw Failure{2, "InvalidColoring", chk.violation};
    auto rename = [&](Fe c) { return c == r.final_alpha ? g.delta + 2 : c.v; };
    for (auto c : r.vertex_colors) vc.push_back(rename(c));
    for (auto c : r.edge_colors) ec.push_back(rename(c));
    doc["alpha"] = r.final_alpha.v;
    doc["p"] = ctx.p();
  }
  const auto chk = check_total_coloring(g, {vc, ec}, palette);
  if (!chk.ok) throw Failure{2, "InvalidColoring", chk.violation};
  doc["vertices"] = colors_json(vc);
  doc["edges"] = colors_json(ec);
  doc["palette_size"] = palette;
  doc["method"] = o.method;
  if (o.json) {
    em.banner(scaled, &doc);
    em.finish(&doc);
  } else {
    em.banner(scaled, nullptr);
    em.text() << "palette size " << palette << "\nvertex colors: " << join(vc) << "\nedge colors:   " << join(ec)
              << "\n";
    em.finish(nullptr);
  }
  return 0;
}

int cmd_chi(const Options& o, Emitter& em) {
  const Graph g = load_graph(o);
  Budget b(budget_of(o));
  const auto r = brute_total_chromatic(g, g.n + g.m() + 1, b);
  Json doc{{"chi_total", r.chi_total}, {"delta", g.delta}};
  doc["vertex_colors"] = r.witness.vertex;
  doc["edge_colors"] = r.witness.edge;
  doc["nodes_explored"] = r.nodes_explored;
  if (o.json) {
    em.finish(&doc);
  } else {
    em.text() << "chi_total " << r.chi_total << " (delta " << g.delta << ")\n";
    em.finish(nullptr);
  }
  return 0;
}

int cmd_alg1(const Options& o, Emitter& em) {
  const Graph g = load_graph(o);
  const Context ctx(g, select_prime(g.m(), g.delta, o.prime_override));
  const auto r = run(ctx, alg_params(o));
  Json doc{{"graph", graph_id(g)}, {"p", ctx.p()}, {"prime_source", to_string(ctx.prime.source)},
           {"paper_bound", ctx.prime.paper_bound}};
  doc.update(run_json(r));
  const bool scaled = ctx.prime.below_paper_bound();
  if (o.json) {
    em.banner(scaled, &doc);
    em.finish(&doc);
  } else {
    em.banner(scaled, nullptr);
    auto& t = em.text();
    t << "outcome " << to_string(r.outcome);
    if (!r.reason.empty()) t << " (" << r.reason << ")";
    t << "\np " << ctx.p() << ", final alpha " << r.final_alpha.v << "\n";
    for (const auto& c : r.checks) {
      t << std::left << std::setw(5) << c.claim << " step " << c.step << (c.ok ? "  ok    " : "  FAIL  ") << c.detail
        << "\n";
    }
    for (const auto& f : r.flags) t << "flag: " << f << "\n";
    em.finish(nullptr);
  }
  return outcome_code(r.outcome);
}

int cmd_verify(const Options& o, Emitter& em) {
  std::vector<ClaimId> claims;
  if (o.claims.empty()) {
    claims = all_claims();
  } else {
    std::stringstream ss(o.claims);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto c = parse_claim(item);
      if (!c) throw Failure{1, "Usage", "unknown claim " + item};
      claims.push_back(*c);
    }
  }
  std::vector<Graph> corpus;
  if (!o.input.empty()) {
    corpus.push_back(load_graph(o));
  } else {
    if (o.max_n > 7) throw Failure{1, "Usage", "--max-n is limited to 7"};
    corpus = gen_corpus(o.max_n, !o.all_graphs);
  }
  HarnessParams hp;
  hp.prime_override = o.prime_override;
  hp.strategy = strategy_of(o);
  hp.budget = budget_of(o);
  hp.seed = o.seed;
  hp.threads = o.threads;
  hp.timing = o.timing;
  const auto rep = run_suite(corpus, claims, hp);
  if (o.json) {
    Json doc = to_json(rep, hp);
    em.banner(rep.scaled, &doc);
    em.finish(&doc);
  } else {
    em.banner(rep.scaled, nullptr);
    auto& t = em.text();
    for (const auto& v : rep.verdicts) {
      t << std::left << std::setw(14) << to_string(v.claim) << std::setw(26) << v.graph_id << std::setw(6) << v.p
        << std::setw(13) << to_string(v.outcome) << v.reason;
      if (o.timing) t << "  [" << std::fixed << std::setprecision(1) << v.wall_ms << " ms]";
      t << "\n";
    }
    t << "\n";
    for (const auto& [c, s] : rep.summary) {
      t << std::left << std::setw(14) << to_string(c) << s.statement << "\n";
    }
    em.finish(nullptr);
  }
  return rep.any_falsified() ? 2 : 0;
}

int cmd_corpus(const Options& o, Emitter& em) {
  if (o.max_n > 7) throw Failure{1, "Usage", "--max-n is limited to 7"};
  const auto corpus = gen_corpus(o.max_n, !o.all_graphs);
  if (o.json) {
    Json doc = Json::array();
    for (const auto& g : corpus) {
      Json edges = Json::array();
      for (const auto& [u, v] : g.edges) edges.push_back({u, v});
      doc.push_back({{"id", graph_id(g)}, {"n", g.n}, {"m", g.m()}, {"delta", g.delta}, {"edges", edges}});
    }
    em.finish(&doc);
  } else {
    for (const auto& g : corpus) {
      em.text() << "# " << graph_id(g) << "\n";
      for (const auto& [u, v] : g.edges) em.text() << u << " " << v << "\n";
    }
    em.finish(nullptr);
  }
  return 0;
}

void report_error(const Options& o, std::ostream& err, const std::string& kind, const std::string& msg) {
  if (o.json) {
    err << Json{{"error", {{"kind", kind}, {"message", msg}}}}.dump() << "\n";
  } else {
    err << "error [" << kind << "]: " << msg << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Total coloring via polynomial constructions over Z_p"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* s) {
    s->add_option("--input", o.input, "graph file, - for stdin");
    s->add_option("--format", o.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
    s->add_option("--prime-override", o.prime_override, "use this prime instead of the paper bound");
    s->add_option("--budget", o.budget, "evaluation budget (default TCC_BUDGET or 100000000)");
    s->add_option("--strategy", o.strategy, "vertex monomial order")->check(CLI::IsMember({"gradedlex", "lexmin"}));
    s->add_option("--output", o.output, "write the result here instead of stdout");
    s->add_flag("--json", o.json, "machine-readable output");
    s->add_option("--seed", o.seed, "seed for sampled checks");
  };
  auto* color = app.add_subcommand("color", "total coloring with delta + 2 colors");
  add_common(color);
  color->add_option("--method", o.method, "alg1 or oracle")->check(CLI::IsMember({"alg1", "oracle"}));
  auto* chi = app.add_subcommand("chi-total", "exact total chromatic number");
  add_common(chi);
  auto* alg = app.add_subcommand("run-alg1", "run the algorithm and print its report");
  add_common(alg);
  alg->add_option("--force-else-step", o.force_else_step, "run the else-branch at this step (flagged)");
  auto* verify = app.add_subcommand("verify-claims", "per-instance claim verdicts");
  add_common(verify);
  verify->add_option("--max-n", o.max_n, "corpus size when no --input is given");
  verify->add_option("--claims", o.claims, "comma-separated claim ids");
  verify->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", o.timing, "record wall time per verdict");
  verify->add_flag("--all-graphs", o.all_graphs, "include disconnected graphs");
  auto* corpus = app.add_subcommand("corpus", "list the generated corpus");
  add_common(corpus);
  corpus->add_option("--max-n", o.max_n, "largest vertex count");
  corpus->add_flag("--all-graphs", o.all_graphs, "include disconnected graphs");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 1;
  }

  Emitter em(o, out, err);
  try {
    if (*color) return cmd_color(o, em);
    if (*chi) return cmd_chi(o, em);
    if (*alg) return cmd_alg1(o, em);
    if (*verify) return cmd_verify(o, em);
    if (*corpus) return cmd_corpus(o, em);
  } catch (const Failure& f) {
    report_error(o, err, f.kind, f.message);
    return f.code;
  } catch (const Error& e) {
    report_error(o, err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::BudgetExceeded ? 3 : 1;
  }
  return 1;
}

}  // namespace tcolor
