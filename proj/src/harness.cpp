#include "tcolor/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "tcolor/corpus.hpp"
#include "tcolor/oracle.hpp"

namespace tcolor {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pow_sat(std::uint64_t b, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (b != 0 && r > kSat / b) return kSat;
    r *= b;
  }
  return r;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  return (b != 0 && a > kSat / b) ? kSat : a * b;
}

Json fe_list(const std::vector<Fe>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x.v);
  return out;
}

std::vector<std::uint32_t> raw(const std::vector<Fe>& v) {
  std::vector<std::uint32_t> out;
  for (auto x : v) out.push_back(x.v);
  return out;
}

// Calls f on every tuple of values[0] x ... x values[k-1], last coordinate
// fastest, until f returns true.
template <class F>
bool each_tuple(const std::vector<std::vector<Fe>>& values, F&& f) {
  std::vector<std::size_t> pos(values.size(), 0);
  std::vector<Fe> t(values.size());
  for (const auto& v : values) {
    if (v.empty()) return false;
  }
  while (true) {
    for (std::size_t k = 0; k < values.size(); ++k) t[k] = values[k][pos[k]];
    if (f(t)) return true;
    std::size_t k = values.size();
    while (k > 0) {
      --k;
      if (++pos[k] < values[k].size()) break;
      pos[k] = 0;
      if (k == 0) return false;
    }
    if (values.empty()) return false;
  }
}

std::vector<Fe> residues(std::uint32_t p) {
  std::vector<Fe> out(p);
  for (std::uint32_t a = 0; a < p; ++a) out[a] = Fe{a};
  return out;
}

// Per-instance state shared by the claims of one graph.
class Instance {
 public:
  Instance(const Graph& g, const HarnessParams& params) : g_(g), params_(params) {
    try {
      prime_ = select_prime(g.m(), g.delta, params.prime_override);
      ctx_.emplace(g, *prime_);
    } catch (const Error& e) {
      ctx_error_ = e.what();
    }
  }

  const Graph& graph() const { return g_; }
  const HarnessParams& params() const { return params_; }
  const Context* ctx() const { return ctx_ ? &*ctx_ : nullptr; }
  const std::optional<Prime>& prime() const { return prime_; }
  const std::string& ctx_error() const { return ctx_error_; }

  // Vertex monomial choice, computed once under its own budget.
  const VertexMonomialChoice* choice(std::string& why) {
    if (!choice_tried_) {
      choice_tried_ = true;
      Budget b(params_.budget);
      try {
        choice_ = choose_vertex_monomial(*ctx_, params_.strategy, b);
        cp_ = std::make_shared<const CpEvaluator>(*ctx_, choice_->exponents);
      } catch (const Error& e) {
        choice_error_ = std::string("vertex monomial: ") + e.what();
        choice_code_ = e.code();
      }
    }
    why = choice_error_;
    return choice_ ? &*choice_ : nullptr;
  }
  std::optional<ErrorCode> choice_code() const { return choice_code_; }
  std::shared_ptr<const CpEvaluator> cp() const { return cp_; }

  const RunReport* run(std::string& why) {
    if (!run_tried_) {
      run_tried_ = true;
      AlgParams ap;
      ap.strategy = params_.strategy;
      ap.budget = params_.budget;
      ap.grid_limit = params_.grid_limit;
      ap.seed = params_.seed;
      try {
        run_ = tcolor::run(*ctx_, ap);
      } catch (const Error& e) {
        run_error_ = std::string("algorithm error: ") + e.what();
      }
    }
    why = run_error_;
    return run_ ? &*run_ : nullptr;
  }

 private:
  const Graph& g_;
  const HarnessParams& params_;
  std::optional<Prime> prime_;
  std::optional<Context> ctx_;
  std::string ctx_error_;
  bool choice_tried_ = false;
  std::optional<VertexMonomialChoice> choice_;
  std::shared_ptr<const CpEvaluator> cp_;
  std::string choice_error_;
  std::optional<ErrorCode> choice_code_;
  bool run_tried_ = false;
  std::optional<RunReport> run_;
  std::string run_error_;
};

void holds(Verdict& v, std::string reason, Json evidence = Json::object()) {
  v.outcome = VerdictOutcome::Holds;
  v.reason = std::move(reason);
  v.evidence = std::move(evidence);
}

void undecided(Verdict& v, std::string reason, Json evidence = Json::object()) {
  v.outcome = VerdictOutcome::Inconclusive;
  v.reason = std::move(reason);
  v.evidence = std::move(evidence);
}

// Only called once the failure has been re-checked by an independent route.
void falsified(Verdict& v, std::string reason, Json evidence) {
  v.outcome = VerdictOutcome::Falsified;
  v.reason = std::move(reason);
  v.evidence = std::move(evidence);
}

const char* kUnconfirmed = "failure not confirmed by an independent route";

// Q_i at e through the Lagrange route for C^{P'}.
Fe q_generic(const Context& ctx, std::uint32_t i, const ColorSet& K,
             const std::vector<std::uint32_t>& exps, const std::vector<Fe>& e) {
  Fe v{1};
  const Zp F(ctx.p());
  for (std::uint32_t j = 1; j <= i; ++j) {
    v = F.mul(v, build_E_i(ctx, j, K).eval(edge_point(e)));
    if (v.v == 0) return v;
  }
  return F.mul(v, eval_CP_generic(ctx, exps, e));
}

// Plain lex enumeration of K^m with the Lagrange route. nullopt when the
// search does not fit the budget.
std::optional<std::optional<std::vector<Fe>>> witness_generic(const Context& ctx, std::uint32_t i,
                                                             const ColorSet& K,
                                                             const std::vector<std::uint32_t>& exps,
                                                             std::uint64_t budget) {
  const auto cost = mul_sat(pow_sat(K.size(), ctx.m()), pow_sat(ctx.p(), ctx.n()));
  if (cost > budget) return std::nullopt;
  std::optional<std::vector<Fe>> found;
  each_tuple(std::vector<std::vector<Fe>>(ctx.m(), K.elements()), [&](const std::vector<Fe>& e) {
    if (q_generic(ctx, i, K, exps, e).v == 0) return false;
    found = e;
    return true;
  });
  return found;
}

bool edges_proper_plain(const Graph& g, const std::vector<std::uint32_t>& c,
                        const std::vector<std::uint32_t>& allowed) {
  for (std::uint32_t j = 1; j <= g.m(); ++j) {
    if (std::find(allowed.begin(), allowed.end(), c[j - 1]) == allowed.end()) return false;
    for (std::uint32_t k = j + 1; k <= g.m(); ++k) {
      if (g.edges_adjacent(j, k) && c[j - 1] == c[k - 1]) return false;
    }
  }
  return true;
}

void claim_T1(Instance& in, Verdict& v) {
  const Context& ctx = *in.ctx();
  std::string why;
  if (const auto* c = in.choice(why)) {
    holds(v, "nonzero coefficient found",
          {{"exponents", c->exponents},
           {"coefficient", c->coefficient_at_zero.v},
           {"tuples_examined", c->tuples_examined}});
    return;
  }
  if (in.choice_code() != ErrorCode::ZeroPolynomial) return undecided(v, why);
  // Re-check: P(v, 0) by direct evaluation over Z_p^n.
  if (pow_sat(ctx.p(), ctx.n()) > in.params().budget) {
    return undecided(v, std::string(kUnconfirmed) + ": p^n exceeds budget", {{"search", why}});
  }
  const PolyHandle P = build_P(ctx);
  std::optional<std::vector<Fe>> nz;
  each_tuple(std::vector<std::vector<Fe>>(ctx.n(), residues(ctx.p())), [&](const std::vector<Fe>& x) {
    Point pt;
    for (std::uint32_t k = 1; k <= ctx.n(); ++k) pt[VarId::vertex(k)] = x[k - 1];
    for (std::uint32_t j = 1; j <= ctx.m(); ++j) pt[VarId::edge(j)] = Fe{0};
    if (P.eval(pt).v == 0) return false;
    nz = x;
    return true;
  });
  if (nz) {
    return undecided(v, std::string(kUnconfirmed) + ": P(v, 0) is nonzero at a grid point",
                     {{"point", fe_list(*nz)}});
  }
  falsified(v, "P(v, 0) vanishes on all of Z_p^n", {{"points_checked", pow_sat(ctx.p(), ctx.n())}});
}

// Value at x of the interpolant with per-variable degree <= 2 through the
// samples on {0,1,2}^m (first variable slowest).
Fe degree2_interpolant(const Zp& F, const std::vector<Fe>& samples, const std::vector<Fe>& x) {
  const std::size_t m = x.size();
  const Fe half = F.inv(Fe{2});
  std::vector<std::array<Fe, 3>> L(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Fe a = x[k];
    const Fe a1 = F.sub(a, Fe{1}), a2 = F.sub(a, Fe{2});
    L[k] = {F.mul(F.mul(a1, a2), half), F.neg(F.mul(a, a2)), F.mul(F.mul(a, a1), half)};
  }
  Fe total{0};
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    if (samples[idx].v == 0) continue;
    Fe t = samples[idx];
    std::size_t r = idx;
    for (std::size_t k = m; k-- > 0;) {
      t = F.mul(t, L[k][r % 3]);
      r /= 3;
    }
    total = F.add(total, t);
  }
  return total;
}

void claim_L1(Instance& in, Verdict& v) {
  const Context& ctx = *in.ctx();
  const auto& params = in.params();
  std::string why;
  const auto* c = in.choice(why);
  if (!c) return undecided(v, why);
  const auto cp = in.cp();
  const std::uint32_t p = ctx.p(), m = ctx.m();
  const auto vars = edge_vars(m);
  Budget budget(params.budget);
  const std::uint64_t grid = pow_sat(p, m);

  if (grid <= params.grid_limit && mul_sat(grid, cp->cost()) <= params.budget) {
    budget.charge(mul_sat(grid, cp->cost()), "L1 grid");
    const Evaluable f(p, vars, [&](const Point& pt) { return cp->eval(pt); });
    const SparsePoly C = reconstruct_from_grid(f, vars);
    Json degs = Json::array();
    std::optional<std::uint32_t> bad;
    for (std::uint32_t j = 1; j <= m; ++j) {
      const auto d = C.degree_in(VarId::edge(j));
      degs.push_back(d);
      if (d > 2 && !bad) bad = j;
    }
    Json ev{{"mode", "full-grid"}, {"points", grid}, {"degrees", degs}, {"terms", C.size()}};
    if (!bad) return holds(v, "every edge-variable degree is at most 2 (exact reconstruction)", ev);
    // Re-check along one line in e_j through the Lagrange route.
    const VarId ej = VarId::edge(*bad);
    std::vector<std::vector<Fe>> others(m, residues(p));
    others[*bad - 1] = {Fe{0}};
    std::vector<Fe> base;
    each_tuple(others, [&](const std::vector<Fe>& e) {
      Point partial = edge_point(e);
      partial.erase(ej);
      if (substitute(C, partial).degree_in(ej) <= 2) return false;
      base = e;
      return true;
    });
    if (base.empty() || mul_sat(p, pow_sat(p, ctx.n())) > params.budget) {
      return undecided(v, std::string(kUnconfirmed) + ": line re-check not affordable", ev);
    }
    std::vector<std::pair<Fe, Fe>> samples;
    for (std::uint32_t a = 0; a < p; ++a) {
      base[*bad - 1] = Fe{a};
      samples.emplace_back(Fe{a}, eval_CP_generic(ctx, c->exponents, base));
    }
    const auto line = reconstruct_univariate(p, ej, samples);
    ev["line_edge"] = *bad;
    ev["line_base"] = fe_list(base);
    ev["line_degree"] = line.degree_in(ej);
    if (line.degree_in(ej) <= 2) return undecided(v, std::string(kUnconfirmed) + ": line degree <= 2", ev);
    return falsified(v, "edge-variable degree exceeds 2", ev);
  }

  // Sampled mode.
  const std::uint64_t nodes = pow_sat(3, m);
  const std::uint64_t cost = mul_sat(nodes + params.l1_samples, cp->cost()) + mul_sat(nodes, params.l1_samples);
  if (cost > params.budget) return undecided(v, "budget: sampled reconstruction needs 3^m evaluations");
  const Zp F(p);
  std::vector<Fe> samples;
  samples.reserve(nodes);
  each_tuple(std::vector<std::vector<Fe>>(m, {Fe{0}, Fe{1}, Fe{2}}), [&](const std::vector<Fe>& e) {
    samples.push_back(cp->eval(e));
    return false;
  });
  std::mt19937_64 rng(params.seed ^ fnv1a(graph_id(ctx.g)));
  std::vector<Fe> x(m);
  std::optional<std::vector<Fe>> bad;
  for (std::uint32_t s = 0; s < params.l1_samples && !bad; ++s) {
    for (auto& a : x) a = Fe{static_cast<std::uint32_t>(rng() % p)};
    if (cp->eval(x) != degree2_interpolant(F, samples, x)) bad = x;
  }
  Json ev{{"mode", "sampled"}, {"interpolation_points", nodes}, {"spot_checks", params.l1_samples}};
  if (!bad) {
    return undecided(v, "sampled: degree-2 interpolant agrees at every spot check; not an exact reconstruction",
                     ev);
  }
  ev["witness"] = fe_list(*bad);
  // Re-check with every sample taken through the Lagrange route.
  if (mul_sat(nodes + 1, pow_sat(p, ctx.n())) > params.budget) {
    return undecided(v, std::string(kUnconfirmed) + ": Lagrange re-check not affordable", ev);
  }
  std::vector<Fe> generic;
  each_tuple(std::vector<std::vector<Fe>>(m, {Fe{0}, Fe{1}, Fe{2}}), [&](const std::vector<Fe>& e) {
    generic.push_back(eval_CP_generic(ctx, c->exponents, e));
    return false;
  });
  if (eval_CP_generic(ctx, c->exponents, *bad) == degree2_interpolant(F, generic, *bad)) {
    return undecided(v, std::string(kUnconfirmed) + ": Lagrange route agrees with the interpolant", ev);
  }
  falsified(v, "C^{P'} differs from its degree-2 interpolant", ev);
}

void claim_CL1(Instance& in, Verdict& v) {
  const Context& ctx = *in.ctx();
  std::string why;
  const auto* c = in.choice(why);
  if (!c) return undecided(v, why);
  Budget budget(in.params().budget);
  const ColorSet K = ctx.default_palette();
  const auto h = hypothesis_check(ctx, 1, K, in.cp(), {}, budget);
  Json ev{{"points_examined", h.points_examined}};
  switch (h.kind) {
    case HypothesisResult::Kind::Witness:
      ev["witness"] = fe_list(h.point);
      return holds(v, "Q_1 is nonzero at a point of K^m", ev);
    case HypothesisResult::Kind::Inconclusive:
      return undecided(v, h.reason, ev);
    case HypothesisResult::Kind::NoWitness:
      break;
  }
  const auto re = witness_generic(ctx, 1, K, c->exponents, in.params().budget);
  if (!re) return undecided(v, std::string(kUnconfirmed) + ": generic re-check not affordable", ev);
  if (*re) {
    ev["generic_witness"] = fe_list(**re);
    return undecided(v, std::string(kUnconfirmed) + ": generic route found a witness", ev);
  }
  falsified(v, "Q_1 vanishes on all of K^m", ev);
}

// CL2, CL3, L2, L3, R4, PT4 read the cached algorithm run.
void claim_from_run(Instance& in, Verdict& v) {
  const Context& ctx = *in.ctx();
  const std::string name = to_string(v.claim);
  std::string why;
  const RunReport* r = in.run(why);
  if (!r) return undecided(v, why);
  Json ev{{"run_outcome", to_string(r->outcome)}, {"final_alpha", r->final_alpha.v}};
  if (!r->flags.empty()) ev["flags"] = r->flags;
  std::vector<const ClaimCheck*> checks;
  for (const auto& ch : r->checks) {
    if (ch.claim == name) checks.push_back(&ch);
  }
  if (checks.empty()) {
    const bool fired = std::any_of(r->steps.begin(), r->steps.end(), [](auto& s) { return s.hypothesis_fired; });
    if (!fired && r->outcome == Outcome::Colored) {
      return undecided(v, "NotTriggered: Hypothesis 1 never fired on this instance", ev);
    }
    return undecided(v, "not reached: " + (r->reason.empty() ? std::string(to_string(r->outcome)) : r->reason),
                     ev);
  }
  Json list = Json::array();
  for (const auto* ch : checks) {
    list.push_back({{"step", ch->step}, {"ok", ch->ok}, {"detail", ch->detail}, {"witness", fe_list(ch->witness)}});
  }
  ev["checks"] = list;
  const auto failed = std::find_if(checks.begin(), checks.end(), [](auto* ch) { return !ch->ok; });
  if (failed == checks.end()) {
    if (v.claim == ClaimId::R4 || v.claim == ClaimId::PT4) {
      ev["edge_colors"] = fe_list(r->edge_colors);
      if (!r->vertex_colors.empty()) ev["vertex_colors"] = fe_list(r->vertex_colors);
    }
    if (v.claim == ClaimId::PT4) {
      // Second route: the plain checker with alpha renamed to delta + 2.
      const std::uint32_t a = r->final_alpha.v, top = ctx.delta() + 2;
      auto rename = [&](std::vector<std::uint32_t> c) {
        for (auto& x : c) x = x == a ? top : x;
        return c;
      };
      const TotalColoring tc{rename(raw(r->vertex_colors)), rename(raw(r->edge_colors))};
      const auto chk = check_total_coloring(ctx.g, tc, top);
      if (!chk.ok) return undecided(v, "plain checker rejects the coloring: " + chk.violation, ev);
    }
    return holds(v, std::to_string(checks.size()) + " check(s) passed", ev);
  }
  const ClaimCheck& bad = **failed;
  const std::uint64_t budget = in.params().budget;
  const std::string where = "step " + std::to_string(bad.step) + ": " + bad.detail;

  if (v.claim == ClaimId::R4) {
    const ColorSet K = ctx.palette(r->final_alpha);
    const auto e = bad.witness;
    const bool proper = edges_proper_plain(ctx.g, raw(e), raw(K.elements()));
    if (!proper) return falsified(v, "returned edge assignment is not a proper K-coloring; " + where, ev);
    if (pow_sat(ctx.p(), ctx.n()) > budget) {
      return undecided(v, std::string(kUnconfirmed) + ": Lagrange re-check not affordable; " + where, ev);
    }
    const Fe q = q_generic(ctx, ctx.m(), K, r->choice.exponents, e);
    ev["generic_Q_m"] = q.v;
    if (q.v == 0) return falsified(v, "Q_m vanishes at the returned point; " + where, ev);
    return undecided(v, std::string(kUnconfirmed) + "; " + where, ev);
  }
  if (v.claim == ClaimId::PT4) {
    // Plain search for vertex colors in {1..delta+1} around the edge colors.
    const auto e = raw(bad.witness.empty() ? r->edge_colors : bad.witness);
    if (e.size() != ctx.m()) return undecided(v, std::string(kUnconfirmed) + "; " + where, ev);
    std::vector<std::vector<Fe>> vals(ctx.n());
    for (auto& x : vals) {
      for (std::uint32_t c = 1; c <= ctx.delta() + 1; ++c) x.push_back(Fe{c});
    }
    if (pow_sat(ctx.delta() + 1, ctx.n()) > budget) {
      return undecided(v, std::string(kUnconfirmed) + ": vertex re-check not affordable; " + where, ev);
    }
    std::vector<Fe> found;
    each_tuple(vals, [&](const std::vector<Fe>& x) {
      for (std::uint32_t j = 1; j <= ctx.m(); ++j) {
        const auto [a, b] = ctx.g.edge(j);
        if (x[a - 1] == x[b - 1] || x[a - 1].v == e[j - 1] || x[b - 1].v == e[j - 1]) return false;
      }
      found = x;
      return true;
    });
    if (found.empty()) return falsified(v, "edge coloring admits no vertex extension; " + where, ev);
    ev["plain_extension"] = fe_list(found);
    return undecided(v, std::string(kUnconfirmed) + ": a vertex extension exists; " + where, ev);
  }
  if (v.claim == ClaimId::CL3 && r->outcome == Outcome::Falsified && r->falsified_claim == "CL3" &&
      !r->steps.empty() && r->steps.back().beta) {
    const ColorSet K2 = ctx.palette(*r->steps.back().beta);
    const auto re = witness_generic(ctx, r->falsified_step, K2, r->choice.exponents, budget);
    if (re && !*re) return falsified(v, "Q_i vanishes on K'^m; " + where, ev);
    return undecided(v, std::string(kUnconfirmed) + "; " + where, ev);
  }
  undecided(v, std::string(kUnconfirmed) + ": no independent route for this check; " + where, ev);
}

void claim_PC1(Instance& in, Verdict& v) {
  const Graph& g = in.graph();
  Budget budget(in.params().budget);
  const auto r = brute_total_chromatic(g, g.delta + 2, budget);
  Json ev{{"delta", g.delta}, {"nodes_explored", r.nodes_explored}};
  if (r.chi_total != 0) {
    ev["chi_total"] = r.chi_total;
    ev["vertex_colors"] = r.witness.vertex;
    ev["edge_colors"] = r.witness.edge;
    return holds(v, "total chromatic number " + std::to_string(r.chi_total) + " <= delta + 2", ev);
  }
  Budget again(in.params().budget);
  if (total_coloring_plain(g, g.delta + 2, again)) {
    return undecided(v, std::string(kUnconfirmed) + ": plain search found a coloring", ev);
  }
  falsified(v, "no total coloring with delta + 2 colors", ev);
}

void claim_Z(Instance& in, Verdict& v) {
  const Context& ctx = *in.ctx();
  std::string why;
  const auto* c = in.choice(why);
  if (!c) return undecided(v, why);
  Budget budget(in.params().budget);
  Json wit = Json::array();
  for (std::uint32_t i = 1; i <= ctx.m(); ++i) {
    const auto z = check_Z_nonzero(ctx, i, in.cp(), budget);
    if (z.kind == ZeroTest::Kind::Inconclusive) {
      return undecided(v, "Z_" + std::to_string(i) + ": " + z.reason, {{"nonzero_at", wit}});
    }
    if (z.kind == ZeroTest::Kind::NonZero) {
      Json pt = Json::array();
      for (const auto& [var, val] : z.witness) pt.push_back(val.v);
      wit.push_back(pt);
      continue;
    }
    // Re-check over the whole grid with the Lagrange route.
    const PolyHandle Z = build_Z(ctx, i, nullptr);
    if (mul_sat(pow_sat(ctx.p(), ctx.m()), pow_sat(ctx.p(), ctx.n())) > in.params().budget) {
      return undecided(v, std::string(kUnconfirmed) + ": Z_" + std::to_string(i) + " grid re-check not affordable",
                       {{"nonzero_at", wit}});
    }
    std::vector<Fe> found;
    each_tuple(std::vector<std::vector<Fe>>(ctx.m(), residues(ctx.p())), [&](const std::vector<Fe>& e) {
      if (Z.eval(edge_point(e)).v == 0) return false;
      if (eval_CP_generic(ctx, c->exponents, e).v == 0) return false;
      found = e;
      return true;
    });
    if (found.empty()) return falsified(v, "Z_" + std::to_string(i) + " vanishes on the grid", {{"i", i}});
    return undecided(v, std::string(kUnconfirmed) + ": Z_" + std::to_string(i) + " is nonzero at a grid point",
                     {{"i", i}, {"point", fe_list(found)}});
  }
  holds(v, "every Z_i is nonzero", {{"nonzero_at", wit}});
}

void claim_fermat(Instance& in, Verdict& v) {
  const std::uint32_t p = in.prime()->value;
  std::vector<Fe> coeffs(p + 1, Fe{0});
  coeffs[p] = Fe{1};
  coeffs[1] = Fe{p - 1};
  const SparsePoly f = SparsePoly::univariate(p, VarId::edge(1), coeffs);
  const SparsePoly r = fermat_reduce(f);
  if (r.is_zero()) return holds(v, "x^p - x reduces to 0", {{"p", p}});
  const Zp F(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    if (F.pow(Fe{a}, p) != Fe{a}) {
      return falsified(v, "a^p != a", {{"a", a}, {"reduced", r.to_string()}});
    }
  }
  undecided(v, std::string(kUnconfirmed) + ": x^p - x vanishes pointwise", {{"reduced", r.to_string()}});
}

Verdict verify_in(ClaimId claim, Instance& in) {
  const auto t0 = std::chrono::steady_clock::now();
  const HarnessParams& params = in.params();
  const Graph& g = in.graph();
  Verdict v;
  v.claim = claim;
  v.graph_id = graph_id(g);
  v.n = g.n;
  v.m = g.m();
  v.delta = g.delta;
  v.strategy = params.strategy;
  v.alpha = g.delta + 2;
  if (in.prime()) {
    v.p = in.prime()->value;
    v.scaled = in.prime()->below_paper_bound();
  }
  v.instance_hash = hex64(fnv1a(v.graph_id + "|p=" + std::to_string(v.p) + "|alpha=" + std::to_string(v.alpha) +
                                "|strategy=" + to_string(v.strategy)));
  try {
    if (claim == ClaimId::PC1) {
      claim_PC1(in, v);
    } else if (claim == ClaimId::FERMAT_REMARK && in.prime()) {
      claim_fermat(in, v);
    } else if (!in.ctx()) {
      undecided(v, "parameters rejected: " + in.ctx_error());
    } else {
      switch (claim) {
        case ClaimId::T1: claim_T1(in, v); break;
        case ClaimId::L1: claim_L1(in, v); break;
        case ClaimId::CL1: claim_CL1(in, v); break;
        case ClaimId::Z: claim_Z(in, v); break;
        default: claim_from_run(in, v); break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) {
      undecided(v, std::string("budget: ") + e.what());
    } else {
      undecided(v, std::string("error ") + to_string(e.code()) + ": " + e.what());
    }
  } catch (const std::exception& e) {
    undecided(v, std::string("error: ") + e.what());
  }
  if (params.timing) {
    v.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return v;
}

std::string statement(const ClaimSummary& s) {
  const auto total = s.holds + s.falsified + s.inconclusive;
  if (total == 0) return "no instances tested";
  if (s.falsified > 0) {
    return "falsified on " + std::to_string(s.falsified) + " of " + std::to_string(total) + " tested instances";
  }
  if (s.inconclusive == 0) return "holds on all tested instances";
  if (s.holds == 0) return "inconclusive on all tested instances";
  return "holds on all tested instances where decided (" + std::to_string(s.holds) + " holds, " +
         std::to_string(s.inconclusive) + " inconclusive)";
}

}  // namespace

const char* to_string(ClaimId c) {
  switch (c) {
    case ClaimId::T1: return "T1";
    case ClaimId::L1: return "L1";
    case ClaimId::CL1: return "CL1";
    case ClaimId::CL2: return "CL2";
    case ClaimId::CL3: return "CL3";
    case ClaimId::L2: return "L2";
    case ClaimId::L3: return "L3";
    case ClaimId::R4: return "R4";
    case ClaimId::PT4: return "PT4";
    case ClaimId::PC1: return "PC1";
    case ClaimId::Z: return "Z";
    case ClaimId::FERMAT_REMARK: return "FERMAT_REMARK";
  }
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view s) {
  for (auto c : all_claims()) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> all{ClaimId::T1,  ClaimId::L1, ClaimId::CL1, ClaimId::CL2,
                                        ClaimId::CL3, ClaimId::L2, ClaimId::L3,  ClaimId::R4,
                                        ClaimId::PT4, ClaimId::PC1, ClaimId::Z,  ClaimId::FERMAT_REMARK};
  return all;
}

const char* to_string(VerdictOutcome o) {
  switch (o) {
    case VerdictOutcome::Holds: return "Holds";
    case VerdictOutcome::Falsified: return "Falsified";
    case VerdictOutcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::uint64_t default_budget() {
  if (const char* s = std::getenv("TCC_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 100'000'000;
}

Verdict verify_claim(ClaimId claim, const Graph& g, const HarnessParams& params) {
  Instance in(g, params);
  return verify_in(claim, in);
}

bool SuiteReport::any_falsified() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.outcome == VerdictOutcome::Falsified; });
}

SuiteReport run_suite(const std::vector<Graph>& corpus, const std::vector<ClaimId>& claims,
                      const HarnessParams& params) {
  SuiteReport rep;
  rep.claims = claims;
  rep.instances = corpus.size();
  rep.verdicts.resize(corpus.size() * claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < corpus.size();) {
      Instance in(corpus[k], params);
      for (std::size_t c = 0; c < claims.size(); ++c) rep.verdicts[k * claims.size() + c] = verify_in(claims[c], in);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(params.threads, static_cast<unsigned>(corpus.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto c : claims) {
    ClaimSummary s;
    for (const auto& v : rep.verdicts) {
      if (v.claim != c) continue;
      switch (v.outcome) {
        case VerdictOutcome::Holds: ++s.holds; break;
        case VerdictOutcome::Falsified: ++s.falsified; break;
        case VerdictOutcome::Inconclusive: ++s.inconclusive; break;
      }
    }
    s.statement = statement(s);
    rep.summary.emplace_back(c, s);
  }
  rep.scaled = std::any_of(rep.verdicts.begin(), rep.verdicts.end(), [](const Verdict& v) { return v.scaled; });
  return rep;
}

nlohmann::ordered_json to_json(const Verdict& v, bool timing) {
  Json j;
  j["claim"] = to_string(v.claim);
  j["graph"] = v.graph_id;
  j["instance"] = v.instance_hash;
  j["params"] = {{"n", v.n}, {"m", v.m}, {"delta", v.delta}, {"p", v.p},
                 {"scaled", v.scaled}, {"alpha", v.alpha}, {"strategy", to_string(v.strategy)}};
  j["outcome"] = to_string(v.outcome);
  j["reason"] = v.reason;
  j["evidence"] = v.evidence;
  j["evidence_digest"] = hex64(fnv1a(v.evidence.dump()));
  if (timing) j["wall_ms"] = v.wall_ms;
  return j;
}

nlohmann::ordered_json to_json(const SuiteReport& r, const HarnessParams& params) {
  Json j;
  j["schema"] = "tcolor-report/1";
  Json p{{"strategy", to_string(params.strategy)},
         {"budget", params.budget},
         {"seed", params.seed},
         {"l1_samples", params.l1_samples},
         {"grid_limit", params.grid_limit}};
  p["prime_override"] = params.prime_override ? Json(*params.prime_override) : Json(nullptr);
  j["params"] = p;
  j["scaled_run"] = r.scaled;
  Json claims = Json::array();
  for (auto c : r.claims) claims.push_back(to_string(c));
  j["claims"] = claims;
  j["instances"] = r.instances;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v, params.timing));
  j["verdicts"] = verdicts;
  Json summary = Json::object();
  for (const auto& [c, s] : r.summary) {
    summary[to_string(c)] = {{"holds", s.holds},
                             {"falsified", s.falsified},
                             {"inconclusive", s.inconclusive},
                             {"statement", s.statement}};
  }
  j["summary"] = summary;
  return j;
}

}  // namespace tcolor
