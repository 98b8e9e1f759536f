#include "tcolor/algorithm1.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tcolor {

namespace {

std::string fmt_point(const std::vector<Fe>& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k].v;
  os << ")";
  return os.str();
}

std::string fmt_set(const std::vector<std::uint32_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << "e" << s[k];
  os << "}";
  return os.str();
}

// Calls f on every tuple of the per-coordinate value lists, last coordinate
// fastest, until f returns true. Returns whether f stopped the walk.
template <class F>
bool for_each_tuple(const std::vector<std::vector<Fe>>& values, F&& f) {
  for (const auto& v : values) {
    if (v.empty()) return false;
  }
  std::vector<std::size_t> pos(values.size(), 0);
  std::vector<Fe> cur(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) cur[k] = values[k][0];
  while (true) {
    if (f(cur)) return true;
    std::size_t k = values.size();
    while (k > 0) {
      --k;
      if (++pos[k] < values[k].size()) {
        cur[k] = values[k][pos[k]];
        break;
      }
      pos[k] = 0;
      cur[k] = values[k][0];
      if (k == 0) return false;
    }
    if (values.empty()) return false;
  }
}

std::vector<Fe> all_residues(std::uint32_t p) {
  std::vector<Fe> out(p);
  for (std::uint32_t a = 0; a < p; ++a) out[a] = Fe{a};
  return out;
}

std::uint64_t grid_size(std::uint32_t p, std::uint32_t m) {
  std::uint64_t g = 1;
  for (std::uint32_t k = 0; k < m; ++k) {
    if (g > Budget::kUnlimited / p) return Budget::kUnlimited;
    g *= p;
  }
  return g;
}

Fe eval_charged(const PolyHandle& h, const std::vector<Fe>& e, Budget& budget) {
  budget.charge(1, "point evaluation");
  const Fe v = eval(h.factors, edge_point(e));
  if (v.v == 0 || !h.cp) return v;
  return Zp(h.factors.modulus()).mul(v, h.cp->eval(e, budget));
}

// prod_{l in Z_p \ {alpha}} (x - l)
SparsePoly all_but_alpha(std::uint32_t p, VarId x, Fe alpha) {
  SparsePoly out = SparsePoly::constant(p, 1);
  for (std::uint32_t l = 0; l < p; ++l) {
    if (l != alpha.v) out = out * SparsePoly::linear(p, x, l);
  }
  return out;
}

// Depth-first walk over per-coordinate value lists in lex order. A subtree
// is cut as soon as a factor whose edge variables are all assigned vanishes,
// so surviving leaves come in the same order as a plain lex walk.
class PrunedWalk {
 public:
  PrunedWalk(const PolyHandle& h, std::uint32_t m) : m_(m), by_depth_(m + 1) {
    for (const auto& f : h.factors.factors()) {
      std::uint32_t d = 0;
      for (VarId v : f.variables()) {
        if (v.kind != VarKind::Edge) throw Error(ErrorCode::InvalidArgument, "edge-only handle expected");
        d = std::max(d, v.index);
      }
      by_depth_[d].push_back(&f);
    }
  }

  // skip(e, depth) cuts the subtree below the first `depth` coordinates;
  // leaf(e) returns true to stop the walk.
  template <class Skip, class Leaf>
  bool run(const std::vector<std::vector<Fe>>& values, Budget& budget, Skip&& skip, Leaf&& leaf) {
    for (const SparsePoly* f : by_depth_[0]) {
      if (eval(*f, {}).v == 0) return false;
    }
    e_.assign(m_, Fe{});
    return rec(0, values, budget, skip, leaf);
  }

 private:
  template <class Skip, class Leaf>
  bool rec(std::uint32_t k, const std::vector<std::vector<Fe>>& values, Budget& budget, Skip& skip,
           Leaf& leaf) {
    if (k == m_) return leaf(e_);
    for (Fe v : values[k]) {
      budget.charge(1, "K^m search");
      e_[k] = v;
      pt_[VarId::edge(k + 1)] = v;
      const bool alive = std::all_of(by_depth_[k + 1].begin(), by_depth_[k + 1].end(),
                                     [&](const SparsePoly* f) { return eval(*f, pt_).v != 0; });
      if (!alive || skip(e_, k + 1)) continue;
      if (rec(k + 1, values, budget, skip, leaf)) return true;
    }
    return false;
  }

  std::uint32_t m_;
  std::vector<std::vector<const SparsePoly*>> by_depth_;
  std::vector<Fe> e_;
  Point pt_;
};

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Colored: return "Colored";
    case Outcome::Falsified: return "Falsified";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

HypothesisResult hypothesis_check(const Context& ctx, std::uint32_t i, const ColorSet& K,
                                  const std::shared_ptr<const CpEvaluator>& cp,
                                  const std::vector<Fe>& prefix, Budget& budget) {
  if (i < 1 || i > ctx.m()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
  const PolyHandle Q = build_Q(ctx, i, K, cp);
  const std::uint32_t m = ctx.m();
  const std::vector<Fe> elems = K.elements();
  HypothesisResult r;
  PrunedWalk walk(Q, m);

  bool use_prefix = prefix.size() >= i - 1;
  for (std::uint32_t k = 0; use_prefix && k + 1 < i; ++k) use_prefix = K.contains(prefix[k]);

  auto leaf = [&](const std::vector<Fe>& e) {
    ++r.points_examined;
    if (cp->eval(e, budget).v == 0) return false;
    r.point = e;
    return true;
  };
  auto keep_all = [](const std::vector<Fe>&, std::uint32_t) { return false; };
  // Second pass skips the subtree already covered by the first.
  auto skip_prefix = [&](const std::vector<Fe>& e, std::uint32_t depth) {
    return use_prefix && depth == i - 1 && std::equal(e.begin(), e.begin() + depth, prefix.begin());
  };

  try {
    if (use_prefix) {
      std::vector<std::vector<Fe>> values(m, elems);
      for (std::uint32_t k = 0; k + 1 < i; ++k) values[k] = {prefix[k]};
      if (walk.run(values, budget, keep_all, leaf)) {
        r.kind = HypothesisResult::Kind::Witness;
        r.prefix_kept = true;
        return r;
      }
    }
    if (i > 1 || !use_prefix) {
      if (walk.run(std::vector<std::vector<Fe>>(m, elems), budget, skip_prefix, leaf)) {
        r.kind = HypothesisResult::Kind::Witness;
        return r;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    r.kind = HypothesisResult::Kind::Inconclusive;
    r.reason = "K^m search exceeded budget";
    return r;
  }
  r.kind = HypothesisResult::Kind::NoWitness;
  r.reason = "no point of K^m has Q_" + std::to_string(i) + " != 0";
  return r;
}

BetaSelection select_beta(std::uint32_t p, std::uint32_t delta, Fe alpha,
                          const std::vector<std::pair<std::uint32_t, SparsePoly>>& J_M2,
                          const SparsePoly& J_i) {
  BetaSelection s;
  for (std::uint32_t l = delta + 2; l < p; ++l) {
    if (l != alpha.v) s.B.push_back(Fe{l});
  }
  std::vector<bool> excluded(p, false);
  for (const auto& [j, J] : J_M2) {
    std::vector<Fe> doubles;
    for (Fe g : s.B) {
      if (linear_multiplicity(J, g) >= 2) {
        doubles.push_back(g);
        excluded[g.v] = true;
      }
    }
    s.B_j.emplace_back(j, std::move(doubles));
  }
  for (Fe g : s.B) {
    if (linear_multiplicity(J_i, g) >= 1) {
      s.B_i.push_back(g);
      excluded[g.v] = true;
    }
  }
  const auto it = std::find_if(s.B.begin(), s.B.end(), [&](Fe g) { return !excluded[g.v]; });
  if (it == s.B.end()) {
    throw Error(ErrorCode::EmptyCandidateSet, "every candidate in B is excluded");
  }
  s.beta = *it;

  std::ostringstream detail;
  for (const auto& [j, J] : J_M2) {
    const auto k = linear_multiplicity(J, s.beta);
    if (k != 1) {
      s.postcondition_ok = false;
      detail << "multiplicity of beta in J(e" << j << ") is " << k << "; ";
    }
  }
  if (const auto k = linear_multiplicity(J_i, s.beta); k != 0) {
    s.postcondition_ok = false;
    detail << "multiplicity of beta in J(e_i) is " << k << "; ";
  }
  s.postcondition_detail = detail.str();
  return s;
}

Algorithm1::Algorithm1(const Context& ctx, AlgParams params)
    : ctx_(ctx), params_(params), budget_(params.budget) {
  state_.alpha = Fe{ctx.delta() + 2};
}

void Algorithm1::falsify(const std::string& claim, std::string reason, std::vector<Fe> witness) {
  check(claim, false, reason, witness);
  report_.outcome = Outcome::Falsified;
  report_.falsified_claim = claim;
  report_.falsified_step = state_.i;
  report_.falsified_witness = std::move(witness);
  report_.reason = std::move(reason);
  done_ = true;
}

void Algorithm1::inconclusive(std::string reason) {
  report_.outcome = Outcome::Inconclusive;
  report_.reason = std::move(reason);
  done_ = true;
}

void Algorithm1::check(const std::string& claim, bool ok, std::string detail,
                       std::vector<Fe> witness) {
  report_.checks.push_back({claim, state_.i, ok, std::move(detail), std::move(witness)});
}

bool Algorithm1::start() {
  try {
    report_.choice = choose_vertex_monomial(ctx_, params_.strategy, budget_);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) {
      inconclusive("vertex monomial search exceeded budget");
    } else if (e.code() == ErrorCode::ZeroPolynomial) {
      falsify("T1", "P(v, 0) vanishes on the whole grid");
    } else {
      throw;
    }
    return false;
  }
  cp_ = std::make_shared<const CpEvaluator>(ctx_, report_.choice.exponents);
  check("T1", true, "coefficient " + std::to_string(report_.choice.coefficient_at_zero.v));
  return true;
}

bool Algorithm1::step() {
  if (done_) return false;
  const std::uint32_t m = ctx_.m();
  const std::uint32_t i = state_.i;
  if (i > m) {
    done_ = true;
    return false;
  }
  StepRecord rec;
  rec.i = i;
  try {
    const ColorSet K = ctx_.palette(state_.alpha);
    const auto h = hypothesis_check(ctx_, i, K, cp_, state_.point, budget_);
    rec.points_examined = h.points_examined;
    switch (h.kind) {
      case HypothesisResult::Kind::Inconclusive:
        inconclusive("step " + std::to_string(i) + ": " + h.reason);
        break;
      case HypothesisResult::Kind::Witness:
        if (params_.force_else_step == i) {
          report_.flags.push_back("else-branch forced at step " + std::to_string(i));
          if (i == 1) check("CL1", true, "Q_1 != 0 at " + fmt_point(h.point), h.point);
          state_.point = h.point;
          rec.hypothesis_fired = true;
          else_branch(rec, true);
          break;
        }
        rec.prefix_adopted = i > 1 && !h.prefix_kept;
        state_.point = h.point;
        if (i == 1) check("CL1", true, "Q_1 != 0 at " + fmt_point(h.point), h.point);
        break;
      case HypothesisResult::Kind::NoWitness:
        rec.hypothesis_fired = true;
        if (i == 1) check("CL1", false, h.reason);
        else_branch(rec, false);
        break;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    inconclusive("step " + std::to_string(i) + ": " + e.what());
  }
  report_.steps.push_back(rec);
  if (done_) return false;

  if (++state_.i > m) {
    // Termination: Q_m at the final point, then vertices.
    const ColorSet K = ctx_.palette(state_.alpha);
    const PolyHandle Q = build_Q(ctx_, m, K, cp_);
    const Fe q = Q.eval(edge_point(state_.point));
    const auto edge_ok = verify_edge_coloring(ctx_.g, state_.point, K);
    state_.i = m;
    check("R4", q.v != 0 && edge_ok.ok,
          "Q_m = " + std::to_string(q.v) + " at " + fmt_point(state_.point) +
              (edge_ok.ok ? "" : "; " + edge_ok.violation),
          state_.point);
    report_.edge_colors = state_.point;
    try {
      const auto ext = extend_to_vertices(ctx_, state_.point, state_.alpha, budget_);
      if (!ext) {
        check("PT4", false, "no vertex assignment in {1..delta+1}^n", state_.point);
      } else {
        const auto total = verify_total_coloring(ctx_.g, *ext);
        for (const auto& c : ext->vertex) report_.vertex_colors.push_back(*c);
        check("PT4", total.ok, total.ok ? "total coloring verified" : total.violation);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      inconclusive("vertex extension exceeded budget");
    }
    state_.i = m + 1;
    done_ = true;
    return false;
  }
  return true;
}

void Algorithm1::else_branch(StepRecord& rec, bool forced) {
  const std::uint32_t p = ctx_.p(), m = ctx_.m(), i = state_.i, delta = ctx_.delta();
  const Fe alpha = state_.alpha;
  const ColorSet K = ctx_.palette(alpha);
  const Zp F(p);
  const auto vars = edge_vars(m);
  const std::uint64_t grid = grid_size(p, m);

  const std::string g_flag = "G built from Q_{i-1} with M1 inside e_1..e_{i-1}; the else-branch listing writes e_1..e_i";
  if (std::find(report_.flags.begin(), report_.flags.end(), g_flag) == report_.flags.end()) {
    report_.flags.push_back(g_flag);
  }

  if (!budget_.can_afford(grid)) {
    inconclusive("step " + std::to_string(i) + ": grid Z_p^m too large for the else-branch");
    return;
  }

  // Polynomial reading: Q_i over the grid, e_1..e_i in K (the palette
  // factors kill everything else), later coordinates free.
  if (!forced && grid <= params_.grid_limit) {
    const PolyHandle Qi = build_Q(ctx_, i, K, cp_);
    std::vector<std::vector<Fe>> values(m, all_residues(p));
    for (std::uint32_t k = 0; k < i; ++k) values[k] = K.elements();
    std::vector<Fe> found;
    if (for_each_tuple(values, [&](const std::vector<Fe>& e) {
          if (eval_charged(Qi, e, budget_).v == 0) return false;
          found = e;
          return true;
        })) {
      report_.flags.push_back("step " + std::to_string(i) +
                              ": no witness on K^m but Q_i is nonzero on the grid at " +
                              fmt_point(found) + " (point and polynomial readings differ)");
    }
  }

  // Value table of Q_{i-1} over Z_p^m, first edge slowest.
  const PolyHandle Qprev = build_Q(ctx_, i - 1, K, cp_);
  std::vector<Fe> qtab;
  qtab.reserve(grid);
  std::vector<std::vector<Fe>> support;
  for_each_tuple(std::vector<std::vector<Fe>>(m, all_residues(p)), [&](const std::vector<Fe>& e) {
    const Fe v = eval_charged(Qprev, e, budget_);
    qtab.push_back(v);
    if (v.v != 0) support.push_back(e);
    return false;
  });
  if (support.empty()) {
    falsify("CL2", "Q_{i-1} vanishes on the grid");
    return;
  }

  // M1 search: decreasing size, lex within a size.
  std::vector<std::uint32_t> prev(i - 1);
  for (std::uint32_t j = 1; j < i; ++j) prev[j - 1] = j;
  std::optional<std::vector<std::uint32_t>> M1;
  for (std::uint32_t size = i - 1; size + 1 > 0 && !M1; --size) {
    std::vector<bool> pick(prev.size(), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<std::uint32_t> cand, rest;
      for (std::size_t k = 0; k < prev.size(); ++k) (pick[k] ? cand : rest).push_back(prev[k]);
      bool any = false, h_zero = true;
      for (const auto& s : support) {
        const bool g_nonzero =
            std::all_of(cand.begin(), cand.end(), [&](auto j) { return s[j - 1] != alpha; });
        if (!g_nonzero) continue;
        any = true;
        if (!std::all_of(rest.begin(), rest.end(), [&](auto j) { return s[j - 1] == alpha; })) {
          h_zero = false;
          break;
        }
      }
      if (any && h_zero) {
        M1 = cand;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (size == 0) break;
  }
  if (!M1) {
    falsify("CL2", "no subset M1 makes G' nonzero with every H' zero");
    return;
  }
  std::vector<std::uint32_t> M2;
  for (auto j : prev) {
    if (!std::binary_search(M1->begin(), M1->end(), j)) M2.push_back(j);
  }
  state_.M1 = rec.M1 = *M1;
  state_.M2 = rec.M2 = M2;

  // G' from the table.
  std::vector<Fe> gtab(qtab.size());
  {
    std::size_t idx = 0;
    for_each_tuple(std::vector<std::vector<Fe>>(m, all_residues(p)), [&](const std::vector<Fe>& e) {
      Fe v = qtab[idx];
      for (auto j : *M1) v = F.mul(v, F.sub(e[j - 1], alpha));
      gtab[idx++] = v;
      return false;
    });
  }
  const SparsePoly Gr = reconstruct_from_table(p, vars, gtab);
  const PolyHandle G = build_G(ctx_, i, K, *M1, cp_);

  // J polynomials from G reduced in every variable but the target.
  std::vector<std::pair<std::uint32_t, SparsePoly>> J_M2;
  for (auto j : M2) {
    const VarId ej = VarId::edge(j);
    const JPoly J = build_J(expand_handle(G, ej, &budget_), ej);
    const SparsePoly r = fermat_reduce(J.J);
    const SparsePoly shape = all_but_alpha(p, ej, alpha);
    const Fe b = r.coefficient(Monomial::var(ej, p - 1));
    const bool ok = b.v != 0 && r == scale(shape, b);
    check("L2", ok,
          "J(e" + std::to_string(j) + ") reduced " + (ok ? "equals " : "differs from ") +
              std::to_string(b.v) + " * prod_{l != alpha} (x - l)");
    J_M2.emplace_back(j, J.J);
  }
  const VarId ei = VarId::edge(i);
  const SparsePoly J_i = build_J(expand_handle(G, ei, &budget_), ei).J;

  BetaSelection sel;
  try {
    sel = select_beta(p, delta, alpha, J_M2, J_i);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyCandidateSet) throw;
    falsify("CL2", std::string("beta selection: ") + e.what());
    return;
  }
  state_.B = sel.B;
  state_.B_j = sel.B_j;
  state_.B_i = sel.B_i;
  rec.beta = sel.beta;
  const Fe beta = sel.beta;
  {
    std::ostringstream detail;
    bool ok = sel.postcondition_ok;
    detail << "beta = " << beta.v << "; " << sel.postcondition_detail;
    for (auto j : M2) {
      const auto k = linear_multiplicity_in(Gr, VarId::edge(j), beta);
      if (k != 1) {
        ok = false;
        detail << "multiplicity of beta in G' along e" << j << " is " << k << "; ";
      }
    }
    if (const auto k = linear_multiplicity_in(Gr, ei, beta); k != 0) {
      ok = false;
      detail << "(e_i - beta) divides G' " << k << " times; ";
    }
    check("CL2", ok, detail.str());
  }

  // L3: G with the (e_j - beta) palette factors removed against the quotient of G'.
  {
    FactoredPoly lhs(p);
    std::vector<std::uint32_t> pending = M2;
    for (const auto& f : G.factors.factors()) {
      auto it = std::find_if(pending.begin(), pending.end(), [&](auto j) {
        return f == SparsePoly::linear(p, VarId::edge(j), beta.v);
      });
      if (it != pending.end()) {
        pending.erase(it);
        continue;
      }
      lhs.push(f);
    }
    SparsePoly rhs = Gr;
    bool exact = true;
    for (auto j : M2) {
      auto d = divide_linear(rhs, VarId::edge(j), beta);
      exact = exact && d.remainder.is_zero();
      rhs = std::move(d.quotient);
    }
    const PolyHandle L{PolyKind::G, i, lhs, cp_};
    std::vector<Fe> bad;
    std::uint64_t tested = 0;
    auto compare = [&](const std::vector<Fe>& e) {
      ++tested;
      if (eval_charged(L, e, budget_) == eval(rhs, edge_point(e))) return false;
      bad = e;
      return true;
    };
    if (grid <= params_.grid_limit) {
      for_each_tuple(std::vector<std::vector<Fe>>(m, all_residues(p)), compare);
    } else {
      std::mt19937_64 rng(params_.seed ^ (std::uint64_t{i} << 32));
      std::vector<Fe> e(m);
      for (std::uint32_t s = 0; s < params_.l3_samples; ++s) {
        for (auto& x : e) x = Fe{static_cast<std::uint32_t>(rng() % p)};
        if (compare(e)) break;
      }
    }
    const bool ok = pending.empty() && exact && bad.empty();
    std::string detail = std::to_string(tested) + (grid <= params_.grid_limit ? " grid" : " sampled") +
                         " points";
    if (!pending.empty()) detail += "; palette factor (e_j - beta) missing for " + fmt_set(pending);
    if (!exact) detail += "; (e_j - beta) does not divide G'";
    if (!bad.empty()) detail += "; identity fails at " + fmt_point(bad);
    check("L3", ok, detail, bad);
  }

  // K polynomial and the Claim 3 re-check under the new palette.
  const KpolyResult kp = build_Kpoly(Gr, M2, i, delta, alpha, beta);
  const ColorSet K2 = ctx_.palette(beta);
  {
    std::vector<std::vector<Fe>> values(m, all_residues(p));
    for (std::uint32_t k = 0; k < i; ++k) values[k] = K2.elements();
    std::vector<Fe> found;
    for_each_tuple(values, [&](const std::vector<Fe>& e) {
      budget_.charge(1, "K polynomial search");
      if (eval(kp.K, edge_point(e)).v == 0) return false;
      found = e;
      return true;
    });
    check("CL3", !found.empty(),
          found.empty() ? "K polynomial vanishes with e_1..e_i in the new palette"
                        : "K polynomial nonzero at " + fmt_point(found) +
                              (kp.exact ? "" : " (inexact division by (e_j - beta))"),
          found);
  }
  const auto h = hypothesis_check(ctx_, i, K2, cp_, state_.point, budget_);
  if (h.kind == HypothesisResult::Kind::Inconclusive) {
    inconclusive("step " + std::to_string(i) + ": " + h.reason);
    return;
  }
  if (h.kind == HypothesisResult::Kind::NoWitness) {
    falsify("CL3", "no point with Q_i != 0 after alpha = " + std::to_string(beta.v));
    return;
  }
  check("CL3", true, "Q_i != 0 at " + fmt_point(h.point) + " with alpha = " + std::to_string(beta.v),
        h.point);
  rec.prefix_adopted = !h.prefix_kept;
  state_.point = h.point;
  state_.history.push_back({i, alpha, beta, "hypothesis 1 at step " + std::to_string(i)});
  report_.alpha_trace = state_.history;
  state_.alpha = beta;
}

RunReport Algorithm1::finish() {
  report_.final_alpha = state_.alpha;
  report_.alpha_trace = state_.history;
  report_.budget_spent = budget_.spent();
  if (report_.outcome == Outcome::Inconclusive && report_.reason.empty() && done_ &&
      state_.i > ctx_.m()) {
    report_.outcome = Outcome::Colored;
  }
  if (done_ && report_.reason.empty()) {
    const auto bad = std::find_if(report_.checks.begin(), report_.checks.end(),
                                  [](const ClaimCheck& c) { return !c.ok; });
    if (bad != report_.checks.end()) {
      report_.outcome = Outcome::Falsified;
      report_.falsified_claim = bad->claim;
      report_.falsified_step = bad->step;
      report_.falsified_witness = bad->witness;
      report_.reason = bad->detail;
    }
  }
  if (!done_) {
    report_.outcome = Outcome::Inconclusive;
    report_.reason = "run stopped before step " + std::to_string(state_.i);
  }
  return report_;
}

RunReport run(const Context& ctx, const AlgParams& params) {
  Algorithm1 a(ctx, params);
  if (a.start()) {
    while (a.step()) {
    }
  }
  return a.finish();
}

std::optional<ColorAssignment> extend_to_vertices(const Context& ctx, const std::vector<Fe>& edge_colors,
                                                  Fe alpha, Budget& budget) {
  if (edge_colors.size() != ctx.m()) {
    throw Error(ErrorCode::InvalidArgument, "edge assignment has the wrong length");
  }
  const PolyHandle P = build_P(ctx);
  const FactoredPoly Pe = substitute(P.factors, edge_point(edge_colors));
  std::vector<Fe> colors;
  for (std::uint32_t c = 1; c <= ctx.delta() + 1; ++c) colors.push_back(Fe{c});
  std::optional<ColorAssignment> out;
  for_each_tuple(std::vector<std::vector<Fe>>(ctx.n(), colors), [&](const std::vector<Fe>& v) {
    budget.charge(1, "vertex extension");
    Point pt;
    for (std::uint32_t k = 0; k < ctx.n(); ++k) pt[VarId::vertex(k + 1)] = v[k];
    if (eval(Pe, pt).v == 0) return false;
    ColorAssignment a(ctx.g, ctx.palette(alpha));
    for (std::uint32_t k = 0; k < ctx.n(); ++k) a.vertex[k] = v[k];
    for (std::uint32_t j = 0; j < ctx.m(); ++j) a.edge[j] = edge_colors[j];
    out = std::move(a);
    return true;
  });
  return out;
}

}  // namespace tcolor
