#include "tcolor/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace tcolor {

Context::Context(Graph graph, Prime prime_)
    : g(std::move(graph)), idx(build_neighbor_index(g)), prime(prime_) {
  if (g.m() < 1) throw Error(ErrorCode::InvalidArgument, "graph needs at least one edge");
  if (!is_prime(prime.value)) {
    throw Error(ErrorCode::NotPrime, std::to_string(prime.value) + " is not prime");
  }
  if (prime.value < g.delta + 3) {
    throw Error(ErrorCode::InvalidArgument, "p = " + std::to_string(prime.value) +
                                                " leaves no room for alpha (need p >= delta+3)");
  }
}

ColorSet Context::default_palette() const { return palette(Fe{delta() + 2}); }

const char* to_string(MonomialStrategy s) {
  return s == MonomialStrategy::GradedLex ? "gradedlex" : "lexmin";
}

std::optional<MonomialStrategy> parse_strategy(std::string_view s) {
  if (s == "gradedlex") return MonomialStrategy::GradedLex;
  if (s == "lexmin") return MonomialStrategy::LexMin;
  return std::nullopt;
}

const char* to_string(PolyKind k) {
  switch (k) {
    case PolyKind::T: return "T";
    case PolyKind::P: return "P";
    case PolyKind::E_i: return "E_i";
    case PolyKind::E_m: return "E_m";
    case PolyKind::Q_i: return "Q_i";
    case PolyKind::Z_i: return "Z_i";
    case PolyKind::G: return "G";
    case PolyKind::H: return "H";
    case PolyKind::Kpoly: return "K";
  }
  return "?";
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > Budget::kUnlimited / base) return Budget::kUnlimited;
    r *= base;
  }
  return r;
}

// prod_{l = delta+2}^{p} (a - l)
Fe vertex_palette(const Zp& F, std::uint32_t delta, Fe a) {
  Fe v{1};
  for (std::uint64_t l = delta + 2; l <= F.modulus(); ++l) {
    v = F.mul(v, F.sub(a, F.from_int(static_cast<std::int64_t>(l))));
  }
  return v;
}

// Depth-first walk over vertex colorings a in {1..colors}^n with running
// product; weight(k, a) gives the per-vertex factor, adjacency differences
// are applied on the fly and zero branches are cut.
template <class Weight, class Leaf>
void walk_colorings(const Zp& F, std::uint32_t n, std::uint32_t colors,
                    const std::vector<std::vector<std::uint32_t>>& earlier, Weight&& weight,
                    Leaf&& leaf) {
  std::vector<std::uint32_t> a(n + 1, 0);
  std::function<void(std::uint32_t, Fe)> rec = [&](std::uint32_t k, Fe acc) {
    if (k > n) {
      leaf(a, acc);
      return;
    }
    for (std::uint32_t c = 1; c <= colors; ++c) {
      Fe w = weight(k, c);
      if (w.v == 0) continue;
      for (auto j : earlier[k]) {
        w = F.mul(w, F.sub(Fe{a[j]}, Fe{c}));
        if (w.v == 0) break;
      }
      if (w.v == 0) continue;
      a[k] = c;
      rec(k + 1, F.mul(acc, w));
    }
    a[k] = 0;
  };
  rec(1, Fe{1});
}

std::vector<std::vector<std::uint32_t>> earlier_neighbors(const Context& ctx) {
  std::vector<std::vector<std::uint32_t>> out(ctx.n() + 1);
  for (std::uint32_t i = 1; i <= ctx.n(); ++i) {
    for (auto j : ctx.idx.Nvi[i]) out[j].push_back(i);
  }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

// --------------------------------------------------------------- CpEvaluator

CpEvaluator::CpEvaluator(const Context& ctx, std::vector<std::uint32_t> exponents)
    : p_(ctx.p()),
      n_(ctx.n()),
      m_(ctx.m()),
      colors_(ctx.delta() + 1),
      exponents_(std::move(exponents)),
      earlier_neighbors_(earlier_neighbors(ctx)),
      edges_(ctx.g.edges),
      incident_(ctx.idx.Ne_v) {
  if (exponents_.size() != n_) {
    throw Error(ErrorCode::InvalidArgument, "need one exponent per vertex");
  }
  for (auto l : exponents_) {
    if (l > p_ - 1) throw Error(ErrorCode::ExponentTooLarge, std::to_string(l) + " > p-1");
  }
  const Zp F(p_);
  std::vector<std::vector<Fe>> rows(colors_ + 1);
  for (std::uint32_t a = 1; a <= colors_; ++a) rows[a] = lagrange_basis_row(p_, Fe{a});
  base_.assign(n_ + 1, std::vector<Fe>(colors_, Fe{0}));
  for (std::uint32_t k = 1; k <= n_; ++k) {
    for (std::uint32_t a = 1; a <= colors_; ++a) {
      base_[k][a - 1] =
          F.mul(rows[a][exponents_[k - 1]], vertex_palette(F, colors_ - 1, Fe{a}));
    }
  }
  cost_ = saturating_pow(colors_, n_);
}

template <class Visit>
void CpEvaluator::for_each_coloring(Visit&& visit) const {
  const Zp F(p_);
  walk_colorings(
      F, n_, colors_, earlier_neighbors_,
      [&](std::uint32_t k, std::uint32_t a) { return base_[k][a - 1]; }, visit);
}

Fe CpEvaluator::eval(std::span<const Fe> e) const {
  if (e.size() != m_) throw Error(ErrorCode::MissingVariable, "edge point has wrong length");
  const Zp F(p_);
  Fe total{0};
  walk_colorings(
      F, n_, colors_, earlier_neighbors_,
      [&](std::uint32_t k, std::uint32_t a) {
        Fe w = base_[k][a - 1];
        for (auto t : incident_[k]) {
          if (w.v == 0) break;
          w = F.mul(w, F.sub(Fe{a}, e[t - 1]));
        }
        return w;
      },
      [&](const std::vector<std::uint32_t>&, Fe value) { total = F.add(total, value); });
  return total;
}

Fe CpEvaluator::eval(const Point& point) const {
  std::vector<Fe> e(m_);
  for (std::uint32_t j = 1; j <= m_; ++j) {
    auto it = point.find(VarId::edge(j));
    if (it == point.end()) throw Error(ErrorCode::MissingVariable, VarId::edge(j).name());
    e[j - 1] = it->second;
  }
  return eval(e);
}

Fe CpEvaluator::eval(std::span<const Fe> e, Budget& budget) const {
  budget.charge(cost_, "C^P' evaluation");
  return eval(e);
}

SparsePoly CpEvaluator::symbolic(Budget* budget) const {
  const std::uint64_t terms = saturating_pow(3, m_);
  if (budget) {
    const std::uint64_t work = cost_ > Budget::kUnlimited / terms ? Budget::kUnlimited : cost_ * terms;
    budget->charge(work, "symbolic C^P'");
  }
  const Zp F(p_);
  // Dense table over exponent vectors in {0,1,2}^m, digit j-1 for e_j.
  std::vector<Fe> table(terms, Fe{0});
  std::vector<std::uint64_t> stride(m_ + 1, 1);
  for (std::uint32_t j = 1; j <= m_; ++j) stride[j] = stride[j - 1] * 3;
  std::vector<std::array<Fe, 3>> quad(m_);
  for_each_coloring([&](const std::vector<std::uint32_t>& a, Fe value) {
    // (a_u - e)(a_v - e) = e^2 - (a_u + a_v) e + a_u a_v
    for (std::uint32_t j = 0; j < m_; ++j) {
      const auto [u, v] = edges_[j];
      quad[j] = {F.mul(Fe{a[u]}, Fe{a[v]}), F.neg(F.add(Fe{a[u]}, Fe{a[v]})), Fe{1}};
    }
    std::function<void(std::uint32_t, std::uint64_t, Fe)> spread = [&](std::uint32_t j,
                                                                       std::uint64_t pos, Fe c) {
      if (j == m_) {
        table[pos] = F.add(table[pos], c);
        return;
      }
      for (std::uint32_t d = 0; d < 3; ++d) {
        if (quad[j][d].v != 0) spread(j + 1, pos + d * stride[j], F.mul(c, quad[j][d]));
      }
    };
    spread(0, 0, value);
  });
  SparsePoly out(p_);
  std::vector<Monomial::Factor> exps;
  for (std::uint64_t idx = 0; idx < terms; ++idx) {
    if (table[idx].v == 0) continue;
    exps.clear();
    std::uint64_t rest = idx;
    for (std::uint32_t j = 1; j <= m_; ++j) {
      if (rest % 3) exps.emplace_back(VarId::edge(j), rest % 3);
      rest /= 3;
    }
    out.add_term(Monomial(exps), table[idx]);
  }
  return out;
}

// ------------------------------------------------------ vertex monomial

VertexMonomialChoice choose_vertex_monomial(const Context& ctx, MonomialStrategy strategy,
                                            Budget& budget) {
  const std::uint32_t p = ctx.p(), n = ctx.n(), colors = ctx.delta() + 1;
  const Zp F(p);
  // Support of P(v, 0) with its values: P(a, 0) = prod pal(a_k) a_k^{deg k} prod (a_i - a_j).
  struct SupportPoint {
    std::vector<std::uint32_t> a;
    Fe value;
  };
  std::vector<SupportPoint> support;
  budget.charge(saturating_pow(colors, n), "P(v,0) support");
  walk_colorings(
      F, n, colors, earlier_neighbors(ctx),
      [&](std::uint32_t k, std::uint32_t a) {
        return F.mul(vertex_palette(F, ctx.delta(), Fe{a}),
                     F.pow(Fe{a}, ctx.idx.Ne_v[k].size()));
      },
      [&](const std::vector<std::uint32_t>& a, Fe value) { support.push_back({a, value}); });
  if (support.empty()) {
    throw Error(ErrorCode::ZeroPolynomial, "P(v, 0) vanishes at every point of the grid");
  }
  std::vector<std::vector<Fe>> rows(colors + 1);
  for (std::uint32_t a = 1; a <= colors; ++a) rows[a] = lagrange_basis_row(p, Fe{a});

  VertexMonomialChoice choice;
  choice.strategy = strategy;
  std::vector<std::uint32_t> l(n, 1);
  auto coefficient = [&]() {
    budget.charge(support.size(), "vertex monomial coefficient");
    ++choice.tuples_examined;
    Fe c{0};
    for (const auto& s : support) {
      Fe term = s.value;
      for (std::uint32_t k = 0; k < n && term.v != 0; ++k) {
        term = F.mul(term, rows[s.a[k + 1]][l[k]]);
      }
      c = F.add(c, term);
    }
    return c;
  };
  auto found = [&]() {
    const Fe c = coefficient();
    if (c.v == 0) return false;
    choice.exponents = l;
    choice.coefficient_at_zero = c;
    return true;
  };

  // The weight of exponent 0 at a is [a == 0] and the support avoids 0, so
  // only exponents in 1..p-1 can carry a nonzero coefficient.
  if (strategy == MonomialStrategy::GradedLex) {
    std::function<bool(std::uint32_t, std::uint64_t)> rec = [&](std::uint32_t k,
                                                                std::uint64_t remaining) {
      if (k == n) return remaining == 0 && found();
      const std::uint64_t slots = n - k - 1;
      const std::uint64_t hi = std::min<std::uint64_t>(p - 1, remaining - slots);
      const std::uint64_t lo =
          remaining > slots * (p - 1) ? remaining - slots * (p - 1) : 1;
      for (std::uint64_t e = hi + 1; e-- > std::max<std::uint64_t>(lo, 1);) {
        l[k] = static_cast<std::uint32_t>(e);
        if (rec(k + 1, remaining - e)) return true;
      }
      return false;
    };
    for (std::uint64_t total = static_cast<std::uint64_t>(n) * (p - 1); total >= n; --total) {
      if (rec(0, total)) return choice;
    }
  } else {
    std::function<bool(std::uint32_t)> rec = [&](std::uint32_t k) {
      if (k == n) return found();
      for (std::uint32_t e = 1; e <= p - 1; ++e) {
        l[k] = e;
        if (rec(k + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return choice;
  }
  throw Error(ErrorCode::InvariantViolation,
              "P(v, 0) is nonzero on the grid but no monomial has a nonzero coefficient");
}

Fe eval_CP_generic(const Context& ctx, std::span<const std::uint32_t> exponents,
                   std::span<const Fe> e, Budget* budget) {
  const PolyHandle P = build_P(ctx);
  const FactoredPoly specialized = substitute(P.factors, edge_point(e));
  std::vector<VarId> targets;
  for (std::uint32_t i = 1; i <= ctx.n(); ++i) targets.push_back(VarId::vertex(i));
  const Evaluable f(ctx.p(), targets,
                    [specialized](const Point& pt) { return tcolor::eval(specialized, pt); });
  const Evaluable c = coeff_extract(f, targets, {exponents.begin(), exponents.end()}, budget);
  return c.eval({});
}

// ------------------------------------------------------------- handles

Fe PolyHandle::eval(const Point& point) const {
  const Fe v = tcolor::eval(factors, point);
  if (v.v == 0 || !cp) return v;
  return Zp(factors.modulus()).mul(v, cp->eval(point));
}

std::set<VarId> PolyHandle::variables() const {
  std::set<VarId> vars = factors.variables();
  if (cp) {
    for (std::uint32_t j = 1; j <= cp->edge_count(); ++j) vars.insert(VarId::edge(j));
  }
  return vars;
}

std::vector<VarId> edge_vars(std::uint32_t m) {
  std::vector<VarId> out;
  for (std::uint32_t j = 1; j <= m; ++j) out.push_back(VarId::edge(j));
  return out;
}

Point edge_point(std::span<const Fe> e) {
  Point pt;
  for (std::size_t j = 0; j < e.size(); ++j) {
    pt[VarId::edge(static_cast<std::uint32_t>(j + 1))] = e[j];
  }
  return pt;
}

PolyHandle build_P(const Context& ctx) {
  const std::uint32_t p = ctx.p();
  PolyHandle h{PolyKind::P, 0, FactoredPoly(p), nullptr};
  for (std::uint32_t i = 1; i <= ctx.n(); ++i) {
    const VarId vi = VarId::vertex(i);
    for (auto j : ctx.idx.Nvi[i]) h.factors.push(SparsePoly::difference(p, vi, VarId::vertex(j)));
    for (auto j : ctx.idx.Ne_v[i]) h.factors.push(SparsePoly::difference(p, vi, VarId::edge(j)));
    for (std::uint64_t l = ctx.delta() + 2; l <= p; ++l) {
      h.factors.push(SparsePoly::linear(p, vi, static_cast<std::int64_t>(l)));
    }
  }
  return h;
}

PolyHandle build_E_i(const Context& ctx, std::uint32_t i, const ColorSet& K) {
  if (i < 1 || i > ctx.m()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
  const std::uint32_t p = ctx.p();
  PolyHandle h{PolyKind::E_i, i, FactoredPoly(p), nullptr};
  const VarId ei = VarId::edge(i);
  for (auto j : ctx.idx.Nei[i]) h.factors.push(SparsePoly::difference(p, ei, VarId::edge(j)));
  for (std::uint32_t l = 0; l < p; ++l) {
    if (!K.contains(Fe{l})) h.factors.push(SparsePoly::linear(p, ei, l));
  }
  return h;
}

PolyHandle build_E_m(const Context& ctx, const ColorSet& K) {
  PolyHandle h{PolyKind::E_m, ctx.m(), FactoredPoly(ctx.p()), nullptr};
  for (std::uint32_t i = 1; i <= ctx.m(); ++i) h.factors.append(build_E_i(ctx, i, K).factors);
  return h;
}

PolyHandle build_T(const Context& ctx, const ColorSet& K) {
  PolyHandle h = build_P(ctx);
  h.kind = PolyKind::T;
  h.factors.append(build_E_m(ctx, K).factors);
  return h;
}

PolyHandle build_Q(const Context& ctx, std::uint32_t i, const ColorSet& K,
                   std::shared_ptr<const CpEvaluator> cp) {
  if (i > ctx.m()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
  PolyHandle h{PolyKind::Q_i, i, FactoredPoly(ctx.p()), std::move(cp)};
  for (std::uint32_t j = 1; j <= i; ++j) h.factors.append(build_E_i(ctx, j, K).factors);
  return h;
}

std::vector<std::uint32_t> z_edge_set(const Context& ctx, std::uint32_t i) {
  if (i < 1 || i > ctx.m()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
  const auto [u, v] = ctx.g.edge(i);
  const auto du = ctx.idx.Nv[u].size(), dv = ctx.idx.Nv[v].size();
  const std::uint32_t s = du > dv ? u : dv > du ? v : std::min(u, v);
  return ctx.idx.Ne_v[s];
}

PolyHandle build_Z(const Context& ctx, std::uint32_t i, std::shared_ptr<const CpEvaluator> cp) {
  const std::uint32_t p = ctx.p();
  const auto S = z_edge_set(ctx, i);
  PolyHandle h{PolyKind::Z_i, i, FactoredPoly(p), std::move(cp)};
  for (std::size_t a = 0; a < S.size(); ++a) {
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      h.factors.push(SparsePoly::difference(p, VarId::edge(S[a]), VarId::edge(S[b])));
    }
  }
  for (auto j : S) {
    for (std::uint64_t l = ctx.delta() + 3; l <= p; ++l) {
      h.factors.push(SparsePoly::linear(p, VarId::edge(j), static_cast<std::int64_t>(l)));
    }
  }
  return h;
}

ZeroTest check_Z_nonzero(const Context& ctx, std::uint32_t i,
                         std::shared_ptr<const CpEvaluator> cp, Budget& budget) {
  const PolyHandle Z = build_Z(ctx, i, cp);
  const auto S = z_edge_set(ctx, i);
  const std::uint32_t m = ctx.m(), p = ctx.p(), small = ctx.delta() + 2;
  std::vector<bool> in_s(m + 1, false);
  for (auto j : S) in_s[j] = true;

  // Coordinates in S are nonzero only on {1..delta+2}; others range over
  // {1..delta+2} first, then over all of Z_p.
  for (int phase = 0; phase < 2; ++phase) {
    std::vector<std::vector<std::uint32_t>> values(m + 1);
    for (std::uint32_t j = 1; j <= m; ++j) {
      const std::uint32_t lo = (in_s[j] || phase == 0) ? 1 : 0;
      const std::uint32_t hi = (in_s[j] || phase == 0) ? small : p - 1;
      for (std::uint32_t c = lo; c <= hi; ++c) values[j].push_back(c);
    }
    std::vector<std::size_t> pos(m + 1, 0);
    std::vector<Fe> e(m);
    while (true) {
      bool skip = false;
      bool all_small = true;
      for (std::uint32_t j = 1; j <= m; ++j) {
        e[j - 1] = Fe{values[j][pos[j]]};
        if (!in_s[j] && (e[j - 1].v < 1 || e[j - 1].v > small)) all_small = false;
      }
      // First coordinate repeating an earlier S coordinate; every point
      // below it in the odometer order repeats too, so jump past them.
      std::uint32_t clash = 0;
      for (std::size_t b = 1; b < S.size() && !clash; ++b) {
        for (std::size_t a = 0; a < b; ++a) {
          if (e[S[a] - 1] == e[S[b] - 1]) clash = std::max(S[a], S[b]);
        }
      }
      if (clash) {
        skip = true;
        for (std::uint32_t k = clash + 1; k <= m; ++k) pos[k] = values[k].size() - 1;
      }
      if (phase == 1 && all_small) skip = true;
      if (!budget.can_afford(1)) {
        return {ZeroTest::Kind::Inconclusive, {}, "Z_i point search exceeded budget"};
      }
      budget.charge(1, "Z_i point search");
      if (!skip) {
        if (!budget.can_afford(cp->cost())) {
          return {ZeroTest::Kind::Inconclusive, {}, "Z_i point search exceeded budget"};
        }
        budget.charge(cp->cost(), "Z_i point search");
        const Point pt = edge_point(e);
        if (Z.eval(pt).v != 0) return {ZeroTest::Kind::NonZero, pt, "grid witness"};
      }
      std::uint32_t j = m;
      while (j >= 1) {
        if (++pos[j] < values[j].size()) break;
        pos[j] = 0;
        --j;
      }
      if (j == 0) break;
    }
  }
  return {ZeroTest::Kind::Zero, {}, "Z_i vanishes on the whole grid"};
}

PolyHandle build_G(const Context& ctx, std::uint32_t i, const ColorSet& K,
                   std::span<const std::uint32_t> M1, std::shared_ptr<const CpEvaluator> cp) {
  if (i < 1 || i > ctx.m()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
  PolyHandle h = build_Q(ctx, i - 1, K, std::move(cp));
  h.kind = PolyKind::G;
  h.index = i;
  for (auto j : M1) {
    if (j < 1 || j >= i) throw Error(ErrorCode::InvalidArgument, "M1 must lie in e_1..e_{i-1}");
    h.factors.push(SparsePoly::linear(ctx.p(), VarId::edge(j), K.alpha().v));
  }
  return h;
}

SparsePoly expand_handle(const PolyHandle& h, std::optional<VarId> keep, Budget* budget) {
  SparsePoly acc = h.cp ? h.cp->symbolic(budget) : SparsePoly::constant(h.factors.modulus(), 1);
  for (const auto& f : h.factors.factors()) acc = mul_reduced(acc, f, keep, budget);
  return acc;
}

SparsePoly build_H(const SparsePoly& G_reduced, std::uint32_t j, Fe alpha) {
  return mul(G_reduced, SparsePoly::linear(G_reduced.modulus(), VarId::edge(j), alpha.v));
}

JPoly build_J(const SparsePoly& G_except_target, VarId target) {
  std::map<Monomial, SparsePoly, GrlexLess> groups;
  const std::uint32_t p = G_except_target.modulus();
  for (const auto& [m, c] : G_except_target.terms()) {
    auto [it, inserted] = groups.try_emplace(m.without(target), SparsePoly(p));
    it->second.add_term(Monomial::var(target, m.exponent(target)), c);
  }
  if (groups.empty()) throw Error(ErrorCode::ZeroPolynomial, "no monomial to take J from");
  auto last = std::prev(groups.end());
  return {last->second, last->first};
}

KpolyResult build_Kpoly(const SparsePoly& G_reduced, std::span<const std::uint32_t> M2,
                        std::uint32_t i, std::uint32_t delta, Fe alpha, Fe beta) {
  const std::uint32_t p = G_reduced.modulus();
  KpolyResult out{G_reduced, true, {}};
  for (auto j : M2) {
    LinearDivision d = divide_linear(out.K, VarId::edge(j), beta);
    if (!d.remainder.is_zero()) {
      out.exact = false;
      out.inexact_edges.push_back(j);
    }
    out.K = std::move(d.quotient);
  }
  // Only values of K are used, so products are kept Fermat-reduced.
  for (auto j : M2) out.K = mul_reduced(out.K, SparsePoly::linear(p, VarId::edge(j), alpha.v));
  for (std::uint32_t l = 0; l < p; ++l) {
    if ((l >= 1 && l <= delta + 1) || l == beta.v) continue;
    out.K = mul_reduced(out.K, SparsePoly::linear(p, VarId::edge(i), l));
  }
  return out;
}

}  // namespace tcolor
