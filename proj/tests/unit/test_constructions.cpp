#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcolor/constructions.hpp"

using namespace tcolor;

namespace {

Context make_ctx(const char* edges, std::uint32_t p) {
  const Graph g = parse_graph(edges);
  return Context(g, select_prime(g.m(), g.delta, p));
}

// P as linear forms over (v_1..v_n, e_1..e_m), read straight off the product.
std::vector<oracle::Linear> oracle_P(const Graph& g, std::uint32_t p) {
  const std::size_t nv = g.n + g.m();
  std::vector<oracle::Linear> out;
  auto lin = [&] { return oracle::Linear{std::vector<std::int64_t>(nv, 0), 0}; };
  for (std::uint32_t i = 1; i <= g.n; ++i) {
    for (std::uint32_t j = 1; j <= g.m(); ++j) {
      const auto [a, b] = g.edge(j);
      if (a == i || b == i) {
        auto L = lin();
        L.coeff[i - 1] = 1;
        L.coeff[g.n + j - 1] = -1;
        out.push_back(L);
        const std::uint32_t other = a == i ? b : a;
        if (other > i) {
          auto D = lin();
          D.coeff[i - 1] = 1;
          D.coeff[other - 1] = -1;
          out.push_back(D);
        }
      }
    }
    for (std::uint32_t l = g.delta + 2; l <= p; ++l) {
      auto L = lin();
      L.coeff[i - 1] = 1;
      L.constant = -static_cast<std::int64_t>(l);
      out.push_back(L);
    }
  }
  return out;
}

// Coefficient of prod v_k^{l_k} in the reduced expansion, evaluated at e.
std::uint64_t oracle_CP(const oracle::Dense& reduced, std::uint32_t n,
                        const std::vector<std::uint32_t>& l, const std::vector<std::uint64_t>& e,
                        std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& [ex, c] : reduced) {
    if (!std::equal(l.begin(), l.end(), ex.begin())) continue;
    std::uint64_t t = c;
    for (std::size_t j = 0; j < e.size(); ++j) t = t * oracle::powmod(e[j], ex[n + j], p) % p;
    total = (total + t) % p;
  }
  return total;
}

std::vector<std::vector<std::uint32_t>> all_tuples(std::uint32_t len, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (std::uint32_t k = 0; k < len; ++k) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& t : out) {
      for (std::uint32_t a = 0; a < p; ++a) {
        auto u = t;
        u.push_back(a);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

Point full_point(const Graph& g, const std::vector<std::uint32_t>& t) {
  Point pt;
  for (std::uint32_t i = 1; i <= g.n; ++i) pt[VarId::vertex(i)] = Fe{t[i - 1]};
  for (std::uint32_t j = 1; j <= g.m(); ++j) pt[VarId::edge(j)] = Fe{t[g.n + j - 1]};
  return pt;
}

bool proper_total(const Graph& g, const ColorSet& K, const std::vector<std::uint32_t>& t) {
  for (std::uint32_t i = 0; i < g.n; ++i) {
    if (t[i] < 1 || t[i] > g.delta + 1) return false;
  }
  ColorAssignment c(g, K);
  for (std::uint32_t i = 0; i < g.n; ++i) c.vertex[i] = Fe{t[i]};
  for (std::uint32_t j = 0; j < g.m(); ++j) c.edge[j] = Fe{t[g.n + j]};
  return verify_total_coloring(g, c).ok;
}

bool proper_edge(const Graph& g, const ColorSet& K, const std::vector<std::uint32_t>& e) {
  for (std::uint32_t j = 1; j <= g.m(); ++j) {
    if (!K.contains(Fe{e[j - 1]})) return false;
    for (std::uint32_t k = j + 1; k <= g.m(); ++k) {
      if (g.edges_adjacent(j, k) && e[j - 1] == e[k - 1]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("context validation") {
    const Graph p3 = parse_graph("1 2\n2 3");
    CHECK_THROWS_AS(Context(p3, select_prime(2, 2, 3)), Error);
    CHECK_NOTHROW(Context(p3, select_prime(2, 2, 5)));
    CHECK(make_ctx("1 2", 5).default_palette().alpha() == Fe{3});
  }

  TEST_CASE("P for K2 over Z_5") {
    const auto ctx = make_ctx("1 2", 5);
    const auto P = build_P(ctx);
    CHECK(P.factors.factors().size() == 9);
    const VarId v1 = VarId::vertex(1), v2 = VarId::vertex(2), e1 = VarId::edge(1);
    CHECK(P.eval({{v1, Fe{1}}, {v2, Fe{2}}, {e1, Fe{3}}}) != Fe{0});
    CHECK(P.eval({{v1, Fe{2}}, {v2, Fe{2}}, {e1, Fe{3}}}) == Fe{0});
    // Residue 0 is excluded from vertex colors.
    CHECK(P.eval({{v1, Fe{0}}, {v2, Fe{2}}, {e1, Fe{3}}}) == Fe{0});
    CHECK(P.eval({{v1, Fe{3}}, {v2, Fe{2}}, {e1, Fe{1}}}) == Fe{0});
  }

  TEST_CASE("E^i examples") {
    const auto k2 = make_ctx("1 2", 5);
    const auto E1 = build_E_i(k2, 1, k2.default_palette());
    const auto expected = SparsePoly::linear(5, VarId::edge(1), 0) * SparsePoly::linear(5, VarId::edge(1), 4);
    CHECK(E1.factors.expand() == expected);
    const auto at3 = substitute(E1.factors, {{VarId::edge(1), Fe{3}}});
    CHECK(at3.factors().size() == 1);
    CHECK(at3.factors()[0] == SparsePoly::constant(5, 2));

    const auto p3 = make_ctx("1 2\n2 3", 29);
    const auto Em = build_E_m(p3, p3.default_palette());
    CHECK(Em.eval(edge_point(std::vector<Fe>{Fe{1}, Fe{1}})) == Fe{0});
    CHECK(Em.eval(edge_point(std::vector<Fe>{Fe{1}, Fe{2}})) != Fe{0});
  }

  TEST_CASE("T and E_m characterizations, exhaustive") {
    for (const char* edges : {"1 2", "1 2\n2 3"}) {
      for (std::uint32_t p : {5u, 7u}) {
        const auto ctx = make_ctx(edges, p);
        const auto& g = ctx.g;
        for (std::uint32_t alpha = g.delta + 2; alpha < p; ++alpha) {
          const ColorSet K = ctx.palette(Fe{alpha});
          const auto T = build_T(ctx, K);
          const auto Em = build_E_m(ctx, K);
          for (const auto& t : all_tuples(g.n + g.m(), p)) {
            CHECK((T.eval(full_point(g, t)) != Fe{0}) == proper_total(g, K, t));
          }
          for (const auto& e : all_tuples(g.m(), p)) {
            std::vector<Fe> fe;
            for (auto x : e) fe.push_back(Fe{x});
            CHECK((Em.eval(edge_point(fe)) != Fe{0}) == proper_edge(g, K, e));
          }
        }
      }
    }
  }

  TEST_CASE("vertex monomial for K2 matches naive expansion") {
    const auto ctx = make_ctx("1 2", 5);
    Budget b;
    const auto choice = choose_vertex_monomial(ctx, MonomialStrategy::GradedLex, b);
    CHECK(choice.exponents == std::vector<std::uint32_t>{4, 3});
    CHECK(choice.coefficient_at_zero == Fe{2});

    // Graded-lex greatest (v1 first) nonzero monomial of the reduced P(v, 0).
    const auto reduced = oracle::reduce(oracle::expand(oracle_P(ctx.g, 5), 3, 5), 5);
    oracle::Dense at_zero;
    for (const auto& [ex, c] : reduced) {
      if (ex[2] == 0) at_zero[{ex[0], ex[1]}] = c;
    }
    std::pair<std::uint32_t, std::uint32_t> best{0, 0};
    std::uint64_t best_c = 0;
    for (const auto& [ex, c] : at_zero) {
      const auto key = std::make_pair(ex[0] + ex[1], ex[0]);
      if (key > std::make_pair(best.first + best.second, best.first)) {
        best = {ex[0], ex[1]};
        best_c = c;
      }
    }
    CHECK(best == std::pair<std::uint32_t, std::uint32_t>{4, 3});
    CHECK(best_c == 2);
  }

  TEST_CASE("lexmin picks a small nonzero tuple") {
    const auto ctx = make_ctx("1 2\n2 3", 29);
    Budget b;
    const auto choice = choose_vertex_monomial(ctx, MonomialStrategy::LexMin, b);
    CHECK(choice.coefficient_at_zero != Fe{0});
    for (auto l : choice.exponents) CHECK(l <= ctx.delta() + 1);
    const CpEvaluator cp(ctx, choice.exponents);
    CHECK(cp.eval(std::vector<Fe>{Fe{0}, Fe{0}}) == choice.coefficient_at_zero);
  }

  TEST_CASE("strategy names") {
    CHECK(parse_strategy("gradedlex") == MonomialStrategy::GradedLex);
    CHECK(parse_strategy("lexmin") == MonomialStrategy::LexMin);
    CHECK_FALSE(parse_strategy("other").has_value());
    CHECK(std::string(to_string(MonomialStrategy::LexMin)) == "lexmin");
  }

  TEST_CASE("CP routes agree on K2 with the expansion oracle") {
    const auto ctx = make_ctx("1 2", 5);
    const auto reduced = oracle::reduce(oracle::expand(oracle_P(ctx.g, 5), 3, 5), 5);
    for (std::uint32_t l1 = 1; l1 < 5; ++l1) {
      for (std::uint32_t l2 = 1; l2 < 5; ++l2) {
        const std::vector<std::uint32_t> l{l1, l2};
        const CpEvaluator cp(ctx, l);
        const auto sym = cp.symbolic();
        for (std::uint32_t e = 0; e < 5; ++e) {
          const std::vector<Fe> pt{Fe{e}};
          const auto want = oracle_CP(reduced, 2, l, {e}, 5);
          CHECK(cp.eval(pt).v == want);
          CHECK(eval_CP_generic(ctx, l, pt).v == want);
          CHECK(eval(sym, edge_point(pt)).v == want);
        }
      }
    }
  }

  TEST_CASE("CP routes agree on P3 and the degree bound holds") {
    const auto ctx = make_ctx("1 2\n2 3", 29);
    Budget b;
    const auto choice = choose_vertex_monomial(ctx, MonomialStrategy::GradedLex, b);
    const CpEvaluator cp(ctx, choice.exponents);
    const auto sym = cp.symbolic();
    CHECK(sym.max_var_degree() <= 2);
    CHECK(eval(sym, edge_point(std::vector<Fe>{Fe{0}, Fe{0}})) == choice.coefficient_at_zero);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 4; ++t) {
      const std::vector<Fe> e{Fe{static_cast<std::uint32_t>(rng() % 29)},
                              Fe{static_cast<std::uint32_t>(rng() % 29)}};
      const Fe a = cp.eval(e);
      CHECK(eval_CP_generic(ctx, choice.exponents, e) == a);
      CHECK(eval(sym, edge_point(e)) == a);
    }
    // Full-grid reconstruction agrees with the symbolic form.
    const Evaluable f(29, edge_vars(2), [&cp](const Point& pt) { return cp.eval(pt); });
    CHECK(reconstruct_from_grid(f, edge_vars(2)) == sym);
  }

  TEST_CASE("CP degree bound on a triangle and a star") {
    for (const char* edges : {"1 2\n2 3\n1 3", "1 2\n1 3\n1 4"}) {
      const Graph g = parse_graph(edges);
      const Context ctx(g, select_prime(g.m(), g.delta, 13));
      Budget b;
      const auto choice = choose_vertex_monomial(ctx, MonomialStrategy::GradedLex, b);
      const CpEvaluator cp(ctx, choice.exponents);
      const auto sym = cp.symbolic();
      CHECK(sym.max_var_degree() <= 2);
      const Evaluable f(13, edge_vars(g.m()), [&cp](const Point& pt) { return cp.eval(pt); });
      CHECK(reconstruct_from_grid(f, edge_vars(g.m())) == sym);
    }
  }

  TEST_CASE("budget stops CP evaluation") {
    const auto ctx = make_ctx("1 2\n2 3", 29);
    const CpEvaluator cp(ctx, {1, 1, 1});
    Budget tiny(cp.cost() - 1);
    CHECK_THROWS_AS(cp.eval(std::vector<Fe>{Fe{1}, Fe{2}}, tiny), Error);
  }

  TEST_CASE("Q examples and factorization") {
    const auto k2 = make_ctx("1 2", 5);
    Budget b;
    const auto choice = choose_vertex_monomial(k2, MonomialStrategy::GradedLex, b);
    const auto cp = std::make_shared<const CpEvaluator>(k2, choice.exponents);
    const auto K = k2.default_palette();
    const auto Q1 = build_Q(k2, 1, K, cp);
    const std::vector<Fe> three{Fe{3}};
    CHECK(Q1.eval(edge_point(three)) == Zp(5).mul(Fe{2}, cp->eval(three)));
    CHECK(build_Q(k2, 0, K, cp).eval(edge_point(three)) == cp->eval(three));

    const auto p3 = make_ctx("1 2\n2 3", 29);
    const auto c3 = choose_vertex_monomial(p3, MonomialStrategy::GradedLex, b);
    const auto cp3 = std::make_shared<const CpEvaluator>(p3, c3.exponents);
    const auto K3 = p3.default_palette();
    const auto Q2 = build_Q(p3, 2, K3, cp3);
    const auto Em = build_E_m(p3, K3);
    const Zp F(29);
    for (std::uint32_t a = 0; a < 29; a += 3) {
      for (std::uint32_t c = 0; c < 29; c += 2) {
        const std::vector<Fe> e{Fe{a}, Fe{c}};
        const Point pt = edge_point(e);
        CHECK(Q2.eval(pt) == F.mul(cp3->eval(e), Em.eval(pt)));
      }
    }
    CHECK(Q2.eval(edge_point(std::vector<Fe>{Fe{2}, Fe{2}})) == Fe{0});
    CHECK(Q2.eval(edge_point(std::vector<Fe>{Fe{7}, Fe{2}})) == Fe{0});
  }

  TEST_CASE("expand_handle agrees with point evaluation") {
    const auto ctx = make_ctx("1 2\n2 3", 7);
    Budget b;
    const auto choice = choose_vertex_monomial(ctx, MonomialStrategy::GradedLex, b);
    const auto cp = std::make_shared<const CpEvaluator>(ctx, choice.exponents);
    const auto Q = build_Q(ctx, 2, ctx.default_palette(), cp);
    const auto full = expand_handle(Q, std::nullopt, nullptr);
    const auto keep = expand_handle(Q, VarId::edge(1), nullptr);
    CHECK(full.max_var_degree() <= 6);
    CHECK(fermat_reduce(keep) == full);
    for (std::uint32_t a = 0; a < 7; ++a) {
      for (std::uint32_t c = 0; c < 7; ++c) {
        const Point pt = edge_point(std::vector<Fe>{Fe{a}, Fe{c}});
        CHECK(eval(full, pt) == Q.eval(pt));
      }
    }
  }

  TEST_CASE("Z examples") {
    const auto k2 = make_ctx("1 2", 5);
    CHECK(z_edge_set(k2, 1) == std::vector<std::uint32_t>{1});
    Budget b;
    const auto choice = choose_vertex_monomial(k2, MonomialStrategy::GradedLex, b);
    const auto cp = std::make_shared<const CpEvaluator>(k2, choice.exponents);
    const auto Z = build_Z(k2, 1, cp);
    CHECK(Z.factors.factors().size() == 2);  // (e1-4)(e1-5)
    CHECK(check_Z_nonzero(k2, 1, cp, b).kind == ZeroTest::Kind::NonZero);
    const auto zk = expand_handle(Z, std::nullopt, nullptr);
    CHECK(zk.degree_in(VarId::edge(1)) <= 2 + (5 - 3));

    const auto p3 = make_ctx("1 2\n2 3", 29);
    CHECK(z_edge_set(p3, 1) == std::vector<std::uint32_t>{1, 2});
    CHECK(z_edge_set(p3, 2) == std::vector<std::uint32_t>{1, 2});
    const auto c3 = choose_vertex_monomial(p3, MonomialStrategy::GradedLex, b);
    const auto cp3 = std::make_shared<const CpEvaluator>(p3, c3.exponents);
    const auto r = check_Z_nonzero(p3, 1, cp3, b);
    CHECK(r.kind == ZeroTest::Kind::NonZero);
    CHECK(build_Z(p3, 1, cp3).eval(r.witness) != Fe{0});
    Budget tiny(0);
    CHECK(check_Z_nonzero(p3, 1, cp3, tiny).kind == ZeroTest::Kind::Inconclusive);
  }

  TEST_CASE("G, H, J and Kpoly") {
    const auto ctx = make_ctx("1 2\n2 3", 7);
    Budget b;
    const auto choice = choose_vertex_monomial(ctx, MonomialStrategy::GradedLex, b);
    const auto cp = std::make_shared<const CpEvaluator>(ctx, choice.exponents);
    const auto K = ctx.default_palette();
    const std::vector<std::uint32_t> M1{1};
    const auto G = build_G(ctx, 2, K, M1, cp);
    const auto Q1 = build_Q(ctx, 1, K, cp);
    const Zp F(7);
    for (std::uint32_t a = 0; a < 7; ++a) {
      const Point pt = edge_point(std::vector<Fe>{Fe{a}, Fe{5}});
      CHECK(G.eval(pt) == F.mul(Q1.eval(pt), F.sub(Fe{a}, K.alpha())));
    }
    const std::vector<std::uint32_t> bad{2};
    CHECK_THROWS_AS(build_G(ctx, 2, K, bad, cp), Error);

    const auto Gr = expand_handle(G, std::nullopt, nullptr);
    const auto H = build_H(Gr, 1, K.alpha());
    CHECK(H == Gr * SparsePoly::linear(7, VarId::edge(1), K.alpha().v));

    // J picks the coefficient of the greatest monomial in the other variables.
    SparsePoly f(7);
    f.add_term(Monomial({{VarId::edge(1), 2}, {VarId::edge(2), 3}}), Fe{1});
    f.add_term(Monomial({{VarId::edge(1), 1}, {VarId::edge(2), 3}}), Fe{5});
    f.add_term(Monomial({{VarId::edge(1), 4}, {VarId::edge(2), 1}}), Fe{2});
    const auto J = build_J(f, VarId::edge(1));
    CHECK(J.reference == Monomial::var(VarId::edge(2), 3));
    CHECK(J.J == SparsePoly::univariate(7, VarId::edge(1),
                                        std::vector<Fe>{Fe{0}, Fe{5}, Fe{1}}));
    CHECK_THROWS_AS(build_J(SparsePoly(7), VarId::edge(1)), Error);

    // Kpoly: the (e1 - beta) factor is swapped for (e1 - alpha).
    const Fe alpha{4}, beta{6};
    const auto base = SparsePoly::linear(7, VarId::edge(1), beta.v) * SparsePoly::linear(7, VarId::edge(2), 1);
    const auto Kp = build_Kpoly(base, std::vector<std::uint32_t>{1}, 2, 2, alpha, beta);
    CHECK(Kp.exact);
    for (std::uint32_t c = 0; c < 7; ++c) {
      const Point pt = edge_point(std::vector<Fe>{beta, Fe{c}});
      Fe want = F.mul(F.sub(beta, alpha), F.sub(Fe{c}, Fe{1}));
      for (std::uint32_t l : {0u, 4u, 5u}) want = F.mul(want, F.sub(Fe{c}, Fe{l}));
      CHECK(eval(Kp.K, pt) == want);
    }
    const auto Kq = build_Kpoly(SparsePoly::variable(7, VarId::edge(1)), std::vector<std::uint32_t>{1},
                                2, 2, alpha, beta);
    CHECK_FALSE(Kq.exact);
    CHECK(Kq.inexact_edges == std::vector<std::uint32_t>{1});
  }
}
