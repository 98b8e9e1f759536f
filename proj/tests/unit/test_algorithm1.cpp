#include <random>

#include "doctest.h"
#include "tcolor/algorithm1.hpp"

using namespace tcolor;

namespace {

Context make_ctx(const char* edges, std::optional<std::uint32_t> p = std::nullopt) {
  const Graph g = parse_graph(edges);
  return Context(g, select_prime(g.m(), g.delta, p));
}

std::shared_ptr<const CpEvaluator> cp_for(const Context& ctx) {
  Budget b;
  const auto c = choose_vertex_monomial(ctx, MonomialStrategy::GradedLex, b);
  return std::make_shared<const CpEvaluator>(ctx, c.exponents);
}

SparsePoly roots_poly(std::uint32_t p, const std::vector<std::uint32_t>& roots, std::uint32_t lead = 1) {
  SparsePoly f = SparsePoly::constant(p, lead);
  for (auto r : roots) f = f * SparsePoly::linear(p, VarId::edge(1), r);
  return f;
}

const ClaimCheck* find_check(const RunReport& r, const std::string& claim) {
  for (const auto& c : r.checks) {
    if (c.claim == claim) return &c;
  }
  return nullptr;
}

void check_sound(const Context& ctx, const RunReport& r) {
  REQUIRE(r.outcome == Outcome::Colored);
  const ColorSet K = ctx.palette(r.final_alpha);
  const auto cp = std::make_shared<const CpEvaluator>(ctx, r.choice.exponents);
  // Independent route for C^{P'} at the returned point when p^n is small.
  double grid = 1;
  for (std::uint32_t k = 0; k < ctx.n(); ++k) grid *= ctx.p();
  const Fe c = grid <= 3e5 ? eval_CP_generic(ctx, r.choice.exponents, r.edge_colors)
                           : cp->eval(r.edge_colors);
  const Fe e = build_E_m(ctx, K).eval(edge_point(r.edge_colors));
  CHECK(Zp(ctx.p()).mul(c, e) != Fe{0});
  CHECK(verify_edge_coloring(ctx.g, r.edge_colors, K).ok);
  ColorAssignment a(ctx.g, K);
  for (std::uint32_t k = 0; k < ctx.n(); ++k) a.vertex[k] = r.vertex_colors.at(k);
  for (std::uint32_t j = 0; j < ctx.m(); ++j) a.edge[j] = r.edge_colors[j];
  CHECK(verify_total_coloring(ctx.g, a).ok);
  for (const auto& ch : r.alpha_trace) {
    CHECK(ch.to.v > ctx.delta() + 1);
    CHECK(ch.to.v < ctx.p());
  }
}

}  // namespace

TEST_SUITE("algorithm1") {
  TEST_CASE("hypothesis_check on K2 agrees with direct evaluation") {
    const auto ctx = make_ctx("1 2");
    const auto cp = cp_for(ctx);
    const auto K = ctx.default_palette();
    Budget b;
    const auto h = hypothesis_check(ctx, 1, K, cp, {}, b);
    std::optional<std::uint32_t> first;
    for (std::uint32_t beta = 1; beta <= 3 && !first; ++beta) {
      const std::vector<Fe> e{Fe{beta}};
      const Fe c = eval_CP_generic(ctx, cp->exponents(), e);
      const Fe q = Zp(5).mul(c, build_E_i(ctx, 1, K).eval(edge_point(e)));
      if (q.v != 0) first = beta;
    }
    REQUIRE(first.has_value());
    CHECK(h.kind == HypothesisResult::Kind::Witness);
    CHECK(h.point == std::vector<Fe>{Fe{*first}});
  }

  TEST_CASE("hypothesis_check keeps a valid prefix") {
    const auto ctx = make_ctx("1 2\n2 3");
    const auto cp = cp_for(ctx);
    Budget b;
    const auto h = hypothesis_check(ctx, 2, ctx.default_palette(), cp, {Fe{1}, Fe{4}}, b);
    REQUIRE(h.kind == HypothesisResult::Kind::Witness);
    CHECK(h.prefix_kept);
    CHECK(h.point[0] == Fe{1});
    CHECK(h.point[1] != Fe{1});
    Budget tiny(1);
    CHECK(hypothesis_check(ctx, 2, ctx.default_palette(), cp, {Fe{1}}, tiny).kind ==
          HypothesisResult::Kind::Inconclusive);
  }

  TEST_CASE("select_beta with empty M2") {
    // p = 29, delta = 2, alpha = 4: B = {5..28}.
    const auto J_i = roots_poly(29, {5, 6, 9});
    const auto s = select_beta(29, 2, Fe{4}, {}, J_i);
    CHECK(s.beta == Fe{7});
    CHECK(s.B.size() == 24);
    CHECK(s.B_i == std::vector<Fe>{Fe{5}, Fe{6}, Fe{9}});
    CHECK(s.postcondition_ok);
  }

  TEST_CASE("select_beta simple root test") {
    // J(e_j) = (x - 7) u(x), u(7) != 0.
    const auto Jj = roots_poly(29, {7, 11, 11});
    const auto s1 = select_beta(29, 2, Fe{4}, {{1, Jj}}, roots_poly(29, {}, 3));
    CHECK(s1.beta == Fe{5});
    CHECK_FALSE(s1.postcondition_ok);  // 5 is not a root of J(e_j)
    CHECK(s1.B_j[0].second == std::vector<Fe>{Fe{11}});
    // Exclude everything below 7 through J(e_i): 7 is then picked iff it is
    // not a root of J(e_i).
    const auto s2 = select_beta(29, 2, Fe{4}, {{1, Jj}}, roots_poly(29, {5, 6}));
    CHECK(s2.beta == Fe{7});
    CHECK(s2.postcondition_ok);
    const auto s3 = select_beta(29, 2, Fe{4}, {{1, Jj}}, roots_poly(29, {5, 6, 7}));
    CHECK(s3.beta == Fe{8});
  }

  TEST_CASE("select_beta raises EmptyCandidateSet") {
    // p = 5, delta = 1, alpha = 3: B = {4}.
    try {
      select_beta(5, 1, Fe{3}, {}, roots_poly(5, {4}));
      FAIL("expected EmptyCandidateSet");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyCandidateSet);
    }
    const auto s = select_beta(5, 1, Fe{3}, {}, roots_poly(5, {1}));
    CHECK(s.beta == Fe{4});
  }

  TEST_CASE("select_beta postconditions on random fixtures") {
    std::mt19937_64 rng(29);
    for (std::uint32_t p : {29u, 59u}) {
      const std::uint32_t delta = 2;
      const Fe alpha{delta + 2};
      for (int t = 0; t < 100; ++t) {
        std::vector<std::pair<std::uint32_t, SparsePoly>> J;
        const int nj = static_cast<int>(rng() % 3);
        for (int j = 0; j < nj; ++j) {
          std::vector<std::uint32_t> roots;
          for (std::uint32_t l = 0; l < p; ++l) {
            if (l != alpha.v) roots.push_back(l);
          }
          for (int k = 0; k < 3; ++k) roots.push_back(static_cast<std::uint32_t>(rng() % p));
          J.emplace_back(j + 1, roots_poly(p, roots, 1 + static_cast<std::uint32_t>(rng() % (p - 1))));
        }
        std::vector<std::uint32_t> ri;
        for (std::uint32_t k = 0; k < 2 * delta; ++k) ri.push_back(static_cast<std::uint32_t>(rng() % p));
        const auto s = select_beta(p, delta, alpha, J, roots_poly(p, ri));
        CHECK(s.postcondition_ok);
        for (const auto& [j, f] : J) CHECK(linear_multiplicity(f, s.beta) == 1);
        CHECK(s.beta.v > delta + 1);
        CHECK(s.beta != alpha);
      }
    }
  }

  TEST_CASE("full runs color K2 and P3") {
    const auto k2 = make_ctx("1 2");
    const auto r1 = run(k2, {});
    REQUIRE(r1.outcome == Outcome::Colored);
    CHECK(r1.edge_colors.size() == 1);
    CHECK(r1.edge_colors[0].v >= 1);
    CHECK(r1.edge_colors[0].v <= 3);
    check_sound(k2, r1);

    const auto p3 = make_ctx("1 2\n2 3");
    const auto r2 = run(p3, {});
    REQUIRE(r2.outcome == Outcome::Colored);
    CHECK(r2.edge_colors[0] != r2.edge_colors[1]);
    check_sound(p3, r2);
    CHECK(find_check(r2, "CL1")->ok);
    CHECK(find_check(r2, "R4")->ok);
    CHECK(find_check(r2, "PT4")->ok);
  }

  TEST_CASE("soundness on small graphs") {
    for (const char* edges : {"1 2\n2 3\n1 3", "1 2\n1 3\n1 4", "1 2\n2 3\n3 4\n4 1", "1 2\n2 3\n3 4\n4 1\n1 3"}) {
      const auto ctx = make_ctx(edges);
      for (auto s : {MonomialStrategy::GradedLex, MonomialStrategy::LexMin}) {
        AlgParams params;
        params.strategy = s;
        check_sound(ctx, run(ctx, params));
      }
    }
  }

  TEST_CASE("terminal step is a no-op and runs are deterministic") {
    const auto ctx = make_ctx("1 2\n2 3\n1 3");
    Algorithm1 a(ctx, {});
    REQUIRE(a.start());
    while (a.step()) {
    }
    CHECK_FALSE(a.step());
    const auto r1 = a.finish();
    const auto r2 = run(ctx, {});
    CHECK(r1.edge_colors == r2.edge_colors);
    CHECK(r1.vertex_colors == r2.vertex_colors);
    CHECK(r1.budget_spent == r2.budget_spent);
    CHECK(r1.checks.size() == r2.checks.size());
  }

  TEST_CASE("forced else-branch") {
    const auto ctx = make_ctx("1 2\n2 3");
    for (std::uint32_t step : {1u, 2u}) {
      AlgParams params;
      params.force_else_step = step;
      const auto r = run(ctx, params);
      check_sound(ctx, r);
      REQUIRE(r.alpha_trace.size() == 1);
      CHECK(r.alpha_trace[0].from == Fe{4});
      CHECK(r.alpha_trace[0].to.v >= 5);
      CHECK(r.final_alpha == r.alpha_trace[0].to);
      CHECK(find_check(r, "CL2")->ok);
      CHECK(find_check(r, "L3")->ok);
      CHECK(find_check(r, "CL3")->ok);
      CHECK(r.steps[step - 1].hypothesis_fired);
      CHECK(r.steps[step - 1].beta.has_value());
    }
  }

  TEST_CASE("budget exhaustion is inconclusive") {
    const auto ctx = make_ctx("1 2\n2 3\n1 3");
    AlgParams params;
    params.budget = 10;
    const auto r = run(ctx, params);
    CHECK(r.outcome == Outcome::Inconclusive);
  }

  TEST_CASE("extend_to_vertices") {
    const auto k2 = make_ctx("1 2");
    Budget b;
    const auto a = extend_to_vertices(k2, {Fe{3}}, Fe{3}, b);
    REQUIRE(a.has_value());
    CHECK(((*a->vertex[0] == Fe{1} && *a->vertex[1] == Fe{2}) ||
           (*a->vertex[0] == Fe{2} && *a->vertex[1] == Fe{1})));
    CHECK(verify_total_coloring(k2.g, *a).ok);
    CHECK_FALSE(extend_to_vertices(k2, {Fe{1}}, Fe{3}, b).has_value());

    const auto p3 = make_ctx("1 2\n2 3");
    const auto c = extend_to_vertices(p3, {Fe{1}, Fe{2}}, Fe{4}, b);
    REQUIRE(c.has_value());
    CHECK(verify_total_coloring(p3.g, *c).ok);
  }
}
