#include <cstdlib>

#include "doctest.h"
#include "tcolor/corpus.hpp"
#include "tcolor/harness.hpp"

using namespace tcolor;

namespace {

HarnessParams quick(std::optional<std::uint64_t> p = std::nullopt) {
  HarnessParams h;
  h.prime_override = p;
  h.budget = 20'000'000;
  return h;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("claim names round trip") {
    CHECK(all_claims().size() == 12);
    for (auto c : all_claims()) CHECK(parse_claim(to_string(c)) == c);
    CHECK_FALSE(parse_claim("T2").has_value());
  }

  TEST_CASE("T1 on K2 at p = 5") {
    const Graph k2 = parse_graph("1 2");
    const auto v = verify_claim(ClaimId::T1, k2, quick(5));
    REQUIRE(v.outcome == VerdictOutcome::Holds);
    CHECK(v.p == 5);
    CHECK_FALSE(v.scaled);
    // The reported coefficient is C^{P'}(0) through the Lagrange route.
    const Context ctx(k2, select_prime(1, 1, 5));
    const auto exps = v.evidence["exponents"].get<std::vector<std::uint32_t>>();
    CHECK(eval_CP_generic(ctx, exps, std::vector<Fe>{Fe{0}}).v == v.evidence["coefficient"].get<std::uint32_t>());
    CHECK(v.evidence["coefficient"].get<std::uint32_t>() != 0);
  }

  TEST_CASE("L1 exact on K2 and P3, sampled when the grid is capped") {
    for (auto [edges, p] : {std::pair{"1 2", 5u}, std::pair{"1 2\n2 3", 29u}}) {
      const auto v = verify_claim(ClaimId::L1, parse_graph(edges), quick(p));
      REQUIRE(v.outcome == VerdictOutcome::Holds);
      CHECK(v.evidence["mode"] == "full-grid");
      for (const auto& d : v.evidence["degrees"]) CHECK(d.get<int>() <= 2);
    }
    auto params = quick(29);
    params.grid_limit = 0;
    const auto s = verify_claim(ClaimId::L1, parse_graph("1 2\n2 3"), params);
    CHECK(s.outcome == VerdictOutcome::Inconclusive);
    CHECK(s.evidence["mode"] == "sampled");
    CHECK(s.reason.find("sampled") != std::string::npos);
  }

  TEST_CASE("suite on small corpora") {
    const auto c3 = gen_corpus(3, true);
    const auto fermat = run_suite(c3, {ClaimId::FERMAT_REMARK}, quick());
    REQUIRE(fermat.verdicts.size() == 3);
    for (const auto& v : fermat.verdicts) CHECK(v.outcome == VerdictOutcome::Holds);
    CHECK(fermat.summary[0].second.statement == "holds on all tested instances");

    const auto c4 = gen_corpus(4, true);
    const auto pc1 = run_suite(c4, {ClaimId::PC1}, quick());
    REQUIRE(pc1.verdicts.size() == 9);
    for (const auto& v : pc1.verdicts) {
      CHECK(v.outcome == VerdictOutcome::Holds);
      const auto chi = v.evidence["chi_total"].get<std::uint32_t>();
      CHECK(chi >= v.delta + 1);
      CHECK(chi <= v.delta + 2);
    }
    CHECK_FALSE(pc1.any_falsified());

    const auto empty = run_suite({}, {ClaimId::T1}, quick());
    CHECK(empty.verdicts.empty());
    CHECK_FALSE(empty.any_falsified());
    CHECK(empty.summary[0].second.statement == "no instances tested");
  }

  TEST_CASE("run-based claims on K2 and P3") {
    for (const char* edges : {"1 2", "1 2\n2 3"}) {
      const Graph g = parse_graph(edges);
      const auto rep = run_suite({g}, {ClaimId::CL1, ClaimId::CL2, ClaimId::CL3, ClaimId::L2, ClaimId::L3,
                                       ClaimId::R4, ClaimId::PT4, ClaimId::Z},
                                 quick());
      CHECK(rep.verdicts[0].outcome == VerdictOutcome::Holds);
      for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(rep.verdicts[k].outcome == VerdictOutcome::Inconclusive);
        CHECK(rep.verdicts[k].reason.rfind("NotTriggered", 0) == 0);
      }
      CHECK(rep.verdicts[5].outcome == VerdictOutcome::Holds);
      CHECK(rep.verdicts[6].outcome == VerdictOutcome::Holds);
      CHECK(rep.verdicts[7].outcome == VerdictOutcome::Holds);
    }
  }

  TEST_CASE("budget exhaustion never falsifies") {
    auto params = quick();
    params.budget = 5;
    const auto rep = run_suite(gen_corpus(4, true), all_claims(), params);
    std::size_t decided = 0;
    for (const auto& v : rep.verdicts) {
      CHECK(v.outcome != VerdictOutcome::Falsified);
      if (v.outcome == VerdictOutcome::Holds) ++decided;
    }
    // Only cheap claims on the smallest graphs fit into five units.
    CHECK(decided < rep.verdicts.size() / 4);
  }

  TEST_CASE("scaled runs are flagged") {
    const auto v = verify_claim(ClaimId::FERMAT_REMARK, parse_graph("1 2\n2 3"), quick(7));
    CHECK(v.p == 7);
    CHECK(v.scaled);
    CHECK(v.outcome == VerdictOutcome::Holds);
    const auto bad = verify_claim(ClaimId::T1, parse_graph("1 2\n2 3"), quick(3));
    CHECK(bad.outcome == VerdictOutcome::Inconclusive);
    CHECK(bad.reason.find("parameters rejected") == 0);
  }

  TEST_CASE("reports are byte-identical across runs and worker counts") {
    auto params = quick(7);
    const auto corpus = gen_corpus(4, true);
    const std::vector<ClaimId> claims{ClaimId::T1, ClaimId::L1, ClaimId::CL1, ClaimId::PC1, ClaimId::R4};
    params.threads = 1;
    const auto a = to_json(run_suite(corpus, claims, params), params).dump();
    const auto b = to_json(run_suite(corpus, claims, params), params).dump();
    params.threads = 4;
    const auto c = to_json(run_suite(corpus, claims, params), params).dump();
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.find("wall_ms") == std::string::npos);
  }

  TEST_CASE("TCC_BUDGET sets the default budget") {
    ::setenv("TCC_BUDGET", "1234", 1);
    CHECK(default_budget() == 1234);
    ::setenv("TCC_BUDGET", "junk", 1);
    CHECK(default_budget() == 100'000'000);
    ::unsetenv("TCC_BUDGET");
    CHECK(default_budget() == 100'000'000);
  }
}
