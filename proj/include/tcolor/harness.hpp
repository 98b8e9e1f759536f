#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tcolor/algorithm1.hpp"
#include "tcolor/graph.hpp"

namespace tcolor {

enum class ClaimId { T1, L1, CL1, CL2, CL3, L2, L3, R4, PT4, PC1, Z, FERMAT_REMARK };

const char* to_string(ClaimId c);
std::optional<ClaimId> parse_claim(std::string_view s);
const std::vector<ClaimId>& all_claims();

enum class VerdictOutcome { Holds, Falsified, Inconclusive };
const char* to_string(VerdictOutcome o);

// TCC_BUDGET when set to a positive integer, otherwise 100 million units.
std::uint64_t default_budget();

struct HarnessParams {
  std::optional<std::uint64_t> prime_override;
  MonomialStrategy strategy = MonomialStrategy::GradedLex;
  std::uint64_t budget = default_budget();  // per claim and instance
  std::uint64_t seed = 1;
  std::uint32_t l1_samples = 50;
  std::uint64_t grid_limit = 20000;
  unsigned threads = 1;
  bool timing = false;
};

struct Verdict {
  ClaimId claim = ClaimId::T1;
  std::string graph_id;
  std::string instance_hash;
  std::uint32_t n = 0, m = 0, delta = 0, p = 0;
  bool scaled = false;  // p below the paper bound
  std::uint32_t alpha = 0;
  MonomialStrategy strategy = MonomialStrategy::GradedLex;
  VerdictOutcome outcome = VerdictOutcome::Inconclusive;
  std::string reason;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  double wall_ms = 0;
};

// Never throws on claim failure; every failure ends up in the verdict.
Verdict verify_claim(ClaimId claim, const Graph& g, const HarnessParams& params);

struct ClaimSummary {
  std::uint64_t holds = 0, falsified = 0, inconclusive = 0;
  std::string statement;
};

struct SuiteReport {
  std::vector<ClaimId> claims;
  std::uint64_t instances = 0;
  std::vector<Verdict> verdicts;  // instance-major, claims in the requested order
  std::vector<std::pair<ClaimId, ClaimSummary>> summary;
  bool scaled = false;

  bool any_falsified() const;
};

SuiteReport run_suite(const std::vector<Graph>& corpus, const std::vector<ClaimId>& claims,
                      const HarnessParams& params);

nlohmann::ordered_json to_json(const Verdict& v, bool timing);
nlohmann::ordered_json to_json(const SuiteReport& r, const HarnessParams& params);

}  // namespace tcolor
