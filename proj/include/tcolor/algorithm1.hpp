#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcolor/constructions.hpp"

namespace tcolor {

struct AlgParams {
  MonomialStrategy strategy = MonomialStrategy::GradedLex;
  std::uint64_t budget = Budget::kUnlimited;
  // Grid sweeps over Z_p^m (polynomial-reading check, L3 identity) run in
  // full only up to this many points.
  std::uint64_t grid_limit = 20000;
  std::uint32_t l3_samples = 50;
  std::uint64_t seed = 1;
  // Runs the else-branch at this step even when a witness exists. The run
  // report flags it.
  std::optional<std::uint32_t> force_else_step;
};

struct HypothesisResult {
  enum class Kind { Witness, NoWitness, Inconclusive };
  Kind kind = Kind::NoWitness;
  std::vector<Fe> point;  // full m-tuple when Witness
  bool prefix_kept = false;
  std::uint64_t points_examined = 0;
  std::string reason;
};

// Searches K^m for a point with Q_i != 0. Points extending `prefix` on
// e_1..e_{i-1} come first, then every point of K^m in lex order.
HypothesisResult hypothesis_check(const Context& ctx, std::uint32_t i, const ColorSet& K,
                                  const std::shared_ptr<const CpEvaluator>& cp,
                                  const std::vector<Fe>& prefix, Budget& budget);

struct BetaSelection {
  Fe beta;
  std::vector<Fe> B;
  std::vector<std::pair<std::uint32_t, std::vector<Fe>>> B_j;  // edge j -> double roots
  std::vector<Fe> B_i;
  bool postcondition_ok = true;
  std::string postcondition_detail;
};

// Smallest beta in B \ (union B_j, B_i), B = Z_p \ {0..delta+1, alpha}.
// Throws EmptyCandidateSet when nothing is left.
BetaSelection select_beta(std::uint32_t p, std::uint32_t delta, Fe alpha,
                          const std::vector<std::pair<std::uint32_t, SparsePoly>>& J_M2,
                          const SparsePoly& J_i);

enum class Outcome { Colored, Falsified, Inconclusive };
const char* to_string(Outcome o);

struct AlphaChange {
  std::uint32_t i = 0;
  Fe from, to;
  std::string reason;
};

// Result of one statement-level check made during a run.
struct ClaimCheck {
  std::string claim;
  std::uint32_t step = 0;
  bool ok = true;
  std::string detail;
  std::vector<Fe> witness;
};

struct StepRecord {
  std::uint32_t i = 0;
  bool hypothesis_fired = false;
  bool prefix_adopted = false;
  std::uint64_t points_examined = 0;
  std::vector<std::uint32_t> M1, M2;
  std::optional<Fe> beta;
};

struct AlgState {
  std::uint32_t i = 1;
  Fe alpha;
  std::vector<Fe> point;  // current witness over all m edges; empty before step 1
  std::vector<std::uint32_t> M1, M2;
  std::vector<Fe> B, B_i;
  std::vector<std::pair<std::uint32_t, std::vector<Fe>>> B_j;
  std::vector<AlphaChange> history;
};

struct RunReport {
  Outcome outcome = Outcome::Inconclusive;
  std::string reason;
  std::string falsified_claim;
  std::uint32_t falsified_step = 0;
  std::vector<Fe> falsified_witness;
  VertexMonomialChoice choice;
  Fe final_alpha;
  std::vector<Fe> edge_colors;
  std::vector<Fe> vertex_colors;
  std::vector<AlphaChange> alpha_trace;
  std::vector<StepRecord> steps;
  std::vector<ClaimCheck> checks;
  std::vector<std::string> flags;
  std::uint64_t budget_spent = 0;
};

class Algorithm1 {
 public:
  Algorithm1(const Context& ctx, AlgParams params);

  // Picks the vertex monomial. Returns false (and finalizes the report) on failure.
  bool start();
  // One pass of the main loop at the current i. Returns false once finished.
  bool step();
  RunReport finish();

  const AlgState& state() const { return state_; }
  const RunReport& report() const { return report_; }
  std::shared_ptr<const CpEvaluator> cp() const { return cp_; }

 private:
  void else_branch(StepRecord& rec, bool forced);
  void falsify(const std::string& claim, std::string reason, std::vector<Fe> witness = {});
  void inconclusive(std::string reason);
  void check(const std::string& claim, bool ok, std::string detail, std::vector<Fe> witness = {});

  const Context& ctx_;
  AlgParams params_;
  Budget budget_;
  std::shared_ptr<const CpEvaluator> cp_;
  AlgState state_;
  RunReport report_;
  bool done_ = false;
};

RunReport run(const Context& ctx, const AlgParams& params);

// First point of {1..delta+1}^n (lex) with P(beta_v, beta_e) != 0.
std::optional<ColorAssignment> extend_to_vertices(const Context& ctx, const std::vector<Fe>& edge_colors,
                                                  Fe alpha, Budget& budget);

}  // namespace tcolor
