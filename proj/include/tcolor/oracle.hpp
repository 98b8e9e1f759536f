#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcolor/error.hpp"
#include "tcolor/graph.hpp"

namespace tcolor {

// Plain total coloring with colors 1..k: vertex i at vertex[i-1], edge j at edge[j-1].
struct TotalColoring {
  std::vector<std::uint32_t> vertex;
  std::vector<std::uint32_t> edge;
};

struct OracleResult {
  std::uint32_t chi_total = 0;  // 0 when no k <= k_max works
  TotalColoring witness;
  std::uint64_t nodes_explored = 0;
};

// Checks properness and that every color lies in 1..k.
ColoringCheck check_total_coloring(const Graph& g, const TotalColoring& c, std::uint32_t k);

// Smallest k in [delta+1, k_max] with a proper total k-coloring. Every node
// charges the budget.
OracleResult brute_total_chromatic(const Graph& g, std::uint32_t k_max, Budget& budget);

// Same question by a plain search in element index order with no symmetry
// breaking; used to re-check a negative answer.
std::optional<TotalColoring> total_coloring_plain(const Graph& g, std::uint32_t k, Budget& budget);

// Proper edge coloring with colors 1..delta+1 by fan rotation and cd-path
// inversion. Edge j at index j-1.
std::vector<std::uint32_t> vizing_edge_coloring(const Graph& g);

// Largest set of pairwise non-conflicting vertices and edges, by exhaustive
// search. Requires n + m <= 30.
std::uint32_t total_independence_number(const Graph& g);

}  // namespace tcolor
