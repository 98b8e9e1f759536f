#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcolor/graph.hpp"

namespace tcolor {

// Upper-triangle adjacency bits in pair order (1,2), (1,3), ..., (n-1,n),
// minimized over all vertex permutations. Requires n <= 8.
std::string canonical_code(const Graph& g);

// Relabels g so that its adjacency bits equal canonical_code(g); edges come
// out sorted.
Graph canonical_form(const Graph& g);

// Non-isomorphic simple graphs with 2..max_n vertices and at least one edge,
// ordered by (n, m, canonical code). Requires max_n <= 7.
std::vector<Graph> gen_corpus(std::uint32_t max_n, bool connected_only);

// "n<k>-<code>" for graphs up to 8 vertices, otherwise "n<k>-h<hash of the edge list>".
std::string graph_id(const Graph& g);

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t x);

}  // namespace tcolor
