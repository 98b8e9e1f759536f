#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcolor/ff.hpp"

namespace tcolor {

// Simple undirected graph. Vertices are 1..n; edge j (1-based) is edges[j-1]
// and keeps the order it was given in.
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t delta = 0;

  // Validates and computes delta. Throws LoopEdge, DuplicateEdge or
  // InvalidArgument (endpoint out of range).
  static Graph make(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t m() const { return static_cast<std::uint32_t>(edges.size()); }
  const std::pair<std::uint32_t, std::uint32_t>& edge(std::uint32_t j) const {
    return edges[j - 1];
  }
  std::uint32_t degree(std::uint32_t v) const;
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  bool edges_adjacent(std::uint32_t j, std::uint32_t k) const;
  bool connected() const;

  // "u v" lines, 1-based, in edge order.
  std::string to_edgelist() const;
};

enum class GraphFormat { EdgeList, Dimacs };

Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::EdgeList);

// All families are indexed from 1; slot 0 is unused. Members are sorted.
struct NeighborIndex {
  std::vector<std::vector<std::uint32_t>> Nv;    // N(v_i)
  std::vector<std::vector<std::uint32_t>> Ne_v;  // N_e(v_i), incident edges
  std::vector<std::vector<std::uint32_t>> Ne;    // N(e_i), adjacent edges
  std::vector<std::vector<std::uint32_t>> Nvi;   // N_i(v_i) = N(v_i) \ {v_1..v_{i-1}}
  std::vector<std::vector<std::uint32_t>> Nei;   // N_i(e_i) = N(e_i) \ {e_1..e_{i-1}}
};

NeighborIndex build_neighbor_index(const Graph& g);

// K = {1, ..., delta+1} together with alpha.
class ColorSet {
 public:
  // Throws InvalidArgument unless alpha lies in Z_p \ {0, ..., delta+1}.
  ColorSet(std::uint32_t delta, Fe alpha, std::uint32_t p);

  std::uint32_t delta() const { return delta_; }
  Fe alpha() const { return alpha_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t size() const { return delta_ + 2; }

  bool contains(Fe c) const { return (c.v >= 1 && c.v <= delta_ + 1) || c == alpha_; }
  // Ascending order.
  std::vector<Fe> elements() const;

 private:
  std::uint32_t delta_;
  Fe alpha_;
  std::uint32_t p_;
};

struct ColorAssignment {
  std::vector<std::optional<Fe>> vertex;  // size n, vertex i at i-1
  std::vector<std::optional<Fe>> edge;    // size m, edge j at j-1
  ColorSet palette;

  ColorAssignment(const Graph& g, ColorSet palette);

  bool total() const;
};

struct ColoringCheck {
  bool ok = true;
  std::string violation;
};

// Throws PartialAssignment unless c is total.
ColoringCheck verify_total_coloring(const Graph& g, const ColorAssignment& c);

// Proper edge coloring with every color in the palette.
ColoringCheck verify_edge_coloring(const Graph& g, const std::vector<Fe>& edge_colors,
                                   const ColorSet& palette);

}  // namespace tcolor
