#include "tcolor/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tcolor/error.hpp"

namespace tcolor {

Graph Graph::make(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  Graph g;
  g.n = n;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<std::uint32_t> deg(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " outside 1.." +
                      std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " repeated");
    }
    ++deg[u];
    ++deg[v];
  }
  g.edges = std::move(edges);
  g.delta = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  return g;
}

std::uint32_t Graph::degree(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  for (const auto& [a, b] : edges) {
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

bool Graph::edges_adjacent(std::uint32_t j, std::uint32_t k) const {
  if (j == k) return false;
  const auto& [a, b] = edge(j);
  const auto& [c, d] = edge(k);
  return a == c || a == d || b == c || b == d;
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<std::uint32_t> parent(n + 1);
  for (std::uint32_t v = 0; v <= n; ++v) parent[v] = v;
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::uint32_t components = n;
  for (const auto& [u, v] : edges) {
    const auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string Graph::to_edgelist() const {
  std::ostringstream os;
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::uint32_t parse_uint(const std::string& s, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected a vertex number, got '" + s + "'");
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::optional<std::uint32_t> declared_n;
  std::optional<std::size_t> declared_m;
  std::uint32_t max_vertex = 0;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (format == GraphFormat::EdgeList) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto t = tokens(line);
      if (t.empty()) continue;
      if (t.size() != 2) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected 'u v'");
      }
      edges.emplace_back(parse_uint(t[0], line_no), parse_uint(t[1], line_no));
    } else {
      const auto t = tokens(line);
      if (t.empty() || t[0] == "c") continue;
      if (t[0] == "p") {
        if (t.size() != 4 || (t[1] != "edge" && t[1] != "col") || declared_n) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no) + ": bad problem line");
        }
        declared_n = parse_uint(t[2], line_no);
        declared_m = parse_uint(t[3], line_no);
      } else if (t[0] == "e") {
        if (t.size() != 3 || !declared_n) {
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line_no) + ": bad edge line");
        }
        edges.emplace_back(parse_uint(t[1], line_no), parse_uint(t[2], line_no));
      } else {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": unknown record '" + t[0] + "'");
      }
    }
  }
  if (format == GraphFormat::Dimacs) {
    if (!declared_n) throw Error(ErrorCode::ParseError, "missing 'p edge n m' line");
    if (*declared_m != edges.size()) {
      throw Error(ErrorCode::ParseError, "header announces " + std::to_string(*declared_m) +
                                             " edges, found " + std::to_string(edges.size()));
    }
  }
  for (const auto& [u, v] : edges) {
    if (u == 0 || v == 0) throw Error(ErrorCode::ParseError, "vertices are numbered from 1");
    max_vertex = std::max({max_vertex, u, v});
  }
  const std::uint32_t n = declared_n.value_or(max_vertex);
  if (n == 0 || edges.empty()) throw Error(ErrorCode::ParseError, "graph has no edges");
  return Graph::make(n, std::move(edges));
}

NeighborIndex build_neighbor_index(const Graph& g) {
  NeighborIndex idx;
  const std::uint32_t n = g.n, m = g.m();
  idx.Nv.assign(n + 1, {});
  idx.Ne_v.assign(n + 1, {});
  idx.Ne.assign(m + 1, {});
  idx.Nvi.assign(n + 1, {});
  idx.Nei.assign(m + 1, {});
  for (std::uint32_t j = 1; j <= m; ++j) {
    const auto [u, v] = g.edge(j);
    idx.Nv[u].push_back(v);
    idx.Nv[v].push_back(u);
    idx.Ne_v[u].push_back(j);
    idx.Ne_v[v].push_back(j);
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::sort(idx.Nv[i].begin(), idx.Nv[i].end());
    for (auto w : idx.Nv[i]) {
      if (w > i) idx.Nvi[i].push_back(w);
    }
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    for (std::uint32_t k = 1; k <= m; ++k) {
      if (g.edges_adjacent(j, k)) {
        idx.Ne[j].push_back(k);
        if (k > j) idx.Nei[j].push_back(k);
      }
    }
  }
  return idx;
}

ColorSet::ColorSet(std::uint32_t delta, Fe alpha, std::uint32_t p)
    : delta_(delta), alpha_(alpha), p_(p) {
  if (alpha.v >= p || alpha.v <= delta + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "alpha " + std::to_string(alpha.v) + " must lie in Z_" + std::to_string(p) +
                    " \\ {0.." + std::to_string(delta + 1) + "}");
  }
}

std::vector<Fe> ColorSet::elements() const {
  std::vector<Fe> out;
  for (std::uint32_t c = 1; c <= delta_ + 1; ++c) out.push_back(Fe{c});
  out.push_back(alpha_);
  return out;
}

ColorAssignment::ColorAssignment(const Graph& g, ColorSet palette_)
    : vertex(g.n), edge(g.m()), palette(palette_) {}

bool ColorAssignment::total() const {
  auto set = [](const auto& c) { return c.has_value(); };
  return std::all_of(vertex.begin(), vertex.end(), set) &&
         std::all_of(edge.begin(), edge.end(), set);
}

ColoringCheck verify_total_coloring(const Graph& g, const ColorAssignment& c) {
  if (c.vertex.size() != g.n || c.edge.size() != g.m() || !c.total()) {
    throw Error(ErrorCode::PartialAssignment, "assignment does not cover every element");
  }
  auto fail = [](std::string s) { return ColoringCheck{false, std::move(s)}; };
  for (std::uint32_t v = 1; v <= g.n; ++v) {
    if (!c.palette.contains(*c.vertex[v - 1])) {
      return fail("vertex " + std::to_string(v) + " color " +
                  std::to_string(c.vertex[v - 1]->v) + " outside palette");
    }
  }
  for (std::uint32_t j = 1; j <= g.m(); ++j) {
    if (!c.palette.contains(*c.edge[j - 1])) {
      return fail("edge " + std::to_string(j) + " color " + std::to_string(c.edge[j - 1]->v) +
                  " outside palette");
    }
  }
  for (std::uint32_t j = 1; j <= g.m(); ++j) {
    const auto [u, v] = g.edge(j);
    const Fe ec = *c.edge[j - 1];
    if (*c.vertex[u - 1] == *c.vertex[v - 1]) {
      return fail("adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) +
                  " share color " + std::to_string(c.vertex[u - 1]->v));
    }
    if (ec == *c.vertex[u - 1] || ec == *c.vertex[v - 1]) {
      return fail("edge " + std::to_string(j) + " shares color " + std::to_string(ec.v) +
                  " with an endpoint");
    }
    for (std::uint32_t k = j + 1; k <= g.m(); ++k) {
      if (g.edges_adjacent(j, k) && ec == *c.edge[k - 1]) {
        return fail("adjacent edges " + std::to_string(j) + " and " + std::to_string(k) +
                    " share color " + std::to_string(ec.v));
      }
    }
  }
  return {};
}

ColoringCheck verify_edge_coloring(const Graph& g, const std::vector<Fe>& edge_colors,
                                   const ColorSet& palette) {
  if (edge_colors.size() != g.m()) {
    throw Error(ErrorCode::PartialAssignment, "edge coloring does not cover every edge");
  }
  for (std::uint32_t j = 1; j <= g.m(); ++j) {
    const Fe ec = edge_colors[j - 1];
    if (!palette.contains(ec)) {
      return {false, "edge " + std::to_string(j) + " color " + std::to_string(ec.v) +
                         " outside palette"};
    }
    for (std::uint32_t k = j + 1; k <= g.m(); ++k) {
      if (g.edges_adjacent(j, k) && ec == edge_colors[k - 1]) {
        return {false, "adjacent edges " + std::to_string(j) + " and " + std::to_string(k) +
                           " share color " + std::to_string(ec.v)};
      }
    }
  }
  return {};
}

}  // namespace tcolor
