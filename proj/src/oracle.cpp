#include "tcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tcolor {

namespace {

// Conflict graph over elements: vertices 0..n-1, then edges n..n+m-1.
std::vector<std::vector<std::uint32_t>> conflicts(const Graph& g) {
  const std::uint32_t n = g.n, m = g.m();
  std::vector<std::vector<std::uint32_t>> adj(n + m);
  auto link = [&](std::uint32_t a, std::uint32_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::uint32_t j = 1; j <= m; ++j) {
    const auto [u, v] = g.edge(j);
    link(u - 1, v - 1);
    link(u - 1, n + j - 1);
    link(v - 1, n + j - 1);
    for (std::uint32_t k = j + 1; k <= m; ++k) {
      if (g.edges_adjacent(j, k)) link(n + j - 1, n + k - 1);
    }
  }
  return adj;
}

struct Search {
  const std::vector<std::vector<std::uint32_t>>& adj;
  std::vector<std::uint32_t> order;
  std::uint32_t k;
  bool canonical;
  Budget& budget;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> color;  // 0 = unassigned

  bool rec(std::size_t pos, std::uint32_t used) {
    if (pos == order.size()) return true;
    const std::uint32_t x = order[pos];
    const std::uint32_t top = canonical ? std::min(k, used + 1) : k;
    for (std::uint32_t c = 1; c <= top; ++c) {
      bool free = true;
      for (auto y : adj[x]) {
        if (color[y] == c) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      budget.charge(1, "total coloring search");
      ++nodes;
      color[x] = c;
      if (rec(pos + 1, std::max(used, c))) return true;
      color[x] = 0;
    }
    return false;
  }
};

TotalColoring split(const Graph& g, const std::vector<std::uint32_t>& color) {
  TotalColoring t;
  t.vertex.assign(color.begin(), color.begin() + g.n);
  t.edge.assign(color.begin() + g.n, color.end());
  return t;
}

}  // namespace

ColoringCheck check_total_coloring(const Graph& g, const TotalColoring& c, std::uint32_t k) {
  if (c.vertex.size() != g.n || c.edge.size() != g.m()) {
    return {false, "coloring has the wrong size"};
  }
  std::vector<std::uint32_t> all(c.vertex);
  all.insert(all.end(), c.edge.begin(), c.edge.end());
  for (std::size_t x = 0; x < all.size(); ++x) {
    if (all[x] < 1 || all[x] > k) return {false, "color outside 1.." + std::to_string(k)};
  }
  const auto adj = conflicts(g);
  for (std::size_t x = 0; x < adj.size(); ++x) {
    for (auto y : adj[x]) {
      if (all[x] == all[y]) {
        return {false, "conflicting elements " + std::to_string(x) + " and " + std::to_string(y) +
                           " share color " + std::to_string(all[x])};
      }
    }
  }
  return {};
}

OracleResult brute_total_chromatic(const Graph& g, std::uint32_t k_max, Budget& budget) {
  if (k_max < g.delta + 1) throw Error(ErrorCode::InvalidArgument, "k_max below delta + 1");
  const auto adj = conflicts(g);
  std::vector<std::uint32_t> order(adj.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return adj[a].size() > adj[b].size(); });
  OracleResult out;
  for (std::uint32_t k = g.delta + 1; k <= k_max; ++k) {
    Search s{adj, order, k, true, budget, 0, std::vector<std::uint32_t>(adj.size(), 0)};
    const bool found = s.rec(0, 0);
    out.nodes_explored += s.nodes;
    if (found) {
      out.chi_total = k;
      out.witness = split(g, s.color);
      const auto chk = check_total_coloring(g, out.witness, k);
      if (!chk.ok) throw Error(ErrorCode::InvariantViolation, "oracle witness invalid: " + chk.violation);
      return out;
    }
  }
  return out;
}

std::optional<TotalColoring> total_coloring_plain(const Graph& g, std::uint32_t k, Budget& budget) {
  const auto adj = conflicts(g);
  std::vector<std::uint32_t> order(adj.size());
  std::iota(order.begin(), order.end(), 0u);
  Search s{adj, order, k, false, budget, 0, std::vector<std::uint32_t>(adj.size(), 0)};
  if (!s.rec(0, 0)) return std::nullopt;
  return split(g, s.color);
}

std::vector<std::uint32_t> vizing_edge_coloring(const Graph& g) {
  const std::uint32_t n = g.n, colors = g.delta + 1;
  // col[u][v] = color of edge uv, 0 if uncolored or absent.
  std::vector<std::vector<std::uint32_t>> col(n + 1, std::vector<std::uint32_t>(n + 1, 0));
  std::vector<std::vector<std::uint32_t>> nbr(n + 1);
  for (const auto& [u, v] : g.edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  auto is_free = [&](std::uint32_t x, std::uint32_t c) {
    return std::none_of(nbr[x].begin(), nbr[x].end(), [&](auto y) { return col[x][y] == c; });
  };
  auto free_color = [&](std::uint32_t x) {
    for (std::uint32_t c = 1; c <= colors; ++c) {
      if (is_free(x, c)) return c;
    }
    throw Error(ErrorCode::InvariantViolation, "no free color at a vertex");
  };
  auto set = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) { col[a][b] = col[b][a] = c; };

  for (const auto& [u, v] : g.edges) {
    // Maximal fan at u starting with v.
    std::vector<std::uint32_t> fan{v};
    std::vector<bool> in_fan(n + 1, false);
    in_fan[v] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (auto w : nbr[u]) {
        if (in_fan[w] || col[u][w] == 0 || !is_free(fan.back(), col[u][w])) continue;
        fan.push_back(w);
        in_fan[w] = true;
        grew = true;
        break;
      }
    }
    const std::uint32_t c = free_color(u);
    const std::uint32_t d = free_color(fan.back());
    // Invert the cd-path starting at u.
    if (!is_free(u, d)) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> path;
      std::uint32_t x = u, want = d, prev = 0;
      while (true) {
        std::uint32_t next = 0;
        for (auto y : nbr[x]) {
          if (y != prev && col[x][y] == want) {
            next = y;
            break;
          }
        }
        if (next == 0) break;
        path.emplace_back(x, next);
        prev = x;
        x = next;
        want = want == d ? c : d;
      }
      for (const auto& [a, b] : path) set(a, b, col[a][b] == d ? c : d);
    }
    // First fan vertex w with d free whose prefix is still a fan.
    std::size_t w = 0;
    for (; w < fan.size(); ++w) {
      if (w > 0 && (col[u][fan[w]] == 0 || !is_free(fan[w - 1], col[u][fan[w]]))) {
        throw Error(ErrorCode::InvariantViolation, "fan broke during rotation");
      }
      if (is_free(fan[w], d)) break;
    }
    if (w == fan.size()) throw Error(ErrorCode::InvariantViolation, "no rotation point in fan");
    for (std::size_t k = 0; k < w; ++k) set(u, fan[k], col[u][fan[k + 1]]);
    set(u, fan[w], d);
  }

  std::vector<std::uint32_t> out;
  for (const auto& [u, v] : g.edges) out.push_back(col[u][v]);
  for (std::uint32_t j = 1; j <= g.m(); ++j) {
    if (out[j - 1] < 1 || out[j - 1] > colors) {
      throw Error(ErrorCode::InvariantViolation, "edge left uncolored");
    }
    for (std::uint32_t k = j + 1; k <= g.m(); ++k) {
      if (g.edges_adjacent(j, k) && out[j - 1] == out[k - 1]) {
        throw Error(ErrorCode::InvariantViolation, "improper edge coloring produced");
      }
    }
  }
  return out;
}

std::uint32_t total_independence_number(const Graph& g) {
  const auto adj = conflicts(g);
  const std::size_t N = adj.size();
  if (N > 30) throw Error(ErrorCode::InvalidArgument, "too many elements for exhaustive search");
  std::vector<std::uint32_t> mask(N, 0);
  for (std::size_t x = 0; x < N; ++x) {
    for (auto y : adj[x]) mask[x] |= 1u << y;
  }
  std::uint32_t best = 0;
  auto rec = [&](auto&& self, std::uint32_t candidates, std::uint32_t size) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::uint32_t>(__builtin_popcount(candidates)) <= best) return;
    const auto x = static_cast<std::uint32_t>(__builtin_ctz(candidates));
    self(self, candidates & ~(1u << x) & ~mask[x], size + 1);
    self(self, candidates & ~(1u << x), size);
  };
  rec(rec, N == 32 ? ~0u : (1u << N) - 1, 0);
  return best;
}

}  // namespace tcolor
