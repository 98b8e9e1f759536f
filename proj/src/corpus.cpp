#include "tcolor/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>

#include "tcolor/error.hpp"

namespace tcolor {

namespace {

using Adj = std::vector<std::uint32_t>;  // row bitmasks, 0-based vertices

// Bits in pair order with the first pair most significant.
std::uint64_t code_of(const Adj& adj, const std::vector<std::uint32_t>& perm, std::uint32_t n) {
  std::uint64_t c = 0;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      c = (c << 1) | ((adj[perm[a]] >> perm[b]) & 1u);
    }
  }
  return c;
}

std::pair<std::uint64_t, std::vector<std::uint32_t>> canon(const Adj& adj, std::uint32_t n) {
  std::vector<std::uint32_t> perm(n), best;
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t lo = ~std::uint64_t{0};
  do {
    const auto c = code_of(adj, perm, n);
    if (c < lo) {
      lo = c;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {lo, best};
}

Adj adjacency(const Graph& g) {
  Adj adj(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u - 1] |= 1u << (v - 1);
    adj[v - 1] |= 1u << (u - 1);
  }
  return adj;
}

Graph from_code(std::uint64_t code, std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  const std::uint32_t pairs = n * (n - 1) / 2;
  std::uint32_t bit = pairs;
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b) {
      --bit;
      if ((code >> bit) & 1u) edges.emplace_back(a, b);
    }
  }
  return Graph::make(n, std::move(edges));
}

std::string bits(std::uint64_t code, std::uint32_t n) {
  const std::uint32_t pairs = n * (n - 1) / 2;
  std::string s(pairs, '0');
  for (std::uint32_t k = 0; k < pairs; ++k) {
    if ((code >> (pairs - 1 - k)) & 1u) s[k] = '1';
  }
  return s;
}

}  // namespace

std::string canonical_code(const Graph& g) {
  if (g.n > 8) throw Error(ErrorCode::InvalidArgument, "canonical code needs n <= 8");
  return bits(canon(adjacency(g), g.n).first, g.n);
}

Graph canonical_form(const Graph& g) {
  if (g.n > 8) throw Error(ErrorCode::InvalidArgument, "canonical form needs n <= 8");
  return from_code(canon(adjacency(g), g.n).first, g.n);
}

std::vector<Graph> gen_corpus(std::uint32_t max_n, bool connected_only) {
  if (max_n > 7) throw Error(ErrorCode::InvalidArgument, "corpus is limited to 7 vertices");
  // Codes of all graphs on n vertices, grown by adding one vertex at a time.
  std::set<std::uint64_t> level{0};  // the single graph on one vertex
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> keyed;
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> next;
    for (const auto code : level) {
      const Graph base = from_code(code, n - 1);
      Adj adj = adjacency(base);
      adj.push_back(0);
      for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
        Adj a = adj;
        a[n - 1] = s;
        for (std::uint32_t v = 0; v + 1 < n; ++v) {
          if ((s >> v) & 1u) a[v] |= 1u << (n - 1);
        }
        next.insert(canon(a, n).first);
      }
    }
    level = std::move(next);
    for (const auto code : level) {
      const Graph g = from_code(code, n);
      if (g.m() == 0 || (connected_only && !g.connected())) continue;
      keyed.emplace_back(n, g.m(), code);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (const auto& [n, m, code] : keyed) out.push_back(from_code(code, n));
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string graph_id(const Graph& g) {
  const std::string prefix = "n" + std::to_string(g.n) + "-";
  if (g.n <= 8) return prefix + canonical_code(g);
  std::string edges;
  for (const auto& [u, v] : g.edges) edges += std::to_string(u) + " " + std::to_string(v) + "\n";
  return prefix + "h" + hex64(fnv1a(edges));
}

}  // namespace tcolor
