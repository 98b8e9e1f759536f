#pragma once

// Test-only reference implementations. None of these use the library's
// polynomial engine; they work on plain integer vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Exps = std::vector<std::uint32_t>;
using Dense = std::map<Exps, std::uint64_t>;  // exponent vector -> coefficient mod p

inline std::uint64_t mod(std::int64_t x, std::uint64_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (std::uint64_t i = 0; i < k; ++i) r = r * a % p;
  return r;
}

// Linear form sum_k coeff[k] * x_k + constant.
struct Linear {
  std::vector<std::int64_t> coeff;
  std::int64_t constant = 0;
};

// Expands a product of linear forms term by term.
inline Dense expand(const std::vector<Linear>& factors, std::size_t nvars, std::uint64_t p) {
  Dense acc;
  acc[Exps(nvars, 0)] = 1 % p;
  for (const auto& f : factors) {
    Dense next;
    for (const auto& [e, c] : acc) {
      for (std::size_t k = 0; k < nvars; ++k) {
        if (mod(f.coeff[k], p) == 0) continue;
        Exps e2 = e;
        ++e2[k];
        next[e2] = (next[e2] + c * mod(f.coeff[k], p)) % p;
      }
      if (mod(f.constant, p) != 0) next[e] = (next[e] + c * mod(f.constant, p)) % p;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    acc = std::move(next);
  }
  return acc;
}

// x^e -> x^{e'} with e' in [1, p-1] for e >= 1.
inline Dense reduce(const Dense& f, std::uint64_t p) {
  Dense out;
  for (const auto& [e, c] : f) {
    Exps r = e;
    for (auto& x : r) {
      while (x >= p) x -= (p - 1);
    }
    out[r] = (out[r] + c) % p;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::uint64_t eval(const Dense& f, const std::vector<std::uint64_t>& x, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& [e, c] : f) {
    std::uint64_t t = c;
    for (std::size_t k = 0; k < e.size(); ++k) t = t * powmod(x[k], e[k], p) % p;
    total = (total + t) % p;
  }
  return total;
}

// Quotient and remainder of dense univariate a (a[k] = coeff of x^k) by b.
inline std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> long_divide(
    std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b, std::uint64_t p) {
  std::size_t db = b.size() - 1;
  while (b[db] == 0) --db;
  const std::uint64_t lead_inv = powmod(b[db], p - 2, p);
  std::vector<std::uint64_t> q(a.size() > db ? a.size() - db : 1, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::uint64_t c = a[k] * lead_inv % p;
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t t = 0; t <= db; ++t) a[k - db + t] = mod(static_cast<std::int64_t>(a[k - db + t]) - static_cast<std::int64_t>(c * b[t] % p), p);
  }
  a.resize(std::min(a.size(), db));
  return {q, a};
}

// Multiplicity of (x - beta) in nonzero dense univariate f by long division.
inline std::uint32_t root_multiplicity(std::vector<std::uint64_t> f, std::uint64_t beta,
                                       std::uint64_t p) {
  std::uint32_t k = 0;
  const std::vector<std::uint64_t> lin{mod(-static_cast<std::int64_t>(beta), p), 1};
  while (f.size() > 1) {
    auto [q, r] = long_divide(f, lin, p);
    if (std::any_of(r.begin(), r.end(), [](auto x) { return x != 0; })) break;
    f = q;
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    ++k;
  }
  return k;
}

// Number of unlabeled graphs on n vertices by Burnside's lemma over S_n
// acting on vertex pairs.
inline std::uint64_t count_graphs(std::uint32_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t fixed_total = 0, group = 0;
  do {
    ++group;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
    std::uint32_t cycles = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (seen[{a, b}]) continue;
        ++cycles;
        std::pair<std::uint32_t, std::uint32_t> cur{a, b};
        while (!seen[cur]) {
          seen[cur] = true;
          std::uint32_t x = perm[cur.first], y = perm[cur.second];
          cur = {std::min(x, y), std::max(x, y)};
        }
      }
    }
    fixed_total += std::uint64_t{1} << cycles;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed_total / group;
}

// Connected unlabeled graph counts c_1..c_max via the inverse Euler
// transform of the all-graph counts.
inline std::vector<std::uint64_t> connected_counts(std::uint32_t max_n) {
  std::vector<std::int64_t> g(max_n + 1), c(max_n + 1, 0);
  g[0] = 1;
  for (std::uint32_t n = 1; n <= max_n; ++n) g[n] = static_cast<std::int64_t>(count_graphs(n));
  // g = Euler(c): n g_n = sum_{k=1}^n b_k g_{n-k}, b_k = sum_{d | k} d c_d.
  std::vector<std::int64_t> b(max_n + 1, 0);
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    std::int64_t s = static_cast<std::int64_t>(n) * g[n];
    for (std::uint32_t k = 1; k < n; ++k) s -= b[k] * g[n - k];
    b[n] = s;  // since g_0 = 1
    std::int64_t dsum = 0;
    for (std::uint32_t d = 1; d < n; ++d) {
      if (n % d == 0) dsum += static_cast<std::int64_t>(d) * c[d];
    }
    c[n] = (b[n] - dsum) / n;
  }
  return {c.begin(), c.end()};
}

}  // namespace oracle
