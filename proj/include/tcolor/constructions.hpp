#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcolor/error.hpp"
#include "tcolor/ff.hpp"
#include "tcolor/graph.hpp"
#include "tcolor/mpoly.hpp"

namespace tcolor {

struct Context {
  Graph g;
  NeighborIndex idx;
  Prime prime;

  Context(Graph graph, Prime prime);

  std::uint32_t p() const { return prime.value; }
  std::uint32_t n() const { return g.n; }
  std::uint32_t m() const { return g.m(); }
  std::uint32_t delta() const { return g.delta; }
  ColorSet palette(Fe alpha) const { return ColorSet(delta(), alpha, p()); }
  // alpha = delta + 2
  ColorSet default_palette() const;
};

enum class MonomialStrategy { GradedLex, LexMin };

const char* to_string(MonomialStrategy s);
std::optional<MonomialStrategy> parse_strategy(std::string_view s);

struct VertexMonomialChoice {
  std::vector<std::uint32_t> exponents;  // l_1..l_n
  Fe coefficient_at_zero;
  MonomialStrategy strategy = MonomialStrategy::GradedLex;
  std::uint64_t tuples_examined = 0;
};

// Coefficient of prod v_k^{l_k} in the reduced vertex polynomial, as a
// function of the edge values. The Lagrange sum over Z_p^n only has support
// on {1..delta+1}^n because of the palette factors, so each evaluation walks
// proper (delta+1)-colorings of the vertices.
class CpEvaluator {
 public:
  CpEvaluator(const Context& ctx, std::vector<std::uint32_t> exponents);

  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t edge_count() const { return m_; }

  // e[j-1] is the value of e_j.
  Fe eval(std::span<const Fe> e) const;
  Fe eval(const Point& point) const;
  // Charges cost() to the budget first.
  Fe eval(std::span<const Fe> e, Budget& budget) const;

  // Exact reduced polynomial in e_1..e_m; per-variable degree at most 2 by
  // construction. Costs (number of vertex colorings) * 3^m.
  SparsePoly symbolic(Budget* budget = nullptr) const;

  // Upper bound on the work of one evaluation: (delta+1)^n.
  std::uint64_t cost() const { return cost_; }

 private:
  template <class Visit>
  void for_each_coloring(Visit&& visit) const;

  std::uint32_t p_, n_, m_, colors_;
  std::vector<std::uint32_t> exponents_;
  std::vector<std::vector<Fe>> base_;  // base_[k][a-1] = w_{l_k}(a) * palette(a)
  std::vector<std::vector<std::uint32_t>> earlier_neighbors_;  // v_j adjacent to v_k with j < k
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::uint64_t cost_;
};

// Searches monomials of the reduced P(v, 0) in strategy order and returns the
// first with nonzero coefficient. Throws ZeroPolynomial when P(v, 0) vanishes
// on the whole grid, BudgetExceeded when the budget runs out.
VertexMonomialChoice choose_vertex_monomial(const Context& ctx, MonomialStrategy strategy,
                                            Budget& budget);

// Reference route: substitute the edge values into P, then extract the
// coefficient by nested Lagrange interpolation over all of Z_p^n.
Fe eval_CP_generic(const Context& ctx, std::span<const std::uint32_t> exponents,
                   std::span<const Fe> e, Budget* budget = nullptr);

enum class PolyKind { T, P, E_i, E_m, Q_i, Z_i, G, H, Kpoly };

const char* to_string(PolyKind k);

// Product of an optional C^{P'} factor and explicit factors.
struct PolyHandle {
  PolyKind kind = PolyKind::P;
  std::uint32_t index = 0;
  FactoredPoly factors;
  std::shared_ptr<const CpEvaluator> cp;

  Fe eval(const Point& point) const;
  std::set<VarId> variables() const;
};

std::vector<VarId> edge_vars(std::uint32_t m);
Point edge_point(std::span<const Fe> e);

PolyHandle build_P(const Context& ctx);
// E^i with palette K.
PolyHandle build_E_i(const Context& ctx, std::uint32_t i, const ColorSet& K);
PolyHandle build_E_m(const Context& ctx, const ColorSet& K);
PolyHandle build_T(const Context& ctx, const ColorSet& K);
// Q_i = C^{P'} * prod_{j <= i} E^j; Q_0 = C^{P'}.
PolyHandle build_Q(const Context& ctx, std::uint32_t i, const ColorSet& K,
                   std::shared_ptr<const CpEvaluator> cp);

// Edges at the endpoint of e_i with more neighbors (lower index on ties).
std::vector<std::uint32_t> z_edge_set(const Context& ctx, std::uint32_t i);
PolyHandle build_Z(const Context& ctx, std::uint32_t i, std::shared_ptr<const CpEvaluator> cp);
ZeroTest check_Z_nonzero(const Context& ctx, std::uint32_t i,
                         std::shared_ptr<const CpEvaluator> cp, Budget& budget);

// G = Q_{i-1} * prod_{j in M1} (e_j - alpha), with Q_{i-1} under palette K.
PolyHandle build_G(const Context& ctx, std::uint32_t i, const ColorSet& K,
                   std::span<const std::uint32_t> M1, std::shared_ptr<const CpEvaluator> cp);

// Expands a handle symbolically, Fermat-reducing every edge variable except
// `keep` after each multiplication.
SparsePoly expand_handle(const PolyHandle& h, std::optional<VarId> keep, Budget* budget);

// H_{e_j} = G' * (e_j - alpha).
SparsePoly build_H(const SparsePoly& G_reduced, std::uint32_t j, Fe alpha);

struct JPoly {
  SparsePoly J;        // univariate in the target
  Monomial reference;  // monomial in the other variables it is the coefficient of
};

// Coefficient of the graded-lex greatest monomial (in the variables other
// than `target`) of a polynomial reduced in every variable but `target`.
// Throws ZeroPolynomial when there is no such monomial.
JPoly build_J(const SparsePoly& G_except_target, VarId target);

struct KpolyResult {
  SparsePoly K;
  // (e_j - beta) divided the reduced G exactly for every e_j in M2.
  bool exact = true;
  std::vector<std::uint32_t> inexact_edges;
};

// (G' / prod_{M2} (e_j - beta)) * prod_{M2} (e_j - alpha) * prod_{l in Z_p \ {1..delta+1, beta}} (e_i - l)
KpolyResult build_Kpoly(const SparsePoly& G_reduced, std::span<const std::uint32_t> M2,
                        std::uint32_t i, std::uint32_t delta, Fe alpha, Fe beta);

}  // namespace tcolor
