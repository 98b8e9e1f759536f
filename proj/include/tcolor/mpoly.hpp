#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcolor/error.hpp"
#include "tcolor/ff.hpp"

namespace tcolor {

enum class VarKind : std::uint8_t { Vertex = 0, Edge = 1 };

// Polynomial variable. Total order: every vertex variable precedes every edge
// variable; within a kind, by 1-based index.
struct VarId {
  VarKind kind = VarKind::Vertex;
  std::uint32_t index = 1;

  static VarId vertex(std::uint32_t i) { return {VarKind::Vertex, i}; }
  static VarId edge(std::uint32_t j) { return {VarKind::Edge, j}; }

  std::string name() const;

  friend constexpr bool operator==(VarId, VarId) = default;
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

// Sparse exponent vector; zero exponents are never stored.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint64_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial var(VarId v, std::uint64_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t exponent(VarId v) const;
  std::uint64_t total_degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial without(VarId v) const;
  Monomial with_exponent(VarId v, std::uint64_t exponent) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order over the VarId order: higher total degree is
// greater; ties are broken by the exponent of the smallest variable first.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

using Point = std::map<VarId, Fe>;

// Exact polynomial over Z_p. Terms iterate in increasing graded-lex order,
// so the last term is the graded-lex greatest monomial.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Fe, GrlexLess>;

  explicit SparsePoly(std::uint32_t p);

  static SparsePoly constant(std::uint32_t p, std::int64_t c);
  static SparsePoly variable(std::uint32_t p, VarId v);
  // x - shift
  static SparsePoly linear(std::uint32_t p, VarId x, std::int64_t shift);
  // x - y
  static SparsePoly difference(std::uint32_t p, VarId x, VarId y);
  // Univariate polynomial from coefficients c[k] of x^k (k may exceed p-1).
  static SparsePoly univariate(std::uint32_t p, VarId x, std::span<const Fe> coefficients);

  std::uint32_t modulus() const { return p_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Fe coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Fe c);

  std::set<VarId> variables() const;
  std::uint64_t degree_in(VarId v) const;
  std::uint64_t max_var_degree() const;
  bool is_constant() const;
  // Dense coefficient list in `v`; requires the polynomial to involve only `v`.
  std::vector<Fe> univariate_coefficients(VarId v) const;

  std::string to_string() const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::uint32_t p_;
  TermMap terms_;
};

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly sub(const SparsePoly& f, const SparsePoly& g);
SparsePoly scale(const SparsePoly& f, Fe c);
// Plain distributive product; no Fermat reduction.
SparsePoly mul(const SparsePoly& f, const SparsePoly& g);
// Product followed by Fermat reduction of every variable except `keep`.
SparsePoly mul_reduced(const SparsePoly& f, const SparsePoly& g,
                       std::optional<VarId> keep = std::nullopt, Budget* budget = nullptr);

inline SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) { return add(f, g); }
inline SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) { return sub(f, g); }
inline SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) { return mul(f, g); }

// x^e and x^reduce_exponent(e, p) agree as functions on Z_p.
std::uint64_t reduce_exponent(std::uint64_t e, std::uint32_t p);

SparsePoly fermat_reduce(const SparsePoly& f);
SparsePoly fermat_reduce_except(const SparsePoly& f, VarId keep);

Fe eval(const SparsePoly& f, const Point& point);
SparsePoly substitute(const SparsePoly& f, const Point& partial);

// Product of factors, kept unexpanded so point evaluation costs one pass over
// the factors.
class FactoredPoly {
 public:
  explicit FactoredPoly(std::uint32_t p) : p_(p) {}
  FactoredPoly(std::uint32_t p, std::vector<SparsePoly> factors);

  std::uint32_t modulus() const { return p_; }
  const std::vector<SparsePoly>& factors() const { return factors_; }

  void push(SparsePoly factor);
  void append(const FactoredPoly& other);

  std::set<VarId> variables() const;
  SparsePoly expand() const;
  // Expanded product with every variable except `keep` Fermat-reduced after
  // each multiplication.
  SparsePoly expand_reduced(std::optional<VarId> keep = std::nullopt,
                            Budget* budget = nullptr) const;

 private:
  std::uint32_t p_;
  std::vector<SparsePoly> factors_;
};

Fe eval(const FactoredPoly& f, const Point& point);
// Substitutes every factor; factors that become constants are folded into a
// single leading constant factor.
FactoredPoly substitute(const FactoredPoly& f, const Point& partial);

struct ZeroTest {
  enum class Kind { Zero, NonZero, Inconclusive };
  Kind kind = Kind::Zero;
  Point witness;
  std::string reason;
};

// Decides whether the Fermat-reduced form of f is the zero polynomial. A
// nonempty reduced term map must come with a grid witness; failing to find
// one on an exhausted grid throws InvariantViolation.
ZeroTest is_zero_reduced(const SparsePoly& f, Budget& budget);

// Largest k with (x - beta)^k | f, for univariate nonzero f.
std::uint32_t linear_multiplicity(const SparsePoly& f, Fe beta);
// Same, treating f as a polynomial in `var` over the other variables.
std::uint32_t linear_multiplicity_in(const SparsePoly& f, VarId var, Fe beta);

struct LinearDivision {
  SparsePoly quotient;
  SparsePoly remainder;  // free of the division variable
};
// f = (var - beta) * quotient + remainder.
LinearDivision divide_linear(const SparsePoly& f, VarId var, Fe beta);

// Coefficients of the Lagrange basis polynomial L_a (a = row) over all of
// Z_p; row a, column k is the coefficient of x^k. Cached per modulus.
const std::vector<std::vector<Fe>>& lagrange_basis(std::uint32_t p);
// Row a of the basis alone, in O(p).
std::vector<Fe> lagrange_basis_row(std::uint32_t p, Fe a);

// Unique polynomial of degree <= p-1 through p samples (a, f(a)) covering Z_p.
SparsePoly reconstruct_univariate(std::uint32_t p, VarId x,
                                  std::span<const std::pair<Fe, Fe>> samples);

// A polynomial known only through point evaluation.
class Evaluable {
 public:
  using Fn = std::function<Fe(const Point&)>;

  Evaluable(std::uint32_t p, std::vector<VarId> vars, Fn fn);

  static Evaluable from(const SparsePoly& f);
  static Evaluable from(const FactoredPoly& f);

  std::uint32_t modulus() const { return p_; }
  const std::vector<VarId>& vars() const { return vars_; }
  Fe eval(const Point& point) const { return fn_(point); }

 private:
  std::uint32_t p_;
  std::vector<VarId> vars_;
  Fn fn_;
};

// Coefficient of prod target_k^exponent_k in the Fermat-reduced form of f,
// as an evaluable function of the remaining variables. Each evaluation
// interpolates over p^|targets| specializations and charges that cost.
Evaluable coeff_extract(const Evaluable& f, std::vector<VarId> targets,
                        std::vector<std::uint64_t> exponents, Budget* budget = nullptr);

// Fermat-reduced polynomial of f over `vars` by full-grid evaluation and
// interpolation along each axis. Costs p^|vars| evaluations.
SparsePoly reconstruct_from_grid(const Evaluable& f, const std::vector<VarId>& vars,
                                 Budget* budget = nullptr);

// Reduced polynomial from a dense value table over Z_p^|vars| in row-major
// order (first variable slowest).
SparsePoly reconstruct_from_table(std::uint32_t p, const std::vector<VarId>& vars,
                                  std::vector<Fe> values);

}  // namespace tcolor
