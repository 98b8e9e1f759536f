#include "tcolor/mpoly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace tcolor {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [v, e] : m.factors()) {
      const std::uint64_t key = (static_cast<std::uint64_t>(v.kind) << 56) ^
                                (static_cast<std::uint64_t>(v.index) << 24) ^ e;
      h ^= key + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using Accumulator = std::unordered_map<Monomial, std::uint64_t, MonomialHash>;

void check_same_modulus(const SparsePoly& f, const SparsePoly& g) {
  if (f.modulus() != g.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "moduli " + std::to_string(f.modulus()) + " and " +
                                                std::to_string(g.modulus()));
  }
}

Monomial reduce_monomial(const Monomial& m, std::uint32_t p, std::optional<VarId> keep) {
  std::vector<Monomial::Factor> out;
  out.reserve(m.factors().size());
  for (const auto& [v, e] : m.factors()) {
    out.emplace_back(v, keep && *keep == v ? e : reduce_exponent(e, p));
  }
  return Monomial(std::move(out));
}

SparsePoly from_accumulator(std::uint32_t p, Accumulator&& acc) {
  SparsePoly out(p);
  for (auto& [m, c] : acc) {
    if (c % p != 0) out.add_term(m, Fe{static_cast<std::uint32_t>(c % p)});
  }
  return out;
}

// Synthetic division of dense coefficients c (c[k] of x^k) by (x - beta).
// Returns the remainder; c is replaced by the quotient.
Fe synthetic_divide(std::vector<Fe>& c, Fe beta, const Zp& F) {
  if (c.empty()) return Fe{0};
  std::vector<Fe> q(c.size() > 1 ? c.size() - 1 : 0);
  Fe carry{0};
  for (std::size_t k = c.size(); k-- > 0;) {
    const Fe value = F.add(c[k], F.mul(carry, beta));
    if (k == 0) {
      carry = value;
    } else {
      q[k - 1] = value;
      carry = value;
    }
  }
  c = std::move(q);
  return carry;
}

void trim(std::vector<Fe>& c) {
  while (!c.empty() && c.back().v == 0) c.pop_back();
}

}  // namespace

std::string VarId::name() const {
  return (kind == VarKind::Vertex ? "v" : "e") + std::to_string(index);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
  factors_ = std::move(merged);
}

Monomial Monomial::var(VarId v, std::uint64_t exponent) { return Monomial({{v, exponent}}); }

std::uint64_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Factor> out;
  out.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < other.factors_.size()) {
    if (j == other.factors_.size() ||
        (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
      out.push_back(factors_[i++]);
    } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
      out.push_back(other.factors_[j++]);
    } else {
      out.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
      ++i;
      ++j;
    }
  }
  Monomial m;
  m.factors_ = std::move(out);
  return m;
}

Monomial Monomial::without(VarId v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != v) m.factors_.push_back(f);
  }
  return m;
}

Monomial Monomial::with_exponent(VarId v, std::uint64_t exponent) const {
  std::vector<Factor> out = without(v).factors_;
  out.emplace_back(v, exponent);
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
      ++i;
      ++j;
    } else {
      // The side holding the smaller variable has the larger exponent there.
      return fb[j].first < fa[i].first;
    }
  }
  return false;
}

// -------------------------------------------------------------- SparsePoly

SparsePoly::SparsePoly(std::uint32_t p) : p_(p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2");
}

SparsePoly SparsePoly::constant(std::uint32_t p, std::int64_t c) {
  SparsePoly f(p);
  f.add_term(Monomial(), Zp(p).from_int(c));
  return f;
}

SparsePoly SparsePoly::variable(std::uint32_t p, VarId v) {
  SparsePoly f(p);
  f.add_term(Monomial::var(v), Fe{1 % p});
  return f;
}

SparsePoly SparsePoly::linear(std::uint32_t p, VarId x, std::int64_t shift) {
  SparsePoly f = variable(p, x);
  f.add_term(Monomial(), Zp(p).from_int(-shift));
  return f;
}

SparsePoly SparsePoly::difference(std::uint32_t p, VarId x, VarId y) {
  SparsePoly f = variable(p, x);
  f.add_term(Monomial::var(y), Fe{p - 1});
  return f;
}

SparsePoly SparsePoly::univariate(std::uint32_t p, VarId x, std::span<const Fe> coefficients) {
  SparsePoly f(p);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    f.add_term(Monomial::var(x, k), Fe{coefficients[k].v % p});
  }
  return f;
}

Fe SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Fe{0} : it->second;
}

void SparsePoly::add_term(const Monomial& m, Fe c) {
  if (c.v % p_ == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, Fe{c.v % p_});
  if (!inserted) {
    it->second = Fe{static_cast<std::uint32_t>((it->second.v + c.v % p_) % p_)};
    if (it->second.v == 0) terms_.erase(it);
  }
}

std::set<VarId> SparsePoly::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.insert(f.first);
  }
  return vars;
}

std::uint64_t SparsePoly::degree_in(VarId v) const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::uint64_t SparsePoly::max_var_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) d = std::max(d, f.second);
  }
  return d;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::vector<Fe> SparsePoly::univariate_coefficients(VarId v) const {
  std::vector<Fe> c(degree_in(v) + 1, Fe{0});
  for (const auto& [m, coef] : terms_) {
    if (m.factors().size() > 1 || (m.factors().size() == 1 && m.factors()[0].first != v)) {
      throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in " + v.name());
    }
    c[m.exponent(v)] = coef;
  }
  if (terms_.empty()) c.clear();
  return c;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->first.is_one()) {
      os << it->second.v;
    } else if (it->second.v == 1) {
      os << it->first.to_string();
    } else {
      os << it->second.v << "*" << it->first.to_string();
    }
  }
  return os.str();
}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
  check_same_modulus(f, g);
  SparsePoly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

SparsePoly sub(const SparsePoly& f, const SparsePoly& g) {
  check_same_modulus(f, g);
  SparsePoly out = f;
  const Zp F(f.modulus());
  for (const auto& [m, c] : g.terms()) out.add_term(m, F.neg(c));
  return out;
}

SparsePoly scale(const SparsePoly& f, Fe c) {
  SparsePoly out(f.modulus());
  const Zp F(f.modulus());
  for (const auto& [m, coef] : f.terms()) out.add_term(m, F.mul(coef, c));
  return out;
}

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) {
  check_same_modulus(f, g);
  const std::uint32_t p = f.modulus();
  Accumulator acc;
  acc.reserve(f.size() * g.size());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      auto& slot = acc[mf * mg];
      slot = (slot + static_cast<std::uint64_t>(cf.v) * cg.v) % p;
    }
  }
  return from_accumulator(p, std::move(acc));
}

SparsePoly mul_reduced(const SparsePoly& f, const SparsePoly& g, std::optional<VarId> keep,
                       Budget* budget) {
  check_same_modulus(f, g);
  const std::uint32_t p = f.modulus();
  if (budget) budget->charge(static_cast<std::uint64_t>(f.size()) * g.size(), "mul_reduced");
  Accumulator acc;
  acc.reserve(std::max(f.size(), g.size()) * 2);
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      auto& slot = acc[reduce_monomial(mf * mg, p, keep)];
      slot = (slot + static_cast<std::uint64_t>(cf.v) * cg.v) % p;
    }
  }
  return from_accumulator(p, std::move(acc));
}

std::uint64_t reduce_exponent(std::uint64_t e, std::uint32_t p) {
  if (e == 0) return 0;
  return (e - 1) % (p - 1) + 1;
}

SparsePoly fermat_reduce(const SparsePoly& f) {
  SparsePoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    out.add_term(reduce_monomial(m, f.modulus(), std::nullopt), c);
  }
  return out;
}

SparsePoly fermat_reduce_except(const SparsePoly& f, VarId keep) {
  SparsePoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) out.add_term(reduce_monomial(m, f.modulus(), keep), c);
  return out;
}

Fe eval(const SparsePoly& f, const Point& point) {
  const Zp F(f.modulus());
  Fe total{0};
  for (const auto& [m, c] : f.terms()) {
    Fe term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw Error(ErrorCode::MissingVariable, v.name());
      term = F.mul(term, F.pow(it->second, e));
    }
    total = F.add(total, term);
  }
  return total;
}

SparsePoly substitute(const SparsePoly& f, const Point& partial) {
  const Zp F(f.modulus());
  SparsePoly out(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    Fe coef = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = partial.find(v);
      if (it == partial.end()) {
        rest.emplace_back(v, e);
      } else {
        coef = F.mul(coef, F.pow(it->second, e));
      }
    }
    out.add_term(Monomial(std::move(rest)), coef);
  }
  return out;
}

// ------------------------------------------------------------ FactoredPoly

FactoredPoly::FactoredPoly(std::uint32_t p, std::vector<SparsePoly> factors) : p_(p) {
  for (auto& f : factors) push(std::move(f));
}

void FactoredPoly::push(SparsePoly factor) {
  if (factor.modulus() != p_) {
    throw Error(ErrorCode::ModulusMismatch, "factor modulus differs from product modulus");
  }
  factors_.push_back(std::move(factor));
}

void FactoredPoly::append(const FactoredPoly& other) {
  for (const auto& f : other.factors_) push(f);
}

std::set<VarId> FactoredPoly::variables() const {
  std::set<VarId> vars;
  for (const auto& f : factors_) vars.merge(f.variables());
  return vars;
}

SparsePoly FactoredPoly::expand() const {
  SparsePoly out = SparsePoly::constant(p_, 1);
  for (const auto& f : factors_) out = mul(out, f);
  return out;
}

SparsePoly FactoredPoly::expand_reduced(std::optional<VarId> keep, Budget* budget) const {
  SparsePoly out = SparsePoly::constant(p_, 1);
  for (const auto& f : factors_) out = mul_reduced(out, f, keep, budget);
  return out;
}

Fe eval(const FactoredPoly& f, const Point& point) {
  const Zp F(f.modulus());
  Fe value{1 % f.modulus()};
  for (const auto& factor : f.factors()) {
    value = F.mul(value, eval(factor, point));
    if (value.v == 0) break;
  }
  return value;
}

FactoredPoly substitute(const FactoredPoly& f, const Point& partial) {
  const Zp F(f.modulus());
  FactoredPoly out(f.modulus());
  Fe constant{1 % f.modulus()};
  std::vector<SparsePoly> rest;
  for (const auto& factor : f.factors()) {
    SparsePoly s = substitute(factor, partial);
    if (s.is_constant()) {
      constant = F.mul(constant, s.coefficient(Monomial()));
    } else {
      rest.push_back(std::move(s));
    }
  }
  if (constant.v == 0) {
    out.push(SparsePoly(f.modulus()));
    return out;
  }
  if (constant.v != 1 || rest.empty()) out.push(SparsePoly::constant(f.modulus(), constant.v));
  for (auto& r : rest) out.push(std::move(r));
  return out;
}

// --------------------------------------------------------------- zero test

ZeroTest is_zero_reduced(const SparsePoly& f, Budget& budget) {
  const SparsePoly reduced = fermat_reduce(f);
  if (reduced.is_zero()) return {ZeroTest::Kind::Zero, {}, "no surviving monomial"};

  const std::uint32_t p = f.modulus();
  const std::set<VarId> var_set = reduced.variables();
  const std::vector<VarId> vars(var_set.begin(), var_set.end());
  Point point;
  for (VarId v : vars) point[v] = Fe{0};
  std::vector<std::uint32_t> digits(vars.size(), 0);
  while (true) {
    if (!budget.can_afford(1)) {
      return {ZeroTest::Kind::Inconclusive, {}, "witness search exceeded budget"};
    }
    budget.charge(1, "is_zero_reduced");
    if (eval(reduced, point).v != 0) return {ZeroTest::Kind::NonZero, point, "grid witness"};
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++digits[k] < p) {
        point[vars[k]] = Fe{digits[k]};
        break;
      }
      digits[k] = 0;
      point[vars[k]] = Fe{0};
      if (k == 0) {
        throw Error(ErrorCode::InvariantViolation,
                    "reduced polynomial " + reduced.to_string() + " vanishes on the whole grid");
      }
    }
    if (vars.empty()) {
      throw Error(ErrorCode::InvariantViolation, "nonzero constant evaluated to zero");
    }
  }
}

// ------------------------------------------------------- linear factors

std::uint32_t linear_multiplicity(const SparsePoly& f, Fe beta) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "linear_multiplicity of 0");
  const auto vars = f.variables();
  if (vars.size() > 1) throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate");
  if (vars.empty()) return 0;
  const Zp F(f.modulus());
  std::vector<Fe> c = f.univariate_coefficients(*vars.begin());
  std::uint32_t k = 0;
  while (c.size() > 1) {
    std::vector<Fe> q = c;
    if (synthetic_divide(q, beta, F).v != 0) break;
    c = std::move(q);
    trim(c);
    ++k;
  }
  return k;
}

LinearDivision divide_linear(const SparsePoly& f, VarId var, Fe beta) {
  const std::uint32_t p = f.modulus();
  const Zp F(p);
  std::map<Monomial, std::vector<Fe>, GrlexLess> groups;
  for (const auto& [m, c] : f.terms()) {
    auto& coeffs = groups[m.without(var)];
    const auto e = m.exponent(var);
    if (coeffs.size() <= e) coeffs.resize(e + 1, Fe{0});
    coeffs[e] = c;
  }
  LinearDivision out{SparsePoly(p), SparsePoly(p)};
  for (auto& [rest, coeffs] : groups) {
    const Fe r = synthetic_divide(coeffs, beta, F);
    out.remainder.add_term(rest, r);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      out.quotient.add_term(rest * Monomial::var(var, k), coeffs[k]);
    }
  }
  return out;
}

std::uint32_t linear_multiplicity_in(const SparsePoly& f, VarId var, Fe beta) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "linear_multiplicity of 0");
  SparsePoly current = f;
  std::uint32_t k = 0;
  while (current.degree_in(var) > 0) {
    LinearDivision d = divide_linear(current, var, beta);
    if (!d.remainder.is_zero()) break;
    current = std::move(d.quotient);
    ++k;
  }
  return k;
}

// ------------------------------------------------------- interpolation

std::vector<Fe> lagrange_basis_row(std::uint32_t p, Fe a) {
  const Zp F(p);
  if (a.v >= p) throw Error(ErrorCode::InvalidArgument, "abscissa outside Z_p");
  // prod_{b in Z_p} (x - b) = x^p - x
  std::vector<Fe> numer(p + 1, Fe{0});
  numer[p] = Fe{1};
  numer[1] = Fe{p - 1};
  synthetic_divide(numer, a, F);  // exact: a is a root of the master polynomial
  // denominator prod_{b != a} (a - b) = numer(a)
  Fe denom{0};
  for (std::size_t k = numer.size(); k-- > 0;) denom = F.add(F.mul(denom, a), numer[k]);
  const Fe scale_by = F.inv(denom);
  for (auto& c : numer) c = F.mul(c, scale_by);
  return numer;
}

const std::vector<std::vector<Fe>>& lagrange_basis(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<std::vector<std::vector<Fe>>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    auto basis = std::make_unique<std::vector<std::vector<Fe>>>();
    basis->reserve(p);
    for (std::uint32_t a = 0; a < p; ++a) basis->push_back(lagrange_basis_row(p, Fe{a}));
    slot = std::move(basis);
  }
  return *slot;
}

SparsePoly reconstruct_univariate(std::uint32_t p, VarId x,
                                  std::span<const std::pair<Fe, Fe>> samples) {
  if (samples.size() != p) {
    throw Error(ErrorCode::WrongSampleCount,
                "need " + std::to_string(p) + " samples, got " + std::to_string(samples.size()));
  }
  std::vector<bool> seen(p, false);
  for (const auto& [a, y] : samples) {
    if (a.v >= p || seen[a.v]) {
      throw Error(ErrorCode::DuplicateAbscissa, "abscissa " + std::to_string(a.v));
    }
    seen[a.v] = true;
  }
  const Zp F(p);
  const auto& basis = lagrange_basis(p);
  std::vector<Fe> coeffs(p, Fe{0});
  for (const auto& [a, y] : samples) {
    if (y.v == 0) continue;
    for (std::uint32_t k = 0; k < p; ++k) coeffs[k] = F.add(coeffs[k], F.mul(y, basis[a.v][k]));
  }
  return SparsePoly::univariate(p, x, coeffs);
}

// ------------------------------------------------------------ Evaluable

Evaluable::Evaluable(std::uint32_t p, std::vector<VarId> vars, Fn fn)
    : p_(p), vars_(std::move(vars)), fn_(std::move(fn)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Evaluable Evaluable::from(const SparsePoly& f) {
  auto vs = f.variables();
  return Evaluable(f.modulus(), {vs.begin(), vs.end()},
                   [f](const Point& pt) { return tcolor::eval(f, pt); });
}

Evaluable Evaluable::from(const FactoredPoly& f) {
  auto vs = f.variables();
  return Evaluable(f.modulus(), {vs.begin(), vs.end()},
                   [f](const Point& pt) { return tcolor::eval(f, pt); });
}

namespace {

Fe extract_recursive(const Evaluable& f, const std::vector<VarId>& targets,
                     const std::vector<std::uint64_t>& exponents, std::size_t level, Point& point) {
  if (level == targets.size()) return f.eval(point);
  const std::uint32_t p = f.modulus();
  const Zp F(p);
  const auto& basis = lagrange_basis(p);
  const std::uint64_t k = exponents[level];
  Fe coefficient{0};
  for (std::uint32_t a = 0; a < p; ++a) {
    const Fe weight = basis[a][k];
    if (weight.v == 0) continue;
    point[targets[level]] = Fe{a};
    coefficient =
        F.add(coefficient, F.mul(weight, extract_recursive(f, targets, exponents, level + 1, point)));
  }
  point.erase(targets[level]);
  return coefficient;
}

std::uint64_t grid_size(std::uint32_t p, std::size_t dims) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    if (n > Budget::kUnlimited / p) return Budget::kUnlimited;
    n *= p;
  }
  return n;
}

}  // namespace

Evaluable coeff_extract(const Evaluable& f, std::vector<VarId> targets,
                        std::vector<std::uint64_t> exponents, Budget* budget) {
  if (targets.size() != exponents.size()) {
    throw Error(ErrorCode::InvalidArgument, "one exponent per target variable");
  }
  const std::uint32_t p = f.modulus();
  for (auto e : exponents) {
    if (e > p - 1) throw Error(ErrorCode::ExponentTooLarge, std::to_string(e) + " > p-1");
  }
  std::vector<VarId> remaining;
  for (VarId v : f.vars()) {
    if (std::find(targets.begin(), targets.end(), v) == targets.end()) remaining.push_back(v);
  }
  const std::uint64_t cost = grid_size(p, targets.size());
  return Evaluable(p, remaining,
                   [f, targets = std::move(targets), exponents = std::move(exponents), budget,
                    cost](const Point& outer) {
                     if (budget) budget->charge(cost, "coeff_extract");
                     Point point = outer;
                     return extract_recursive(f, targets, exponents, 0, point);
                   });
}

SparsePoly reconstruct_from_table(std::uint32_t p, const std::vector<VarId>& vars,
                                  std::vector<Fe> values) {
  const std::size_t dims = vars.size();
  if (values.size() != grid_size(p, dims)) {
    throw Error(ErrorCode::WrongSampleCount, "value table does not cover the grid");
  }
  const Zp F(p);
  const auto& basis = lagrange_basis(p);
  // Interpolate along each axis in turn; after all passes entry (k_1..k_d)
  // holds the coefficient of prod x_i^{k_i}.
  std::vector<Fe> fiber(p), coeffs(p);
  std::size_t stride = values.size();
  for (std::size_t axis = 0; axis < dims; ++axis) {
    stride /= p;
    const std::size_t block = stride * p;
    for (std::size_t base = 0; base < values.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::uint32_t a = 0; a < p; ++a) fiber[a] = values[base + off + a * stride];
        std::fill(coeffs.begin(), coeffs.end(), Fe{0});
        for (std::uint32_t a = 0; a < p; ++a) {
          if (fiber[a].v == 0) continue;
          for (std::uint32_t k = 0; k < p; ++k) {
            coeffs[k] = F.add(coeffs[k], F.mul(fiber[a], basis[a][k]));
          }
        }
        for (std::uint32_t k = 0; k < p; ++k) values[base + off + k * stride] = coeffs[k];
      }
    }
  }
  SparsePoly out(p);
  std::vector<Monomial::Factor> exps(dims);
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (values[idx].v == 0) continue;
    std::size_t rest = idx;
    for (std::size_t d = dims; d-- > 0;) {
      exps[d] = {vars[d], rest % p};
      rest /= p;
    }
    out.add_term(Monomial(exps), values[idx]);
  }
  return out;
}

SparsePoly reconstruct_from_grid(const Evaluable& f, const std::vector<VarId>& vars,
                                 Budget* budget) {
  const std::uint32_t p = f.modulus();
  const std::uint64_t n = grid_size(p, vars.size());
  if (budget) budget->charge(n, "reconstruct_from_grid");
  std::vector<Fe> values(n);
  Point point;
  for (VarId v : vars) point[v] = Fe{0};
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t d = vars.size(); d-- > 0;) {
      point[vars[d]] = Fe{static_cast<std::uint32_t>(rest % p)};
      rest /= p;
    }
    values[idx] = f.eval(point);
  }
  return reconstruct_from_table(p, vars, std::move(values));
}

}  // namespace tcolor
