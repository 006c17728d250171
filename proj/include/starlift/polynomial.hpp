#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "starlift/errors.hpp"
#include "starlift/field.hpp"

namespace starlift {

// Exponent vector over the 2n symplectic variables, x_1..x_n then p_1..p_n.
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Graded-lexicographic term order; fixes the canonical serialization order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Sparse multivariate polynomial in canonical form: no stored zero
// coefficients, so equality is map equality.
template <CoefficientField K>
class Polynomial {
 public:
  using Coeff = typename K::Element;
  using TermMap = std::map<Exponents, Coeff, GrlexLess>;

  explicit Polynomial(int num_vars) : vars_(num_vars) {}

  int num_vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::uint64_t degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
  }

  const Coeff* find(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  // Accumulates c into the term at e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Coeff& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != vars_)
      throw VariableMismatch("exponent vector has wrong variable count");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    check(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check(o);
    Polynomial r(vars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(vars_);
        for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Polynomial operator*(std::int64_t k) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void check(const Polynomial& o) const {
    if (vars_ != o.vars_)
      throw VariableMismatch("polynomials over different variable sets");
  }

  int vars_;
  TermMap terms_;
};

// Exact k-th partial derivative with respect to variable index v.
template <CoefficientField K>
Polynomial<K> derivative(const Polynomial<K>& f, int v, int order = 1) {
  if (v < 0 || v >= f.num_vars()) throw VariableMismatch("unknown variable index");
  if (order < 0) throw PreconditionViolation("derivative order must be >= 0");
  Polynomial<K> r(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[v] < static_cast<std::uint32_t>(order)) continue;
    auto coeff = c;
    for (int i = 0; i < order; ++i) coeff = coeff * static_cast<std::int64_t>(e[v] - i);
    Exponents d = e;
    d[v] -= static_cast<std::uint32_t>(order);
    r.add_term(d, coeff);
  }
  return r;
}

// Multi-index derivative: applies d^{alpha_i} in variable i for every i.
template <CoefficientField K>
Polynomial<K> derivative_multi(const Polynomial<K>& f, const Exponents& alpha) {
  if (static_cast<int>(alpha.size()) != f.num_vars())
    throw VariableMismatch("derivative multi-index has wrong variable count");
  Polynomial<K> r = f;
  for (int v = 0; v < f.num_vars(); ++v)
    if (alpha[v] > 0) r = derivative(r, v, static_cast<int>(alpha[v]));
  return r;
}

// {f,g} = sum_i (df/dx_i dg/dp_i - df/dp_i dg/dx_i) over n degrees of freedom.
template <CoefficientField K>
Polynomial<K> poisson_bracket(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.num_vars() != g.num_vars())
    throw VariableMismatch("poisson bracket over different variable sets");
  int n = f.num_vars() / 2;
  Polynomial<K> r(f.num_vars());
  for (int i = 0; i < n; ++i) {
    r = r + derivative(f, i) * derivative(g, n + i);
    r = r - derivative(f, n + i) * derivative(g, i);
  }
  return r;
}

// Polynomial algebra on symplectic R^{2n}: the context that constructs
// elements and answers unit questions.
template <CoefficientField K>
struct PolynomialAlgebra {
  using Field = K;
  using Element = Polynomial<K>;
  using Coeff = typename K::Element;
  static constexpr bool is_field = false;
  static constexpr bool is_commutative = true;

  PolynomialAlgebra(K field, int dof) : field_(std::move(field)), dof_(dof) {
    if (dof < 1) throw PreconditionViolation("polynomial algebra needs dof >= 1");
  }

  const K& field() const { return field_; }
  int dof() const { return dof_; }
  int num_vars() const { return 2 * dof_; }

  Element zero() const { return Element(num_vars()); }
  Element one() const { return constant(field_.one()); }

  Element constant(const Coeff& c) const {
    Element r(num_vars());
    r.add_term(Exponents(num_vars(), 0), c);
    return r;
  }

  Element from_int(std::int64_t n) const { return constant(field_.from_int(n)); }

  // Variable index v in [0, 2n): x_{v+1} for v < n, p_{v-n+1} otherwise.
  Element variable(int v) const {
    if (v < 0 || v >= num_vars()) throw VariableMismatch("unknown variable index");
    Exponents e(num_vars(), 0);
    e[v] = 1;
    Element r(num_vars());
    r.add_term(e, field_.one());
    return r;
  }

  Element monomial(const Exponents& e, const Coeff& c) const {
    Element r(num_vars());
    r.add_term(e, c);
    return r;
  }

  Element scalar_mul(const Coeff& c, const Element& f) const {
    Element r(num_vars());
    for (const auto& [e, fc] : f.terms()) r.add_term(e, c * fc);
    return r;
  }

  Coeff constant_term(const Element& f) const {
    const Coeff* c = f.find(Exponents(num_vars(), 0));
    return c ? *c : field_.zero();
  }

  bool is_constant(const Element& f) const {
    return f.is_zero() || (f.terms().size() == 1 && f.degree() == 0);
  }

  // Units of the polynomial ring are the nonzero constants.
  std::optional<Element> try_invert(const Element& f) const {
    if (!is_constant(f) || f.is_zero()) return std::nullopt;
    return constant(constant_term(f).inverse());
  }

  bool eq(const Element& a, const Element& b) const { return a == b; }

  Element sample(Rng& rng) const { return sample(rng, 2, 3); }

  Element sample_unit(Rng& rng) const { return constant(field_.sample_nonzero(rng)); }

  Element sample(Rng& rng, int max_degree, int max_terms) const {
    Element r(num_vars());
    int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
      Exponents e(num_vars(), 0);
      int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
      for (int d = 0; d < deg; ++d) e[rng.below(static_cast<std::uint64_t>(num_vars()))]++;
      r.add_term(e, field_.sample(rng));
    }
    return r;
  }

  std::string describe() const {
    return "polynomial[dof=" + std::to_string(dof_) + "]";
  }

  bool operator==(const PolynomialAlgebra& o) const {
    return field_ == o.field_ && dof_ == o.dof_;
  }

 private:
  K field_;
  int dof_;
};

}  // namespace starlift
