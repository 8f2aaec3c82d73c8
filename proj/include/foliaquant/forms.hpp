#pragma once

// Antisymmetric tensor fields over an adapted chart. A Graded value is a
// sparse table of components keyed by strictly increasing index tuples; the
// component of key I is the coefficient of the basis element e^{I_0} ^ ... .
//
// The family tag fixes which indices are meaningful:
//   Exterior    - differential forms over all coordinates (global indices)
//   Leafwise    - leafwise forms over leaf coordinates (leaf ordinals)
//   Multivector - multivector fields over all coordinates (global indices)
// Values of different families never mix without an explicit conversion.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foliaquant/chart.hpp"
#include "foliaquant/complex_expr.hpp"
#include "foliaquant/errors.hpp"
#include "foliaquant/zero_test.hpp"

namespace fq {

using IndexTuple = std::vector<std::size_t>;

struct Exterior {
  static std::size_t space(const AdaptedChart& c) { return c.dim(); }
  static std::string basis_name(const AdaptedChart& c, std::size_t k) { return "d" + c.name(k); }
  static constexpr const char* joiner = "^";
};

struct Leafwise {
  static std::size_t space(const AdaptedChart& c) { return c.leaf_dim(); }
  static std::string basis_name(const AdaptedChart& c, std::size_t k) { return "dt" + c.leaf().at(k); }
  static constexpr const char* joiner = "^";
};

struct Multivector {
  static std::size_t space(const AdaptedChart& c) { return c.dim(); }
  static std::string basis_name(const AdaptedChart& c, std::size_t k) { return "D" + c.name(k); }
  static constexpr const char* joiner = "^";
};

/// Sorts an index tuple in place; returns its permutation sign, or 0 when an
/// index repeats.
int sort_with_sign(IndexTuple& indices);

template <class Family, class Scalar = Expr>
class Graded {
 public:
  using Table = std::map<IndexTuple, Scalar>;

  Graded(ChartPtr chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {
    if (!chart_) throw DomainError("graded object without a chart");
  }

  static Graded scalar(ChartPtr chart, Scalar f) {
    Graded g(std::move(chart), 0);
    g.add({}, std::move(f));
    return g;
  }

  /// c * e^{indices}, indices in any order.
  static Graded basis(ChartPtr chart, IndexTuple indices, Scalar c = Scalar(1)) {
    Graded g(std::move(chart), indices.size());
    g.add(std::move(indices), std::move(c));
    return g;
  }

  const ChartPtr& chart() const noexcept { return chart_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t space() const { return Family::space(*chart_); }
  const Table& components() const noexcept { return table_; }

  /// Component for an index tuple in any order (antisymmetry applied).
  Scalar get(IndexTuple indices) const {
    int s = sort_with_sign(indices);
    if (s == 0) return Scalar();
    auto it = table_.find(indices);
    if (it == table_.end()) return Scalar();
    return s > 0 ? it->second : -it->second;
  }

  /// Component of a degree-0 object.
  Scalar value() const { return get({}); }

  void add(IndexTuple indices, const Scalar& c) {
    if (indices.size() != degree_) throw DomainError("index tuple does not match degree");
    for (auto k : indices) {
      if (k >= space()) throw DomainError("index out of range");
    }
    int s = sort_with_sign(indices);
    if (s == 0 || c.is_structurally_zero()) return;
    auto [it, inserted] = table_.try_emplace(indices, s > 0 ? c : -c);
    if (!inserted) {
      if (s > 0) {
        it->second += c;
      } else {
        it->second -= c;
      }
      if (it->second.is_structurally_zero()) table_.erase(it);
    }
  }

  void set(IndexTuple indices, const Scalar& c) {
    IndexTuple sorted = indices;
    if (sort_with_sign(sorted) == 0) {
      if (!c.is_structurally_zero()) throw DomainError("nonzero component on a repeated index");
      return;
    }
    table_.erase(sorted);
    add(std::move(indices), c);
  }

  bool is_structurally_zero() const noexcept { return table_.empty(); }

  Graded operator-() const {
    Graded r = *this;
    for (auto& [k, v] : r.table_) v = -v;
    return r;
  }

  Graded& operator+=(const Graded& o) {
    check_compatible(o);
    for (const auto& [k, v] : o.table_) add(k, v);
    return *this;
  }
  Graded& operator-=(const Graded& o) { return *this += -o; }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }

  friend Graded operator*(const Scalar& f, const Graded& g) {
    Graded r(g.chart_, g.degree_);
    if (f.is_structurally_zero()) return r;
    for (const auto& [k, v] : g.table_) r.add(k, f * v);
    return r;
  }

  /// Applies fn to every component.
  template <class Fn>
  auto map(Fn fn) const {
    using Out = decltype(fn(std::declval<const Scalar&>()));
    Graded<Family, Out> r(chart_, degree_);
    for (const auto& [k, v] : table_) r.add(k, fn(v));
    return r;
  }

  std::string str() const {
    if (table_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : table_) {
      if (!s.empty()) s += " + ";
      s += "(" + v.str() + ")";
      for (std::size_t n = 0; n < k.size(); ++n) {
        s += n == 0 ? "*" : Family::joiner;
        s += Family::basis_name(*chart_, k[n]);
      }
    }
    return s;
  }

  void check_compatible(const Graded& o) const {
    if (!(*chart_ == *o.chart_)) throw DomainError("graded objects on different charts");
    if (degree_ != o.degree_) throw DomainError("degree mismatch");
  }

 private:
  ChartPtr chart_;
  std::size_t degree_;
  Table table_;
};

using ExteriorForm = Graded<Exterior>;
using LeafwiseForm = Graded<Leafwise>;
using MultivectorField = Graded<Multivector>;
using ComplexExteriorForm = Graded<Exterior, Complex>;
using ComplexLeafwiseForm = Graded<Leafwise, Complex>;
using ComplexMultivectorField = Graded<Multivector, Complex>;

template <class F, class S>
Truth is_zero(const Graded<F, S>& g, const ZeroTestOptions& options = {}) {
  Truth t = Truth::holds;
  for (const auto& [k, v] : g.components()) {
    t = t && is_zero(v, options);
    if (t == Truth::fails) return t;
  }
  return t;
}

template <class F, class S>
Truth equal(const Graded<F, S>& a, const Graded<F, S>& b, const ZeroTestOptions& options = {}) {
  return is_zero(a - b, options);
}

template <class F, class S>
Graded<F, S> wedge(const Graded<F, S>& a, const Graded<F, S>& b) {
  if (!(*a.chart() == *b.chart())) throw DomainError("wedge of objects on different charts");
  Graded<F, S> r(a.chart(), a.degree() + b.degree());
  if (r.degree() > r.space()) return r;
  for (const auto& [i, x] : a.components()) {
    for (const auto& [j, y] : b.components()) {
      IndexTuple k = i;
      k.insert(k.end(), j.begin(), j.end());
      IndexTuple sorted = k;
      if (sort_with_sign(sorted) == 0) continue;
      r.add(std::move(k), x * y);
    }
  }
  return r;
}

/// Interior product with a vector given as per-index components over the
/// family's index space: (v _| a)(...) = a(v, ...).
template <class F, class S>
Graded<F, S> contract_components(const std::vector<S>& v, const Graded<F, S>& a) {
  if (a.degree() == 0) throw DomainError("contraction into a degree-0 object");
  Graded<F, S> r(a.chart(), a.degree() - 1);
  for (const auto& [idx, c] : a.components()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const S& vk = v.at(idx[k]);
      if (vk.is_structurally_zero()) continue;
      IndexTuple rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      S term = vk * c;
      r.add(std::move(rest), k % 2 == 0 ? term : -term);
    }
  }
  return r;
}

/// Vector components of a degree-1 multivector field over global indices.
template <class S>
std::vector<S> vector_components(const Graded<Multivector, S>& v) {
  if (v.degree() != 1) throw DomainError("expected a vector field");
  std::vector<S> out(v.space());
  for (const auto& [k, c] : v.components()) out[k[0]] = c;
  return out;
}

/// A multivector field is subordinate to the foliation when every component
/// carrying a transverse index vanishes.
template <class S>
Truth is_subordinate(const Graded<Multivector, S>& v, const ZeroTestOptions& options = {}) {
  Truth t = Truth::holds;
  for (const auto& [k, c] : v.components()) {
    if (std::any_of(k.begin(), k.end(), [&](std::size_t a) { return !v.chart()->is_leaf_index(a); })) {
      t = t && is_zero(c, options);
    }
  }
  return t;
}

template <class S>
Graded<Exterior, S> contract(const Graded<Multivector, S>& v, const Graded<Exterior, S>& a) {
  if (!(*v.chart() == *a.chart())) throw DomainError("contraction across charts");
  return contract_components(vector_components(v), a);
}

/// Contraction into a leafwise form needs a vector tangent to the leaves;
/// transverse components must vanish exactly.
template <class S>
Graded<Leafwise, S> contract(const Graded<Multivector, S>& v, const Graded<Leafwise, S>& a) {
  if (!(*v.chart() == *a.chart())) throw DomainError("contraction across charts");
  auto full = vector_components(v);
  const auto& chart = *v.chart();
  for (std::size_t l = 0; l < chart.codim(); ++l) {
    if (is_zero(full[l]) != Truth::holds) {
      throw DomainError("vector field is not tangent to the foliation (component along " + chart.name(l) + ")");
    }
  }
  std::vector<S> leaf(full.begin() + static_cast<std::ptrdiff_t>(chart.codim()), full.end());
  return contract_components(leaf, a);
}

/// Contraction of a 1-form into the first slot of a multivector field:
/// (alpha _| P)(...) = P(alpha, ...).
template <class S>
Graded<Multivector, S> contract(const Graded<Exterior, S>& alpha, const Graded<Multivector, S>& p) {
  if (alpha.degree() != 1) throw DomainError("expected a 1-form");
  std::vector<S> comps(alpha.space());
  for (const auto& [k, c] : alpha.components()) comps[k[0]] = c;
  return contract_components(comps, p);
}

/// Evaluates a form on vector fields: a(v_1, ..., v_r).
template <class F, class S>
S evaluate_on(const Graded<F, S>& a, const std::vector<Graded<Multivector, S>>& vectors) {
  if (vectors.size() != a.degree()) throw DomainError("wrong number of arguments");
  Graded<F, S> r = a;
  for (const auto& v : vectors) r = contract(v, r);
  return r.value();
}

template <class F, class S>
Graded<F, Expr> real_part(const Graded<F, S>& g) {
  return g.map([](const S& c) { return Complex(c).re; });
}

template <class F, class S>
Graded<F, Expr> imag_part(const Graded<F, S>& g) {
  return g.map([](const S& c) { return Complex(c).im; });
}

template <class F>
Graded<F, Complex> complexify(const Graded<F, Expr>& g) {
  return g.map([](const Expr& c) { return Complex(c); });
}

template <class F>
Graded<F, Complex> complexify(const Graded<F, Expr>& re, const Graded<F, Expr>& im) {
  Graded<F, Complex> r = complexify(re);
  r += im.map([](const Expr& c) { return Complex(Expr(0), c); });
  return r;
}

// Differentials and changes of family.

ExteriorForm exterior_d(const ExteriorForm& w);
ComplexExteriorForm exterior_d(const ComplexExteriorForm& w);
LeafwiseForm leafwise_d(const LeafwiseForm& w);
ComplexLeafwiseForm leafwise_d(const ComplexLeafwiseForm& w);

/// Drops every component carrying a transverse index: dz^lambda -> 0.
LeafwiseForm project_leafwise(const ExteriorForm& w);
ComplexLeafwiseForm project_leafwise(const ComplexExteriorForm& w);

/// Leafwise form to an ordinary form on the leaf chart at the slice.
ExteriorForm pullback_to_leaf(const LeafwiseForm& w, const LeafSlice& slice);
ComplexExteriorForm pullback_to_leaf(const ComplexLeafwiseForm& w, const LeafSlice& slice);

/// Direct pull-back of an ordinary form to the leaf chart: transverse
/// differentials vanish on the leaf and coefficients are restricted.
ExteriorForm restrict_form_to_leaf(const ExteriorForm& w, const LeafSlice& slice);

/// Gradient of a function as an exterior 1-form.
ExteriorForm differential(const ChartPtr& chart, const Expr& f);

/// A vector field from its components over the global indices.
MultivectorField vector_field(const ChartPtr& chart, const std::vector<Expr>& components);
/// A tangent vector field from leaf components.
MultivectorField leaf_vector_field(const ChartPtr& chart, const std::vector<Expr>& leaf_components);
/// Leaf components of a vector field; throws DomainError when not tangent.
std::vector<Expr> leaf_components(const MultivectorField& v);

/// Coordinate partial derivative of every component.
template <class F, class S>
Graded<F, S> partial(const Graded<F, S>& g, std::string_view coordinate) {
  return g.map([&](const S& c) { return diff(c, coordinate); });
}

template <class F, class S>
Graded<F, S> substitute(const Graded<F, S>& g, const Bindings& b) {
  return g.map([&](const S& c) { return substitute(c, b); });
}

}  // namespace fq
