#include "foliaquant/prequantization.hpp"

namespace fq {

Connection Connection::zero(ChartPtr chart) {
  Connection g{chart, {}, {}};
  g.transverse.assign(chart->codim(), Complex());
  g.leaf.assign(chart->leaf_dim(), Complex());
  return g;
}

ComplexExteriorForm Connection::potential_form() const {
  ComplexExteriorForm f(chart, 1);
  for (std::size_t l = 0; l < transverse.size(); ++l) f.add({l}, transverse[l]);
  for (std::size_t i = 0; i < leaf.size(); ++i) f.add({chart->leaf_global(i)}, leaf[i]);
  return f;
}

LeafwiseConnection LeafwiseConnection::zero(ChartPtr chart) {
  LeafwiseConnection a{chart, {}};
  a.potentials.assign(chart->leaf_dim(), Complex());
  return a;
}

ComplexLeafwiseForm LeafwiseConnection::potential_form() const {
  ComplexLeafwiseForm f(chart, 1);
  for (std::size_t i = 0; i < potentials.size(); ++i) f.add({i}, potentials[i]);
  return f;
}

Section covariant_derivative(const LeafwiseConnection& a, const MultivectorField& v, const Section& s) {
  auto comps = leaf_components(v);
  const auto& leaf = a.chart->leaf();
  Section r;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_structurally_zero()) continue;
    r += Complex(comps[i]) * (diff(s, leaf[i]) - a.potentials[i] * s);
  }
  return r;
}

Section contravariant_derivative(const LeafwiseConnection& a, const MultivectorField& w, const ExteriorForm& phi,
                                 const Section& s) {
  return covariant_derivative(a, bivector_sharp(w, phi), s);
}

ComplexLeafwiseForm leafwise_curvature(const LeafwiseConnection& a) {
  const auto& leaf = a.chart->leaf();
  ComplexLeafwiseForm r(a.chart, 2);
  for (std::size_t i = 0; i < leaf.size(); ++i) {
    for (std::size_t j = i + 1; j < leaf.size(); ++j) {
      r.add({i, j}, diff(a.potentials[j], leaf[i]) - diff(a.potentials[i], leaf[j]));
    }
  }
  return r;
}

ComplexExteriorForm curvature(const Connection& g) { return exterior_d(g.potential_form()); }

Section curvature_endomorphism_defect(const LeafwiseConnection& a, const MultivectorField& t,
                                      const MultivectorField& t2, const Section& s) {
  Section bracket_term = covariant_derivative(a, lie_bracket(t, t2), s);
  Section commutator = covariant_derivative(a, t, covariant_derivative(a, t2, s)) -
                       covariant_derivative(a, t2, covariant_derivative(a, t, s));
  ComplexLeafwiseForm r = leafwise_curvature(a);
  auto u = leaf_components(t);
  auto v = leaf_components(t2);
  Complex value;
  for (const auto& [idx, c] : r.components()) {
    value += c * Complex(u[idx[0]] * v[idx[1]] - u[idx[1]] * v[idx[0]]);
  }
  return bracket_term - commutator - value * s;
}

LeafwiseConnection gauge_shift(const LeafwiseConnection& a, const Complex& chi) {
  LeafwiseConnection r = a;
  for (std::size_t i = 0; i < r.potentials.size(); ++i) r.potentials[i] += diff(chi, a.chart->leaf()[i]);
  return r;
}

ComplexLeafwiseForm prequantization_defect(const LeafwiseConnection& a, const LeafwiseForm& omega, const Expr& eps) {
  if (!(*a.chart == *omega.chart())) throw DomainError("connection and form live on different charts");
  ComplexLeafwiseForm target = omega.map([&](const Expr& c) { return Complex(Expr(0), eps * c); });
  return leafwise_curvature(a) - target;
}

Truth check_prequantization(const LeafwiseConnection& a, const LeafwiseForm& omega, const Expr& eps,
                            const ZeroTestOptions& options) {
  return is_zero(prequantization_defect(a, omega, eps), options);
}

LeafwiseConnection restrict_connection(const Connection& g) { return {g.chart, g.leaf}; }

Connection lift_leafwise_connection(const LeafwiseConnection& a, const Connection& reference, const Splitting& b) {
  if (!(*a.chart == *reference.chart) || !(*a.chart == *b.chart())) {
    throw DomainError("lift across different charts");
  }
  Connection r = reference;
  const std::size_t n = a.chart->leaf_dim();
  for (std::size_t l = 0; l < a.chart->codim(); ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      const Expr& bil = b(i, l);
      if (bil.is_structurally_zero()) continue;
      r.transverse[l] -= Complex(bil) * (a.potentials[i] - reference.leaf[i]);
    }
  }
  r.leaf = a.potentials;
  return r;
}

Connection unitary_reduction(const Connection& g, bool hermitian_gauge) {
  if (!hermitian_gauge) throw DomainError("unitary reduction requires a Hermitian-adapted trivialization");
  Connection r = g;
  for (auto* list : {&r.transverse, &r.leaf}) {
    for (auto& c : *list) c = Complex(Expr(0), c.im);
  }
  return r;
}

Truth preserves_hermitian_form(const Connection& g, const ZeroTestOptions& options) {
  Truth t = Truth::holds;
  for (const auto* list : {&g.transverse, &g.leaf}) {
    for (const auto& c : *list) t = t && is_zero(c.re, options);
  }
  return t;
}

ExteriorForm chern_form(const Connection& g, const ZeroTestOptions& options) {
  if (preserves_hermitian_form(g, options) != Truth::holds) {
    throw DomainError("Chern form needs purely imaginary potentials");
  }
  ComplexExteriorForm r = curvature(g);
  // i/(2 pi) * (i * Im R) = -Im R / (2 pi)
  Expr factor = Expr(-1) / (Expr(2) * Expr::symbol("pi"));
  return factor * imag_part(r);
}

Connection pullback_connection_to_leaf(const Connection& g, const LeafSlice& slice) {
  if (!(*g.chart == *slice.parent())) throw DomainError("slice belongs to a different chart");
  Connection r = Connection::zero(slice.leaf_chart());
  for (std::size_t i = 0; i < g.leaf.size(); ++i) r.leaf[i] = restrict_to_leaf(g.leaf[i], slice);
  return r;
}

LeafwiseConnection pullback_connection_to_leaf(const LeafwiseConnection& a, const LeafSlice& slice) {
  if (!(*a.chart == *slice.parent())) throw DomainError("slice belongs to a different chart");
  LeafwiseConnection r{slice.leaf_chart(), {}};
  for (const auto& c : a.potentials) r.potentials.push_back(restrict_to_leaf(c, slice));
  return r;
}

}  // namespace fq
