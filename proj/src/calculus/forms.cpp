#include "foliaquant/forms.hpp"

namespace fq {

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  // Insertion sort: tuples are tiny and we need the parity.
  for (std::size_t a = 1; a < indices.size(); ++a) {
    for (std::size_t b = a; b > 0 && indices[b - 1] >= indices[b]; --b) {
      if (indices[b - 1] == indices[b]) return 0;
      std::swap(indices[b - 1], indices[b]);
      sign = -sign;
    }
  }
  return sign;
}

namespace {

// d over the coordinates listed in `directions`, where direction n has index
// n + offset in the result's index space.
template <class F, class S>
Graded<F, S> differential_over(const Graded<F, S>& w, const std::vector<std::string>& directions) {
  Graded<F, S> r(w.chart(), w.degree() + 1);
  if (r.degree() > r.space()) return r;
  for (const auto& [idx, c] : w.components()) {
    for (std::size_t k = 0; k < directions.size(); ++k) {
      if (std::find(idx.begin(), idx.end(), k) != idx.end()) continue;
      S dc = diff(c, directions[k]);
      if (dc.is_structurally_zero()) continue;
      IndexTuple key{k};
      key.insert(key.end(), idx.begin(), idx.end());
      r.add(std::move(key), dc);
    }
  }
  return r;
}

template <class S>
Graded<Leafwise, S> project(const Graded<Exterior, S>& w) {
  const auto& chart = *w.chart();
  Graded<Leafwise, S> r(w.chart(), w.degree());
  if (w.degree() > chart.leaf_dim()) return r;
  for (const auto& [idx, c] : w.components()) {
    if (std::any_of(idx.begin(), idx.end(), [&](std::size_t a) { return !chart.is_leaf_index(a); })) continue;
    IndexTuple leaf;
    for (auto a : idx) leaf.push_back(a - chart.codim());
    r.add(std::move(leaf), c);
  }
  return r;
}

}  // namespace

ExteriorForm exterior_d(const ExteriorForm& w) { return differential_over(w, w.chart()->all()); }
ComplexExteriorForm exterior_d(const ComplexExteriorForm& w) { return differential_over(w, w.chart()->all()); }
LeafwiseForm leafwise_d(const LeafwiseForm& w) { return differential_over(w, w.chart()->leaf()); }
ComplexLeafwiseForm leafwise_d(const ComplexLeafwiseForm& w) { return differential_over(w, w.chart()->leaf()); }

LeafwiseForm project_leafwise(const ExteriorForm& w) { return project(w); }
ComplexLeafwiseForm project_leafwise(const ComplexExteriorForm& w) { return project(w); }

ExteriorForm pullback_to_leaf(const LeafwiseForm& w, const LeafSlice& slice) {
  if (!(*w.chart() == *slice.parent())) throw DomainError("slice belongs to a different chart");
  ExteriorForm r(slice.leaf_chart(), w.degree());
  for (const auto& [idx, c] : w.components()) r.add(idx, restrict_to_leaf(c, slice));
  return r;
}

ComplexExteriorForm pullback_to_leaf(const ComplexLeafwiseForm& w, const LeafSlice& slice) {
  if (!(*w.chart() == *slice.parent())) throw DomainError("slice belongs to a different chart");
  ComplexExteriorForm r(slice.leaf_chart(), w.degree());
  for (const auto& [idx, c] : w.components()) r.add(idx, restrict_to_leaf(c, slice));
  return r;
}

ExteriorForm restrict_form_to_leaf(const ExteriorForm& w, const LeafSlice& slice) {
  if (!(*w.chart() == *slice.parent())) throw DomainError("slice belongs to a different chart");
  const auto& chart = *w.chart();
  ExteriorForm r(slice.leaf_chart(), w.degree());
  if (w.degree() > chart.leaf_dim()) return r;
  for (const auto& [idx, c] : w.components()) {
    bool tangent = std::all_of(idx.begin(), idx.end(), [&](std::size_t a) { return chart.is_leaf_index(a); });
    if (!tangent) continue;
    IndexTuple leaf;
    for (auto a : idx) leaf.push_back(a - chart.codim());
    r.add(std::move(leaf), restrict_to_leaf(c, slice));
  }
  return r;
}

ExteriorForm differential(const ChartPtr& chart, const Expr& f) { return exterior_d(ExteriorForm::scalar(chart, f)); }

MultivectorField vector_field(const ChartPtr& chart, const std::vector<Expr>& components) {
  if (components.size() != chart->dim()) throw DomainError("vector field needs one component per coordinate");
  MultivectorField v(chart, 1);
  for (std::size_t k = 0; k < components.size(); ++k) v.add({k}, components[k]);
  return v;
}

MultivectorField leaf_vector_field(const ChartPtr& chart, const std::vector<Expr>& leaf_components) {
  if (leaf_components.size() != chart->leaf_dim()) throw DomainError("tangent field needs one component per leaf coordinate");
  MultivectorField v(chart, 1);
  for (std::size_t k = 0; k < leaf_components.size(); ++k) v.add({chart->leaf_global(k)}, leaf_components[k]);
  return v;
}

std::vector<Expr> leaf_components(const MultivectorField& v) {
  auto full = vector_components(v);
  const auto& chart = *v.chart();
  for (std::size_t l = 0; l < chart.codim(); ++l) {
    if (is_zero(full[l]) != Truth::holds) throw DomainError("vector field is not tangent to the foliation");
  }
  return {full.begin() + static_cast<std::ptrdiff_t>(chart.codim()), full.end()};
}

}  // namespace fq
