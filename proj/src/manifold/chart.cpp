#include "foliaquant/chart.hpp"

#include <set>

#include "foliaquant/errors.hpp"
#include "foliaquant/parser.hpp"

namespace fq {

AdaptedChart::AdaptedChart(std::vector<std::string> transverse, std::vector<std::string> leaf)
    : transverse_(std::move(transverse)), leaf_(std::move(leaf)) {
  std::set<std::string> seen;
  for (const auto* list : {&transverse_, &leaf_}) {
    for (const auto& n : *list) {
      if (!is_identifier(n)) throw DomainError("invalid coordinate name '" + n + "'");
      if (n == "i" || n == "pi" || n == "sin" || n == "cos" || n == "exp") {
        throw DomainError("reserved name used as coordinate: '" + n + "'");
      }
      if (!seen.insert(n).second) throw DomainError("duplicate coordinate '" + n + "'");
    }
  }
}

std::vector<std::string> AdaptedChart::all() const {
  std::vector<std::string> out = transverse_;
  out.insert(out.end(), leaf_.begin(), leaf_.end());
  return out;
}

const std::string& AdaptedChart::name(std::size_t global) const {
  if (global < codim()) return transverse_.at(global);
  return leaf_.at(global - codim());
}

std::optional<std::size_t> AdaptedChart::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < transverse_.size(); ++k) {
    if (transverse_[k] == name) return k;
  }
  for (std::size_t k = 0; k < leaf_.size(); ++k) {
    if (leaf_[k] == name) return codim() + k;
  }
  return std::nullopt;
}

Coordinate AdaptedChart::coordinate(std::string_view name) const {
  auto g = index_of(name);
  if (!g) throw UnknownSymbolError(std::string(name));
  if (*g < codim()) return {std::string(name), CoordinateClass::transverse, *g};
  return {std::string(name), CoordinateClass::leaf, *g - codim()};
}

ChartPtr make_chart(std::vector<std::string> transverse, std::vector<std::string> leaf) {
  return std::make_shared<const AdaptedChart>(std::move(transverse), std::move(leaf));
}

Expr partial(const Expr& e, const AdaptedChart& chart, std::string_view coordinate) {
  if (!chart.contains(coordinate)) throw UnknownSymbolError(std::string(coordinate));
  return diff(e, coordinate);
}

Complex partial(const Complex& e, const AdaptedChart& chart, std::string_view coordinate) {
  if (!chart.contains(coordinate)) throw UnknownSymbolError(std::string(coordinate));
  return diff(e, coordinate);
}

LeafSlice::LeafSlice(ChartPtr parent, Bindings values) : parent_(std::move(parent)), values_(std::move(values)) {
  for (const auto& t : parent_->transverse()) {
    auto it = values_.find(t);
    if (it == values_.end()) throw DomainError("leaf slice does not bind transverse coordinate '" + t + "'");
    for (const auto& s : it->second.free_symbols()) {
      if (parent_->contains(s)) throw DomainError("leaf slice value for '" + t + "' depends on coordinate '" + s + "'");
    }
  }
  for (const auto& [name, value] : values_) {
    auto c = parent_->coordinate(name);
    if (c.cls != CoordinateClass::transverse) throw DomainError("leaf slice binds leaf coordinate '" + name + "'");
  }
  leaf_chart_ = make_chart({}, parent_->leaf());
}

std::string LeafSlice::str() const {
  std::string s;
  for (const auto& t : parent_->transverse()) {
    if (!s.empty()) s += ", ";
    s += t + "=" + values_.at(t).str();
  }
  return s;
}

Splitting::Splitting(ChartPtr chart) : chart_(std::move(chart)) {
  b_.assign(chart_->leaf_dim(), std::vector<Expr>(chart_->codim()));
}

Splitting::Splitting(ChartPtr chart, std::vector<std::vector<Expr>> coefficients)
    : chart_(std::move(chart)), b_(std::move(coefficients)) {
  if (b_.size() != chart_->leaf_dim()) throw DomainError("splitting has wrong number of rows");
  for (const auto& row : b_) {
    if (row.size() != chart_->codim()) throw DomainError("splitting has wrong number of columns");
  }
}

Truth is_foliated_constant(const Expr& f, const AdaptedChart& chart, const ZeroTestOptions& options) {
  Truth t = Truth::holds;
  for (const auto& x : chart.leaf()) t = t && is_zero(diff(f, x), options);
  return t;
}

Expr restrict_to_leaf(const Expr& e, const LeafSlice& slice) { return substitute(e, slice.values()); }

Complex restrict_to_leaf(const Complex& e, const LeafSlice& slice) { return substitute(e, slice.values()); }

}  // namespace fq
