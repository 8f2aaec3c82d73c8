#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foliaquant/complex_expr.hpp"
#include "foliaquant/zero_test.hpp"

namespace fq {

enum class CoordinateClass : std::uint8_t { transverse, leaf };

struct Coordinate {
  std::string name;
  CoordinateClass cls;
  std::size_t index;  // ordinal within its class
};

/// Foliated coordinate model: leaves are the level sets of the transverse
/// coordinates. Global index order is transverse first, then leaf, so leaf
/// coordinate i has global index codim() + i.
class AdaptedChart {
 public:
  AdaptedChart(std::vector<std::string> transverse, std::vector<std::string> leaf);

  std::size_t codim() const noexcept { return transverse_.size(); }
  std::size_t leaf_dim() const noexcept { return leaf_.size(); }
  std::size_t dim() const noexcept { return transverse_.size() + leaf_.size(); }

  const std::vector<std::string>& transverse() const noexcept { return transverse_; }
  const std::vector<std::string>& leaf() const noexcept { return leaf_; }
  std::vector<std::string> all() const;

  const std::string& name(std::size_t global) const;
  bool is_leaf_index(std::size_t global) const noexcept { return global >= codim(); }
  std::size_t leaf_global(std::size_t i) const noexcept { return codim() + i; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Coordinate coordinate(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(const AdaptedChart& a, const AdaptedChart& b) {
    return a.transverse_ == b.transverse_ && a.leaf_ == b.leaf_;
  }

 private:
  std::vector<std::string> transverse_;
  std::vector<std::string> leaf_;
};

using ChartPtr = std::shared_ptr<const AdaptedChart>;

ChartPtr make_chart(std::vector<std::string> transverse, std::vector<std::string> leaf);

/// Partial derivative along a named chart coordinate; unknown names throw
/// UnknownSymbolError.
Expr partial(const Expr& e, const AdaptedChart& chart, std::string_view coordinate);
Complex partial(const Complex& e, const AdaptedChart& chart, std::string_view coordinate);

/// A leaf z^lambda = const. Every transverse coordinate is bound to an
/// expression free of chart coordinates.
class LeafSlice {
 public:
  LeafSlice(ChartPtr parent, Bindings values);

  const ChartPtr& parent() const noexcept { return parent_; }
  const Bindings& values() const noexcept { return values_; }
  /// The leaf as a chart of its own: no transverse directions.
  const ChartPtr& leaf_chart() const noexcept { return leaf_chart_; }
  std::string str() const;

 private:
  ChartPtr parent_;
  ChartPtr leaf_chart_;
  Bindings values_;
};

/// Coefficients B^i_lambda of a splitting of the transverse exact sequence,
/// indexed [leaf i][transverse lambda]. Defaults to zero.
class Splitting {
 public:
  explicit Splitting(ChartPtr chart);
  Splitting(ChartPtr chart, std::vector<std::vector<Expr>> coefficients);

  const Expr& operator()(std::size_t i, std::size_t lambda) const { return b_.at(i).at(lambda); }
  const ChartPtr& chart() const noexcept { return chart_; }

 private:
  ChartPtr chart_;
  std::vector<std::vector<Expr>> b_;
};

/// Membership in the ring of functions constant along leaves.
Truth is_foliated_constant(const Expr& f, const AdaptedChart& chart, const ZeroTestOptions& options = {});

Expr restrict_to_leaf(const Expr& e, const LeafSlice& slice);
Complex restrict_to_leaf(const Complex& e, const LeafSlice& slice);

}  // namespace fq
