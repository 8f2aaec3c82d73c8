#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliaquant/quantization.hpp"

namespace fq {

struct RunOptions {
  unsigned samples = 16;     // zero-test evaluation points
  unsigned max_degree = 3;   // monomial degree for basis checks
  std::uint64_t seed = 1;
};

/// Parsed contents of a model file. Structures are kept as written; the
/// symplectic form and bivector are derived later so that a degenerate
/// structure becomes a reported failure instead of a load error.
struct ModelSpec {
  std::string name;
  ChartPtr chart;
  std::vector<std::string> parameters;
  Expr epsilon = Expr(1);
  std::optional<LeafwiseForm> omega;
  std::optional<MultivectorField> bivector;
  std::optional<LeafwiseConnection> leafwise_connection;
  std::optional<Connection> connection;
  std::optional<Splitting> splitting;
  bool hermitian_gauge = false;
  Polarization polarization;
  std::vector<std::pair<std::string, Expr>> observables;
  std::vector<LeafSlice> leaves;
  RunOptions options;

  /// The leafwise connection: given directly, or restricted from the full one.
  LeafwiseConnection leafwise() const;
  Splitting splitting_or_default() const;
};

/// Reads a model from YAML text. Errors carry 1-based line and column.
ModelSpec parse_model(const std::string& text);
ModelSpec load_model_file(const std::string& path);

/// Assembles the quantization data; throws DegenerateStructureError or
/// InconclusiveError when the structure cannot be built.
QuantumModel build_quantum_model(const ModelSpec& spec);

}  // namespace fq
