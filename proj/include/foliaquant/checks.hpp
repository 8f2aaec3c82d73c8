#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foliaquant/model_file.hpp"
#include "foliaquant/report.hpp"
#include "foliaquant/sampling.hpp"

namespace fq {

enum class Command { check_structure, check_prequant, check_polarization, verify_dirac, check_leaves, all };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

/// Everything derived from a model file before individual checks run. A
/// structure that cannot be built leaves `model` empty and records why.
struct CheckContext {
  const ModelSpec* spec = nullptr;
  std::optional<QuantumModel> model;
  /// The bivector as given, or derived from Omega when the model was built.
  std::optional<MultivectorField> bivector;
  Status build_status = Status::pass;
  std::string build_error;
  std::vector<std::string> warnings;
  ZeroTestOptions zero_test;

  static CheckContext build(const ModelSpec& spec);
  std::vector<LeafSlice> slices() const;
};

/// Accumulates verdicts over the cases of one check.
struct CheckOutcome {
  Truth truth = Truth::holds;
  bool skipped = false;
  std::string detail;
  std::string residual;
  std::size_t cases = 0;

  void record(Truth t, const std::function<std::string()>& residual_text);
  static CheckOutcome skip(std::string why);
};

struct CheckDef {
  std::string name;
  std::string identity;
  /// Names of checks that must pass first; otherwise this one is skipped.
  std::vector<std::string> requires_;
  std::function<CheckOutcome(const CheckContext&, Sampler&)> run;
};

/// The checks a command runs on a context, in no particular order.
std::vector<CheckDef> checks_for(Command command, const CheckContext& context);

}  // namespace fq
