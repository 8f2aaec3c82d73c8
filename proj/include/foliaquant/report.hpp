#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "foliaquant/model_file.hpp"

namespace fq {

enum class Status { pass, fail, inconclusive, skipped };

std::string_view to_string(Status s);
Status status_of(Truth t);

struct CheckResult {
  std::string name;
  std::string identity;  // the identity being tested, in plain notation
  Status status = Status::pass;
  std::string detail;
  std::string residual;  // first nonzero residual, reported on failure
  std::size_t cases = 0;
  double wall_ms = 0.0;
};

struct Report {
  std::string command;
  std::string model;
  RunOptions options;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::string derived_omega;
  std::string derived_bivector;

  std::size_t count(Status s) const;
  /// 1 on any failure, otherwise 2 on any inconclusive check, otherwise 0.
  int exit_code() const;
};

/// Deterministic JSON: checks sorted by name, no timings unless requested.
std::string to_json(const Report& report, bool include_timings = false);
std::string to_text(const Report& report, bool include_timings = false);

}  // namespace fq
