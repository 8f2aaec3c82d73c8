#pragma once

#include <string>
#include <vector>

#include "foliaquant/checks.hpp"

namespace fq {

enum class Execution { serial, parallel };

/// Runs checks level by level: a check runs once all of its prerequisites
/// have a result, and is skipped unless every prerequisite passed. Within a
/// level the parallel mode distributes checks over OpenMP threads; results
/// are identical to the serial reference because each check draws from its
/// own seeded sampler. Output is sorted by check name.
std::vector<CheckResult> run_checks(const std::vector<CheckDef>& checks, const CheckContext& context,
                                    Execution mode = Execution::parallel);

/// Builds the context, runs the command's checks and assembles a report.
Report run_command(Command command, const ModelSpec& spec, Execution mode = Execution::parallel);

}  // namespace fq
