#pragma once

#include <iosfwd>

namespace fq {

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

/// foliaquant <command> <model-file> [--format json|text] [--seed N]
///            [--max-degree D] [--samples N] [--serial] [--timings]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fq
