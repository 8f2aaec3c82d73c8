#include "foliaquant/runner.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace fq {

namespace {

CheckResult execute(const CheckDef& check, const CheckContext& context) {
  CheckResult r;
  r.name = check.name;
  r.identity = check.identity;
  Sampler sampler(context.spec->options.seed, check.name);
  const auto start = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = check.run(context, sampler);
    r.status = o.skipped ? Status::skipped : status_of(o.truth);
    r.detail = std::move(o.detail);
    r.residual = std::move(o.residual);
    r.cases = o.cases;
  } catch (const InconclusiveError& e) {
    r.status = Status::inconclusive;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.detail = "error";
    r.residual = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<CheckDef>& checks, const CheckContext& context, Execution mode) {
  std::map<std::string, CheckResult> done;
  std::vector<const CheckDef*> pending;
  for (const auto& c : checks) pending.push_back(&c);

  while (!pending.empty()) {
    std::vector<const CheckDef*> ready, waiting;
    for (const auto* c : pending) {
      bool resolved = std::all_of(c->requires_.begin(), c->requires_.end(), [&](const std::string& n) {
        return done.count(n) > 0 || std::none_of(pending.begin(), pending.end(),
                                                 [&](const CheckDef* p) { return p->name == n; });
      });
      (resolved ? ready : waiting).push_back(c);
    }
    if (ready.empty()) {
      // A cycle; report everything left as failed rather than looping.
      for (const auto* c : waiting) {
        done[c->name] = CheckResult{c->name, c->identity, Status::fail, "prerequisite cycle", "", 0, 0.0};
      }
      break;
    }

    std::vector<CheckResult> results(ready.size());
    auto run_one = [&](std::size_t k) {
      const CheckDef& c = *ready[k];
      for (const auto& n : c.requires_) {
        auto it = done.find(n);
        if (it == done.end() || it->second.status != Status::pass) {
          results[k] = CheckResult{c.name, c.identity, Status::skipped, "requires " + n, "", 0, 0.0};
          return;
        }
      }
      results[k] = execute(c, context);
    };
    const auto count = static_cast<long>(ready.size());
    if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < count; ++k) run_one(static_cast<std::size_t>(k));
    } else {
      for (long k = 0; k < count; ++k) run_one(static_cast<std::size_t>(k));
    }
    for (auto& r : results) done[r.name] = std::move(r);
    pending = std::move(waiting);
  }

  std::vector<CheckResult> out;
  for (auto& [name, r] : done) out.push_back(std::move(r));
  return out;
}

Report run_command(Command command, const ModelSpec& spec, Execution mode) {
  const CheckContext context = CheckContext::build(spec);
  Report report;
  report.command = std::string(to_string(command));
  report.model = spec.name;
  report.options = spec.options;
  report.warnings = context.warnings;
  if (context.model) {
    report.derived_omega = context.model->omega.form().str();
    report.derived_bivector = context.model->bivector.str();
  }
  report.checks = run_checks(checks_for(command, context), context, mode);
  return report;
}

}  // namespace fq
