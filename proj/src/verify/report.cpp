#include "foliaquant/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fq {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Status status_of(Truth t) {
  switch (t) {
    case Truth::holds: return Status::pass;
    case Truth::fails: return Status::fail;
    case Truth::inconclusive: return Status::inconclusive;
  }
  return Status::inconclusive;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

int Report::exit_code() const {
  if (count(Status::fail) > 0) return 1;
  if (count(Status::inconclusive) > 0) return 2;
  return 0;
}

namespace {

std::vector<const CheckResult*> sorted(const Report& r) {
  std::vector<const CheckResult*> out;
  for (const auto& c : r.checks) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->name < b->name; });
  return out;
}

}  // namespace

std::string to_json(const Report& report, bool include_timings) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = "1.0";
  j["command"] = report.command;
  j["model"] = report.model;
  j["seed"] = report.options.seed;
  j["options"] = {{"samples", report.options.samples}, {"max_degree", report.options.max_degree}};
  j["summary"] = {{"pass", report.count(Status::pass)},
                  {"fail", report.count(Status::fail)},
                  {"inconclusive", report.count(Status::inconclusive)},
                  {"skipped", report.count(Status::skipped)}};
  j["exit_code"] = report.exit_code();
  j["derived"] = {{"omega", report.derived_omega}, {"bivector", report.derived_bivector}};
  j["warnings"] = report.warnings;
  json checks = json::array();
  for (const auto* c : sorted(report)) {
    json e;
    e["name"] = c->name;
    e["identity"] = c->identity;
    e["status"] = std::string(to_string(c->status));
    e["cases"] = c->cases;
    e["detail"] = c->detail;
    if (c->status == Status::fail) e["residual"] = c->residual;
    if (include_timings) e["wall_ms"] = c->wall_ms;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string to_text(const Report& report, bool include_timings) {
  std::ostringstream out;
  out << report.command << " " << report.model << " (seed " << report.options.seed << ")\n";
  if (!report.derived_omega.empty()) out << "  omega    = " << report.derived_omega << "\n";
  if (!report.derived_bivector.empty()) out << "  bivector = " << report.derived_bivector << "\n";
  for (const auto& w : report.warnings) out << "  warning: " << w << "\n";
  for (const auto* c : sorted(report)) {
    out << "  [" << to_string(c->status) << "] " << c->name << " (" << c->cases << " cases)";
    if (include_timings) out << " " << c->wall_ms << " ms";
    out << "\n      " << c->identity << "\n";
    if (!c->detail.empty()) out << "      " << c->detail << "\n";
    if (c->status == Status::fail && !c->residual.empty()) out << "      residual: " << c->residual << "\n";
  }
  out << "pass " << report.count(Status::pass) << ", fail " << report.count(Status::fail) << ", inconclusive "
      << report.count(Status::inconclusive) << ", skipped " << report.count(Status::skipped) << "; exit "
      << report.exit_code() << "\n";
  return out.str();
}

}  // namespace fq
