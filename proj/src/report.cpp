#include "cliffpar/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "cliffpar/errors.hpp"

namespace cliffpar {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

Verdict verdict_from(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw ConfigError("unknown verdict '" + s + "' in report");
}

}  // namespace

Verdict Report::overall() const {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return Verdict::fail;
  }
  return Verdict::pass;
}

std::string emit_text(const Report& report) {
  std::string out = "cliffpar verification report  (seed " +
                    std::to_string(report.seed) + ", algebra " +
                    report.algebra + ")\n";
  for (const auto& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "  %-20s %-13s %10llu samples  [%.3fs]\n",
                  c.name.c_str(), verdict_name(c.verdict),
                  static_cast<unsigned long long>(c.samples),
                  c.elapsed_seconds);
    out += line;
    if (!c.reason.empty()) out += "      reason: " + c.reason + "\n";
    if (!c.counterexample.empty())
      out += "      counterexample: " + c.counterexample + "\n";
  }
  out += "overall: ";
  out += verdict_name(report.overall());
  out += "\n";
  return out;
}

std::string emit_machine(const Report& report) {
  nlohmann::json j;
  j["tool"] = "cliffpar";
  j["seed"] = report.seed;
  j["algebra"] = report.algebra;
  j["overall"] = verdict_name(report.overall());
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc;
    jc["check"] = c.name;
    jc["verdict"] = verdict_name(c.verdict);
    jc["samples"] = c.samples;
    jc["counterexample"] = c.counterexample;
    jc["reason"] = c.reason;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

Report parse_machine(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed machine report: ") + e.what());
  }
  Report report;
  try {
    report.seed = j.at("seed").get<std::uint64_t>();
    report.algebra = j.at("algebra").get<std::string>();
    for (const auto& jc : j.at("checks")) {
      CheckRecord c;
      c.name = jc.at("check").get<std::string>();
      c.verdict = verdict_from(jc.at("verdict").get<std::string>());
      c.samples = jc.at("samples").get<std::uint64_t>();
      c.counterexample = jc.at("counterexample").get<std::string>();
      c.reason = jc.at("reason").get<std::string>();
      report.checks.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed machine report: ") + e.what());
  }
  return report;
}

}  // namespace cliffpar
