#ifndef CLIFFPAR_REPORT_HPP_
#define CLIFFPAR_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cliffpar {

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

struct CheckRecord {
  std::string name;
  std::uint64_t samples = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string counterexample;  // first counterexample, in text syntax
  std::string reason;          // failure/inconclusive explanation
  double elapsed_seconds = 0;  // text report only, never in machine output
};

struct Report {
  std::uint64_t seed = 0;
  std::string algebra;
  std::vector<CheckRecord> checks;

  /// fail iff any check failed.
  Verdict overall() const;
  /// 0 on pass, 1 otherwise (config errors exit 2 before a report exists).
  int exit_code() const { return overall() == Verdict::fail ? 1 : 0; }
};

/// Human-readable rendering, one line per check.
std::string emit_text(const Report& report);

/// Machine rendering: a single JSON document with stable field names
/// (check, verdict, samples, counterexample, reason, seed, algebra,
/// overall). Deterministic byte-for-byte for identical runs; elapsed time
/// is deliberately excluded.
std::string emit_machine(const Report& report);

/// Inverse of emit_machine (elapsed times are not recoverable).
Report parse_machine(const std::string& json_text);

}  // namespace cliffpar

#endif  // CLIFFPAR_REPORT_HPP_
