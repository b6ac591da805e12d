#ifndef CLIFFPAR_CONFIG_HPP_
#define CLIFFPAR_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffpar/algebra.hpp"
#include "cliffpar/orbits.hpp"

namespace cliffpar {

/// Parsed and certified verification-run configuration.
///
/// Text format: flat "key = value" lines plus sections.
///
///   kind = caseA            # caseA (quaternions over Q) | caseB (GF(2)(s,t))
///   a = -1                  # structure constants in the scalar syntax
///   b = -1
///   seed = 42
///   height_bound = 8
///   checks = ds, conjugacy  # omit for all checks
///
///   [samples]               # per-check sample counts
///   ds = 1000
///
///   [tagging]               # repeatable; one Clifford-like parallelism each
///   default = right
///   -1 = left
///
/// '#' starts a comment. Unknown keys, malformed values and uncertifiable
/// algebras are reported together, with line numbers, as a ConfigError.
struct SuiteConfig {
  AlgebraKind kind = AlgebraKind::case_a;
  std::string a_text = "-1";
  std::string b_text = "-1";
  std::optional<QuatAlgebra> quaternion_algebra;   // set when kind = caseA
  std::optional<QuarticAlgebra> quartic_algebra;   // set when kind = caseB
  std::uint64_t seed = 42;
  long height_bound = 8;
  std::vector<std::string> checks;                 // validated suite names
  std::map<std::string, std::uint64_t> sample_counts;
  std::vector<TagMap> taggings;

  std::uint64_t samples_for(const std::string& check) const;
  std::string algebra_description() const;
};

/// All known check names, in canonical run order.
const std::vector<std::string>& all_suite_names();

SuiteConfig parse_config(const std::string& text);

}  // namespace cliffpar

#endif  // CLIFFPAR_CONFIG_HPP_
