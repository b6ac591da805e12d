#ifndef CLIFFPAR_SUITES_HPP_
#define CLIFFPAR_SUITES_HPP_

#include "cliffpar/config.hpp"
#include "cliffpar/report.hpp"

namespace cliffpar {

/// Runs the configured checks in order, each on its own PRNG stream
/// derived from (seed, check name); identical configurations produce
/// byte-identical machine reports.
Report run_suites(const SuiteConfig& cfg);

/// Runs a single named check against the configuration.
CheckRecord run_check(const SuiteConfig& cfg, const std::string& name);

/// Double-space axiom check against an arbitrary multiplication. This is
/// the entry point negative-control tests use with a deliberately
/// corrupted structure table; production runs feed the certified algebra.
CheckRecord run_ds_suite_on(const GenericMult<Rational>& mult,
                            std::uint64_t seed, long height_bound,
                            std::uint64_t samples);

}  // namespace cliffpar

#endif  // CLIFFPAR_SUITES_HPP_
