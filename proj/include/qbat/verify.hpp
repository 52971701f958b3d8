#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbat/optimizer.hpp"

namespace qbat::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;  // worst deviation or first failure description
    std::optional<DensityOperator> failing_sample;
};

/// Passivity engine checks on random states and Hamiltonians of several
/// small dimensions: spectrum preservation, passivity predicates, the
/// local/global work hierarchy, the zero-local-work characterization, and
/// the monotone local-unitary energy check (1000 random product unitaries
/// per state).
SuiteResult passivity_suite(int trials, std::uint64_t seed);

/// The locally passive state of rho and of V rho V^dag (V a random product
/// unitary) must agree entrywise for nondegenerate inputs.
SuiteResult uniqueness_suite(int trials, std::uint64_t seed);

/// Closed-form curve identities: the work deficit equals the locally
/// passive pure-state curve on a 1001-point grid, the constructed maximizer
/// coefficients hit their target entanglement, the curves are monotone, and
/// the analytic curves agree with the passivity engine.
SuiteResult deficit_identity_suite();

/// Optimizer cross-check: the local-work maximizer coincides with the
/// global-work maximizer (11 interior grid points).
SuiteResult coincidence_suite(const OptimizerConfig& cfg);

/// Grid+Haar brute-force oracle vs the analytic local ergotropy on random
/// pure states.
SuiteResult oracle_suite(int trials, std::uint64_t seed);

/// Runs the suite named by `which` ("all" runs every suite). trials = 0
/// selects each suite's default sample count.
std::vector<SuiteResult> run(const std::string& which, int trials, std::uint64_t seed);

}  // namespace qbat::verify
