#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "optic/finlab.hpp"

namespace optic::lawsuite {

struct SuiteResult {
    std::string name;
    std::uint64_t cases{};
    bool passed{};
};

struct Report {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
    // One line per suite: "<name>  cases=<n>  pass|FAIL".
    void print(std::ostream& out) const;
};

// Finite-set suites: section/retraction of the residual collapse at
// the given sizes, quotient invariance (exhaustive at sizes <= 2 and
// seeded random at sizes <= 3), cardinality formulas against
// exhaustive enumeration, and existential-vs-concrete composition.
Report run_finlab_suites(std::uint64_t seed, const finlab::Sizes& sizes);

// Container suites: counitality and shape idempotence exhaustively for
// containers of up to four elements over a two-symbol alphabet;
// unitarity and composed-effect linearity up to three elements.
Report run_container_suites();

} // namespace optic::lawsuite
