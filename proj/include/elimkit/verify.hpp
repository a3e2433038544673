#pragma once

#include <string>
#include <vector>

#include "elimkit/rational.hpp"

namespace elimkit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness counts on success, counterexample dump on failure
};

struct SuiteResult {
    std::string suite;
    unsigned long seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Names accepted by run_suite, in documentation order.
const std::vector<std::string>& suite_names();

// Runs one seeded invariant suite: resultant-axioms, discriminant-identities,
// reduced-valuation, salmon-plane, salmon-3d, enumerative-consistency, or
// polarity. Unknown names raise PreconditionError.
SuiteResult run_suite(const std::string& name, unsigned long seed);

}  // namespace elimkit
