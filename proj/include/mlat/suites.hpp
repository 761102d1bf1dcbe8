#pragma once

#include <string>
#include <vector>

#include "mlat/corpus.hpp"

// Named verification suites over a corpus: each suite enumerates its
// applicable cases in a fixed order and runs one checker per case.

namespace mlat {

struct SuiteCase {
    std::string id;
    std::string status;  // "pass" | "fail" | "not-applicable" | "budget-exceeded"
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;
    std::vector<std::string> warnings;

    // No case failed. An empty case list passes and carries a warning.
    bool passed() const {
        for (const auto& c : cases)
            if (c.status == "fail") return false;
        return true;
    }
};

// The recognized suite names, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one suite. Cases are built in a fixed order, evaluated independently
// (in parallel when threads > 1), and assembled back in build order, so the
// report does not depend on the thread count. Unknown names raise
// PreconditionError.
SuiteReport run_suite(const std::string& name, const Corpus& corpus, int threads = 1);

}  // namespace mlat
