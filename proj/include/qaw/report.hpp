#pragma once

// Structured pass/fail record for one identity check.  The witness carries
// the exact parameter point and grid so a reader can re-run the single
// check in isolation and reproduce observed_error.

#include <string>
#include <utility>
#include <vector>

namespace qaw {

struct CheckReport {
    std::string identity_id;
    double observed_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    // Ordered key=value pairs describing the evaluation point.
    std::vector<std::pair<std::string, std::string>> witness;
    // Truncation statistics and other free-form evaluation notes.
    std::string diagnostics;

    void finalize() { passed = observed_error <= tolerance; }
};

inline CheckReport make_report(std::string id, double observed, double tol,
                               std::vector<std::pair<std::string, std::string>> witness = {},
                               std::string diagnostics = {}) {
    CheckReport r;
    r.identity_id = std::move(id);
    r.observed_error = observed;
    r.tolerance = tol;
    r.witness = std::move(witness);
    r.diagnostics = std::move(diagnostics);
    r.finalize();
    return r;
}

}  // namespace qaw
