#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cgl/report.hpp"

namespace cgl {

/// One verified expectation: an identifier, the pass/fail outcome and the
/// expected-vs-computed rendering for failures.
struct ExpectationResult {
    std::string case_id;     // e.g. "K8+9K3/c"
    std::string category;    // shape|census|zagreb|hv|spectrum|charpoly|energy|flag|ordering|genus
    std::string detail;
    bool passed = false;
    std::string expected;
    std::string computed;
};

struct VerificationRun {
    std::vector<ExpectationResult> results;
    int passed = 0;
    int failed = 0;
};

/// Run the paper expectation table (shapes, censuses, Zagreb indices,
/// HV verdicts, spectra, characteristic-polynomial factors, energies,
/// classification flags, E-LE orderings, genus classes). The filter is a
/// case-insensitive substring over "category:case_id".
VerificationRun verify_paper(const std::string& filter = "", const AnalysisOptions& opts = {});

/// Print one PASS/FAIL line per expectation.
void print_verification(std::ostream& os, const VerificationRun& run);

}  // namespace cgl
