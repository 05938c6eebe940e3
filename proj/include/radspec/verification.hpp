#pragma once

#include <string>
#include <vector>

namespace radspec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // worst deviation, timing, or failure description
    double seconds = 0.0;
};

// The regression and property checks behind `verify` and the acceptance
// suite.  Tolerances are pinned here and nowhere else.

CheckResult check_truncation_roots();      // n=2 roots + shared eigenvalue, 1e-8
CheckResult check_closed_forms();          // n=1 closed form / n=2 cubic agreement
CheckResult check_oscillator_exact();      // a=b=0 spectra, both methods
CheckResult check_paper_spectra();         // four reference lists, 1e-6, < 30 s
CheckResult check_truncation_on_curves();  // n <= 8 points land on eigencurves, 1e-7
CheckResult check_hellmann_feynman_grid(); // residuals < 1e-5 + monotonicity signs
CheckResult check_asymptotes();            // large-a limits, 5e-3, < 10 s each
CheckResult check_oracle_equivalence();    // 6 triples, lowest 4, 1e-6
CheckResult check_refutation_demo();       // omega root + off-constraint bound states

std::vector<CheckResult> verify_quick();
std::vector<CheckResult> verify_full();

}  // namespace radspec
