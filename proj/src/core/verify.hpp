#pragma once

#include "core/rational.hpp"

#include <string>
#include <vector>

namespace scl {

// Enumeration limits of the cross-check battery. class_budget bounds the
// number of members any single averaging class may have; classes above it
// are reported as skipped, never silently sampled.
struct VerifyCaps {
    int max_users = 6;
    int max_caches = 4;
    int max_files = 6;
    long long class_budget = 20000;
};

struct VerifyReport {
    long instances_checked = 0;
    bool subgraph_always_acyclic = true;
    bool qi_matches = true;
    bool scheme_matches_formula = true;
    bool lp_matches_formula = true;
    bool counts_match = true;
    bool tightness_exact = true;
    Rat tightness_gap_max{Int(0)};
    std::vector<std::string> skipped;
    std::vector<std::string> failures;

    bool all_ok() const;
};

// Runs every cross-check the library supports against its independent
// oracles: delivered delay vs the closed form vs the linear program,
// acyclicity of every converse subgraph, brute-force subfile counts vs
// the counting formula, and converse-meets-scheme tightness.
VerifyReport run_verify(const VerifyCaps& caps = {});

std::string verify_report_to_json(const VerifyReport& report);

}  // namespace scl
