#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwzero/numeric.hpp"

namespace gwzero {

struct OracleCheckConfig {
    std::uint64_t seed = 1729;
    int count = 1000;
    int max_k = 6;
    i64 max_entry = 9;  // |phi/psi/scalar entries| bound
};

struct OracleCheckReport {
    std::uint64_t seed = 0;
    int total = 0;
    int compared = 0;       // both evaluator and oracle returned integers
    int skipped = 0;        // one side NotDetermined (allowed)
    int disagreements = 0;  // both integers, different values
    std::vector<std::string> failures;

    bool ok() const { return disagreements == 0; }
};

/// Randomized evaluator/oracle equivalence suite: random blowup bases of
/// rank <= 24 built from the catalog forms, random exceptional query
/// classes, random insertion data, both 4-manifold and stabilized queries.
OracleCheckReport run_oracle_check(const OracleCheckConfig& cfg);

struct PermutationCheckReport {
    int total = 0;        // permutations examined
    int mismatches = 0;
    std::vector<std::string> failures;

    bool ok() const { return mismatches == 0; }
};

/// Exhaustive peel-order check: for every permutation of the insertion list
/// (k <= max_k), the evaluator and the oracle each return the same value as
/// on the unpermuted query.
PermutationCheckReport run_permutation_check(int max_k);

}  // namespace gwzero
