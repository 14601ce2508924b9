#pragma once

#include <optional>

#include "hyperca/types.hpp"

namespace hyperca {

// Brute-force ground truth for small instances, independent of the
// constructive machinery: plain backtracking over array cells with symmetry
// breaking, no structural theory.

struct OracleOptions {
    long long node_budget = 100'000'000;
};

enum class OracleStatus { Found, NoneExists, BudgetExceeded };

struct OracleResult {
    OracleStatus status;
    std::optional<CoveringArray> array;  // set iff status == Found
    long long nodes_used = 0;
};

/// Searches for any covering array (not necessarily balanced) of exactly
/// size n on h. Exhaustion is a definitive no; running out of nodes is not.
OracleResult exists_ca_of_size(const WeightedHypergraph& h, int n,
                               const OracleOptions& options = {});

struct MinCanResult {
    OracleStatus status;
    int n = 0;  // Found: the minimum size; BudgetExceeded: size being tried
    std::optional<CoveringArray> array;
    long long nodes_used = 0;
};

/// Smallest n admitting a covering array, scanned upward from the product
/// weight. Each candidate size gets a fresh node budget.
MinCanResult min_can(const WeightedHypergraph& h,
                     const OracleOptions& options = {});

}  // namespace hyperca
