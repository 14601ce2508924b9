#pragma once

#include "hyperca/types.hpp"

namespace hyperca {

/// Every symbol occurs floor(n/g) or ceil(n/g) times.
bool is_balanced(const SymbolVector& x);

/// Both rows balanced and every pair (a,b) occurs floor(n/(g1*g2)) or
/// ceil(n/(g1*g2)) times among the columns.
bool are_pairwise_balanced(const SymbolVector& x1, const SymbolVector& x2);

/// Every tuple over the product alphabet appears in some column. t = 2 or 3.
bool are_t_qualitatively_independent(
    const std::vector<const SymbolVector*>& rows, int t);

bool are_qualitatively_independent(const SymbolVector& x1,
                                   const SymbolVector& x2);
bool are_qualitatively_independent(const SymbolVector& x1,
                                   const SymbolVector& x2,
                                   const SymbolVector& x3);

/// Max over edges of the product of member weights. Needs >= 1 edge.
long long product_weight(const WeightedHypergraph& h);

/// Checks qualitative independence of the rows of every edge; with
/// `balanced_mode` also checks that each row is balanced and rows within
/// each edge are mutually pairwise balanced. `jobs` > 1 fans the per-edge
/// work out across threads; the report is identical to the sequential one.
VerificationReport verify_covering_array(const CoveringArray& c,
                                         bool balanced_mode = false,
                                         int jobs = 1);

}  // namespace hyperca
