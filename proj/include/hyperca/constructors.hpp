#pragma once

#include <cstdint>
#include <optional>

#include "hyperca/types.hpp"

namespace hyperca {

// End-to-end builders. Each returns a balanced covering array whose size is
// exactly the product weight of the input hypergraph, which certifies
// optimality (no smaller array can cover the heaviest hyperedge). Every
// constructor verifies its result before returning.

struct BuildOptions {
    // When set, the finished array's columns are shuffled by this seed.
    // Column permutations preserve every covering and balance property.
    std::optional<std::uint64_t> seed;
};

/// Builder for alpha-acyclic hypergraphs with all edges of size 3. Replays
/// the reduction that certified acyclicity backwards, attaching one
/// hyperedge at a time starting from a heaviest one.
CoveringArray construct_acyclic(const WeightedHypergraph& h,
                                const BuildOptions& options = {});

/// Hypertrees are alpha-acyclic, so this gates on the same recognizer and
/// delegates to construct_acyclic.
CoveringArray construct_hypertree(const WeightedHypergraph& h,
                                  const BuildOptions& options = {});

/// Builder for loose cycles: seed a heaviest hyperedge, walk the cycle with
/// edge hooks, close it, then upgrade every temporary edge to its hyperedge.
CoveringArray construct_loose_cycle(const WeightedHypergraph& h,
                                    const BuildOptions& options = {});

/// Builder for the three-edge cycle shape on five vertices.
CoveringArray construct_cycle3(const WeightedHypergraph& h,
                               const BuildOptions& options = {});

/// Tries the supported classes in order: alpha-acyclic, loose cycle,
/// three-edge cycle. Unsupported inputs raise unsupported_error whose
/// message lists why each recognizer refused.
CoveringArray construct_auto(const WeightedHypergraph& h,
                             const BuildOptions& options = {});

}  // namespace hyperca
