#pragma once

#include <array>
#include <optional>

#include "hyperca/types.hpp"

namespace hyperca {

// Hypergraph classification: GYO reduction and acyclicity, 2-section and
// conformality, and the two cycle shapes with closed-form constructions.

struct GyoStep {
    enum class Kind { DeleteDegreeOneVertex, AbsorbSubsetEdge, DeleteEmptyEdge };
    Kind kind;
    VertexId vertex = -1;  // DeleteDegreeOneVertex only
    int edge = -1;         // index into the input edge list
    int into = -1;         // absorbing edge, AbsorbSubsetEdge only
};

struct GyoTrace {
    std::vector<GyoStep> steps;
    /// Edge indices in the order they vanished (absorbed or emptied).
    std::vector<int> deletion_order;
    /// Surviving edges by index, with their surviving vertex sets.
    std::vector<std::pair<int, std::vector<VertexId>>> residual;

    bool empty_residual() const { return residual.empty(); }
};

/// Applies the reduction rules until none fits: a degree-one vertex leaves
/// its only edge, an edge contained in another is absorbed, an empty edge is
/// dropped. Rule priority in that order, lowest vertex or edge id first.
GyoTrace gyo_reduce(const WeightedHypergraph& h);

/// Same rules, but the given edge is deleted only when no move on any other
/// edge applies; on reducible inputs it ends the deletion order. Used to pin
/// the replay seed.
GyoTrace gyo_reduce_keeping(const WeightedHypergraph& h, int edge_index);

bool is_alpha_acyclic(const WeightedHypergraph& h);

/// Graph joining every vertex pair that shares a hyperedge. Returned with
/// the original vertex weights and one size-2 edge per adjacent pair.
WeightedHypergraph two_section(const WeightedHypergraph& h);

/// Every maximal clique (of size >= 2) of the 2-section is a hyperedge.
/// Exact clique enumeration; supports up to 64 vertices.
bool is_conformal(const WeightedHypergraph& h);

/// Length-k cycle on 2k vertices: consecutive hyperedges share exactly one
/// joint vertex and each hyperedge carries one private degree-one vertex.
/// E_i = {joints[i], privates[i], joints[(i+1) mod k]}.
struct LooseCycle {
    int length = 0;
    std::vector<int> edge_order;      // indices into the input edge list
    std::vector<VertexId> joints;     // entry joint of each ordered edge
    std::vector<VertexId> privates;   // degree-one vertex of each ordered edge
};

std::optional<LooseCycle> recognize_loose_cycle(const WeightedHypergraph& h);

/// Three-edge cycle on five vertices: E1={v0,v1,v2}, E2={v1,v2,v3},
/// E3={v3,v4,v0}. The weight conditions come evaluated so callers can
/// report exactly which one failed.
struct Cycle3Shape {
    std::array<VertexId, 5> v;
    int e1 = -1, e2 = -1, e3 = -1;  // indices into the input edge list
    bool product_ok = false;        // g0*g1*g2 == PW(H)
    bool mod_ok = false;            // g0 == 0 mod g3 (vacuous for g3 < 3)
    bool bound_ok = false;          // g3 <= min(g0, max(g1, g2))

    bool conditions_ok() const { return product_ok && mod_ok && bound_ok; }
};

std::optional<Cycle3Shape> recognize_cycle3_shape(const WeightedHypergraph& h);

/// Complete r-uniform hypergraph on vertices 1..k with the given weights.
WeightedHypergraph complete_uniform(int k, int r, const std::vector<int>& weights);

}  // namespace hyperca
