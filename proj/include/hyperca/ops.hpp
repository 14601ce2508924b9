#pragma once

#include <string>

#include "hyperca/types.hpp"

namespace hyperca {

// Hooking operations grow a hypergraph and its balanced covering array in
// lock step: each inserts vertices and edges and appends synthesized rows so
// that the result is again a balanced covering array of unchanged size.
// All operations are persistent: inputs stay valid, results are fresh
// values. Every operation requires the product weight to be unchanged
// (checked unless the input hypergraph has no edges yet).

struct HookStep {
    enum class Kind {
        EdgeHookI,             // new vertex u, new edge {u, anchor}
        EdgeHookII,            // new vertex u, new edges {u,v} and {u,w}
        TwoVertexHyperedgeHook,  // new vertices u,v, new hyperedge {u,v,anchor}
        HyperedgeHookI,        // new vertex u replaces edge {v,w} by {u,v,w}
        HyperedgeHookII        // new vertex u, hyperedge {u,v,w} + edge {u,z}
    };
    Kind kind;
    std::vector<VertexId> new_ids;
    std::vector<int> new_weights;
    std::vector<VertexId> anchors;
    VertexId z = -1;  // HyperedgeHookII witness partner
};

/// New vertex u with edge {u,v}; row for u balanced and pairwise balanced
/// with row v. Requires w(u)*w(v) <= n.
CoveringArray hook_edge_i(const CoveringArray& c, VertexId u, int weight,
                          VertexId v);

/// New vertex u with edges {u,v} and {u,w}; row for u pairwise balanced with
/// both anchors. Requires w(u)*w(v) <= n and w(u)*w(w) <= n.
CoveringArray hook_edge_ii(const CoveringArray& c, VertexId u, int weight,
                           VertexId v, VertexId w);

/// New vertices u and v with hyperedge {u,v,w}; the triple of rows becomes
/// 3-qualitatively independent. Requires w(u)*w(v)*w(w) <= n.
CoveringArray hook_two_vertex_hyperedge(const CoveringArray& c, VertexId u,
                                        int weight_u, VertexId v, int weight_v,
                                        VertexId w);

/// Adds hyperedge {u,v,w} with u new, given existing vertices v,w whose rows
/// are pairwise balanced. No edge is removed; this is the attachment
/// primitive behind the acyclic replay and hyperedge hooking I.
CoveringArray attach_hyperedge(const CoveringArray& c, VertexId u, int weight,
                               VertexId v, VertexId w);

/// Replaces existing edge {v,w} by hyperedge {u,v,w} with u new.
/// Requires w(u)*w(v)*w(w) <= n.
CoveringArray hook_hyperedge_i(const CoveringArray& c, VertexId u, int weight,
                               VertexId v, VertexId w);

/// New vertex u with hyperedge {u,v,w} and edge {u,z}, witnessed by the
/// existing hyperedge {v,w,z}. The new row is 3-qualitatively independent
/// with rows v,w and pairwise balanced with rows v,w,z. Requires
/// w(u)*w(v)*w(w) <= n, w(u)*w(z) <= n, for w(u) >= 3 additionally
/// floor(n/(w(v)w(w))) = 0 mod w(u), and the row-synthesis degree bound
/// w(u) <= min(floor(n/(w(v)w(w))), floor(n/(w(v)w(z)))) for at least one
/// of the role orders (v,w) or (w,v).
CoveringArray hook_hyperedge_ii(const CoveringArray& c, VertexId u, int weight,
                                VertexId v, VertexId w, VertexId z);

CoveringArray apply_step(const CoveringArray& c, const HookStep& step);

/// Folds the steps in order; a failing step is reported with its 1-based
/// index prefixed to the underlying error message.
CoveringArray apply_sequence(const CoveringArray& c,
                             const std::vector<HookStep>& steps);

/// Textual step forms, one per line:
///   hookI u=7 w=3 anchor=2
///   hookII u=7 w=3 anchors=4,5
///   hook2v u=7,8 w=3,2 anchor=4
///   hhookI u=7 w=3 edge=4,5
///   hhookII u=7 w=3 pair=4,5 z=6
HookStep parse_hook_step(const std::string& line);
std::string format_hook_step(const HookStep& step);

}  // namespace hyperca
