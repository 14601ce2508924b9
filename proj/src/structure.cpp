#include "hyperca/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "hyperca/core.hpp"

namespace hyperca {

namespace {

// When avoid >= 0, that edge is deleted only once no other move applies; on
// reducible inputs it therefore dies last (the reduction outcome itself does
// not depend on move order).
GyoTrace gyo_reduce_impl(const WeightedHypergraph& h, int avoid) {
    std::vector<std::set<VertexId>> live;  // current content per edge index
    std::vector<char> alive(h.edge_count(), 1);
    for (const auto& e : h.edges()) live.emplace_back(e.begin(), e.end());

    GyoTrace trace;
    for (;;) {
        // Rule 1: lowest-id degree-one vertex leaves its only edge.
        VertexId best = -1;
        int in_edge = -1;
        for (const auto& vx : h.vertices()) {
            if (best != -1 && vx.id >= best) continue;
            int d = 0, where = -1;
            for (std::size_t i = 0; i < live.size() && d < 2; ++i)
                if (alive[i] && live[i].count(vx.id)) {
                    ++d;
                    where = static_cast<int>(i);
                }
            if (d == 1) {
                best = vx.id;
                in_edge = where;
            }
        }
        if (best != -1) {
            live[in_edge].erase(best);
            trace.steps.push_back(
                {GyoStep::Kind::DeleteDegreeOneVertex, best, in_edge, -1});
            continue;
        }

        // Rule 2: lowest-id edge contained in another edge is absorbed.
        int a = -1, b = -1;
        for (int pass = 0; pass < 2 && a == -1; ++pass) {
            for (std::size_t i = 0; i < live.size() && a == -1; ++i) {
                if (!alive[i]) continue;
                if (pass == 0 && static_cast<int>(i) == avoid) continue;
                if (pass == 1 && static_cast<int>(i) != avoid) continue;
                for (std::size_t j = 0; j < live.size(); ++j) {
                    if (i == j || !alive[j]) continue;
                    if (std::includes(live[j].begin(), live[j].end(),
                                      live[i].begin(), live[i].end())) {
                        a = static_cast<int>(i);
                        b = static_cast<int>(j);
                        break;
                    }
                }
            }
        }
        if (a != -1) {
            alive[a] = 0;
            trace.steps.push_back({GyoStep::Kind::AbsorbSubsetEdge, -1, a, b});
            trace.deletion_order.push_back(a);
            continue;
        }

        // Rule 3: drop an empty edge (only reachable when it is the sole
        // survivor; otherwise rule 2 absorbs it first).
        int e = -1;
        for (std::size_t i = 0; i < live.size(); ++i)
            if (alive[i] && live[i].empty()) {
                e = static_cast<int>(i);
                break;
            }
        if (e != -1) {
            alive[e] = 0;
            trace.steps.push_back({GyoStep::Kind::DeleteEmptyEdge, -1, e, -1});
            trace.deletion_order.push_back(e);
            continue;
        }
        break;
    }

    for (std::size_t i = 0; i < live.size(); ++i)
        if (alive[i])
            trace.residual.emplace_back(
                static_cast<int>(i),
                std::vector<VertexId>(live[i].begin(), live[i].end()));
    return trace;
}

}  // namespace

GyoTrace gyo_reduce(const WeightedHypergraph& h) {
    return gyo_reduce_impl(h, -1);
}

GyoTrace gyo_reduce_keeping(const WeightedHypergraph& h, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(h.edge_count()))
        throw precondition_error("edge index out of range");
    return gyo_reduce_impl(h, edge_index);
}

bool is_alpha_acyclic(const WeightedHypergraph& h) {
    return gyo_reduce(h).empty_residual();
}

WeightedHypergraph two_section(const WeightedHypergraph& h) {
    WeightedHypergraph g;
    for (const auto& v : h.vertices()) g.add_vertex(v.id, v.weight);
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                pairs.insert({e[i], e[j]});
    for (const auto& [a, b] : pairs) g.add_edge({a, b});
    return g;
}

namespace {

// Maximal cliques via pivoting Bron-Kerbosch on bitmask vertex sets.
void maximal_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                     std::uint64_t p, std::uint64_t x,
                     std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    int pivot = -1, covered = -1;
    for (std::uint64_t rest = p | x; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        int cnt = std::popcount(p & adj[u]);
        if (cnt > covered) {
            covered = cnt;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~adj[pivot];
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

bool is_conformal(const WeightedHypergraph& h) {
    if (h.vertex_count() > 64)
        throw unsupported_error(
            "conformality check supports at most 64 vertices");
    std::vector<VertexId> ids;
    for (const auto& v : h.vertices()) ids.push_back(v.id);
    std::sort(ids.begin(), ids.end());
    auto index_of = [&](VertexId v) {
        return static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };

    std::vector<std::uint64_t> adj(ids.size(), 0);
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                if (i != j) adj[index_of(e[i])] |= std::uint64_t{1}
                                                   << index_of(e[j]);

    std::set<std::vector<VertexId>> edge_sets(h.edges().begin(),
                                              h.edges().end());
    std::vector<std::uint64_t> cliques;
    std::uint64_t all = ids.size() == 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << ids.size()) - 1;
    maximal_cliques(adj, 0, all, 0, cliques);
    for (std::uint64_t c : cliques) {
        if (std::popcount(c) < 2) continue;  // isolated vertex
        std::vector<VertexId> verts;
        for (std::uint64_t rest = c; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            verts.push_back(ids[v]);
        }
        if (!edge_sets.count(verts)) return false;
    }
    return true;
}

std::optional<LooseCycle> recognize_loose_cycle(const WeightedHypergraph& h) {
    const int k = h.edge_count();
    if (k < 3 || h.vertex_count() != 2 * k) return std::nullopt;
    for (const auto& e : h.edges())
        if (e.size() != 3) return std::nullopt;

    std::map<VertexId, std::vector<int>> edges_at;
    for (int i = 0; i < k; ++i)
        for (VertexId v : h.edges()[i]) edges_at[v].push_back(i);
    if (static_cast<int>(edges_at.size()) != 2 * k) return std::nullopt;
    for (const auto& [v, es] : edges_at)
        if (es.size() > 2) return std::nullopt;

    // Joint between each pair of adjacent edges; reject double sharing.
    std::map<std::pair<int, int>, VertexId> joint;
    std::vector<std::vector<int>> nbr(k);
    for (const auto& [v, es] : edges_at)
        if (es.size() == 2) {
            std::pair<int, int> key{std::min(es[0], es[1]),
                                    std::max(es[0], es[1])};
            if (joint.count(key)) return std::nullopt;
            joint[key] = v;
            nbr[es[0]].push_back(es[1]);
            nbr[es[1]].push_back(es[0]);
        }
    for (int i = 0; i < k; ++i)
        if (nbr[i].size() != 2) return std::nullopt;

    LooseCycle c;
    c.length = k;
    int start = 0;
    int prev = start;
    int cur = std::min(nbr[start][0], nbr[start][1]);
    c.edge_order.push_back(start);
    while (cur != start) {
        c.edge_order.push_back(cur);
        int nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(c.edge_order.size()) != k) return std::nullopt;

    for (int i = 0; i < k; ++i) {
        int e = c.edge_order[i];
        int before = c.edge_order[(i + k - 1) % k];
        c.joints.push_back(
            joint.at({std::min(before, e), std::max(before, e)}));
    }
    for (int i = 0; i < k; ++i) {
        int e = c.edge_order[i];
        VertexId enter = c.joints[i], leave = c.joints[(i + 1) % k];
        VertexId priv = -1;
        for (VertexId v : h.edges()[e])
            if (v != enter && v != leave) priv = v;
        if (priv == -1 || edges_at[priv].size() != 1) return std::nullopt;
        c.privates.push_back(priv);
    }
    return c;
}

std::optional<Cycle3Shape> recognize_cycle3_shape(const WeightedHypergraph& h) {
    if (h.edge_count() != 3 || h.vertex_count() != 5) return std::nullopt;
    for (const auto& e : h.edges())
        if (e.size() != 3) return std::nullopt;

    auto inter = [](const std::vector<VertexId>& a,
                    const std::vector<VertexId>& b) {
        std::vector<VertexId> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(out));
        return out;
    };

    long long pw = product_weight(h);
    std::optional<Cycle3Shape> fallback;
    for (int e1 = 0; e1 < 3; ++e1)
        for (int e2 = 0; e2 < 3; ++e2) {
            if (e1 == e2) continue;
            int e3 = 3 - e1 - e2;
            const auto &E1 = h.edges()[e1], &E2 = h.edges()[e2],
                       &E3 = h.edges()[e3];
            auto shared = inter(E1, E2);
            if (shared.size() != 2) continue;
            VertexId v1 = shared[0], v2 = shared[1];
            VertexId v0 = -1, v3 = -1;
            for (VertexId v : E1)
                if (v != v1 && v != v2) v0 = v;
            for (VertexId v : E2)
                if (v != v1 && v != v2) v3 = v;
            auto i31 = inter(E3, E1);
            auto i32 = inter(E3, E2);
            if (i31 != std::vector<VertexId>{v0}) continue;
            if (i32 != std::vector<VertexId>{v3}) continue;
            VertexId v4 = -1;
            for (VertexId v : E3)
                if (v != v0 && v != v3) v4 = v;

            Cycle3Shape s;
            s.v = {v0, v1, v2, v3, v4};
            s.e1 = e1;
            s.e2 = e2;
            s.e3 = e3;
            long long g0 = h.weight_of(v0), g1 = h.weight_of(v1),
                      g2 = h.weight_of(v2), g3 = h.weight_of(v3);
            s.product_ok = g0 * g1 * g2 == pw;
            // Weights below 3 never need the divisibility condition.
            s.mod_ok = g3 < 3 || g0 % g3 == 0;
            s.bound_ok = g3 <= std::min(g0, std::max(g1, g2));
            if (s.conditions_ok()) return s;
            if (!fallback) fallback = s;
        }
    return fallback;
}

WeightedHypergraph complete_uniform(int k, int r,
                                    const std::vector<int>& weights) {
    if (r != 2 && r != 3)
        throw precondition_error("edge size must be 2 or 3");
    if (k < r)
        throw precondition_error("need at least r vertices");
    if (static_cast<int>(weights.size()) != k)
        throw precondition_error("need one weight per vertex");
    WeightedHypergraph h;
    for (int i = 0; i < k; ++i) h.add_vertex(i + 1, weights[i]);
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            if (r == 2) {
                h.add_edge({a, b});
                continue;
            }
            for (int c = b + 1; c <= k; ++c) h.add_edge({a, b, c});
        }
    return h;
}

}  // namespace hyperca
