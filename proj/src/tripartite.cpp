#include "hyperca/tripartite.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <string>

#include "hyperca/core.hpp"

namespace hyperca {

namespace {

void req(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("split audit: ") + msg);
}

}  // namespace

IndexedTripartiteHypergraph build_tripartite(const SymbolVector& x1,
                                             const SymbolVector& x2,
                                             const SymbolVector& x3) {
    if (x1.size() != x2.size() || x1.size() != x3.size())
        throw precondition_error("vectors must have equal length");
    IndexedTripartiteHypergraph g;
    g.g1 = x1.alphabet();
    g.g2 = x2.alphabet();
    g.g3 = x3.alphabet();
    g.columns.reserve(x1.size());
    for (int i = 0; i < x1.size(); ++i)
        g.columns.push_back({x1[i], x2[i], x3[i]});
    return g;
}

namespace {

// Forced seed chunk sizes for a class with `sp` special columns:
// floor(sp/h) full chunks plus one remainder chunk.
std::vector<int> seed_loads(int sp, int h) {
    std::vector<int> loads(sp / h, h);
    if (sp % h != 0) loads.push_back(sp % h);
    return loads;
}

// A class assignment maps every surplus class a to the R class c(a) whose
// symbol the specials of a carry. Feasibility of R_c: its copies must be
// floor(d/h) of degree h plus at most one lighter one, while every seed chunk
// becomes its own copy that can only grow. That holds iff
// d(R_c) >= h*(seeds(c) - 1) + min seed load.
struct AssignmentState {
    std::vector<int> seeds;     // per R class
    std::vector<int> min_load;  // per R class, h when no partial seed
};

bool r_class_feasible(int d, int h, int seeds, int min_load) {
    if (seeds == 0) return true;
    return d >= static_cast<long long>(h) * (seeds - 1) + min_load;
}

}  // namespace

TripartiteSplit split_tripartite(const IndexedTripartiteHypergraph& g, int h) {
    if (h < 1) throw precondition_error("h must be positive");
    const int g1 = g.g1, g2 = g.g2, g3 = g.g3;
    const int n = g.size();

    std::vector<std::vector<int>> pair_cols(
        static_cast<std::size_t>(g1) * g2);
    std::vector<int> dP(g1, 0), dQ(g2, 0), dR(g3, 0);
    for (int i = 0; i < n; ++i) {
        const auto& [a, b, c] = g.columns[i];
        pair_cols[static_cast<std::size_t>(a) * g2 + b].push_back(i);
        ++dP[a];
        ++dQ[b];
        ++dR[c];
    }
    for (int a = 0; a < g1; ++a)
        for (int b = 0; b < g2; ++b) {
            int m = static_cast<int>(
                        pair_cols[static_cast<std::size_t>(a) * g2 + b].size()) %
                    h;
            if (m > 1)
                throw precondition_error(
                    "pair count between classes " + std::to_string(a) + " and " +
                    std::to_string(b) + " is " + std::to_string(m) +
                    " mod h; must be 0 or 1");
        }

    // Surplus classes and, per class and candidate c, whether every surplus
    // pair owns a column carrying symbol c in the third row.
    std::vector<std::vector<int>> surplus_pairs(g1);  // b lists
    for (int a = 0; a < g1; ++a)
        for (int b = 0; b < g2; ++b)
            if (pair_cols[static_cast<std::size_t>(a) * g2 + b].size() % h == 1)
                surplus_pairs[a].push_back(b);

    std::vector<int> surplus_classes;
    for (int a = 0; a < g1; ++a)
        if (!surplus_pairs[a].empty()) surplus_classes.push_back(a);

    std::vector<std::vector<int>> special_for(
        static_cast<std::size_t>(g1) * g3);  // (a,c) -> special per pair, or empty
    std::vector<std::vector<char>> available(
        g1, std::vector<char>(g3, 1));
    for (int a : surplus_classes)
        for (int c = 0; c < g3; ++c) {
            auto& chosen = special_for[static_cast<std::size_t>(a) * g3 + c];
            for (int b : surplus_pairs[a]) {
                int pick = -1;
                for (int i : pair_cols[static_cast<std::size_t>(a) * g2 + b])
                    if (g.columns[i][2] == c) {
                        pick = i;
                        break;
                    }
                if (pick < 0) {
                    available[a][c] = 0;
                    chosen.clear();
                    break;
                }
                chosen.push_back(pick);
            }
        }

    // Lexicographically first feasible assignment of surplus classes to R
    // classes. Infeasibility of an R class is monotone in added seeds, so
    // partial assignments prune exactly.
    std::vector<int> chosen_c(g1, -1);
    {
        AssignmentState st{std::vector<int>(g3, 0), std::vector<int>(g3, h)};
        std::vector<int> pick(surplus_classes.size(), -1);
        long long nodes = 0;
        auto dfs = [&](auto&& self, std::size_t idx) -> bool {
            if (idx == surplus_classes.size()) return true;
            int a = surplus_classes[idx];
            auto loads = seed_loads(static_cast<int>(surplus_pairs[a].size()), h);
            int k = static_cast<int>(loads.size());
            int lo = *std::min_element(loads.begin(), loads.end());
            for (int c = 0; c < g3; ++c) {
                if (!available[a][c]) continue;
                if (++nodes > 2'000'000)
                    throw unsupported_error(
                        "special-column class assignment search too large");
                int seeds = st.seeds[c] + k;
                int min_load = std::min(st.min_load[c], lo);
                if (!r_class_feasible(dR[c], h, seeds, min_load)) continue;
                int save_seeds = st.seeds[c], save_min = st.min_load[c];
                st.seeds[c] = seeds;
                st.min_load[c] = min_load;
                pick[idx] = c;
                if (self(self, idx + 1)) return true;
                st.seeds[c] = save_seeds;
                st.min_load[c] = save_min;
            }
            return false;
        };
        if (!dfs(dfs, 0))
            throw precondition_error(
                "no special-column class assignment admits the degree "
                "profile; inputs are not 3-qualitatively independent or not "
                "pairwise balanced");
        for (std::size_t idx = 0; idx < surplus_classes.size(); ++idx)
            chosen_c[surplus_classes[idx]] = pick[idx];
    }

    TripartiteSplit s;
    s.cap = h;
    s.g1 = g1;
    s.g2 = g2;
    s.g3 = g3;
    s.columns.assign(n, {-1, -1, -1});
    s.special_columns.resize(g1);
    s.chosen_c = chosen_c;

    std::vector<char> is_special(n, 0);
    for (int a : surplus_classes)
        for (int i :
             special_for[static_cast<std::size_t>(a) * g3 + chosen_c[a]]) {
            is_special[i] = 1;
            s.special_columns[a].push_back(i);
        }

    auto new_copy = [](std::vector<int>& owner, std::vector<std::uint8_t>& kind,
                       int cls, std::uint8_t k) {
        owner.push_back(cls);
        kind.push_back(k);
        return static_cast<int>(owner.size()) - 1;
    };

    // P side: full blocks pair by pair, then the specials chunked into E
    // copies. Each block also creates its mirrored Q copy.
    std::vector<std::vector<int>> e_copy_cols;  // E copy -> columns
    std::vector<int> e_copy_class;
    for (int a = 0; a < g1; ++a) {
        for (int b = 0; b < g2; ++b) {
            std::vector<int> rest;
            for (int i : pair_cols[static_cast<std::size_t>(a) * g2 + b])
                if (!is_special[i]) rest.push_back(i);
            assert(static_cast<int>(rest.size()) % h == 0);
            for (std::size_t at = 0; at < rest.size(); at += h) {
                int p = new_copy(s.p_owner, s.p_kind, a, TripartiteSplit::kBlockCopy);
                int q = new_copy(s.q_owner, s.q_kind, b, TripartiteSplit::kBlockCopy);
                TripartiteSplit::Block blk{a, b, p, q, {}};
                for (int j = 0; j < h; ++j) {
                    int i = rest[at + j];
                    s.columns[i][0] = p;
                    s.columns[i][1] = q;
                    blk.columns.push_back(i);
                }
                s.blocks.push_back(std::move(blk));
            }
        }
        const auto& sp = s.special_columns[a];
        for (std::size_t at = 0; at < sp.size(); at += h) {
            int p = new_copy(s.p_owner, s.p_kind, a, TripartiteSplit::kSpecialCopy);
            e_copy_cols.emplace_back();
            e_copy_class.push_back(a);
            for (std::size_t j = at; j < std::min(at + h, sp.size()); ++j) {
                s.columns[sp[j]][0] = p;
                e_copy_cols.back().push_back(sp[j]);
            }
        }
    }

    // Q side leftovers: specials grouped by their second-row class.
    for (int b = 0; b < g2; ++b) {
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (is_special[i] && g.columns[i][1] == b) rest.push_back(i);
        for (std::size_t at = 0; at < rest.size(); at += h) {
            int q = new_copy(s.q_owner, s.q_kind, b, TripartiteSplit::kFillCopy);
            for (std::size_t j = at; j < std::min(at + h, rest.size()); ++j)
                s.columns[rest[j]][1] = q;
        }
    }

    // R side: each E copy seeds its own copy of R_{c(a)}, non-special columns
    // top the seeds up to degree h. When they cannot, the lightest seed stays
    // the single light copy of its class.
    for (int c = 0; c < g3; ++c) {
        std::vector<int> seed_ids;  // index into e_copy_cols
        for (std::size_t e = 0; e < e_copy_cols.size(); ++e)
            if (chosen_c[e_copy_class[e]] == c)
                seed_ids.push_back(static_cast<int>(e));
        std::vector<int> stock;
        for (int i = 0; i < n; ++i)
            if (g.columns[i][2] == c && !is_special[i]) stock.push_back(i);

        std::vector<int> r_of_seed(seed_ids.size());
        std::vector<int> want(seed_ids.size());
        long long topup = 0;
        for (std::size_t j = 0; j < seed_ids.size(); ++j) {
            r_of_seed[j] =
                new_copy(s.r_owner, s.r_kind, c, TripartiteSplit::kSpecialCopy);
            for (int i : e_copy_cols[seed_ids[j]]) s.columns[i][2] = r_of_seed[j];
            want[j] = h - static_cast<int>(e_copy_cols[seed_ids[j]].size());
            topup += want[j];
        }
        std::size_t at = 0;
        if (static_cast<long long>(stock.size()) < topup) {
            std::size_t light = 0;
            for (std::size_t j = 1; j < seed_ids.size(); ++j)
                if (e_copy_cols[seed_ids[j]].size() <
                    e_copy_cols[seed_ids[light]].size())
                    light = j;
            long long required = topup - want[light];
            if (static_cast<long long>(stock.size()) < required)
                throw std::logic_error(
                    "split infeasible despite assignment search");
            for (std::size_t j = 0; j < seed_ids.size(); ++j)
                if (j != light)
                    for (int t = 0; t < want[j]; ++t)
                        s.columns[stock[at++]][2] = r_of_seed[j];
            while (at < stock.size()) s.columns[stock[at++]][2] = r_of_seed[light];
        } else {
            for (std::size_t j = 0; j < seed_ids.size(); ++j)
                for (int t = 0; t < want[j]; ++t)
                    s.columns[stock[at++]][2] = r_of_seed[j];
            while (at < stock.size()) {
                int r = new_copy(s.r_owner, s.r_kind, c, TripartiteSplit::kFillCopy);
                for (int j = 0; j < h && at < stock.size(); ++j)
                    s.columns[stock[at++]][2] = r;
            }
        }
    }

#ifndef NDEBUG
    validate_split(g, s);
    try {
        assert(is_balanced_hypergraph(split_as_hypergraph(s)));
    } catch (const unsupported_error&) {
    }
#endif
    return s;
}

namespace {

// Copy degrees of one side must realize floor(d/h) full copies plus at most
// one lighter copy per class.
void audit_side(const std::vector<int>& owner, const std::vector<int>& at,
                const std::vector<int>& class_degree, int h, const char* side) {
    std::vector<int> deg(owner.size(), 0);
    for (int copy : at) {
        req(copy >= 0 && copy < static_cast<int>(owner.size()),
            "column routed to missing copy");
        ++deg[copy];
    }
    std::vector<int> full(class_degree.size(), 0), light(class_degree.size(), 0),
        light_deg(class_degree.size(), 0);
    for (std::size_t v = 0; v < owner.size(); ++v) {
        req(deg[v] >= 1 && deg[v] <= h, side);
        if (deg[v] == h) {
            ++full[owner[v]];
        } else {
            ++light[owner[v]];
            light_deg[owner[v]] = deg[v];
        }
    }
    for (std::size_t cls = 0; cls < class_degree.size(); ++cls) {
        req(full[cls] == class_degree[cls] / h, "wrong number of full copies");
        req(light[cls] == (class_degree[cls] % h == 0 ? 0 : 1),
            "wrong number of light copies");
        if (light[cls] == 1)
            req(light_deg[cls] == class_degree[cls] % h, "light copy degree");
    }
}

}  // namespace

void validate_split(const IndexedTripartiteHypergraph& g,
                    const TripartiteSplit& s) {
    const int n = g.size();
    const int h = s.cap;
    req(static_cast<int>(s.columns.size()) == n, "column count");

    std::vector<int> dP(g.g1, 0), dQ(g.g2, 0), dR(g.g3, 0);
    std::vector<int> pair_deg(static_cast<std::size_t>(g.g1) * g.g2, 0);
    for (const auto& [a, b, c] : g.columns) {
        ++dP[a];
        ++dQ[b];
        ++dR[c];
        ++pair_deg[static_cast<std::size_t>(a) * g.g2 + b];
    }
    std::vector<int> pcol(n), qcol(n), rcol(n);
    for (int i = 0; i < n; ++i) {
        pcol[i] = s.columns[i][0];
        qcol[i] = s.columns[i][1];
        rcol[i] = s.columns[i][2];
        req(s.p_owner[pcol[i]] == g.columns[i][0], "P owner");
        req(s.q_owner[qcol[i]] == g.columns[i][1], "Q owner");
        req(s.r_owner[rcol[i]] == g.columns[i][2], "R owner");
    }
    audit_side(s.p_owner, pcol, dP, h, "P copy degree out of range");
    audit_side(s.q_owner, qcol, dQ, h, "Q copy degree out of range");
    audit_side(s.r_owner, rcol, dR, h, "R copy degree out of range");

    std::vector<int> blocks_of_pair(static_cast<std::size_t>(g.g1) * g.g2, 0);
    for (const auto& blk : s.blocks) {
        req(static_cast<int>(blk.columns.size()) == h, "block size");
        ++blocks_of_pair[static_cast<std::size_t>(blk.a) * g.g2 + blk.b];
        for (int i : blk.columns) {
            req(pcol[i] == blk.p_copy && qcol[i] == blk.q_copy,
                "block column routed elsewhere");
            req(g.columns[i][0] == blk.a && g.columns[i][1] == blk.b,
                "block column owner");
        }
    }
    for (int a = 0; a < g.g1; ++a)
        for (int b = 0; b < g.g2; ++b)
            req(blocks_of_pair[static_cast<std::size_t>(a) * g.g2 + b] ==
                    pair_deg[static_cast<std::size_t>(a) * g.g2 + b] / h,
                "block count per pair");

    // Special columns of one E copy must share their seed R copy.
    for (int a = 0; a < g.g1; ++a) {
        for (int i : s.special_columns[a]) {
            req(g.columns[i][2] == s.chosen_c[a], "special symbol");
            req(s.p_kind[pcol[i]] == TripartiteSplit::kSpecialCopy, "E copy kind");
            req(s.r_kind[rcol[i]] == TripartiteSplit::kSpecialCopy, "seed kind");
            for (int j : s.special_columns[a])
                if (pcol[i] == pcol[j]) req(rcol[i] == rcol[j], "E copy split across seeds");
        }
    }
}

int BasicHypergraph::max_degree() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& e : edges)
        for (int v : e) ++deg[v];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

BasicHypergraph as_basic(const WeightedHypergraph& h) {
    std::vector<VertexId> ids;
    for (const auto& v : h.vertices()) ids.push_back(v.id);
    std::sort(ids.begin(), ids.end());
    BasicHypergraph b;
    b.vertex_count = static_cast<int>(ids.size());
    for (const auto& e : h.edges()) {
        std::vector<int> edge;
        for (VertexId v : e)
            edge.push_back(static_cast<int>(
                std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
        b.edges.push_back(std::move(edge));
    }
    return b;
}

BasicHypergraph split_as_hypergraph(const TripartiteSplit& s) {
    BasicHypergraph b;
    b.vertex_count = s.p_count() + s.q_count() + s.r_count();
    const int qoff = s.p_count();
    const int roff = qoff + s.q_count();
    for (const auto& [p, q, r] : s.columns)
        b.edges.push_back({p, qoff + q, roff + r});
    return b;
}

namespace {

// Chordless cycle scan over the vertex-edge incidence graph. The hypergraph
// is balanced exactly when no chordless incidence cycle has length 2 mod 4.
bool no_bad_incidence_cycle(const BasicHypergraph& h, long long budget) {
    const int base = h.vertex_count;
    int nodes = base;
    std::vector<std::vector<int>> adj(base);
    for (const auto& e : h.edges) {
        if (e.size() < 2) continue;
        int en = nodes++;
        adj.emplace_back();
        for (int v : e) {
            adj[v].push_back(en);
            adj[en].push_back(v);
        }
    }
    std::vector<std::vector<char>> mat(nodes, std::vector<char>(nodes, 0));
    for (int u = 0; u < nodes; ++u)
        for (int v : adj[u]) mat[u][v] = 1;

    std::vector<int> path;
    std::vector<char> on_path(nodes, 0);
    long long spent = 0;
    bool bad = false;

    auto dfs = [&](auto&& self, int s) -> void {
        if (bad) return;
        int last = path.back();
        for (int u : adj[last]) {
            if (u <= s || on_path[u]) continue;
            if (++spent > budget)
                throw unsupported_error(
                    "odd-cycle balance check exceeded its budget");
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i)
                chord = mat[u][path[i]];
            if (chord) continue;
            // Adjacency to the start only closes a cycle once the path has a
            // second node; at length one it is the first cycle edge.
            if (path.size() >= 2 && mat[u][s]) {
                if (path[1] < u && (path.size() + 1) % 4 == 2) {
                    bad = true;
                    return;
                }
                continue;
            }
            path.push_back(u);
            on_path[u] = 1;
            self(self, s);
            on_path[u] = 0;
            path.pop_back();
            if (bad) return;
        }
    };

    for (int s = 0; s < nodes && !bad; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        dfs(dfs, s);
        on_path[s] = 0;
    }
    return !bad;
}

bool all_induced_two_colorable(const BasicHypergraph& h, int cap) {
    if (h.vertex_count > cap)
        throw unsupported_error(
            "2-coloring balance check supports at most " + std::to_string(cap) +
            " vertices");
    const int v = h.vertex_count;
    std::vector<std::uint64_t> masks;
    for (const auto& e : h.edges) {
        std::uint64_t m = 0;
        for (int x : e) m |= std::uint64_t{1} << x;
        masks.push_back(m);
    }
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << v); ++sub) {
        std::vector<std::uint64_t> rel;
        for (std::uint64_t m : masks)
            if (std::popcount(m & sub) >= 2) rel.push_back(m & sub);
        if (rel.empty()) continue;
        std::uint64_t rest = sub & (sub - 1);  // lowest vertex pinned to color 0
        bool ok = false;
        for (std::uint64_t c = rest;; c = (c - 1) & rest) {
            bool mono = false;
            for (std::uint64_t m : rel)
                if ((m & c) == m || (m & c) == 0) {
                    mono = true;
                    break;
                }
            if (!mono) {
                ok = true;
                break;
            }
            if (c == 0) break;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool is_balanced_hypergraph(const BasicHypergraph& h,
                            const BalanceCheckOptions& opts) {
    if (opts.mode == BalanceCheckMode::OddCycles)
        return no_bad_incidence_cycle(h, opts.node_budget);
    return all_induced_two_colorable(h, opts.two_coloring_vertex_cap);
}

std::vector<std::vector<int>> decompose_into_matchings(const BasicHypergraph& h,
                                                       int delta,
                                                       long long node_budget) {
    if (delta < 1) throw precondition_error("delta must be positive");
    if (h.max_degree() > delta)
        throw precondition_error("maximum degree exceeds delta");
    const int m = static_cast<int>(h.edges.size());

    std::vector<int> deg(h.vertex_count, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[v];
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<long long> pressure(m, 0);
    for (int i = 0; i < m; ++i)
        for (int v : h.edges[i]) pressure[i] += deg[v];
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return pressure[x] > pressure[y];
    });

    std::vector<std::vector<char>> occ(
        delta, std::vector<char>(h.vertex_count, 0));
    std::vector<int> assign(m, -1);
    long long nodes = 0;

    auto dfs = [&](auto&& self, int depth, int used) -> bool {
        if (depth == m) return true;
        int e = order[depth];
        int limit = std::min(used + 1, delta);
        for (int c = 0; c < limit; ++c) {
            if (++nodes > node_budget)
                throw budget_error("matching decomposition exceeded its budget");
            bool free = true;
            for (int v : h.edges[e])
                if (occ[c][v]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int v : h.edges[e]) occ[c][v] = 1;
            assign[e] = c;
            if (self(self, depth + 1, std::max(used, c + 1))) return true;
            for (int v : h.edges[e]) occ[c][v] = 0;
            assign[e] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0, 0))
        throw precondition_error(
            "hyperedges admit no partition into delta matchings; hypergraph "
            "is not balanced with this maximum degree");

    std::vector<std::vector<int>> out(delta);
    for (int e = 0; e < m; ++e) out[assign[e]].push_back(e);
    return out;
}

std::vector<std::vector<int>> equalize_hypergraph_matchings(
    const BasicHypergraph& h, std::vector<std::vector<int>> matchings) {
    const int k = static_cast<int>(matchings.size());
    if (k == 0) return matchings;

    auto sizes = [&] {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = static_cast<int>(matchings[i].size());
        return s;
    };

    for (;;) {
        auto sz = sizes();
        int big = static_cast<int>(std::max_element(sz.begin(), sz.end()) -
                                   sz.begin());
        int small = static_cast<int>(std::min_element(sz.begin(), sz.end()) -
                                     sz.begin());
        if (sz[big] - sz[small] <= 1) break;

        // Union of the two matchings: per vertex at most one edge of each, so
        // components are alternating paths or even cycles; a path with one
        // more big-side edge swaps to shrink the gap.
        std::vector<int> big_at(h.vertex_count, -1), small_at(h.vertex_count, -1);
        for (int e : matchings[big])
            for (int v : h.edges[e]) big_at[v] = e;
        for (int e : matchings[small])
            for (int v : h.edges[e]) small_at[v] = e;

        std::vector<char> in_big(h.edges.size(), 0), seen(h.edges.size(), 0);
        for (int e : matchings[big]) in_big[e] = 1;

        std::vector<int> union_edges = matchings[big];
        union_edges.insert(union_edges.end(), matchings[small].begin(),
                           matchings[small].end());
        std::sort(union_edges.begin(), union_edges.end());

        bool swapped = false;
        for (int e0 : union_edges) {
            if (seen[e0]) continue;
            std::vector<int> comp, stack{e0};
            seen[e0] = 1;
            int excess = 0;
            while (!stack.empty()) {
                int e = stack.back();
                stack.pop_back();
                comp.push_back(e);
                excess += in_big[e] ? 1 : -1;
                for (int v : h.edges[e])
                    for (int f : {big_at[v], small_at[v]})
                        if (f >= 0 && !seen[f]) {
                            seen[f] = 1;
                            stack.push_back(f);
                        }
            }
            if (excess != 1) continue;
            std::vector<char> in_comp(h.edges.size(), 0);
            for (int e : comp) in_comp[e] = 1;
            std::vector<int> nb, ns;
            for (int e : matchings[big])
                (in_comp[e] ? ns : nb).push_back(e);
            for (int e : matchings[small])
                (in_comp[e] ? nb : ns).push_back(e);
            matchings[big] = std::move(nb);
            matchings[small] = std::move(ns);
            swapped = true;
            break;
        }
        if (!swapped)
            throw precondition_error(
                "matching equalization found no component with unit excess");
    }
    return matchings;
}

SymbolVector extend_3qi_constrained(const SymbolVector& x1,
                                    const SymbolVector& x2,
                                    const SymbolVector& x3, int h) {
    if (h < 1) throw precondition_error("h must be positive");
    if (!are_pairwise_balanced(x1, x2) || !are_pairwise_balanced(x1, x3) ||
        !are_pairwise_balanced(x2, x3))
        throw precondition_error("vectors must be mutually pairwise balanced");
    if (!are_qualitatively_independent(x1, x2, x3))
        throw precondition_error(
            "vectors must be 3-qualitatively independent");
    const int n = x1.size();
    const int g1 = x1.alphabet(), g2 = x2.alphabet(), g3 = x3.alphabet();
    const int cap12 = n / (g1 * g2), cap13 = n / (g1 * g3);
    if (h > std::min(cap12, cap13))
        throw precondition_error(
            "h exceeds min(floor(n/(g1*g2)), floor(n/(g1*g3)))");
    if (h >= 3 && cap12 % h != 0)
        throw precondition_error(
            "floor(n/(g1*g2)) must be divisible by h for h >= 3");

    auto split = split_tripartite(build_tripartite(x1, x2, x3), h);
    auto basic = split_as_hypergraph(split);
    auto matchings = equalize_hypergraph_matchings(
        basic, decompose_into_matchings(basic, h));

    std::vector<int> symbols(n, -1);
    for (int c = 0; c < h; ++c)
        for (int i : matchings[c]) symbols[i] = c;
    SymbolVector y(symbols, h);

    assert(is_balanced(y));
    assert(are_qualitatively_independent(x1, x2, y));
    assert(are_pairwise_balanced(x1, y));
    assert(are_pairwise_balanced(x2, y));
    assert(are_pairwise_balanced(x3, y));
    return y;
}

}  // namespace hyperca
