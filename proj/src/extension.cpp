#include "hyperca/extension.hpp"

#include <cassert>

#include "hyperca/core.hpp"

namespace hyperca {

IndexedBipartiteMultigraph build_index_graph(const SymbolVector& x1,
                                             const SymbolVector& x2) {
    if (x1.size() != x2.size())
        throw precondition_error("symbol vectors differ in length");
    IndexedBipartiteMultigraph g;
    g.left_classes = x1.alphabet();
    g.right_classes = x2.alphabet();
    g.left_cols.resize(static_cast<size_t>(g.left_classes));
    g.right_cols.resize(static_cast<size_t>(g.right_classes));
    for (int i = 0; i < x1.size(); ++i) {
        g.columns.emplace_back(x1[i], x2[i]);
        g.left_cols[static_cast<size_t>(x1[i])].push_back(i);
        g.right_cols[static_cast<size_t>(x2[i])].push_back(i);
    }
    return g;
}

std::vector<int> SplitGraph::left_degrees() const {
    std::vector<int> d(left_owner.size(), 0);
    for (const auto& [l, r] : columns) ++d[static_cast<size_t>(l)];
    return d;
}

std::vector<int> SplitGraph::right_degrees() const {
    std::vector<int> d(right_owner.size(), 0);
    for (const auto& [l, r] : columns) ++d[static_cast<size_t>(r)];
    return d;
}

namespace {

// Assigns the columns of one class to ceil(d/h) copies by chunking in the
// given order: all copies full except possibly the last.
void chunk_into_copies(const std::vector<int>& cols, int h, int owner,
                       std::vector<int>& owner_of,
                       std::vector<int>& copy_of_column) {
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i % static_cast<size_t>(h) == 0) owner_of.push_back(owner);
        copy_of_column[static_cast<size_t>(cols[i])] =
            static_cast<int>(owner_of.size()) - 1;
    }
}

}  // namespace

SplitGraph split_degree_capped(const IndexedBipartiteMultigraph& g, int h) {
    if (h < 1) throw precondition_error("split cap must be >= 1");
    SplitGraph sg;
    sg.cap = h;
    std::vector<int> lcopy(g.columns.size(), -1), rcopy(g.columns.size(), -1);
    for (int a = 0; a < g.left_classes; ++a)
        chunk_into_copies(g.left_cols[static_cast<size_t>(a)], h, a,
                          sg.left_owner, lcopy);
    for (int b = 0; b < g.right_classes; ++b)
        chunk_into_copies(g.right_cols[static_cast<size_t>(b)], h, b,
                          sg.right_owner, rcopy);
    for (size_t i = 0; i < g.columns.size(); ++i)
        sg.columns.emplace_back(lcopy[i], rcopy[i]);
    return sg;
}

SplitGraph split_with_designated_blocks(const IndexedBipartiteMultigraph& g,
                                        int h) {
    if (h < 1) throw precondition_error("split cap must be >= 1");
    const int g1 = g.left_classes, g2 = g.right_classes;
    std::vector<std::vector<int>> pair_cols(static_cast<size_t>(g1) * g2);
    for (size_t i = 0; i < g.columns.size(); ++i) {
        auto [a, b] = g.columns[i];
        pair_cols[static_cast<size_t>(a) * g2 + b].push_back(
            static_cast<int>(i));
    }
    for (const auto& pc : pair_cols)
        if (static_cast<int>(pc.size()) < h)
            throw precondition_error(
                "designated split needs >= h columns per class pair");

    SplitGraph sg;
    sg.cap = h;
    sg.designated_columns.resize(pair_cols.size());
    std::vector<int> lcopy(g.columns.size(), -1), rcopy(g.columns.size(), -1);

    // Left side: per class a, one full designated copy per b, then leftovers
    // chunked into extra copies.
    std::vector<int> left_block_copy(pair_cols.size(), -1);
    std::vector<int> right_block_copy(pair_cols.size(), -1);
    for (int a = 0; a < g1; ++a) {
        std::vector<int> leftovers;
        for (int b = 0; b < g2; ++b) {
            const auto& pc = pair_cols[static_cast<size_t>(a) * g2 + b];
            sg.left_owner.push_back(a);
            int copy = static_cast<int>(sg.left_owner.size()) - 1;
            left_block_copy[static_cast<size_t>(a) * g2 + b] = copy;
            for (int j = 0; j < h; ++j) {
                lcopy[static_cast<size_t>(pc[static_cast<size_t>(j)])] = copy;
                sg.designated_columns[static_cast<size_t>(a) * g2 + b]
                    .push_back(pc[static_cast<size_t>(j)]);
            }
            for (size_t j = static_cast<size_t>(h); j < pc.size(); ++j)
                leftovers.push_back(pc[j]);
        }
        std::sort(leftovers.begin(), leftovers.end());
        chunk_into_copies(leftovers, h, a, sg.left_owner, lcopy);
    }
    for (int b = 0; b < g2; ++b) {
        std::vector<int> leftovers;
        for (int a = 0; a < g1; ++a) {
            const auto& pc = pair_cols[static_cast<size_t>(a) * g2 + b];
            sg.right_owner.push_back(b);
            int copy = static_cast<int>(sg.right_owner.size()) - 1;
            right_block_copy[static_cast<size_t>(a) * g2 + b] = copy;
            for (int j = 0; j < h; ++j)
                rcopy[static_cast<size_t>(pc[static_cast<size_t>(j)])] = copy;
            for (size_t j = static_cast<size_t>(h); j < pc.size(); ++j)
                leftovers.push_back(pc[j]);
        }
        std::sort(leftovers.begin(), leftovers.end());
        chunk_into_copies(leftovers, h, b, sg.right_owner, rcopy);
    }
    (void)left_block_copy;
    (void)right_block_copy;
    for (size_t i = 0; i < g.columns.size(); ++i)
        sg.columns.emplace_back(lcopy[i], rcopy[i]);
    return sg;
}

namespace {

// Slot tables: at[copy*h + color] = column index or -1.
struct ColorTables {
    int h;
    std::vector<int> left_at, right_at;

    ColorTables(const SplitGraph& sg, int h_)
        : h(h_),
          left_at(static_cast<size_t>(sg.left_count()) * h_, -1),
          right_at(static_cast<size_t>(sg.right_count()) * h_, -1) {}

    int& lslot(int copy, int c) {
        return left_at[static_cast<size_t>(copy) * h + c];
    }
    int& rslot(int copy, int c) {
        return right_at[static_cast<size_t>(copy) * h + c];
    }
    int lowest_free_left(int copy) const {
        for (int c = 0; c < h; ++c)
            if (left_at[static_cast<size_t>(copy) * h + c] < 0) return c;
        return -1;
    }
    int lowest_free_right(int copy) const {
        for (int c = 0; c < h; ++c)
            if (right_at[static_cast<size_t>(copy) * h + c] < 0) return c;
        return -1;
    }
};

}  // namespace

MatchingPartition edge_color_bipartite(const SplitGraph& sg, int h) {
    for (int d : sg.left_degrees())
        if (d > h) throw precondition_error("split graph degree exceeds cap");
    for (int d : sg.right_degrees())
        if (d > h) throw precondition_error("split graph degree exceeds cap");

    MatchingPartition m;
    m.classes = h;
    m.color_of.assign(sg.columns.size(), -1);
    ColorTables t(sg, h);

    for (size_t i = 0; i < sg.columns.size(); ++i) {
        auto [u, v] = sg.columns[i];
        int alpha = t.lowest_free_left(u);
        int beta = t.lowest_free_right(v);
        assert(alpha >= 0 && beta >= 0);
        if (t.rslot(v, alpha) < 0) {
            // alpha free at both endpoints
        } else if (t.lslot(u, beta) >= 0) {
            // Swap alpha and beta along the alternating path that starts at
            // v with its alpha edge. The path cannot reach u, so afterwards
            // alpha is free at both u and v.
            std::vector<int> path;
            int node = v;
            bool on_right = true;
            int want = alpha;
            while (true) {
                int e = on_right ? t.rslot(node, want) : t.lslot(node, want);
                if (e < 0) break;
                path.push_back(e);
                node = on_right ? sg.columns[static_cast<size_t>(e)].first
                                : sg.columns[static_cast<size_t>(e)].second;
                on_right = !on_right;
                want = (want == alpha) ? beta : alpha;
            }
            for (int e : path) {
                auto [le, re] = sg.columns[static_cast<size_t>(e)];
                int c = m.color_of[static_cast<size_t>(e)];
                t.lslot(le, c) = -1;
                t.rslot(re, c) = -1;
            }
            for (int e : path) {
                auto [le, re] = sg.columns[static_cast<size_t>(e)];
                int c = m.color_of[static_cast<size_t>(e)];
                int nc = (c == alpha) ? beta : alpha;
                m.color_of[static_cast<size_t>(e)] = nc;
                assert(t.lslot(le, nc) < 0 && t.rslot(re, nc) < 0);
                t.lslot(le, nc) = e;
                t.rslot(re, nc) = e;
            }
            assert(t.lslot(u, alpha) < 0 && t.rslot(v, alpha) < 0);
        } else {
            alpha = beta;  // beta free at both endpoints
        }
        m.color_of[i] = alpha;
        t.lslot(u, alpha) = static_cast<int>(i);
        t.rslot(v, alpha) = static_cast<int>(i);
    }
    return m;
}

namespace {

// Connected components of the union of two matchings are alternating paths
// or even cycles; swapping a component with one more L-edge than S-edges
// shrinks the size gap by two.
struct UnionWalker {
    const SplitGraph& sg;
    const MatchingPartition& m;
    int cl, cs;
    std::vector<int> l_at_left, l_at_right, s_at_left, s_at_right;

    UnionWalker(const SplitGraph& sg_, const MatchingPartition& m_, int cl_,
                int cs_)
        : sg(sg_),
          m(m_),
          cl(cl_),
          cs(cs_),
          l_at_left(static_cast<size_t>(sg_.left_count()), -1),
          l_at_right(static_cast<size_t>(sg_.right_count()), -1),
          s_at_left(static_cast<size_t>(sg_.left_count()), -1),
          s_at_right(static_cast<size_t>(sg_.right_count()), -1) {
        for (size_t i = 0; i < sg.columns.size(); ++i) {
            int c = m.color_of[i];
            if (c != cl && c != cs) continue;
            auto [u, v] = sg.columns[i];
            auto& at_l = (c == cl) ? l_at_left : s_at_left;
            auto& at_r = (c == cl) ? l_at_right : s_at_right;
            at_l[static_cast<size_t>(u)] = static_cast<int>(i);
            at_r[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }

    // Component of edge e0 in the union; returns edges and the L-minus-S
    // excess.
    std::pair<std::vector<int>, int> component(int e0,
                                               std::vector<char>& seen) {
        std::vector<int> stack{e0}, edges;
        int excess = 0;
        seen[static_cast<size_t>(e0)] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            edges.push_back(e);
            excess += (m.color_of[static_cast<size_t>(e)] == cl) ? 1 : -1;
            auto [u, v] = sg.columns[static_cast<size_t>(e)];
            for (int nb : {l_at_left[static_cast<size_t>(u)],
                           s_at_left[static_cast<size_t>(u)],
                           l_at_right[static_cast<size_t>(v)],
                           s_at_right[static_cast<size_t>(v)]}) {
                if (nb >= 0 && !seen[static_cast<size_t>(nb)]) {
                    seen[static_cast<size_t>(nb)] = 1;
                    stack.push_back(nb);
                }
            }
        }
        return {edges, excess};
    }
};

}  // namespace

MatchingPartition equalize_matchings(const SplitGraph& sg,
                                     MatchingPartition m) {
    const int h = m.classes;
    const int n = static_cast<int>(m.color_of.size());
    auto sizes = m.sizes();
    while (true) {
        int cl = 0, cs = 0;
        for (int c = 0; c < h; ++c) {
            if (sizes[static_cast<size_t>(c)] > sizes[static_cast<size_t>(cl)])
                cl = c;
            if (sizes[static_cast<size_t>(c)] < sizes[static_cast<size_t>(cs)])
                cs = c;
        }
        if (sizes[static_cast<size_t>(cl)] - sizes[static_cast<size_t>(cs)] <=
            1)
            break;
        UnionWalker walker(sg, m, cl, cs);
        std::vector<char> seen(m.color_of.size(), 0);
        bool swapped = false;
        for (int e = 0; e < n && !swapped; ++e) {
            if (seen[static_cast<size_t>(e)]) continue;
            int c = m.color_of[static_cast<size_t>(e)];
            if (c != cl && c != cs) continue;
            auto [edges, excess] = walker.component(e, seen);
            if (excess != 1) continue;
            for (int pe : edges)
                m.color_of[static_cast<size_t>(pe)] =
                    (m.color_of[static_cast<size_t>(pe)] == cl) ? cs : cl;
            --sizes[static_cast<size_t>(cl)];
            ++sizes[static_cast<size_t>(cs)];
            swapped = true;
        }
        assert(swapped && "some union component must carry the excess");
        if (!swapped) break;
    }
    return m;
}

SymbolVector project_matchings(const MatchingPartition& m) {
    return SymbolVector(m.color_of, m.classes);
}

SymbolVector extend_pairwise_balanced_pair(const SymbolVector& x1,
                                           const SymbolVector& x2, int h) {
    if (h < 1) throw precondition_error("extension alphabet must be >= 1");
    if (!is_balanced(x1) || !is_balanced(x2))
        throw precondition_error("extension inputs must be balanced");
    auto g = build_index_graph(x1, x2);
    auto sg = split_degree_capped(g, h);
    auto m = equalize_matchings(sg, edge_color_bipartite(sg, h));
    auto y = project_matchings(m);
    assert(is_balanced(y));
    assert(are_pairwise_balanced(x1, y));
    assert(are_pairwise_balanced(x2, y));
    return y;
}

SymbolVector extend_balanced(const SymbolVector& x, int h) {
    return extend_pairwise_balanced_pair(x, x, h);
}

SymbolVector extend_3qi(const SymbolVector& x1, const SymbolVector& x2,
                        int h) {
    if (h < 1) throw precondition_error("extension alphabet must be >= 1");
    if (!are_pairwise_balanced(x1, x2))
        throw precondition_error("extend_3qi needs pairwise balanced inputs");
    if (static_cast<long long>(x1.alphabet()) * x2.alphabet() * h > x1.size())
        throw precondition_error("extend_3qi needs g1*g2*h <= n");
    auto g = build_index_graph(x1, x2);
    auto sg = split_with_designated_blocks(g, h);
    auto m = equalize_matchings(sg, edge_color_bipartite(sg, h));
    auto y = project_matchings(m);
    assert(is_balanced(y));
    assert(are_pairwise_balanced(x1, y));
    assert(are_pairwise_balanced(x2, y));
    assert(are_qualitatively_independent(x1, x2, y));
    return y;
}

}  // namespace hyperca
