#pragma once

// Shared randomized instance builders for the test suites. Everything is
// seeded explicitly so failures replay.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "hyperca/core.hpp"
#include "hyperca/extension.hpp"
#include "hyperca/types.hpp"

namespace testgen {

using hyperca::SymbolVector;
using hyperca::VertexId;
using hyperca::WeightedHypergraph;

inline int draw(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline SymbolVector random_balanced_row(std::mt19937& rng, int n, int g) {
    std::vector<int> symbols;
    for (int s = 0; s < g; ++s)
        for (int c = 0; c < n / g; ++c) symbols.push_back(s);
    std::vector<int> extras(g);
    std::iota(extras.begin(), extras.end(), 0);
    std::shuffle(extras.begin(), extras.end(), rng);
    for (int i = 0; i < n % g; ++i) symbols.push_back(extras[i]);
    std::shuffle(symbols.begin(), symbols.end(), rng);
    return SymbolVector(std::move(symbols), g);
}

/// Applies one random column permutation to every row, then a random symbol
/// relabeling per row. Both preserve balance, pairwise balance, and
/// qualitative independence.
inline void scramble(std::mt19937& rng, std::vector<SymbolVector*> rows) {
    if (rows.empty()) return;
    int n = rows[0]->size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (SymbolVector* row : rows) {
        int g = row->alphabet();
        std::vector<int> relabel(g);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<int> symbols(n);
        for (int i = 0; i < n; ++i) symbols[i] = relabel[(*row)[perm[i]]];
        *row = SymbolVector(std::move(symbols), g);
    }
}

/// Pairwise balanced pair, built with the row extender and then scrambled;
/// callers re-check the predicates so the generator cannot mask a bug.
inline std::pair<SymbolVector, SymbolVector> random_pairwise_balanced(
    std::mt19937& rng, int n, int g1, int g2) {
    SymbolVector x1 = random_balanced_row(rng, n, g1);
    SymbolVector x2 = hyperca::extend_balanced(x1, g2);
    scramble(rng, {&x1, &x2});
    if (!hyperca::are_pairwise_balanced(x1, x2))
        throw std::logic_error("generator produced an unbalanced pair");
    return {std::move(x1), std::move(x2)};
}

/// Mutually pairwise balanced 3-QI triple (requires g1*g2*g3 <= n).
inline std::vector<SymbolVector> random_3qi_triple(std::mt19937& rng, int n,
                                                   int g1, int g2, int g3) {
    SymbolVector x1 = random_balanced_row(rng, n, g1);
    SymbolVector x2 = hyperca::extend_balanced(x1, g2);
    SymbolVector x3 = hyperca::extend_3qi(x1, x2, g3);
    scramble(rng, {&x1, &x2, &x3});
    if (!hyperca::are_qualitatively_independent(x1, x2, x3))
        throw std::logic_error("generator produced a dependent triple");
    return {std::move(x1), std::move(x2), std::move(x3)};
}

/// Alpha-acyclic 3-uniform hypergraph grown edge by edge: every new edge
/// shares 0, 1, or 2 vertices with one previously added edge and brings
/// fresh vertices for the rest, which keeps a join tree by construction.
inline WeightedHypergraph random_acyclic(std::mt19937& rng, int max_vertices,
                                         int weight_lo, int weight_hi) {
    WeightedHypergraph h;
    std::vector<std::vector<VertexId>> edges;
    VertexId next_id = 1;
    auto fresh = [&] {
        VertexId v = next_id++;
        h.add_vertex(v, draw(rng, weight_lo, weight_hi));
        return v;
    };
    edges.push_back({fresh(), fresh(), fresh()});
    h.add_edge(edges.back());
    while (next_id + 1 <= max_vertices) {
        int shared = draw(rng, 0, 2);
        if (next_id - 1 + (3 - shared) > max_vertices) break;
        const auto& host = edges[static_cast<size_t>(
            draw(rng, 0, static_cast<int>(edges.size()) - 1))];
        std::vector<VertexId> picks = host;
        std::shuffle(picks.begin(), picks.end(), rng);
        std::vector<VertexId> e(picks.begin(), picks.begin() + shared);
        while (e.size() < 3) e.push_back(fresh());
        h.add_edge(e);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return h;
}

/// Loose cycle of length k: joints 1..k, privates k+1..2k, edge i joins
/// joint i, private k+i, joint i+1 (wrapping).
inline WeightedHypergraph loose_cycle(std::mt19937& rng, int k, int weight_lo,
                                      int weight_hi) {
    WeightedHypergraph h;
    for (int i = 1; i <= 2 * k; ++i)
        h.add_vertex(i, draw(rng, weight_lo, weight_hi));
    for (int i = 1; i <= k; ++i) h.add_edge({i, k + i, i == k ? 1 : i + 1});
    return h;
}

/// Three-edge cycle on five vertices with weights that satisfy the
/// construction conditions: E1={0,1,2} attains PW, g0 = 0 mod g3 when
/// g3 >= 3, g3 <= min(g0, max(g1,g2)), g3*g4 <= g1*g2.
inline WeightedHypergraph random_cycle3(std::mt19937& rng, int weight_cap) {
    for (;;) {
        int g1 = draw(rng, 1, weight_cap);
        int g2 = draw(rng, 1, weight_cap);
        int g3 = draw(rng, 1, std::min(weight_cap, std::max(g1, g2)));
        int g0 = g3 * draw(rng, 1, std::max(1, weight_cap / g3));
        if (g0 < g3) continue;
        int g4 = draw(rng, 1, std::max(1, (g1 * g2) / g3));
        if (g3 * g4 > g1 * g2) continue;
        WeightedHypergraph h;
        int weights[5] = {g0, g1, g2, g3, g4};
        for (int i = 0; i < 5; ++i) h.add_vertex(i, weights[i]);
        h.add_edge({0, 1, 2});
        h.add_edge({1, 2, 3});
        h.add_edge({3, 4, 0});
        return h;
    }
}

}  // namespace testgen
