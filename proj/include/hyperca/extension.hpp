#pragma once

#include "hyperca/types.hpp"

namespace hyperca {

// Column-extension machinery. Given balanced rows x1, x2 of length n, a new
// row y over Z_h is produced by viewing the columns as edges of a bipartite
// multigraph on the symbol classes of x1 and x2, splitting high-degree class
// vertices into bounded-degree copies, properly edge-coloring the split graph
// with h colors, equalizing color-class sizes, and reading y(i) off the color
// of column i.

/// Bipartite multigraph over the symbol classes of two rows; edge i joins
/// class x1(i) on the left to class x2(i) on the right.
struct IndexedBipartiteMultigraph {
    int left_classes = 0;   // g1
    int right_classes = 0;  // g2
    std::vector<std::pair<int, int>> columns;  // column -> (a, b)
    std::vector<std::vector<int>> left_cols;   // class a -> ascending columns
    std::vector<std::vector<int>> right_cols;  // class b -> ascending columns

    int size() const { return static_cast<int>(columns.size()); }
    int left_degree(int a) const {
        return static_cast<int>(left_cols[static_cast<size_t>(a)].size());
    }
    int right_degree(int b) const {
        return static_cast<int>(right_cols[static_cast<size_t>(b)].size());
    }
};

IndexedBipartiteMultigraph build_index_graph(const SymbolVector& x1,
                                             const SymbolVector& x2);

/// Degree-capped split of the index graph: every class vertex of degree d
/// becomes floor(d/h) copies of degree exactly h plus, when h does not
/// divide d, one copy of degree d mod h.
struct SplitGraph {
    int cap = 1;  // h
    std::vector<std::pair<int, int>> columns;  // column -> (left, right) copy
    std::vector<int> left_owner;               // copy -> original class
    std::vector<int> right_owner;
    // Designated parallel blocks (qualitative-independence mode only):
    // per ordered pair (a,b), the h lowest columns joining classes a and b,
    // all routed between one left copy and one right copy.
    std::vector<std::vector<int>> designated_columns;  // index a*g2+b

    int left_count() const { return static_cast<int>(left_owner.size()); }
    int right_count() const { return static_cast<int>(right_owner.size()); }
    std::vector<int> left_degrees() const;
    std::vector<int> right_degrees() const;
};

/// Plain split: per-class chunking of columns in ascending order.
SplitGraph split_degree_capped(const IndexedBipartiteMultigraph& g, int h);

/// Split with designated blocks. Requires every class pair (a,b) to carry at
/// least h columns (holds when the rows are pairwise balanced and
/// g1*g2*h <= n); the first h columns of each pair become parallel edges
/// between one full left copy and one full right copy.
SplitGraph split_with_designated_blocks(const IndexedBipartiteMultigraph& g,
                                        int h);

/// Partition of the columns into h matchings of the split graph.
struct MatchingPartition {
    int classes = 1;            // h
    std::vector<int> color_of;  // per column

    std::vector<int> sizes() const {
        std::vector<int> s(static_cast<size_t>(classes), 0);
        for (int c : color_of) ++s[static_cast<size_t>(c)];
        return s;
    }
    std::vector<int> matching(int c) const {
        std::vector<int> cols;
        for (size_t i = 0; i < color_of.size(); ++i)
            if (color_of[i] == c) cols.push_back(static_cast<int>(i));
        return cols;
    }
};

/// Proper edge coloring with h colors (exists since max degree <= h and the
/// split graph is bipartite). Incremental insertion with alternating-path
/// recoloring; deterministic. Parallel edges always receive distinct colors.
MatchingPartition edge_color_bipartite(const SplitGraph& sg, int h);

/// Repeated alternating-path swaps until every color class has size
/// floor(n/h) or ceil(n/h). Swaps never touch interior vertices' color
/// incidence, so the degree bounds and designated-block coverage survive.
MatchingPartition equalize_matchings(const SplitGraph& sg,
                                     MatchingPartition m);

/// y(i) = color of column i.
SymbolVector project_matchings(const MatchingPartition& m);

/// x balanced -> y over Z_h balanced and pairwise balanced with x.
SymbolVector extend_balanced(const SymbolVector& x, int h);

/// x1, x2 balanced -> y over Z_h balanced and pairwise balanced with both.
SymbolVector extend_pairwise_balanced_pair(const SymbolVector& x1,
                                           const SymbolVector& x2, int h);

/// (x1,x2) pairwise balanced and g1*g2*h <= n -> y over Z_h such that
/// (x1,x2,y) are 3-qualitatively independent and y is balanced and pairwise
/// balanced with x1 and x2.
SymbolVector extend_3qi(const SymbolVector& x1, const SymbolVector& x2,
                        int h);

}  // namespace hyperca
