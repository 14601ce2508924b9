#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hyperca/types.hpp"

namespace hyperca {

// Extension of a 3-qualitatively-independent, mutually pairwise balanced
// triple (x1,x2,x3) by a fourth row y over Z_h so that (x1,x2,y) becomes
// 3-qualitatively independent while y stays balanced and pairwise balanced
// with all three inputs. The columns are treated as hyperedges of a
// tripartite 3-uniform hypergraph on the symbol classes; a structured
// degree-capped split produces a balanced hypergraph of maximum degree h,
// which decomposes into h matchings; y reads off the matching index.

/// Tripartite 3-uniform hypergraph over the symbol classes of three rows;
/// hyperedge i joins classes x1(i), x2(i), x3(i).
struct IndexedTripartiteHypergraph {
    int g1 = 0, g2 = 0, g3 = 0;
    std::vector<std::array<int, 3>> columns;  // column -> (a, b, c)

    int size() const { return static_cast<int>(columns.size()); }
};

IndexedTripartiteHypergraph build_tripartite(const SymbolVector& x1,
                                             const SymbolVector& x2,
                                             const SymbolVector& x3);

/// Structured split of the index hypergraph. Every class vertex of degree d
/// becomes floor(d/h) copies of degree h plus at most one lighter copy.
/// Non-special columns of each class pair (a,b) are grouped into blocks of h
/// parallel hyperedges between one P copy and one Q copy; when a pair count
/// is s*h+1 a special column with x3 = c(a) is set aside, special columns
/// are grouped into E copies on the P side and F copies on the Q side, and
/// each E copy is routed into a single seeded R copy.
struct TripartiteSplit {
    int cap = 1;  // h
    int g1 = 0, g2 = 0, g3 = 0;
    std::vector<std::array<int, 3>> columns;  // column -> (P, Q, R) copy ids
    std::vector<int> p_owner, q_owner, r_owner;  // copy -> original class
    enum : std::uint8_t { kBlockCopy = 0, kSpecialCopy = 1, kFillCopy = 2 };
    std::vector<std::uint8_t> p_kind, q_kind, r_kind;

    struct Block {
        int a, b;
        int p_copy, q_copy;
        std::vector<int> columns;  // exactly h parallel hyperedges
    };
    std::vector<Block> blocks;
    std::vector<std::vector<int>> special_columns;  // per left class a
    std::vector<int> chosen_c;                      // per left class a

    int p_count() const { return static_cast<int>(p_owner.size()); }
    int q_count() const { return static_cast<int>(q_owner.size()); }
    int r_count() const { return static_cast<int>(r_owner.size()); }
};

/// Requires d(P_a Q_b) mod h in {0,1} for every pair, which follows from
/// pairwise balance plus floor(n/(g1*g2)) = 0 mod h for h >= 3, and
/// h <= min(floor(n/(g1*g2)), floor(n/(g1*g3))) with the triple
/// 3-qualitatively independent (supplies the special columns).
TripartiteSplit split_tripartite(const IndexedTripartiteHypergraph& g, int h);

/// Structural audit of a split: degree caps, copy cardinality profile,
/// block routing and special-column routing. Throws on violation.
void validate_split(const IndexedTripartiteHypergraph& g,
                    const TripartiteSplit& s);

/// Plain hypergraph on integer vertices 0..vertex_count-1, used by the
/// balancedness checks and the matching decomposition.
struct BasicHypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;

    int max_degree() const;
};

BasicHypergraph as_basic(const WeightedHypergraph& h);
BasicHypergraph split_as_hypergraph(const TripartiteSplit& s);

enum class BalanceCheckMode { OddCycles, TwoColoring };

struct BalanceCheckOptions {
    BalanceCheckMode mode = BalanceCheckMode::OddCycles;
    long long node_budget = 20'000'000;  // odd-cycle path extensions
    int two_coloring_vertex_cap = 14;
};

/// Berge balancedness: every odd cycle (v1,E1,...,vk,Ek,v1), k odd, has some
/// cycle edge E_i containing three of the cycle vertices. Equivalently the
/// vertex-edge incidence graph has no chordless cycle of length 2 mod 4, and
/// equivalently every induced subhypergraph is 2-colorable. Both checks are
/// exact; they throw unsupported_error beyond their size budget.
bool is_balanced_hypergraph(const BasicHypergraph& h,
                            const BalanceCheckOptions& opts = {});

/// Partitions the hyperedges into `delta` matchings (possible for balanced
/// hypergraphs of maximum degree <= delta). Complete backtracking search,
/// most-constrained edges first; exhaustion means the precondition failed.
std::vector<std::vector<int>> decompose_into_matchings(
    const BasicHypergraph& h, int delta, long long node_budget = 50'000'000);

/// Alternating component swaps until all matching sizes are floor or ceil of
/// the average. Designed for split hypergraphs, whose two-matching unions
/// decompose into paths and even cycles.
std::vector<std::vector<int>> equalize_hypergraph_matchings(
    const BasicHypergraph& h, std::vector<std::vector<int>> matchings);

/// Full pipeline: preconditions are checked, the split is built and
/// decomposed, matchings are equalized, and y(i) is the matching of column i.
SymbolVector extend_3qi_constrained(const SymbolVector& x1,
                                    const SymbolVector& x2,
                                    const SymbolVector& x3, int h);

}  // namespace hyperca
