#include "hyperca/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

#include "hyperca/core.hpp"

namespace hyperca {

namespace {

SymbolVector cyclic_row(int n, int g) {
    std::vector<int> symbols(n);
    for (int i = 0; i < n; ++i) symbols[i] = i % g;
    return SymbolVector(std::move(symbols), g);
}

struct Search {
    int n = 0;
    int kk = 0;                          // active rows
    std::vector<int> alphabet;           // per active row
    std::vector<std::vector<int>> grid;  // [row][column]
    int prefix_len = 0;                  // fixed heaviest-row prefix columns
    int heavy_row = -1;

    struct TrackedEdge {
        std::vector<int> rows;   // member row indices, ascending
        std::vector<int> sizes;  // member alphabets, same order
        std::vector<char> covered;
        int uncovered = 0;
    };
    std::vector<TrackedEdge> edges;
    std::vector<std::vector<int>> finishing_here;  // edges by last member row
    std::vector<std::pair<int, int>> undo;         // (edge, tuple) marks

    long long budget = 0;
    long long nodes = 0;

    enum class Out { Found, None, Budget };

    // Column-major cell fill. `tight` tracks whether the column built so far
    // equals the previous one; tail columns must come lexicographically
    // non-decreasing, which is the canonical order under column permutation.
    Out fill(int col, int row, bool tight) {
        if (col == n) {
            for (const auto& e : edges)
                if (e.uncovered > 0) return Out::None;
            return Out::Found;
        }
        if (row == 0)
            for (const auto& e : edges)
                if (e.uncovered > n - col) return Out::None;

        int lo = 0, hi = alphabet[row] - 1;
        if (col < prefix_len && row == heavy_row) lo = hi = col;
        bool ordered = col > prefix_len;
        if (ordered && tight) lo = std::max(lo, grid[row][col - 1]);

        for (int s = lo; s <= hi; ++s) {
            if (++nodes > budget) return Out::Budget;
            grid[row][col] = s;

            // Edges whose last member row is this one are now complete in
            // this column; record the tuples they newly cover.
            std::size_t undo_base = undo.size();
            for (int ei : finishing_here[row]) {
                TrackedEdge& e = edges[ei];
                int tuple = 0;
                for (std::size_t m = 0; m < e.rows.size(); ++m)
                    tuple = tuple * e.sizes[m] + grid[e.rows[m]][col];
                if (!e.covered[tuple]) {
                    e.covered[tuple] = 1;
                    --e.uncovered;
                    undo.emplace_back(ei, tuple);
                }
            }

            bool still_tight =
                ordered ? (tight && s == grid[row][col - 1]) : false;
            Out out = row + 1 == kk ? fill(col + 1, 0, col + 1 > prefix_len)
                                    : fill(col, row + 1, still_tight);

            while (undo.size() > undo_base) {
                auto [ei, tuple] = undo.back();
                undo.pop_back();
                edges[ei].covered[tuple] = 0;
                ++edges[ei].uncovered;
            }
            if (out != Out::None) return out;
        }
        return Out::None;
    }
};

}  // namespace

OracleResult exists_ca_of_size(const WeightedHypergraph& h, int n,
                               const OracleOptions& options) {
    if (n < 1) throw input_error("array size must be >= 1");

    std::vector<VertexId> active;
    for (const auto& v : h.vertices())
        if (h.degree(v.id) > 0) active.push_back(v.id);
    std::sort(active.begin(), active.end());

    auto full_result = [&](const std::vector<std::vector<int>>* grid,
                           long long nodes) {
        std::map<VertexId, SymbolVector> rows;
        for (std::size_t r = 0; r < active.size(); ++r)
            rows.emplace(active[r],
                         SymbolVector(std::vector<int>((*grid)[r]),
                                      h.weight_of(active[r])));
        for (const auto& v : h.vertices())
            if (h.degree(v.id) == 0)
                rows.emplace(v.id, cyclic_row(n, v.weight));
        CoveringArray c(h, n, std::move(rows));
        assert(verify_covering_array(c).ok);
        return OracleResult{OracleStatus::Found, std::move(c), nodes};
    };

    if (active.empty()) {
        std::vector<std::vector<int>> empty;
        return full_result(&empty, 0);
    }

    Search s;
    s.n = n;
    s.kk = static_cast<int>(active.size());
    std::map<VertexId, int> row_of;
    for (int r = 0; r < s.kk; ++r) {
        s.alphabet.push_back(h.weight_of(active[r]));
        row_of[active[r]] = r;
    }
    s.grid.assign(s.kk, std::vector<int>(n, -1));

    int heavy = 0;
    for (int r = 1; r < s.kk; ++r)
        if (s.alphabet[r] > s.alphabet[heavy]) heavy = r;
    s.heavy_row = heavy;
    s.prefix_len = s.alphabet[heavy] <= n ? s.alphabet[heavy] : 0;

    s.finishing_here.assign(s.kk, {});
    for (const auto& e : h.edges()) {
        Search::TrackedEdge te;
        long long product = 1;
        for (VertexId v : e) {
            te.rows.push_back(row_of.at(v));
            product *= h.weight_of(v);
        }
        std::sort(te.rows.begin(), te.rows.end());
        for (int r : te.rows) te.sizes.push_back(s.alphabet[r]);
        if (product > std::numeric_limits<int>::max())
            throw unsupported_error("edge weight product too large to track");
        te.covered.assign(static_cast<std::size_t>(product), 0);
        te.uncovered = static_cast<int>(product);
        s.finishing_here[te.rows.back()].push_back(
            static_cast<int>(s.edges.size()));
        s.edges.push_back(std::move(te));
    }

    s.budget = options.node_budget;
    switch (s.fill(0, 0, false)) {
        case Search::Out::Found:
            return full_result(&s.grid, s.nodes);
        case Search::Out::Budget:
            return {OracleStatus::BudgetExceeded, std::nullopt, s.nodes};
        case Search::Out::None:
            return {OracleStatus::NoneExists, std::nullopt, s.nodes};
    }
    throw std::logic_error("unreachable");
}

MinCanResult min_can(const WeightedHypergraph& h,
                     const OracleOptions& options) {
    long long pw = product_weight(h);
    long long cap = 1;
    for (const auto& v : h.vertices()) {
        if (h.degree(v.id) == 0) continue;
        cap *= v.weight;
        if (cap > std::numeric_limits<int>::max())
            throw unsupported_error("instance too large for the oracle");
    }
    cap = std::max(cap, pw);

    long long total_nodes = 0;
    for (long long n = pw; n <= cap; ++n) {
        OracleResult r = exists_ca_of_size(h, static_cast<int>(n), options);
        total_nodes += r.nodes_used;
        if (r.status == OracleStatus::Found)
            return {OracleStatus::Found, static_cast<int>(n),
                    std::move(r.array), total_nodes};
        if (r.status == OracleStatus::BudgetExceeded)
            return {OracleStatus::BudgetExceeded, static_cast<int>(n),
                    std::nullopt, total_nodes};
    }
    // The full factorial of all active weights is always a covering array.
    throw std::logic_error("search passed the factorial upper bound");
}

}  // namespace hyperca
