#include "hyperca/core.hpp"

#include <future>
#include <sstream>

namespace hyperca {

namespace {

bool counts_within(const std::vector<int>& counts, int total, int parts) {
    int lo = total / parts;
    int hi = (total + parts - 1) / parts;
    for (int c : counts)
        if (c != lo && c != hi) return false;
    return true;
}

void require_same_length(const SymbolVector& a, const SymbolVector& b) {
    if (a.size() != b.size())
        throw precondition_error("symbol vectors differ in length");
}

}  // namespace

bool is_balanced(const SymbolVector& x) {
    return counts_within(x.counts(), x.size(), x.alphabet());
}

bool are_pairwise_balanced(const SymbolVector& x1, const SymbolVector& x2) {
    require_same_length(x1, x2);
    if (!is_balanced(x1) || !is_balanced(x2)) return false;
    const int g1 = x1.alphabet(), g2 = x2.alphabet();
    std::vector<int> pair_counts(static_cast<size_t>(g1) * g2, 0);
    for (int i = 0; i < x1.size(); ++i)
        ++pair_counts[static_cast<size_t>(x1[i]) * g2 + x2[i]];
    return counts_within(pair_counts, x1.size(), g1 * g2);
}

bool are_t_qualitatively_independent(
    const std::vector<const SymbolVector*>& rows, int t) {
    if (t != 2 && t != 3)
        throw precondition_error("qualitative independence defined for t in {2,3}");
    if (static_cast<int>(rows.size()) != t)
        throw precondition_error("expected exactly t rows");
    const int n = rows[0]->size();
    for (const auto* r : rows)
        if (r->size() != n)
            throw precondition_error("symbol vectors differ in length");
    size_t space = 1;
    for (const auto* r : rows) space *= static_cast<size_t>(r->alphabet());
    std::vector<char> seen(space, 0);
    size_t covered = 0;
    for (int i = 0; i < n; ++i) {
        size_t idx = 0;
        for (const auto* r : rows) idx = idx * r->alphabet() + (*r)[i];
        if (!seen[idx]) {
            seen[idx] = 1;
            if (++covered == space) return true;
        }
    }
    return covered == space;
}

bool are_qualitatively_independent(const SymbolVector& x1,
                                   const SymbolVector& x2) {
    return are_t_qualitatively_independent({&x1, &x2}, 2);
}

bool are_qualitatively_independent(const SymbolVector& x1,
                                   const SymbolVector& x2,
                                   const SymbolVector& x3) {
    return are_t_qualitatively_independent({&x1, &x2, &x3}, 3);
}

long long product_weight(const WeightedHypergraph& h) {
    if (h.edge_count() == 0)
        throw precondition_error("product weight needs at least one edge");
    long long best = 0;
    for (const auto& e : h.edges()) {
        long long p = 1;
        for (VertexId v : e) p *= h.weight_of(v);
        best = std::max(best, p);
    }
    return best;
}

namespace {

std::string join_ids(const std::vector<VertexId>& ids) {
    std::ostringstream os;
    for (size_t i = 0; i < ids.size(); ++i)
        os << (i ? "," : "") << ids[i];
    return os.str();
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    return os.str();
}

// Missing-tuple violations for one edge, tuples in ascending order.
std::vector<Violation> check_edge_coverage(const CoveringArray& c,
                                           const std::vector<VertexId>& edge) {
    std::vector<const SymbolVector*> rows;
    for (VertexId v : edge) rows.push_back(&c.row(v));
    size_t space = 1;
    for (const auto* r : rows) space *= static_cast<size_t>(r->alphabet());
    std::vector<char> seen(space, 0);
    for (int i = 0; i < c.size(); ++i) {
        size_t idx = 0;
        for (const auto* r : rows) idx = idx * r->alphabet() + (*r)[i];
        seen[idx] = 1;
    }
    std::vector<Violation> out;
    for (size_t idx = 0; idx < space; ++idx) {
        if (seen[idx]) continue;
        std::vector<int> tuple(rows.size());
        size_t rem = idx;
        for (size_t j = rows.size(); j-- > 0;) {
            tuple[j] = static_cast<int>(rem % rows[j]->alphabet());
            rem /= rows[j]->alphabet();
        }
        out.push_back({Violation::Kind::MissingTuple, edge, tuple,
                       "edge {" + join_ids(edge) + "} misses tuple (" +
                           join_ints(tuple) + ")"});
    }
    return out;
}

std::vector<Violation> check_balance(const CoveringArray& c) {
    std::vector<Violation> out;
    for (const auto& [id, row] : c.rows()) {
        if (!is_balanced(row))
            out.push_back({Violation::Kind::UnbalancedRow, {id}, {},
                           "row " + std::to_string(id) + " is not balanced"});
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : c.hypergraph().edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                pairs.emplace_back(e[i], e[j]);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto [u, v] : pairs) {
        if (!are_pairwise_balanced(c.row(u), c.row(v)))
            out.push_back({Violation::Kind::UnbalancedPair, {u, v}, {},
                           "rows " + std::to_string(u) + "," +
                               std::to_string(v) +
                               " are not pairwise balanced"});
    }
    return out;
}

}  // namespace

VerificationReport verify_covering_array(const CoveringArray& c,
                                         bool balanced_mode, int jobs) {
    const auto& edges = c.hypergraph().edges();
    std::vector<std::vector<Violation>> per_edge(edges.size());
    if (jobs <= 1 || edges.size() <= 1) {
        for (size_t i = 0; i < edges.size(); ++i)
            per_edge[i] = check_edge_coverage(c, edges[i]);
    } else {
        const size_t workers = std::min<size_t>(jobs, edges.size());
        std::vector<std::future<void>> futs;
        for (size_t w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (size_t i = w; i < edges.size(); i += workers)
                    per_edge[i] = check_edge_coverage(c, edges[i]);
            }));
        }
        for (auto& f : futs) f.get();
    }
    VerificationReport report;
    for (auto& batch : per_edge)
        for (auto& v : batch) report.violations.push_back(std::move(v));
    if (balanced_mode) {
        auto balance = check_balance(c);
        for (auto& v : balance) report.violations.push_back(std::move(v));
    }
    report.ok = report.violations.empty();
    return report;
}

std::string format_violation(const Violation& v) { return v.detail; }

}  // namespace hyperca
