#include "hyperca/constructors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <random>
#include <stdexcept>

#include "hyperca/core.hpp"
#include "hyperca/ops.hpp"
#include "hyperca/structure.hpp"

namespace hyperca {

namespace {

SymbolVector cyclic_row(int n, int g) {
    std::vector<int> symbols(n);
    for (int i = 0; i < n; ++i) symbols[i] = i % g;
    return SymbolVector(std::move(symbols), g);
}

CoveringArray with_lone_vertex(const CoveringArray& c, VertexId v, int weight) {
    WeightedHypergraph h = c.hypergraph();
    h.add_vertex(v, weight);
    std::map<VertexId, SymbolVector> rows = c.rows();
    rows.emplace(v, cyclic_row(c.size(), weight));
    return CoveringArray(std::move(h), c.size(), std::move(rows));
}

// Orders two vertices the way the two-vertex hook wants them: the first one
// gets the plain balanced extension, so lighter weight (then lower id) first.
std::pair<VertexId, VertexId> hook_order(const WeightedHypergraph& h,
                                         VertexId a, VertexId b) {
    auto key = [&](VertexId v) { return std::make_pair(h.weight_of(v), v); };
    if (key(b) < key(a)) std::swap(a, b);
    return {a, b};
}

// Builds a covering array for one hyperedge from nothing: cyclic row for the
// lowest vertex id, then both others hooked in.
CoveringArray seed_hyperedge(const CoveringArray& c,
                             const WeightedHypergraph& target,
                             const std::vector<VertexId>& edge) {
    VertexId first = edge[0];  // edge contents are kept sorted
    CoveringArray with_seed = with_lone_vertex(c, first, target.weight_of(first));
    auto [a, b] = hook_order(target, edge[1], edge[2]);
    return hook_two_vertex_hyperedge(with_seed, a, target.weight_of(a), b,
                                     target.weight_of(b), first);
}

CoveringArray shuffle_columns(const CoveringArray& c, std::uint64_t seed) {
    int n = c.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::mt19937_64 gen(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(gen() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    std::map<VertexId, SymbolVector> rows;
    for (const auto& [id, row] : c.rows()) {
        std::vector<int> symbols(n);
        for (int i = 0; i < n; ++i) symbols[i] = row[perm[i]];
        rows.emplace(id, SymbolVector(std::move(symbols), row.alphabet()));
    }
    return CoveringArray(c.hypergraph(), n, std::move(rows));
}

CoveringArray finish(CoveringArray c, const WeightedHypergraph& input,
                     const BuildOptions& options) {
    if (!(c.hypergraph() == input))
        throw std::logic_error("constructor rebuilt a different hypergraph");
    if (options.seed) c = shuffle_columns(c, *options.seed);
    VerificationReport report = verify_covering_array(c, true);
    if (!report.ok)
        throw std::logic_error("constructor output failed verification: " +
                               format_violation(report.violations.front()));
    return c;
}

void require_edges(const WeightedHypergraph& h) {
    if (h.edge_count() == 0)
        throw precondition_error("construction needs at least one hyperedge");
}

int heaviest_edge_index(const WeightedHypergraph& h, long long pw) {
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        long long p = 1;
        for (VertexId v : edges[i]) p *= h.weight_of(v);
        if (p == pw) return static_cast<int>(i);
    }
    throw std::logic_error("no edge attains the product weight");
}

}  // namespace

CoveringArray construct_acyclic(const WeightedHypergraph& h,
                                const BuildOptions& options) {
    require_edges(h);
    for (const auto& e : h.edges())
        if (e.size() != 3)
            throw unsupported_error(
                "acyclic construction needs all edges of size 3");
    if (!is_alpha_acyclic(h))
        throw unsupported_error("hypergraph is not alpha-acyclic");

    long long pw = product_weight(h);
    if (pw > std::numeric_limits<int>::max())
        throw unsupported_error("product weight too large for an array size");
    int n = static_cast<int>(pw);

    int seed_edge = heaviest_edge_index(h, pw);
    GyoTrace trace = gyo_reduce_keeping(h, seed_edge);
    assert(trace.empty_residual());
    assert(trace.deletion_order.back() == seed_edge);

    const auto& edges = h.edges();
    CoveringArray c(WeightedHypergraph{}, n, {});
    for (auto it = trace.deletion_order.rbegin();
         it != trace.deletion_order.rend(); ++it) {
        const std::vector<VertexId>& edge = edges[*it];
        std::vector<VertexId> shared, fresh;
        for (VertexId v : edge)
            (c.hypergraph().has_vertex(v) ? shared : fresh).push_back(v);
        switch (shared.size()) {
            case 0:
                c = seed_hyperedge(c, h, edge);
                break;
            case 1: {
                auto [a, b] = hook_order(h, fresh[0], fresh[1]);
                c = hook_two_vertex_hyperedge(c, a, h.weight_of(a), b,
                                              h.weight_of(b), shared[0]);
                break;
            }
            case 2:
                c = attach_hyperedge(c, fresh[0], h.weight_of(fresh[0]),
                                     shared[0], shared[1]);
                break;
            default:
                throw std::logic_error(
                    "replayed hyperedge already fully present");
        }
    }
    for (VertexId v : h.isolated_vertices())
        c = with_lone_vertex(c, v, h.weight_of(v));
    return finish(std::move(c), h, options);
}

CoveringArray construct_hypertree(const WeightedHypergraph& h,
                                  const BuildOptions& options) {
    return construct_acyclic(h, options);
}

CoveringArray construct_loose_cycle(const WeightedHypergraph& h,
                                    const BuildOptions& options) {
    auto lc = recognize_loose_cycle(h);
    if (!lc) throw unsupported_error("hypergraph is not a loose cycle");
    long long pw = product_weight(h);
    if (pw > std::numeric_limits<int>::max())
        throw unsupported_error("product weight too large for an array size");
    int n = static_cast<int>(pw);
    int k = lc->length;

    // Rotate the cycle so position 0 holds the lowest-id hyperedge whose
    // weight product attains the maximum.
    const auto& edges = h.edges();
    auto edge_product = [&](int index) {
        long long p = 1;
        for (VertexId v : edges[index]) p *= h.weight_of(v);
        return p;
    };
    int rot = -1;
    for (int r = 0; r < k; ++r) {
        if (edge_product(lc->edge_order[r]) != pw) continue;
        if (rot == -1 || lc->edge_order[r] < lc->edge_order[rot]) rot = r;
    }
    assert(rot != -1);
    std::vector<VertexId> v(k), u(k);
    for (int i = 0; i < k; ++i) {
        v[i] = lc->joints[(rot + i) % k];
        u[i] = lc->privates[(rot + i) % k];
    }

    CoveringArray c =
        seed_hyperedge(CoveringArray(WeightedHypergraph{}, n, {}), h,
                       edges[lc->edge_order[rot]]);
    for (int j = 2; j <= k - 2; ++j)
        c = hook_edge_i(c, v[j], h.weight_of(v[j]), v[j - 1]);
    c = hook_edge_ii(c, v[k - 1], h.weight_of(v[k - 1]), v[k - 2], v[0]);
    for (int j = 1; j < k; ++j)
        c = hook_hyperedge_i(c, u[j], h.weight_of(u[j]), v[j], v[(j + 1) % k]);
    return finish(std::move(c), h, options);
}

CoveringArray construct_cycle3(const WeightedHypergraph& h,
                               const BuildOptions& options) {
    auto shape = recognize_cycle3_shape(h);
    if (!shape)
        throw unsupported_error(
            "hypergraph is not a three-edge cycle on five vertices");
    if (!shape->conditions_ok()) {
        std::string why = "three-edge cycle weight conditions failed:";
        if (!shape->product_ok) why += " seed hyperedge does not attain PW;";
        if (!shape->mod_ok) why += " g0 not divisible by g3;";
        if (!shape->bound_ok) why += " g3 exceeds min(g0, max(g1, g2));";
        why.pop_back();
        throw unsupported_error(why);
    }
    int n = static_cast<int>(product_weight(h));
    const auto& vs = shape->v;

    CoveringArray c =
        seed_hyperedge(CoveringArray(WeightedHypergraph{}, n, {}), h,
                       h.edges()[shape->e1]);
    c = hook_hyperedge_ii(c, vs[3], h.weight_of(vs[3]), vs[1], vs[2], vs[0]);
    c = hook_hyperedge_i(c, vs[4], h.weight_of(vs[4]), vs[0], vs[3]);
    return finish(std::move(c), h, options);
}

CoveringArray construct_auto(const WeightedHypergraph& h,
                             const BuildOptions& options) {
    std::vector<std::string> reasons;

    bool uniform = true;
    for (const auto& e : h.edges()) uniform = uniform && e.size() == 3;
    if (uniform && h.edge_count() > 0 && is_alpha_acyclic(h))
        return construct_acyclic(h, options);
    if (h.edge_count() == 0)
        reasons.push_back("no hyperedges");
    else if (!uniform)
        reasons.push_back("alpha-acyclic: rejected (has size-2 edges)");
    else
        reasons.push_back("alpha-acyclic: rejected (reduction leaves a residual)");

    if (recognize_loose_cycle(h)) return construct_loose_cycle(h, options);
    reasons.push_back("loose cycle: rejected (shape mismatch)");

    if (auto shape = recognize_cycle3_shape(h)) {
        if (shape->conditions_ok()) return construct_cycle3(h, options);
        std::string why = "three-edge cycle: rejected (";
        if (!shape->product_ok) why += "seed product below PW; ";
        if (!shape->mod_ok) why += "g0 not divisible by g3; ";
        if (!shape->bound_ok) why += "g3 exceeds min(g0, max(g1, g2)); ";
        why.resize(why.size() - 2);
        reasons.push_back(why + ")");
    } else {
        reasons.push_back("three-edge cycle: rejected (shape mismatch)");
    }

    std::string all;
    for (const auto& r : reasons) {
        if (!all.empty()) all += "; ";
        all += r;
    }
    throw unsupported_error("no supported class matched: " + all);
}

}  // namespace hyperca
