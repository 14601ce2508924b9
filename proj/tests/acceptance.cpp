// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// fails. Criteria with a wall-clock bound fail when the bound is exceeded.

#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "hyperca/constructors.hpp"
#include "hyperca/core.hpp"
#include "hyperca/extension.hpp"
#include "hyperca/io.hpp"
#include "hyperca/ops.hpp"
#include "hyperca/oracle.hpp"
#include "hyperca/structure.hpp"
#include "hyperca/tripartite.hpp"
#include "hyperca/types.hpp"

using namespace hyperca;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.empty()) detail = why;
    }
};

WeightedHypergraph example_acyclic() {
    WeightedHypergraph h;
    for (int i = 1; i <= 6; ++i) h.add_vertex(i, 2);
    h.add_edge({1, 2, 3});
    h.add_edge({1, 3, 4});
    h.add_edge({1, 2, 6});
    h.add_edge({2, 3, 5});
    return h;
}

WeightedHypergraph example_cyclic() {
    WeightedHypergraph h;
    for (int i = 1; i <= 6; ++i) h.add_vertex(i, 2);
    h.add_edge({1, 2, 3});
    h.add_edge({1, 3, 4});
    h.add_edge({2, 4, 5});
    h.add_edge({4, 5, 6});
    return h;
}

WeightedHypergraph cycle3_with(const std::vector<int>& weights) {
    WeightedHypergraph h;
    for (int i = 0; i < 5; ++i) h.add_vertex(i, weights[static_cast<size_t>(i)]);
    h.add_edge({0, 1, 2});
    h.add_edge({1, 2, 3});
    h.add_edge({3, 4, 0});
    return h;
}

bool balanced_ok(const CoveringArray& c) {
    return verify_covering_array(c, true).ok;
}

// 1. The published 10-column array on the complete binary 5-vertex
//    hypergraph parses and verifies.
Outcome criterion_reference_array() {
    Outcome out;
    std::string text =
        "ca n=10 k=5\n"
        "row 1 g=2: 1 0 1 0 1 0 0 0 1 1\n"
        "row 2 g=2: 1 0 1 0 0 1 0 1 0 1\n"
        "row 3 g=2: 1 0 0 1 0 0 1 1 1 0\n"
        "row 4 g=2: 1 0 0 1 1 1 0 0 0 1\n"
        "row 5 g=2: 1 0 1 0 1 1 1 0 0 0\n";
    WeightedHypergraph h = complete_uniform(5, 3, {2, 2, 2, 2, 2});
    CoveringArray c = bind_array(parse_array(text), h);
    if (!verify_covering_array(c).ok) out.fail("reference array rejected");
    return out;
}

// 2. Acyclicity ground truth on the two worked examples.
Outcome criterion_acyclicity() {
    Outcome out;
    if (!is_alpha_acyclic(example_acyclic()))
        out.fail("acyclic example misclassified");
    if (is_alpha_acyclic(example_cyclic()))
        out.fail("cyclic example misclassified");
    return out;
}

// 3. 50 random acyclic instances (<= 12 vertices, weights 1..4) build at
//    exactly the product weight and pass balanced verification.
Outcome criterion_acyclic_corpus() {
    Outcome out;
    std::mt19937 rng(101);
    int built = 0;
    for (int trial = 0; trial < 50; ++trial) {
        WeightedHypergraph h = testgen::random_acyclic(rng, 12, 1, 4);
        CoveringArray c = construct_acyclic(h);
        if (c.size() != product_weight(h)) {
            out.fail("size " + std::to_string(c.size()) + " != product weight " +
                     std::to_string(product_weight(h)));
            break;
        }
        if (!balanced_ok(c)) {
            out.fail("balanced verification failed on trial " +
                     std::to_string(trial));
            break;
        }
        ++built;
    }
    out.detail = std::to_string(built) + " instances";
    return out;
}

// 4. Loose cycles of lengths 3..6 with weights in 1..3 build at the product
//    weight.
Outcome criterion_loose_cycles() {
    Outcome out;
    std::mt19937 rng(102);
    int built = 0;
    for (int k = 3; k <= 6 && out.ok; ++k)
        for (int rep = 0; rep < 10 && out.ok; ++rep) {
            WeightedHypergraph h = testgen::loose_cycle(rng, k, 1, 3);
            CoveringArray c = construct_loose_cycle(h);
            if (c.size() != product_weight(h))
                out.fail("wrong size at length " + std::to_string(k));
            else if (!balanced_ok(c))
                out.fail("verification failed at length " + std::to_string(k));
            else
                ++built;
        }
    out.detail = std::to_string(built) + " cycles";
    return out;
}

// 5. The flagship three-edge cycle with weights (10,8,5,2,18) yields a
//    verifying balanced 5x400 array.
Outcome criterion_flagship() {
    Outcome out;
    WeightedHypergraph h = cycle3_with({10, 8, 5, 2, 18});
    CoveringArray c = construct_cycle3(h);
    if (c.size() != 400) out.fail("size " + std::to_string(c.size()) + " != 400");
    if (c.hypergraph().vertex_count() != 5) out.fail("not five rows");
    if (!balanced_ok(c)) out.fail("balanced verification failed");
    return out;
}

// 6. Row-extension property suites over all alphabet choices <= 3 and
//    compatible sizes <= 36, at least 200 randomized inputs per extension.
Outcome criterion_extension_suites() {
    Outcome out;
    std::mt19937 rng(103);

    int pair_runs = 0;
    while (pair_runs < 200 && out.ok) {
        for (int g1 = 1; g1 <= 3 && out.ok; ++g1)
            for (int g2 = 1; g2 <= 3 && out.ok; ++g2)
                for (int h = 1; h <= 3 && out.ok; ++h) {
                    int l = std::lcm(std::lcm(g1, g2), h);
                    for (int n = l; n <= 36; n += l) {
                        SymbolVector x1 = testgen::random_balanced_row(rng, n, g1);
                        SymbolVector x2 = testgen::random_balanced_row(rng, n, g2);
                        if (!is_balanced(x1) || !is_balanced(x2)) {
                            out.fail("generator produced unbalanced input");
                            break;
                        }
                        SymbolVector y = extend_pairwise_balanced_pair(x1, x2, h);
                        if (!is_balanced(y) || !are_pairwise_balanced(x1, y) ||
                            !are_pairwise_balanced(x2, y)) {
                            out.fail("pairwise extension violated its contract");
                            break;
                        }
                        ++pair_runs;
                    }
                }
    }

    int qi_runs = 0;
    while (qi_runs < 200 && out.ok) {
        for (int g1 = 1; g1 <= 3 && out.ok; ++g1)
            for (int g2 = 1; g2 <= 3 && out.ok; ++g2)
                for (int h = 1; h <= 3 && out.ok; ++h) {
                    int base = g1 * g2 * h;
                    for (int n = base; n <= 36; n += base) {
                        auto [x1, x2] =
                            testgen::random_pairwise_balanced(rng, n, g1, g2);
                        if (!are_pairwise_balanced(x1, x2)) {
                            out.fail("generator produced an unbalanced pair");
                            break;
                        }
                        SymbolVector y = extend_3qi(x1, x2, h);
                        if (!is_balanced(y) || !are_pairwise_balanced(x1, y) ||
                            !are_pairwise_balanced(x2, y) ||
                            !are_qualitatively_independent(x1, x2, y)) {
                            out.fail("independence extension violated its contract");
                            break;
                        }
                        ++qi_runs;
                    }
                }
    }

    int tri_runs = 0;
    while (tri_runs < 200 && out.ok) {
        for (int g1 = 1; g1 <= 3 && out.ok; ++g1)
            for (int g2 = 1; g2 <= 3 && out.ok; ++g2)
                for (int g3 = 1; g3 <= 3 && out.ok; ++g3)
                    for (int h = 1; h <= 3 && out.ok; ++h)
                        for (int n = 1; n <= 36; ++n) {
                            if (n < g1 * g2 * g3) continue;
                            if (g1 * g2 * h > n || g1 * g3 * h > n) continue;
                            if (h >= 3 && (n / (g1 * g2)) % h != 0) continue;
                            auto rows =
                                testgen::random_3qi_triple(rng, n, g1, g2, g3);
                            if (!are_qualitatively_independent(rows[0], rows[1],
                                                               rows[2])) {
                                out.fail("generator produced a dependent triple");
                                break;
                            }
                            SymbolVector y = extend_3qi_constrained(
                                rows[0], rows[1], rows[2], h);
                            if (!is_balanced(y) ||
                                !are_pairwise_balanced(rows[0], y) ||
                                !are_pairwise_balanced(rows[1], y) ||
                                !are_pairwise_balanced(rows[2], y) ||
                                !are_qualitatively_independent(rows[0], rows[1],
                                                               y)) {
                                out.fail(
                                    "constrained extension violated its contract");
                                break;
                            }
                            ++tri_runs;
                        }
    }

    out.detail = std::to_string(pair_runs) + "+" + std::to_string(qi_runs) +
                 "+" + std::to_string(tri_runs) + " inputs";
    return out;
}

// 7. Exhaustive-search minimum equals the product weight on constructor-
//    supported instances with at most 5 vertices and product weight <= 12.
Outcome criterion_oracle_agreement() {
    Outcome out;
    std::vector<WeightedHypergraph> instances;

    auto single = [](std::vector<int> w) {
        WeightedHypergraph h;
        for (size_t i = 0; i < w.size(); ++i)
            h.add_vertex(static_cast<VertexId>(i + 1), w[i]);
        h.add_edge({1, 2, 3});
        return h;
    };
    instances.push_back(single({2, 2, 2}));
    instances.push_back(single({2, 2, 3}));
    instances.push_back(single({1, 2, 3}));
    instances.push_back(single({2, 5, 1}));
    instances.push_back(single({2, 2, 2, 3}));  // isolated heavy vertex

    WeightedHypergraph shared2;
    for (int i = 1; i <= 4; ++i) shared2.add_vertex(i, 2);
    shared2.add_edge({1, 2, 3});
    shared2.add_edge({1, 2, 4});
    instances.push_back(shared2);

    WeightedHypergraph shared1;
    for (int i = 1; i <= 5; ++i) shared1.add_vertex(i, 2);
    shared1.add_edge({1, 2, 3});
    shared1.add_edge({3, 4, 5});
    instances.push_back(shared1);

    WeightedHypergraph mixed;
    mixed.add_vertex(1, 2);
    mixed.add_vertex(2, 2);
    mixed.add_vertex(3, 3);
    mixed.add_vertex(4, 3);
    mixed.add_edge({1, 2, 3});
    mixed.add_edge({1, 2, 4});
    instances.push_back(mixed);

    instances.push_back(cycle3_with({2, 2, 2, 2, 1}));
    instances.push_back(cycle3_with({2, 2, 2, 2, 2}));

    int agreed = 0;
    for (size_t i = 0; i < instances.size(); ++i) {
        const auto& h = instances[i];
        if (h.vertex_count() > 5 || product_weight(h) > 12) {
            out.fail("instance " + std::to_string(i) + " out of scale");
            break;
        }
        CoveringArray built = construct_auto(h);  // throws if unsupported
        if (built.size() != product_weight(h)) {
            out.fail("constructor missed the product weight on instance " +
                     std::to_string(i));
            break;
        }
        OracleOptions opts;
        opts.node_budget = 100'000'000;
        MinCanResult r = min_can(h, opts);
        if (r.status != OracleStatus::Found || r.n != product_weight(h)) {
            out.fail("oracle disagreed on instance " + std::to_string(i));
            break;
        }
        ++agreed;
    }
    out.detail = std::to_string(agreed) + " instances";
    return out;
}

// 8. Deleting the rows and edges a hook added restores an array that
//    verifies on the pre-hook hypergraph; 100 randomized applications.
Outcome criterion_structural_inverse() {
    Outcome out;
    std::mt19937 rng(104);

    auto strip_and_check = [&](const CoveringArray& before,
                               const CoveringArray& after,
                               const std::vector<VertexId>& added) {
        std::map<VertexId, SymbolVector> rows = after.rows();
        for (VertexId id : added) rows.erase(id);
        CoveringArray restored(before.hypergraph(), before.size(),
                               std::move(rows));
        return verify_covering_array(restored, true).ok && restored == before;
    };

    auto random_base = [&] {
        int g1 = testgen::draw(rng, 1, 3), g2 = testgen::draw(rng, 1, 3),
            g3 = testgen::draw(rng, 1, 3);
        int n = g1 * g2 * g3 * testgen::draw(rng, 1, 2);
        WeightedHypergraph h;
        h.add_vertex(1, g1);
        h.add_vertex(2, g2);
        h.add_vertex(3, g3);
        h.add_edge({1, 2, 3});
        std::vector<int> base(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i % g1;
        SymbolVector x1(base, g1);
        SymbolVector x2 = extend_balanced(x1, g2);
        SymbolVector x3 = extend_3qi(x1, x2, g3);
        std::map<VertexId, SymbolVector> rows;
        rows.emplace(1, x1);
        rows.emplace(2, x2);
        rows.emplace(3, x3);
        return CoveringArray(std::move(h), n, std::move(rows));
    };

    int applications = 0;
    for (int rep = 0; rep < 20 && out.ok; ++rep) {
        {
            CoveringArray c = random_base();
            VertexId a = testgen::draw(rng, 1, 3);
            int cap = c.size() / c.hypergraph().weight_of(a);
            long long pw = product_weight(c.hypergraph());
            int w = 1;
            for (int cand = cap; cand >= 1; --cand)
                if (cand * c.hypergraph().weight_of(a) <= pw) {
                    w = testgen::draw(rng, 1, cand);
                    break;
                }
            CoveringArray c2 = hook_edge_i(c, 50, w, a);
            if (!strip_and_check(c, c2, {50}))
                out.fail("edge hooking I inverse failed");
            ++applications;
        }
        if (!out.ok) break;
        {
            CoveringArray c = random_base();
            CoveringArray c2 = hook_edge_ii(c, 50, 1, 1, 2);
            if (!strip_and_check(c, c2, {50}))
                out.fail("edge hooking II inverse failed");
            ++applications;
        }
        {
            CoveringArray c = random_base();
            VertexId a = testgen::draw(rng, 1, 3);
            CoveringArray c2 = hook_two_vertex_hyperedge(c, 50, 1, 51, 1, a);
            if (!strip_and_check(c, c2, {50, 51}))
                out.fail("two-vertex hooking inverse failed");
            ++applications;
        }
        {
            CoveringArray c = random_base();
            CoveringArray mid = hook_edge_i(c, 40, 1, 1);
            CoveringArray c2 = hook_hyperedge_i(mid, 50, 1, 40, 1);
            if (!strip_and_check(mid, c2, {50}))
                out.fail("hyperedge hooking I inverse failed");
            ++applications;
        }
        {
            CoveringArray c = random_base();
            CoveringArray c2 = hook_hyperedge_ii(c, 50, 1, 1, 2, 3);
            if (!strip_and_check(c, c2, {50}))
                out.fail("hyperedge hooking II inverse failed");
            ++applications;
        }
    }
    out.detail = std::to_string(applications) + " applications";
    return out;
}

// 9. Matching decomposition succeeds on 50 split instances with at most 30
//    hyperedges and degree cap <= 3, returning valid partitions.
Outcome criterion_matching_decomposition() {
    Outcome out;
    std::mt19937 rng(105);
    int done = 0;
    while (done < 50 && out.ok) {
        int g1 = testgen::draw(rng, 1, 3), g2 = testgen::draw(rng, 1, 3),
            g3 = testgen::draw(rng, 1, 3);
        int h = testgen::draw(rng, 1, 3);
        int n = -1;
        for (int cand = 1; cand <= 30; ++cand) {
            if (cand < g1 * g2 * g3) continue;
            if (g1 * g2 * h > cand || g1 * g3 * h > cand) continue;
            if (h >= 3 && (cand / (g1 * g2)) % h != 0) continue;
            n = cand;
            if (testgen::draw(rng, 0, 1)) break;  // vary the size
        }
        if (n < 0) continue;
        auto rows = testgen::random_3qi_triple(rng, n, g1, g2, g3);
        auto split = split_tripartite(build_tripartite(rows[0], rows[1], rows[2]), h);
        auto basic = split_as_hypergraph(split);
        if (static_cast<int>(basic.edges.size()) > 30 || basic.max_degree() > 3) {
            out.fail("generated split out of scale");
            break;
        }
        std::vector<std::vector<int>> parts;
        try {
            parts = decompose_into_matchings(basic, h);
        } catch (const std::exception& e) {
            out.fail(std::string("decomposition refused: ") + e.what());
            break;
        }
        if (static_cast<int>(parts.size()) != h) {
            out.fail("wrong class count");
            break;
        }
        std::vector<int> hits(basic.edges.size(), 0);
        for (const auto& part : parts) {
            std::set<int> used;
            for (int e : part) {
                ++hits[static_cast<size_t>(e)];
                for (int v : basic.edges[static_cast<size_t>(e)])
                    if (!used.insert(v).second) out.fail("not a matching");
            }
        }
        for (int c : hits)
            if (c != 1) out.fail("edge not covered exactly once");
        if (out.ok) ++done;
    }
    out.detail = std::to_string(done) + " instances";
    return out;
}

struct Criterion {
    const char* name;
    double limit_seconds;  // <= 0: no wall-clock bound
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"reference array on the complete binary 5-vertex hypergraph", 1.0,
         criterion_reference_array},
        {"acyclicity ground truth on the worked examples", 1.0,
         criterion_acyclicity},
        {"optimal builds on 50 random acyclic instances", 60.0,
         criterion_acyclic_corpus},
        {"optimal builds on loose cycles of lengths 3..6", 30.0,
         criterion_loose_cycles},
        {"flagship five-vertex cycle builds a 5x400 array", 60.0,
         criterion_flagship},
        {"row-extension property suites, 200+ inputs each", -1.0,
         criterion_extension_suites},
        {"search minimum equals product weight on 10 small instances", 600.0,
         criterion_oracle_agreement},
        {"hooks are structurally invertible, 100 applications", -1.0,
         criterion_structural_inverse},
        {"matching decomposition on 50 split instances", -1.0,
         criterion_matching_decomposition},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        if (out.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            out.ok = false;
            out.detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
        }
        if (!out.ok) ++failures;
        std::printf("criterion %d: %s  (%.2fs)  %s%s%s\n", index,
                    out.ok ? "PASS" : "FAIL", secs, c.name,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
