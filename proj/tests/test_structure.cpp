#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "hyperca/core.hpp"
#include "hyperca/structure.hpp"
#include "hyperca/types.hpp"

using namespace hyperca;

namespace {

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

WeightedHypergraph fig_cycle3() {
    WeightedHypergraph h;
    int weights[5] = {10, 8, 5, 2, 18};
    for (int i = 0; i < 5; ++i) h.add_vertex(i, weights[i]);
    h.add_edge({0, 1, 2});
    h.add_edge({1, 2, 3});
    h.add_edge({3, 4, 0});
    return h;
}

}  // namespace

TEST_CASE("reduction empties the acyclic example") {
    auto trace = gyo_reduce(example_acyclic());
    CHECK(trace.empty_residual());
    CHECK(trace.deletion_order.size() == 4);
    CHECK(is_alpha_acyclic(example_acyclic()));
}

TEST_CASE("reduction stalls on the cyclic example") {
    auto trace = gyo_reduce(example_cyclic());
    CHECK_FALSE(trace.empty_residual());
    CHECK_FALSE(is_alpha_acyclic(example_cyclic()));
}

TEST_CASE("a loose path is acyclic, a loose cycle is not") {
    std::mt19937 rng(31);
    WeightedHypergraph cyc = testgen::loose_cycle(rng, 4, 1, 3);
    CHECK_FALSE(is_alpha_acyclic(cyc));

    WeightedHypergraph path;
    for (int i = 1; i <= 7; ++i) path.add_vertex(i, 2);
    path.add_edge({1, 2, 3});
    path.add_edge({3, 4, 5});
    path.add_edge({5, 6, 7});
    CHECK(is_alpha_acyclic(path));
}

TEST_CASE("reduction trace replays as a certificate") {
    auto h = example_acyclic();
    auto trace = gyo_reduce(h);
    // Every deleted vertex had degree one at its step and every absorbed
    // edge was a subset of its absorber under the deletions so far.
    std::set<int> gone_edges;
    std::map<int, std::set<VertexId>> current;
    for (int e = 0; e < h.edge_count(); ++e)
        current[e] = std::set<VertexId>(h.edges()[e].begin(), h.edges()[e].end());
    for (const auto& step : trace.steps) {
        if (step.kind == GyoStep::Kind::DeleteDegreeOneVertex) {
            int holders = 0;
            for (auto& [e, verts] : current)
                if (!gone_edges.count(e) && verts.count(step.vertex)) ++holders;
            CHECK(holders == 1);
            CHECK(current[step.edge].count(step.vertex) == 1);
            current[step.edge].erase(step.vertex);
        } else if (step.kind == GyoStep::Kind::AbsorbSubsetEdge) {
            CHECK_FALSE(gone_edges.count(step.into));
            const auto& small = current[step.edge];
            const auto& big = current[step.into];
            CHECK(std::includes(big.begin(), big.end(), small.begin(),
                                small.end()));
            gone_edges.insert(step.edge);
        } else {
            CHECK(current[step.edge].empty());
            gone_edges.insert(step.edge);
        }
    }
    CHECK(gone_edges.size() == 4);
}

TEST_CASE("pinned reduction deletes the chosen edge last") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedHypergraph h = testgen::random_acyclic(rng, 12, 1, 4);
        for (int keep = 0; keep < h.edge_count(); ++keep) {
            auto trace = gyo_reduce_keeping(h, keep);
            CHECK(trace.empty_residual());
            REQUIRE_FALSE(trace.deletion_order.empty());
            CHECK(trace.deletion_order.back() == keep);
        }
    }
    CHECK_THROWS_AS(gyo_reduce_keeping(example_acyclic(), 9),
                    precondition_error);
}

TEST_CASE("two-section of the acyclic example") {
    auto g = two_section(example_acyclic());
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(g.has_edge({1, 4}));
    CHECK_FALSE(g.has_edge({4, 5}));
    CHECK(g.weight_of(3) == 2);
}

TEST_CASE("conformality") {
    WeightedHypergraph lone;
    for (int i = 1; i <= 3; ++i) lone.add_vertex(i, 2);
    lone.add_edge({1, 2, 3});
    CHECK(is_conformal(lone));

    // Three hyperedges pairwise sharing two vertices: the 2-section is K4
    // but {1,2,3,4} is not a hyperedge.
    WeightedHypergraph k4;
    for (int i = 1; i <= 4; ++i) k4.add_vertex(i, 2);
    k4.add_edge({1, 2, 3});
    k4.add_edge({1, 2, 4});
    k4.add_edge({1, 3, 4});
    CHECK_FALSE(is_conformal(k4));

    CHECK(is_conformal(example_acyclic()));
}

TEST_CASE("loose cycle recognition") {
    std::mt19937 rng(33);
    for (int k = 3; k <= 6; ++k) {
        WeightedHypergraph h = testgen::loose_cycle(rng, k, 1, 3);
        auto lc = recognize_loose_cycle(h);
        REQUIRE(lc.has_value());
        CHECK(lc->length == k);
        REQUIRE(static_cast<int>(lc->joints.size()) == k);
        REQUIRE(static_cast<int>(lc->privates.size()) == k);
        // Ordered edges really are {joint_i, private_i, joint_{i+1}}.
        for (int i = 0; i < k; ++i) {
            std::vector<VertexId> expect = {lc->joints[i], lc->privates[i],
                                            lc->joints[(i + 1) % k]};
            std::sort(expect.begin(), expect.end());
            CHECK(h.edges()[lc->edge_order[i]] == expect);
        }
    }
    CHECK_FALSE(recognize_loose_cycle(example_acyclic()).has_value());
    CHECK_FALSE(recognize_loose_cycle(fig_cycle3()).has_value());

    // Loose path: same shape with the wrap edge missing.
    WeightedHypergraph path;
    for (int i = 1; i <= 8; ++i) path.add_vertex(i, 2);
    path.add_edge({1, 5, 2});
    path.add_edge({2, 6, 3});
    path.add_edge({3, 7, 4});
    CHECK_FALSE(recognize_loose_cycle(path).has_value());
}

TEST_CASE("three-edge cycle recognition accepts the flagship weights") {
    auto s = recognize_cycle3_shape(fig_cycle3());
    REQUIRE(s.has_value());
    CHECK(s->product_ok);
    CHECK(s->mod_ok);
    CHECK(s->bound_ok);
    CHECK(s->conditions_ok());
    CHECK(s->v[0] == 0);
    CHECK(s->v[3] == 3);
    CHECK(s->v[4] == 4);
    CHECK(product_weight(fig_cycle3()) == 400);
}

TEST_CASE("three-edge cycle shape with failing weight conditions") {
    WeightedHypergraph h;
    int weights[5] = {4, 3, 2, 5, 1};
    for (int i = 0; i < 5; ++i) h.add_vertex(i, weights[i]);
    h.add_edge({0, 1, 2});
    h.add_edge({1, 2, 3});
    h.add_edge({3, 4, 0});
    auto s = recognize_cycle3_shape(h);
    REQUIRE(s.has_value());
    CHECK_FALSE(s->conditions_ok());

    // Same shape, anchor weight 7: 10 is not a multiple of 7.
    WeightedHypergraph h2;
    int w2[5] = {10, 8, 5, 7, 18};
    for (int i = 0; i < 5; ++i) h2.add_vertex(i, w2[i]);
    h2.add_edge({0, 1, 2});
    h2.add_edge({1, 2, 3});
    h2.add_edge({3, 4, 0});
    auto s2 = recognize_cycle3_shape(h2);
    REQUIRE(s2.has_value());
    CHECK_FALSE(s2->conditions_ok());
}

TEST_CASE("three-edge cycle recognition rejects other shapes") {
    CHECK_FALSE(recognize_cycle3_shape(example_acyclic()).has_value());
    std::mt19937 rng(34);
    CHECK_FALSE(
        recognize_cycle3_shape(testgen::loose_cycle(rng, 3, 2, 2)).has_value());
}

TEST_CASE("complete uniform hypergraphs") {
    auto k5 = complete_uniform(5, 3, {2, 2, 2, 2, 2});
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);
    CHECK(product_weight(k5) == 8);
    auto k4 = complete_uniform(4, 2, {1, 2, 3, 4});
    CHECK(k4.edge_count() == 6);
    CHECK(product_weight(k4) == 12);
    CHECK_THROWS_AS(complete_uniform(2, 3, {1, 1}), precondition_error);
    CHECK_THROWS_AS(complete_uniform(4, 4, {1, 1, 1, 1}), precondition_error);
    CHECK_THROWS_AS(complete_uniform(3, 3, {1, 1}), precondition_error);
}

TEST_CASE("random acyclic generator stays acyclic") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        WeightedHypergraph h = testgen::random_acyclic(rng, 12, 1, 4);
        CHECK(h.vertex_count() <= 12);
        CHECK(is_alpha_acyclic(h));
    }
}
