#include "hyperca/ops.hpp"

#include <sstream>
#include <utility>

#include "hyperca/core.hpp"
#include "hyperca/extension.hpp"
#include "hyperca/tripartite.hpp"

namespace hyperca {

namespace {

void require_fresh(const CoveringArray& c, VertexId u) {
    if (c.hypergraph().has_vertex(u))
        throw precondition_error("hook target vertex id " + std::to_string(u) +
                                 " already exists");
}

void require_present(const CoveringArray& c, VertexId v) {
    if (!c.hypergraph().has_vertex(v))
        throw precondition_error("hook anchor vertex id " + std::to_string(v) +
                                 " does not exist");
}

void require_weight(int weight) {
    if (weight < 1) throw precondition_error("hooked weight must be >= 1");
}

void require_product_fits(long long product, int n, const char* what) {
    if (product > n)
        throw precondition_error(std::string(what) +
                                 " weight product exceeds the array size");
}

struct NewRow {
    VertexId id;
    int weight;
    SymbolVector row;
};

CoveringArray rebuilt(const CoveringArray& c, const std::vector<NewRow>& added,
                      const std::vector<std::vector<VertexId>>& new_edges,
                      const std::vector<std::vector<VertexId>>& dropped_edges) {
    WeightedHypergraph h = c.hypergraph();
    bool had_edges = h.edge_count() > 0;
    long long pw_before = had_edges ? product_weight(h) : 0;

    for (const auto& r : added) h.add_vertex(r.id, r.weight);
    for (const auto& e : dropped_edges) h.remove_edge(e);
    for (const auto& e : new_edges) h.add_edge(e);

    if (had_edges && product_weight(h) != pw_before)
        throw precondition_error("hooking would change the product weight");

    std::map<VertexId, SymbolVector> rows = c.rows();
    for (const auto& r : added) rows.emplace(r.id, r.row);
    return CoveringArray(std::move(h), c.size(), std::move(rows));
}

}  // namespace

CoveringArray hook_edge_i(const CoveringArray& c, VertexId u, int weight,
                          VertexId v) {
    require_fresh(c, u);
    require_present(c, v);
    require_weight(weight);
    long long wv = c.hypergraph().weight_of(v);
    require_product_fits(static_cast<long long>(weight) * wv, c.size(), "edge");

    SymbolVector y = extend_balanced(c.row(v), weight);
    return rebuilt(c, {{u, weight, std::move(y)}}, {{u, v}}, {});
}

CoveringArray hook_edge_ii(const CoveringArray& c, VertexId u, int weight,
                           VertexId v, VertexId w) {
    require_fresh(c, u);
    require_present(c, v);
    require_present(c, w);
    if (v == w) throw precondition_error("edge hooking II needs two anchors");
    require_weight(weight);
    long long wv = c.hypergraph().weight_of(v);
    long long ww = c.hypergraph().weight_of(w);
    require_product_fits(weight * wv, c.size(), "edge");
    require_product_fits(weight * ww, c.size(), "edge");

    SymbolVector y = extend_pairwise_balanced_pair(c.row(v), c.row(w), weight);
    return rebuilt(c, {{u, weight, std::move(y)}}, {{u, v}, {u, w}}, {});
}

CoveringArray hook_two_vertex_hyperedge(const CoveringArray& c, VertexId u,
                                        int weight_u, VertexId v, int weight_v,
                                        VertexId w) {
    require_fresh(c, u);
    require_fresh(c, v);
    if (u == v)
        throw precondition_error("two-vertex hooking needs two fresh ids");
    require_present(c, w);
    require_weight(weight_u);
    require_weight(weight_v);
    long long ww = c.hypergraph().weight_of(w);
    require_product_fits(static_cast<long long>(weight_u) * weight_v * ww,
                         c.size(), "hyperedge");

    SymbolVector yu = extend_balanced(c.row(w), weight_u);
    SymbolVector yv = extend_3qi(c.row(w), yu, weight_v);
    return rebuilt(c,
                   {{u, weight_u, std::move(yu)}, {v, weight_v, std::move(yv)}},
                   {{u, v, w}}, {});
}

CoveringArray attach_hyperedge(const CoveringArray& c, VertexId u, int weight,
                               VertexId v, VertexId w) {
    require_fresh(c, u);
    require_present(c, v);
    require_present(c, w);
    if (v == w) throw precondition_error("hyperedge attachment needs two anchors");
    require_weight(weight);
    long long wv = c.hypergraph().weight_of(v);
    long long ww = c.hypergraph().weight_of(w);
    require_product_fits(weight * wv * ww, c.size(), "hyperedge");

    SymbolVector y = extend_3qi(c.row(v), c.row(w), weight);
    return rebuilt(c, {{u, weight, std::move(y)}}, {{u, v, w}}, {});
}

CoveringArray hook_hyperedge_i(const CoveringArray& c, VertexId u, int weight,
                               VertexId v, VertexId w) {
    require_present(c, v);
    require_present(c, w);
    std::vector<VertexId> old_edge{std::min(v, w), std::max(v, w)};
    if (!c.hypergraph().has_edge(old_edge))
        throw precondition_error("hyperedge hooking I needs an existing edge {" +
                                 std::to_string(v) + "," + std::to_string(w) +
                                 "}");
    require_fresh(c, u);
    require_weight(weight);
    long long wv = c.hypergraph().weight_of(v);
    long long ww = c.hypergraph().weight_of(w);
    require_product_fits(weight * wv * ww, c.size(), "hyperedge");

    SymbolVector y = extend_3qi(c.row(v), c.row(w), weight);
    return rebuilt(c, {{u, weight, std::move(y)}}, {{u, v, w}}, {old_edge});
}

CoveringArray hook_hyperedge_ii(const CoveringArray& c, VertexId u, int weight,
                                VertexId v, VertexId w, VertexId z) {
    require_fresh(c, u);
    require_present(c, v);
    require_present(c, w);
    require_present(c, z);
    require_weight(weight);
    std::vector<VertexId> witness{v, w, z};
    std::sort(witness.begin(), witness.end());
    if (v == w || w == z || v == z ||
        !c.hypergraph().has_edge(witness))
        throw precondition_error(
            "hyperedge hooking II needs an existing witness hyperedge {" +
            std::to_string(v) + "," + std::to_string(w) + "," +
            std::to_string(z) + "}");

    int n = c.size();
    long long wv = c.hypergraph().weight_of(v);
    long long ww = c.hypergraph().weight_of(w);
    long long wz = c.hypergraph().weight_of(z);
    require_product_fits(weight * wv * ww, c.size(), "hyperedge");
    require_product_fits(weight * wz, c.size(), "edge");
    if (weight >= 3 && (n / (wv * ww)) % weight != 0)
        throw precondition_error(
            "hyperedge hooking II needs floor(n / (w(v) w(w))) divisible by "
            "the hooked weight");

    // The row synthesis bounds the new alphabet by floor(n/(g1 g2)) and
    // floor(n/(g1 g3)) where g1 belongs to the first anchor; either anchor
    // order works for the hyperedge, so try both.
    auto fits = [&](long long g1, long long g2) {
        return weight <= std::min(n / (g1 * g2), n / (g1 * wz));
    };
    SymbolVector y = [&] {
        if (fits(wv, ww))
            return extend_3qi_constrained(c.row(v), c.row(w), c.row(z), weight);
        if (fits(ww, wv))
            return extend_3qi_constrained(c.row(w), c.row(v), c.row(z), weight);
        throw precondition_error(
            "hyperedge hooking II weight exceeds the row synthesis bound for "
            "both anchor orders");
    }();
    return rebuilt(c, {{u, weight, std::move(y)}}, {{u, v, w}, {u, z}}, {});
}

CoveringArray apply_step(const CoveringArray& c, const HookStep& step) {
    auto want = [&](size_t ids, size_t weights, size_t anchors) {
        if (step.new_ids.size() != ids || step.new_weights.size() != weights ||
            step.anchors.size() != anchors)
            throw input_error("malformed hook step");
    };
    switch (step.kind) {
        case HookStep::Kind::EdgeHookI:
            want(1, 1, 1);
            return hook_edge_i(c, step.new_ids[0], step.new_weights[0],
                               step.anchors[0]);
        case HookStep::Kind::EdgeHookII:
            want(1, 1, 2);
            return hook_edge_ii(c, step.new_ids[0], step.new_weights[0],
                                step.anchors[0], step.anchors[1]);
        case HookStep::Kind::TwoVertexHyperedgeHook:
            want(2, 2, 1);
            return hook_two_vertex_hyperedge(c, step.new_ids[0],
                                             step.new_weights[0],
                                             step.new_ids[1],
                                             step.new_weights[1],
                                             step.anchors[0]);
        case HookStep::Kind::HyperedgeHookI:
            want(1, 1, 2);
            return hook_hyperedge_i(c, step.new_ids[0], step.new_weights[0],
                                    step.anchors[0], step.anchors[1]);
        case HookStep::Kind::HyperedgeHookII:
            want(1, 1, 2);
            return hook_hyperedge_ii(c, step.new_ids[0], step.new_weights[0],
                                     step.anchors[0], step.anchors[1], step.z);
    }
    throw input_error("malformed hook step");
}

CoveringArray apply_sequence(const CoveringArray& c,
                             const std::vector<HookStep>& steps) {
    CoveringArray out = c;
    for (size_t i = 0; i < steps.size(); ++i) {
        try {
            out = apply_step(out, steps[i]);
        } catch (const input_error& e) {
            throw input_error("step " + std::to_string(i + 1) + ": " +
                              e.what());
        } catch (const precondition_error& e) {
            throw precondition_error("step " + std::to_string(i + 1) + ": " +
                                     e.what());
        }
    }
    return out;
}

namespace {

std::vector<long long> parse_int_list(const std::string& value,
                                      const std::string& key) {
    std::vector<long long> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw input_error("hook step: bad integer '" + item + "' in " +
                              key + "=");
        }
    }
    if (out.empty())
        throw input_error("hook step: empty value for " + key + "=");
    return out;
}

std::string join_ids(const std::vector<VertexId>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

HookStep parse_hook_step(const std::string& line) {
    std::istringstream in(line);
    std::string kind_word;
    if (!(in >> kind_word)) throw input_error("hook step: empty line");

    HookStep step;
    std::vector<std::pair<std::string, size_t>> shape;  // key, list length
    if (kind_word == "hookI") {
        step.kind = HookStep::Kind::EdgeHookI;
        shape = {{"u", 1}, {"w", 1}, {"anchor", 1}};
    } else if (kind_word == "hookII") {
        step.kind = HookStep::Kind::EdgeHookII;
        shape = {{"u", 1}, {"w", 1}, {"anchors", 2}};
    } else if (kind_word == "hook2v") {
        step.kind = HookStep::Kind::TwoVertexHyperedgeHook;
        shape = {{"u", 2}, {"w", 2}, {"anchor", 1}};
    } else if (kind_word == "hhookI") {
        step.kind = HookStep::Kind::HyperedgeHookI;
        shape = {{"u", 1}, {"w", 1}, {"edge", 2}};
    } else if (kind_word == "hhookII") {
        step.kind = HookStep::Kind::HyperedgeHookII;
        shape = {{"u", 1}, {"w", 1}, {"pair", 2}, {"z", 1}};
    } else {
        throw input_error("hook step: unknown operation '" + kind_word + "'");
    }

    std::string token;
    size_t next = 0;
    std::vector<std::vector<long long>> values(shape.size());
    while (in >> token) {
        if (next >= shape.size())
            throw input_error("hook step: unexpected token '" + token + "'");
        const auto& [key, len] = shape[next];
        std::string prefix = key + "=";
        if (token.rfind(prefix, 0) != 0)
            throw input_error("hook step: expected " + prefix +
                              "..., got '" + token + "'");
        values[next] = parse_int_list(token.substr(prefix.size()), key);
        if (values[next].size() != len)
            throw input_error("hook step: " + prefix + " needs " +
                              std::to_string(len) + " value(s)");
        ++next;
    }
    if (next != shape.size())
        throw input_error("hook step: missing " + shape[next].first + "=");

    auto as_ids = [](const std::vector<long long>& xs) {
        return std::vector<VertexId>(xs.begin(), xs.end());
    };
    step.new_ids = as_ids(values[0]);
    step.new_weights.assign(values[1].begin(), values[1].end());
    step.anchors = as_ids(values[2]);
    if (step.kind == HookStep::Kind::HyperedgeHookII)
        step.z = static_cast<VertexId>(values[3][0]);
    return step;
}

std::string format_hook_step(const HookStep& step) {
    switch (step.kind) {
        case HookStep::Kind::EdgeHookI:
            return "hookI u=" + join_ids(step.new_ids) +
                   " w=" + join_ints(step.new_weights) +
                   " anchor=" + join_ids(step.anchors);
        case HookStep::Kind::EdgeHookII:
            return "hookII u=" + join_ids(step.new_ids) +
                   " w=" + join_ints(step.new_weights) +
                   " anchors=" + join_ids(step.anchors);
        case HookStep::Kind::TwoVertexHyperedgeHook:
            return "hook2v u=" + join_ids(step.new_ids) +
                   " w=" + join_ints(step.new_weights) +
                   " anchor=" + join_ids(step.anchors);
        case HookStep::Kind::HyperedgeHookI:
            return "hhookI u=" + join_ids(step.new_ids) +
                   " w=" + join_ints(step.new_weights) +
                   " edge=" + join_ids(step.anchors);
        case HookStep::Kind::HyperedgeHookII:
            return "hhookII u=" + join_ids(step.new_ids) +
                   " w=" + join_ints(step.new_weights) +
                   " pair=" + join_ids(step.anchors) +
                   " z=" + std::to_string(step.z);
    }
    throw input_error("malformed hook step");
}

}  // namespace hyperca
