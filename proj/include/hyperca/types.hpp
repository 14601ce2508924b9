#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperca {

using VertexId = int;

/// Malformed files, models, arrays or step scripts.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A stated operation precondition does not hold for the given arguments.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance falls outside a supported class or an exact-mode size cap.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search ran out of its node budget before reaching a verdict.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row of symbols over Z_g. Immutable after construction.
class SymbolVector {
public:
    SymbolVector(std::vector<int> symbols, int alphabet)
        : symbols_(std::move(symbols)), alphabet_(alphabet) {
        if (alphabet_ < 1)
            throw precondition_error("symbol vector alphabet must be >= 1");
        if (symbols_.empty())
            throw precondition_error("symbol vector must have length >= 1");
        for (int s : symbols_)
            if (s < 0 || s >= alphabet_)
                throw precondition_error("symbol " + std::to_string(s) +
                                         " out of range for alphabet " +
                                         std::to_string(alphabet_));
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    int alphabet() const { return alphabet_; }
    int operator[](int i) const { return symbols_[static_cast<size_t>(i)]; }
    const std::vector<int>& symbols() const { return symbols_; }

    /// Occurrences of each symbol 0..g-1.
    std::vector<int> counts() const {
        std::vector<int> c(static_cast<size_t>(alphabet_), 0);
        for (int s : symbols_) ++c[static_cast<size_t>(s)];
        return c;
    }

    friend bool operator==(const SymbolVector& a, const SymbolVector& b) {
        return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
    }

private:
    std::vector<int> symbols_;
    int alphabet_;
};

/// Vertex-weighted hypergraph with edges of size 2 or 3. Size-2 edges are
/// legal construction intermediates. Edges are stored sorted; exact duplicate
/// edges are rejected, subset edges are legal but reported by is_simple().
class WeightedHypergraph {
public:
    struct Vertex {
        VertexId id;
        int weight;
    };

    void add_vertex(VertexId id, int weight) {
        if (weight < 1)
            throw input_error("vertex " + std::to_string(id) +
                              ": weight must be >= 1");
        if (weight_.count(id))
            throw input_error("duplicate vertex id " + std::to_string(id));
        vertices_.push_back({id, weight});
        weight_[id] = weight;
    }

    void add_edge(std::vector<VertexId> verts) {
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw input_error("edge repeats a vertex");
        if (verts.size() != 2 && verts.size() != 3)
            throw input_error("edges must have 2 or 3 vertices");
        for (VertexId v : verts)
            if (!weight_.count(v))
                throw input_error("edge references unknown vertex " +
                                  std::to_string(v));
        if (has_edge(verts))
            throw input_error("duplicate edge");
        edges_.push_back(std::move(verts));
    }

    /// Removes the edge with exactly these vertices; error if absent.
    void remove_edge(std::vector<VertexId> verts) {
        std::sort(verts.begin(), verts.end());
        auto it = std::find(edges_.begin(), edges_.end(), verts);
        if (it == edges_.end())
            throw precondition_error("edge to remove is not present");
        edges_.erase(it);
    }

    bool has_vertex(VertexId id) const { return weight_.count(id) != 0; }

    bool has_edge(std::vector<VertexId> verts) const {
        std::sort(verts.begin(), verts.end());
        return std::find(edges_.begin(), edges_.end(), verts) != edges_.end();
    }

    int weight_of(VertexId id) const {
        auto it = weight_.find(id);
        if (it == weight_.end())
            throw precondition_error("unknown vertex " + std::to_string(id));
        return it->second;
    }

    int degree(VertexId id) const {
        int d = 0;
        for (const auto& e : edges_)
            if (std::find(e.begin(), e.end(), id) != e.end()) ++d;
        return d;
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::vector<VertexId> isolated_vertices() const {
        std::vector<VertexId> out;
        for (const auto& v : vertices_)
            if (degree(v.id) == 0) out.push_back(v.id);
        return out;
    }

    /// True when no edge is contained in a different edge.
    bool is_simple() const {
        for (size_t i = 0; i < edges_.size(); ++i)
            for (size_t j = 0; j < edges_.size(); ++j) {
                if (i == j) continue;
                if (std::includes(edges_[j].begin(), edges_[j].end(),
                                  edges_[i].begin(), edges_[i].end()))
                    return false;
            }
        return true;
    }

    friend bool operator==(const WeightedHypergraph& a,
                           const WeightedHypergraph& b) {
        if (a.weight_ != b.weight_) return false;
        auto ea = a.edges_, eb = b.edges_;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea == eb;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<VertexId>> edges_;
    std::map<VertexId, int> weight_;
};

/// Candidate covering array: one row per hypergraph vertex, row alphabet
/// equal to the vertex weight, all rows of common length n.
class CoveringArray {
public:
    CoveringArray(WeightedHypergraph hypergraph, int n,
                  std::map<VertexId, SymbolVector> rows)
        : hypergraph_(std::move(hypergraph)), n_(n), rows_(std::move(rows)) {
        if (n_ < 1) throw precondition_error("array size n must be >= 1");
        for (const auto& v : hypergraph_.vertices()) {
            auto it = rows_.find(v.id);
            if (it == rows_.end())
                throw precondition_error("missing row for vertex " +
                                         std::to_string(v.id));
            if (it->second.size() != n_)
                throw precondition_error("row length mismatch for vertex " +
                                         std::to_string(v.id));
            if (it->second.alphabet() != v.weight)
                throw precondition_error(
                    "row alphabet does not match weight of vertex " +
                    std::to_string(v.id));
        }
        if (rows_.size() != static_cast<size_t>(hypergraph_.vertex_count()))
            throw precondition_error("row present for unknown vertex");
    }

    const WeightedHypergraph& hypergraph() const { return hypergraph_; }
    int size() const { return n_; }
    const SymbolVector& row(VertexId id) const {
        auto it = rows_.find(id);
        if (it == rows_.end())
            throw precondition_error("no row for vertex " + std::to_string(id));
        return it->second;
    }
    const std::map<VertexId, SymbolVector>& rows() const { return rows_; }

    friend bool operator==(const CoveringArray& a, const CoveringArray& b) {
        return a.n_ == b.n_ && a.hypergraph_ == b.hypergraph_ &&
               a.rows_ == b.rows_;
    }

private:
    WeightedHypergraph hypergraph_;
    int n_;
    std::map<VertexId, SymbolVector> rows_;
};

struct Violation {
    enum class Kind { MissingTuple, UnbalancedRow, UnbalancedPair };
    Kind kind;
    std::vector<VertexId> where;  // the edge, row or pair involved
    std::vector<int> tuple;       // missing tuple, aligned with `where`
    std::string detail;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

std::string format_violation(const Violation& v);

}  // namespace hyperca
