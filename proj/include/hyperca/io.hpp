#pragma once

#include <string>

#include "hyperca/types.hpp"

namespace hyperca {

// Line-oriented plain-text formats.
//
// Model:   `v <id> <weight>` and `e <id> <id> [<id>]`, `#` starts a comment.
// Array:   header `ca n=<n> k=<k>`, then one `row <id> g=<g>: s1 ... sn`
//          line per vertex, sorted by id.
//
// parse(emit(x)) is the identity for both formats.

WeightedHypergraph parse_hypergraph(const std::string& text);
std::string emit_hypergraph(const WeightedHypergraph& h);

/// An array file before it is checked against a hypergraph.
struct ArrayDocument {
    int n = 0;
    std::vector<std::pair<VertexId, SymbolVector>> rows;  // in file order
};

ArrayDocument parse_array(const std::string& text);

/// Marries a parsed array to its model, validating ids and alphabets.
CoveringArray bind_array(const ArrayDocument& doc, const WeightedHypergraph& h);

std::string emit_array(const CoveringArray& c);

}  // namespace hyperca
