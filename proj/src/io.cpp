#include "hyperca/io.hpp"

#include <map>
#include <set>
#include <sstream>

namespace hyperca {

namespace {

input_error at_line(int line, const std::string& what) {
    return input_error("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& token, int line, const char* what) {
    try {
        size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw at_line(line, std::string("bad ") + what + " '" + token + "'");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;  // trailing comment
        out.push_back(t);
    }
    return out;
}

}  // namespace

WeightedHypergraph parse_hypergraph(const std::string& text) {
    WeightedHypergraph h;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens_of(line);
        if (t.empty()) continue;
        if (t[0] == "v") {
            if (t.size() != 3)
                throw at_line(lineno, "expected 'v <id> <weight>'");
            long long id = parse_int(t[1], lineno, "vertex id");
            long long weight = parse_int(t[2], lineno, "weight");
            if (weight < 1 || weight > 1'000'000)
                throw at_line(lineno, "bad weight '" + t[2] + "'");
            try {
                h.add_vertex(static_cast<VertexId>(id),
                             static_cast<int>(weight));
            } catch (const input_error& e) {
                throw at_line(lineno, e.what());
            }
        } else if (t[0] == "e") {
            if (t.size() != 3 && t.size() != 4)
                throw at_line(lineno, "expected 'e <id> <id> [<id>]'");
            std::vector<VertexId> verts;
            for (std::size_t i = 1; i < t.size(); ++i)
                verts.push_back(static_cast<VertexId>(
                    parse_int(t[i], lineno, "vertex id")));
            try {
                h.add_edge(std::move(verts));
            } catch (const input_error& e) {
                throw at_line(lineno, e.what());
            }
        } else {
            throw at_line(lineno, "unknown directive '" + t[0] + "'");
        }
    }
    return h;
}

std::string emit_hypergraph(const WeightedHypergraph& h) {
    std::ostringstream out;
    for (const auto& v : h.vertices()) out << "v " << v.id << ' ' << v.weight
                                           << '\n';
    for (const auto& e : h.edges()) {
        out << 'e';
        for (VertexId v : e) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

ArrayDocument parse_array(const std::string& text) {
    ArrayDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long declared_k = -1;
    bool saw_header = false;
    std::set<VertexId> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens_of(line);
        if (t.empty()) continue;
        if (!saw_header) {
            if (t.size() != 3 || t[0] != "ca" || t[1].rfind("n=", 0) != 0 ||
                t[2].rfind("k=", 0) != 0)
                throw at_line(lineno, "expected header 'ca n=<n> k=<k>'");
            long long n = parse_int(t[1].substr(2), lineno, "array size");
            declared_k = parse_int(t[2].substr(2), lineno, "row count");
            if (n < 1) throw at_line(lineno, "array size must be >= 1");
            if (declared_k < 0) throw at_line(lineno, "row count must be >= 0");
            doc.n = static_cast<int>(n);
            saw_header = true;
            continue;
        }
        if (t[0] != "row" || t.size() < 4 || t[1].empty() ||
            t[2].rfind("g=", 0) != 0 || t[2].back() != ':')
            throw at_line(lineno, "expected 'row <id> g=<g>: s1 ... sn'");
        VertexId id =
            static_cast<VertexId>(parse_int(t[1], lineno, "vertex id"));
        if (!seen.insert(id).second)
            throw at_line(lineno, "duplicate row for vertex " +
                                      std::to_string(id));
        std::string gtok = t[2].substr(2, t[2].size() - 3);
        long long g = parse_int(gtok, lineno, "alphabet size");
        if (g < 1) throw at_line(lineno, "alphabet size must be >= 1");
        std::vector<int> symbols;
        for (std::size_t i = 3; i < t.size(); ++i) {
            long long s = parse_int(t[i], lineno, "symbol");
            if (s < 0 || s >= g)
                throw at_line(lineno, "symbol '" + t[i] +
                                          "' outside alphabet of size " +
                                          std::to_string(g));
            symbols.push_back(static_cast<int>(s));
        }
        if (static_cast<int>(symbols.size()) != doc.n)
            throw at_line(lineno, "row has " + std::to_string(symbols.size()) +
                                      " symbols, expected " +
                                      std::to_string(doc.n));
        doc.rows.emplace_back(
            id, SymbolVector(std::move(symbols), static_cast<int>(g)));
    }
    if (!saw_header) throw input_error("array file has no header line");
    if (declared_k != static_cast<long long>(doc.rows.size()))
        throw input_error("header declares k=" + std::to_string(declared_k) +
                          " but file has " + std::to_string(doc.rows.size()) +
                          " rows");
    return doc;
}

CoveringArray bind_array(const ArrayDocument& doc,
                         const WeightedHypergraph& h) {
    std::map<VertexId, SymbolVector> rows;
    for (const auto& [id, row] : doc.rows) {
        if (!h.has_vertex(id))
            throw input_error("array row for unknown vertex " +
                              std::to_string(id));
        if (row.alphabet() != h.weight_of(id))
            throw input_error("row for vertex " + std::to_string(id) +
                              " has alphabet " +
                              std::to_string(row.alphabet()) +
                              ", model says " +
                              std::to_string(h.weight_of(id)));
        rows.emplace(id, row);
    }
    try {
        return CoveringArray(h, doc.n, std::move(rows));
    } catch (const precondition_error& e) {
        throw input_error(e.what());
    }
}

std::string emit_array(const CoveringArray& c) {
    std::ostringstream out;
    out << "ca n=" << c.size() << " k=" << c.rows().size() << '\n';
    for (const auto& [id, row] : c.rows()) {
        out << "row " << id << " g=" << row.alphabet() << ':';
        for (int i = 0; i < row.size(); ++i) out << ' ' << row[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace hyperca
