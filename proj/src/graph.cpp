#include "relsep/graph.hpp"

#include <sstream>
#include <utility>

namespace relsep {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph::Graph(std::vector<std::string> names, Relation edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
    if (static_cast<int>(names_.size()) != edges_.universe_size())
        throw std::invalid_argument("name table size does not match edge relation universe");
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate vertex name: " + names_[i]);
    }
}

const std::string& Graph::name(VertexId v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("vertex index out of range");
    return names_[v];
}

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::index_of(std::string_view name) const {
    auto v = find(name);
    if (!v) throw std::invalid_argument("unknown vertex: " + std::string(name));
    return *v;
}

ParseError::ParseError(int line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}

bool valid_vertex_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
        if (c == '#' || c == '-' || c == '>') return false;
    }
    return true;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::pair<VertexId, VertexId>> edge_pairs;

    auto intern = [&](std::string_view name, int line_no) -> VertexId {
        if (!valid_vertex_name(name))
            throw ParseError(line_no, "invalid vertex name '" + std::string(name) + "'");
        auto it = index.find(std::string(name));
        if (it != index.end()) return it->second;
        VertexId v = static_cast<VertexId>(names.size());
        names.emplace_back(name);
        index.emplace(names.back(), v);
        return v;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (auto arrow = line.find("->"); arrow != std::string_view::npos) {
            VertexId src = intern(trim(line.substr(0, arrow)), line_no);
            VertexId dst = intern(trim(line.substr(arrow + 2)), line_no);
            edge_pairs.emplace_back(src, dst);
        } else if (line.substr(0, 4) == "node" && line.size() > 4 && (line[4] == ' ' || line[4] == '\t')) {
            intern(trim(line.substr(5)), line_no);
        } else {
            throw ParseError(line_no, "expected 'SRC -> DST' or 'node NAME'");
        }
    }

    Relation edges(static_cast<int>(names.size()));
    for (auto [s, d] : edge_pairs) edges.set(s, d);
    return Graph(std::move(names), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    const Relation& e = g.edges();
    for (int v = 0; v < g.size(); ++v) {
        bool isolated = true;
        for (int u = 0; u < g.size() && isolated; ++u)
            if (e.test(v, u) || e.test(u, v)) isolated = false;
        if (isolated) out << "node " << g.name(v) << "\n";
    }
    for (int b = 0; b < g.size(); ++b)
        for (int c = 0; c < g.size(); ++c)
            if (e.test(b, c)) out << g.name(b) << " -> " << g.name(c) << "\n";
    return out.str();
}

GraphClass classify(const Graph& g) {
    const Relation& e = g.edges();
    const Relation conv = converse(e);
    GraphClass c;
    c.directed = (e & conv).is_empty();
    c.undirected = (e == conv);
    c.has_loops = !(e & Relation::identity(g.size())).is_empty();
    return c;
}

Graph undirected_extension(const Graph& g) {
    return Graph(g.names(), g.edges() | converse(g.edges()));
}

VertexSubset ancestral_closure(const Graph& g, const VertexSubset& w) {
    return foreset(reflexive_transitive_closure(g.edges()), w);
}

Graph induced_subgraph(const Graph& g, const VertexSubset& keep) {
    if (keep.universe_size() != g.size())
        throw std::invalid_argument("subset universe does not match graph");
    std::vector<std::string> names;
    std::vector<VertexId> old_ids;
    for (int v = 0; v < g.size(); ++v) {
        if (keep.test(v)) {
            names.push_back(g.name(v));
            old_ids.push_back(v);
        }
    }
    Relation edges(static_cast<int>(names.size()));
    for (int b = 0; b < static_cast<int>(old_ids.size()); ++b)
        for (int c = 0; c < static_cast<int>(old_ids.size()); ++c)
            if (g.edges().test(old_ids[b], old_ids[c])) edges.set(b, c);
    return Graph(std::move(names), std::move(edges));
}

}  // namespace relsep
