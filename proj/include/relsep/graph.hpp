#ifndef RELSEP_GRAPH_HPP
#define RELSEP_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "relsep/relation.hpp"

namespace relsep {

/// A directed graph over named vertices: a name table plus an edge relation.
/// Loops and cycles are allowed; there is at most one edge per ordered pair.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> names, Relation edges);

    int size() const { return edges_.universe_size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VertexId v) const;
    const Relation& edges() const { return edges_; }

    std::optional<VertexId> find(std::string_view name) const;
    /// Like find() but throws std::invalid_argument for unknown names.
    VertexId index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    Relation edges_;
};

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& what);
    int line;
};

/// Reads the edge-list format: one `SRC -> DST` per line, `node NAME` for
/// isolated vertices, `#` comments, blank lines ignored. Vertex order is
/// first-appearance order; duplicate edges are idempotent.
Graph parse_edge_list(std::string_view text);

/// Emits `node` lines for isolated vertices first, then edges in row-major
/// matrix order. parse(serialize(g)) reproduces g.
std::string serialize_edge_list(const Graph& g);

bool valid_vertex_name(std::string_view name);

struct GraphClass {
    bool directed = false;
    bool undirected = false;
    bool has_loops = false;
};

/// directed iff no edge has its reverse present; undirected iff every edge
/// does; has_loops iff some (v,v) is an edge.
GraphClass classify(const Graph& g);

/// Same vertices, edge set closed under reversal.
Graph undirected_extension(const Graph& g);

/// All vertices that reach w along directed edges, including w itself.
VertexSubset ancestral_closure(const Graph& g, const VertexSubset& w);

/// The subgraph induced by `keep`: vertices of `keep` (names preserved,
/// first-appearance order), edges restricted to keep x keep.
Graph induced_subgraph(const Graph& g, const VertexSubset& keep);

}  // namespace relsep

#endif
