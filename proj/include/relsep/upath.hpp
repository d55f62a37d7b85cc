#ifndef RELSEP_UPATH_HPP
#define RELSEP_UPATH_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relsep/graph.hpp"

namespace relsep {

/// A walk along directed edges: n+1 vertices for n steps, consecutive
/// vertices joined by an edge. Length 0 is the trivial walk at a vertex
/// without a loop. Not required to be simple.
struct EdgePath {
    std::vector<VertexId> verts;

    int length() const { return static_cast<int>(verts.size()) - 1; }
    VertexId tail() const { return verts.front(); }
    VertexId head() const { return verts.back(); }
};

/// A walk through edges taken forward (+1) or backward (-1): n+1 vertices
/// plus an orientation word of length n. Step i runs verts[i] -> verts[i+1]
/// along an edge when orients[i] == +1, against one when orients[i] == -1.
struct UndirectedPath {
    std::vector<VertexId> verts;
    std::vector<int> orients;

    int length() const { return static_cast<int>(orients.size()); }
    VertexId tail() const { return verts.front(); }
    VertexId head() const { return verts.back(); }

    bool operator==(const UndirectedPath& other) const {
        return verts == other.verts && orients == other.orients;
    }
};

std::pair<VertexId, VertexId> endpoints(const EdgePath& p);
std::pair<VertexId, VertexId> endpoints(const UndirectedPath& p);

/// The vertices strictly between the endpoints (empty for length <= 1).
VertexSubset intermediates(const EdgePath& p, int universe_size);
VertexSubset intermediates(const UndirectedPath& p, int universe_size);

/// Joins two paths at a shared endpoint; length-0 operands act as
/// identities. Throws std::invalid_argument on endpoint mismatch.
UndirectedPath concatenate(const UndirectedPath& p, const UndirectedPath& q);

/// True iff every step uses an edge of g in the recorded direction, the
/// vertex count matches the orientation word, and a length-0 path sits at a
/// loop-free vertex.
bool is_valid(const UndirectedPath& p, const Graph& g);
bool is_valid(const EdgePath& p, const Relation& edges);

/// The junction test: a path of length <= 1 is active; otherwise every
/// junction v between consecutive steps must satisfy one of
///   (+1,+1), (-1,-1), (-1,+1) with v outside w, or
///   (+1,-1) with v in the ancestral closure of w.
/// Throws std::invalid_argument if p is not a valid path of g.
bool is_active(const UndirectedPath& p, const Graph& g, const VertexSubset& w);
bool is_active(const UndirectedPath& p, const Graph& g, const VertexSubset& w,
               const VertexSubset& w_closure);

/// Visits every undirected path with endpoints (x, y) of length <= max_len,
/// in length-lexicographic order (per step: head vertex index, then +1
/// before -1). The visitor returns false to stop early.
void visit_undirected_paths(const Graph& g, VertexId x, VertexId y, int max_len,
                            const std::function<bool(const UndirectedPath&)>& visit);

std::vector<UndirectedPath> enumerate_undirected_paths(const Graph& g, VertexId x, VertexId y,
                                                       int max_len);

/// True iff some undirected path with endpoints (x, y) of length <= max_len
/// is active. Sound at any bound; reaches every connected pair once
/// max_len >= path_length_bound(g).
bool exists_active_path_bounded(const Graph& g, VertexId x, VertexId y, const VertexSubset& w,
                                int max_len);

/// Enumeration bound that suffices for completeness: 2 * |V| + 2.
int path_length_bound(const Graph& g);

/// The endpoint pairs of a set of paths, as a relation.
Relation endpoint_relation(const std::vector<UndirectedPath>& paths, int universe_size);

/// Text form `a -[+]-> b -[-]-> c`; a length-0 path prints as its vertex.
std::string to_string(const UndirectedPath& p, const Graph& g);
std::string to_string(const EdgePath& p, const Graph& g);

}  // namespace relsep

#endif
