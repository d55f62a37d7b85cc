#ifndef RELSEP_MORAL_HPP
#define RELSEP_MORAL_HPP

#include "relsep/graph.hpp"
#include "relsep/upath.hpp"

namespace relsep {

/// The symmetric relation (E | E converse(E)) | converse(E | E converse(E)):
/// both orientations of every edge plus a marriage step between any two
/// vertices sharing a child.
Relation moral_relation(const Graph& g);

/// The ancestral moral stage for a (b, c, w) query. All relations are
/// carried on the full universe with support inside `ancestral`.
struct MoralContext {
    VertexSubset ancestral;  // every vertex that reaches b, c or w
    Relation edges;          // edge relation restricted to the ancestral set
    Relation moral;          // moral relation of the restricted subgraph
};

/// Requires b, c, w pairwise disjoint (throws std::invalid_argument).
MoralContext build_moral_context(const Graph& g, const VertexSubset& b, const VertexSubset& c,
                                 const VertexSubset& w);

/// True iff no walk b -> ... -> c through the ancestral moral relation keeps
/// every intermediate vertex outside w; decided by emptiness of
/// D_b M (D_{~w} M)* D_c. Requires pairwise disjoint inputs.
bool morally_blocked(const Graph& g, const VertexSubset& b, const VertexSubset& c,
                     const VertexSubset& w);
bool morally_blocked(const MoralContext& ctx, const VertexSubset& b, const VertexSubset& c,
                     const VertexSubset& w);

/// Rewrites an active undirected path as an edge path of the moral relation
/// with the same endpoints: every (+1,-1) collider vertex is dropped and its
/// two parents joined by their marriage step. Throws std::invalid_argument
/// if p is not active w.r.t. w.
EdgePath moral_path_from_active(const Graph& g, const UndirectedPath& p, const VertexSubset& w);

}  // namespace relsep

#endif
