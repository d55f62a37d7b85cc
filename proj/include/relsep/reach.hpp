#ifndef RELSEP_REACH_HPP
#define RELSEP_REACH_HPP

#include "relsep/graph.hpp"

namespace relsep {

/// Vertices reachable from a source by an active undirected path, split by
/// the orientation of the path's final step.
struct ActiveReach {
    VertexSubset ends_plus;
    VertexSubset ends_minus;

    bool reaches(VertexId v) const { return ends_plus.test(v) || ends_minus.test(v); }
};

/// Least fixed point over (vertex, last-orientation) states.
/// Seeds: (u,+1) for each edge x->u, (u,-1) for each edge u->x.
/// Transitions from (v,+1): to (u,+1) if v outside w and v->u; to (u,-1) if
/// v in the ancestral closure of w and u->v. From (v,-1): to (u,+1) if v
/// outside w and v->u; to (u,-1) if v outside w and u->v.
ActiveReach active_reach(const Graph& g, VertexId x, const VertexSubset& w);

/// True iff x == y or some state (y, +1) / (y, -1) is reachable.
bool d_connected_reach(const Graph& g, VertexId x, VertexId y, const VertexSubset& w);

}  // namespace relsep

#endif
