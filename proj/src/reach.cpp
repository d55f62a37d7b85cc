#include "relsep/reach.hpp"

#include <stdexcept>

namespace relsep {

ActiveReach active_reach(const Graph& g, VertexId x, const VertexSubset& w) {
    if (x < 0 || x >= g.size()) throw std::out_of_range("vertex index out of range");
    if (w.universe_size() != g.size())
        throw std::invalid_argument("subset universe does not match graph");

    const int n = g.size();
    const Relation& e = g.edges();
    const VertexSubset w_closure = ancestral_closure(g, w);

    ActiveReach reach{VertexSubset(n), VertexSubset(n)};
    for (VertexId u = 0; u < n; ++u) {
        if (e.test(x, u)) reach.ends_plus.set(u);
        if (e.test(u, x)) reach.ends_minus.set(u);
    }

    // Round-robin sweeps in (vertex, orientation) order until stable. The
    // fixed point must run to convergence: states discovered late (e.g.
    // colliders reopened through the conditioning set) feed earlier ones.
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < n; ++v) {
            for (int orient : {+1, -1}) {
                const bool marked = orient == +1 ? reach.ends_plus.test(v) : reach.ends_minus.test(v);
                if (!marked) continue;
                const bool chain_open = !w.test(v);
                const bool collider_open = orient == +1 && w_closure.test(v);
                for (VertexId u = 0; u < n; ++u) {
                    if (chain_open && e.test(v, u) && !reach.ends_plus.test(u)) {
                        reach.ends_plus.set(u);
                        changed = true;
                    }
                    if (e.test(u, v) && !reach.ends_minus.test(u) &&
                        (collider_open || (orient == -1 && chain_open))) {
                        reach.ends_minus.set(u);
                        changed = true;
                    }
                }
            }
        }
    }
    return reach;
}

bool d_connected_reach(const Graph& g, VertexId x, VertexId y, const VertexSubset& w) {
    if (y < 0 || y >= g.size()) throw std::out_of_range("vertex index out of range");
    if (x == y) return true;
    return active_reach(g, x, w).reaches(y);
}

}  // namespace relsep
