#include "relsep/dsep.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace relsep {

RelationBundle build_bundle(const Graph& g, const VertexSubset& w) {
    if (w.universe_size() != g.size())
        throw std::invalid_argument("subset universe does not match graph");
    const int n = g.size();
    const Relation& e = g.edges();
    const Relation ident = Relation::identity(n);

    RelationBundle b;
    b.w = w;
    b.w_star = ancestral_closure(g, w);

    b.parental = compose(diagonal(~w), e);
    b.ascendent = compose(e, reflexive_transitive_closure(b.parental));
    b.ascendent_conv = converse(b.ascendent);
    b.common_cause = compose(transitive_closure(converse(b.parental)), transitive_closure(b.parental));

    auto cousin = [&](const VertexSubset& s) {
        const Relation d = diagonal(s);
        return transitive_closure(compose(compose(d, b.common_cause), d)) | d;
    };
    b.cousinhood = cousin(w);
    b.cousinhood_star = cousin(b.w_star);

    const Relation up = b.ascendent | b.common_cause;
    const Relation down = b.ascendent_conv | b.common_cause;
    b.active = ident | b.ascendent | b.ascendent_conv | b.common_cause |
               compose(compose(up, b.cousinhood), down);
    b.active_star = ident | b.ascendent | b.ascendent_conv | b.common_cause |
                    compose(compose(up, b.cousinhood_star), down);
    b.active_plus =
        b.ascendent | b.common_cause | compose(compose(up, b.cousinhood_star), b.common_cause);
    b.active_minus = b.ascendent_conv | compose(compose(up, b.cousinhood_star), b.ascendent_conv);
    return b;
}

bool d_separated(const RelationBundle& bundle, VertexId x, VertexId y) {
    return !bundle.active.test(x, y);
}

bool d_separated(const Graph& g, VertexId x, VertexId y, const VertexSubset& w) {
    return d_separated(build_bundle(g, w), x, y);
}

bool d_separated_sets(const RelationBundle& bundle, const VertexSubset& b, const VertexSubset& c) {
    return compose(compose(diagonal(b), bundle.active), diagonal(c)).is_empty();
}

bool d_separated_sets(const Graph& g, const VertexSubset& b, const VertexSubset& c,
                      const VertexSubset& w) {
    return d_separated_sets(build_bundle(g, w), b, c);
}

namespace {

// Expands membership in ascendent = E (D_{~w} E)* to an explicit chain
// x -> ... -> y whose intermediate vertices avoid w. Shortest chain,
// lowest-index tie-breaking on each forward step.
std::vector<VertexId> expand_chain(const Graph& g, const VertexSubset& w, VertexId x, VertexId y) {
    const int n = g.size();
    const int inf = std::numeric_limits<int>::max();
    // dist[v] = fewest edges of a nonempty walk v -> y whose vertices
    // strictly between v and y avoid w.
    std::vector<int> dist(static_cast<std::size_t>(n), inf);
    dist[y] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                if (!g.edges().test(u, v) || dist[v] == inf) continue;
                if (v != y && w.test(v)) continue;
                if (dist[v] + 1 < dist[u]) {
                    dist[u] = dist[v] + 1;
                    changed = true;
                }
            }
        }
    }

    // The first step is chosen separately so that x == y asks for a round
    // trip instead of the empty walk.
    int best = inf;
    VertexId first = -1;
    for (VertexId v = 0; v < n; ++v) {
        if (!g.edges().test(x, v)) continue;
        int cost = inf;
        if (v == y)
            cost = 1;
        else if (!w.test(v) && dist[v] != inf)
            cost = dist[v] + 1;
        if (cost < best) {
            best = cost;
            first = v;
        }
    }
    if (first < 0) throw std::logic_error("chain expansion on unrelated pair");

    std::vector<VertexId> chain{x, first};
    VertexId cur = first;
    while (cur != y) {
        bool advanced = false;
        for (VertexId v = 0; v < n; ++v) {
            if (!g.edges().test(cur, v)) continue;
            if (v != y && w.test(v)) continue;
            if (dist[v] != inf && dist[v] == dist[cur] - 1) {
                chain.push_back(v);
                cur = v;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("chain reconstruction stalled");
    }
    return chain;
}

UndirectedPath oriented(const std::vector<VertexId>& chain, int orient) {
    UndirectedPath p;
    p.verts = chain;
    p.orients.assign(chain.size() - 1, orient);
    return p;
}

std::vector<VertexId> reversed(std::vector<VertexId> chain) {
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// x <-...<- delta ->...-> y with the hinge outside w: all -1 steps to delta,
// then all +1 steps to y.
UndirectedPath expand_common_cause(const Graph& g, const RelationBundle& b, VertexId x, VertexId y) {
    for (VertexId delta = 0; delta < g.size(); ++delta) {
        if (b.w.test(delta)) continue;
        if (b.ascendent.test(delta, x) && b.ascendent.test(delta, y)) {
            UndirectedPath left = oriented(reversed(expand_chain(g, b.w, delta, x)), -1);
            UndirectedPath right = oriented(expand_chain(g, b.w, delta, y), +1);
            return concatenate(left, right);
        }
    }
    throw std::logic_error("common-cause expansion on unrelated pair");
}

// Ends with +1: an ascendent chain or a common-cause shape.
UndirectedPath expand_up_segment(const Graph& g, const RelationBundle& b, VertexId x, VertexId y) {
    if (b.ascendent.test(x, y)) return oriented(expand_chain(g, b.w, x, y), +1);
    return expand_common_cause(g, b, x, y);
}

// Starts with -1: a reversed ascendent chain or a common-cause shape.
UndirectedPath expand_down_segment(const Graph& g, const RelationBundle& b, VertexId x, VertexId y) {
    if (b.ascendent_conv.test(x, y)) return oriented(reversed(expand_chain(g, b.w, y, x)), -1);
    return expand_common_cause(g, b, x, y);
}

// Walks a cousinhood_star chain d1 = c_0, c_1, ..., c_k = d2 (each link in
// D_{w*} common_cause D_{w*}) and glues the common-cause shapes; consecutive
// shapes meet (+1,-1) at the c_i, which lie in w*.
UndirectedPath expand_cousin_chain(const Graph& g, const RelationBundle& b, VertexId d1, VertexId d2) {
    if (d1 == d2) {
        UndirectedPath trivial;
        trivial.verts.push_back(d1);
        return trivial;
    }
    const int n = g.size();
    auto link = [&](VertexId a, VertexId c) {
        return b.w_star.test(a) && b.w_star.test(c) && b.common_cause.test(a, c);
    };
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n), inf);
    dist[d2] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v)
                if (link(u, v) && dist[v] != inf && dist[v] + 1 < dist[u]) {
                    dist[u] = dist[v] + 1;
                    changed = true;
                }
    }
    if (dist[d1] == inf) throw std::logic_error("cousin chain expansion on unrelated pair");

    UndirectedPath path;
    path.verts.push_back(d1);
    VertexId cur = d1;
    while (cur != d2) {
        bool advanced = false;
        for (VertexId v = 0; v < n; ++v) {
            if (link(cur, v) && dist[v] != inf && dist[v] == dist[cur] - 1) {
                path = concatenate(path, expand_common_cause(g, b, cur, v));
                cur = v;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("cousin chain reconstruction stalled");
    }
    return path;
}

}  // namespace

std::optional<UndirectedPath> witness_active_path(const Graph& g, const RelationBundle& b,
                                                  VertexId x, VertexId y) {
    if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
        throw std::out_of_range("vertex index out of range");

    if (x == y) {
        UndirectedPath p;
        p.verts.push_back(x);
        if (g.edges().test(x, x)) {
            p.verts.push_back(x);
            p.orients.push_back(+1);
        }
        return p;
    }
    if (b.ascendent.test(x, y)) return oriented(expand_chain(g, b.w, x, y), +1);
    if (b.ascendent_conv.test(x, y)) return oriented(reversed(expand_chain(g, b.w, y, x)), -1);
    if (b.common_cause.test(x, y)) return expand_common_cause(g, b, x, y);
    if (!b.active.test(x, y)) return std::nullopt;

    // Composite case: x --up--> d1 ~~cousin~~ d2 --down--> y with d1, d2 in
    // w*; the (+1,-1) junctions at d1 and d2 are colliders opened by w*.
    const Relation up = b.ascendent | b.common_cause;
    const Relation down = b.ascendent_conv | b.common_cause;
    for (VertexId d1 = 0; d1 < g.size(); ++d1) {
        if (!up.test(x, d1)) continue;
        for (VertexId d2 = 0; d2 < g.size(); ++d2) {
            if (!b.cousinhood_star.test(d1, d2) || !down.test(d2, y)) continue;
            UndirectedPath p = expand_up_segment(g, b, x, d1);
            p = concatenate(p, expand_cousin_chain(g, b, d1, d2));
            p = concatenate(p, expand_down_segment(g, b, d2, y));
            return p;
        }
    }
    throw std::logic_error("active pair with no expandable composite witness");
}

std::optional<UndirectedPath> witness_active_path(const Graph& g, VertexId x, VertexId y,
                                                  const VertexSubset& w) {
    return witness_active_path(g, build_bundle(g, w), x, y);
}

bool plain_separation(const Graph& g, VertexId x, VertexId y, const VertexSubset& w,
                      PlainVariant variant) {
    if (w.universe_size() != g.size())
        throw std::invalid_argument("subset universe does not match graph");
    const Relation& e = g.edges();
    const Relation avoiding = compose(diagonal(~w), e);
    if (variant == PlainVariant::literal)
        return !transitive_closure(compose(compose(e, diagonal(~w)), e)).test(x, y);
    return !compose(e, reflexive_transitive_closure(avoiding)).test(x, y);
}

}  // namespace relsep
