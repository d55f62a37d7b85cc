#include "relsep/moral.hpp"

#include <stdexcept>

namespace relsep {

namespace {

Relation moralize(const Relation& edges) {
    const Relation married = edges | compose(edges, converse(edges));
    return married | converse(married);
}

void check_disjoint(const VertexSubset& b, const VertexSubset& c, const VertexSubset& w) {
    if (b.intersects(c) || b.intersects(w) || c.intersects(w))
        throw std::invalid_argument("moral separation requires pairwise disjoint vertex sets");
}

}  // namespace

Relation moral_relation(const Graph& g) { return moralize(g.edges()); }

MoralContext build_moral_context(const Graph& g, const VertexSubset& b, const VertexSubset& c,
                                 const VertexSubset& w) {
    check_disjoint(b, c, w);
    MoralContext ctx;
    ctx.ancestral = ancestral_closure(g, b | c | w);
    const Relation keep = diagonal(ctx.ancestral);
    ctx.edges = compose(compose(keep, g.edges()), keep);
    ctx.moral = moralize(ctx.edges);
    return ctx;
}

bool morally_blocked(const MoralContext& ctx, const VertexSubset& b, const VertexSubset& c,
                     const VertexSubset& w) {
    check_disjoint(b, c, w);
    const Relation step = compose(diagonal(~w), ctx.moral);
    const Relation walk = compose(compose(diagonal(b), ctx.moral), reflexive_transitive_closure(step));
    return compose(walk, diagonal(c)).is_empty();
}

bool morally_blocked(const Graph& g, const VertexSubset& b, const VertexSubset& c,
                     const VertexSubset& w) {
    return morally_blocked(build_moral_context(g, b, c, w), b, c, w);
}

EdgePath moral_path_from_active(const Graph& g, const UndirectedPath& p, const VertexSubset& w) {
    if (!is_active(p, g, w)) throw std::invalid_argument("path is not active");

    const Relation moral = moral_relation(g);
    EdgePath out;
    out.verts.push_back(p.tail());
    for (int i = 1; i < static_cast<int>(p.verts.size()); ++i) {
        // Junction between steps i-1 and i; a (+1,-1) collider is skipped,
        // leaving its parents adjacent through their marriage step.
        const bool collider =
            i < p.length() && p.orients[i - 1] == +1 && p.orients[i] == -1;
        if (!collider) out.verts.push_back(p.verts[i]);
    }

    if (out.length() == 0 && moral.test(out.verts[0], out.verts[0])) {
        // A trivial walk is not available at a vertex with a moral loop;
        // the loop itself is the path.
        out.verts.push_back(out.verts[0]);
    }
    if (!is_valid(out, moral)) throw std::logic_error("collider removal left a non-moral step");
    return out;
}

}  // namespace relsep
