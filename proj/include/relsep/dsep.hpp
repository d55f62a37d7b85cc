#ifndef RELSEP_DSEP_HPP
#define RELSEP_DSEP_HPP

#include <optional>

#include "relsep/graph.hpp"
#include "relsep/upath.hpp"

namespace relsep {

/// Every conditional relation for a fixed (graph, w) pair, computed once and
/// reused across queries. Immutable after construction; safe to share.
///
/// With E the edge relation, D_s the diagonal on a subset s, and w* the
/// ancestral closure of w:
///   parental        = D_{~w} E
///   ascendent       = E (D_{~w} E)*
///   ascendent_conv  = converse(ascendent)
///   common_cause    = converse(parental)^+ parental^+
///   cousinhood      = (D_w common_cause D_w)^+ | D_w
///   cousinhood_star = same with w replaced by w*
///   active          = D | ascendent | ascendent_conv | common_cause
///                     | (ascendent | common_cause) cousinhood (ascendent_conv | common_cause)
///   active_star     = active with cousinhood_star in place of cousinhood
///   active_plus     = ascendent | common_cause
///                     | (ascendent | common_cause) cousinhood_star common_cause
///   active_minus    = ascendent_conv
///                     | (ascendent | common_cause) cousinhood_star ascendent_conv
struct RelationBundle {
    VertexSubset w;
    VertexSubset w_star;
    Relation parental;
    Relation ascendent;
    Relation ascendent_conv;
    Relation common_cause;
    Relation cousinhood;
    Relation cousinhood_star;
    Relation active;
    Relation active_star;
    Relation active_plus;
    Relation active_minus;
};

RelationBundle build_bundle(const Graph& g, const VertexSubset& w);

/// Two vertices are separated given w iff they are not related by the
/// conditional active relation; x, y and w are unconstrained.
bool d_separated(const RelationBundle& bundle, VertexId x, VertexId y);
bool d_separated(const Graph& g, VertexId x, VertexId y, const VertexSubset& w);

/// Set-level query: true iff D_b active D_c is empty.
bool d_separated_sets(const Graph& g, const VertexSubset& b, const VertexSubset& c,
                      const VertexSubset& w);
bool d_separated_sets(const RelationBundle& bundle, const VertexSubset& b, const VertexSubset& c);

/// Produces an active undirected path with endpoints (x, y), or nullopt when
/// the pair is separated. Deterministic: cases are tried in the fixed order
/// diagonal, ascendent, converse ascendent, common cause, composite, and
/// relational facts expand to explicit chains by shortest length with
/// lowest-vertex-index tie-breaking.
std::optional<UndirectedPath> witness_active_path(const Graph& g, VertexId x, VertexId y,
                                                  const VertexSubset& w);
std::optional<UndirectedPath> witness_active_path(const Graph& g, const RelationBundle& bundle,
                                                  VertexId x, VertexId y);

/// Plain (non-directional) path separation: is every directed path from x
/// to y forced through w?
enum class PlainVariant {
    /// not (x (E D_{~w} E)^+ y) exactly as that formula reads.
    literal,
    /// not (x E (D_{~w} E)* y): no directed walk from x to y with every
    /// intermediate vertex outside w.
    corrected,
};

bool plain_separation(const Graph& g, VertexId x, VertexId y, const VertexSubset& w,
                      PlainVariant variant);

}  // namespace relsep

#endif
