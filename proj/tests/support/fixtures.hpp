// Small named graphs reused across the suites.
#ifndef RELSEP_TESTS_FIXTURES_HPP
#define RELSEP_TESTS_FIXTURES_HPP

#include "relsep/graph.hpp"

namespace fixtures {

// a -> b -> c
inline relsep::Graph chain3() { return relsep::parse_edge_list("a -> b\nb -> c\n"); }

// a -> b -> c -> d
inline relsep::Graph chain4() { return relsep::parse_edge_list("a -> b\nb -> c\nc -> d\n"); }

// a -> c <- b, with vertex order pinned to a, b, c
inline relsep::Graph collider() {
    return relsep::parse_edge_list("node a\nnode b\nnode c\na -> c\nb -> c\n");
}

// a -> c <- b, c -> d, vertex order a, b, c, d
inline relsep::Graph collider_desc() {
    return relsep::parse_edge_list("node a\nnode b\nnode c\nnode d\na -> c\nb -> c\nc -> d\n");
}

// a <-> b two-cycle
inline relsep::Graph cycle2() { return relsep::parse_edge_list("a -> b\nb -> a\n"); }

// single vertex with a loop
inline relsep::Graph loop1() { return relsep::parse_edge_list("a -> a\n"); }

inline relsep::VertexSubset names_to_subset(const relsep::Graph& g,
                                            std::initializer_list<const char*> names) {
    relsep::VertexSubset s(g.size());
    for (const char* n : names) s.set(g.index_of(n));
    return s;
}

}  // namespace fixtures

#endif
