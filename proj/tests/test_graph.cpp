#include <doctest.h>

#include <random>
#include <set>

#include "relsep/graph.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace relsep;

TEST_CASE("parsing the edge-list format") {
    const Graph chain = parse_edge_list("a -> b\nb -> c");
    CHECK(chain.size() == 3);
    CHECK(chain.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(chain.edges().test(0, 1));
    CHECK(chain.edges().test(1, 2));
    CHECK(chain.edges().count() == 2);

    const Graph loop = parse_edge_list("a -> a");
    CHECK(loop.size() == 1);
    CHECK(loop.edges().test(0, 0));

    const Graph with_isolated = parse_edge_list("node z\na -> b");
    CHECK(with_isolated.names() == std::vector<std::string>{"z", "a", "b"});
    CHECK(with_isolated.edges().count() == 1);
    CHECK(with_isolated.edges().test(1, 2));
}

TEST_CASE("parser details") {
    // Comments, blank lines, duplicate edges, compact arrows.
    const Graph g = parse_edge_list("# header\n\n  a->b  # trailing\na -> b\n\nnode  c\n");
    CHECK(g.size() == 3);
    CHECK(g.edges().count() == 1);

    CHECK(parse_edge_list("").size() == 0);

    CHECK_THROWS_AS(parse_edge_list("a -> b\nbogus line"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a ->"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-> b"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("node "), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a -> b -> c"), ParseError);
    try {
        parse_edge_list("a -> b\n\nnope");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("vertex names reject separator characters") {
    CHECK(valid_vertex_name("x1"));
    CHECK(valid_vertex_name("node"));
    CHECK_FALSE(valid_vertex_name(""));
    CHECK_FALSE(valid_vertex_name("a b"));
    CHECK_FALSE(valid_vertex_name("a-b"));
    CHECK_FALSE(valid_vertex_name("a>b"));
    CHECK_FALSE(valid_vertex_name("a#b"));
}

TEST_CASE("serialize then parse round trip") {
    // The emitted file lists isolated vertices first, so indices may be
    // permuted; the round trip must preserve the named structure exactly,
    // and a second round trip is the literal identity.
    auto edges_by_name = [](const Graph& g) {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [b, c] : g.edges().pairs()) out.insert({g.name(b), g.name(c)});
        return out;
    };
    auto name_set = [](const Graph& g) {
        return std::set<std::string>(g.names().begin(), g.names().end());
    };

    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
        const Graph g = brute::random_graph(1 + static_cast<int>(rng() % 6), rng, 0.3);
        const Graph back = parse_edge_list(serialize_edge_list(g));
        CHECK(name_set(back) == name_set(g));
        CHECK(edges_by_name(back) == edges_by_name(g));
        const Graph again = parse_edge_list(serialize_edge_list(back));
        CHECK(again.names() == back.names());
        CHECK(again.edges() == back.edges());
        CHECK(serialize_edge_list(again) == serialize_edge_list(back));
    }

    // Isolated vertices survive the round trip via node lines.
    const Graph g = parse_edge_list("node z\nnode q\na -> b");
    const Graph back = parse_edge_list(serialize_edge_list(g));
    CHECK(back.names() == g.names());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("classification") {
    const GraphClass chain = classify(fixtures::chain3());
    CHECK(chain.directed);
    CHECK_FALSE(chain.undirected);
    CHECK_FALSE(chain.has_loops);

    // A two-cycle is one undirected edge.
    const GraphClass cycle = classify(fixtures::cycle2());
    CHECK_FALSE(cycle.directed);
    CHECK(cycle.undirected);
    CHECK_FALSE(cycle.has_loops);

    // A loop is its own converse.
    const GraphClass loop = classify(fixtures::loop1());
    CHECK_FALSE(loop.directed);
    CHECK(loop.undirected);
    CHECK(loop.has_loops);
}

TEST_CASE("undirected extension") {
    const Graph ext = undirected_extension(fixtures::chain3());
    CHECK(ext.edges().count() == 4);
    CHECK(ext.edges().test(1, 0));
    CHECK(ext.edges().test(2, 1));

    CHECK(undirected_extension(fixtures::loop1()).edges() == fixtures::loop1().edges());

    std::mt19937_64 rng(43);
    for (int round = 0; round < 30; ++round) {
        const Graph g = brute::random_graph(1 + static_cast<int>(rng() % 6), rng, 0.4);
        const Graph ext2 = undirected_extension(g);
        CHECK(classify(ext2).undirected);
        CHECK(undirected_extension(ext2).edges() == ext2.edges());
    }
}

TEST_CASE("ancestral closure") {
    const Graph g = fixtures::collider_desc();
    CHECK(ancestral_closure(g, VertexSubset(g.size())).empty());
    CHECK(ancestral_closure(g, fixtures::names_to_subset(g, {"d"})) == VertexSubset::all(4));

    const Graph chain = fixtures::chain3();
    CHECK(ancestral_closure(chain, fixtures::names_to_subset(chain, {"a"})) ==
          fixtures::names_to_subset(chain, {"a"}));

    std::mt19937_64 rng(47);
    for (int round = 0; round < 30; ++round) {
        const Graph h = brute::random_graph(6, rng, 0.3);
        const VertexSubset w = brute::random_subset(6, rng);
        const VertexSubset w2 = brute::random_subset(6, rng);
        const VertexSubset closed = ancestral_closure(h, w);
        CHECK(w.is_subset_of(closed));
        CHECK(ancestral_closure(h, closed) == closed);
        if (w.is_subset_of(w2)) CHECK(closed.is_subset_of(ancestral_closure(h, w2)));
    }
}

TEST_CASE("induced subgraphs") {
    const Graph g = fixtures::collider_desc();
    const Graph full = induced_subgraph(g, VertexSubset::all(g.size()));
    CHECK(full.names() == g.names());
    CHECK(full.edges() == g.edges());

    const Graph chain = fixtures::chain3();
    const Graph ac = induced_subgraph(chain, fixtures::names_to_subset(chain, {"a", "c"}));
    CHECK(ac.size() == 2);
    CHECK(ac.edges().is_empty());

    const Graph col = induced_subgraph(g, fixtures::names_to_subset(g, {"a", "b", "c"}));
    CHECK(col.names() == fixtures::collider().names());
    CHECK(col.edges() == fixtures::collider().edges());
}

TEST_CASE("nested induced subgraphs compose by intersection") {
    std::mt19937_64 rng(53);
    auto restrict_names = [](const Graph& g, const std::set<std::string>& keep) {
        VertexSubset s(g.size());
        for (int v = 0; v < g.size(); ++v)
            if (keep.count(g.name(v))) s.set(v);
        return induced_subgraph(g, s);
    };
    for (int round = 0; round < 30; ++round) {
        const Graph g = brute::random_graph(6, rng, 0.4);
        std::set<std::string> first, second, both;
        for (const auto& name : g.names()) {
            const bool in_first = (rng() & 1) != 0;
            const bool in_second = (rng() & 1) != 0;
            if (in_first) first.insert(name);
            if (in_second) second.insert(name);
            if (in_first && in_second) both.insert(name);
        }
        const Graph nested = restrict_names(restrict_names(g, first), second);
        const Graph direct = restrict_names(g, both);
        CHECK(nested.names() == direct.names());
        CHECK(nested.edges() == direct.edges());
    }
}

TEST_CASE("graph accessors") {
    const Graph g = fixtures::chain3();
    CHECK(g.index_of("b") == 1);
    CHECK_FALSE(g.find("nope").has_value());
    CHECK_THROWS_AS(g.index_of("nope"), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "a"}, Relation(2)), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, Relation(2)), std::invalid_argument);
}
