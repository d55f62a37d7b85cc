#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "relsep/crosscheck.hpp"
#include "relsep/dsep.hpp"
#include "relsep/moral.hpp"
#include "relsep/reach.hpp"
#include "relsep/upath.hpp"

namespace py = pybind11;
using namespace relsep;

namespace {

VertexSubset subset_from_names(const Graph& g, const std::vector<std::string>& names) {
    VertexSubset s(g.size());
    for (const auto& name : names) s.set(g.index_of(name));
    return s;
}

std::vector<std::string> subset_to_names(const Graph& g, const VertexSubset& s) {
    std::vector<std::string> out;
    for (VertexId v : s.members()) out.push_back(g.name(v));
    return out;
}

using PyStep = std::tuple<std::string, std::string, int>;

std::vector<PyStep> path_to_steps(const Graph& g, const UndirectedPath& p) {
    std::vector<PyStep> steps;
    if (p.length() == 0) {
        steps.emplace_back(g.name(p.verts[0]), g.name(p.verts[0]), +1);
        return steps;
    }
    for (int i = 0; i < p.length(); ++i)
        steps.emplace_back(g.name(p.verts[i]), g.name(p.verts[i + 1]), p.orients[i]);
    return steps;
}

std::vector<std::vector<int>> relation_to_matrix(const Relation& r) {
    std::vector<std::vector<int>> m;
    for (int b = 0; b < r.universe_size(); ++b) {
        std::vector<int> row;
        for (int c = 0; c < r.universe_size(); ++c) row.push_back(r.test(b, c) ? 1 : 0);
        m.push_back(std::move(row));
    }
    return m;
}

Relation select_relation(const Graph& g, const RelationBundle& b, const std::string& which) {
    if (which == "parental") return b.parental;
    if (which == "ascendent") return b.ascendent;
    if (which == "ascendent-conv") return b.ascendent_conv;
    if (which == "common-cause") return b.common_cause;
    if (which == "cousinhood") return b.cousinhood;
    if (which == "cousinhood-star") return b.cousinhood_star;
    if (which == "active") return b.active;
    if (which == "active-star") return b.active_star;
    if (which == "active-plus") return b.active_plus;
    if (which == "active-minus") return b.active_minus;
    if (which == "moral") return moral_relation(g);
    throw std::invalid_argument("unknown relation name: " + which);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "d-separation on finite directed graphs via binary relations";

    py::class_<Graph>(m, "Graph")
        .def_static("from_edge_list", [](const std::string& text) { return parse_edge_list(text); },
                    py::arg("text"), "Parse the edge-list format (SRC -> DST / node NAME lines).")
        .def("to_edge_list", [](const Graph& g) { return serialize_edge_list(g); })
        .def("names", [](const Graph& g) { return g.names(); })
        .def("__len__", [](const Graph& g) { return g.size(); })
        .def("has_edge",
             [](const Graph& g, const std::string& a, const std::string& b) {
                 return g.edges().test(g.index_of(a), g.index_of(b));
             })
        .def("edge_pairs",
             [](const Graph& g) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (auto [b, c] : g.edges().pairs()) out.emplace_back(g.name(b), g.name(c));
                 return out;
             })
        .def("classify",
             [](const Graph& g) {
                 const GraphClass c = classify(g);
                 py::dict d;
                 d["directed"] = c.directed;
                 d["undirected"] = c.undirected;
                 d["has_loops"] = c.has_loops;
                 return d;
             })
        .def("undirected_extension", [](const Graph& g) { return undirected_extension(g); })
        .def("ancestral_closure",
             [](const Graph& g, const std::vector<std::string>& w) {
                 return subset_to_names(g, ancestral_closure(g, subset_from_names(g, w)));
             })
        .def("induced_subgraph",
             [](const Graph& g, const std::vector<std::string>& keep) {
                 return induced_subgraph(g, subset_from_names(g, keep));
             })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(" << g.size() << " vertices, " << g.edges().count() << " edges)";
            return out.str();
        });

    m.def(
        "d_separated",
        [](const Graph& g, const std::string& x, const std::string& y,
           const std::vector<std::string>& given) {
            return d_separated(g, g.index_of(x), g.index_of(y), subset_from_names(g, given));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("given") = std::vector<std::string>{},
        "Relational decision: true iff x and y are d-separated given the conditioning set.");

    m.def(
        "d_separated_sets",
        [](const Graph& g, const std::vector<std::string>& b, const std::vector<std::string>& c,
           const std::vector<std::string>& w) {
            return d_separated_sets(g, subset_from_names(g, b), subset_from_names(g, c),
                                    subset_from_names(g, w));
        },
        py::arg("graph"), py::arg("b"), py::arg("c"), py::arg("given") = std::vector<std::string>{});

    m.def(
        "d_connected_reach",
        [](const Graph& g, const std::string& x, const std::string& y,
           const std::vector<std::string>& given) {
            return d_connected_reach(g, g.index_of(x), g.index_of(y), subset_from_names(g, given));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("given") = std::vector<std::string>{},
        "Orientation-state oracle: true iff some active path joins x to y.");

    m.def(
        "active_reach",
        [](const Graph& g, const std::string& x, const std::vector<std::string>& given) {
            const ActiveReach r = active_reach(g, g.index_of(x), subset_from_names(g, given));
            std::vector<std::pair<std::string, int>> out;
            for (VertexId v = 0; v < g.size(); ++v) {
                if (r.ends_plus.test(v)) out.emplace_back(g.name(v), +1);
                if (r.ends_minus.test(v)) out.emplace_back(g.name(v), -1);
            }
            return out;
        },
        py::arg("graph"), py::arg("x"), py::arg("given") = std::vector<std::string>{},
        "(vertex, final-orientation) states reachable by active paths from x.");

    m.def(
        "exists_active_path",
        [](const Graph& g, const std::string& x, const std::string& y,
           const std::vector<std::string>& given, int max_len) {
            const int bound = max_len > 0 ? max_len : path_length_bound(g);
            return exists_active_path_bounded(g, g.index_of(x), g.index_of(y),
                                              subset_from_names(g, given), bound);
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("given") = std::vector<std::string>{},
        py::arg("max_len") = -1,
        "Bounded path enumeration: true iff an active path of length <= max_len exists.");

    m.def(
        "enumerate_undirected_paths",
        [](const Graph& g, const std::string& x, const std::string& y, int max_len) {
            std::vector<std::vector<PyStep>> out;
            for (const auto& p :
                 enumerate_undirected_paths(g, g.index_of(x), g.index_of(y), max_len))
                out.push_back(path_to_steps(g, p));
            return out;
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("max_len"),
        "All undirected paths between two vertices, in length-lexicographic order.");

    m.def(
        "witness",
        [](const Graph& g, const std::string& x, const std::string& y,
           const std::vector<std::string>& given) -> py::object {
            const auto p = witness_active_path(g, g.index_of(x), g.index_of(y),
                                               subset_from_names(g, given));
            if (!p) return py::none();
            return py::cast(path_to_steps(g, *p));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("given") = std::vector<std::string>{},
        "An active path as (tail, head, orient) steps, or None when separated.");

    m.def(
        "relation_matrix",
        [](const Graph& g, const std::vector<std::string>& given, const std::string& which) {
            return relation_to_matrix(select_relation(g, build_bundle(g, subset_from_names(g, given)), which));
        },
        py::arg("graph"), py::arg("given"), py::arg("which"),
        "One conditional relation as a 0/1 matrix in vertex order.");

    m.def(
        "morally_blocked",
        [](const Graph& g, const std::vector<std::string>& b, const std::vector<std::string>& c,
           const std::vector<std::string>& w) {
            return morally_blocked(g, subset_from_names(g, b), subset_from_names(g, c),
                                   subset_from_names(g, w));
        },
        py::arg("graph"), py::arg("b"), py::arg("c"), py::arg("given") = std::vector<std::string>{},
        "m-separation in the ancestral moral subgraph (pairwise disjoint sets).");

    m.def(
        "plain_separation",
        [](const Graph& g, const std::string& x, const std::string& y,
           const std::vector<std::string>& given, const std::string& variant) {
            PlainVariant v;
            if (variant == "literal")
                v = PlainVariant::literal;
            else if (variant == "corrected")
                v = PlainVariant::corrected;
            else
                throw std::invalid_argument("variant must be 'literal' or 'corrected'");
            return plain_separation(g, g.index_of(x), g.index_of(y), subset_from_names(g, given), v);
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("given") = std::vector<std::string>{},
        py::arg("variant") = "corrected");

    m.def(
        "crosscheck",
        [](int vertices, double edge_prob, int trials, std::uint64_t seed, int max_exhaustive) {
            CrosscheckParams params;
            params.vertices = vertices;
            params.edge_prob = edge_prob;
            params.trials = trials;
            params.seed = seed;
            params.max_exhaustive_vertices = max_exhaustive;
            const CrosscheckSummary s = run_crosscheck(params);
            py::dict d;
            d["seed"] = s.seed;
            d["trials"] = s.trials;
            d["pairs_checked"] = s.pairs_checked;
            d["disagreements"] = s.disagreements;
            if (s.first_counterexample) {
                py::dict ce;
                ce["graph"] = s.first_counterexample->graph_text;
                ce["detail"] = s.first_counterexample->detail;
                d["first_counterexample"] = ce;
            } else {
                d["first_counterexample"] = py::none();
            }
            return d;
        },
        py::arg("vertices"), py::arg("edge_prob"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("max_exhaustive") = 0,
        "Differential test of the three decision procedures on random graphs.");
}
