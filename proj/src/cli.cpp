#include "relsep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "relsep/crosscheck.hpp"
#include "relsep/dsep.hpp"
#include "relsep/moral.hpp"
#include "relsep/reach.hpp"
#include "relsep/upath.hpp"

namespace relsep::cli {

namespace {

using nlohmann::json;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = token.find_last_not_of(" \t");
        out.push_back(token.substr(begin, end - begin + 1));
    }
    return out;
}

VertexSubset subset_from_names(const Graph& g, const std::vector<std::string>& names) {
    VertexSubset s(g.size());
    for (const auto& name : names) s.set(g.index_of(name));
    return s;
}

json path_to_json(const Graph& g, const UndirectedPath& p) {
    json steps = json::array();
    if (p.length() == 0) {
        // Degenerate record carrying the anchor vertex of a length-0 path.
        steps.push_back({{"tail", g.name(p.verts[0])}, {"head", g.name(p.verts[0])}, {"orient", 1}});
        return steps;
    }
    for (int i = 0; i < p.length(); ++i)
        steps.push_back({{"tail", g.name(p.verts[i])},
                         {"head", g.name(p.verts[i + 1])},
                         {"orient", p.orients[i]}});
    return steps;
}

struct QueryOptions {
    std::string graph_file;
    std::string x;
    std::string y;
    std::string given;
    std::string methods = "relational,reachability";
    int max_len = -1;
    bool as_json = false;
};

int run_query(const QueryOptions& opt, std::ostream& out) {
    const Graph g = load_graph(opt.graph_file);
    const VertexId x = g.index_of(opt.x);
    const VertexId y = g.index_of(opt.y);
    const std::vector<std::string> given_names = split_csv(opt.given);
    const VertexSubset w = subset_from_names(g, given_names);

    std::map<std::string, bool> verdicts;  // method -> separated?
    bool want_relational = false;
    for (const auto& method : split_csv(opt.methods)) {
        if (method == "relational")
            want_relational = true;
        else if (method == "reachability")
            verdicts[method] = !d_connected_reach(g, x, y, w);
        else if (method == "enumeration") {
            const int bound = opt.max_len > 0 ? opt.max_len : path_length_bound(g);
            verdicts[method] = !exists_active_path_bounded(g, x, y, w, bound);
        } else {
            throw std::runtime_error("unknown method: " + method);
        }
    }

    std::optional<UndirectedPath> witness;
    if (want_relational) {
        const RelationBundle bundle = build_bundle(g, w);
        verdicts["relational"] = d_separated(bundle, x, y);
        if (!verdicts["relational"]) {
            witness = witness_active_path(g, bundle, x, y);
            if (!witness || !is_active(*witness, g, w) || witness->tail() != x ||
                witness->head() != y)
                throw std::runtime_error("witness construction failed validation");
        }
    }
    if (verdicts.empty()) throw std::runtime_error("no methods selected");

    bool agree = true;
    for (const auto& [method, separated] : verdicts) agree = agree && separated == verdicts.begin()->second;
    const bool separated = verdicts.begin()->second;

    if (opt.as_json) {
        json report{{"x", opt.x},
                    {"y", opt.y},
                    {"given", given_names},
                    {"verdicts", verdicts},
                    {"witness", witness ? path_to_json(g, *witness) : json(nullptr)},
                    {"agree", agree}};
        out << report.dump() << "\n";
    } else {
        out << "query: " << opt.x << " _||_ " << opt.y << " given {";
        for (std::size_t i = 0; i < given_names.size(); ++i)
            out << (i ? "," : "") << given_names[i];
        out << "}\n";
        for (const auto& [method, sep] : verdicts)
            out << "  " << method << ": " << (sep ? "separated" : "connected") << "\n";
        if (witness) out << "  witness: " << to_string(*witness, g) << "\n";
        if (!agree) out << "  methods disagree\n";
    }

    if (!agree) return exit_disagree;
    return separated ? exit_separated : exit_connected;
}

struct RelationsOptions {
    std::string graph_file;
    std::string given;
    std::string which = "active";
    bool as_json = false;
};

int run_relations(const RelationsOptions& opt, std::ostream& out) {
    const Graph g = load_graph(opt.graph_file);
    const VertexSubset w = subset_from_names(g, split_csv(opt.given));

    Relation rel;
    if (opt.which == "moral") {
        rel = moral_relation(g);
    } else {
        const RelationBundle b = build_bundle(g, w);
        if (opt.which == "parental")
            rel = b.parental;
        else if (opt.which == "ascendent")
            rel = b.ascendent;
        else if (opt.which == "ascendent-conv")
            rel = b.ascendent_conv;
        else if (opt.which == "common-cause")
            rel = b.common_cause;
        else if (opt.which == "cousinhood")
            rel = b.cousinhood;
        else if (opt.which == "cousinhood-star")
            rel = b.cousinhood_star;
        else if (opt.which == "active")
            rel = b.active;
        else if (opt.which == "active-star")
            rel = b.active_star;
        else if (opt.which == "active-plus")
            rel = b.active_plus;
        else if (opt.which == "active-minus")
            rel = b.active_minus;
        else
            throw std::runtime_error("unknown relation name: " + opt.which);
    }

    if (opt.as_json) {
        json matrix = json::array();
        for (int b = 0; b < g.size(); ++b) {
            json row = json::array();
            for (int c = 0; c < g.size(); ++c) row.push_back(rel.test(b, c) ? 1 : 0);
            matrix.push_back(row);
        }
        out << json{{"which", opt.which}, {"names", g.names()}, {"matrix", matrix}}.dump() << "\n";
    } else {
        std::size_t width = 1;
        for (const auto& name : g.names()) width = std::max(width, name.size());
        out << std::setw(static_cast<int>(width)) << "" << " ";
        for (int c = 0; c < g.size(); ++c)
            out << std::setw(static_cast<int>(width)) << g.name(c) << " ";
        out << "\n";
        for (int b = 0; b < g.size(); ++b) {
            out << std::setw(static_cast<int>(width)) << g.name(b) << " ";
            for (int c = 0; c < g.size(); ++c)
                out << std::setw(static_cast<int>(width)) << (rel.test(b, c) ? 1 : 0) << " ";
            out << "\n";
        }
    }
    return exit_separated;
}

struct WitnessOptions {
    std::string graph_file;
    std::string x;
    std::string y;
    std::string given;
};

int run_witness(const WitnessOptions& opt, std::ostream& out) {
    const Graph g = load_graph(opt.graph_file);
    const VertexId x = g.index_of(opt.x);
    const VertexId y = g.index_of(opt.y);
    const VertexSubset w = subset_from_names(g, split_csv(opt.given));

    const auto witness = witness_active_path(g, x, y, w);
    if (!witness) {
        out << "separated\n";
        return exit_separated;
    }
    if (!is_active(*witness, g, w) || witness->tail() != x || witness->head() != y)
        throw std::runtime_error("witness construction failed validation");
    out << to_string(*witness, g) << "\n";
    return exit_connected;
}

struct CrosscheckOptions {
    CrosscheckParams params;
    bool as_json = false;
};

int run_crosscheck_cmd(const CrosscheckOptions& opt, std::ostream& out) {
    const CrosscheckSummary summary = run_crosscheck(opt.params);
    if (opt.as_json) {
        json j{{"trials", summary.trials},
               {"pairs_checked", summary.pairs_checked},
               {"disagreements", summary.disagreements},
               {"seed", summary.seed},
               {"first_counterexample", nullptr}};
        if (summary.first_counterexample)
            j["first_counterexample"] = json{{"graph", summary.first_counterexample->graph_text},
                                             {"detail", summary.first_counterexample->detail}};
        out << j.dump() << "\n";
    } else {
        out << "seed: " << summary.seed << "\n";
        out << "trials: " << summary.trials << "\n";
        out << "pairs checked: " << summary.pairs_checked << "\n";
        out << "disagreements: " << summary.disagreements << "\n";
        if (summary.first_counterexample) {
            out << "first counterexample: " << summary.first_counterexample->detail << "\n";
            out << summary.first_counterexample->graph_text;
        }
    }
    return summary.disagreements == 0 ? exit_separated : exit_disagree;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"d-separation on finite directed graphs, decided three independent ways"};
    app.require_subcommand(1);

    QueryOptions query;
    auto* q = app.add_subcommand("query", "decide one separation query");
    q->add_option("graph", query.graph_file, "edge-list graph file")->required();
    q->add_option("--x", query.x, "first vertex")->required();
    q->add_option("--y", query.y, "second vertex")->required();
    q->add_option("--given", query.given, "conditioning vertices, comma separated");
    q->add_option("--methods", query.methods,
                  "subset of relational,reachability,enumeration (default relational,reachability)");
    q->add_option("--max-len", query.max_len, "path length bound for enumeration");
    q->add_flag("--json", query.as_json, "emit a JSON report");

    RelationsOptions relations;
    auto* r = app.add_subcommand("relations", "dump one conditional relation as a 0/1 matrix");
    r->add_option("graph", relations.graph_file, "edge-list graph file")->required();
    r->add_option("--given", relations.given, "conditioning vertices, comma separated");
    r->add_option("--which", relations.which,
                  "parental|ascendent|ascendent-conv|common-cause|cousinhood|cousinhood-star|"
                  "active|active-star|active-plus|active-minus|moral")
        ->required();
    r->add_flag("--json", relations.as_json, "emit JSON");

    WitnessOptions witness;
    auto* wsub = app.add_subcommand("witness", "print an active path or the word 'separated'");
    wsub->add_option("graph", witness.graph_file, "edge-list graph file")->required();
    wsub->add_option("--x", witness.x, "first vertex")->required();
    wsub->add_option("--y", witness.y, "second vertex")->required();
    wsub->add_option("--given", witness.given, "conditioning vertices, comma separated");

    CrosscheckOptions cross;
    auto* c = app.add_subcommand("crosscheck", "differential-test the three decision procedures");
    c->add_option("--vertices", cross.params.vertices, "vertices per random graph")->required();
    c->add_option("--edge-prob", cross.params.edge_prob, "independent edge probability");
    c->add_option("--trials", cross.params.trials, "number of random graphs")->required();
    c->add_option("--seed", cross.params.seed, "64-bit seed");
    c->add_option("--max-vertices-exhaustive", cross.params.max_exhaustive_vertices,
                  "also sweep every graph and conditioning set up to this many vertices (<= 4)");
    c->add_option("--max-len", cross.params.max_len, "path length bound for enumeration");
    c->add_flag("--json", cross.as_json, "emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help lands here.
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return exit_error;
    }

    try {
        if (app.got_subcommand(q)) return run_query(query, out);
        if (app.got_subcommand(r)) return run_relations(relations, out);
        if (app.got_subcommand(wsub)) return run_witness(witness, out);
        if (app.got_subcommand(c)) return run_crosscheck_cmd(cross, out);
        err << "error: no subcommand\n";
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

}  // namespace relsep::cli
