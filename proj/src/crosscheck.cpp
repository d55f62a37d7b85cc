#include "relsep/crosscheck.hpp"

#include <sstream>
#include <stdexcept>

#include "relsep/dsep.hpp"
#include "relsep/moral.hpp"
#include "relsep/reach.hpp"
#include "relsep/upath.hpp"

namespace relsep {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial_index)
    : engine_(splitmix64(seed ^ (trial_index * 0x9e3779b97f4a7c15ULL + 1))) {}

double TrialRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool TrialRng::bernoulli(double p) { return uniform() < p; }

int TrialRng::uniform_int(int bound) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

Graph random_graph(int vertices, double edge_prob, TrialRng& rng) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) names.push_back("v" + std::to_string(i));
    Relation edges(vertices);
    for (int b = 0; b < vertices; ++b)
        for (int c = 0; c < vertices; ++c)
            if (rng.bernoulli(edge_prob)) edges.set(b, c);
    return Graph(std::move(names), std::move(edges));
}

VertexSubset random_subset(int universe_size, TrialRng& rng) {
    VertexSubset s(universe_size);
    for (int v = 0; v < universe_size; ++v)
        if (rng.bernoulli(0.5)) s.set(v);
    return s;
}

void random_disjoint_triple(int universe_size, TrialRng& rng, VertexSubset& b, VertexSubset& c,
                            VertexSubset& w) {
    b = VertexSubset(universe_size);
    c = VertexSubset(universe_size);
    w = VertexSubset(universe_size);
    for (int v = 0; v < universe_size; ++v) {
        switch (rng.uniform_int(4)) {
            case 0: b.set(v); break;
            case 1: c.set(v); break;
            case 2: w.set(v); break;
            default: break;
        }
    }
}

namespace {

struct CheckState {
    long pairs = 0;
    long disagreements = 0;
    std::optional<Counterexample> first;
};

void record(CheckState& state, const Graph& g, const std::string& detail) {
    ++state.disagreements;
    if (!state.first) state.first = Counterexample{serialize_edge_list(g), detail};
}

std::string subset_names(const Graph& g, const VertexSubset& s) {
    std::string out = "{";
    bool sep = false;
    for (VertexId v : s.members()) {
        if (sep) out += ",";
        out += g.name(v);
        sep = true;
    }
    return out + "}";
}

// Decides every ordered pair three ways.
void check_pairs(const Graph& g, const VertexSubset& w, int max_len, CheckState& state) {
    const RelationBundle bundle = build_bundle(g, w);
    const int bound = max_len > 0 ? max_len : path_length_bound(g);
    for (VertexId x = 0; x < g.size(); ++x) {
        const ActiveReach reach = active_reach(g, x, w);
        for (VertexId y = 0; y < g.size(); ++y) {
            ++state.pairs;
            const bool rel = d_separated(bundle, x, y);
            const bool rch = !(x == y || reach.reaches(y));
            const bool enu = !exists_active_path_bounded(g, x, y, w, bound);
            if (rel != rch || rel != enu) {
                std::ostringstream detail;
                detail << "pair (" << g.name(x) << "," << g.name(y) << ") given "
                       << subset_names(g, w) << ": relational=" << (rel ? "separated" : "connected")
                       << " reachability=" << (rch ? "separated" : "connected")
                       << " enumeration=" << (enu ? "separated" : "connected");
                record(state, g, detail.str());
            }
        }
    }
}

void check_moral(const Graph& g, const VertexSubset& mb, const VertexSubset& mc,
                 const VertexSubset& mw, CheckState& state) {
    const bool moral_sep = morally_blocked(g, mb, mc, mw);
    const bool rel_sep = d_separated_sets(g, mb, mc, mw);
    if (moral_sep != rel_sep) {
        std::ostringstream detail;
        detail << "moral b=" << subset_names(g, mb) << " c=" << subset_names(g, mc) << " w="
               << subset_names(g, mw) << ": moral=" << (moral_sep ? "separated" : "connected")
               << " relational=" << (rel_sep ? "separated" : "connected");
        record(state, g, detail.str());
    }
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    Relation edges(n);
    int bit = 0;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c, ++bit)
            if ((mask >> bit) & 1) edges.set(b, c);
    return Graph(std::move(names), std::move(edges));
}

VertexSubset subset_from_mask(int n, std::uint64_t mask) {
    VertexSubset s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.set(v);
    return s;
}

}  // namespace

CrosscheckSummary run_crosscheck(const CrosscheckParams& params) {
    if (params.vertices < 1) throw std::invalid_argument("vertices must be at least 1");
    if (params.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (params.edge_prob < 0.0 || params.edge_prob > 1.0)
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (params.max_exhaustive_vertices > 4)
        throw std::invalid_argument("exhaustive sweep is limited to 4 vertices");

    CheckState state;
    for (int trial = 0; trial < params.trials; ++trial) {
        TrialRng rng(params.seed, static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(params.vertices, params.edge_prob, rng);
        const VertexSubset w = random_subset(params.vertices, rng);
        VertexSubset mb, mc, mw;
        random_disjoint_triple(params.vertices, rng, mb, mc, mw);
        check_pairs(g, w, params.max_len, state);
        check_moral(g, mb, mc, mw, state);
    }

    for (int n = 1; n <= params.max_exhaustive_vertices; ++n) {
        const std::uint64_t graph_count = std::uint64_t{1} << (n * n);
        const std::uint64_t subset_count = std::uint64_t{1} << n;
        for (std::uint64_t gm = 0; gm < graph_count; ++gm) {
            const Graph g = graph_from_mask(n, gm);
            for (std::uint64_t wm = 0; wm < subset_count; ++wm)
                check_pairs(g, subset_from_mask(n, wm), params.max_len, state);
        }
    }

    CrosscheckSummary summary;
    summary.seed = params.seed;
    summary.trials = params.trials;
    summary.pairs_checked = state.pairs;
    summary.disagreements = state.disagreements;
    summary.first_counterexample = state.first;
    return summary;
}

}  // namespace relsep
