#ifndef RELSEP_CROSSCHECK_HPP
#define RELSEP_CROSSCHECK_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "relsep/graph.hpp"

namespace relsep {

/// SplitMix64 step; used to whiten per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random source for one crosscheck trial. Trial streams are
/// derived as mt19937_64(splitmix64(seed xor trial * odd constant)), so
/// trials are order-independent. Uniform doubles come straight from engine
/// bits rather than distribution objects, which keeps byte-for-byte
/// reproducibility out of the standard library's hands.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial_index);

    double uniform();               // in [0, 1)
    bool bernoulli(double p);       // true with probability p
    int uniform_int(int bound);     // in [0, bound)
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Erdos-Renyi style digraph: each ordered pair (loops included) is an edge
/// independently with probability edge_prob. Vertices are named v0, v1, ...
Graph random_graph(int vertices, double edge_prob, TrialRng& rng);

/// Each vertex is a member independently with probability 1/2.
VertexSubset random_subset(int universe_size, TrialRng& rng);

/// Assigns each vertex to one of b, c, w or none, uniformly at random.
void random_disjoint_triple(int universe_size, TrialRng& rng, VertexSubset& b, VertexSubset& c,
                            VertexSubset& w);

struct CrosscheckParams {
    int vertices = 5;
    double edge_prob = 0.3;
    int trials = 100;
    std::uint64_t seed = 0;
    /// When positive (at most 4), additionally sweep every graph and every
    /// conditioning set on 1..max_exhaustive_vertices vertices.
    int max_exhaustive_vertices = 0;
    /// Path-enumeration bound; -1 selects path_length_bound(g).
    int max_len = -1;
};

struct Counterexample {
    std::string graph_text;
    std::string detail;
};

struct CrosscheckSummary {
    std::uint64_t seed = 0;
    long trials = 0;
    long pairs_checked = 0;
    long disagreements = 0;
    std::optional<Counterexample> first_counterexample;
};

/// Runs `trials` random (graph, w) instances, deciding every ordered vertex
/// pair with the relational, reachability and bounded-enumeration methods,
/// plus the moral equivalence on a random disjoint (b, c, w) triple per
/// graph; records the first disagreement found, if any.
CrosscheckSummary run_crosscheck(const CrosscheckParams& params);

}  // namespace relsep

#endif
