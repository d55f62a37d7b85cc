// Independent reference implementations used to pin down expected values.
// Everything here works by direct definition unfolding (triple loops, naive
// fixpoints, explicit path search) and must stay free of the bit-matrix and
// relational machinery it is checking.
#ifndef RELSEP_TESTS_BRUTE_HPP
#define RELSEP_TESTS_BRUTE_HPP

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "relsep/graph.hpp"

namespace brute {

using PairSet = std::set<std::pair<int, int>>;

inline PairSet pairs_of(const relsep::Relation& r) {
    PairSet out;
    for (int b = 0; b < r.universe_size(); ++b)
        for (int c = 0; c < r.universe_size(); ++c)
            if (r.test(b, c)) out.insert({b, c});
    return out;
}

inline PairSet compose(const PairSet& r, const PairSet& s, int n) {
    PairSet out;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
                if (r.count({b, d}) && s.count({d, c})) out.insert({b, c});
    return out;
}

inline PairSet converse(const PairSet& r) {
    PairSet out;
    for (auto [b, c] : r) out.insert({c, b});
    return out;
}

// Union of all positive powers, by iterating naive composition to a fixpoint.
inline PairSet transitive_closure(const PairSet& r, int n) {
    PairSet acc = r;
    PairSet power = r;
    for (;;) {
        power = compose(power, r, n);
        PairSet next = acc;
        next.insert(power.begin(), power.end());
        if (next == acc) return acc;
        acc = std::move(next);
    }
}

inline std::set<int> foreset(const PairSet& r, const std::set<int>& c) {
    std::set<int> out;
    for (auto [b, d] : r)
        if (c.count(d)) out.insert(b);
    return out;
}

// Is there a directed simple path x -> ... -> y (at least one edge) whose
// intermediate vertices all avoid w? Simple paths suffice: the constraint is
// per-vertex, so revisiting a vertex never helps.
inline bool directed_path_avoiding(const relsep::Graph& g, int x, int y,
                                   const relsep::VertexSubset& w) {
    std::vector<char> visited(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int v) -> bool {
        for (int u = 0; u < g.size(); ++u) {
            if (!g.edges().test(v, u)) continue;
            if (u == y) return true;
            if (w.test(u) || visited[static_cast<std::size_t>(u)]) continue;
            visited[static_cast<std::size_t>(u)] = 1;
            if (self(self, u)) return true;
        }
        return false;
    };
    return dfs(dfs, x);
}

// Simple-path search from b to c through a symmetric relation, intermediates
// outside w. Used as the oracle for the moral emptiness test.
inline bool moral_simple_path_exists(const relsep::Relation& moral, const relsep::VertexSubset& b,
                                     const relsep::VertexSubset& c, const relsep::VertexSubset& w) {
    const int n = moral.universe_size();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        for (int u = 0; u < n; ++u) {
            if (!moral.test(v, u)) continue;
            if (c.test(u)) return true;
            if (w.test(u) || visited[static_cast<std::size_t>(u)]) continue;
            visited[static_cast<std::size_t>(u)] = 1;
            if (self(self, u)) return true;
        }
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (b.test(v) && dfs(dfs, v)) return true;
    return false;
}

inline relsep::Relation random_relation(int n, std::mt19937_64& rng, double density = 0.35) {
    relsep::Relation r(n);
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) r.set(b, c);
    return r;
}

inline relsep::VertexSubset random_subset(int n, std::mt19937_64& rng, double density = 0.5) {
    relsep::VertexSubset s(n);
    for (int v = 0; v < n; ++v)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) s.set(v);
    return s;
}

inline relsep::Graph random_graph(int n, std::mt19937_64& rng, double density = 0.3) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return relsep::Graph(std::move(names), random_relation(n, rng, density));
}

// Every graph on n vertices, enumerated by edge mask.
inline relsep::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    relsep::Relation edges(n);
    int bit = 0;
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c, ++bit)
            if ((mask >> bit) & 1) edges.set(b, c);
    return relsep::Graph(std::move(names), std::move(edges));
}

inline relsep::VertexSubset subset_from_mask(int n, std::uint64_t mask) {
    relsep::VertexSubset s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.set(v);
    return s;
}

}  // namespace brute

#endif
