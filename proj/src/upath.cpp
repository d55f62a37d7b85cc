#include "relsep/upath.hpp"

#include <sstream>
#include <stdexcept>

namespace relsep {

namespace {

bool junction_ok(int prev_orient, int next_orient, VertexId v, const VertexSubset& w,
                 const VertexSubset& w_closure) {
    if (prev_orient == +1 && next_orient == -1) return w_closure.test(v);
    return !w.test(v);
}

}  // namespace

std::pair<VertexId, VertexId> endpoints(const EdgePath& p) { return {p.tail(), p.head()}; }

std::pair<VertexId, VertexId> endpoints(const UndirectedPath& p) { return {p.tail(), p.head()}; }

VertexSubset intermediates(const EdgePath& p, int universe_size) {
    VertexSubset out(universe_size);
    for (std::size_t i = 1; i + 1 < p.verts.size(); ++i) out.set(p.verts[i]);
    return out;
}

VertexSubset intermediates(const UndirectedPath& p, int universe_size) {
    VertexSubset out(universe_size);
    for (std::size_t i = 1; i + 1 < p.verts.size(); ++i) out.set(p.verts[i]);
    return out;
}

UndirectedPath concatenate(const UndirectedPath& p, const UndirectedPath& q) {
    if (p.verts.empty() || q.verts.empty()) throw std::invalid_argument("malformed path operand");
    if (p.head() != q.tail())
        throw std::invalid_argument("concatenation endpoint mismatch");
    if (p.length() == 0) return q;
    if (q.length() == 0) return p;
    UndirectedPath out = p;
    out.verts.insert(out.verts.end(), q.verts.begin() + 1, q.verts.end());
    out.orients.insert(out.orients.end(), q.orients.begin(), q.orients.end());
    return out;
}

bool is_valid(const UndirectedPath& p, const Graph& g) {
    if (p.verts.empty()) return false;
    if (p.verts.size() != p.orients.size() + 1) return false;
    for (VertexId v : p.verts)
        if (v < 0 || v >= g.size()) return false;
    if (p.length() == 0) return !g.edges().test(p.verts[0], p.verts[0]);
    for (int i = 0; i < p.length(); ++i) {
        if (p.orients[i] == +1) {
            if (!g.edges().test(p.verts[i], p.verts[i + 1])) return false;
        } else if (p.orients[i] == -1) {
            if (!g.edges().test(p.verts[i + 1], p.verts[i])) return false;
        } else {
            return false;
        }
    }
    return true;
}

bool is_valid(const EdgePath& p, const Relation& edges) {
    if (p.verts.empty()) return false;
    for (VertexId v : p.verts)
        if (v < 0 || v >= edges.universe_size()) return false;
    if (p.length() == 0) return !edges.test(p.verts[0], p.verts[0]);
    for (std::size_t i = 0; i + 1 < p.verts.size(); ++i)
        if (!edges.test(p.verts[i], p.verts[i + 1])) return false;
    return true;
}

bool is_active(const UndirectedPath& p, const Graph& g, const VertexSubset& w) {
    return is_active(p, g, w, ancestral_closure(g, w));
}

bool is_active(const UndirectedPath& p, const Graph& g, const VertexSubset& w,
               const VertexSubset& w_closure) {
    if (!is_valid(p, g)) throw std::invalid_argument("not a valid undirected path of this graph");
    for (int i = 0; i + 1 < p.length(); ++i)
        if (!junction_ok(p.orients[i], p.orients[i + 1], p.verts[i + 1], w, w_closure)) return false;
    return true;
}

void visit_undirected_paths(const Graph& g, VertexId x, VertexId y, int max_len,
                            const std::function<bool(const UndirectedPath&)>& visit) {
    if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
        throw std::out_of_range("vertex index out of range");
    const Relation& e = g.edges();

    UndirectedPath cur;
    cur.verts.push_back(x);
    bool keep_going = true;

    // Exact-length DFS, restarted per length so emission is length-lexicographic.
    std::function<void(int, int)> extend = [&](int depth, int target_len) {
        if (!keep_going) return;
        if (depth == target_len) {
            if (cur.head() == y) keep_going = visit(cur);
            return;
        }
        const VertexId v = cur.verts.back();
        for (VertexId u = 0; u < g.size() && keep_going; ++u) {
            if (e.test(v, u)) {
                cur.verts.push_back(u);
                cur.orients.push_back(+1);
                extend(depth + 1, target_len);
                cur.verts.pop_back();
                cur.orients.pop_back();
            }
            if (!keep_going) break;
            if (e.test(u, v)) {
                cur.verts.push_back(u);
                cur.orients.push_back(-1);
                extend(depth + 1, target_len);
                cur.verts.pop_back();
                cur.orients.pop_back();
            }
        }
    };

    if (x == y && !e.test(x, x) && max_len >= 0 && keep_going) keep_going = visit(cur);
    for (int len = 1; len <= max_len && keep_going; ++len) extend(0, len);
}

std::vector<UndirectedPath> enumerate_undirected_paths(const Graph& g, VertexId x, VertexId y,
                                                       int max_len) {
    std::vector<UndirectedPath> out;
    visit_undirected_paths(g, x, y, max_len, [&](const UndirectedPath& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

bool exists_active_path_bounded(const Graph& g, VertexId x, VertexId y, const VertexSubset& w,
                                int max_len) {
    if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
        throw std::out_of_range("vertex index out of range");
    if (w.universe_size() != g.size())
        throw std::invalid_argument("subset universe does not match graph");
    const Relation& e = g.edges();
    if (x == y && !e.test(x, x) && max_len >= 0) return true;

    const VertexSubset w_closure = ancestral_closure(g, w);

    // DFS over active prefixes only: a blocked junction blocks every
    // extension, and any active prefix that touches y is itself a witness.
    std::function<bool(VertexId, int, int)> search = [&](VertexId v, int last_orient,
                                                         int remaining) -> bool {
        if (v == y) return true;
        if (remaining == 0) return false;
        for (VertexId u = 0; u < g.size(); ++u) {
            if (e.test(v, u) && junction_ok(last_orient, +1, v, w, w_closure) &&
                search(u, +1, remaining - 1))
                return true;
            if (e.test(u, v) && junction_ok(last_orient, -1, v, w, w_closure) &&
                search(u, -1, remaining - 1))
                return true;
        }
        return false;
    };

    // Seed steps have no junction to check.
    for (VertexId u = 0; u < g.size(); ++u) {
        if (max_len < 1) break;
        if (e.test(x, u) && search(u, +1, max_len - 1)) return true;
        if (e.test(u, x) && search(u, -1, max_len - 1)) return true;
    }
    return false;
}

int path_length_bound(const Graph& g) { return 2 * g.size() + 2; }

Relation endpoint_relation(const std::vector<UndirectedPath>& paths, int universe_size) {
    Relation out(universe_size);
    for (const auto& p : paths) out.set(p.tail(), p.head());
    return out;
}

std::string to_string(const UndirectedPath& p, const Graph& g) {
    std::ostringstream out;
    out << g.name(p.verts[0]);
    for (int i = 0; i < p.length(); ++i)
        out << " -[" << (p.orients[i] == +1 ? '+' : '-') << "]-> " << g.name(p.verts[i + 1]);
    return out.str();
}

std::string to_string(const EdgePath& p, const Graph& g) {
    std::ostringstream out;
    out << g.name(p.verts[0]);
    for (std::size_t i = 1; i < p.verts.size(); ++i) out << " -- " << g.name(p.verts[i]);
    return out.str();
}

}  // namespace relsep
