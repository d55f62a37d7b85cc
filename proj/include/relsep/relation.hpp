#ifndef RELSEP_RELATION_HPP
#define RELSEP_RELATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace relsep {

using VertexId = int;

class Relation;

/// A subset of a fixed finite vertex universe, stored as a bit vector.
/// Values are immutable in spirit: every operation returns a fresh subset.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int universe_size);

    static VertexSubset none(int universe_size) { return VertexSubset(universe_size); }
    static VertexSubset all(int universe_size);

    int universe_size() const { return n_; }
    bool test(VertexId v) const;
    void set(VertexId v, bool value = true);
    bool empty() const;
    int count() const;

    VertexSubset operator~() const;
    VertexSubset operator|(const VertexSubset& other) const;
    VertexSubset operator&(const VertexSubset& other) const;
    bool operator==(const VertexSubset& other) const;
    bool operator!=(const VertexSubset& other) const { return !(*this == other); }

    bool is_subset_of(const VertexSubset& other) const;
    bool intersects(const VertexSubset& other) const;

    std::vector<VertexId> members() const;

private:
    friend class Relation;
    friend VertexSubset foreset(const Relation&, const VertexSubset&);
    friend VertexSubset afterset(const Relation&, const VertexSubset&);
    void check_same_universe(const VertexSubset& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// A binary relation on a fixed finite vertex universe: a square boolean
/// matrix with bit-packed rows. Entry (b, c) is true iff b relates to c.
///
/// Relations over universes of different sizes never interoperate; mixing
/// them throws std::invalid_argument.
class Relation {
public:
    Relation() = default;
    explicit Relation(int universe_size);

    static Relation empty(int universe_size) { return Relation(universe_size); }
    static Relation identity(int universe_size);
    static Relation full(int universe_size);

    int universe_size() const { return n_; }
    bool test(VertexId b, VertexId c) const;
    void set(VertexId b, VertexId c, bool value = true);
    bool is_empty() const;
    int count() const;

    Relation operator~() const;
    Relation operator|(const Relation& other) const;
    Relation operator&(const Relation& other) const;
    bool operator==(const Relation& other) const;
    bool operator!=(const Relation& other) const { return !(*this == other); }

    std::vector<std::pair<VertexId, VertexId>> pairs() const;

private:
    friend Relation compose(const Relation&, const Relation&);
    friend Relation converse(const Relation&);
    friend Relation transitive_closure(const Relation&);
    friend VertexSubset foreset(const Relation&, const VertexSubset&);
    friend VertexSubset afterset(const Relation&, const VertexSubset&);
    friend bool is_subset(const Relation&, const Relation&);

    void check_same_universe(const Relation& other) const;
    const std::uint64_t* row(VertexId i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    std::uint64_t* row(VertexId i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// (b,c) in result iff there is d with b R d and d S c.
Relation compose(const Relation& r, const Relation& s);

/// (b,c) in result iff (c,b) in r.
Relation converse(const Relation& r);

/// Diagonal relation restricted to a subset: (b,b) iff b in s.
Relation diagonal(const VertexSubset& s);

bool is_subset(const Relation& r, const Relation& s);

/// Least transitive relation containing r (union of all positive powers).
Relation transitive_closure(const Relation& r);

/// Transitive closure plus the diagonal.
Relation reflexive_transitive_closure(const Relation& r);

/// foreset(r, c) = { b : exists d in c with b r d }.
VertexSubset foreset(const Relation& r, const VertexSubset& c);

/// afterset(r, b) = { c : exists d in b with d r c }.
VertexSubset afterset(const Relation& r, const VertexSubset& b);

}  // namespace relsep

#endif
