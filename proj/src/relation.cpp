#include "relsep/relation.hpp"

#include <bit>
#include <stdexcept>

namespace relsep {

namespace {

constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

// Clears bits at positions >= n in the last word.
void mask_tail(std::vector<std::uint64_t>& bits, int n, int words, int rows) {
    if (n % kWordBits == 0 || words == 0) return;
    const std::uint64_t mask = (std::uint64_t{1} << (n % kWordBits)) - 1;
    for (int i = 0; i < rows; ++i) bits[static_cast<std::size_t>(i) * words + words - 1] &= mask;
}

}  // namespace

VertexSubset::VertexSubset(int universe_size)
    : n_(universe_size), bits_(static_cast<std::size_t>(words_for(universe_size)), 0) {
    if (universe_size < 0) throw std::invalid_argument("negative universe size");
}

VertexSubset VertexSubset::all(int universe_size) {
    VertexSubset s(universe_size);
    for (auto& w : s.bits_) w = ~std::uint64_t{0};
    mask_tail(s.bits_, s.n_, words_for(s.n_), 1);
    return s;
}

bool VertexSubset::test(VertexId v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    return (bits_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1;
}

void VertexSubset::set(VertexId v, bool value) {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (v % kWordBits);
    if (value)
        bits_[static_cast<std::size_t>(v) / kWordBits] |= bit;
    else
        bits_[static_cast<std::size_t>(v) / kWordBits] &= ~bit;
}

bool VertexSubset::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

int VertexSubset::count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

VertexSubset VertexSubset::operator~() const {
    VertexSubset s(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
    mask_tail(s.bits_, n_, words_for(n_), 1);
    return s;
}

VertexSubset VertexSubset::operator|(const VertexSubset& other) const {
    check_same_universe(other);
    VertexSubset s(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] | other.bits_[i];
    return s;
}

VertexSubset VertexSubset::operator&(const VertexSubset& other) const {
    check_same_universe(other);
    VertexSubset s(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] & other.bits_[i];
    return s;
}

bool VertexSubset::operator==(const VertexSubset& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

bool VertexSubset::intersects(const VertexSubset& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & other.bits_[i]) return true;
    return false;
}

std::vector<VertexId> VertexSubset::members() const {
    std::vector<VertexId> out;
    for (int v = 0; v < n_; ++v)
        if (test(v)) out.push_back(v);
    return out;
}

void VertexSubset::check_same_universe(const VertexSubset& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("vertex subsets from different universes (" + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_) + ")");
}

Relation::Relation(int universe_size)
    : n_(universe_size),
      words_(words_for(universe_size)),
      bits_(static_cast<std::size_t>(universe_size) * words_for(universe_size), 0) {
    if (universe_size < 0) throw std::invalid_argument("negative universe size");
}

Relation Relation::identity(int universe_size) {
    Relation r(universe_size);
    for (int i = 0; i < universe_size; ++i) r.set(i, i);
    return r;
}

Relation Relation::full(int universe_size) {
    Relation r(universe_size);
    for (auto& w : r.bits_) w = ~std::uint64_t{0};
    mask_tail(r.bits_, r.n_, r.words_, r.n_);
    return r;
}

bool Relation::test(VertexId b, VertexId c) const {
    if (b < 0 || b >= n_ || c < 0 || c >= n_) throw std::out_of_range("vertex index out of range");
    return (row(b)[static_cast<std::size_t>(c) / kWordBits] >> (c % kWordBits)) & 1;
}

void Relation::set(VertexId b, VertexId c, bool value) {
    if (b < 0 || b >= n_ || c < 0 || c >= n_) throw std::out_of_range("vertex index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
    if (value)
        row(b)[static_cast<std::size_t>(c) / kWordBits] |= bit;
    else
        row(b)[static_cast<std::size_t>(c) / kWordBits] &= ~bit;
}

bool Relation::is_empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

int Relation::count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

Relation Relation::operator~() const {
    Relation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    mask_tail(r.bits_, n_, words_, n_);
    return r;
}

Relation Relation::operator|(const Relation& other) const {
    check_same_universe(other);
    Relation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | other.bits_[i];
    return r;
}

Relation Relation::operator&(const Relation& other) const {
    check_same_universe(other);
    Relation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & other.bits_[i];
    return r;
}

bool Relation::operator==(const Relation& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

std::vector<std::pair<VertexId, VertexId>> Relation::pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
            if (test(b, c)) out.emplace_back(b, c);
    return out;
}

void Relation::check_same_universe(const Relation& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("relations from different universes (" + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_) + ")");
}

Relation compose(const Relation& r, const Relation& s) {
    r.check_same_universe(s);
    Relation out(r.n_);
    for (int i = 0; i < r.n_; ++i) {
        const std::uint64_t* ri = r.row(i);
        std::uint64_t* oi = out.row(i);
        for (int wj = 0; wj < r.words_; ++wj) {
            std::uint64_t word = ri[wj];
            while (word) {
                const int j = wj * kWordBits + std::countr_zero(word);
                word &= word - 1;
                const std::uint64_t* sj = s.row(j);
                for (int k = 0; k < r.words_; ++k) oi[k] |= sj[k];
            }
        }
    }
    return out;
}

Relation converse(const Relation& r) {
    Relation out(r.universe_size());
    for (int b = 0; b < r.universe_size(); ++b)
        for (int c = 0; c < r.universe_size(); ++c)
            if (r.test(b, c)) out.set(c, b);
    return out;
}

Relation diagonal(const VertexSubset& s) {
    Relation out(s.universe_size());
    for (int v = 0; v < s.universe_size(); ++v)
        if (s.test(v)) out.set(v, v);
    return out;
}

bool is_subset(const Relation& r, const Relation& s) {
    r.check_same_universe(s);
    for (std::size_t i = 0; i < r.bits_.size(); ++i)
        if (r.bits_[i] & ~s.bits_[i]) return false;
    return true;
}

Relation transitive_closure(const Relation& r) {
    // Warshall fixpoint on bit rows.
    Relation out = r;
    const int n = out.n_;
    for (int k = 0; k < n; ++k) {
        const std::uint64_t* rk = out.row(k);
        std::vector<std::uint64_t> krow(rk, rk + out.words_);
        for (int i = 0; i < n; ++i) {
            if (!out.test(i, k)) continue;
            std::uint64_t* ri = out.row(i);
            for (int w = 0; w < out.words_; ++w) ri[w] |= krow[w];
        }
    }
    return out;
}

Relation reflexive_transitive_closure(const Relation& r) {
    return transitive_closure(r) | Relation::identity(r.universe_size());
}

VertexSubset foreset(const Relation& r, const VertexSubset& c) {
    if (r.n_ != c.universe_size())
        throw std::invalid_argument("relation and subset from different universes");
    VertexSubset out(r.n_);
    for (int b = 0; b < r.n_; ++b) {
        const std::uint64_t* rb = r.row(b);
        for (std::size_t w = 0; w < c.bits_.size(); ++w) {
            if (rb[w] & c.bits_[w]) {
                out.set(b);
                break;
            }
        }
    }
    return out;
}

VertexSubset afterset(const Relation& r, const VertexSubset& b) {
    if (r.n_ != b.universe_size())
        throw std::invalid_argument("relation and subset from different universes");
    VertexSubset out(r.n_);
    for (int v = 0; v < r.n_; ++v) {
        if (!b.test(v)) continue;
        const std::uint64_t* rv = r.row(v);
        for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] |= rv[w];
    }
    return out;
}

}  // namespace relsep
