// lattice.hpp -- finitely supported integer maps on Z^2 and their
// Laurent-polynomial arithmetic (two commuting variables)
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tg {

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

struct Index2 {
    int p = 0, q = 0;
    auto operator<=>(const Index2&) const = default;
};

// Finitely supported map Z^2 -> Z. Entries with coefficient 0 are never
// stored; equality is entry-wise. Used with four semantic wrappers
// (translation vectors, C(t1) coordinates, exponential sums, winding
// maps), all sharing this arithmetic.
class LatticeMap {
public:
    using Storage = std::map<Index2, int64_t>;

    LatticeMap() = default;
    LatticeMap(std::initializer_list<std::pair<Index2, int64_t>> init) {
        for (auto& [k, v] : init) add(k, v);
    }

    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    const Storage& entries() const { return entries_; }
    int64_t coeff(Index2 k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? 0 : it->second;
    }

    void add(Index2 k, int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = entries_.try_emplace(k, 0);
        it->second = checked_add(it->second, c);
        if (it->second == 0) entries_.erase(it);
    }

    LatticeMap& operator+=(const LatticeMap& o) {
        for (auto& [k, v] : o.entries_) add(k, v);
        return *this;
    }
    friend LatticeMap operator+(LatticeMap a, const LatticeMap& b) { return a += b; }

    LatticeMap negated() const {
        LatticeMap r;
        for (auto& [k, v] : entries_) r.entries_.emplace(k, -v);
        return r;
    }
    LatticeMap scaled(int64_t c) const {
        LatticeMap r;
        if (c == 0) return r;
        for (auto& [k, v] : entries_) r.entries_.emplace(k, checked_mul(v, c));
        return r;
    }
    // multiply by the monomial X^dp Y^dq (translate all indices)
    LatticeMap shifted(int dp, int dq) const {
        LatticeMap r;
        for (auto& [k, v] : entries_) r.entries_.emplace(Index2{k.p + dp, k.q + dq}, v);
        return r;
    }

    // sum of |coefficients|
    int64_t mass() const {
        int64_t m = 0;
        for (auto& [k, v] : entries_) m = checked_add(m, v < 0 ? -v : v);
        return m;
    }

    Index2 lex_min() const { return entries_.begin()->first; }
    Index2 lex_max() const { return entries_.rbegin()->first; }

    bool operator==(const LatticeMap&) const = default;
    bool operator<(const LatticeMap& o) const { return entries_ < o.entries_; }

private:
    Storage entries_;
};

// Laurent-ring product.
LatticeMap laurent_mul(const LatticeMap& a, const LatticeMap& b);

// Exact division in Z[X^,Y^]; returns false when the divisor does not
// divide the dividend (quotient left unspecified then). Division is by
// the lex-leading term with a bounding-box guard, so it terminates on
// every input.
bool laurent_div(const LatticeMap& dividend, const LatticeMap& divisor, LatticeMap& quotient);

}  // namespace tg
