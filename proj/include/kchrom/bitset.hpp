#pragma once

#include <bit>
#include <cstdint>

namespace kchrom {

// Fixed-width vertex set over ids 0..127. Two machine words, no allocation.
struct VertexSet {
    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    static constexpr int capacity = 128;

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet first_n(int n) {
        VertexSet s;
        if (n >= 128) {
            s.w0 = ~0ULL;
            s.w1 = ~0ULL;
        } else if (n > 64) {
            s.w0 = ~0ULL;
            s.w1 = (1ULL << (n - 64)) - 1;
        } else if (n == 64) {
            s.w0 = ~0ULL;
        } else if (n > 0) {
            s.w0 = (1ULL << n) - 1;
        }
        return s;
    }

    bool test(int v) const {
        return v < 64 ? (w0 >> v) & 1 : (w1 >> (v - 64)) & 1;
    }
    void set(int v) {
        if (v < 64)
            w0 |= 1ULL << v;
        else
            w1 |= 1ULL << (v - 64);
    }
    void reset(int v) {
        if (v < 64)
            w0 &= ~(1ULL << v);
        else
            w1 &= ~(1ULL << (v - 64));
    }

    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool empty() const { return (w0 | w1) == 0; }

    bool intersects(const VertexSet& o) const {
        return (w0 & o.w0) | (w1 & o.w1);
    }
    bool contains(const VertexSet& o) const {
        return (o.w0 & ~w0) == 0 && (o.w1 & ~w1) == 0;
    }

    // lowest set bit, -1 when empty
    int lowest() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }

    VertexSet operator&(const VertexSet& o) const { return {w0 & o.w0, w1 & o.w1}; }
    VertexSet operator|(const VertexSet& o) const { return {w0 | o.w0, w1 | o.w1}; }
    VertexSet operator^(const VertexSet& o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
    VertexSet operator~() const { return {~w0, ~w1}; }
    VertexSet& operator&=(const VertexSet& o) {
        w0 &= o.w0;
        w1 &= o.w1;
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        w0 |= o.w0;
        w1 |= o.w1;
        return *this;
    }
    VertexSet minus(const VertexSet& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }

    bool operator==(const VertexSet& o) const = default;

    // numeric order (w1 major); any fixed total order works for dedup/sorting
    bool operator<(const VertexSet& o) const {
        return w1 != o.w1 ? w1 < o.w1 : w0 < o.w0;
    }

    struct iterator {
        std::uint64_t a, b;
        int operator*() const {
            return a ? std::countr_zero(a) : 64 + std::countr_zero(b);
        }
        iterator& operator++() {
            if (a)
                a &= a - 1;
            else
                b &= b - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return a != o.a || b != o.b; }
    };
    iterator begin() const { return {w0, w1}; }
    iterator end() const { return {0, 0}; }
};

} // namespace kchrom
