#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace surround {

// Fixed-universe bit set over vertex indices 0..universe-1. Word count grows
// with the universe; there is no 64-vertex cap.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return n_; }
    std::size_t word_count() const { return w_.size(); }

    bool test(int v) const { return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

    // Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

namespace setops {

inline void clear(std::span<std::uint64_t> a) {
    for (auto& w : a) w = 0;
}

inline void or_into(std::span<std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

// a &= b; returns true when a changed.
inline bool and_into(std::span<std::uint64_t> a, std::span<const std::uint64_t> b) {
    bool changed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t nw = a[i] & b[i];
        changed |= nw != a[i];
        a[i] = nw;
    }
    return changed;
}

inline bool is_empty(std::span<const std::uint64_t> a) {
    for (auto w : a)
        if (w) return false;
    return true;
}

inline bool test(std::span<const std::uint64_t> a, int v) {
    return (a[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
}

template <class F>
void for_each(std::span<const std::uint64_t> a, F f) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t w = a[i];
        while (w) {
            f(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
}

}  // namespace setops

}  // namespace surround
