#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "cspace/errors.hpp"

namespace cspace {

// Fixed-capacity bitset over a space's points. Capacity 256 bits covers the
// largest constructible universe (the full Boolean space on 3 variables has
// 255 points); width is the owning space's |X|.
class Bitset {
  public:
    static constexpr unsigned kCapacity = 256;
    static constexpr unsigned kWords = kCapacity / 64;

    Bitset() = default;

    explicit Bitset(unsigned width) : width_(check_width(width)) {}

    Bitset(unsigned width, std::initializer_list<unsigned> bits) : Bitset(width) {
        for (unsigned b : bits) set(b);
    }

    // Width <= 64 fast path: the low `width` bits of `value`.
    static Bitset from_word(unsigned width, std::uint64_t value) {
        Bitset s(width);
        s.w_[0] = width >= 64 ? value : (value & low_mask(width));
        return s;
    }

    static Bitset universe(unsigned width) {
        Bitset s(width);
        for (unsigned i = 0; i < kWords; ++i) {
            unsigned lo = i * 64;
            if (width <= lo) break;
            unsigned n = width - lo;
            s.w_[i] = n >= 64 ? ~0ull : low_mask(n);
        }
        return s;
    }

    unsigned width() const { return width_; }

    bool test(unsigned i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(unsigned i) {
        if (i >= width_) throw UsageError("bit index out of range");
        w_[i >> 6] |= 1ull << (i & 63);
    }
    void reset(unsigned i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

    unsigned count() const {
        unsigned n = 0;
        for (auto w : w_) n += static_cast<unsigned>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool subset_of(const Bitset& o) const {
        for (unsigned i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (unsigned i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r(width_);
        for (unsigned i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r(width_);
        for (unsigned i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    Bitset minus(const Bitset& o) const {
        Bitset r(width_);
        for (unsigned i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    Bitset complement() const { return universe(width_).minus(*this); }

    Bitset with(unsigned i) const {
        Bitset r = *this;
        r.set(i);
        return r;
    }

    bool operator==(const Bitset& o) const { return width_ == o.width_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Numeric order of the bit pattern (high word first); the project's
    // canonical "lex" tiebreak after size.
    bool numeric_less(const Bitset& o) const {
        for (unsigned i = kWords; i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    // (size ascending, numeric) — canonical order for representatives.
    bool size_lex_less(const Bitset& o) const {
        unsigned a = count(), b = o.count();
        if (a != b) return a < b;
        return numeric_less(o);
    }

    std::vector<unsigned> indices() const {
        std::vector<unsigned> out;
        out.reserve(count());
        for (unsigned i = 0; i < kWords; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                out.push_back(i * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    std::uint64_t low_word() const { return w_[0]; }

    std::size_t hash() const {
        std::size_t h = width_;
        for (auto w : w_) h = h * 0x9E3779B97F4A7C15ull + std::hash<std::uint64_t>{}(w);
        return h;
    }

  private:
    static unsigned check_width(unsigned w) {
        if (w > kCapacity) throw DomainError("universe too large: at most 256 points supported");
        return w;
    }
    static std::uint64_t low_mask(unsigned n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

    std::array<std::uint64_t, kWords> w_{};
    unsigned width_ = 0;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

// All k-subsets of {0..n-1} in ascending numeric order.
template <typename Fn>
void for_each_subset_of_size(unsigned n, unsigned k, Fn fn) {
    if (k > n) return;
    if (k == 0) {
        fn(Bitset(n));
        return;
    }
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Bitset s(n);
        for (unsigned i : idx) s.set(i);
        fn(s);
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == n - k + static_cast<unsigned>(pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned i = static_cast<unsigned>(pos) + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace cspace
