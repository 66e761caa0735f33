#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "error.hpp"

namespace ggk {

// Fixed-capacity set of vertex ids with bitset semantics. The capacity is
// large enough for the witness trees built by the inverse construction on
// desk-scale targets.
class VertexSet {
public:
    static constexpr int word_bits = 64;
    static constexpr int words = 8;
    static constexpr int capacity = words * word_bits;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

        int operator*() const { return pos_; }
        iterator& operator++() {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        int pos_ = capacity;
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.bits_[0] = mask;
        s.count_ = std::popcount(mask);
        return s;
    }

    template <class Range>
    static VertexSet from_range(const Range& r) {
        VertexSet s;
        for (int v : r) s.insert(v);
        return s;
    }

    bool contains(int v) const { return (bits_[v / word_bits] >> (v % word_bits)) & 1U; }

    void insert(int v) {
        check(v);
        std::uint64_t& w = bits_[v / word_bits];
        std::uint64_t bit = std::uint64_t{1} << (v % word_bits);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void erase(int v) {
        check(v);
        std::uint64_t& w = bits_[v / word_bits];
        std::uint64_t bit = std::uint64_t{1} << (v % word_bits);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    // Smallest member >= from, or capacity when there is none.
    int next(int from) const {
        if (from >= capacity) return capacity;
        int wi = from / word_bits;
        std::uint64_t w = bits_[wi] & (~std::uint64_t{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + std::countr_zero(w);
            if (++wi == words) return capacity;
            w = bits_[wi];
        }
    }

    int front() const { return next(0); }

    iterator begin() const { return {this, next(0)}; }
    iterator end() const { return {this, capacity}; }

    std::vector<int> members() const { return {begin(), end()}; }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < words; ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < words; ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) bits_[i] |= o.bits_[i];
        recount();
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) bits_[i] &= o.bits_[i];
        recount();
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) bits_[i] &= ~o.bits_[i];
        recount();
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) bits_[i] ^= o.bits_[i];
        recount();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    // (this - {out}) + {in}
    VertexSet swapped(int out, int in) const {
        VertexSet s = *this;
        s.erase(out);
        s.insert(in);
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    // Lexicographic order on the ascending member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        for (int i = 0; i < words; ++i) {
            std::uint64_t diff = a.bits_[i] ^ b.bits_[i];
            if (!diff) continue;
            int w = i * word_bits + std::countr_zero(diff);
            // Lists agree below w; the one holding w is smaller unless the
            // other has nothing beyond w (then the other is a proper prefix).
            const VertexSet& holder = a.contains(w) ? a : b;
            const VertexSet& other = a.contains(w) ? b : a;
            bool other_continues = other.next(w + 1) != capacity;
            bool holder_smaller = other_continues;
            bool a_smaller = (&holder == &a) == holder_smaller;
            return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t w : bits_) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    // "{v1,v2,...}" ascending.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        s += '}';
        return s;
    }

private:
    static void check(int v) {
        if (v < 0 || v >= capacity)
            throw precondition_error("vertex " + std::to_string(v) + " outside VertexSet capacity");
    }

    void recount() {
        count_ = 0;
        for (std::uint64_t w : bits_) count_ += std::popcount(w);
    }

    std::array<std::uint64_t, words> bits_{};
    int count_ = 0;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace ggk
