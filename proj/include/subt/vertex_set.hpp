#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace subt {

/// Fixed-capacity set over vertex ids 0..capacity-1, one bit per vertex.
/// Binary operations require both operands to share the same capacity.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_(static_cast<size_t>((capacity + 63) / 64), 0) {}

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v) s.insert(v);
        return s;
    }

    static VertexSet of(int capacity, std::initializer_list<int> vs) {
        VertexSet s(capacity);
        for (int v : vs) s.insert(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(int v) const {
        assert(v >= 0 && v < capacity_);
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < capacity_);
        words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    /// Smallest member, or -1 if empty.
    int min() const {
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        }
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Order by the ascending vertex lists, lexicographically.
    bool lex_less(const VertexSet& o) const {
        std::vector<int> a = to_vector();
        std::vector<int> b = o.to_vector();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        for_each([&out](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w != 0) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        });
        out += "}";
        return out;
    }

private:
    int capacity_ = 0;
    std::vector<uint64_t> words_;
};

/// Strictly better under the solver tie-break: smaller size, then
/// lexicographically smaller ascending vertex list.
inline bool better_solution_set(const VertexSet& a, const VertexSet& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.lex_less(b);
}

}  // namespace subt
