#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mwis {

using Vertex = int;

// Bitset over a fixed universe {0..universe-1}. Iteration is ascending.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }
    VertexSet(int universe, const std::vector<Vertex>& vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1ULL);
    }
    void insert(Vertex v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;
    // Ascending-list lexicographic order.
    bool operator<(const VertexSet& o) const { return to_vector() < o.to_vector(); }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<Vertex>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace mwis
