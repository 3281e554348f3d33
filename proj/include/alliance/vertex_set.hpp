#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace alliance {

/// A subset of the vertices {0, ..., universe-1} of some host graph, stored
/// as a packed bitset. All set algebra is word-wise, so membership tests,
/// intersections and popcounts stay cheap inside solver loops.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0)
            throw std::invalid_argument("VertexSet: negative universe");
        n_ = universe;
        words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet from_vertices(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    /// Builds a set from a bitmask; only valid for universes of at most 64.
    static VertexSet from_mask(int universe, std::uint64_t mask) {
        if (universe > 64)
            throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
        VertexSet s(universe);
        if (universe > 0) s.words_[0] = mask;
        return s;
    }

    int universe() const noexcept { return n_; }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int size() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool contains(int v) const {
        check_range(v);
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference (this minus o).
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    int intersection_size(const VertexSet& o) const {
        check_same(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::uint64_t mask() const {
        if (n_ > 64)
            throw std::invalid_argument("VertexSet::mask: universe exceeds 64");
        return words_.empty() ? 0 : words_[0];
    }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    /// Lexicographic order on the sorted member sequences. Let x be the
    /// smallest vertex in the symmetric difference: if x is in a, a is
    /// smaller unless b has nothing beyond x (proper prefix), and dually.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        a.check_same(b);
        int x = -1;
        for (std::size_t i = 0; i < a.words_.size() && x < 0; ++i) {
            std::uint64_t d = a.words_[i] ^ b.words_[i];
            if (d) x = static_cast<int>(i * 64) + std::countr_zero(d);
        }
        if (x < 0) return false; // equal
        bool in_a = a.contains(x);
        const VertexSet& other = in_a ? b : a;
        bool other_has_larger = false;
        other.for_each([&](int v) {
            if (v > x) other_has_larger = true;
        });
        return in_a ? other_has_larger : !other_has_larger;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        s += "}";
        return s;
    }

private:
    void check_range(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }
    void check_same(const VertexSet& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void mask_tail() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace alliance
