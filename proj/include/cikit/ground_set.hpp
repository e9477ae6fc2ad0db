#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cikit/bits.hpp"

namespace cikit {

inline constexpr int kMaxGroundSize = 16;  // all subset arithmetic fits one word

// Ordered list of distinct vertex labels. The label <-> index bijection is
// fixed for the lifetime of the value.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty() || static_cast<int>(labels_.size()) > kMaxGroundSize)
            throw std::invalid_argument("ground set size must be between 1 and 16");
        for (const auto& l : labels_) {
            if (l.empty()) throw std::invalid_argument("empty vertex label");
            for (char c : l)
                if (c == ' ' || c == '\t' || c == ';' || c == '#')
                    throw std::invalid_argument("vertex label contains reserved character: " + l);
        }
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("vertex labels must be distinct");
    }

    // Convenience: single-letter labels a, b, c, ...
    static GroundSet alphabetic(int p) {
        std::vector<std::string> labels;
        for (int i = 0; i < p; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
        return GroundSet(std::move(labels));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    mask_t full() const { return full_mask(size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }

    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[static_cast<std::size_t>(i)] == label) return i;
        throw std::invalid_argument("unknown vertex label: " + label);
    }

    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
};

inline void require_same_ground(const GroundSet& a, const GroundSet& b) {
    if (!(a == b)) throw std::invalid_argument("ground set mismatch");
}

// Subset of ground-set indices as a bitmask. Plain value type; operations
// needing the ground size take it explicitly.
struct VertexSet {
    mask_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(mask_t m) : bits(m) {}

    bool empty() const { return bits == 0; }
    int count() const { return popcount(bits); }
    bool contains(int v) const { return (bits >> v) & 1u; }
    bool is_singleton() const { return bits != 0 && (bits & (bits - 1)) == 0; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
};

inline VertexSet singleton(int v) { return VertexSet(mask_t{1} << v); }

inline bool disjoint(VertexSet a, VertexSet b) { return disjoint(a.bits, b.bits); }
inline bool is_subset(VertexSet a, VertexSet b) { return is_subset(a.bits, b.bits); }

inline VertexSet complement(VertexSet s, const GroundSet& ground) {
    return VertexSet(~s.bits & ground.full());
}

inline void require_valid(VertexSet s, const GroundSet& ground) {
    if ((s.bits & ~ground.full()) != 0)
        throw std::invalid_argument("vertex set references indices outside the ground set");
}

// Parses a space-separated label list into a set; formats one back out with
// labels in index order.
inline VertexSet vertex_set_of(const GroundSet& ground, const std::vector<std::string>& labels) {
    VertexSet s;
    for (const auto& l : labels) s = s | singleton(ground.index_of(l));
    return s;
}

inline std::string format_vertex_set(VertexSet s, const GroundSet& ground) {
    std::string out;
    for_each_vertex(s.bits, [&](int v) {
        if (!out.empty()) out += ' ';
        out += ground.label(v);
    });
    return out;
}

}  // namespace cikit
