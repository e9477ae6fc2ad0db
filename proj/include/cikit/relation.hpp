#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cikit/triple.hpp"

namespace cikit {

// Symmetry-closed set of canonical triples over one ground set. Immutable
// after construction; all mutation happens by building new values.
class Relation {
public:
    explicit Relation(GroundSet ground) : ground_(std::move(ground)) { build_index(); }

    Relation(GroundSet ground, std::vector<Triple> triples) : ground_(std::move(ground)) {
        for (auto& t : triples) {
            require_valid(t, ground_);
            t = canonical_triple(t.a, t.b, t.c);
        }
        std::sort(triples.begin(), triples.end());
        triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
        triples_ = std::move(triples);
        build_index();
    }

    // Trusted path for callers that produce canonical, sorted, unique triples.
    static Relation from_sorted_unique(GroundSet ground, std::vector<Triple> triples) {
        Relation r(std::move(ground));
        r.triples_ = std::move(triples);
        r.build_index();
        return r;
    }

    const GroundSet& ground() const { return ground_; }
    std::span<const Triple> triples() const { return triples_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    // Membership is orientation-insensitive: (A,B|C) and (B,A|C) agree.
    bool contains(VertexSet a, VertexSet b, VertexSet c) const {
        if (b < a) std::swap(a, b);
        return contains_canonical(Triple{a, b, c});
    }
    bool contains(const Triple& t) const { return contains(t.a, t.b, t.c); }

    friend bool operator==(const Relation& x, const Relation& y) {
        return x.ground_ == y.ground_ && x.triples_ == y.triples_;
    }

private:
    bool contains_canonical(const Triple& t) const {
        if (!index_.empty()) {
            std::uint64_t key = index_key(t);
            return (index_[key >> 6] >> (key & 63)) & 1u;
        }
        return std::binary_search(triples_.begin(), triples_.end(), t);
    }

    std::uint64_t index_key(const Triple& t) const {
        const int p = ground_.size();
        return (static_cast<std::uint64_t>(t.a.bits) << (2 * p)) |
               (static_cast<std::uint64_t>(t.b.bits) << p) | t.c.bits;
    }

    void build_index() {
        index_.clear();
        const int p = ground_.size();
        if (p > 8) return;  // fall back to binary search
        index_.assign((std::size_t{1} << (3 * p)) / 64 + 1, 0);
        for (const auto& t : triples_) {
            std::uint64_t key = index_key(t);
            index_[key >> 6] |= std::uint64_t{1} << (key & 63);
        }
    }

    GroundSet ground_;
    std::vector<Triple> triples_;       // canonical, sorted, unique
    std::vector<std::uint64_t> index_;  // direct-addressed membership bits, p <= 8
};

// Triple-wise dual: {(A,B|C)} -> {(A,B|V\ABC)}. Bijective on T(V), involution.
inline Relation relation_dual(const Relation& L) {
    std::vector<Triple> out;
    out.reserve(L.size());
    for (const auto& t : L.triples()) out.push_back(dual(t, L.ground()));
    std::sort(out.begin(), out.end());
    return Relation::from_sorted_unique(L.ground(), std::move(out));
}

// Restriction to pairwise triples: both sides singletons.
inline Relation pairwise_part(const Relation& L) {
    std::vector<Triple> out;
    for (const auto& t : L.triples())
        if (is_pairwise(t)) out.push_back(t);
    return Relation::from_sorted_unique(L.ground(), std::move(out));
}

inline Relation intersect(const Relation& x, const Relation& y) {
    require_same_ground(x.ground(), y.ground());
    std::vector<Triple> out;
    std::set_intersection(x.triples().begin(), x.triples().end(), y.triples().begin(),
                          y.triples().end(), std::back_inserter(out));
    return Relation::from_sorted_unique(x.ground(), std::move(out));
}

inline Relation unite(const Relation& x, const Relation& y) {
    require_same_ground(x.ground(), y.ground());
    std::vector<Triple> out;
    std::set_union(x.triples().begin(), x.triples().end(), y.triples().begin(), y.triples().end(),
                   std::back_inserter(out));
    return Relation::from_sorted_unique(x.ground(), std::move(out));
}

inline bool is_subset(const Relation& x, const Relation& y) {
    require_same_ground(x.ground(), y.ground());
    return std::includes(y.triples().begin(), y.triples().end(), x.triples().begin(),
                         x.triples().end());
}

// Compact single-line rendering for witnesses and logs.
inline std::string format_relation_inline(const Relation& L) {
    std::string out = "{";
    bool first = true;
    for (const auto& t : L.triples()) {
        if (!first) out += ", ";
        out += "(" + format_triple(t, L.ground()) + ")";
        first = false;
    }
    return out + "}";
}

}  // namespace cikit
