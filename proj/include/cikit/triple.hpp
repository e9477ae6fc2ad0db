#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cikit/ground_set.hpp"

namespace cikit {

// Independence triple (A,B|C): A and B nonempty, A/B/C pairwise disjoint.
// Stored in canonical orientation a.bits < b.bits, so (A,B|C) and (B,A|C)
// share one representation and symmetry holds structurally.
struct Triple {
    VertexSet a, b, c;

    std::uint64_t encode() const {
        return (static_cast<std::uint64_t>(a.bits) << 32) |
               (static_cast<std::uint64_t>(b.bits) << 16) | c.bits;
    }

    friend bool operator==(const Triple& x, const Triple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend auto operator<=>(const Triple& x, const Triple& y) { return x.encode() <=> y.encode(); }
};

// Canonicalizes without validity checks; for internal use on known-good masks.
inline Triple canonical_triple(VertexSet a, VertexSet b, VertexSet c) {
    if (b < a) std::swap(a, b);
    return Triple{a, b, c};
}

inline Triple make_triple(VertexSet a, VertexSet b, VertexSet c) {
    if (a.empty() || b.empty()) throw std::invalid_argument("triple sides A and B must be nonempty");
    if (!disjoint(a, b) || !disjoint(a, c) || !disjoint(b, c))
        throw std::invalid_argument("triple parts must be pairwise disjoint");
    return canonical_triple(a, b, c);
}

inline Triple make_triple(const GroundSet& ground, VertexSet a, VertexSet b, VertexSet c) {
    require_valid(a, ground);
    require_valid(b, ground);
    require_valid(c, ground);
    return make_triple(a, b, c);
}

inline void require_valid(const Triple& t, const GroundSet& ground) {
    require_valid(t.a, ground);
    require_valid(t.b, ground);
    require_valid(t.c, ground);
    if (t.a.empty() || t.b.empty() || !disjoint(t.a, t.b) || !disjoint(t.a, t.c) ||
        !disjoint(t.b, t.c) || t.b < t.a)
        throw std::invalid_argument("malformed triple");
}

// (A,B|C) -> (A,B|V \ ABC). An involution.
inline Triple dual(const Triple& t, const GroundSet& ground) {
    mask_t rest = ground.full() & ~(t.a.bits | t.b.bits | t.c.bits);
    return Triple{t.a, t.b, VertexSet(rest)};
}

inline bool is_pairwise(const Triple& t) { return t.a.is_singleton() && t.b.is_singleton(); }

inline std::string format_triple(const Triple& t, const GroundSet& ground) {
    std::string out = format_vertex_set(t.a, ground) + " ; " + format_vertex_set(t.b, ground) + " ;";
    if (!t.c.empty()) out += " " + format_vertex_set(t.c, ground);
    return out;
}

// Visits every canonical triple over the ground set exactly once, in
// increasing order of Triple::encode(). F: (const Triple&) -> void.
template <typename F>
void for_each_triple(const GroundSet& ground, F&& f) {
    const mask_t full = ground.full();
    for (mask_t a = 1; a <= full; ++a) {
        if ((a & ~full) != 0) continue;
        // canonical orientation: only b > a
        for (mask_t b = a + 1; b <= full; ++b) {
            if ((b & ~full) != 0 || (a & b) != 0) continue;
            for_each_submask(full & ~(a | b), [&](mask_t c) {
                f(Triple{VertexSet(a), VertexSet(b), VertexSet(c)});
            });
        }
    }
}

// Materialized T(V) in canonical order. Guarded to sizes where the full
// enumeration is tractable.
inline std::vector<Triple> all_triples(const GroundSet& ground) {
    if (ground.size() > 8) throw std::invalid_argument("triple enumeration capped at p <= 8");
    std::vector<Triple> out;
    for_each_triple(ground, [&](const Triple& t) { out.push_back(t); });
    return out;
}

// |T(V)| for canonical triples: (4^p - 2*3^p + 2^p) / 2.
inline std::uint64_t canonical_triple_count(int p) {
    auto ipow = [](std::uint64_t base, int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    return (ipow(4, p) - 2 * ipow(3, p) + ipow(2, p)) / 2;
}

}  // namespace cikit
