#pragma once

#include <bit>
#include <cstdint>

namespace cikit {

using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return std::popcount(m); }

// Index of the lowest set bit; undefined for m == 0.
inline int lowest_bit(mask_t m) { return std::countr_zero(m); }

inline mask_t full_mask(int p) { return (p >= 32) ? ~mask_t{0} : ((mask_t{1} << p) - 1); }

inline bool disjoint(mask_t a, mask_t b) { return (a & b) == 0; }

inline bool is_subset(mask_t a, mask_t b) { return (a & ~b) == 0; }

// Visits every submask of `set` (including 0 and `set` itself) in increasing
// numeric order. F: (mask_t) -> void.
template <typename F>
void for_each_submask(mask_t set, F&& f) {
    mask_t sub = 0;
    while (true) {
        f(sub);
        if (sub == set) break;
        sub = (sub - set) & set;  // next submask in increasing order
    }
}

// Visits every vertex index contained in `m`, ascending. F: (int) -> void.
template <typename F>
void for_each_vertex(mask_t m, F&& f) {
    while (m != 0) {
        int v = lowest_bit(m);
        f(v);
        m &= m - 1;
    }
}

}  // namespace cikit
