#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cikit/relation.hpp"

namespace cikit {

// Simple undirected graph on a ground set, adjacency kept as per-vertex
// bitmasks. The same object serves the bidirected reading; the distinction
// lives at the Markov/faithfulness layer.
class Graph {
public:
    explicit Graph(GroundSet ground) : ground_(std::move(ground)) { adj_.fill(0); }

    Graph(GroundSet ground, const std::vector<std::pair<int, int>>& edges)
        : Graph(std::move(ground)) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::invalid_argument("edge endpoint outside the ground set");
        adj_[static_cast<std::size_t>(u)] |= mask_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= mask_t{1} << u;
    }

    bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
    mask_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < size(); ++u)
            for (int v = u + 1; v < size(); ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const { return edges().size(); }

    friend bool operator==(const Graph& x, const Graph& y) {
        return x.ground_ == y.ground_ && x.adj_ == y.adj_;
    }

private:
    GroundSet ground_;
    std::array<mask_t, kMaxGroundSize> adj_;
};

// True iff every path from A to B meets S. Reachability from A with S removed.
inline bool separates(const Graph& g, VertexSet a, VertexSet b, VertexSet s) {
    if (a.empty() || b.empty()) throw std::invalid_argument("separation needs nonempty A and B");
    if (!disjoint(a, b) || !disjoint(a, s) || !disjoint(b, s))
        throw std::invalid_argument("separation sets must be pairwise disjoint");
    require_valid(a, g.ground());
    require_valid(b, g.ground());
    require_valid(s, g.ground());

    mask_t reach = a.bits;
    while (true) {
        mask_t next = reach;
        for_each_vertex(reach, [&](int v) { next |= g.neighbors(v); });
        next &= ~s.bits;
        if (next == reach) break;
        reach = next;
    }
    return (reach & b.bits) == 0;
}

inline bool separates(const Graph& g, const Triple& t) { return separates(g, t.a, t.b, t.c); }

// [G]: all separation triples of G, brute force over T(V).
inline Relation separation_relation(const Graph& g) {
    if (g.size() > 8) throw std::invalid_argument("separation relation capped at p <= 8");
    std::vector<Triple> out;
    for_each_triple(g.ground(), [&](const Triple& t) {
        if (separates(g, t)) out.push_back(t);
    });
    return Relation::from_sorted_unique(g.ground(), std::move(out));
}

// Concentration reading: edge (a,b) absent iff (a,b | V\ab) in L.
inline Graph undirected_graph_of(const Relation& L) {
    Graph g(L.ground());
    const mask_t full = L.ground().full();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            mask_t ab = (mask_t{1} << u) | (mask_t{1} << v);
            if (!L.contains(singleton(u), singleton(v), VertexSet(full & ~ab))) g.add_edge(u, v);
        }
    return g;
}

// Covariance reading: edge (a,b) absent iff (a,b | empty) in L.
inline Graph bidirected_graph_of(const Relation& L) {
    Graph g(L.ground());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!L.contains(singleton(u), singleton(v), VertexSet{})) g.add_edge(u, v);
    return g;
}

// Acyclicity via |E| = p - #components.
inline bool is_forest(const Graph& g) {
    const int p = g.size();
    std::vector<int> parent(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = p;
    for (auto [u, v] : g.edges()) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;  // edge inside a component closes a cycle
        parent[static_cast<std::size_t>(ru)] = rv;
        --components;
    }
    return true;
}

}  // namespace cikit
