#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cikit/graph.hpp"
#include "cikit/prng.hpp"
#include "cikit/relation.hpp"
#include "cikit/rules.hpp"

namespace cikit {

// Sample generators for sweeps. Everything is a pure function of the seed, so
// sweeps can be sharded across workers and merged deterministically.

// All 2^|T(V)| relations; only sensible for p <= 3 (512 relations).
// F: (const Relation&) -> bool, false stops. Returns false iff stopped.
template <typename F>
bool for_each_relation(const GroundSet& ground, F&& f) {
    auto pool = all_triples(ground);
    if (pool.size() > 20) throw std::invalid_argument("exhaustive relation sweep is too large");
    const std::uint64_t total = std::uint64_t{1} << pool.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Triple> ts;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if ((bits >> i) & 1u) ts.push_back(pool[i]);
        if (!f(Relation::from_sorted_unique(ground, std::move(ts)))) return false;
    }
    return true;
}

// All 2^(p choose 2) graphs; sensible for p <= 5.
template <typename F>
bool for_each_graph(const GroundSet& ground, F&& f) {
    const int p = ground.size();
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) slots.emplace_back(u, v);
    if (slots.size() > 12) throw std::invalid_argument("exhaustive graph sweep is too large");
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Graph g(ground);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((bits >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
        if (!f(g)) return false;
    }
    return true;
}

// Bernoulli relation: each canonical triple kept with probability `density`.
inline Relation sample_relation(const GroundSet& ground, Prng& rng, double density) {
    std::vector<Triple> ts;
    for_each_triple(ground, [&](const Triple& t) {
        if (rng.next_bool(density)) ts.push_back(t);
    });
    return Relation::from_sorted_unique(ground, std::move(ts));
}

// Closure of a sparse random seed under {D,U,C} plus an occasional extra rule,
// yielding non-trivial semigraphoids. Uniform relations are almost never
// semigraphoids, so sweeps over semigraphoid hypotheses need these.
inline Relation sample_semigraphoid(const GroundSet& ground, Prng& rng) {
    double density = 0.02 + 0.08 * rng.next_unit();
    Relation seed = sample_relation(ground, rng, density);
    std::vector<Rule> rules{Rule::D, Rule::U, Rule::C};
    switch (rng.next_below(4)) {
        case 0: rules.push_back(Rule::I); break;
        case 1: rules.push_back(Rule::M); break;
        case 2:
            rules.push_back(Rule::I);
            rules.push_back(Rule::M);
            break;
        default: break;
    }
    return close_under(seed, rules);
}

// Mixed profile for property sweeps: rotates uniform densities with
// structured closures so both sparse and closed relations appear.
inline Relation sample_mixed_relation(const GroundSet& ground, Prng& rng, std::uint64_t index) {
    switch (index % 5) {
        case 0: return sample_relation(ground, rng, 0.5);
        case 1: return sample_relation(ground, rng, 0.1);
        case 2: return sample_relation(ground, rng, 0.85);
        case 3: return sample_semigraphoid(ground, rng);
        default: {
            Relation seed = sample_relation(ground, rng, 0.05);
            std::vector<Rule> pool{Rule::D, Rule::U, Rule::C, Rule::I,
                                   Rule::M, Rule::P, Rule::R, Rule::LFwd, Rule::LBwd};
            std::vector<Rule> rules;
            for (Rule r : pool)
                if (rng.next_bool(0.35)) rules.push_back(r);
            return close_under(seed, rules);
        }
    }
}

// Erdos-Renyi graph, edge probability 1/2.
inline Graph sample_graph(const GroundSet& ground, Prng& rng) {
    Graph g(ground);
    for (int u = 0; u < ground.size(); ++u)
        for (int v = u + 1; v < ground.size(); ++v)
            if (rng.next_bool()) g.add_edge(u, v);
    return g;
}

// Random forest: vertices permuted, each attaches to a random earlier vertex
// or starts a new component.
inline Graph random_forest(const GroundSet& ground, Prng& rng) {
    const int p = ground.size();
    std::vector<int> order(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = p - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    Graph g(ground);
    for (int i = 1; i < p; ++i) {
        if (rng.next_bool(0.2)) continue;  // new component
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
        g.add_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    return g;
}

inline Graph path_graph(const GroundSet& ground) {
    Graph g(ground);
    for (int i = 0; i + 1 < ground.size(); ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace cikit
