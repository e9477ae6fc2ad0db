#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "cikit/graph.hpp"
#include "cikit/report.hpp"
#include "cikit/rules.hpp"

namespace cikit {

// Which graphical reading of a relation is in play: undirected/concentration
// (non-edge = full-conditioning independence) or bidirected/covariance
// (non-edge = marginal independence).
enum class Mode { undirected, bidirected };

inline const char* mode_name(Mode m) { return m == Mode::undirected ? "un" : "bi"; }

inline Mode parse_mode(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "un" || s == "undirected") return Mode::undirected;
    if (s == "bi" || s == "bidirected") return Mode::bidirected;
    throw std::invalid_argument("unknown mode: " + s + " (expected un or bi)");
}

// Every non-edge contributes its defining pairwise triple.
inline bool is_pairwise_markov(const Relation& L, const Graph& g, Mode mode) {
    require_same_ground(L.ground(), g.ground());
    const mask_t full = L.ground().full();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.has_edge(u, v)) continue;
            mask_t ab = (mask_t{1} << u) | (mask_t{1} << v);
            VertexSet cond = mode == Mode::undirected ? VertexSet(full & ~ab) : VertexSet{};
            if (!L.contains(singleton(u), singleton(v), cond)) return false;
        }
    return true;
}

// Undirected: [G] <= L. Bidirected: [G]^| <= L.
inline bool is_global_markov(const Relation& L, const Graph& g, Mode mode) {
    require_same_ground(L.ground(), g.ground());
    Relation sep = separation_relation(g);
    if (mode == Mode::bidirected) sep = relation_dual(sep);
    return is_subset(sep, L);
}

// Undirected: L <= [G]. Bidirected: L^| <= [G].
inline bool is_faithful(const Relation& L, const Graph& g, Mode mode) {
    require_same_ground(L.ground(), g.ground());
    Relation lhs = mode == Mode::bidirected ? relation_dual(L) : L;
    return is_subset(lhs, separation_relation(g));
}

// Instance check of the pairwise/global equivalence: given pairwise Markov,
// the relation is global Markov iff its intersection with [G] (undirected) or
// [G]^| (bidirected) is localizable and closed under P (resp. R).
inline VerificationReport verify_pseudo_markov_theorem(const Graph& g, const Relation& L,
                                                       Mode mode) {
    require_same_ground(L.ground(), g.ground());
    if (!is_pairwise_markov(L, g, mode))
        throw std::invalid_argument("relation is not pairwise Markov with respect to the graph");

    VerificationReport rep;
    rep.claim = mode == Mode::undirected ? "pseudo-conc" : "pseudo-cov";
    rep.population = std::string("single instance, p=") + std::to_string(g.size()) + ", mode=" +
                     mode_name(mode);

    Relation sep = separation_relation(g);
    Relation target = mode == Mode::bidirected ? relation_dual(sep) : sep;
    Relation core = intersect(L, target);

    bool global = is_subset(target, L);
    Rule rule = mode == Mode::undirected ? Rule::P : Rule::R;
    bool closed = is_localizable(core) && is_closed(core, rule);

    rep.checked = 1;
    if (global != closed) {
        rep.add_counterexample(std::string("biconditional fails: global Markov is ") +
                               (global ? "true" : "false") + ", (L)+(" + rule_name(rule) +
                               ") on the core is " + (closed ? "true" : "false"));
    }
    return rep;
}

// Tree-faithfulness instance check. Bidirected branch: closure under {M, DDT}
// plus a forest covariance graph force L^| = [G_bi]. Undirected branch:
// closure under {I, DT} plus a forest concentration graph force L = [G_un].
// Branches whose hypotheses fail count as vacuous, never as passes.
inline VerificationReport verify_tree_faithfulness(const Relation& L) {
    if (L.ground().size() > 8)
        throw std::invalid_argument("tree faithfulness check capped at p <= 8");
    VerificationReport rep;
    rep.claim = "tree-faithfulness";
    rep.population = "single relation, p=" + std::to_string(L.ground().size());

    {
        Graph gbi = bidirected_graph_of(L);
        bool hyp = is_forest(gbi) && is_closed(L, Rule::M) && is_closed(L, Rule::DDT);
        if (!hyp) {
            ++rep.vacuous;
        } else {
            ++rep.checked;
            if (!(relation_dual(L) == separation_relation(gbi)))
                rep.add_counterexample("bidirected branch: dual of L differs from the "
                                       "separation relation of its covariance forest");
        }
    }
    {
        Graph gun = undirected_graph_of(L);
        bool hyp = is_forest(gun) && is_closed(L, Rule::I) && is_closed(L, Rule::DT);
        if (!hyp) {
            ++rep.vacuous;
        } else {
            ++rep.checked;
            if (!(L == separation_relation(gun)))
                rep.add_counterexample("undirected branch: L differs from the separation "
                                       "relation of its concentration forest");
        }
    }
    return rep;
}

}  // namespace cikit
