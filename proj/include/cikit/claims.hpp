#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cikit/gaussian.hpp"
#include "cikit/markov.hpp"
#include "cikit/parallel.hpp"
#include "cikit/populations.hpp"
#include "cikit/report.hpp"
#include "cikit/rules.hpp"

namespace cikit {

// Knobs for a claim run. Zero means "use the claim's default"; p == 3 runs
// the exhaustive population where one exists, larger p runs seeded samples.
struct ClaimParams {
    int p = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    bool exhaustive = false;
};

namespace claims_detail {

inline int effective_p(const ClaimParams& params, int fallback) {
    return params.p > 0 ? params.p : fallback;
}

inline std::uint64_t effective_budget(const ClaimParams& params, std::uint64_t fallback) {
    return params.budget > 0 ? params.budget : fallback;
}

// Seeded sample sweep, sharded across workers; merge order is fixed by shard
// index so output does not depend on scheduling.
// check: (std::uint64_t index, Prng&, VerificationReport&) -> void
template <typename Check>
void sweep_samples(VerificationReport& rep, std::uint64_t budget, std::uint64_t seed,
                   Check&& check) {
    auto shards = sharded_run<VerificationReport>(
        budget, [&](std::uint64_t begin, std::uint64_t end, VerificationReport& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
                Prng rng = Prng::derive(seed, i);
                check(i, rng, out);
            }
        });
    for (const auto& s : shards) rep.absorb(s);
}

inline std::string witness_tag(const Relation& L) { return format_relation_inline(L); }

// The localizable-but-not-contraction-closed counterexample {(a,b|),(a,c|b)}.
inline Relation witness_local_not_contraction() {
    GroundSet g = GroundSet::alphabetic(3);
    std::vector<Triple> ts{make_triple(g, singleton(0), singleton(1), VertexSet{}),
                           make_triple(g, singleton(0), singleton(2), singleton(1))};
    return Relation(g, std::move(ts));
}

// The {(a,b|),(a,b|c)} relation used with the localizability/pseudographoid
// closure pair.
inline Relation witness_lp_pair() {
    GroundSet g = GroundSet::alphabetic(3);
    std::vector<Triple> ts{make_triple(g, singleton(0), singleton(1), VertexSet{}),
                           make_triple(g, singleton(0), singleton(1), singleton(2))};
    return Relation(g, std::move(ts));
}

// Parsimonious biconditional forms from the closure-equivalence lemma, each
// checked as a set equality of memberships over every role assignment.
inline bool intersection_biconditional(const Relation& L) {
    auto vs = [](mask_t m) { return VertexSet(m); };
    return detail::scan_abcs(L.ground().full(), [&](mask_t a, mask_t b, mask_t c, mask_t s) {
        if (c < b) return true;
        bool lhs = L.contains(vs(a), vs(b | c), vs(s));
        bool rhs = L.contains(vs(a), vs(b), vs(s | c)) && L.contains(vs(a), vs(c), vs(s | b));
        return lhs == rhs;
    });
}

inline bool composition_biconditional(const Relation& L) {
    auto vs = [](mask_t m) { return VertexSet(m); };
    return detail::scan_abcs(L.ground().full(), [&](mask_t a, mask_t b, mask_t c, mask_t s) {
        if (c < b) return true;
        bool lhs = L.contains(vs(a), vs(b | c), vs(s));
        bool rhs = L.contains(vs(a), vs(b), vs(s)) && L.contains(vs(a), vs(c), vs(s));
        return lhs == rhs;
    });
}

template <typename Rhs>
bool singleton_biconditional(const Relation& L, Rhs&& rhs_holds) {
    const int p = L.ground().size();
    const mask_t full = L.ground().full();
    for (int av = 0; av < p; ++av)
        for (int bv = 0; bv < p; ++bv) {
            if (bv == av) continue;
            for (int cv = bv + 1; cv < p; ++cv) {
                if (cv == av) continue;
                mask_t a = mask_t{1} << av, b = mask_t{1} << bv, c = mask_t{1} << cv;
                bool ok = detail::scan_submasks(full & ~(a | b | c), true, [&](mask_t s) {
                    bool lhs = L.contains(VertexSet(a), VertexSet(b | c), VertexSet(s));
                    return lhs == rhs_holds(L, a, b, c, s);
                });
                if (!ok) return false;
            }
        }
    return true;
}

inline bool pseudographoid_biconditional(const Relation& L) {
    return singleton_biconditional(L, [](const Relation& r, mask_t a, mask_t b, mask_t c,
                                         mask_t s) {
        return r.contains(VertexSet(a), VertexSet(b), VertexSet(s | c)) &&
               r.contains(VertexSet(a), VertexSet(c), VertexSet(s | b));
    });
}

inline bool reverse_pseudographoid_biconditional(const Relation& L) {
    return singleton_biconditional(L, [](const Relation& r, mask_t a, mask_t b, mask_t c,
                                         mask_t s) {
        return r.contains(VertexSet(a), VertexSet(b), VertexSet(s)) &&
               r.contains(VertexSet(a), VertexSet(c), VertexSet(s));
    });
}

// Relation sweep dispatch: exhaustive at p == 3, mixed seeded samples above.
// check: (const Relation&, VerificationReport&) -> void
template <typename Check>
void relation_population(VerificationReport& rep, const ClaimParams& params, int default_p,
                         std::uint64_t default_budget, Check&& check) {
    int p = effective_p(params, default_p);
    GroundSet ground = GroundSet::alphabetic(p);
    if (p == 3) {
        rep.population = "exhaustive |V|=3 (512 relations)";
        for_each_relation(ground, [&](const Relation& L) {
            check(L, rep);
            return true;
        });
        return;
    }
    std::uint64_t budget = effective_budget(params, default_budget);
    rep.seed = params.seed;
    rep.budget = budget;
    rep.population = "mixed seeded samples, |V|=" + std::to_string(p) +
                     ", budget=" + std::to_string(budget) + ", seed=" + std::to_string(params.seed);
    sweep_samples(rep, budget, params.seed, [&](std::uint64_t i, Prng& rng, VerificationReport& out) {
        check(sample_mixed_relation(ground, rng, i), out);
    });
}

// Semigraphoid sweep: exhaustive filter at p == 3, structured closures above.
template <typename Check>
void semigraphoid_population(VerificationReport& rep, const ClaimParams& params, int default_p,
                             std::uint64_t default_budget, Check&& check) {
    int p = effective_p(params, default_p);
    GroundSet ground = GroundSet::alphabetic(p);
    if (p == 3) {
        rep.population = "all semigraphoids among the 512 relations at |V|=3";
        for_each_relation(ground, [&](const Relation& L) {
            if (is_semigraphoid(L))
                check(L, rep);
            else
                ++rep.vacuous;
            return true;
        });
        return;
    }
    std::uint64_t budget = effective_budget(params, default_budget);
    rep.seed = params.seed;
    rep.budget = budget;
    rep.population = "structured semigraphoid closures, |V|=" + std::to_string(p) +
                     ", budget=" + std::to_string(budget) + ", seed=" + std::to_string(params.seed);
    sweep_samples(rep, budget, params.seed, [&](std::uint64_t, Prng& rng, VerificationReport& out) {
        check(sample_semigraphoid(ground, rng), out);
    });
}

}  // namespace claims_detail

// ---- claim runners ----

inline VerificationReport claim_semi_parsim(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "semi-parsim";
    claims_detail::relation_population(rep, params, 3, 100000,
                                       [](const Relation& L, VerificationReport& out) {
        bool three = is_closed(L, Rule::D) && is_closed(L, Rule::U) && is_closed(L, Rule::C);
        bool duc = is_closed(L, Rule::DUC);
        ++out.checked;
        if (three != duc)
            out.add_counterexample("D/U/C closure disagrees with the DUC biconditional on " +
                                   claims_detail::witness_tag(L));
    });
    return rep;
}

inline VerificationReport claim_semi_local_comparison(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "semi-local-comparison";
    claims_detail::relation_population(rep, params, 3, 100000,
                                       [](const Relation& L, VerificationReport& out) {
        bool loc = is_localizable(L);
        ++out.checked;
        if (is_semigraphoid(L) && !loc)
            out.add_counterexample("semigraphoid but not localizable: " +
                                   claims_detail::witness_tag(L));
        if (loc && !(is_closed(L, Rule::D) && is_closed(L, Rule::U)))
            out.add_counterexample("localizable but not D/U closed: " +
                                   claims_detail::witness_tag(L));
    });
    // The stored witness is localizable yet fails contraction with exactly
    // (a, bc | empty) missing.
    Relation w = claims_detail::witness_local_not_contraction();
    ++rep.checked;
    auto v = find_violation(w, Rule::C);
    GroundSet g3 = GroundSet::alphabetic(3);
    Triple expected_missing =
        make_triple(g3, singleton(0), singleton(1) | singleton(2), VertexSet{});
    if (!is_localizable(w) || !v.has_value() || v->missing.size() != 1 ||
        !(v->missing.front() == expected_missing))
        rep.add_counterexample("stored witness " + claims_detail::witness_tag(w) +
                               " did not behave as localizable-but-not-C-closed");
    return rep;
}

namespace claims_detail {

template <typename Check>
VerificationReport dual_transport_claim(const char* name, const ClaimParams& params,
                                        Check&& check) {
    VerificationReport rep;
    rep.claim = name;
    relation_population(rep, params, 3, 100000,
                        [&](const Relation& L, VerificationReport& out) {
        Relation d = relation_dual(L);
        ++out.checked;
        if (!check(L, d))
            out.add_counterexample("dual transport fails on " + witness_tag(L));
    });
    return rep;
}

}  // namespace claims_detail

inline VerificationReport claim_dual_operator_L(const ClaimParams& params) {
    return claims_detail::dual_transport_claim(
        "dual-operator-L", params,
        [](const Relation& L, const Relation& d) { return is_localizable(L) == is_localizable(d); });
}

inline VerificationReport claim_dual_operator_SG(const ClaimParams& params) {
    return claims_detail::dual_transport_claim(
        "dual-operator-SG", params,
        [](const Relation& L, const Relation& d) { return is_semigraphoid(L) == is_semigraphoid(d); });
}

inline VerificationReport claim_dual_operator_IM(const ClaimParams& params) {
    return claims_detail::dual_transport_claim(
        "dual-operator-IM", params, [](const Relation& L, const Relation& d) {
            return is_closed(L, Rule::I) == is_closed(d, Rule::M) &&
                   is_closed(L, Rule::M) == is_closed(d, Rule::I);
        });
}

inline VerificationReport claim_dual_operator_PR(const ClaimParams& params) {
    return claims_detail::dual_transport_claim(
        "dual-operator-PR", params, [](const Relation& L, const Relation& d) {
            return is_closed(L, Rule::P) == is_closed(d, Rule::R) &&
                   is_closed(L, Rule::R) == is_closed(d, Rule::P);
        });
}

inline VerificationReport claim_dual_operator_DT(const ClaimParams& params) {
    return claims_detail::dual_transport_claim(
        "dual-operator-DT", params, [](const Relation& L, const Relation& d) {
            return is_closed(L, Rule::DT) == is_closed(d, Rule::DDT) &&
                   is_closed(L, Rule::DDT) == is_closed(d, Rule::DT);
        });
}

namespace claims_detail {

// One pseudo-Markov-theorem instance. Returns a description of the failure or
// empty when the biconditional holds.
inline std::string pseudo_instance_failure(const Graph& g, const Relation& sep,
                                           const Relation& target, const Relation& L, Mode mode) {
    Relation core = intersect(L, target);
    bool global = is_subset(target, L);
    Rule rule = mode == Mode::undirected ? Rule::P : Rule::R;
    bool closed = is_localizable(core) && is_closed(core, rule);
    (void)sep;
    if (global == closed) return {};
    std::string s = "mode=" + std::string(mode_name(mode)) + " graph={";
    for (auto [u, v] : g.edges())
        s += g.ground().label(u) + g.ground().label(v) + " ";
    s += "} L=" + witness_tag(L) + " global=" + (global ? "1" : "0") +
         " core-closed=" + (closed ? "1" : "0");
    return s;
}

// Pairwise-Markov base for a graph: the triples every non-edge demands.
inline Relation required_pairwise(const Graph& g, Mode mode) {
    std::vector<Triple> ts;
    const mask_t full = g.ground().full();
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.has_edge(u, v)) continue;
            mask_t ab = (mask_t{1} << u) | (mask_t{1} << v);
            VertexSet cond = mode == Mode::undirected ? VertexSet(full & ~ab) : VertexSet{};
            ts.push_back(make_triple(g.ground(), singleton(u), singleton(v), cond));
        }
    return Relation(g.ground(), std::move(ts));
}

template <typename PerInstance>
VerificationReport pseudo_markov_claim(const char* name, Mode mode, const ClaimParams& params,
                                       PerInstance&& per_instance) {
    VerificationReport rep;
    rep.claim = name;
    int p = effective_p(params, 3);
    GroundSet ground = GroundSet::alphabetic(p);
    if (p == 3) {
        rep.population = "exhaustive |V|=3: all 8 graphs x 512 relations, pairwise-Markov pairs";
        for_each_graph(ground, [&](const Graph& g) {
            Relation sep = separation_relation(g);
            Relation target = mode == Mode::bidirected ? relation_dual(sep) : sep;
            for_each_relation(ground, [&](const Relation& L) {
                if (!is_pairwise_markov(L, g, mode)) {
                    ++rep.vacuous;
                    return true;
                }
                ++rep.checked;
                per_instance(g, sep, target, L, rep);
                return true;
            });
            return true;
        });
        return rep;
    }
    std::uint64_t budget = effective_budget(params, 20000);
    rep.seed = params.seed;
    rep.budget = budget;
    rep.population = "seeded graphs with pairwise-Markov relations, |V|=" + std::to_string(p) +
                     ", budget=" + std::to_string(budget) + ", seed=" + std::to_string(params.seed);
    sweep_samples(rep, budget, params.seed,
                  [&](std::uint64_t i, Prng& rng, VerificationReport& out) {
        Graph g = sample_graph(ground, rng);
        Relation base = required_pairwise(g, mode);
        Relation L = [&] {
            switch (i % 4) {
                case 0: return unite(base, sample_relation(ground, rng, 0.1));
                case 1: return unite(base, sample_relation(ground, rng, 0.3));
                case 2: {
                    Relation sep = separation_relation(g);
                    Relation target = mode == Mode::bidirected ? relation_dual(sep) : sep;
                    return unite(base, unite(target, sample_relation(ground, rng, 0.05)));
                }
                default:
                    return close_under(unite(base, sample_relation(ground, rng, 0.05)),
                                       {Rule::D, Rule::U, Rule::C});
            }
        }();
        Relation sep = separation_relation(g);
        Relation target = mode == Mode::bidirected ? relation_dual(sep) : sep;
        ++out.checked;
        per_instance(g, sep, target, L, out);
    });
    return rep;
}

}  // namespace claims_detail

inline VerificationReport claim_pseudo_conc(const ClaimParams& params) {
    return claims_detail::pseudo_markov_claim(
        "pseudo-conc", Mode::undirected, params,
        [](const Graph& g, const Relation& sep, const Relation& target, const Relation& L,
           VerificationReport& out) {
            std::string fail =
                claims_detail::pseudo_instance_failure(g, sep, target, L, Mode::undirected);
            if (!fail.empty()) out.add_counterexample(fail);
        });
}

// Bidirected form, plus the duality identity: the bidirected verdict must
// equal the undirected verdict on (L^|, G).
inline VerificationReport claim_pseudo_cov(const ClaimParams& params) {
    return claims_detail::pseudo_markov_claim(
        "pseudo-cov", Mode::bidirected, params,
        [](const Graph& g, const Relation& sep, const Relation& target, const Relation& L,
           VerificationReport& out) {
            std::string fail =
                claims_detail::pseudo_instance_failure(g, sep, target, L, Mode::bidirected);
            if (!fail.empty()) out.add_counterexample(fail);

            Relation dualL = relation_dual(L);
            if (!is_pairwise_markov(dualL, g, Mode::undirected)) {
                out.add_counterexample("pairwise Markov does not transport to the dual on " +
                                       claims_detail::witness_tag(L));
                return;
            }
            bool bi_global = is_subset(target, L);
            bool un_global = is_subset(sep, dualL);
            Relation bi_core = intersect(L, target);
            Relation un_core = intersect(dualL, sep);
            bool bi_closed = is_localizable(bi_core) && is_closed(bi_core, Rule::R);
            bool un_closed = is_localizable(un_core) && is_closed(un_core, Rule::P);
            if (bi_global != un_global || bi_closed != un_closed)
                out.add_counterexample("bidirected verdict differs from undirected verdict on "
                                       "the dual for " +
                                       claims_detail::witness_tag(L));
        });
}

namespace claims_detail {

template <typename Check>
VerificationReport equivalence_claim(const char* name, const ClaimParams& params, Check&& check) {
    VerificationReport rep;
    rep.claim = name;
    semigraphoid_population(rep, params, 3, 10000,
                            [&](const Relation& L, VerificationReport& out) {
        ++out.checked;
        if (!check(L))
            out.add_counterexample("equivalence fails on semigraphoid " + witness_tag(L));
    });
    return rep;
}

}  // namespace claims_detail

inline VerificationReport claim_equivalences_1(const ClaimParams& params) {
    return claims_detail::equivalence_claim("equivalences-1", params, [](const Relation& L) {
        return is_closed(L, Rule::I) == claims_detail::intersection_biconditional(L);
    });
}

inline VerificationReport claim_equivalences_2(const ClaimParams& params) {
    return claims_detail::equivalence_claim("equivalences-2", params, [](const Relation& L) {
        return is_closed(L, Rule::M) == claims_detail::composition_biconditional(L);
    });
}

inline VerificationReport claim_equivalences_3(const ClaimParams& params) {
    return claims_detail::equivalence_claim("equivalences-3", params, [](const Relation& L) {
        return is_closed(L, Rule::P) == claims_detail::pseudographoid_biconditional(L);
    });
}

inline VerificationReport claim_equivalences_4(const ClaimParams& params) {
    return claims_detail::equivalence_claim("equivalences-4", params, [](const Relation& L) {
        return is_closed(L, Rule::R) == claims_detail::reverse_pseudographoid_biconditional(L);
    });
}

inline VerificationReport claim_p_iff_i(const ClaimParams& params) {
    return claims_detail::equivalence_claim("p-iff-i", params, [](const Relation& L) {
        return is_closed(L, Rule::P) == is_closed(L, Rule::I);
    });
}

inline VerificationReport claim_r_iff_m(const ClaimParams& params) {
    return claims_detail::equivalence_claim("r-iff-m", params, [](const Relation& L) {
        return is_closed(L, Rule::R) == is_closed(L, Rule::M);
    });
}

// {S,D,U,C,I}-closure implies localizability plus the pseudographoid rule,
// and dually {S,D,U,C,M}-closure implies localizability plus the reverse
// rule; the {(a,b|),(a,b|c)} pair is the stored L+P-closed companion
// relation.
inline VerificationReport claim_sduci_vs_slp(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "sduci-vs-slp";
    claims_detail::relation_population(rep, params, 3, 100000,
                                       [](const Relation& L, VerificationReport& out) {
        bool semigraphoid = is_semigraphoid(L);
        if (!(semigraphoid && (is_closed(L, Rule::I) || is_closed(L, Rule::M)))) {
            ++out.vacuous;
            return;
        }
        ++out.checked;
        if (is_closed(L, Rule::I) && !(is_localizable(L) && is_closed(L, Rule::P)))
            out.add_counterexample("SDUCI-closed relation is not L+P closed: " +
                                   claims_detail::witness_tag(L));
        if (is_closed(L, Rule::M) && !(is_localizable(L) && is_closed(L, Rule::R)))
            out.add_counterexample("SDUCM-closed relation is not L+R closed: " +
                                   claims_detail::witness_tag(L));
    });
    Relation w = claims_detail::witness_lp_pair();
    ++rep.checked;
    if (!(is_localizable(w) && is_closed(w, Rule::P)))
        rep.add_counterexample("stored witness " + claims_detail::witness_tag(w) +
                               " is not L+P closed");
    return rep;
}

// Deliberately false: localizability does not imply contraction closure. The
// run is expected to falsify, with the stored witness reported first.
inline VerificationReport claim_localizable_implies_C(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "localizable-implies-C";
    Relation w = claims_detail::witness_local_not_contraction();
    ++rep.checked;
    if (is_localizable(w) && !is_closed(w, Rule::C))
        rep.add_counterexample("localizable but not C-closed: " + claims_detail::witness_tag(w));
    claims_detail::relation_population(rep, params, 3, 100000,
                                       [](const Relation& L, VerificationReport& out) {
        if (!is_localizable(L)) {
            ++out.vacuous;
            return;
        }
        ++out.checked;
        if (!is_closed(L, Rule::C))
            out.add_counterexample("localizable but not C-closed: " +
                                   claims_detail::witness_tag(L));
    });
    return rep;
}

namespace claims_detail {

inline VerificationReport tree_claim(const char* name, Mode mode, const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = name;
    std::uint64_t budget = effective_budget(params, 50);
    rep.seed = params.seed;
    rep.budget = budget;
    rep.population = std::string("seeded random forests, p in {4..7}, mode=") + mode_name(mode) +
                     ", budget=" + std::to_string(budget) + ", seed=" + std::to_string(params.seed);
    Rule set_rule = mode == Mode::undirected ? Rule::I : Rule::M;
    Rule trans_rule = mode == Mode::undirected ? Rule::DT : Rule::DDT;
    SupportMode support =
        mode == Mode::undirected ? SupportMode::concentration : SupportMode::covariance;

    sweep_samples(rep, budget, params.seed,
                  [&](std::uint64_t i, Prng& rng, VerificationReport& out) {
        int p = params.p > 0 ? params.p : 4 + static_cast<int>(i % 4);
        GroundSet ground = GroundSet::alphabetic(p);
        Graph tree = random_forest(ground, rng);
        Relation sep = separation_relation(tree);

        // Direct instance: the separation relation of the forest itself.
        {
            Relation direct = mode == Mode::undirected ? sep : relation_dual(sep);
            ++out.checked;
            if (!is_closed(direct, set_rule) || !is_closed(direct, trans_rule))
                out.add_counterexample("forest separation relation fails hypothesis rules, seed " +
                                       std::to_string(params.seed) + " index " + std::to_string(i));
        }

        // Gaussian instance: matching tree-supported model.
        GaussianModel model = tree_structured_model(tree, support, rng.next_u64());
        Relation extracted = relation_of(model);
        ++out.checked;
        if (!is_closed(extracted, set_rule) || !is_closed(extracted, trans_rule)) {
            out.add_counterexample("extracted relation fails hypothesis rules at index " +
                                   std::to_string(i));
            return;
        }
        Graph recovered = mode == Mode::undirected ? undirected_graph_of(extracted)
                                                   : bidirected_graph_of(extracted);
        if (!(recovered == tree)) {
            out.add_counterexample("model does not recover the forest support at index " +
                                   std::to_string(i));
            return;
        }
        Relation faithful_side =
            mode == Mode::undirected ? extracted : relation_dual(extracted);
        if (!(faithful_side == sep))
            out.add_counterexample("faithfulness equality fails at index " + std::to_string(i));

        VerificationReport inst = verify_tree_faithfulness(extracted);
        if (!inst.passed() || inst.checked == 0)
            out.add_counterexample("tree-faithfulness instance checker disagrees at index " +
                                   std::to_string(i));
    });
    return rep;
}

}  // namespace claims_detail

inline VerificationReport claim_conc_trees(const ClaimParams& params) {
    return claims_detail::tree_claim("conc-trees", Mode::undirected, params);
}

inline VerificationReport claim_cov_trees(const ClaimParams& params) {
    return claims_detail::tree_claim("cov-trees", Mode::bidirected, params);
}

// Separation relations are localizable pseudographoids and semigraphoids
// closed under I and M; the concentration graph of [G] recovers G.
inline VerificationReport claim_graph_relation_props(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "graph-relation-props";
    int pmax = claims_detail::effective_p(params, 4);
    if (pmax > 5) throw std::invalid_argument("graph-relation-props is capped at p <= 5");
    rep.population = "all graphs on |V| in {2.." + std::to_string(pmax) + "}";
    for (int p = 2; p <= pmax; ++p) {
        GroundSet ground = GroundSet::alphabetic(p);
        for_each_graph(ground, [&](const Graph& g) {
            Relation sep = separation_relation(g);
            ++rep.checked;
            std::string tag = "graph with " + std::to_string(g.edge_count()) + " edges, p=" +
                              std::to_string(p);
            if (!is_localizable(sep)) rep.add_counterexample("[G] not localizable: " + tag);
            if (!is_closed(sep, Rule::P)) rep.add_counterexample("[G] not P-closed: " + tag);
            if (!is_semigraphoid(sep)) rep.add_counterexample("[G] not a semigraphoid: " + tag);
            if (!is_closed(sep, Rule::I)) rep.add_counterexample("[G] not I-closed: " + tag);
            if (!is_closed(sep, Rule::M)) rep.add_counterexample("[G] not M-closed: " + tag);
            if (!(undirected_graph_of(sep) == g))
                rep.add_counterexample("[G] does not recover G: " + tag);
            return true;
        });
    }
    return rep;
}

// [Y] = [X]^| for Y ~ N(0, Sigma^{-1}), over random SPD and tree-structured
// models.
inline VerificationReport claim_gaussian_duality(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "gaussian-duality";
    std::uint64_t budget = claims_detail::effective_budget(params, 100);
    rep.seed = params.seed;
    rep.budget = budget;
    rep.population = "seeded SPD models (random + tree-structured), p in {3..6}, budget=" +
                     std::to_string(budget) + ", seed=" + std::to_string(params.seed);
    claims_detail::sweep_samples(rep, budget, params.seed,
                                 [&](std::uint64_t i, Prng& rng, VerificationReport& out) {
        int p = params.p > 0 ? params.p : 3 + static_cast<int>(i % 4);
        GroundSet ground = GroundSet::alphabetic(p);
        GaussianModel model = [&]() -> GaussianModel {
            switch (i % 3) {
                case 0: return random_spd_model(ground, rng.next_u64());
                case 1:
                    return tree_structured_model(random_forest(ground, rng),
                                                 SupportMode::covariance, rng.next_u64());
                default:
                    return tree_structured_model(random_forest(ground, rng),
                                                 SupportMode::concentration, rng.next_u64());
            }
        }();
        VerificationReport one = check_gaussian_duality(model);
        out.checked += one.checked;
        out.warnings += one.warnings;
        if (!one.passed())
            out.add_counterexample("duality mismatch at index " + std::to_string(i) + ": " +
                                   one.counterexamples.front());
    });
    return rep;
}

// Extracted Gaussian structures are closed under I, M, DT and DDT.
inline VerificationReport claim_gaussian_closure(const ClaimParams& params) {
    VerificationReport rep;
    rep.claim = "gaussian-closure";
    std::uint64_t budget = claims_detail::effective_budget(params, 100);
    rep.seed = params.seed;
    rep.budget = budget;
    rep.population = "seeded SPD models (random + tree-structured), p in {3..6}, budget=" +
                     std::to_string(budget) + ", seed=" + std::to_string(params.seed);
    claims_detail::sweep_samples(rep, budget, params.seed,
                                 [&](std::uint64_t i, Prng& rng, VerificationReport& out) {
        int p = params.p > 0 ? params.p : 3 + static_cast<int>(i % 4);
        GroundSet ground = GroundSet::alphabetic(p);
        GaussianModel model = [&]() -> GaussianModel {
            switch (i % 3) {
                case 0: return random_spd_model(ground, rng.next_u64());
                case 1:
                    return tree_structured_model(random_forest(ground, rng),
                                                 SupportMode::covariance, rng.next_u64());
                default:
                    return tree_structured_model(random_forest(ground, rng),
                                                 SupportMode::concentration, rng.next_u64());
            }
        }();
        ExtractedRelation extracted = relation_of_detail(model);
        out.warnings += extracted.near_threshold_count;
        for (Rule r : {Rule::I, Rule::M, Rule::DT, Rule::DDT}) {
            ++out.checked;
            if (!is_closed(extracted.relation, r))
                out.add_counterexample(std::string("extracted relation violates ") + rule_name(r) +
                                       " at index " + std::to_string(i));
        }
    });
    return rep;
}

// ---- registry ----

using ClaimRunner = std::function<VerificationReport(const ClaimParams&)>;

inline const std::vector<std::pair<std::string, ClaimRunner>>& claim_registry() {
    static const std::vector<std::pair<std::string, ClaimRunner>> reg = {
        {"semi-parsim", claim_semi_parsim},
        {"semi-local-comparison", claim_semi_local_comparison},
        {"dual-operator-L", claim_dual_operator_L},
        {"dual-operator-SG", claim_dual_operator_SG},
        {"dual-operator-IM", claim_dual_operator_IM},
        {"dual-operator-PR", claim_dual_operator_PR},
        {"dual-operator-DT", claim_dual_operator_DT},
        {"pseudo-conc", claim_pseudo_conc},
        {"pseudo-cov", claim_pseudo_cov},
        {"equivalences-1", claim_equivalences_1},
        {"equivalences-2", claim_equivalences_2},
        {"equivalences-3", claim_equivalences_3},
        {"equivalences-4", claim_equivalences_4},
        {"p-iff-i", claim_p_iff_i},
        {"r-iff-m", claim_r_iff_m},
        {"sduci-vs-slp", claim_sduci_vs_slp},
        {"localizable-implies-C", claim_localizable_implies_C},
        {"conc-trees", claim_conc_trees},
        {"cov-trees", claim_cov_trees},
        {"graph-relation-props", claim_graph_relation_props},
        {"gaussian-duality", claim_gaussian_duality},
        {"gaussian-closure", claim_gaussian_closure},
    };
    return reg;
}

inline std::vector<std::string> claim_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : claim_registry()) out.push_back(name);
    return out;
}

inline VerificationReport run_claim(const std::string& name, const ClaimParams& params) {
    for (const auto& [n, runner] : claim_registry())
        if (n == name) return runner(params);
    throw std::invalid_argument("unknown claim identifier: " + name);
}

// Counterexample hunt: same runners, sampling emphasized unless p == 3.
inline VerificationReport search_counterexample(const std::string& claim, int p,
                                                std::uint64_t budget, std::uint64_t seed) {
    if (p > 6) throw std::invalid_argument("counterexample search is capped at p <= 6");
    ClaimParams params;
    params.p = p;
    params.budget = budget;
    params.seed = seed;
    return run_claim(claim, params);
}

}  // namespace cikit
