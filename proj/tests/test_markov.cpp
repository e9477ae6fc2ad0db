#include <doctest.h>

#include "cikit/cikit.hpp"

using namespace cikit;

namespace {

const GroundSet g3 = GroundSet::alphabetic(3);
const GroundSet g4 = GroundSet::alphabetic(4);

Relation remark_relation(const Graph& p4) {
    // [G] plus the extra (a,c|d) triple
    return unite(separation_relation(p4),
                 Relation(g4, {make_triple(g4, singleton(0), singleton(2), singleton(3))}));
}

}  // namespace

TEST_SUITE("markov_properties") {
    TEST_CASE("separation relations are pairwise and global Markov to their graph") {
        Graph p4 = path_graph(g4);
        Relation sep = separation_relation(p4);
        CHECK(is_pairwise_markov(sep, p4, Mode::undirected));
        CHECK(is_global_markov(sep, p4, Mode::undirected));
    }

    TEST_CASE("empty relation fails pairwise Markov once an edge is missing") {
        Graph missing(g3, {{0, 1}});
        Relation empty(g3);
        CHECK_FALSE(is_pairwise_markov(empty, missing, Mode::undirected));
        CHECK_FALSE(is_pairwise_markov(empty, missing, Mode::bidirected));
        Graph complete(g3, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(is_pairwise_markov(empty, complete, Mode::undirected));
    }

    TEST_CASE("the augmented four-path relation stays pairwise and global Markov") {
        Graph p4 = path_graph(g4);
        Relation L = remark_relation(p4);
        CHECK(is_pairwise_markov(L, p4, Mode::undirected));
        CHECK(is_global_markov(L, p4, Mode::undirected));
    }

    TEST_CASE("the pairwise part regenerates global Markov through localizability closure") {
        Graph p4 = path_graph(g4);
        Relation sep = separation_relation(p4);
        Relation pairwise = pairwise_part(sep);
        CHECK_FALSE(is_global_markov(pairwise, p4, Mode::undirected));
        Relation closed = close_under(pairwise, {Rule::LFwd, Rule::LBwd});
        CHECK(is_global_markov(closed, p4, Mode::undirected));
    }

    TEST_CASE("bidirected checks are the undirected checks on the dual") {
        GroundSet g5 = GroundSet::alphabetic(5);
        Prng rng(2718);
        for (int i = 0; i < 1000; ++i) {
            Graph g = sample_graph(g5, rng);
            Relation L = sample_mixed_relation(g5, rng, static_cast<std::uint64_t>(i));
            Relation d = relation_dual(L);
            CHECK(is_pairwise_markov(L, g, Mode::bidirected) ==
                  is_pairwise_markov(d, g, Mode::undirected));
            CHECK(is_global_markov(L, g, Mode::bidirected) ==
                  is_global_markov(d, g, Mode::undirected));
            CHECK(is_faithful(L, g, Mode::bidirected) == is_faithful(d, g, Mode::undirected));
        }
    }

    TEST_CASE("classical sufficiency: semigraphoid plus I (resp. M) lifts pairwise to global") {
        for_each_graph(g3, [&](const Graph& g) {
            for_each_relation(g3, [&](const Relation& L) {
                if (is_semigraphoid(L) && is_closed(L, Rule::I) &&
                    is_pairwise_markov(L, g, Mode::undirected))
                    CHECK(is_global_markov(L, g, Mode::undirected));
                if (is_semigraphoid(L) && is_closed(L, Rule::M) &&
                    is_pairwise_markov(L, g, Mode::bidirected))
                    CHECK(is_global_markov(L, g, Mode::bidirected));
                return true;
            });
            return true;
        });
    }

    TEST_CASE("ground-set mismatch is rejected") {
        Relation L(g3);
        Graph g(g4);
        CHECK_THROWS_AS(is_pairwise_markov(L, g, Mode::undirected), std::invalid_argument);
        CHECK_THROWS_AS(is_global_markov(L, g, Mode::undirected), std::invalid_argument);
        CHECK_THROWS_AS(is_faithful(L, g, Mode::undirected), std::invalid_argument);
    }
}

TEST_SUITE("faithfulness") {
    TEST_CASE("separation relations are faithful to their graph") {
        for_each_graph(g4, [&](const Graph& g) {
            CHECK(is_faithful(separation_relation(g), g, Mode::undirected));
            return true;
        });
    }

    TEST_CASE("the augmented four-path relation is not faithful") {
        Graph p4 = path_graph(g4);
        CHECK_FALSE(is_faithful(remark_relation(p4), p4, Mode::undirected));
    }

    TEST_CASE("the empty relation is faithful to everything") {
        Relation empty(g3);
        for_each_graph(g3, [&](const Graph& g) {
            CHECK(is_faithful(empty, g, Mode::undirected));
            CHECK(is_faithful(empty, g, Mode::bidirected));
            return true;
        });
    }
}

TEST_SUITE("pseudo_markov_verifier") {
    TEST_CASE("holds on the augmented four-path instance") {
        Graph p4 = path_graph(g4);
        Relation L = remark_relation(p4);
        // globally Markov although L itself is not P-closed; the intersection
        // with [G] is what the biconditional tests
        CHECK_FALSE(is_closed(L, Rule::P));
        Relation core = intersect(L, separation_relation(p4));
        CHECK(core == separation_relation(p4));
        CHECK(is_localizable(core));
        CHECK(is_closed(core, Rule::P));
        VerificationReport rep = verify_pseudo_markov_theorem(p4, L, Mode::undirected);
        CHECK(rep.passed());
    }

    TEST_CASE("holds with both sides false on a pairwise-only relation") {
        Graph p4 = path_graph(g4);
        std::vector<Triple> required;
        const mask_t full = g4.full();
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                if (p4.has_edge(u, v)) continue;
                mask_t ab = (mask_t{1} << u) | (mask_t{1} << v);
                required.push_back(make_triple(g4, singleton(u), singleton(v),
                                               VertexSet(full & ~ab)));
            }
        Relation L(g4, std::move(required));
        CHECK(is_pairwise_markov(L, p4, Mode::undirected));
        CHECK_FALSE(is_global_markov(L, p4, Mode::undirected));
        VerificationReport rep = verify_pseudo_markov_theorem(p4, L, Mode::undirected);
        CHECK(rep.passed());  // biconditional: both sides false
    }

    TEST_CASE("rejects instances whose pairwise hypothesis fails") {
        Graph p4 = path_graph(g4);
        CHECK_THROWS_AS(verify_pseudo_markov_theorem(p4, Relation(g4), Mode::undirected),
                        std::invalid_argument);
    }
}

TEST_SUITE("tree_faithfulness_verifier") {
    TEST_CASE("the four-path separation relation satisfies the undirected branch") {
        Relation sep = separation_relation(path_graph(g4));
        CHECK(is_closed(sep, Rule::I));
        CHECK(is_closed(sep, Rule::DT));
        VerificationReport rep = verify_tree_faithfulness(sep);
        CHECK(rep.passed());
        CHECK(rep.checked >= 1);
    }

    TEST_CASE("gaussian tree models satisfy both theorems") {
        Graph p4 = path_graph(g4);
        GaussianModel conc = tree_structured_model(p4, SupportMode::concentration, 99);
        Relation Lc = relation_of(conc);
        CHECK(Lc == separation_relation(p4));
        VerificationReport rc = verify_tree_faithfulness(Lc);
        CHECK(rc.passed());
        CHECK(rc.checked >= 1);

        GaussianModel cov = tree_structured_model(p4, SupportMode::covariance, 100);
        Relation Lb = relation_of(cov);
        CHECK(relation_dual(Lb) == separation_relation(p4));
        VerificationReport rb = verify_tree_faithfulness(Lb);
        CHECK(rb.passed());
        CHECK(rb.checked >= 1);
    }

    TEST_CASE("vacuous when the graphs are not forests") {
        Relation empty(g3);  // both extracted graphs are complete K3
        VerificationReport rep = verify_tree_faithfulness(empty);
        CHECK(rep.checked == 0);
        CHECK(rep.vacuous == 2);
        CHECK(rep.passed());  // vacuous, not substantive
    }
}
