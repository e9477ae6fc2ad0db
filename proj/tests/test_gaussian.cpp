#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cikit/cikit.hpp"

using namespace cikit;

namespace {

const GroundSet g3 = GroundSet::alphabetic(3);

GaussianModel identity_model(int p) {
    std::vector<double> s(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0.0);
    for (int i = 0; i < p; ++i) s[static_cast<std::size_t>(i * p + i)] = 1.0;
    return GaussianModel(GroundSet::alphabetic(p), std::move(s));
}

// Markov-chain covariance: sigma_ac = sigma_ab * sigma_bc by construction.
GaussianModel chain3() {
    return GaussianModel(g3, {1.0, 0.5, 0.25, 0.5, 1.0, 0.5, 0.25, 0.5, 1.0});
}

GaussianModel scaled(const GaussianModel& m, double factor) {
    std::vector<double> s = m.sigma();
    for (double& v : s) v *= factor;
    return GaussianModel(m.ground(), std::move(s), m.eps());
}

}  // namespace

TEST_SUITE("gaussian_model") {
    TEST_CASE("validation rejects bad matrices") {
        CHECK_THROWS_AS(GaussianModel(g3, {1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(GaussianModel(g3, {1, 0.5, 0, 0.2, 1, 0, 0, 0, 1}),
                        std::invalid_argument);  // asymmetric
        CHECK_THROWS_AS(GaussianModel(g3, {1, 1, 1, 1, 1, 1, 1, 1, 1}),
                        std::invalid_argument);  // singular
        CHECK_THROWS_AS(GaussianModel(g3, {1, 0, 0, 0, -1, 0, 0, 0, 1}, 1e-9),
                        std::invalid_argument);  // not positive definite
        CHECK_THROWS_AS(chain3().with_eps(0.0), std::invalid_argument);
    }

    TEST_CASE("ci on diagonal and structured covariances") {
        GaussianModel id = identity_model(3);
        CHECK(ci(id, 0, 1, VertexSet{}));
        CHECK(ci(id, 0, 2, singleton(1)));

        GaussianModel block(g3, {1.0, 0.5, 0.0, 0.5, 1.0, 0.0, 0.0, 0.0, 1.0});
        CHECK(ci(block, 0, 2, singleton(1)));  // 0 - .5 * 1 * 0 = 0
        CHECK(ci(block, 0, 2, VertexSet{}));
        CHECK_FALSE(ci(block, 0, 1, VertexSet{}));

        GaussianModel chain = chain3();
        CHECK(ci(chain, 0, 2, singleton(1)));       // .25 - .5*.5 = 0
        CHECK_FALSE(ci(chain, 0, 2, VertexSet{}));  // .25
    }

    TEST_CASE("ci rejects malformed arguments") {
        GaussianModel id = identity_model(3);
        CHECK_THROWS_AS(ci(id, 1, 1, VertexSet{}), std::invalid_argument);
        CHECK_THROWS_AS(ci(id, 0, 1, singleton(1)), std::invalid_argument);
    }

    TEST_CASE("near-threshold band is flagged") {
        // normalized partial correlation ~ 5e-8 sits inside [eps, 100*eps)
        GaussianModel m(GroundSet::alphabetic(2), {1.0, 5e-8, 5e-8, 1.0}, 1e-9);
        CiResult r = ci_detail(m, 0, 1, VertexSet{});
        CHECK_FALSE(r.independent);
        CHECK(r.near_threshold);
    }
}

TEST_SUITE("relation_extraction") {
    TEST_CASE("identity covariance yields all of T(V)") {
        GaussianModel id = identity_model(3);
        CHECK(relation_of(id).size() == canonical_triple_count(3));
    }

    TEST_CASE("generic covariance yields the empty relation") {
        GaussianModel m = random_spd_model(GroundSet::alphabetic(4), 555);
        CHECK(relation_of(m).empty());
    }

    TEST_CASE("the three-chain yields exactly (a,c|b)") {
        Relation L = relation_of(chain3());
        REQUIRE(L.size() == 1);
        CHECK(L.contains(singleton(0), singleton(2), singleton(1)));
    }

    TEST_CASE("extraction is invariant under rescaling") {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            Prng rng(seed);
            Graph tree = random_forest(GroundSet::alphabetic(5), rng);
            GaussianModel m = tree_structured_model(tree, SupportMode::covariance, seed);
            Relation base = relation_of(m);
            CHECK(relation_of(scaled(m, 0.1)) == base);
            CHECK(relation_of(scaled(m, 10.0)) == base);
        }
    }

    TEST_CASE("marginalization consistency") {
        GroundSet g5 = GroundSet::alphabetic(5);
        Prng rng(31337);
        for (int i = 0; i < 25; ++i) {
            GaussianModel m = i % 2 == 0
                                  ? random_spd_model(g5, rng.next_u64())
                                  : tree_structured_model(random_forest(g5, rng),
                                                          SupportMode::covariance, rng.next_u64());
            int a = static_cast<int>(rng.next_below(5));
            int b = (a + 1 + static_cast<int>(rng.next_below(4))) % 5;
            mask_t cond = 0;
            for (int v = 0; v < 5; ++v)
                if (v != a && v != b && rng.next_bool()) cond |= mask_t{1} << v;
            VertexSet keep(cond | (mask_t{1} << a) | (mask_t{1} << b));
            GaussianModel sub = marginal_model(m, keep);
            // indices shift under the marginal's ground set
            int sa = 0, sb = 0, idx = 0;
            mask_t subcond = 0;
            for_each_vertex(keep.bits, [&](int v) {
                if (v == a) sa = idx;
                if (v == b) sb = idx;
                if (cond & (mask_t{1} << v)) subcond |= mask_t{1} << idx;
                ++idx;
            });
            CHECK(ci(m, a, b, VertexSet(cond)) == ci(sub, sa, sb, VertexSet(subcond)));
        }
    }
}

TEST_SUITE("model_inverse_and_duality") {
    TEST_CASE("diagonal inverses") {
        GaussianModel id = identity_model(3);
        GaussianModel inv = inverse_model(id);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(inv.at(i, j) == doctest::Approx(id.at(i, j)));

        GaussianModel d(GroundSet::alphabetic(2), {2.0, 0.0, 0.0, 4.0});
        GaussianModel dinv = inverse_model(d);
        CHECK(dinv.at(0, 0) == doctest::Approx(0.5));
        CHECK(dinv.at(1, 1) == doctest::Approx(0.25));
    }

    TEST_CASE("inverse round trips to 1e-8 on random models") {
        Prng rng(4242);
        for (int i = 0; i < 100; ++i) {
            int p = 2 + static_cast<int>(i % 5);  // up to 6
            GaussianModel m = random_spd_model(GroundSet::alphabetic(p), rng.next_u64());
            GaussianModel back = inverse_model(inverse_model(m));
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c)
                    CHECK(std::abs(back.at(r, c) - m.at(r, c)) < 1e-8);
        }
    }

    TEST_CASE("duality holds on the identity and the three-chain") {
        VerificationReport id_rep = check_gaussian_duality(identity_model(3));
        CHECK(id_rep.passed());

        GaussianModel chain = chain3();
        VerificationReport rep = check_gaussian_duality(chain);
        CHECK(rep.passed());
        Relation dual_rel = relation_of(inverse_model(chain));
        REQUIRE(dual_rel.size() == 1);
        CHECK(dual_rel.contains(singleton(0), singleton(2), VertexSet{}));  // (a,c|)
    }

    TEST_CASE("duality holds on seeded random models") {
        Prng rng(90210);
        for (int i = 0; i < 40; ++i) {
            int p = 3 + static_cast<int>(i % 4);
            GaussianModel m = random_spd_model(GroundSet::alphabetic(p), rng.next_u64());
            CHECK(check_gaussian_duality(m).passed());
        }
    }
}

TEST_SUITE("tree_models") {
    TEST_CASE("edgeless forests give diagonal covariance") {
        GaussianModel m = tree_structured_model(Graph(g3), SupportMode::covariance, 7);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(m.at(i, j) == 0.0);
    }

    TEST_CASE("single edge support") {
        Graph g(g3, {{0, 1}});
        GaussianModel m = tree_structured_model(g, SupportMode::covariance, 11);
        CHECK(std::abs(m.at(0, 1)) >= 0.2);
        CHECK(m.at(0, 2) == 0.0);
        CHECK(m.at(1, 2) == 0.0);
    }

    TEST_CASE("support recovery in both modes on the four-path") {
        GroundSet g4 = GroundSet::alphabetic(4);
        Graph p4 = path_graph(g4);
        GaussianModel conc = tree_structured_model(p4, SupportMode::concentration, 21);
        CHECK(undirected_graph_of(relation_of(conc)) == p4);
        GaussianModel cov = tree_structured_model(p4, SupportMode::covariance, 22);
        CHECK(bidirected_graph_of(relation_of(cov)) == p4);
    }

    TEST_CASE("rejects non-forests") {
        Graph triangle(g3, {{0, 1}, {1, 2}, {0, 2}});
        CHECK_THROWS_AS(tree_structured_model(triangle, SupportMode::covariance, 1),
                        std::invalid_argument);
    }
}

TEST_SUITE("gaussian_closure_rules") {
    TEST_CASE("extracted structures are closed under I, M, DT and DDT") {
        Prng rng(1001);
        for (int i = 0; i < 20; ++i) {
            int p = 3 + static_cast<int>(i % 3);
            GroundSet g = GroundSet::alphabetic(p);
            GaussianModel m = i % 2 == 0 ? random_spd_model(g, rng.next_u64())
                                         : tree_structured_model(random_forest(g, rng),
                                                                 SupportMode::covariance,
                                                                 rng.next_u64());
            for (Rule r : {Rule::I, Rule::M, Rule::DT, Rule::DDT})
                CHECK_FALSE(check_gaussian_rule(m, r).has_value());
            Relation rel = relation_of(m);
            CHECK(is_semigraphoid(rel));
        }
    }
}

TEST_SUITE("covariance_text") {
    TEST_CASE("round trip is byte exact") {
        GaussianModel chain = chain3();
        std::string text = format_covariance(chain);
        std::istringstream in(text);
        GaussianModel back = parse_covariance(in);
        CHECK(back.ground() == chain.ground());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(back.at(i, j) == chain.at(i, j));
        CHECK(format_covariance(back) == text);
    }

    TEST_CASE("errors carry file and line") {
        std::istringstream bad_dim("dim: x\nlabels: a\n1\n");
        CHECK_THROWS_WITH_AS(parse_covariance(bad_dim, "m.cov"), doctest::Contains("m.cov:1"),
                             ParseError);
        std::istringstream bad_row("dim: 2\nlabels: a b\n1 0\n0 nope\n");
        CHECK_THROWS_WITH_AS(parse_covariance(bad_row, "m.cov"), doctest::Contains("nope"),
                             ParseError);
        std::istringstream bad_count("dim: 2\nlabels: a b\n1 0\n");
        CHECK_THROWS_AS(parse_covariance(bad_count, "m.cov"), ParseError);
    }
}
