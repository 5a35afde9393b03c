#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "restree/contraction.hpp"
#include "restree/families.hpp"
#include "restree/fundcycle.hpp"

using namespace restree;
using restree::testing::chain_tree;
using restree::testing::star_tree;

TEST_SUITE("contraction") {

TEST_CASE("curve partition") {
    CurvePartition t9 = partition_curves(t9_tree());
    CHECK(t9.crepant == std::vector<std::string>{"E3", "E4", "E5"});
    CHECK(t9.discrepant == std::vector<std::string>{"E1", "E2"});
    CHECK(t9.module_labels.at("E4") == "M_E4");
    CHECK(t9.d_module_label == "D = R ⊕ M_E1 ⊕ M_E2");

    CHECK(partition_curves(ade_tree('E', 8)).discrepant.empty());

    CurvePartition chain = partition_curves(chain_tree({-3, -2}));
    CHECK(chain.crepant == std::vector<std::string>{"E2"});
    CHECK(chain.discrepant == std::vector<std::string>{"E1"});

    CHECK_THROWS_AS(partition_curves(parse_tree("vertex E1 -1\n")), InvalidInputError);
}

TEST_CASE("ade classification") {
    LabelledTree a1 = parse_tree("vertex E1 -2\n");
    CHECK(ade_type(a1, {"E1"}) == AdeType{'A', 1});

    CHECK(ade_type(t9_tree(), {"E3", "E4"}) == AdeType{'A', 2});

    CHECK(ade_type(ade_tree('D', 4), {"E1", "E2", "E3", "E4"}) == AdeType{'D', 4});
    CHECK(ade_type(ade_tree('D', 7), ade_tree('D', 7).names()) == AdeType{'D', 7});
    CHECK(ade_type(ade_tree('E', 6), ade_tree('E', 6).names()) == AdeType{'E', 6});
    CHECK(ade_type(ade_tree('E', 7), ade_tree('E', 7).names()) == AdeType{'E', 7});
    CHECK(ade_type(ade_tree('E', 8), ade_tree('E', 8).names()) == AdeType{'E', 8});

    // Arms (1,2,5) overshoot E8.
    std::vector<std::pair<std::string, std::int64_t>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= 9; ++i) {
        vertices.emplace_back("E" + std::to_string(i), -2);
        if (i > 1 && i <= 8) edges.emplace_back("E" + std::to_string(i - 1), "E" + std::to_string(i));
    }
    edges.emplace_back("E3", "E9");
    LabelledTree overshoot = LabelledTree::make(vertices, edges);
    CHECK(ade_type(overshoot, overshoot.names()) == std::nullopt);

    // A degree-4 vertex is never simply laced.
    LabelledTree star = star_tree(-2, {-2, -2, -2, -2});
    CHECK(ade_type(star, star.names()) == std::nullopt);

    CHECK_THROWS_AS(ade_type(t9_tree(), {"E1"}), InvalidInputError);          // weight -3
    CHECK_THROWS_AS(ade_type(t9_tree(), {"E4", "E5"}), InvalidInputError);    // disconnected
    CHECK_THROWS_AS(ade_type(t9_tree(), std::vector<std::string>{}), InvalidInputError);
}

TEST_CASE("cyclic quotient names ship for the A-series only") {
    CHECK(cyclic_quotient_name(AdeType{'A', 1}) == "1/2(1,1)");
    CHECK(cyclic_quotient_name(AdeType{'A', 2}) == "1/3(1,2)");
    CHECK(cyclic_quotient_name(AdeType{'D', 4}) == std::nullopt);
}

TEST_CASE("T9 contraction of E3 and E5") {
    ContractionResult result = contract(t9_tree(), {"E3", "E5"});
    CHECK(result.s_subset_of_c);
    REQUIRE(result.components.size() == 2);
    CHECK(result.components[0].curves == std::vector<std::string>{"E3"});
    CHECK(result.components[1].curves == std::vector<std::string>{"E5"});
    CHECK(result.components[0].ade == AdeType{'A', 1});
    CHECK(result.components[1].ade == AdeType{'A', 1});

    REQUIRE(result.singular_points.size() == 2);
    CHECK(result.singular_points[0].on_curves == std::vector<std::string>{"E2", "E4"});
    CHECK(result.singular_points[1].on_curves == std::vector<std::string>{"E2"});

    CHECK(result.quotient_vertices == std::vector<std::string>{"E1", "E2", "E4"});
    CHECK(result.quotient_edges ==
          std::vector<std::pair<std::string, std::string>>{{"E1", "E2"}, {"E2", "E4"}});

    CHECK(result.stable_object_count == 2);
    CHECK(result.inj_dim_prediction == 3);
    CHECK(result.n_module_label == "N^S = R ⊕ M_E1 ⊕ M_E2 ⊕ M_E4");
}

TEST_CASE("T9 contraction of the whole crepant set") {
    ContractionResult result = contract(t9_tree(), {"E3", "E4", "E5"});
    REQUIRE(result.components.size() == 2);
    CHECK(result.components[0].curves == std::vector<std::string>{"E3", "E4"});
    CHECK(result.components[0].ade == AdeType{'A', 2});
    CHECK(result.components[1].curves == std::vector<std::string>{"E5"});
    CHECK(result.components[1].ade == AdeType{'A', 1});
    CHECK(result.stable_object_count == 3);
    CHECK(result.inj_dim_prediction == 3);
}

TEST_CASE("empty contraction is the identity") {
    LabelledTree t = t9_tree();
    ContractionResult result = contract(t, {});
    CHECK(result.components.empty());
    CHECK(result.quotient_vertices == t.names());
    CHECK(result.quotient_edges.size() == t.edges().size());
    CHECK(result.stable_object_count == 0);
}

TEST_CASE("contracting everything leaves an empty quotient") {
    LabelledTree t = ade_tree('A', 3);
    ContractionResult result = contract(t, t.names());
    CHECK(result.quotient_vertices.empty());
    CHECK(result.quotient_edges.empty());
    REQUIRE(result.singular_points.size() == 1);
    CHECK(result.singular_points[0].on_curves.empty());
    CHECK(result.n_module_label == "N^S = R");
    CHECK(result.inj_dim_prediction == 2);
}

TEST_CASE("discrepant subsets are flagged, not refused") {
    ContractionResult result = contract(t9_tree(), {"E1", "E3"});
    CHECK_FALSE(result.s_subset_of_c);
    CHECK_FALSE(result.stable_object_count.has_value());
    REQUIRE(result.components.size() == 2);
    CHECK_FALSE(result.components[0].ade.has_value());
}

TEST_CASE("contract validates its input") {
    CHECK_THROWS_AS(contract(t9_tree(), {"E9"}), InvalidInputError);
    CHECK_THROWS_AS(contract(t9_tree(), {"E3", "E3"}), InvalidInputError);
    CHECK_THROWS_AS(contract(parse_tree("vertex E1 -1\n"), {}), InvalidInputError);
}

TEST_CASE("injective dimension prediction") {
    CHECK(contract(ade_tree('A', 4), {}).inj_dim_prediction == 2);
    CHECK(contract(ade_tree('E', 8), {}).inj_dim_prediction == 2);
    CHECK(contract(t9_tree(), {}).inj_dim_prediction == 3);
    CHECK(contract(type_e6_tree(), {}).inj_dim_prediction == 3);
}

TEST_CASE("components refine under subset") {
    std::mt19937_64 rng(2718);
    for (int round = 0; round < 60; ++round) {
        LabelledTree t = testing::random_tree(rng, 2 + round % 9, {-2, -3});
        std::vector<std::string> big, small;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (rng() % 2) {
                big.push_back(t.name(v));
                if (rng() % 2) small.push_back(t.name(v));
            }
        }
        auto big_result = contract(t, big);
        auto small_result = contract(t, small);
        for (const auto& piece : small_result.components) {
            int containers = 0;
            std::set<std::string> members(piece.curves.begin(), piece.curves.end());
            for (const auto& large : big_result.components) {
                std::set<std::string> superset(large.curves.begin(), large.curves.end());
                bool contained = true;
                for (const auto& name : members) contained = contained && superset.count(name);
                if (contained) ++containers;
            }
            CHECK(containers == 1);
        }
    }
}

TEST_CASE("quotient vertex count and identity contraction") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 40; ++round) {
        LabelledTree t = testing::random_tree(rng, 1 + round % 12, {-2, -3, -4});
        std::vector<std::string> s;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (rng() % 3 == 0) s.push_back(t.name(v));
        }
        auto result = contract(t, s);
        CHECK(result.quotient_vertices.size() == t.size() - s.size());
    }
}

TEST_CASE("crepant components of rational trees always classify") {
    std::mt19937_64 rng(161803);
    std::vector<LabelledTree> pool{type_a_tree(4), type_d_tree(4), type_e6_tree(),
                                   type_e7_tree(), t9_tree()};
    for (int round = 0; round < 200; ++round) {
        pool.push_back(testing::random_tree(rng, 1 + round % 10, {-2, -2, -3, -4}));
    }
    int rational_seen = 0;
    for (const auto& t : pool) {
        if (!artin_check(t).is_rational) continue;
        ++rational_seen;
        ContractionResult result = contract(t, partition_curves(t).crepant);
        for (const auto& component : result.components) {
            CHECK(component.ade.has_value());
        }
    }
    CHECK(rational_seen > 40);
}

TEST_CASE("a connected all-(-2) tree classifies iff its form is definite") {
    std::mt19937_64 rng(65537);
    int classified = 0, rejected = 0;
    for (int round = 0; round < 300; ++round) {
        LabelledTree t = testing::random_tree(rng, 1 + round % 12, {-2});
        bool ade = ade_type(t, t.names()).has_value();
        CHECK(ade == IntersectionForm::of(t).is_negative_definite());
        (ade ? classified : rejected) += 1;
    }
    CHECK(classified > 50);
    CHECK(rejected > 50);
}

TEST_CASE("contraction discrepancies") {
    auto crepant = contraction_discrepancy(t9_tree(), {"E3", "E5"});
    CHECK(crepant.at("E3") == 0);
    CHECK(crepant.at("E5") == 0);

    auto e1 = contraction_discrepancy(t9_tree(), {"E1"});
    CHECK(e1.at("E1") == make_rat(-1, 3));

    auto pair = contraction_discrepancy(t9_tree(), {"E1", "E2"});
    CHECK(pair.at("E1") < 0);
    CHECK(pair.at("E2") < 0);
    CHECK(pair.at("E1") == make_rat(-1, 2));
    CHECK(pair.at("E2") == make_rat(-1, 2));

    CHECK_THROWS_AS(contraction_discrepancy(testing::affine_d4_star(), {"E1"}),
                    NotNegativeDefiniteError);
}

TEST_CASE("contraction discrepancy vanishes exactly on crepant subsets") {
    std::mt19937_64 rng(314159);
    for (int round = 0; round < 80; ++round) {
        LabelledTree t = testing::random_tree(rng, 1 + round % 8, {-2, -2, -3});
        if (!IntersectionForm::of(t).is_negative_definite()) continue;
        std::vector<std::string> s;
        bool all_minus_two = true;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (rng() % 2) {
                s.push_back(t.name(v));
                all_minus_two = all_minus_two && (t.weight(v) == -2);
            }
        }
        if (s.empty()) continue;
        bool all_zero = true;
        for (const auto& [name, d] : contraction_discrepancy(t, s)) {
            all_zero = all_zero && (d == 0);
        }
        CHECK(all_zero == all_minus_two);
    }
}

TEST_CASE("contraction JSON shape") {
    auto j = contraction_to_json(contract(t9_tree(), {"E3", "E5"}));
    CHECK(j["contracted"] == nlohmann::ordered_json({"E3", "E5"}));
    CHECK(j["components"][0]["ade"]["series"] == "A");
    CHECK(j["components"][0]["ade"]["rank"] == 1);
    CHECK(j["quotient"]["vertices"].size() == 3);
    CHECK(j["singular_points"][0]["on_curves"] == nlohmann::ordered_json({"E2", "E4"}));
    CHECK(j["stable_object_count"] == 2);
    CHECK(j["s_subset_of_C"] == true);
}

}  // TEST_SUITE
