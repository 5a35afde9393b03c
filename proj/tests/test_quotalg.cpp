#include <map>

#include "doctest.h"
#include "restree/quotalg.hpp"

using namespace restree;

TEST_SUITE("quotalg") {

TEST_CASE("invariance is the weight congruence") {
    // m = 5 (n = 3): the listed generators are invariant, x is not.
    CHECK(is_invariant(Monomial{5, 0, 1}, 5));   // a = x^5
    CHECK(is_invariant(Monomial{3, 1, 1}, 5));   // b_1 = x^3 y
    CHECK(is_invariant(Monomial{1, 2, 1}, 5));   // b_2 = x y^2
    CHECK(is_invariant(Monomial{0, 5, 1}, 5));   // c = y^5
    CHECK_FALSE(is_invariant(Monomial{1, 0, 1}, 5));
    CHECK_FALSE(is_invariant(Monomial{1, 0, 1}, 7));

    for (std::int64_t m : {5, 7, 9}) {
        for (std::int64_t p = 0; p <= 3 * m; ++p) {
            for (std::int64_t q = 0; q <= 3 * m; ++q) {
                CHECK(is_invariant(Monomial{p, q, 1}, m) == ((p + 2 * q) % m == 0));
            }
        }
    }

    CHECK_THROWS_AS(is_invariant(Monomial{0, 0, 1}, 1), InvalidInputError);
    CHECK_THROWS_AS(is_invariant(Monomial{-1, 0, 1}, 5), InvalidInputError);
}

TEST_CASE("invariant monomials are closed under products") {
    const std::int64_t m = 7;
    for (std::int64_t p1 = 0; p1 <= m; ++p1) {
        for (std::int64_t q1 = 0; q1 <= m; ++q1) {
            if (!is_invariant(Monomial{p1, q1, 1}, m)) continue;
            for (std::int64_t p2 = 0; p2 <= m; ++p2) {
                for (std::int64_t q2 = 0; q2 <= m; ++q2) {
                    if (!is_invariant(Monomial{p2, q2, 1}, m)) continue;
                    CHECK(is_invariant(Monomial{p1 + p2, q1 + q2, 1}, m));
                }
            }
        }
    }
}

TEST_CASE("all listed generators are invariant") {
    for (std::int64_t n = 3; n <= 8; ++n) {
        for (std::int64_t i = 0; i <= n; ++i) {
            CHECK(is_invariant(invariant_generator(i, n), 2 * n - 1));
        }
    }
}

TEST_CASE("minor relations vanish identically") {
    MinorReport three = verify_minor_relations(3);
    CHECK(three.n == 3);
    CHECK(three.m == 5);
    CHECK(three.minors_checked == 3);
    CHECK(three.all_zero);
    CHECK(three.failures.empty());

    for (std::int64_t n = 4; n <= 8; ++n) {
        MinorReport report = verify_minor_relations(n);
        CHECK(report.minors_checked == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(report.all_zero);
    }

    CHECK_THROWS_AS(verify_minor_relations(2), InvalidInputError);
}

TEST_CASE("lambda presentation for n = 3") {
    QuiverPresentation p = lambda_presentation(3);
    CHECK(p.vertices == std::vector<std::string>{"1", "2"});
    REQUIRE(p.arrows.size() == 5);
    CHECK(p.arrows[0].name == "a");
    CHECK(p.arrows[1].name == "b");
    CHECK(p.arrows[2].name == "s1");
    CHECK(p.arrows[4].name == "s3");
    CHECK(p.arrows[0].from == "1");
    CHECK(p.arrows[0].to == "2");
    CHECK(p.arrows[2].from == "2");
    CHECK(p.arrows[2].to == "1");

    REQUIRE(p.relations.size() == 5);
    auto words = [](const PathRelation& r) {
        return std::make_pair(r.lhs.arrows, r.rhs.arrows);
    };
    using V = std::vector<std::string>;
    CHECK(words(p.relations[0]) == std::make_pair(V{"s2", "b", "s3"}, V{"s3", "b", "s2"}));
    CHECK(words(p.relations[1]) == std::make_pair(V{"a", "s3"}, V{"b", "s2", "b", "s2"}));
    CHECK(words(p.relations[2]) == std::make_pair(V{"s3", "a"}, V{"s2", "b", "s2", "b"}));
    CHECK(words(p.relations[3]) == std::make_pair(V{"a", "s2"}, V{"b", "s1"}));
    CHECK(words(p.relations[4]) == std::make_pair(V{"s2", "a"}, V{"s1", "b"}));

    CHECK(p.relations[1].rhs.display == "(b s2)^2");
    CHECK(p.relations[2].rhs.display == "(s2 b)^2");
}

TEST_CASE("lambda presentation counts for general n") {
    for (std::int64_t n = 3; n <= 9; ++n) {
        QuiverPresentation p = lambda_presentation(n);
        CHECK(p.vertices.size() == 2);
        CHECK(p.arrows.size() == static_cast<std::size_t>(n + 2));
        CHECK(p.relations.size() == static_cast<std::size_t>(3 + 2 * (n - 2)));
        CHECK(relations_parallel_composable(p));
    }
    CHECK_THROWS_AS(lambda_presentation(2), InvalidInputError);
}

TEST_CASE("loops at the right vertices") {
    QuiverPresentation p = lambda_presentation(3);
    // a s3 and (b s2)^2 both start and end at vertex 1.
    std::map<std::string, std::pair<std::string, std::string>> ends;
    for (const auto& arrow : p.arrows) ends[arrow.name] = {arrow.from, arrow.to};
    auto source = [&](const PathWord& w) { return ends[w.arrows.front()].first; };
    auto target = [&](const PathWord& w) { return ends[w.arrows.back()].second; };
    CHECK(source(p.relations[1].lhs) == "1");
    CHECK(target(p.relations[1].lhs) == "1");
    CHECK(source(p.relations[1].rhs) == "1");
    CHECK(target(p.relations[1].rhs) == "1");
    CHECK(source(p.relations[2].lhs) == "2");
    CHECK(target(p.relations[2].rhs) == "2");
}

TEST_CASE("non-minimal presentation carries the commuting relations as well") {
    for (std::int64_t n = 3; n <= 6; ++n) {
        QuiverPresentation p = lambda_presentation_nonminimal(n);
        std::size_t expected = static_cast<std::size_t>(n + n * (n - 1) / 2 + 2 + 2 * (n - 2));
        CHECK(p.relations.size() == expected);
        CHECK(relations_parallel_composable(p));
    }
}

TEST_CASE("composability detects malformed relations") {
    QuiverPresentation p = lambda_presentation(3);
    p.relations.push_back({p.relations[1].lhs, p.relations[0].rhs});  // 1->1 vs 2->1
    CHECK_FALSE(relations_parallel_composable(p));

    QuiverPresentation q = lambda_presentation(3);
    q.relations[0].lhs.arrows = {"a", "a"};  // not composable
    CHECK_FALSE(relations_parallel_composable(q));
}

TEST_CASE("hilbert shadow") {
    HilbertReport report = hilbert_consistency(3, 6);
    CHECK(report.m == 5);
    REQUIRE(report.pieces.size() == 4);

    const HilbertPiece& ring = report.pieces[0];
    CHECK(ring.name == "e1_e1");
    CHECK(ring.dims[0] == 1);  // constants only
    CHECK(ring.generators == std::vector<std::string>{"1"});

    const HilbertPiece& ideal = report.pieces[1];
    CHECK(ideal.name == "e1_e2");
    CHECK(ideal.weight_class == 2);
    // Lowest-degree content: exactly the two generators x^2 and y.
    CHECK(ideal.generators == std::vector<std::string>{"y", "x^2"});
    CHECK(ideal.dims[2] == 2);

    for (const auto& piece : report.pieces) {
        for (std::size_t d = 0; d < piece.dims.size(); ++d) {
            CHECK(piece.dims[d] >= 0);
            if (d > 0) CHECK(piece.dims[d] >= piece.dims[d - 1]);
        }
    }

    CHECK_THROWS_AS(hilbert_consistency(2, 4), InvalidInputError);
    CHECK_THROWS_AS(hilbert_consistency(3, 9), InvalidInputError);
}

TEST_CASE("presentation JSON shape") {
    auto j = presentation_to_json(lambda_presentation(3));
    CHECK(j["vertices"] == nlohmann::ordered_json({"1", "2"}));
    CHECK(j["arrows"].size() == 5);
    CHECK(j["arrows"][0]["name"] == "a");
    CHECK(j["relations"].size() == 5);
    CHECK(j["relations"][1]["lhs"] == nlohmann::ordered_json({"a", "s3"}));
    CHECK(j["relations"][1]["rhs"] == nlohmann::ordered_json({"b", "s2", "b", "s2"}));
    CHECK(j["relations"][1]["display"] == "a s3 = (b s2)^2");
}

}  // TEST_SUITE
