#include <random>

#include "doctest.h"
#include "homext/quiver.hpp"

using namespace homext;

namespace {

// All sign vectors of length n containing both signs.
std::vector<OrientationVector> all_orientations(int n) {
    std::vector<OrientationVector> out;
    for (int mask = 1; mask + 1 < (1 << n); ++mask) {
        std::vector<char> signs;
        for (int i = 0; i < n; ++i) signs.push_back((mask >> i) & 1 ? '+' : '-');
        out.emplace_back(std::move(signs));
    }
    return out;
}

}  // namespace

TEST_CASE("build_atilde follows the sign rule") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("+--"));
    CHECK(q.src(1) == 1);
    CHECK(q.tgt(1) == 2);
    CHECK(q.src(2) == 3);
    CHECK(q.tgt(2) == 2);
    CHECK(q.src(3) == 1);
    CHECK(q.tgt(3) == 3);

    AtildeQuiver kron = build_atilde(OrientationVector::parse("+-"));
    CHECK(kron.src(1) == 1);
    CHECK(kron.tgt(1) == 2);
    CHECK(kron.src(2) == 1);
    CHECK(kron.tgt(2) == 2);

    CHECK_THROWS_AS(OrientationVector::parse("+++"), AllSignsEqual);
    CHECK_THROWS_AS(OrientationVector::parse("+"), TooShort);
    CHECK_THROWS_AS(OrientationVector::parse("+x-"), ParseError);
}

TEST_CASE("every vertex of the cycle has total degree two") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& eps : all_orientations(n)) {
            AtildeQuiver q = build_atilde(eps);
            std::vector<int> deg(static_cast<size_t>(n), 0);
            for (int a = 1; a <= n; ++a) {
                ++deg[static_cast<size_t>(q.src(a) - 1)];
                ++deg[static_cast<size_t>(q.tgt(a) - 1)];
            }
            for (int d : deg) CHECK(d == 2);
        }
    }
}

TEST_CASE("opposite flips every sign and reverses every arrow") {
    OrientationVector eps = OrientationVector::parse("+--");
    CHECK(eps.opposite().to_string() == "-++");
    CHECK(OrientationVector::parse("+-").opposite().to_string() == "-+");
    for (int n = 2; n <= 6; ++n) {
        for (const auto& e : all_orientations(n)) {
            CHECK(e.opposite().opposite() == e);
            AtildeQuiver q = build_atilde(e);
            AtildeQuiver qop = build_atilde(e.opposite());
            for (int a = 1; a <= n; ++a) {
                CHECK(q.src(a) == qop.tgt(a));
                CHECK(q.tgt(a) == qop.src(a));
            }
        }
    }
}

namespace {

// Q^E for the quotient regression: two rows of X1 -> X2 -> X3 joined by a
// degree-crossing arrow, every length-two path zero.
QuiverWithRelations two_row_quiver() {
    QuiverWithRelations q;
    q.vertices = {"X1", "X2", "X3", "SX1", "SX2", "SX3"};
    q.arrows = {
        {0, 1, -1},  // a1
        {1, 2, -1},  // a2
        {2, 3, -1},  // b1: X3 -> SX1
        {3, 4, -1},  // Sa1
        {4, 5, -1},  // Sa2
    };
    q.relations = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    return q;
}

}  // namespace

TEST_CASE("quotient quiver collapses the two-row quiver to a 3-cycle") {
    QuiverWithRelations q = two_row_quiver();
    QuiverEquivalence eq;
    eq.vertex_class = {0, 1, 2, 0, 1, 2};
    eq.arrow_class = {0, 1, 2, 0, 1};
    QuiverWithRelations quot = quotient_quiver(q, eq);
    REQUIRE(quot.vertices.size() == 3);
    REQUIRE(quot.arrows.size() == 3);
    // arrows [a1]: 0->1, [a2]: 1->2, [b1]: 2->0
    CHECK(quot.arrows[0].src == 0);
    CHECK(quot.arrows[0].tgt == 1);
    CHECK(quot.arrows[1].src == 1);
    CHECK(quot.arrows[1].tgt == 2);
    CHECK(quot.arrows[2].src == 2);
    CHECK(quot.arrows[2].tgt == 0);
    // all length-two class paths are relations
    CHECK(quot.relations == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("quotient by the identity is a relabeled copy") {
    QuiverWithRelations q = two_row_quiver();
    QuiverWithRelations quot = quotient_quiver(q, QuiverEquivalence::identity(q));
    CHECK(quot.vertices.size() == q.vertices.size());
    CHECK(quot.arrows.size() == q.arrows.size());
    CHECK(quot.relations == q.relations);
    CHECK(iso_with_relations(q, quot).has_value());
}

TEST_CASE("identifying every vertex of an arrowless quiver leaves a point") {
    QuiverWithRelations q;
    q.vertices = {"a", "b", "c"};
    QuiverEquivalence eq;
    eq.vertex_class = {0, 0, 0};
    QuiverWithRelations quot = quotient_quiver(q, eq);
    CHECK(quot.vertices.size() == 1);
    CHECK(quot.arrows.empty());
}

TEST_CASE("incompatible arrow identifications are rejected") {
    QuiverWithRelations q = two_row_quiver();
    QuiverEquivalence eq;
    eq.vertex_class = {0, 1, 2, 3, 4, 5};  // vertices kept apart
    eq.arrow_class = {0, 1, 2, 0, 1};      // but arrows identified
    CHECK_THROWS_AS(quotient_quiver(q, eq), IncompatibleEquivalence);
}

namespace {

QuiverWithRelations chain3(bool with_relation) {
    // shape of the two printed 3-vertex quivers: 0 -> 1 -> 2 plus 0 -> 2
    QuiverWithRelations q;
    q.vertices = {"A", "B", "C"};
    q.arrows = {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}};
    if (with_relation) q.relations.insert({0, 1});
    return q;
}

}  // namespace

TEST_CASE("iso_with_relations distinguishes relation sets") {
    QuiverWithRelations a = chain3(false);
    CHECK(iso_with_relations(a, a).has_value());
    QuiverWithRelations b = chain3(true);
    CHECK_FALSE(iso_with_relations(a, b).has_value());
    CHECK(iso_with_relations(b, b).has_value());
}

TEST_CASE("iso_with_relations finds relabelings") {
    QuiverWithRelations a;
    a.vertices = {"1", "2", "3"};
    a.arrows = {{0, 1, -1}, {1, 2, -1}};
    QuiverWithRelations b;
    b.vertices = {"3", "2", "1"};
    b.arrows = {{2, 1, -1}, {1, 0, -1}};
    auto iso = iso_with_relations(a, b);
    REQUIRE(iso.has_value());
    CHECK(iso->vertex_map == std::vector<int>{2, 1, 0});
}

TEST_CASE("iso_with_relations is symmetric on random small quivers") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        auto random_quiver = [&]() {
            QuiverWithRelations q;
            int nv = 2 + static_cast<int>(rng() % 4);
            for (int v = 0; v < nv; ++v) q.vertices.push_back("v" + std::to_string(v));
            int na = static_cast<int>(rng() % 6);
            for (int a = 0; a < na; ++a)
                q.arrows.push_back({static_cast<int>(rng() % nv), static_cast<int>(rng() % nv), -1});
            for (size_t x = 0; x < q.arrows.size(); ++x)
                for (size_t y = 0; y < q.arrows.size(); ++y)
                    if (q.arrows[x].tgt == q.arrows[y].src && rng() % 3 == 0)
                        q.relations.insert({static_cast<int>(x), static_cast<int>(y)});
            return q;
        };
        QuiverWithRelations q1 = random_quiver();
        QuiverWithRelations q2 = random_quiver();
        CHECK(iso_with_relations(q1, q2).has_value() == iso_with_relations(q2, q1).has_value());
    }
}

TEST_CASE("gentleness conditions") {
    QuiverWithRelations q = chain3(true);
    CHECK(is_gentle(q));

    QuiverWithRelations fan;
    fan.vertices = {"a", "b", "c", "d"};
    fan.arrows = {{0, 1, -1}, {0, 2, -1}, {0, 3, -1}};
    CHECK_FALSE(is_gentle(fan));  // three arrows out of one vertex

    // path algebra of a cycle orientation, no relations
    QuiverWithRelations cyc;
    cyc.vertices = {"1", "2", "3"};
    cyc.arrows = {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}};
    CHECK(is_gentle(cyc));

    // two non-zero continuations of one arrow violate the string condition
    QuiverWithRelations bad;
    bad.vertices = {"a", "b", "c", "d"};
    bad.arrows = {{0, 1, -1}, {1, 2, -1}, {1, 3, -1}};
    CHECK_FALSE(is_gentle(bad));
    bad.relations.insert({0, 1});
    CHECK(is_gentle(bad));
}
