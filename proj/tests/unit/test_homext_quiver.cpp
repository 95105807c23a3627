#include <algorithm>
#include <random>

#include "doctest.h"
#include "homext/homext_quiver.hpp"

using namespace homext;

namespace {

ModuleSet parse_set(const std::string& signs, const std::vector<std::string>& mods) {
    ModuleSet chi{build_atilde(OrientationVector::parse(signs)), {}};
    for (const auto& text : mods) chi.modules.push_back(StringModule::parse(text));
    return chi;
}

int arrows_between(const HomExtQuiver& h, int src, int tgt, int degree) {
    int count = 0;
    for (const auto& a : h.quiver.arrows)
        if (a.src == src && a.tgt == tgt && (degree < 0 || a.degree == degree)) ++count;
    return count;
}

}  // namespace

TEST_CASE("kronecker simples give the double arrow without relations") {
    ModuleSet chi = parse_set("+-", {"(2,1;0)", "(1,2;0)"});
    REQUIRE(is_exceptional_set(chi));
    HomExtQuiver h = build_geometric(chi);
    CHECK(h.quiver.arrows.size() == 2);
    CHECK(h.quiver.relations.empty());
    CHECK(arrows_between(h, 0, 1, 1) == 2);  // both extensions, S1 before S2
    CHECK(count_linear_extensions(h.quiver) == BigInt(1));
    CHECK(exceptional_orderings(chi).size() == 1);
}

TEST_CASE("chain of simples over the four-cycle carries the extra arrow") {
    ModuleSet chi = parse_set("+++-", {"(4,1;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
    REQUIRE(is_exceptional_set(chi));
    HomExtQuiver h = build_geometric(chi);
    REQUIRE(h.quiver.arrows.size() == 4);
    CHECK(arrows_between(h, 0, 1, 1) == 1);
    CHECK(arrows_between(h, 1, 2, 1) == 1);
    CHECK(arrows_between(h, 2, 3, 1) == 1);
    CHECK(arrows_between(h, 0, 3, 1) == 1);
    // compositions of consecutive extensions vanish
    CHECK(h.quiver.relations.size() == 2);
    CHECK(is_gentle(h.quiver));
}

TEST_CASE("the two printed three-vertex quivers differ only in relations") {
    ModuleSet with_p2 = parse_set("++-", {"(3,1;0)", "(2,3;0)", "(1,3;0)"});
    ModuleSet simples = parse_set("++-", {"(3,1;0)", "(1,2;0)", "(2,3;0)"});
    REQUIRE(is_exceptional_set(with_p2));
    REQUIRE(is_exceptional_set(simples));

    HomExtQuiver h1 = build_geometric(with_p2);  // S1, S3, P2
    CHECK(h1.quiver.arrows.size() == 3);
    CHECK(h1.quiver.relations.empty());
    CHECK(arrows_between(h1, 0, 1, 1) == 1);  // S1 -> S3 extension
    CHECK(arrows_between(h1, 1, 2, 0) == 1);  // S3 -> P2 morphism
    CHECK(arrows_between(h1, 0, 2, 1) == 1);  // S1 -> P2 extension

    HomExtQuiver h2 = build_geometric(simples);  // S1, S2, S3
    CHECK(h2.quiver.arrows.size() == 3);
    CHECK(h2.quiver.relations.size() == 1);
    for (const auto& a : h2.quiver.arrows) CHECK(a.degree == 1);

    CHECK_FALSE(iso_with_relations(h1.quiver, h2.quiver).has_value());
}

TEST_CASE("geometric and algebraic routes agree on samples") {
    for (const char* signs : {"+-", "+--", "++-", "+-+-"}) {
        AtildeQuiver q = build_atilde(OrientationVector::parse(signs));
        auto sets = enumerate_exceptional_sets(q, 1);
        size_t step = sets.size() > 12 ? sets.size() / 12 : 1;
        for (size_t t = 0; t < sets.size(); t += step) {
            HomExtQuiver geo = build_geometric(sets[t]);
            HomExtQuiver alg = build_algebraic(sets[t]);
            REQUIRE(geo.quiver.arrows.size() == alg.quiver.arrows.size());
            auto iso = iso_with_relations(geo.quiver, alg.quiver);
            CHECK(iso.has_value());
            CHECK(is_gentle(geo.quiver));
        }
    }
}

TEST_CASE("algebraic route on the non-exceptional tree-quiver triple") {
    // quiver 1 -> 3, 3 -> 2, 4 -> 3 with the uniserial stack M1 = [4/3/2],
    // the thick middle M2 = [{1 4}/{3 3}/2] and M3 = [1/3]
    GQuiver g;
    g.num_vertices = 4;
    g.arrows = {{1, 3}, {3, 2}, {4, 3}};

    RepQ m1;
    m1.dims = {0, 1, 1, 1};
    m1.mats = {IntMat(1, 0), IntMat(1, 1), IntMat(1, 1)};
    m1.mats[1].at(0, 0) = 1;  // 3 -> 2
    m1.mats[2].at(0, 0) = 1;  // 4 -> 3

    RepQ m2;
    m2.dims = {1, 1, 2, 1};
    m2.mats = {IntMat(2, 1), IntMat(1, 2), IntMat(2, 1)};
    m2.mats[0].at(0, 0) = 1;  // 1 -> first 3
    m2.mats[1].at(0, 0) = 1;  // both 3s -> 2
    m2.mats[1].at(0, 1) = 1;
    m2.mats[2].at(1, 0) = 1;  // 4 -> second 3

    RepQ m3;
    m3.dims = {1, 0, 1, 0};
    m3.mats = {IntMat(1, 1), IntMat(0, 1), IntMat(1, 0)};
    m3.mats[0].at(0, 0) = 1;  // 1 -> 3

    QuiverWithRelations h = build_algebraic_reps(g, {m1, m2, m3}, {"M1", "M2", "M3"});
    REQUIRE(h.arrows.size() == 3);
    int a12 = -1, a23 = -1, a31 = -1;
    for (size_t a = 0; a < h.arrows.size(); ++a) {
        if (h.arrows[a].src == 0 && h.arrows[a].tgt == 1) a12 = static_cast<int>(a);
        if (h.arrows[a].src == 1 && h.arrows[a].tgt == 2) a23 = static_cast<int>(a);
        if (h.arrows[a].src == 2 && h.arrows[a].tgt == 0) a31 = static_cast<int>(a);
    }
    REQUIRE(a12 >= 0);
    REQUIRE(a23 >= 0);
    REQUIRE(a31 >= 0);
    CHECK(h.arrows[static_cast<size_t>(a12)].degree == 0);
    CHECK(h.arrows[static_cast<size_t>(a23)].degree == 0);
    CHECK(h.arrows[static_cast<size_t>(a31)].degree == 1);
    // every length-two path vanishes
    CHECK(h.relations ==
          std::set<std::pair<int, int>>{{a12, a23}, {a23, a31}, {a31, a12}});
}

TEST_CASE("exceptionality dictionary on the three-vertex quiver") {
    ModuleSet good = parse_set("+-+-", {"(4,2;0)", "(1,3;0)", "(4,3;0)", "(3,4;0)"});
    CHECK(is_exceptional_set(good));
    CHECK(is_exceptional_diagram(good.diagram()));
    CHECK_FALSE(exceptional_orderings(good).empty());

    // a self-extending member forces a loop
    ModuleSet bad = parse_set("+--", {"(1,1;0)", "(1,2;0)", "(2,3;0)"});
    CHECK_FALSE(is_exceptional_set(bad));

    // the two-cycle pair can never be completed
    ModuleSet cyc = parse_set("+--", {"(2,3;0)", "(3,2;0)", "(1,2;0)"});
    CHECK_FALSE(is_exceptional_set(cyc));
    CHECK_FALSE(is_exceptional_diagram(cyc.diagram()));
    CHECK(exceptional_orderings(cyc).empty());
}

TEST_CASE("poset closure and linear extension counting") {
    QuiverWithRelations chain;
    chain.vertices = {"a", "b", "c", "d"};
    chain.arrows = {{0, 1, -1}, {1, 2, -1}, {2, 3, -1}};
    CHECK(count_linear_extensions(chain) == BigInt(1));
    auto reach = ext_poset(chain);
    CHECK(reach[0][3]);
    CHECK_FALSE(reach[3][0]);

    QuiverWithRelations antichain;
    antichain.vertices = {"a", "b", "c", "d", "e"};
    CHECK(count_linear_extensions(antichain) == BigInt(120));

    QuiverWithRelations vee;  // a < c, b < c
    vee.vertices = {"a", "b", "c"};
    vee.arrows = {{0, 2, -1}, {1, 2, -1}};
    CHECK(count_linear_extensions(vee) == BigInt(2));

    QuiverWithRelations loop;
    loop.vertices = {"a", "b"};
    loop.arrows = {{0, 1, -1}, {1, 0, -1}};
    CHECK_THROWS_AS(count_linear_extensions(loop), CyclicQuiver);
}

TEST_CASE("linear extensions count exceptional orderings across a family") {
    for (const char* signs : {"+-", "+--", "++-"}) {
        AtildeQuiver q = build_atilde(OrientationVector::parse(signs));
        auto sets = enumerate_exceptional_sets(q, 1);
        CHECK_FALSE(sets.empty());
        for (const ModuleSet& chi : sets) {
            HomExtQuiver h = build_geometric(chi);
            CHECK(count_linear_extensions(h.quiver) ==
                  BigInt(exceptional_orderings(chi).size()));
        }
    }
}

TEST_CASE("no member pair of an enumerated set carries maps both ways") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("++-"));
    for (const ModuleSet& chi : enumerate_exceptional_sets(q, 1)) {
        for (size_t x = 0; x < chi.modules.size(); ++x)
            for (size_t y = 0; y < chi.modules.size(); ++y) {
                if (x == y) continue;
                const bool fwd = dim_hom(q, chi.modules[x], chi.modules[y]) > 0 ||
                                 dim_ext(q, chi.modules[x], chi.modules[y]) > 0;
                const bool bwd = dim_hom(q, chi.modules[y], chi.modules[x]) > 0 ||
                                 dim_ext(q, chi.modules[y], chi.modules[x]) > 0;
                CHECK_FALSE((fwd && bwd));
            }
    }
}

TEST_CASE("dropping one member leaves exactly one completion in the window") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("++-"));
    auto sets = enumerate_exceptional_sets(q, 1);
    auto pool = exceptional_modules(q, 1);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6 && !sets.empty(); ++trial) {
        const ModuleSet& chi = sets[rng() % sets.size()];
        auto orders = exceptional_orderings(chi);
        REQUIRE_FALSE(orders.empty());
        const auto& order = orders[0];
        for (size_t drop = 0; drop < order.size(); ++drop) {
            int completions = 0;
            for (const StringModule& cand : pool) {
                std::vector<StringModule> seq = order;
                seq[drop] = cand;
                bool ok = true;
                for (size_t later = 0; later < seq.size() && ok; ++later)
                    for (size_t earlier = 0; earlier < later && ok; ++earlier) {
                        if (seq[later] == seq[earlier]) ok = false;
                        else if (dim_hom(q, seq[later], seq[earlier]) > 0 ||
                                 dim_ext(q, seq[later], seq[earlier]) > 0)
                            ok = false;
                    }
                if (ok) ++completions;
            }
            CHECK(completions == 1);
        }
    }
}

TEST_CASE("singleton algebraic quiver of an exceptional module is a point") {
    ModuleSet chi = parse_set("+--", {"(3,1;1)"});
    HomExtQuiver h = build_algebraic(chi);
    CHECK(h.quiver.vertices.size() == 1);
    CHECK(h.quiver.arrows.empty());
}
