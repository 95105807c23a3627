#include "doctest.h"
#include "homext/superquiver.hpp"
#include "homext/twist.hpp"

using namespace homext;

namespace {

ModuleSet parse_set(const std::string& signs, const std::vector<std::string>& mods) {
    ModuleSet chi{build_atilde(OrientationVector::parse(signs)), {}};
    for (const auto& text : mods) chi.modules.push_back(StringModule::parse(text));
    return chi;
}

int find_arrow(const Superquiver& s, int src, int tgt) {
    for (size_t a = 0; a < s.quiver.arrows.size(); ++a)
        if (s.quiver.arrows[a].src == src && s.quiver.arrows[a].tgt == tgt)
            return static_cast<int>(a);
    return -1;
}

}  // namespace

TEST_CASE("the simples over the straight four-cycle freeze the middle arrow") {
    ModuleSet chi = parse_set("+++-", {"(4,1;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
    HomExtQuiver h = build_geometric(chi);
    Superquiver s = from_homext(h, chi.quiver);
    REQUIRE(s.quiver.arrows.size() == 4);
    // S2 and S3 are the regular members
    CHECK(classify(chi.quiver, chi.modules[1]) == ARComponent::LeftRegular);
    CHECK(classify(chi.quiver, chi.modules[2]) == ARComponent::LeftRegular);
    const int frozen_arrow = find_arrow(s, 1, 2);
    REQUIRE(frozen_arrow >= 0);
    for (size_t a = 0; a < s.frozen.size(); ++a)
        CHECK(s.frozen[a] == (static_cast<int>(a) == frozen_arrow));
    for (const auto& arrow : s.quiver.arrows) CHECK(arrow.degree == 1);
}

TEST_CASE("the twisted companion collection reproduces the printed quiver") {
    // P2, S2, S3, P1 over the same quiver
    ModuleSet chi = parse_set("+++-", {"(1,4;0)", "(1,2;0)", "(2,3;0)", "(3,4;1)"});
    REQUIRE(is_exceptional_set(chi));
    HomExtQuiver h = build_geometric(chi);
    Superquiver s = from_homext(h, chi.quiver);
    REQUIRE(s.quiver.arrows.size() == 4);

    const int p2_s2 = find_arrow(s, 0, 1);
    const int p2_p1 = find_arrow(s, 0, 3);
    const int s2_s3 = find_arrow(s, 1, 2);
    const int s3_p1 = find_arrow(s, 2, 3);
    REQUIRE(p2_s2 >= 0);
    REQUIRE(p2_p1 >= 0);
    REQUIRE(s2_s3 >= 0);
    REQUIRE(s3_p1 >= 0);
    CHECK(s.quiver.arrows[static_cast<size_t>(p2_s2)].degree == 0);
    CHECK(s.quiver.arrows[static_cast<size_t>(p2_p1)].degree == 0);
    CHECK(s.quiver.arrows[static_cast<size_t>(s2_s3)].degree == 1);
    CHECK(s.quiver.arrows[static_cast<size_t>(s3_p1)].degree == 1);
    // only the middle arrow joins two regulars
    for (size_t a = 0; a < s.frozen.size(); ++a)
        CHECK(s.frozen[a] == (static_cast<int>(a) == s2_s3));
    // the chain compositions vanish: P2 -> S2 -> S3 and S2 -> S3 -> P1
    CHECK(s.quiver.relations.count({p2_s2, s2_s3}) == 1);
    CHECK(s.quiver.relations.count({s2_s3, s3_p1}) == 1);
    CHECK(s.quiver.relations.size() == 2);
}

TEST_CASE("the two printed superquivers are twist equivalent") {
    ModuleSet chi1 = parse_set("+++-", {"(4,1;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
    ModuleSet chi2 = parse_set("+++-", {"(1,4;0)", "(1,2;0)", "(2,3;0)", "(3,4;1)"});
    Superquiver s1 = from_homext(build_geometric(chi1), chi1.quiver);
    Superquiver s2 = from_homext(build_geometric(chi2), chi2.quiver);
    CHECK(twist_equivalent_super(s1, s2));
    // the collections sit in one twist orbit at label level
    TwistSearch search = twist_equivalent(chi1, chi2, 3);
    CHECK(search.word.has_value());
}

TEST_CASE("trivial twist zeroes the unfrozen degrees only") {
    ModuleSet chi = parse_set("+++-", {"(4,1;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
    Superquiver s = from_homext(build_geometric(chi), chi.quiver);
    Superquiver t = trivial_twist(s);
    for (size_t a = 0; a < t.quiver.arrows.size(); ++a) {
        if (s.frozen[a]) CHECK(t.quiver.arrows[a].degree == s.quiver.arrows[a].degree);
        else CHECK(t.quiver.arrows[a].degree == 0);
    }
    Superquiver tt = trivial_twist(t);
    CHECK(tt.quiver.arrows.size() == t.quiver.arrows.size());
    for (size_t a = 0; a < t.quiver.arrows.size(); ++a)
        CHECK(tt.quiver.arrows[a].degree == t.quiver.arrows[a].degree);
    CHECK(twist_equivalent_super(s, t));
}

TEST_CASE("frozen counts separate superquivers") {
    ModuleSet chi1 = parse_set("+++-", {"(4,1;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
    Superquiver s1 = from_homext(build_geometric(chi1), chi1.quiver);
    Superquiver s2 = s1;
    s2.frozen.assign(s2.frozen.size(), false);
    CHECK_FALSE(twist_equivalent_super(s1, s2));
}

TEST_CASE("defining representations check out and are irreducible") {
    for (const char* signs : {"+-", "++-", "+-+-"}) {
        AtildeQuiver q = build_atilde(OrientationVector::parse(signs));
        auto sets = enumerate_exceptional_sets(q, 1);
        size_t step = sets.size() > 6 ? sets.size() / 6 : 1;
        for (size_t t = 0; t < sets.size(); t += step) {
            HomExtQuiver h = build_geometric(sets[t]);
            Superquiver s = from_homext(h, q);
            SuperRepresentation rep = defining_representation(q, h);
            CHECK(check_representation(q, s, rep));
            CHECK(is_irreducible(q, s, rep));
        }
    }
}

TEST_CASE("ext-after-ext always vanishes in a checked representation") {
    ModuleSet chi = parse_set("+++-", {"(4,1;0)", "(1,2;0)", "(2,3;0)", "(3,4;0)"});
    HomExtQuiver h = build_geometric(chi);
    Superquiver s = from_homext(h, chi.quiver);
    SuperRepresentation rep = defining_representation(chi.quiver, h);
    // all relations here are ext-after-ext chains and must evaluate to zero
    CHECK(check_representation(chi.quiver, s, rep));
}

TEST_CASE("a composite routed through a middle vertex is reducible") {
    // nested quotients (1,4;0) -> (1,3;0) -> (1,2;0) with the long arrow
    // assigned the composite map
    AtildeQuiver q = build_atilde(OrientationVector::parse("+++-"));
    Superquiver s;
    s.quiver.vertices = {"A", "B", "C"};
    s.quiver.arrows = {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}};
    s.frozen = {false, false, false};

    SuperRepresentation rep;
    rep.vertex_modules = {StringModule{1, 4, 0}, StringModule{1, 3, 0}, StringModule{1, 2, 0}};
    rep.arrow_choice = {0, 0, 0};
    REQUIRE(graph_maps(q, rep.vertex_modules[0], rep.vertex_modules[2]).size() == 1);
    CHECK(check_representation(q, s, rep));
    CHECK_FALSE(is_irreducible(q, s, rep));
}

TEST_CASE("mismatched representation data is rejected") {
    ModuleSet chi = parse_set("+-", {"(2,1;0)", "(1,2;0)"});
    HomExtQuiver h = build_geometric(chi);
    Superquiver s = from_homext(h, chi.quiver);
    SuperRepresentation rep;
    rep.vertex_modules = {StringModule{2, 1, 0}};  // one module missing
    rep.arrow_choice = {0, 0};
    CHECK_THROWS_AS(check_representation(chi.quiver, s, rep), InconsistentAssignment);
    SuperRepresentation bad;
    bad.vertex_modules = {StringModule{2, 1, 0}, StringModule{1, 2, 0}};
    bad.arrow_choice = {0, 5};  // no such basis element
    CHECK_THROWS_AS(check_representation(chi.quiver, s, bad), InconsistentAssignment);
}

TEST_CASE("twist equivalence of superquivers is an equivalence relation") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("++-"));
    auto sets = enumerate_exceptional_sets(q, 1);
    std::vector<Superquiver> supers;
    for (size_t t = 0; t < sets.size() && supers.size() < 6; t += 3)
        supers.push_back(from_homext(build_geometric(sets[t]), q));
    for (const auto& s : supers) CHECK(twist_equivalent_super(s, s));
    for (size_t x = 0; x < supers.size(); ++x)
        for (size_t y = 0; y < supers.size(); ++y) {
            CHECK(twist_equivalent_super(supers[x], supers[y]) ==
                  twist_equivalent_super(supers[y], supers[x]));
            for (size_t z = 0; z < supers.size(); ++z)
                if (twist_equivalent_super(supers[x], supers[y]) &&
                    twist_equivalent_super(supers[y], supers[z]))
                    CHECK(twist_equivalent_super(supers[x], supers[z]));
        }
}
