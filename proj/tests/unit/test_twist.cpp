#include <algorithm>

#include "doctest.h"
#include "homext/twist.hpp"

using namespace homext;

namespace {

ModuleSet parse_set(const std::string& signs, const std::vector<std::string>& mods) {
    ModuleSet chi{build_atilde(OrientationVector::parse(signs)), {}};
    for (const auto& text : mods) chi.modules.push_back(StringModule::parse(text));
    return chi;
}

std::vector<StringModule> sorted(std::vector<StringModule> mods) {
    std::sort(mods.begin(), mods.end());
    return mods;
}

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

TEST_CASE("twists agree with the hook calculus where the paper pins it") {
    for (const auto& eps : all_orientations(5)) {
        AtildeQuiver q = build_atilde(eps);
        for (int i = 1; i <= q.n(); ++i) {
            for (int j = 1; j <= q.n(); ++j) {
                for (int l = 0; l <= 3; ++l) {
                    StringModule m{i, j, l};
                    switch (classify(q, m)) {
                        case ARComponent::Preprojective:
                            // left twist climbs the ray by a hook at the start
                            CHECK(twist_L(q, m) ==
                                  hook_op(q, m, HookKind::AddHook, WalkEnd::Start));
                            CHECK(twist_R(q, m) ==
                                  hook_op(q, m, HookKind::AddHook, WalkEnd::End));
                            break;
                        case ARComponent::Preinjective:
                            try {
                                StringModule expect =
                                    hook_op(q, m, HookKind::DeleteCohook, WalkEnd::End);
                                CHECK(twist_L(q, m) == expect);
                            } catch (const UndefinedOperation&) {
                                // ray leaves the module window; the twist still acts
                                CHECK_NOTHROW(twist_L(q, m));
                            }
                            try {
                                StringModule expect =
                                    hook_op(q, m, HookKind::DeleteCohook, WalkEnd::Start);
                                CHECK(twist_R(q, m) == expect);
                            } catch (const UndefinedOperation&) {
                                CHECK_NOTHROW(twist_R(q, m));
                            }
                            break;
                        case ARComponent::RightRegular:
                            CHECK(twist_L(q, m) == m);  // identity away from its boundary
                            break;
                        case ARComponent::LeftRegular:
                            CHECK(twist_R(q, m) == m);
                            break;
                    }
                }
            }
        }
    }
}

TEST_CASE("inverse twists cancel on a sweep") {
    for (const auto& eps : all_orientations(5)) {
        AtildeQuiver q = build_atilde(eps);
        for (int i = 1; i <= q.n(); ++i)
            for (int j = 1; j <= q.n(); ++j)
                for (int l = 0; l <= 3; ++l) {
                    StringModule m{i, j, l};
                    CHECK(twist_L(q, twist_L(q, m, 1), -1) == m);
                    CHECK(twist_R(q, twist_R(q, m, 1), -1) == m);
                    CHECK(twist_L(q, twist_R(q, m)) == twist_R(q, twist_L(q, m)));
                }
    }
}

TEST_CASE("preinjective ray tops cross into the preprojective component") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("+--"));
    // delete-cohook is undefined on (2,1;0); the twist must still act
    CHECK_THROWS_AS(hook_op(q, {2, 1, 0}, HookKind::DeleteCohook, WalkEnd::End),
                    UndefinedOperation);
    StringModule out = twist_L(q, {2, 1, 0});
    CHECK(out == StringModule{1, 2, 0});
    CHECK(classify(q, out) == ARComponent::Preprojective);
}

TEST_CASE("twisting preserves exceptional structure") {
    ModuleSet chi = parse_set("+-+-", {"(4,2;0)", "(1,3;0)", "(4,3;0)", "(3,4;0)"});
    HomExtQuiver base = build_geometric(chi);
    const BigInt orders = count_linear_extensions(base.quiver);
    for (const TwistWord w : {TwistWord{1, 0}, TwistWord{0, 1}, TwistWord{-1, 2},
                              TwistWord{2, -1}, TwistWord{0, 0}}) {
        ModuleSet moved = twist_set(chi, w);
        CHECK(is_exceptional_set(moved));
        HomExtQuiver h = build_geometric(moved);
        CHECK(iso_with_relations(base.quiver, h.quiver).has_value());
        CHECK(is_gentle(h.quiver));
        CHECK(count_linear_extensions(h.quiver) == orders);
        // the diagram route matches the module route
        ArcDiagram d1 = twist_diagram(chi.diagram(), w);
        ArcDiagram d2 = moved.diagram();
        auto key = [](const Arc& a) { return std::make_tuple(a.i, a.j, a.lambda); };
        std::vector<std::tuple<int, int, int>> k1, k2;
        for (const Arc& a : d1.arcs) k1.push_back(key(a));
        for (const Arc& a : d2.arcs) k2.push_back(key(a));
        std::sort(k1.begin(), k1.end());
        std::sort(k2.begin(), k2.end());
        CHECK(k1 == k2);
    }
}

TEST_CASE("twist search recovers a word for a constructed twist") {
    ModuleSet chi = parse_set("+-+-", {"(4,2;0)", "(1,3;0)", "(4,3;0)", "(3,4;0)"});
    ModuleSet moved = twist_set(chi, TwistWord{2, -1});
    TwistSearch search = twist_equivalent(chi, moved, 3);
    REQUIRE(search.word.has_value());
    CHECK(sorted(twist_set(moved, *search.word).modules) == sorted(chi.modules));
    // words act modulo the deck relation: q left steps match p right steps,
    // so the search may return a shorter representative of the same coset
    CHECK(std::abs(search.word->a) + std::abs(search.word->b) <= 3);
    CHECK(search.quivers_isomorphic);
}

TEST_CASE("full opposite twists act trivially on labels") {
    // the composite of a full outer and an inverse full inner twist is the
    // deck rotation, which fixes every arc label
    AtildeQuiver q = build_atilde(OrientationVector::parse("+-+-"));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int l = 0; l <= 2; ++l) {
                StringModule m{i, j, l};
                CHECK(twist_L(q, twist_R(q, m, -2), 2) == m);
            }
}

TEST_CASE("non-isomorphic quivers are never twist equivalent") {
    ModuleSet with_p2 = parse_set("++-", {"(3,1;0)", "(2,3;0)", "(1,3;0)"});
    ModuleSet simples = parse_set("++-", {"(3,1;0)", "(1,2;0)", "(2,3;0)"});
    TwistSearch search = twist_equivalent(with_p2, simples, 3);
    CHECK_FALSE(search.word.has_value());
    CHECK_FALSE(search.quivers_isomorphic);
    CHECK_FALSE(search.window_exhausted);
}

TEST_CASE("kronecker sets form a single twist class") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("+-"));
    auto sets = enumerate_exceptional_sets(q, 2);
    REQUIRE_FALSE(sets.empty());
    auto classes = classify_sets(sets, 4);
    CHECK(classes.size() == 1);
    for (const auto& member : classes[0].members) {
        CHECK((member.word.has_value() || member.window_exhausted));
        CHECK(exceptional_orderings(sets[static_cast<size_t>(member.set_index)]).size() == 1);
    }
}

TEST_CASE("three-vertex classification finds four classes") {
    AtildeQuiver q = build_atilde(OrientationVector::parse("++-"));
    auto sets = enumerate_exceptional_sets(q, 2);
    auto classes = classify_sets(sets, 4);
    CHECK(classes.size() == 4);
}

TEST_CASE("singleton classification") {
    std::vector<ModuleSet> one{parse_set("+-+-", {"(4,2;0)", "(1,3;0)", "(4,3;0)", "(3,4;0)"})};
    CHECK(classify_sets(one, 2).size() == 1);
}
