#pragma once

#include "homext/homext_quiver.hpp"

namespace homext {

// Exponents of the two boundary twists, acting as T_L^a T_R^b on labels.
struct TwistWord {
    int a = 0;
    int b = 0;

    friend bool operator==(const TwistWord& x, const TwistWord& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// The left twist moves every non-regular string one step up its ray, acts as
// the inverse AR translate on the left tube and fixes the right tube; the
// right twist is the boundary dual. Realized as elementary boundary twists
// of the corresponding arcs, so the action is total on strings.
StringModule twist_L(const AtildeQuiver& q, const StringModule& m, int power = 1);
StringModule twist_R(const AtildeQuiver& q, const StringModule& m, int power = 1);

ModuleSet twist_set(const ModuleSet& chi, const TwistWord& w);
ArcDiagram twist_diagram(const ArcDiagram& d, const TwistWord& w);

struct TwistSearch {
    std::optional<TwistWord> word;  // T_L^a T_R^b(chi2) == chi1 when present
    bool quivers_isomorphic = false;
    bool window_exhausted = false;  // isomorphic but no word in the window
};

TwistSearch twist_equivalent(const ModuleSet& chi1, const ModuleSet& chi2, int window = 3);

struct TwistClassMember {
    int set_index = 0;
    std::optional<TwistWord> word;  // from the class representative
    bool window_exhausted = false;
};

struct TwistClass {
    int representative = 0;  // index into the classified list
    HomExtQuiver quiver;
    std::vector<TwistClassMember> members;
};

std::vector<TwistClass> classify_sets(const std::vector<ModuleSet>& sets, int window = 3);

}  // namespace homext
