#include "homext/twist.hpp"

#include <algorithm>

namespace homext {

StringModule twist_L(const AtildeQuiver& q, const StringModule& m, int power) {
    const MarkedAnnulus a(q.eps());
    return phi_inv(q, twist_arc_left(a, phi(q, m), power));
}

StringModule twist_R(const AtildeQuiver& q, const StringModule& m, int power) {
    const MarkedAnnulus a(q.eps());
    return phi_inv(q, twist_arc_right(a, phi(q, m), power));
}

ModuleSet twist_set(const ModuleSet& chi, const TwistWord& w) {
    ModuleSet out{chi.quiver, {}};
    for (const StringModule& m : chi.modules)
        out.modules.push_back(twist_R(chi.quiver, twist_L(chi.quiver, m, w.a), w.b));
    return out;
}

ArcDiagram twist_diagram(const ArcDiagram& d, const TwistWord& w) {
    ArcDiagram out{d.annulus, {}};
    for (const Arc& arc : d.arcs)
        out.arcs.push_back(twist_arc_right(d.annulus, twist_arc_left(d.annulus, arc, w.a), w.b));
    return out;
}

namespace {

std::vector<StringModule> sorted_modules(const ModuleSet& chi) {
    std::vector<StringModule> mods = chi.modules;
    std::sort(mods.begin(), mods.end());
    return mods;
}

}  // namespace

TwistSearch twist_equivalent(const ModuleSet& chi1, const ModuleSet& chi2, int window) {
    if (!(chi1.quiver == chi2.quiver)) throw Error("twist search needs a common base quiver");
    TwistSearch result;
    const HomExtQuiver h1 = build_geometric(chi1);
    const HomExtQuiver h2 = build_geometric(chi2);
    // twisting moves modules between components and with them the degrees,
    // so the quiver comparison happens on the underlying quiver with relations
    result.quivers_isomorphic =
        iso_with_relations(strip_degrees(h1.quiver), strip_degrees(h2.quiver)).has_value();

    const std::vector<StringModule> target = sorted_modules(chi1);
    std::vector<TwistWord> words;
    for (int a = -window; a <= window; ++a)
        for (int b = -window; b <= window; ++b) words.push_back({a, b});
    std::sort(words.begin(), words.end(), [](const TwistWord& x, const TwistWord& y) {
        const int nx = std::abs(x.a) + std::abs(x.b), ny = std::abs(y.a) + std::abs(y.b);
        if (nx != ny) return nx < ny;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    for (const TwistWord& w : words) {
        if (sorted_modules(twist_set(chi2, w)) == target) {
            result.word = w;
            break;
        }
    }
    if (result.word && !result.quivers_isomorphic)
        throw InternalInconsistency(
            "twist word found between sets with non-isomorphic quivers");
    result.window_exhausted = !result.word && result.quivers_isomorphic;
    return result;
}

std::vector<TwistClass> classify_sets(const std::vector<ModuleSet>& sets, int window) {
    std::vector<TwistClass> classes;
    for (size_t t = 0; t < sets.size(); ++t) {
        HomExtQuiver h = build_geometric(sets[t]);
        bool placed = false;
        for (TwistClass& cls : classes) {
            if (!iso_with_relations(strip_degrees(cls.quiver.quiver), strip_degrees(h.quiver))
                     .has_value())
                continue;
            TwistSearch search =
                twist_equivalent(sets[static_cast<size_t>(cls.representative)], sets[t], window);
            classes[static_cast<size_t>(&cls - classes.data())].members.push_back(
                {static_cast<int>(t), search.word, search.window_exhausted});
            placed = true;
            break;
        }
        if (!placed) {
            TwistClass cls;
            cls.representative = static_cast<int>(t);
            cls.quiver = std::move(h);
            cls.members.push_back({static_cast<int>(t), TwistWord{0, 0}, false});
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

}  // namespace homext
