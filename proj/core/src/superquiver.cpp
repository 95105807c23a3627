#include "homext/superquiver.hpp"

#include <algorithm>
#include <set>

namespace homext {

void Superquiver::validate() const {
    quiver.validate();
    if (frozen.size() != quiver.arrows.size())
        throw Error("frozen flags do not match the arrow list");
    for (const auto& a : quiver.arrows)
        if (a.degree != 0 && a.degree != 1)
            throw Error("superquiver arrows need degree 0 or 1");
    for (size_t x = 0; x < quiver.arrows.size(); ++x)
        for (size_t y = 0; y < quiver.arrows.size(); ++y) {
            if (quiver.arrows[x].tgt != quiver.arrows[y].src) continue;
            if (quiver.arrows[x].degree + quiver.arrows[y].degree >= 2 &&
                !quiver.relations.count({static_cast<int>(x), static_cast<int>(y)}))
                throw InternalInconsistency("path of degree two escapes the relation set");
        }
}

Superquiver from_homext(const HomExtQuiver& h, const std::vector<ARComponent>& components) {
    Superquiver s;
    s.quiver = h.quiver;
    for (const auto& a : s.quiver.arrows)
        s.frozen.push_back(is_regular(components[static_cast<size_t>(a.src)]) &&
                           is_regular(components[static_cast<size_t>(a.tgt)]));
    s.validate();
    return s;
}

Superquiver from_homext(const HomExtQuiver& h, const AtildeQuiver& q) {
    std::vector<ARComponent> comps;
    for (const StringModule& m : h.modules) comps.push_back(classify(q, m));
    return from_homext(h, comps);
}

Superquiver trivial_twist(const Superquiver& s) {
    Superquiver out = s;
    for (size_t a = 0; a < out.quiver.arrows.size(); ++a)
        if (!out.frozen[a]) out.quiver.arrows[a].degree = 0;
    return out;
}

bool twist_equivalent_super(const Superquiver& s1, const Superquiver& s2) {
    s1.validate();
    s2.validate();
    return iso_with_relations_constrained(s1.quiver, s2.quiver, s1.frozen, s2.frozen).has_value();
}

namespace {

struct RealizedRep {
    AlgebraicEngine engine;
    std::vector<AlgebraicEngine::PathValue> arrow_values;
};

RealizedRep realize_representation(const AtildeQuiver& q, const Superquiver& s,
                                   const SuperRepresentation& r) {
    s.validate();
    if (r.vertex_modules.size() != s.quiver.vertices.size() ||
        r.arrow_choice.size() != s.quiver.arrows.size())
        throw InconsistentAssignment("representation data does not match the superquiver");
    std::set<StringModule> distinct(r.vertex_modules.begin(), r.vertex_modules.end());
    if (distinct.size() != r.vertex_modules.size())
        throw InconsistentAssignment("vertex modules must be pairwise distinct");

    RealizedRep out{AlgebraicEngine(to_general(q)), {}};
    for (const StringModule& m : r.vertex_modules)
        out.engine.add_module(realize(q, m), m.to_string());

    for (size_t a = 0; a < s.quiver.arrows.size(); ++a) {
        const auto& arrow = s.quiver.arrows[a];
        const StringModule& src = r.vertex_modules[static_cast<size_t>(arrow.src)];
        const StringModule& tgt = r.vertex_modules[static_cast<size_t>(arrow.tgt)];
        const int pick = r.arrow_choice[a];
        if (arrow.degree == 0) {
            auto maps = graph_maps(q, src, tgt);
            if (pick < 0 || pick >= static_cast<int>(maps.size()))
                throw InconsistentAssignment("graph map choice out of range for arrow " +
                                             std::to_string(a));
            out.arrow_values.push_back(out.engine.value_of_hom(
                arrow.src, arrow.tgt,
                realize_graph_map(q, src, tgt, maps[static_cast<size_t>(pick)])));
        } else {
            auto basis = ext_basis(q, src, tgt);
            if (pick < 0 || pick >= static_cast<int>(basis.size()))
                throw InconsistentAssignment("ext class choice out of range for arrow " +
                                             std::to_string(a));
            RealizedSES ses = realize_ext_class(q, src, tgt, basis[static_cast<size_t>(pick)]);
            out.arrow_values.push_back(out.engine.value_of_ext(
                arrow.src, arrow.tgt,
                out.engine.ext_class_of(arrow.src, arrow.tgt, ses.middle, ses.inc, ses.proj)));
        }
    }
    return out;
}

}  // namespace

namespace {

std::vector<Rational> flat_hom_tuple(const MatTuple& t) {
    std::vector<Rational> flat;
    for (const MatQ& blk : t)
        for (int rr = 0; rr < blk.rows(); ++rr)
            for (int cc = 0; cc < blk.cols(); ++cc) flat.push_back(blk(rr, cc));
    return flat;
}

std::vector<MatTuple> rad_block(const AlgebraicEngine& eng, int i, int j) {
    if (i != j) return eng.homs(i, j);
    return eng.rad_end_basis(i);
}

// span of the degree-zero block of the squared graded radical at (v, w)
RowSpace<Rational> r2_hom_span(const AlgebraicEngine& eng, int v, int w, int ambient) {
    RowSpace<Rational> span(ambient);
    for (int mid = 0; mid < eng.count(); ++mid)
        for (const MatTuple& f : rad_block(eng, v, mid))
            for (const MatTuple& g : rad_block(eng, mid, w))
                span.add(flat_hom_tuple(compose(g, f)));
    return span;
}

// span of the degree-one block: zero classes plus radical pre/post moves
RowSpace<Rational> r2_ext_span(const AlgebraicEngine& eng, int v, int w) {
    const int ambient = eng.ext_ambient_dim(v, w);
    RowSpace<Rational> span(ambient);
    for (int t = 0; t < ambient; ++t) {
        AlgebraicEngine::ExtVec unit(static_cast<size_t>(ambient));
        unit[static_cast<size_t>(t)] = Rational(1);
        if (eng.ext_is_zero(v, w, unit)) span.add(unit);
    }
    for (int mid = 0; mid < eng.count(); ++mid) {
        const int amb_vm = eng.ext_ambient_dim(v, mid);
        for (const MatTuple& h : rad_block(eng, mid, w)) {
            for (int t = 0; t < amb_vm; ++t) {
                AlgebraicEngine::ExtVec unit(static_cast<size_t>(amb_vm));
                unit[static_cast<size_t>(t)] = Rational(1);
                span.add(eng.ext_pushforward(v, mid, unit, w, h));
            }
        }
        const int amb_mw = eng.ext_ambient_dim(mid, w);
        for (const MatTuple& g : rad_block(eng, v, mid)) {
            for (int t = 0; t < amb_mw; ++t) {
                AlgebraicEngine::ExtVec unit(static_cast<size_t>(amb_mw));
                unit[static_cast<size_t>(t)] = Rational(1);
                span.add(eng.ext_pullback(mid, w, unit, v, g));
            }
        }
    }
    return span;
}

}  // namespace

bool check_representation(const AtildeQuiver& q, const Superquiver& s,
                          const SuperRepresentation& r) {
    RealizedRep rep = realize_representation(q, s, r);
    // nonzero arrows
    for (size_t a = 0; a < s.quiver.arrows.size(); ++a) {
        const auto& arrow = s.quiver.arrows[a];
        if (rep.engine.value_is_zero(arrow.src, arrow.tgt, rep.arrow_values[a])) return false;
    }
    // relation paths evaluate to zero
    for (const auto& [x, y] : s.quiver.relations) {
        const auto& ax = s.quiver.arrows[static_cast<size_t>(x)];
        const auto& ay = s.quiver.arrows[static_cast<size_t>(y)];
        auto value = rep.engine.compose_values(ax.src, ax.tgt, ay.tgt,
                                               rep.arrow_values[static_cast<size_t>(x)],
                                               rep.arrow_values[static_cast<size_t>(y)]);
        if (!rep.engine.value_is_zero(ax.src, ay.tgt, value)) return false;
    }
    return true;
}

bool is_irreducible(const AtildeQuiver& q, const Superquiver& s, const SuperRepresentation& r) {
    RealizedRep rep = realize_representation(q, s, r);
    const AlgebraicEngine& eng = rep.engine;
    for (size_t a = 0; a < s.quiver.arrows.size(); ++a) {
        const auto& arrow = s.quiver.arrows[a];
        const int v = arrow.src, w = arrow.tgt;
        if (arrow.degree == 0) {
            std::vector<Rational> flat = flat_hom_tuple(rep.arrow_values[a].hom);
            RowSpace<Rational> span =
                r2_hom_span(eng, v, w, static_cast<int>(flat.size()));
            if (span.contains(flat)) return false;
        } else {
            RowSpace<Rational> span = r2_ext_span(eng, v, w);
            if (span.contains(rep.arrow_values[a].ext)) return false;
        }
    }
    return true;
}

SuperRepresentation defining_representation(const AtildeQuiver& q, const HomExtQuiver& h) {
    SuperRepresentation r;
    r.vertex_modules = h.modules;
    AlgebraicEngine eng(to_general(q));
    for (const StringModule& m : h.modules) eng.add_module(realize(q, m), m.to_string());

    const auto& arrows = h.quiver.arrows;
    const size_t na = arrows.size();

    // candidate values per arrow: the combinatorial basis elements realized
    // through the engine
    std::vector<std::vector<AlgebraicEngine::PathValue>> values(na);
    std::vector<int> basis_size(na, 0);
    for (size_t a = 0; a < na; ++a) {
        const int v = arrows[a].src, w = arrows[a].tgt;
        const StringModule& src = h.modules[static_cast<size_t>(v)];
        const StringModule& tgt = h.modules[static_cast<size_t>(w)];
        if (arrows[a].degree == 0) {
            auto maps = graph_maps(q, src, tgt);
            basis_size[a] = static_cast<int>(maps.size());
            for (const GraphMap& gm : maps)
                values[a].push_back(eng.value_of_hom(v, w, realize_graph_map(q, src, tgt, gm)));
        } else {
            auto basis = ext_basis(q, src, tgt);
            basis_size[a] = static_cast<int>(basis.size());
            for (const ExtClass& e : basis) {
                RealizedSES ses = realize_ext_class(q, src, tgt, e);
                values[a].push_back(eng.value_of_ext(
                    v, w, eng.ext_class_of(v, w, ses.middle, ses.inc, ses.proj)));
            }
        }
    }

    auto flat_of = [&](size_t a, int pick) {
        const auto& val = values[a][static_cast<size_t>(pick)];
        if (!val.is_ext) {
            std::vector<Rational> flat;
            for (const MatQ& blk : val.hom)
                for (int rr = 0; rr < blk.rows(); ++rr)
                    for (int cc = 0; cc < blk.cols(); ++cc) flat.push_back(blk(rr, cc));
            return flat;
        }
        return val.ext;
    };

    // backtracking over basis-element choices: each arrow must stay
    // independent of its parallel companions and satisfy every relation
    // with the arrows already assigned
    std::vector<int> choice(na, -1);
    auto compatible = [&](size_t a, int pick) {
        // irreducible and independent of the parallel picks
        {
            const int v = arrows[a].src, w = arrows[a].tgt;
            RowSpace<Rational> span =
                arrows[a].degree == 0
                    ? r2_hom_span(eng, v, w, static_cast<int>(flat_of(a, pick).size()))
                    : r2_ext_span(eng, v, w);
            for (size_t c = 0; c < a; ++c)
                if (arrows[c].src == v && arrows[c].tgt == w &&
                    arrows[c].degree == arrows[a].degree)
                    span.add(flat_of(c, choice[c]));
            if (!span.add(flat_of(a, pick))) return false;
        }
        for (const auto& [x, y] : h.quiver.relations) {
            size_t sx = static_cast<size_t>(x), sy = static_cast<size_t>(y);
            const AlgebraicEngine::PathValue* first = nullptr;
            const AlgebraicEngine::PathValue* second = nullptr;
            if (sx == a && sy < a) {
                first = &values[a][static_cast<size_t>(pick)];
                second = &values[sy][static_cast<size_t>(choice[sy])];
            } else if (sy == a && sx < a) {
                first = &values[sx][static_cast<size_t>(choice[sx])];
                second = &values[a][static_cast<size_t>(pick)];
            } else if (sx == a && sy == a) {
                first = second = &values[a][static_cast<size_t>(pick)];
            } else {
                continue;
            }
            const auto& ax = arrows[sx == a ? a : sx];
            const auto& ay = arrows[sy == a ? a : sy];
            auto composite = eng.compose_values(ax.src, ax.tgt, ay.tgt, *first, *second);
            if (!eng.value_is_zero(ax.src, ay.tgt, composite)) return false;
        }
        return true;
    };

    auto assign = [&](auto&& self, size_t a) -> bool {
        if (a == na) return true;
        for (int pick = 0; pick < basis_size[a]; ++pick) {
            if (!compatible(a, pick)) continue;
            choice[a] = pick;
            if (self(self, a + 1)) return true;
            choice[a] = -1;
        }
        return false;
    };
    if (!assign(assign, 0))
        throw InternalInconsistency("no basis-element assignment satisfies the relations");
    r.arrow_choice.assign(choice.begin(), choice.end());
    return r;
}

}  // namespace homext
