#include "homext/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace homext {

OrientationVector::OrientationVector(std::vector<char> signs) : signs_(std::move(signs)) {
    if (signs_.size() < 2) throw TooShort("orientation vector needs length >= 2");
    bool plus = false, minus = false;
    for (char c : signs_) {
        if (c == '+') plus = true;
        else if (c == '-') minus = true;
        else throw ParseError(std::string("bad sign character '") + c + "'");
    }
    if (!plus || !minus) throw AllSignsEqual("orientation vector must contain both signs");
}

OrientationVector OrientationVector::parse(const std::string& text) {
    std::vector<char> signs;
    for (char c : text) {
        if (c == '+' || c == '-') signs.push_back(c);
        else if (c == ' ' || c == '\t') continue;
        else throw ParseError(std::string("bad sign character '") + c + "' in \"" + text + "\"");
    }
    if (signs.size() < 2) throw TooShort("orientation vector needs length >= 2: \"" + text + "\"");
    return OrientationVector(std::move(signs));
}

std::string OrientationVector::to_string() const {
    return std::string(signs_.begin(), signs_.end());
}

OrientationVector OrientationVector::opposite() const {
    std::vector<char> flipped(signs_);
    for (char& c : flipped) c = (c == '+') ? '-' : '+';
    return OrientationVector(std::move(flipped));
}

AtildeQuiver build_atilde(const OrientationVector& eps) { return AtildeQuiver(eps); }

GQuiver to_general(const AtildeQuiver& q) {
    GQuiver g;
    g.num_vertices = q.n();
    for (int a = 1; a <= q.n(); ++a) g.arrows.emplace_back(q.src(a), q.tgt(a));
    return g;
}

void QuiverWithRelations::validate() const {
    const int nv = static_cast<int>(vertices.size());
    for (const auto& a : arrows) {
        if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
            throw Error("arrow endpoint out of range");
        if (a.degree > 1) throw Error("arrow degree must be 0 or 1");
    }
    for (const auto& [first, second] : relations) {
        if (first < 0 || first >= static_cast<int>(arrows.size()) || second < 0 ||
            second >= static_cast<int>(arrows.size()))
            throw Error("relation arrow index out of range");
        if (arrows[first].tgt != arrows[second].src)
            throw Error("relation pair is not composable");
    }
}

QuiverEquivalence QuiverEquivalence::identity(const QuiverWithRelations& q) {
    QuiverEquivalence eq;
    eq.vertex_class.resize(q.vertices.size());
    std::iota(eq.vertex_class.begin(), eq.vertex_class.end(), 0);
    eq.arrow_class.resize(q.arrows.size());
    std::iota(eq.arrow_class.begin(), eq.arrow_class.end(), 0);
    return eq;
}

namespace {

std::vector<int> compress(const std::vector<int>& cls, int* count) {
    std::map<int, int> remap;
    std::vector<int> out(cls.size());
    for (size_t i = 0; i < cls.size(); ++i) {
        auto [it, ins] = remap.emplace(cls[i], static_cast<int>(remap.size()));
        (void)ins;
        out[i] = it->second;
    }
    *count = static_cast<int>(remap.size());
    return out;
}

}  // namespace

QuiverWithRelations quotient_quiver(const QuiverWithRelations& q, const QuiverEquivalence& eq) {
    q.validate();
    if (eq.vertex_class.size() != q.vertices.size() || eq.arrow_class.size() != q.arrows.size())
        throw IncompatibleEquivalence("equivalence classes do not match the quiver");

    int nv = 0, na = 0;
    std::vector<int> vc = compress(eq.vertex_class, &nv);
    std::vector<int> ac = compress(eq.arrow_class, &na);

    // compatibility: related arrows must have related endpoints
    std::vector<int> cls_src(na, -1), cls_tgt(na, -1), cls_deg(na, -2);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int c = ac[a];
        int s = vc[q.arrows[a].src], t = vc[q.arrows[a].tgt];
        if (cls_src[c] == -1) {
            cls_src[c] = s;
            cls_tgt[c] = t;
            cls_deg[c] = q.arrows[a].degree;
        } else if (cls_src[c] != s || cls_tgt[c] != t) {
            throw IncompatibleEquivalence("equivalent arrows with inequivalent endpoints");
        } else if (cls_deg[c] != q.arrows[a].degree) {
            cls_deg[c] = -1;  // degrees disagree within the class: drop the label
        }
    }

    QuiverWithRelations out;
    std::vector<std::string> names(static_cast<size_t>(nv));
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        std::string& name = names[static_cast<size_t>(vc[v])];
        if (name.empty()) name = "[" + q.vertices[v] + "]";
    }
    out.vertices = std::move(names);
    for (int c = 0; c < na; ++c) out.arrows.push_back({cls_src[c], cls_tgt[c], cls_deg[c]});

    // A class path [a][b] is a relation when every composable preimage pair
    // is zero in q. Pairs with no composable preimage are vacuously zero.
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < na; ++b) {
            if (cls_tgt[a] != cls_src[b]) continue;
            bool all_zero = true;
            for (size_t x = 0; x < q.arrows.size(); ++x) {
                if (ac[x] != a) continue;
                for (size_t y = 0; y < q.arrows.size(); ++y) {
                    if (ac[y] != b) continue;
                    if (q.arrows[x].tgt != q.arrows[y].src) continue;
                    if (!q.relations.count({static_cast<int>(x), static_cast<int>(y)}))
                        all_zero = false;
                }
            }
            if (all_zero) out.relations.insert({a, b});
        }
    }
    return out;
}

namespace {

struct IsoSearch {
    const QuiverWithRelations& q1;
    const QuiverWithRelations& q2;
    const std::vector<bool>* frozen1 = nullptr;
    const std::vector<bool>* frozen2 = nullptr;
    bool use_degrees = false;

    std::vector<int> vmap;      // q1 vertex -> q2 vertex
    std::vector<bool> used;     // q2 vertices taken
    std::optional<QuiverIso> result;

    bool arrow_matches(int a1, int a2) const {
        if (frozen1) {
            bool f1 = (*frozen1)[static_cast<size_t>(a1)];
            bool f2 = (*frozen2)[static_cast<size_t>(a2)];
            if (f1 != f2) return false;
            if (f1 && q1.arrows[a1].degree != q2.arrows[a2].degree) return false;
            return true;
        }
        if (use_degrees && q1.arrows[a1].degree != q2.arrows[a2].degree) return false;
        return true;
    }

    // With vertices fixed, try to biject arrows compatibly with relations.
    bool match_arrows() {
        const int na = static_cast<int>(q1.arrows.size());
        std::vector<std::vector<int>> candidates(static_cast<size_t>(na));
        for (int a1 = 0; a1 < na; ++a1) {
            for (int a2 = 0; a2 < na; ++a2) {
                if (vmap[q1.arrows[a1].src] != q2.arrows[a2].src) continue;
                if (vmap[q1.arrows[a1].tgt] != q2.arrows[a2].tgt) continue;
                if (!arrow_matches(a1, a2)) continue;
                candidates[static_cast<size_t>(a1)].push_back(a2);
            }
            if (candidates[static_cast<size_t>(a1)].empty()) return false;
        }
        std::vector<int> amap(static_cast<size_t>(na), -1);
        std::vector<bool> taken(static_cast<size_t>(na), false);
        return place_arrow(0, candidates, amap, taken);
    }

    bool place_arrow(int a1, const std::vector<std::vector<int>>& candidates,
                     std::vector<int>& amap, std::vector<bool>& taken) {
        const int na = static_cast<int>(q1.arrows.size());
        if (a1 == na) {
            std::set<std::pair<int, int>> image;
            for (const auto& [x, y] : q1.relations)
                image.insert({amap[static_cast<size_t>(x)], amap[static_cast<size_t>(y)]});
            if (image != q2.relations) return false;
            result = QuiverIso{vmap, amap};
            return true;
        }
        for (int a2 : candidates[static_cast<size_t>(a1)]) {
            if (taken[static_cast<size_t>(a2)]) continue;
            taken[static_cast<size_t>(a2)] = true;
            amap[static_cast<size_t>(a1)] = a2;
            if (place_arrow(a1 + 1, candidates, amap, taken)) return true;
            taken[static_cast<size_t>(a2)] = false;
        }
        return false;
    }

    bool place_vertex(size_t v) {
        if (v == q1.vertices.size()) return match_arrows();
        for (size_t w = 0; w < q2.vertices.size(); ++w) {
            if (used[w]) continue;
            vmap[v] = static_cast<int>(w);
            used[w] = true;
            if (compatible_so_far(v) && place_vertex(v + 1)) return true;
            used[w] = false;
        }
        vmap[v] = -1;
        return false;
    }

    // Arrow multiplicity pruning between already-placed vertices.
    bool compatible_so_far(size_t placed) const {
        for (size_t u = 0; u <= placed; ++u) {
            int c12 = 0, c21 = 0, d12 = 0, d21 = 0;
            for (const auto& a : q1.arrows) {
                if (a.src == static_cast<int>(u) && a.tgt == static_cast<int>(placed)) ++c12;
                if (a.src == static_cast<int>(placed) && a.tgt == static_cast<int>(u)) ++c21;
            }
            for (const auto& a : q2.arrows) {
                if (a.src == vmap[u] && a.tgt == vmap[placed]) ++d12;
                if (a.src == vmap[placed] && a.tgt == vmap[u]) ++d21;
            }
            if (c12 != d12 || c21 != d21) return false;
        }
        return true;
    }
};

std::optional<QuiverIso> run_iso(const QuiverWithRelations& q1, const QuiverWithRelations& q2,
                                 const std::vector<bool>* frozen1,
                                 const std::vector<bool>* frozen2) {
    if (q1.vertices.size() != q2.vertices.size()) return std::nullopt;
    if (q1.arrows.size() != q2.arrows.size()) return std::nullopt;
    if (q1.relations.size() != q2.relations.size()) return std::nullopt;
    IsoSearch s{q1, q2};
    s.frozen1 = frozen1;
    s.frozen2 = frozen2;
    s.use_degrees = !frozen1 && q1.has_degrees() && q2.has_degrees();
    s.vmap.assign(q1.vertices.size(), -1);
    s.used.assign(q2.vertices.size(), false);
    if (s.place_vertex(0)) return s.result;
    return std::nullopt;
}

}  // namespace

std::optional<QuiverIso> iso_with_relations(const QuiverWithRelations& q1,
                                            const QuiverWithRelations& q2) {
    return run_iso(q1, q2, nullptr, nullptr);
}

std::optional<QuiverIso> iso_with_relations_constrained(const QuiverWithRelations& q1,
                                                        const QuiverWithRelations& q2,
                                                        const std::vector<bool>& frozen1,
                                                        const std::vector<bool>& frozen2) {
    return run_iso(q1, q2, &frozen1, &frozen2);
}

QuiverWithRelations strip_degrees(const QuiverWithRelations& q) {
    QuiverWithRelations out = q;
    for (auto& a : out.arrows) a.degree = -1;
    return out;
}

bool is_gentle(const QuiverWithRelations& q) {
    if (!q.linear_relations.empty()) return false;  // ideal not monomial
    const int na = static_cast<int>(q.arrows.size());
    std::vector<int> indeg(q.vertices.size(), 0), outdeg(q.vertices.size(), 0);
    for (const auto& a : q.arrows) {
        ++outdeg[static_cast<size_t>(a.src)];
        ++indeg[static_cast<size_t>(a.tgt)];
    }
    for (size_t v = 0; v < q.vertices.size(); ++v)
        if (indeg[v] > 2 || outdeg[v] > 2) return false;

    auto in_ideal = [&](int x, int y) { return q.relations.count({x, y}) > 0; };
    for (int b = 0; b < na; ++b) {
        int follow_ok = 0, precede_ok = 0, follow_zero = 0, precede_zero = 0;
        for (int c = 0; c < na; ++c) {
            if (q.arrows[b].tgt == q.arrows[c].src) {
                if (in_ideal(b, c)) ++follow_zero;
                else ++follow_ok;
            }
            if (q.arrows[c].tgt == q.arrows[b].src) {
                if (in_ideal(c, b)) ++precede_zero;
                else ++precede_ok;
            }
        }
        if (follow_ok > 1 || precede_ok > 1) return false;    // string condition
        if (follow_zero > 1 || precede_zero > 1) return false; // gentle condition
    }
    return true;
}

}  // namespace homext
