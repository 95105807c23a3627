#include "homext/string_hom.hpp"

#include <string>
#include <unordered_map>

namespace homext {

namespace {

bool is_direct_at(const Walk& w, int pos) { return !w.letters[static_cast<size_t>(pos)].inverse; }

// key encoding a walk segment for middle matching; lazy segments encode the
// vertex, others the oriented letter sequence
std::string segment_key(const AtildeQuiver& q, const Walk& w, int a, int b, bool inverted) {
    std::string key;
    if (a == b) {
        const std::vector<int> vs = walk_vertices(q, w);
        key = "v" + std::to_string(vs[static_cast<size_t>(a)]);
        return key;
    }
    key.reserve(static_cast<size_t>(b - a) * 3 + 1);
    if (!inverted) {
        for (int k = a; k < b; ++k) {
            const Letter& l = w.letters[static_cast<size_t>(k)];
            key += l.inverse ? '-' : '+';
            key += std::to_string(l.arrow);
        }
    } else {
        for (int k = b - 1; k >= a; --k) {
            const Letter& l = w.letters[static_cast<size_t>(k)];
            key += l.inverse ? '+' : '-';
            key += std::to_string(l.arrow);
        }
    }
    return key;
}

}  // namespace

bool is_quotient_factorization(const AtildeQuiver& q, const Walk& w, const FactorTriple& f) {
    (void)q;
    const int len = w.length();
    if (!(0 <= f.a && f.a <= f.b && f.b <= len)) return false;
    if (f.b < len && !is_direct_at(w, f.b)) return false;   // D starts with a direct arrow
    if (f.a > 0 && is_direct_at(w, f.a - 1)) return false;  // F ends with an inverse arrow
    return true;
}

bool is_submodule_factorization(const AtildeQuiver& q, const Walk& w, const FactorTriple& f) {
    (void)q;
    const int len = w.length();
    if (!(0 <= f.a && f.a <= f.b && f.b <= len)) return false;
    if (f.b < len && is_direct_at(w, f.b)) return false;     // D starts with an inverse arrow
    if (f.a > 0 && !is_direct_at(w, f.a - 1)) return false;  // F ends with a direct arrow
    return true;
}

std::vector<FactorTriple> quotient_factorizations(const AtildeQuiver& q, const Walk& w) {
    std::vector<FactorTriple> out;
    for (int a = 0; a <= w.length(); ++a)
        for (int b = a; b <= w.length(); ++b)
            if (is_quotient_factorization(q, w, {a, b})) out.push_back({a, b});
    return out;
}

std::vector<FactorTriple> submodule_factorizations(const AtildeQuiver& q, const Walk& w) {
    std::vector<FactorTriple> out;
    for (int a = 0; a <= w.length(); ++a)
        for (int b = a; b <= w.length(); ++b)
            if (is_submodule_factorization(q, w, {a, b})) out.push_back({a, b});
    return out;
}

std::vector<GraphMap> graph_maps(const AtildeQuiver& q, const StringModule& c1,
                                 const StringModule& c2) {
    const Walk w1 = expand(q, c1);
    const Walk w2 = expand(q, c2);

    std::unordered_map<std::string, std::vector<FactorTriple>> subs_by_middle;
    for (const FactorTriple& f : submodule_factorizations(q, w2))
        subs_by_middle[segment_key(q, w2, f.a, f.b, false)].push_back(f);

    std::vector<GraphMap> maps;
    for (const FactorTriple& f1 : quotient_factorizations(q, w1)) {
        const bool lazy_middle = (f1.a == f1.b);
        for (int flip = 0; flip < (lazy_middle ? 1 : 2); ++flip) {
            auto it = subs_by_middle.find(segment_key(q, w1, f1.a, f1.b, flip == 1));
            if (it == subs_by_middle.end()) continue;
            for (const FactorTriple& f2 : it->second) {
                GraphMap gm;
                gm.quot = f1;
                gm.sub = f2;
                gm.middle_inverted = (flip == 1);
                const bool d_positive = (f1.b < w1.length()) || (f2.b < w2.length());
                const bool f_positive = (f1.a > 0) || (f2.a > 0);
                gm.two_sided = d_positive && f_positive;
                maps.push_back(gm);
            }
        }
    }
    return maps;
}

namespace {

// Walks representing a module: the canonical walk and its formal inverse
// (just one copy for lazy walks).
std::vector<Walk> representatives(const AtildeQuiver& q, const StringModule& m) {
    std::vector<Walk> reps;
    reps.push_back(expand(q, m));
    if (!reps[0].lazy()) reps.push_back(invert_walk(q, reps[0]));
    return reps;
}

bool concat_ok(const AtildeQuiver& q, const Walk& w1, const Letter& mid, const Walk& w2) {
    if (walk_end(q, w1) != letter_src(q, mid)) return false;
    if (letter_tgt(q, mid) != walk_start(q, w2)) return false;
    if (!w1.lazy() && w1.letters.back() == letter_inverse(mid)) return false;
    if (!w2.lazy() && w2.letters.front() == letter_inverse(mid)) return false;
    return true;
}

}  // namespace

std::vector<Connection> connections(const AtildeQuiver& q, const StringModule& c1,
                                    const StringModule& c2) {
    std::vector<Connection> out;
    const auto reps1 = representatives(q, c1);
    const auto reps2 = representatives(q, c2);
    for (size_t r1 = 0; r1 < reps1.size(); ++r1) {
        for (size_t r2 = 0; r2 < reps2.size(); ++r2) {
            for (int arrow = 1; arrow <= q.n(); ++arrow) {
                if (concat_ok(q, reps1[r1], Letter{arrow, false}, reps2[r2]))
                    out.push_back(Connection{arrow, r1 == 1, r2 == 1});
            }
        }
    }
    return out;
}

Walk connection_middle_walk(const AtildeQuiver& q, const StringModule& c1,
                            const StringModule& c2, const Connection& conn) {
    Walk w1 = expand(q, c1);
    if (conn.invert_c1) w1 = invert_walk(q, w1);
    Walk w2 = expand(q, c2);
    if (conn.invert_c2) w2 = invert_walk(q, w2);
    Walk glued = w1;
    glued.letters.push_back(Letter{conn.arrow, false});
    glued.letters.insert(glued.letters.end(), w2.letters.begin(), w2.letters.end());
    validate_walk(q, glued);
    return glued;
}

namespace {

Walk subwalk(const AtildeQuiver& q, const Walk& w, int a, int b) {
    Walk s;
    s.base_vertex = walk_vertices(q, w)[static_cast<size_t>(a)];
    s.letters.assign(w.letters.begin() + a, w.letters.begin() + b);
    return s;
}

Walk glue(const AtildeQuiver& q, const Walk& x, const Walk& y) {
    Walk g = x;
    if (g.lazy()) g.base_vertex = y.base_vertex;
    g.letters.insert(g.letters.end(), y.letters.begin(), y.letters.end());
    validate_walk(q, g);
    return g;
}

// Middle terms F2 E D1 and F1 E D2 of the extension attached to a two-sided
// graph map C2 -> C1. The submodule-side factorization is re-oriented first
// when the middles were matched through an inversion.
std::vector<StringModule> two_sided_middles(const AtildeQuiver& q, const StringModule& c1,
                                            const StringModule& c2, const GraphMap& gm) {
    const Walk w2 = expand(q, c2);  // quotient side of the map C2 -> C1
    Walk w1 = expand(q, c1);        // submodule side
    FactorTriple sub = gm.sub;
    if (gm.middle_inverted) {
        const int len = w1.length();
        w1 = invert_walk(q, w1);
        sub = FactorTriple{len - gm.sub.b, len - gm.sub.a};
    }
    const Walk f2 = subwalk(q, w2, 0, gm.quot.a);
    const Walk e = subwalk(q, w2, gm.quot.a, gm.quot.b);
    const Walk d2 = subwalk(q, w2, gm.quot.b, w2.length());
    const Walk f1 = subwalk(q, w1, 0, sub.a);
    const Walk d1 = subwalk(q, w1, sub.b, w1.length());

    std::vector<StringModule> middles;
    middles.push_back(std::get<StringModule>(normalize(q, glue(q, glue(q, f2, e), d1))));
    middles.push_back(std::get<StringModule>(normalize(q, glue(q, glue(q, f1, e), d2))));
    return middles;
}

}  // namespace

std::vector<ExtClass> ext_basis(const AtildeQuiver& q, const StringModule& c1,
                                const StringModule& c2) {
    std::vector<ExtClass> out;
    for (const Connection& conn : connections(q, c1, c2)) {
        ExtClass e;
        e.from_connection = true;
        e.conn = conn;
        e.middle_terms.push_back(
            std::get<StringModule>(normalize(q, connection_middle_walk(q, c1, c2, conn))));
        out.push_back(std::move(e));
    }
    for (const GraphMap& gm : graph_maps(q, c2, c1)) {
        if (!gm.two_sided) continue;
        ExtClass e;
        e.from_connection = false;
        e.map = gm;
        e.middle_terms = two_sided_middles(q, c1, c2, gm);
        out.push_back(std::move(e));
    }
    return out;
}

int dim_hom(const AtildeQuiver& q, const StringModule& c1, const StringModule& c2) {
    return static_cast<int>(graph_maps(q, c1, c2).size());
}

int dim_ext(const AtildeQuiver& q, const StringModule& c1, const StringModule& c2) {
    int count = static_cast<int>(connections(q, c1, c2).size());
    for (const GraphMap& gm : graph_maps(q, c2, c1))
        if (gm.two_sided) ++count;
    return count;
}

bool is_exceptional(const AtildeQuiver& q, const StringModule& m) {
    return dim_ext(q, m, m) == 0;
}

}  // namespace homext
