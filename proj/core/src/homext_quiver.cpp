#include "homext/homext_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homext {

void ModuleSet::validate() const {
    std::set<StringModule> seen;
    for (const StringModule& m : modules) {
        expand(quiver, m);  // range check
        if (!seen.insert(m).second)
            throw Error("module set repeats " + m.to_string());
    }
}

ArcDiagram ModuleSet::diagram() const {
    ArcDiagram d{MarkedAnnulus(quiver.eps()), {}};
    for (const StringModule& m : modules) d.arcs.push_back(phi(quiver, m));
    return d;
}

HomExtQuiver build_geometric(const ModuleSet& chi) {
    chi.validate();
    const ArcDiagram d = chi.diagram();
    if (!is_exceptional_diagram(d)) throw NotExceptional("module set is not exceptional");
    QuiverWithRelations t = tiling_algebra(d);
    HomExtQuiver out;
    out.modules = chi.modules;
    out.quiver = std::move(t);
    for (size_t v = 0; v < out.quiver.vertices.size(); ++v)
        out.quiver.vertices[v] = chi.modules[v].to_string();
    for (auto& arrow : out.quiver.arrows) {
        const StringModule& u = chi.modules[static_cast<size_t>(arrow.src)];
        const StringModule& v = chi.modules[static_cast<size_t>(arrow.tgt)];
        const int hom = dim_hom(chi.quiver, u, v);
        const int ext = dim_ext(chi.quiver, u, v);
        if (hom > 0 && ext > 0)
            throw InternalInconsistency("adjacent pair carries both morphisms and extensions");
        arrow.degree = hom > 0 ? 0 : 1;
        if (arrow.degree == 1 && ext == 0)
            throw InternalInconsistency("extension arrow without extensions");
    }
    return out;
}

namespace {

struct ArrowValue {
    int src, tgt, degree;
    AlgebraicEngine::PathValue value;
};

QuiverWithRelations algebraic_from_engine(const AlgebraicEngine& eng,
                                          const std::vector<std::string>& labels) {
    QuiverWithRelations q;
    q.vertices = labels;
    std::vector<ArrowValue> values;
    const int n = eng.count();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (const MatTuple& f : eng.hom_arrow_reps(i, j)) {
                q.arrows.push_back({i, j, 0});
                values.push_back({i, j, 0, eng.value_of_hom(i, j, f)});
            }
            for (const auto& e : eng.ext_arrow_reps(i, j)) {
                q.arrows.push_back({i, j, 1});
                values.push_back({i, j, 1, eng.value_of_ext(i, j, e)});
            }
        }
    }
    for (size_t x = 0; x < q.arrows.size(); ++x) {
        for (size_t y = 0; y < q.arrows.size(); ++y) {
            if (q.arrows[x].tgt != q.arrows[y].src) continue;
            auto composed = eng.compose_values(values[x].src, values[x].tgt, values[y].tgt,
                                               values[x].value, values[y].value);
            if (eng.value_is_zero(values[x].src, values[y].tgt, composed))
                q.relations.insert({static_cast<int>(x), static_cast<int>(y)});
        }
    }
    return q;
}

}  // namespace

QuiverWithRelations build_algebraic_reps(const GQuiver& g, const std::vector<RepQ>& reps,
                                         const std::vector<std::string>& labels) {
    AlgebraicEngine eng(g);
    for (size_t t = 0; t < reps.size(); ++t) eng.add_module(reps[t], labels[t]);
    return algebraic_from_engine(eng, labels);
}

HomExtQuiver build_algebraic(const ModuleSet& chi) {
    chi.validate();
    std::vector<RepQ> reps;
    std::vector<std::string> labels;
    for (const StringModule& m : chi.modules) {
        reps.push_back(realize(chi.quiver, m));
        labels.push_back(m.to_string());
    }
    HomExtQuiver out;
    out.modules = chi.modules;
    out.quiver = build_algebraic_reps(to_general(chi.quiver), reps, labels);
    return out;
}

namespace {

bool quiver_is_acyclic(const QuiverWithRelations& q) {
    const size_t n = q.vertices.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : q.arrows) {
        if (a.src == a.tgt) return false;
        adj[static_cast<size_t>(a.src)].push_back(a.tgt);
    }
    std::vector<int> state(n, 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        state[static_cast<size_t>(v)] = 1;
        for (int w : adj[static_cast<size_t>(v)]) {
            if (state[static_cast<size_t>(w)] == 1) return true;
            if (state[static_cast<size_t>(w)] == 0 && self(self, w)) return true;
        }
        state[static_cast<size_t>(v)] = 2;
        return false;
    };
    for (size_t v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(dfs, static_cast<int>(v))) return false;
    return true;
}

}  // namespace

bool is_exceptional_set(const ModuleSet& chi) {
    chi.validate();
    if (static_cast<int>(chi.modules.size()) != chi.quiver.n())
        throw WrongCardinality("exceptionality of a set is defined for complete sets here");
    return quiver_is_acyclic(build_algebraic(chi).quiver);
}

std::vector<std::vector<bool>> ext_poset(const QuiverWithRelations& q) {
    const size_t n = q.vertices.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (size_t v = 0; v < n; ++v) reach[v][v] = true;
    for (const auto& a : q.arrows) reach[static_cast<size_t>(a.src)][static_cast<size_t>(a.tgt)] = true;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

BigInt count_linear_extensions(const QuiverWithRelations& q) {
    if (!quiver_is_acyclic(q)) throw CyclicQuiver("linear extensions need an acyclic quiver");
    const int n = static_cast<int>(q.vertices.size());
    if (n > 24) throw Error("linear extension counter capped at 24 vertices");
    std::vector<unsigned> preds(static_cast<size_t>(n), 0);
    for (const auto& a : q.arrows)
        preds[static_cast<size_t>(a.tgt)] |= 1u << a.src;
    std::vector<BigInt> count(static_cast<size_t>(1) << n, BigInt(0));
    count[0] = 1;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        if (count[mask] == 0) continue;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v)) continue;
            if ((preds[static_cast<size_t>(v)] & mask) != preds[static_cast<size_t>(v)]) continue;
            count[mask | (1u << v)] += count[mask];
        }
    }
    return count[(1u << n) - 1];
}

std::vector<std::vector<StringModule>> exceptional_orderings(const ModuleSet& chi) {
    chi.validate();
    const int n = static_cast<int>(chi.modules.size());
    if (n > 10) throw Error("ordering enumeration capped at 10 modules");
    for (const StringModule& m : chi.modules)
        if (!is_exceptional(chi.quiver, m)) return {};

    std::vector<std::vector<int>> forbidden(static_cast<size_t>(n),
                                            std::vector<int>(static_cast<size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            // x cannot come after y when there is a morphism or extension x -> y
            if (dim_hom(chi.quiver, chi.modules[static_cast<size_t>(x)],
                        chi.modules[static_cast<size_t>(y)]) > 0 ||
                dim_ext(chi.quiver, chi.modules[static_cast<size_t>(x)],
                        chi.modules[static_cast<size_t>(y)]) > 0)
                forbidden[static_cast<size_t>(x)][static_cast<size_t>(y)] = 1;
        }

    std::vector<int> perm(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
    std::vector<std::vector<StringModule>> out;
    do {
        bool ok = true;
        for (int later = 1; later < n && ok; ++later)
            for (int earlier = 0; earlier < later && ok; ++earlier)
                if (forbidden[static_cast<size_t>(perm[static_cast<size_t>(later)])]
                             [static_cast<size_t>(perm[static_cast<size_t>(earlier)])])
                    ok = false;
        if (ok) {
            std::vector<StringModule> order;
            for (int v : perm) order.push_back(chi.modules[static_cast<size_t>(v)]);
            out.push_back(std::move(order));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<StringModule> exceptional_modules(const AtildeQuiver& q, int lmax) {
    std::vector<StringModule> out;
    for (int i = 1; i <= q.n(); ++i)
        for (int j = 1; j <= q.n(); ++j)
            for (int l = 0; l <= lmax; ++l)
                if (is_exceptional(q, {i, j, l})) out.push_back({i, j, l});
    return out;
}

std::vector<ModuleSet> enumerate_exceptional_sets(const AtildeQuiver& q, int lmax) {
    const std::vector<StringModule> pool = exceptional_modules(q, lmax);
    const int w = static_cast<int>(pool.size());
    const int n = q.n();

    // pairwise data: 1 = some morphism or extension from x to y
    std::vector<std::vector<char>> fwd(static_cast<size_t>(w),
                                       std::vector<char>(static_cast<size_t>(w), 0));
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < w; ++y)
            if (x != y)
                fwd[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                    dim_hom(q, pool[static_cast<size_t>(x)], pool[static_cast<size_t>(y)]) > 0 ||
                    dim_ext(q, pool[static_cast<size_t>(x)], pool[static_cast<size_t>(y)]) > 0;

    auto acyclic = [&](const std::vector<int>& chosen) {
        const size_t k = chosen.size();
        std::vector<int> state(k, 0);
        auto dfs = [&](auto&& self, size_t v) -> bool {
            state[v] = 1;
            for (size_t u = 0; u < k; ++u) {
                if (u == v ||
                    !fwd[static_cast<size_t>(chosen[v])][static_cast<size_t>(chosen[u])])
                    continue;
                if (state[u] == 1) return true;
                if (state[u] == 0 && self(self, u)) return true;
            }
            state[v] = 2;
            return false;
        };
        for (size_t v = 0; v < k; ++v)
            if (state[v] == 0 && dfs(dfs, v)) return false;
        return true;
    };

    std::vector<ModuleSet> out;
    std::vector<int> chosen;
    auto backtrack = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            if (acyclic(chosen)) {
                ModuleSet s{q, {}};
                for (int c : chosen) s.modules.push_back(pool[static_cast<size_t>(c)]);
                out.push_back(std::move(s));
            }
            return;
        }
        for (int c = from; c < w; ++c) {
            bool ok = true;
            for (int prev : chosen) {
                // a two-cycle between members can never be ordered away
                if (fwd[static_cast<size_t>(prev)][static_cast<size_t>(c)] &&
                    fwd[static_cast<size_t>(c)][static_cast<size_t>(prev)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(c);
            self(self, c + 1);
            chosen.pop_back();
        }
    };
    backtrack(backtrack, 0);
    return out;
}

}  // namespace homext
