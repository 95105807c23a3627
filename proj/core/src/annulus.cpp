#include "homext/annulus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace homext {

std::string Arc::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "a(%d,%d)[%d]", i, j, lambda);
    return buf;
}

namespace {

int cyc_gap1(int i, int j, int n) { return ((j - i - 1) % n + n) % n + 1; }  // in 1..n

}  // namespace

void validate_arc(const MarkedAnnulus& a, const Arc& arc) {
    if (arc.i < 1 || arc.i > a.n() || arc.j < 1 || arc.j > a.n())
        throw Error("arc endpoint out of range: " + arc.to_string());
    const bool bridging = a.outer(arc.i) != a.outer(arc.j);
    const bool from_inner = bridging && !a.outer(arc.i);
    if (arc.lambda < 0 && !from_inner)
        throw Error("negative winding is reserved for bridging arcs from the inner boundary: " +
                    arc.to_string());
    if (arc.lambda > 0 && from_inner)
        throw Error("bridging arcs from the inner boundary carry negative winding: " +
                    arc.to_string());
}

LiftedArc lift_arc(const MarkedAnnulus& a, const Arc& arc) {
    validate_arc(a, arc);
    LiftedArc l;
    l.xs = arc.i;
    l.xe = arc.i + cyc_gap1(arc.i, arc.j, a.n()) +
           static_cast<long>(a.n()) * std::abs(arc.lambda);
    l.start_outer = a.outer(arc.i);
    l.end_outer = a.outer(arc.j);
    return l;
}

Arc arc_from_lift(const MarkedAnnulus& a, long x1, bool outer1, long x2, bool outer2) {
    if (x1 > x2) {
        std::swap(x1, x2);
        std::swap(outer1, outer2);
    }
    if (x1 == x2) throw InternalInconsistency("degenerate lift endpoints");
    Arc arc;
    arc.i = a.label_of_station(x1);
    arc.j = a.label_of_station(x2);
    if (a.outer(arc.i) != outer1 || a.outer(arc.j) != outer2)
        throw InternalInconsistency("lift endpoint side does not match its label");
    const long delta = x2 - x1;
    const long gap = cyc_gap1(arc.i, arc.j, a.n());
    if ((delta - gap) % a.n() != 0 || delta < gap)
        throw InternalInconsistency("lift span is not a winding of the base gap");
    const long winds = (delta - gap) / a.n();
    const bool bridging = outer1 != outer2;
    const bool from_inner = bridging && !outer1;
    arc.lambda = static_cast<int>(from_inner ? -winds : winds);
    return arc;
}

Arc phi(const AtildeQuiver& q, const StringModule& m) {
    const MarkedAnnulus a(q.eps());
    Arc arc;
    arc.i = m.i;
    arc.j = m.j;
    arc.lambda = classify(q, m) == ARComponent::Preinjective ? -m.l : m.l;
    validate_arc(a, arc);
    return arc;
}

StringModule phi_inv(const AtildeQuiver& q, const Arc& arc) {
    const MarkedAnnulus a(q.eps());
    validate_arc(a, arc);
    StringModule m{arc.i, arc.j, std::abs(arc.lambda)};
    const Arc back = phi(q, m);
    if (!(back == arc))
        throw Error("arc " + arc.to_string() + " does not name a module; expected " +
                    back.to_string());
    return m;
}

ClosedCurve psi(const BandPower& b) { return ClosedCurve{b.l}; }

namespace {

// Position of a boundary point on the strip circle: top run left-to-right,
// then bottom run right-to-left. Chords never touch the two seams.
std::pair<int, long> circle_key(long x, bool outer) {
    return outer ? std::make_pair(0, x) : std::make_pair(1, -x);
}

bool strictly_between(const std::pair<int, long>& lo, const std::pair<int, long>& hi,
                      const std::pair<int, long>& p) {
    return lo < p && p < hi;
}

// Minimal-position chords cross iff the endpoint keys strictly interleave.
bool chords_interleave(const LiftedArc& p, const LiftedArc& q) {
    auto p1 = circle_key(p.xs, p.start_outer), p2 = circle_key(p.xe, p.end_outer);
    auto q1 = circle_key(q.xs, q.start_outer), q2 = circle_key(q.xe, q.end_outer);
    if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) return false;  // shared endpoint
    if (p2 < p1) std::swap(p1, p2);
    return strictly_between(p1, p2, q1) != strictly_between(p1, p2, q2);
}

LiftedArc shifted(const LiftedArc& l, long delta) {
    LiftedArc out = l;
    out.xs += delta;
    out.xe += delta;
    return out;
}

long shift_window(const MarkedAnnulus& a, const LiftedArc& l1, const LiftedArc& l2) {
    return (l1.xe - l1.xs + l2.xe - l2.xs) / a.n() + 2;
}

}  // namespace

bool self_intersects(const MarkedAnnulus& a, const Arc& arc) {
    const LiftedArc l = lift_arc(a, arc);
    const long window = shift_window(a, l, l);
    for (long k = 1; k <= window; ++k)
        if (chords_interleave(l, shifted(l, k * a.n()))) return true;
    return false;
}

bool intersect_nontrivially(const MarkedAnnulus& a, const Arc& a1, const Arc& a2) {
    if (a1 == a2) return self_intersects(a, a1);
    const LiftedArc l1 = lift_arc(a, a1);
    const LiftedArc l2 = lift_arc(a, a2);
    const long window = shift_window(a, l1, l2);
    for (long k = -window; k <= window; ++k)
        if (chords_interleave(l1, shifted(l2, k * a.n()))) return true;
    return false;
}

namespace {

struct Germ {
    int arc_index;
    long far_x;
    bool far_outer;
};

// Germs of the diagram's arcs at one marked point, each normalized so the
// shared endpoint lifts to the station at the label itself.
std::vector<Germ> germs_at(const ArcDiagram& d, int point) {
    std::vector<Germ> out;
    for (size_t t = 0; t < d.arcs.size(); ++t) {
        const LiftedArc l = lift_arc(d.annulus, d.arcs[t]);
        if (d.annulus.label_of_station(l.xs) == point)
            out.push_back({static_cast<int>(t), static_cast<long>(point) + (l.xe - l.xs),
                           l.end_outer});
        if (d.annulus.label_of_station(l.xe) == point)
            out.push_back({static_cast<int>(t), static_cast<long>(point) - (l.xe - l.xs),
                           l.start_outer});
    }
    return out;
}

// Sweep key for the fan at a station: the circle order of far endpoints
// starting at the station and following the circle's positive direction.
std::tuple<int, long> fan_key(const MarkedAnnulus& a, int point, const Germ& g) {
    const bool base_outer = a.outer(point);
    const long x0 = point;
    if (base_outer) {
        if (g.far_outer && g.far_x > x0) return {0, g.far_x};
        if (!g.far_outer) return {1, -g.far_x};
        return {2, g.far_x};
    }
    if (!g.far_outer && g.far_x < x0) return {0, -g.far_x};
    if (g.far_outer) return {1, g.far_x};
    return {2, -g.far_x};
}

std::vector<Germ> sorted_germs_at(const ArcDiagram& d, int point) {
    std::vector<Germ> gs = germs_at(d, point);
    std::stable_sort(gs.begin(), gs.end(), [&](const Germ& x, const Germ& y) {
        return fan_key(d.annulus, point, x) < fan_key(d.annulus, point, y);
    });
    return gs;
}

}  // namespace

std::vector<Arc> complete_fan(const ArcDiagram& d, int point) {
    std::vector<Arc> fan;
    for (const Germ& g : sorted_germs_at(d, point))
        fan.push_back(d.arcs[static_cast<size_t>(g.arc_index)]);
    return fan;
}

bool clockwise_from(const MarkedAnnulus& a, const Arc& a1, const Arc& a2) {
    if (a1 == a2) return false;
    if (intersect_nontrivially(a, a1, a2))
        throw UndefinedOperation("clockwise_from is undefined for crossing arcs");
    ArcDiagram pair{a, {a1, a2}};
    for (int p = 1; p <= a.n(); ++p) {
        const auto gs = sorted_germs_at(pair, p);
        for (size_t x = 0; x < gs.size(); ++x)
            for (size_t y = 0; y < x; ++y)
                if (gs[x].arc_index == 0 && gs[y].arc_index == 1) return true;
    }
    return false;
}

bool forms_cycle(const MarkedAnnulus& a, const std::vector<Arc>& arcs) {
    if (arcs.size() < 2) return false;
    for (size_t t = 0; t < arcs.size(); ++t) {
        const Arc& cur = arcs[t];
        const Arc& nxt = arcs[(t + 1) % arcs.size()];
        if (!clockwise_from(a, cur, nxt)) return false;
    }
    return true;
}

bool has_cycle(const ArcDiagram& d) {
    const size_t n = d.arcs.size();
    std::vector<std::vector<int>> adj(n);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            if (intersect_nontrivially(d.annulus, d.arcs[x], d.arcs[y])) continue;
            if (clockwise_from(d.annulus, d.arcs[x], d.arcs[y]))
                adj[x].push_back(static_cast<int>(y));
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
        if (state[v] == 0 && dfs(dfs, static_cast<int>(v))) return true;
    return false;
}

bool is_exceptional_diagram(const ArcDiagram& d) {
    if (static_cast<int>(d.arcs.size()) != d.annulus.n())
        throw WrongCardinality("diagram needs exactly one arc per marked point");
    std::set<Arc> seen;
    for (const Arc& arc : d.arcs) {
        validate_arc(d.annulus, arc);
        if (arc.i == arc.j) return false;  // closed arcs and loops excluded
        if (self_intersects(d.annulus, arc)) return false;
        if (!seen.insert(arc).second) return false;
    }
    for (size_t x = 0; x < d.arcs.size(); ++x)
        for (size_t y = x + 1; y < d.arcs.size(); ++y)
            if (intersect_nontrivially(d.annulus, d.arcs[x], d.arcs[y])) return false;
    return !has_cycle(d);
}

QuiverWithRelations tiling_algebra(const ArcDiagram& d) {
    if (!is_exceptional_diagram(d)) throw NotExceptional("tiling algebra needs an exceptional diagram");
    QuiverWithRelations q;
    for (const Arc& arc : d.arcs) q.vertices.push_back(arc.to_string());
    std::vector<int> witness;  // shared marked point per arrow
    for (int p = 1; p <= d.annulus.n(); ++p) {
        const auto gs = sorted_germs_at(d, p);
        for (size_t t = 1; t < gs.size(); ++t) {
            q.arrows.push_back({gs[t].arc_index, gs[t - 1].arc_index, -1});
            witness.push_back(p);
        }
    }
    for (size_t x = 0; x < q.arrows.size(); ++x)
        for (size_t y = 0; y < q.arrows.size(); ++y)
            if (q.arrows[x].tgt == q.arrows[y].src && witness[x] != witness[y])
                q.relations.insert({static_cast<int>(x), static_cast<int>(y)});
    return q;
}

namespace {

// All simple directed cycles, as canonical vertex sets.
std::set<std::set<int>> simple_cycles(const std::vector<std::vector<int>>& adj) {
    std::set<std::set<int>> cycles;
    const int n = static_cast<int>(adj.size());
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<size_t>(n), false);
    auto dfs = [&](auto&& self, int start, int v) -> void {
        path.push_back(v);
        on_path[static_cast<size_t>(v)] = true;
        for (int w : adj[static_cast<size_t>(v)]) {
            if (w == start) {
                cycles.emplace(path.begin(), path.end());
            } else if (w > start && !on_path[static_cast<size_t>(w)]) {
                self(self, start, w);
            }
        }
        on_path[static_cast<size_t>(v)] = false;
        path.pop_back();
    };
    for (int v = 0; v < n; ++v) dfs(dfs, v, v);
    return cycles;
}

}  // namespace

std::vector<Arc> heart(const ArcDiagram& d) {
    if (!is_exceptional_diagram(d)) throw NotExceptional("heart needs an exceptional diagram");
    const size_t n = d.arcs.size();
    std::vector<std::vector<int>> adj(n);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (x != y && d.arcs[x].j == d.arcs[y].i) adj[x].push_back(static_cast<int>(y));
    auto cycles = simple_cycles(adj);
    if (cycles.empty()) throw NotComplete("diagram has no end-to-start cycle");
    if (cycles.size() > 1)
        throw InternalInconsistency("diagram has several end-to-start cycles");
    std::vector<Arc> out;
    for (int v : *cycles.begin()) out.push_back(d.arcs[static_cast<size_t>(v)]);
    return out;
}

std::vector<Arc> extended_heart(const ArcDiagram& d) {
    QuiverWithRelations t = tiling_algebra(d);
    // 2-core of the underlying graph: the unique cycle of the tiling quiver
    std::vector<int> degree(d.arcs.size(), 0);
    std::vector<bool> alive(d.arcs.size(), true);
    for (const auto& arrow : t.arrows) {
        ++degree[static_cast<size_t>(arrow.src)];
        ++degree[static_cast<size_t>(arrow.tgt)];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < d.arcs.size(); ++v) {
            if (!alive[v] || degree[v] > 1) continue;
            alive[v] = false;
            changed = true;
            for (const auto& arrow : t.arrows) {
                const size_t s = static_cast<size_t>(arrow.src), g = static_cast<size_t>(arrow.tgt);
                if (s == v && alive[g]) --degree[g];
                if (g == v && alive[s]) --degree[s];
            }
            degree[v] = 0;
        }
    }
    std::vector<Arc> out;
    for (size_t v = 0; v < d.arcs.size(); ++v)
        if (alive[v]) out.push_back(d.arcs[v]);
    if (out.empty()) throw NotComplete("diagram has no enclosing cycle");
    return out;
}

namespace {

long move_same_side(const MarkedAnnulus& a, long x, int steps) {
    while (steps > 0) {
        x = a.next_station_same_side(x);
        --steps;
    }
    while (steps < 0) {
        x = a.prev_station_same_side(x);
        ++steps;
    }
    return x;
}

}  // namespace

Arc twist_arc_left(const MarkedAnnulus& a, const Arc& arc, int power) {
    LiftedArc l = lift_arc(a, arc);
    // counterclockwise elementary twist of the outer boundary: outer stations
    // step leftward once per power
    long xs = l.start_outer ? move_same_side(a, l.xs, -power) : l.xs;
    long xe = l.end_outer ? move_same_side(a, l.xe, -power) : l.xe;
    return arc_from_lift(a, xs, l.start_outer, xe, l.end_outer);
}

Arc twist_arc_right(const MarkedAnnulus& a, const Arc& arc, int power) {
    LiftedArc l = lift_arc(a, arc);
    // clockwise elementary twist of the inner boundary: inner stations step
    // rightward once per power
    long xs = l.start_outer ? l.xs : move_same_side(a, l.xs, power);
    long xe = l.end_outer ? l.xe : move_same_side(a, l.xe, power);
    return arc_from_lift(a, xs, l.start_outer, xe, l.end_outer);
}

}  // namespace homext
