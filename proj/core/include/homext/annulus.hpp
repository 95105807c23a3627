#pragma once

#include <optional>
#include <vector>

#include "homext/string_module.hpp"

namespace homext {

// Marked annulus of a sign vector: point i sits on the outer boundary when
// sign i is '+', on the inner boundary otherwise; clockwise order follows
// the numeric order of the labels.
class MarkedAnnulus {
public:
    explicit MarkedAnnulus(OrientationVector eps) : eps_(std::move(eps)) {}

    int n() const { return eps_.size(); }
    const OrientationVector& eps() const { return eps_; }
    bool outer(int point) const { return eps_.is_plus(point); }

    // Stations: integer lifts of the marked points in the universal cover,
    // point p lifting to p + k*n. Both boundaries share the coordinate.
    int label_of_station(long x) const {
        long n = n_();
        long r = ((x - 1) % n + n) % n;
        return static_cast<int>(r) + 1;
    }
    bool station_outer(long x) const { return outer(label_of_station(x)); }

    long next_station_same_side(long x) const {
        for (long y = x + 1;; ++y)
            if (station_outer(y) == station_outer(x)) return y;
    }
    long prev_station_same_side(long x) const {
        for (long y = x - 1;; --y)
            if (station_outer(y) == station_outer(x)) return y;
    }

    friend bool operator==(const MarkedAnnulus& a, const MarkedAnnulus& b) {
        return a.eps_ == b.eps_;
    }

private:
    long n_() const { return eps_.size(); }
    OrientationVector eps_;
};

// Isotopy class of a simple curve from i to j sweeping the labels i+1..j,
// with lambda extra full turns. Bridging arcs from the inner boundary carry
// the winding with a negative sign.
struct Arc {
    int i = 1;
    int j = 1;
    int lambda = 0;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.i == b.i && a.j == b.j && a.lambda == b.lambda;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.lambda < b.lambda;
    }
    std::string to_string() const;
};

struct ClosedCurve {
    int winding = 1;

    friend bool operator==(const ClosedCurve& a, const ClosedCurve& b) {
        return a.winding == b.winding;
    }
};

struct ArcDiagram {
    MarkedAnnulus annulus;
    std::vector<Arc> arcs;
};

// Endpoint stations of the minimal-position lift: xs at label i, xe at the
// first station of label j past xs plus n per extra winding.
struct LiftedArc {
    long xs = 0;
    long xe = 0;
    bool start_outer = false;
    bool end_outer = false;
};

LiftedArc lift_arc(const MarkedAnnulus& a, const Arc& arc);
Arc arc_from_lift(const MarkedAnnulus& a, long x1, bool outer1, long x2, bool outer2);
void validate_arc(const MarkedAnnulus& a, const Arc& arc);

// Module <-> arc dictionary.
Arc phi(const AtildeQuiver& q, const StringModule& m);
StringModule phi_inv(const AtildeQuiver& q, const Arc& a);
ClosedCurve psi(const BandPower& b);

bool intersect_nontrivially(const MarkedAnnulus& a, const Arc& a1, const Arc& a2);
bool self_intersects(const MarkedAnnulus& a, const Arc& arc);

// a1 is clockwise from a2 when they share an endpoint at which the germ of
// a1 follows the germ of a2 in the fan sweep. Throws on crossing arcs.
bool clockwise_from(const MarkedAnnulus& a, const Arc& a1, const Arc& a2);

// The listed arcs form a cycle in the listed cyclic order.
bool forms_cycle(const MarkedAnnulus& a, const std::vector<Arc>& arcs);

// Any subset of the diagram forms a cycle of clockwise relations.
bool has_cycle(const ArcDiagram& d);

bool is_exceptional_diagram(const ArcDiagram& d);

// Arcs incident to the marked point, in the clockwise crossing order.
std::vector<Arc> complete_fan(const ArcDiagram& d, int point);

QuiverWithRelations tiling_algebra(const ArcDiagram& d);

// The unique end-to-start cycle of arcs enclosing the inner boundary.
std::vector<Arc> heart(const ArcDiagram& d);
// Heart plus the arcs through which its morphisms and extensions factor:
// the unique cycle of the tiling quiver's underlying graph.
std::vector<Arc> extended_heart(const ArcDiagram& d);

// Elementary boundary twists acting on arcs. Left: outer stations move one
// step counterclockwise. Right: inner stations move one step clockwise.
Arc twist_arc_left(const MarkedAnnulus& a, const Arc& arc, int power);
Arc twist_arc_right(const MarkedAnnulus& a, const Arc& arc, int power);

}  // namespace homext
