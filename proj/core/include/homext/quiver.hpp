#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homext/errors.hpp"

namespace homext {

// Sign vector picking an acyclic orientation of the n-cycle. Index i is
// 1-based; sign(i) = '+' orients arrow i as i -> i+1 (indices mod n).
class OrientationVector {
public:
    explicit OrientationVector(std::vector<char> signs);
    static OrientationVector parse(const std::string& text);

    int size() const { return static_cast<int>(signs_.size()); }
    char sign(int i) const { return signs_[static_cast<size_t>(i) - 1]; }
    bool is_plus(int i) const { return sign(i) == '+'; }
    std::string to_string() const;

    OrientationVector opposite() const;

    friend bool operator==(const OrientationVector& a, const OrientationVector& b) {
        return a.signs_ == b.signs_;
    }

private:
    std::vector<char> signs_;
};

// The cycle quiver on vertices 1..n cut out by an orientation vector.
// Arrow i connects i and i+1 (arrow n connects n and 1).
class AtildeQuiver {
public:
    explicit AtildeQuiver(OrientationVector eps) : eps_(std::move(eps)) {}

    int n() const { return eps_.size(); }
    const OrientationVector& eps() const { return eps_; }

    int src(int arrow) const { return eps_.is_plus(arrow) ? arrow : next(arrow); }
    int tgt(int arrow) const { return eps_.is_plus(arrow) ? next(arrow) : arrow; }

    int next(int vertex) const { return vertex == n() ? 1 : vertex + 1; }
    int prev(int vertex) const { return vertex == 1 ? n() : vertex - 1; }

    friend bool operator==(const AtildeQuiver& a, const AtildeQuiver& b) {
        return a.eps_ == b.eps_;
    }

private:
    OrientationVector eps_;
};

AtildeQuiver build_atilde(const OrientationVector& eps);

// Plain finite quiver, 1-based vertices, used by the matrix oracle.
struct GQuiver {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (src, tgt)
};

GQuiver to_general(const AtildeQuiver& q);

struct QArrow {
    int src = 0;  // index into vertices, 0-based
    int tgt = 0;
    int degree = -1;  // -1 = unlabeled, else 0 (morphism) or 1 (extension)
};

// A linear-combination relation: two parallel paths declared proportional.
// Recorded only; nothing in this library normalizes against these.
struct LinearRelation {
    std::vector<int> path_a;
    std::vector<int> path_b;
};

struct QuiverWithRelations {
    std::vector<std::string> vertices;
    std::vector<QArrow> arrows;
    std::set<std::pair<int, int>> relations;  // composable arrow pairs (first, second)
    std::vector<LinearRelation> linear_relations;

    bool has_degrees() const {
        for (const auto& a : arrows)
            if (a.degree >= 0) return true;
        return false;
    }
    void validate() const;
};

struct QuiverEquivalence {
    std::vector<int> vertex_class;  // per vertex, class id
    std::vector<int> arrow_class;   // per arrow, class id

    static QuiverEquivalence identity(const QuiverWithRelations& q);
};

QuiverWithRelations quotient_quiver(const QuiverWithRelations& q, const QuiverEquivalence& eq);

struct QuiverIso {
    std::vector<int> vertex_map;  // image vertex index in q2 for each vertex of q1
    std::vector<int> arrow_map;
};

// Exhaustive search for an isomorphism of quivers with relations. Degree
// labels are matched only when both sides carry them. match_degrees can
// restrict degree matching to a subset of arrows (used for frozen arrows).
std::optional<QuiverIso> iso_with_relations(const QuiverWithRelations& q1,
                                            const QuiverWithRelations& q2);

// Variant used for superquivers with frozen arrows: frozen arrows must map to
// frozen arrows of equal degree; degrees of unfrozen arrows are ignored.
std::optional<QuiverIso> iso_with_relations_constrained(const QuiverWithRelations& q1,
                                                        const QuiverWithRelations& q2,
                                                        const std::vector<bool>& frozen1,
                                                        const std::vector<bool>& frozen2);

// The four string/gentle conditions, checked verbatim on the stored data.
bool is_gentle(const QuiverWithRelations& q);

// Copy without degree labels, for comparisons of the underlying quiver
// with relations (twisting moves modules between components, so degree
// patterns are not twist invariants).
QuiverWithRelations strip_degrees(const QuiverWithRelations& q);

}  // namespace homext
