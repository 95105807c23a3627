#pragma once

#include "homext/homext_quiver.hpp"

namespace homext {

// Quiver with relations whose arrows carry degrees 0 or 1, every composable
// path of total degree >= 2 being a relation, plus a frozen arrow subset.
struct Superquiver {
    QuiverWithRelations quiver;
    std::vector<bool> frozen;

    void validate() const;
};

Superquiver from_homext(const HomExtQuiver& h, const std::vector<ARComponent>& components);
Superquiver from_homext(const HomExtQuiver& h, const AtildeQuiver& q);

// Unfrozen arrows dropped to degree 0; frozen arrows keep their degrees.
Superquiver trivial_twist(const Superquiver& s);

// Isomorphic as quivers with relations, frozen arrows mapping to frozen
// arrows of the same degree; unfrozen degrees are ignored.
bool twist_equivalent_super(const Superquiver& s1, const Superquiver& s2);

// Assignment of one string module per vertex, a graph map per degree-0
// arrow and an ext basis element per degree-1 arrow (indices into the
// respective combinatorial bases). Modules must be pairwise distinct.
struct SuperRepresentation {
    std::vector<StringModule> vertex_modules;
    std::vector<int> arrow_choice;
};

bool check_representation(const AtildeQuiver& q, const Superquiver& s,
                          const SuperRepresentation& r);

bool is_irreducible(const AtildeQuiver& q, const Superquiver& s, const SuperRepresentation& r);

// The defining representation of the quiver of a module set: arrow k picks
// the k-th basis element of its reduced hom or ext space.
SuperRepresentation defining_representation(const AtildeQuiver& q, const HomExtQuiver& h);

}  // namespace homext
