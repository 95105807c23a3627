#pragma once

#include "homext/annulus.hpp"
#include "homext/oracle.hpp"
#include "homext/string_hom.hpp"

namespace homext {

struct ModuleSet {
    AtildeQuiver quiver;
    std::vector<StringModule> modules;

    void validate() const;  // distinct canonical strings
    ArcDiagram diagram() const;
};

// Quiver on a module set with degree-0 arrows for irreducible morphisms and
// degree-1 arrows for irreducible extensions, plus length-two relations.
struct HomExtQuiver {
    QuiverWithRelations quiver;
    std::vector<StringModule> modules;  // per vertex
};

// Geometric route: immediate-successor incidences of the arc diagram, with
// degrees read off the string combinatorics.
HomExtQuiver build_geometric(const ModuleSet& chi);

// Algebraic route: irreducible morphisms and extensions modulo the factoring
// subspaces, detected in exact matrices. Works for non-exceptional sets too.
HomExtQuiver build_algebraic(const ModuleSet& chi);

// General-quiver variant on raw representations.
QuiverWithRelations build_algebraic_reps(const GQuiver& g, const std::vector<RepQ>& reps,
                                         const std::vector<std::string>& labels);

bool is_exceptional_set(const ModuleSet& chi);

// Reflexive-transitive closure of the arrow relation; entry (i, j) says a
// path from vertex i to vertex j exists.
std::vector<std::vector<bool>> ext_poset(const QuiverWithRelations& q);

BigInt count_linear_extensions(const QuiverWithRelations& q);

std::vector<std::vector<StringModule>> exceptional_orderings(const ModuleSet& chi);

// Every complete exceptional set whose windings stay within the window.
std::vector<ModuleSet> enumerate_exceptional_sets(const AtildeQuiver& q, int lmax);

std::vector<StringModule> exceptional_modules(const AtildeQuiver& q, int lmax);

}  // namespace homext
