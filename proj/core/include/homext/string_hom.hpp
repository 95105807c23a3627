#pragma once

#include <vector>

#include "homext/string_module.hpp"

namespace homext {

// A factorization C = F E D by cut positions: F = w[0,a), E = w[a,b), D = w[b,L).
struct FactorTriple {
    int a = 0;
    int b = 0;
};

bool is_quotient_factorization(const AtildeQuiver& q, const Walk& w, const FactorTriple& f);
bool is_submodule_factorization(const AtildeQuiver& q, const Walk& w, const FactorTriple& f);

std::vector<FactorTriple> quotient_factorizations(const AtildeQuiver& q, const Walk& w);
std::vector<FactorTriple> submodule_factorizations(const AtildeQuiver& q, const Walk& w);

// Admissible pair: quotient factorization of C1 against submodule
// factorization of C2 with equal (or mutually inverse) middle segments.
struct GraphMap {
    FactorTriple quot;       // of C1
    FactorTriple sub;        // of C2
    bool middle_inverted = false;
    bool two_sided = false;
};

std::vector<GraphMap> graph_maps(const AtildeQuiver& q, const StringModule& c1,
                                 const StringModule& c2);

// An arrow gluing a representative of C1 to a representative of C2 into one
// longer string; each yields a basis extension of C1 by C2.
struct Connection {
    int arrow = 0;
    bool invert_c1 = false;
    bool invert_c2 = false;
};

std::vector<Connection> connections(const AtildeQuiver& q, const StringModule& c1,
                                    const StringModule& c2);

Walk connection_middle_walk(const AtildeQuiver& q, const StringModule& c1,
                            const StringModule& c2, const Connection& conn);

struct ExtClass {
    bool from_connection = false;
    Connection conn;   // valid when from_connection
    GraphMap map;      // valid otherwise; a two-sided graph map C2 -> C1
    std::vector<StringModule> middle_terms;
};

std::vector<ExtClass> ext_basis(const AtildeQuiver& q, const StringModule& c1,
                                const StringModule& c2);

int dim_hom(const AtildeQuiver& q, const StringModule& c1, const StringModule& c2);
int dim_ext(const AtildeQuiver& q, const StringModule& c1, const StringModule& c2);

bool is_exceptional(const AtildeQuiver& q, const StringModule& m);

}  // namespace homext
