#pragma once

#include <string>
#include <variant>
#include <vector>

#include "homext/quiver.hpp"

namespace homext {

// One step of a walk: an arrow traversed forwards or formally inverted.
struct Letter {
    int arrow = 0;
    bool inverse = false;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.arrow == b.arrow && a.inverse == b.inverse;
    }
};

inline int letter_src(const AtildeQuiver& q, const Letter& l) {
    return l.inverse ? q.tgt(l.arrow) : q.src(l.arrow);
}
inline int letter_tgt(const AtildeQuiver& q, const Letter& l) {
    return l.inverse ? q.src(l.arrow) : q.tgt(l.arrow);
}
inline Letter letter_inverse(const Letter& l) { return Letter{l.arrow, !l.inverse}; }

// A walk in the cycle quiver. base_vertex is the start; for a lazy walk the
// letter list is empty. closed marks a cyclic reading (band territory).
struct Walk {
    int base_vertex = 1;
    std::vector<Letter> letters;
    bool closed = false;

    bool lazy() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const Walk& a, const Walk& b) {
        return a.base_vertex == b.base_vertex && a.letters == b.letters && a.closed == b.closed;
    }
};

int walk_start(const AtildeQuiver& q, const Walk& w);
int walk_end(const AtildeQuiver& q, const Walk& w);
std::vector<int> walk_vertices(const AtildeQuiver& q, const Walk& w);

// Throws NotReduced on broken composability or an immediate backtrack.
void validate_walk(const AtildeQuiver& q, const Walk& w);

Walk invert_walk(const AtildeQuiver& q, const Walk& w);

// Canonical string-module triple (i, j; l): the counterclockwise walk from
// vertex i+1 to vertex j winding l extra full turns. Simple at j = (j-1, j; 0).
struct StringModule {
    int i = 1;
    int j = 1;
    int l = 0;

    friend bool operator==(const StringModule& a, const StringModule& b) {
        return a.i == b.i && a.j == b.j && a.l == b.l;
    }
    friend bool operator<(const StringModule& a, const StringModule& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.l < b.l;
    }
    std::string to_string() const;
    static StringModule parse(const std::string& text);
};

StringModule simple_module(const AtildeQuiver& q, int vertex);

// l-fold power of the unique band (the full cycle traversed once per arrow).
struct BandPower {
    int l = 1;

    friend bool operator==(const BandPower& a, const BandPower& b) { return a.l == b.l; }
};

using NormalForm = std::variant<StringModule, BandPower>;

Walk expand(const AtildeQuiver& q, const StringModule& m);
NormalForm normalize(const AtildeQuiver& q, const Walk& w);

// Entry v-1 counts occurrences of vertex v in the expanded walk.
std::vector<int> dimension_vector(const AtildeQuiver& q, const StringModule& m);

enum class ARComponent { Preprojective, Preinjective, LeftRegular, RightRegular };

ARComponent classify(const AtildeQuiver& q, const StringModule& m);

const char* to_string(ARComponent c);

bool is_regular(ARComponent c);

enum class HookKind { AddHook, DeleteHook, AddCohook, DeleteCohook };
enum class WalkEnd { Start, End };

// The four hook/cohook moves at a chosen end of the canonical walk.
// Throws UndefinedOperation when the defining letter is missing.
StringModule hook_op(const AtildeQuiver& q, const StringModule& m, HookKind kind, WalkEnd end);

// Walk-level version, shared with the twist machinery.
Walk hook_op_walk(const AtildeQuiver& q, const Walk& w, HookKind kind, WalkEnd end);

}  // namespace homext
