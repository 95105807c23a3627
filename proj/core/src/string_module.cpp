#include "homext/string_module.hpp"

#include <algorithm>
#include <cstdio>

namespace homext {

int walk_start(const AtildeQuiver& q, const Walk& w) {
    (void)q;
    return w.base_vertex;
}

int walk_end(const AtildeQuiver& q, const Walk& w) {
    return w.lazy() ? w.base_vertex : letter_tgt(q, w.letters.back());
}

std::vector<int> walk_vertices(const AtildeQuiver& q, const Walk& w) {
    std::vector<int> vs;
    vs.push_back(w.base_vertex);
    for (const Letter& l : w.letters) vs.push_back(letter_tgt(q, l));
    return vs;
}

void validate_walk(const AtildeQuiver& q, const Walk& w) {
    int at = w.base_vertex;
    if (at < 1 || at > q.n()) throw NotReduced("walk base vertex out of range");
    for (size_t k = 0; k < w.letters.size(); ++k) {
        const Letter& l = w.letters[k];
        if (l.arrow < 1 || l.arrow > q.n()) throw NotReduced("walk letter arrow out of range");
        if (letter_src(q, l) != at) throw NotReduced("walk letters are not composable");
        if (k > 0 && w.letters[k - 1] == letter_inverse(l))
            throw NotReduced("walk contains an immediate backtrack");
        at = letter_tgt(q, l);
    }
    if (w.closed) {
        if (at != w.base_vertex) throw NotReduced("closed walk does not close up");
        if (!w.letters.empty() && w.letters.back() == letter_inverse(w.letters.front()))
            throw NotReduced("closed walk backtracks at the seam");
    }
}

Walk invert_walk(const AtildeQuiver& q, const Walk& w) {
    Walk out;
    out.base_vertex = walk_end(q, w);
    out.closed = w.closed;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(letter_inverse(*it));
    return out;
}

std::string StringModule::to_string() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "(%d,%d;%d)", i, j, l);
    return buf;
}

StringModule StringModule::parse(const std::string& text) {
    int i = 0, j = 0, l = 0;
    char trail = 0;
    int consumed = std::sscanf(text.c_str(), " ( %d , %d ; %d %c", &i, &j, &l, &trail);
    if (consumed != 4 || trail != ')')
        throw ParseError("bad string-module token \"" + text + "\", expected \"(i,j;l)\"");
    if (l < 0) throw ParseError("negative winding in \"" + text + "\"");
    return StringModule{i, j, l};
}

StringModule simple_module(const AtildeQuiver& q, int vertex) {
    return StringModule{q.prev(vertex), vertex, 0};
}

namespace {

// cyclic distance from a to b in {0, .., n-1}
int cyc_gap(int a, int b, int n) { return ((b - a) % n + n) % n; }

void check_range(const AtildeQuiver& q, const StringModule& m) {
    if (m.i < 1 || m.i > q.n() || m.j < 1 || m.j > q.n() || m.l < 0)
        throw Error("string module " + m.to_string() + " out of range for n=" +
                    std::to_string(q.n()));
}

// true when the letter runs counterclockwise (from k to k+1 along arrow k)
bool letter_ccw(const AtildeQuiver& q, const Letter& l) {
    return letter_src(q, l) == l.arrow;
}

}  // namespace

Walk expand(const AtildeQuiver& q, const StringModule& m) {
    check_range(q, m);
    const int n = q.n();
    Walk w;
    w.base_vertex = q.next(m.i);
    const int base_len = cyc_gap(q.next(m.i), m.j, n);
    const int total = m.l * n + base_len;
    w.letters.reserve(static_cast<size_t>(total));
    int at = w.base_vertex;
    for (int k = 0; k < total; ++k) {
        w.letters.push_back(Letter{at, !q.eps().is_plus(at)});
        at = q.next(at);
    }
    return w;
}

NormalForm normalize(const AtildeQuiver& q, const Walk& input) {
    validate_walk(q, input);
    const int n = q.n();

    if (input.closed) {
        // A reduced closed walk on the cycle is forced to be a rotation of a
        // power of the unique band, in one of the two senses.
        if (input.lazy()) throw NotAString("closed lazy walk is not a band power");
        if (input.length() % n != 0)
            throw NotReduced("closed walk length not a multiple of the cycle");
        return BandPower{input.length() / n};
    }

    Walk w = input;
    if (!w.lazy() && !letter_ccw(q, w.letters.front())) w = invert_walk(q, w);
    for (const Letter& l : w.letters) {
        if (!letter_ccw(q, l))
            throw NotReduced("walk changes rotational direction");  // unreachable if reduced
    }
    const int start = w.base_vertex;
    const int end = walk_end(q, w);
    const int i = q.prev(start);
    const int base_len = cyc_gap(start, end, n);
    const int l = (w.length() - base_len) / n;
    return StringModule{i, end, l};
}

std::vector<int> dimension_vector(const AtildeQuiver& q, const StringModule& m) {
    std::vector<int> dims(static_cast<size_t>(q.n()), 0);
    for (int v : walk_vertices(q, expand(q, m))) ++dims[static_cast<size_t>(v - 1)];
    return dims;
}

ARComponent classify(const AtildeQuiver& q, const StringModule& m) {
    check_range(q, m);
    // Extension letters at the two ends: before the start comes arrow i
    // traversed i -> i+1, after the end comes arrow j traversed j -> j+1.
    const bool start_direct = q.eps().is_plus(m.i);
    const bool end_direct = q.eps().is_plus(m.j);
    if (start_direct && !end_direct) return ARComponent::Preprojective;
    if (!start_direct && end_direct) return ARComponent::Preinjective;
    if (start_direct && end_direct) return ARComponent::LeftRegular;
    return ARComponent::RightRegular;
}

const char* to_string(ARComponent c) {
    switch (c) {
        case ARComponent::Preprojective: return "preprojective";
        case ARComponent::Preinjective: return "preinjective";
        case ARComponent::LeftRegular: return "left-regular";
        case ARComponent::RightRegular: return "right-regular";
    }
    return "?";
}

bool is_regular(ARComponent c) {
    return c == ARComponent::LeftRegular || c == ARComponent::RightRegular;
}

namespace {

// The only letter that can be prepended to a walk starting at vertex s:
// arrow s-1 traversed (s-1) -> s.
Letter prepend_letter(const AtildeQuiver& q, int s) {
    const int a = q.prev(s);
    return Letter{a, !q.eps().is_plus(a)};
}

// The only letter appendable at end vertex t: arrow t traversed t -> t+1.
Letter append_letter(const AtildeQuiver& q, int t) {
    return Letter{t, !q.eps().is_plus(t)};
}

}  // namespace

Walk hook_op_walk(const AtildeQuiver& q, const Walk& input, HookKind kind, WalkEnd end) {
    Walk w = input;
    auto fail = [](const char* what) {
        throw UndefinedOperation(std::string(what) + " is not defined here");
    };

    const bool at_start = (end == WalkEnd::Start);
    switch (kind) {
        case HookKind::AddHook: {
            // direct letter then as many inverses as possible (reading outward)
            if (at_start) {
                Letter first = prepend_letter(q, walk_start(q, w));
                if (first.inverse) fail("add hook at start");
                w.letters.insert(w.letters.begin(), first);
                w.base_vertex = letter_src(q, first);
                while (true) {
                    Letter next = prepend_letter(q, w.base_vertex);
                    if (!next.inverse) break;
                    w.letters.insert(w.letters.begin(), next);
                    w.base_vertex = letter_src(q, next);
                }
            } else {
                Letter first = append_letter(q, walk_end(q, w));
                if (!first.inverse) fail("add hook at end");
                w.letters.push_back(first);
                while (true) {
                    Letter next = append_letter(q, walk_end(q, w));
                    if (next.inverse) break;
                    w.letters.push_back(next);
                }
            }
            break;
        }
        case HookKind::AddCohook: {
            if (at_start) {
                Letter first = prepend_letter(q, walk_start(q, w));
                if (!first.inverse) fail("add cohook at start");
                w.letters.insert(w.letters.begin(), first);
                w.base_vertex = letter_src(q, first);
                while (true) {
                    Letter next = prepend_letter(q, w.base_vertex);
                    if (next.inverse) break;
                    w.letters.insert(w.letters.begin(), next);
                    w.base_vertex = letter_src(q, next);
                }
            } else {
                Letter first = append_letter(q, walk_end(q, w));
                if (first.inverse) fail("add cohook at end");
                w.letters.push_back(first);
                while (true) {
                    Letter next = append_letter(q, walk_end(q, w));
                    if (!next.inverse) break;
                    w.letters.push_back(next);
                }
            }
            break;
        }
        case HookKind::DeleteHook: {
            if (at_start) {
                size_t k = 0;
                while (k < w.letters.size() && w.letters[k].inverse) ++k;
                if (k == w.letters.size()) fail("delete hook at start");
                w.base_vertex = letter_tgt(q, w.letters[k]);
                w.letters.erase(w.letters.begin(), w.letters.begin() + static_cast<long>(k) + 1);
            } else {
                size_t k = w.letters.size();
                while (k > 0 && !w.letters[k - 1].inverse) --k;
                if (k == 0) fail("delete hook at end");
                w.letters.resize(k - 1);
            }
            break;
        }
        case HookKind::DeleteCohook: {
            if (at_start) {
                size_t k = 0;
                while (k < w.letters.size() && !w.letters[k].inverse) ++k;
                if (k == w.letters.size()) fail("delete cohook at start");
                w.base_vertex = letter_tgt(q, w.letters[k]);
                w.letters.erase(w.letters.begin(), w.letters.begin() + static_cast<long>(k) + 1);
            } else {
                size_t k = w.letters.size();
                while (k > 0 && w.letters[k - 1].inverse) --k;
                if (k == 0) fail("delete cohook at end");
                w.letters.resize(k - 1);
            }
            break;
        }
    }
    validate_walk(q, w);
    return w;
}

StringModule hook_op(const AtildeQuiver& q, const StringModule& m, HookKind kind, WalkEnd end) {
    NormalForm nf = normalize(q, hook_op_walk(q, expand(q, m), kind, end));
    return std::get<StringModule>(nf);
}

}  // namespace homext
