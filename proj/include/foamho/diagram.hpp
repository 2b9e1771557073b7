#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foamho {

// First-homology class of a curve on the surface, one entry per H1 generator.
using H1 = std::vector<int>;

enum class SurfaceKind { Disk, Annulus, Torus };

struct Surface {
    SurfaceKind kind = SurfaceKind::Disk;

    int h1_rank() const {
        switch (kind) {
            case SurfaceKind::Disk: return 0;
            case SurfaceKind::Annulus: return 1;
            case SurfaceKind::Torus: return 2;
        }
        return 0;
    }
    std::string name() const;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signals a broken internal invariant (d^2 != 0, unreachable surface shape, ...).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// One of the two ends of an edge: end 0 is the tail, end 1 the head.
struct EdgeEnd {
    int edge = -1;
    int end = 0;
    friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
    int id = -1;
    H1 h1;  // class contributed when traversed tail -> head
};

// Ports are listed counterclockwise; the strand through ports 0-2 passes
// under the strand through ports 1-3.
struct Crossing {
    int id = -1;
    std::array<EdgeEnd, 4> ports;
};

struct FreeLoop {
    int id = -1;
    H1 h1;
};

enum class Smoothing : int { Positive = 0, Negative = 1 };

// Bit c set <=> crossing c (in enumeration order) is smoothed Negative.
using StateMask = std::uint32_t;

inline Smoothing smoothing_at(StateMask m, int c) {
    return ((m >> c) & 1u) ? Smoothing::Negative : Smoothing::Positive;
}

// States are enumerated lexicographically on the smoothing bit-vector with
// Positive = 1 and crossing 0 most significant, so ordinal 0 is all-positive.
StateMask state_from_ordinal(int n, std::uint64_t ordinal);
std::uint64_t ordinal_from_state(int n, StateMask m);

struct Diagram {
    Surface surface;
    std::vector<Edge> edges;        // sorted by id
    std::vector<Crossing> crossings;  // enumeration order = declaration order
    std::vector<FreeLoop> loops;    // declaration order

    int n() const { return static_cast<int>(crossings.size()); }

    int edge_slot(int edge_id) const;  // dense index into edges, -1 if unknown
    const Edge& edge_by_id(int edge_id) const;

    // Dense index of an edge end; circles are identified by the smallest
    // such index they contain.
    int end_index(EdgeEnd e) const { return 2 * edge_slot(e.edge) + e.end; }

    // Circle id given to the k-th declared free loop.
    int loop_circle_id(int loop_pos) const {
        return 2 * static_cast<int>(edges.size()) + loop_pos;
    }
};

struct Circle {
    int id = -1;           // smallest edge-end index, or loop_circle_id
    H1 cls;                // traced homology class
    bool essential = false;
    H1 canon;              // canonical (positive) class; empty when trivial
    int sign = 0;          // traced class == sign * canon; 0 when trivial
    std::vector<int> ends;  // edge-end indices on this circle, ascending
};

struct CircleSet {
    std::vector<Circle> circles;  // sorted by id

    int pos_of_id(int id) const;
    int pos_containing_end(int end_index) const;
    const Circle& by_id(int id) const;
};

// Canonical representative of {cls, -cls}: first nonzero entry positive.
// Returns (canonical class, sign of the input relative to it).
std::pair<H1, int> positive_orientation(const H1& cls);

inline bool is_zero(const H1& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

Diagram parse_diagram(std::string_view text);
std::string serialize_diagram(const Diagram& d);

CircleSet resolve_state(const Diagram& d, StateMask s);

struct Transition {
    enum Kind { Merge, Split, SelfGlue } kind = SelfGlue;
    std::vector<int> from;  // circle ids at the crossing, in the given state
    std::vector<int> to;    // circle ids at the crossing, after the flip
};

// Compares resolve_state(d, s) with the state where crossing p is flipped.
Transition classify_transition(const Diagram& d, StateMask s, int p);

// Result of deleting crossing p after smoothing it; carries enough origin
// data to match circles of the smaller diagram with circles of the original.
struct SmoothedDiagram {
    Diagram diagram;
    int removed_crossing = -1;
    Smoothing smoothing = Smoothing::Negative;
    // new edge id -> ordered chain of (original edge id, traversed forward?)
    std::map<int, std::vector<std::pair<int, bool>>> edge_parts;
    // new loop id -> original loop id, for loops that already existed
    std::map<int, int> loop_origin;
    // new loop id -> (original edge id, forward?) for loops created by the
    // smoothing
    std::map<int, std::pair<int, bool>> new_loop_rep;
};

SmoothedDiagram smooth_crossing(const Diagram& d, int p, Smoothing sm);

}  // namespace foamho
