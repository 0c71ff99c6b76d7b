#pragma once

#include <map>
#include <vector>

#include "pmcut/exec.hpp"
#include "pmcut/network.hpp"

namespace pmcut {

// Convex polygon with exact rational vertices, kept canonical: CCW, no
// duplicate or collinear vertices, starting at the lexicographically smallest
// vertex. Degenerate results are canonical too: a segment keeps its two
// lex-sorted endpoints, a point one vertex, the empty set none.
class ConvexPolygon {
public:
    enum class Location { interior, boundary, outside };

    ConvexPolygon() = default;
    static ConvexPolygon box(const ParamPoint& lo, const ParamPoint& hi);
    static ConvexPolygon from_vertices(std::vector<ParamPoint> pts);

    const std::vector<ParamPoint>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }
    bool has_interior() const { return vertices_.size() >= 3; }

    // twice the (positive) enclosed area; 0 for degenerate shapes
    Rational area2() const;

    Location locate(const ParamPoint& p) const;

    // intersect with the half-plane g(p) <= 0
    ConvexPolygon clip(const AffineExpr& g) const;

    bool operator==(const ConvexPolygon&) const = default;

private:
    explicit ConvexPolygon(std::vector<ParamPoint> vs) : vertices_(std::move(vs)) {}
    std::vector<ParamPoint> vertices_;
};

struct CellOptions {
    int limit = 12; // max n: enumeration touches all 2^n cut forms
    Exec exec = Exec::serial;
};

// Decomposition of a parameter box into min-cut uniqueness regions. cells
// holds the positive-area cell per cut (increasing bitmask order); cuts whose
// region is empty or lower-dimensional land in degenerate.
struct CellDiagram {
    int n = 0;
    ParamPoint box_lo, box_hi;
    std::map<CutSet, ConvexPolygon> cells;
    std::vector<CutSet> degenerate;
};

// Closed region of the box where S is a minimum cut.
ConvexPolygon cell_of(const ParamNetwork& net, const CutSet& s, const ParamPoint& box_lo,
                      const ParamPoint& box_hi, const CellOptions& opts = {});

// All cells over the box. Verifies that retained cells have pairwise disjoint
// interiors and throws CellOverlapError otherwise (two distinct cuts sharing
// one capacity form and a fat region).
CellDiagram enumerate_cells(const ParamNetwork& net, const ParamPoint& box_lo,
                            const ParamPoint& box_hi, const CellOptions& opts = {});

// Number of cuts that are the unique minimum somewhere in the box.
int count_distinct_min_cuts(const ParamNetwork& net, const ParamPoint& box_lo,
                            const ParamPoint& box_hi, const CellOptions& opts = {});

struct SweepOptions {
    int limit = 20; // sweep evaluates all 2^n cut forms
    Exec exec = Exec::serial;
};

// Maximal parameter interval on which one cut stays minimal. t parametrizes
// the path with waypoint i at t = i.
struct SweepSegment {
    Rational t_begin, t_end;
    CutSet cut;
};

struct SweepResult {
    std::vector<SweepSegment> segments; // consecutive, covering [0, pieces]
    std::vector<CutSet> distinct;       // the chain, in order of appearance
};

// Walk a componentwise non-decreasing path and report the minimal minimum cut
// on every maximal interval between breakpoints. Requires an SSM network
// (throws NotSsmError) and a monotone path (throws NotMonotonePathError).
SweepResult northeast_sweep(const ParamNetwork& net, const std::vector<ParamPoint>& path,
                            const SweepOptions& opts = {});

} // namespace pmcut
