#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmcut/errors.hpp"
#include "pmcut/rational.hpp"

namespace pmcut {

// Node of a two-terminal network: the source s, the sink t, or an internal
// node indexed 1..n.
class NodeId {
public:
    static NodeId source() { return NodeId(0); }
    static NodeId sink() { return NodeId(-1); }
    static NodeId internal(int index) {
        if (index < 1) throw std::domain_error("internal node index must be >= 1");
        return NodeId(index);
    }

    bool is_source() const { return v_ == 0; }
    bool is_sink() const { return v_ == -1; }
    bool is_internal() const { return v_ >= 1; }
    // 1-based index; only valid for internal nodes.
    int index() const {
        if (!is_internal()) throw std::domain_error("not an internal node");
        return v_;
    }

    // "s", "t", or the decimal index.
    std::string str() const {
        if (is_source()) return "s";
        if (is_sink()) return "t";
        return std::to_string(v_);
    }

    bool operator==(const NodeId&) const = default;
    auto operator<=>(const NodeId&) const = default;

private:
    explicit NodeId(int v) : v_(v) {}
    int v_;
};

// Capacity form a*lambda + b*mu + c.
struct AffineExpr {
    Rational a, b, c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    bool is_constant() const { return a.is_zero() && b.is_zero(); }

    AffineExpr operator+(const AffineExpr& o) const { return {a + o.a, b + o.b, c + o.c}; }
    AffineExpr operator-(const AffineExpr& o) const { return {a - o.a, b - o.b, c - o.c}; }
    AffineExpr& operator+=(const AffineExpr& o) { a += o.a; b += o.b; c += o.c; return *this; }

    bool operator==(const AffineExpr&) const = default;
    auto operator<=>(const AffineExpr&) const = default;
};

// A point in the (lambda, mu) parameter plane.
struct ParamPoint {
    Rational lambda, mu;

    bool operator==(const ParamPoint&) const = default;
    // lexicographic; used for canonical vertex ordering, not for the parameter order
    auto operator<=>(const ParamPoint&) const = default;
};

// Componentwise partial order on parameter points.
inline bool leq_componentwise(const ParamPoint& p, const ParamPoint& q) {
    return p.lambda <= q.lambda && p.mu <= q.mu;
}

inline Rational affine_eval(const AffineExpr& f, const ParamPoint& p) {
    return f.a * p.lambda + f.b * p.mu + f.c;
}

// Subset of the internal nodes {1..n} as a bitmask (bit i-1 <-> node i).
// Cut semantics: the source side is S ∪ {s}.
class CutSet {
public:
    CutSet() : mask_(0) {}
    static CutSet from_mask(std::uint64_t mask) { return CutSet(mask); }

    std::uint64_t mask() const { return mask_; }
    bool contains(int node) const { return node >= 1 && node <= 64 && (mask_ >> (node - 1)) & 1u; }
    CutSet with(int node) const { return CutSet(mask_ | bit(node)); }
    CutSet without(int node) const { return CutSet(mask_ & ~bit(node)); }
    int count() const { return __builtin_popcountll(mask_); }
    bool empty() const { return mask_ == 0; }

    bool is_subset_of(const CutSet& o) const { return (mask_ & ~o.mask_) == 0; }
    CutSet operator&(const CutSet& o) const { return CutSet(mask_ & o.mask_); }
    CutSet operator|(const CutSet& o) const { return CutSet(mask_ | o.mask_); }

    bool operator==(const CutSet&) const = default;
    auto operator<=>(const CutSet&) const = default; // increasing bitmask order

    // "{}" or "{1,3,4}"
    std::string str() const;

private:
    explicit CutSet(std::uint64_t mask) : mask_(mask) {}
    static std::uint64_t bit(int node) {
        if (node < 1 || node > 64) throw std::domain_error("node out of range for cut set");
        return std::uint64_t{1} << (node - 1);
    }
    std::uint64_t mask_;
};

enum class SsmClass { StrictSSM, GeneralSSM, NotSSM };

struct Arc {
    NodeId tail;
    NodeId head;
    AffineExpr capacity;
};

// Directed two-terminal network with affine parametric capacities.
// Structural invariants enforced on insertion: no arc enters s, none leaves t,
// no self-loops, no parallel arcs, internal endpoints lie in 1..n.
class ParamNetwork {
public:
    explicit ParamNetwork(int n);

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    void add_arc(NodeId tail, NodeId head, AffineExpr capacity);
    const Arc* find_arc(NodeId tail, NodeId head) const;

    bool operator==(const ParamNetwork& o) const;

private:
    void check_endpoint(NodeId v) const;
    int n_;
    std::vector<Arc> arcs_;
    std::map<std::pair<NodeId, NodeId>, std::size_t> index_;
};

// Classification of how capacities move with the parameters. Source arcs
// (leaving s, not entering t) may grow, sink arcs (entering t) may shrink,
// everything else must stay constant.
SsmClass validate_ssm(const ParamNetwork& net);

// True if the arc crosses the cut S, i.e. tail on the source side and head on
// the sink side.
inline bool arc_crosses(const Arc& arc, const CutSet& s) {
    bool tail_src = arc.tail.is_source() || (arc.tail.is_internal() && s.contains(arc.tail.index()));
    bool head_src = arc.head.is_source() || (arc.head.is_internal() && s.contains(arc.head.index()));
    return tail_src && !head_src;
}

// Capacity of the cut S ∪ {s} as a function of the parameters.
AffineExpr cut_capacity_affine(const ParamNetwork& net, const CutSet& s);

// Capacity of the cut S ∪ {s} at a concrete point.
Rational cut_capacity(const ParamNetwork& net, const CutSet& s, const ParamPoint& p);

// Number of arcs whose capacity form is not identically zero.
int arc_count_nonzero(const ParamNetwork& net);

} // namespace pmcut
