#pragma once

#include <map>
#include <vector>

#include "pmcut/exec.hpp"
#include "pmcut/network.hpp"

namespace pmcut {

// Recursion constants for the hard-instance family at one level n:
// source-arc coefficient rows (capacity of s->j is a_sj*lambda + b_sj*mu) and
// the growth constants theta, phi. All entries are positive integers except
// that theta/phi are unset (zero) at level 1.
struct FamilyConstants {
    int n = 0;
    std::vector<BigInt> a_s; // a_s[j-1] = a_sj, j = 1..n
    std::vector<BigInt> b_s; // b_s[j-1] = b_sj
    BigInt theta;
    BigInt phi;
};

// Constants for level n >= 2 (the recursion step is only defined from 2 up).
FamilyConstants family_constants(int n);

// Flow value per arc, keyed by (tail, head).
class FlowAssignment {
public:
    void set(NodeId tail, NodeId head, Rational value);
    const Rational* find(NodeId tail, NodeId head) const;
    // Throws MissingArcError when the arc has no assigned flow.
    const Rational& at(NodeId tail, NodeId head) const;
    std::size_t size() const { return flows_.size(); }

    auto begin() const { return flows_.begin(); }
    auto end() const { return flows_.end(); }

    bool operator==(const FlowAssignment&) const = default;

private:
    std::map<std::pair<NodeId, NodeId>, Rational> flows_;
};

// One per cut S: the parameter point where S should be the unique min cut and
// a max flow witnessing it there.
struct Certificate {
    CutSet cut;
    ParamPoint point;
    FlowAssignment flow;
};

struct BuildOptions {
    bool with_certificates = false;
    int certificate_limit = 12; // max n for full 2^n certificate generation
    Exec exec = Exec::serial;
};

struct FamilyInstance {
    ParamNetwork net;
    std::vector<Certificate> certificates; // increasing bitmask order
};

// The level-n hard instance: n internal nodes, (n^2+n+2)/2 arcs with nonzero
// capacity plus the zero-capacity arcs the recursion produces. n >= 1.
FamilyInstance build_family(int n, const BuildOptions& opts = {});

// Certificate point for cut S in the level-n instance.
ParamPoint family_point(int n, const CutSet& s);

// Certificate flow for cut S in the level-n instance.
FlowAssignment family_flow(int n, const CutSet& s);

} // namespace pmcut
