#pragma once

#include <optional>
#include <vector>

#include "pmcut/exec.hpp"
#include "pmcut/family.hpp"
#include "pmcut/network.hpp"

namespace pmcut {

// Exact max flow at one parameter point, plus the two canonical min cuts:
// min_cut_minimal is the set of internal nodes reachable from s in the final
// residual graph, min_cut_maximal the set that cannot reach t. Every min cut
// S satisfies minimal ⊆ S ⊆ maximal.
struct FlowResult {
    Rational value;
    FlowAssignment flow;
    CutSet min_cut_minimal;
    CutSet min_cut_maximal;
};

// Shortest-augmenting-path max flow over exact rationals. Throws
// NegativeCapacityError if any capacity evaluates negative at p.
FlowResult max_flow(const ParamNetwork& net, const ParamPoint& p);

// The unique min cut at p, or nullopt when the min cut is not unique.
std::optional<CutSet> unique_min_cut(const ParamNetwork& net, const ParamPoint& p);

struct BruteForceOptions {
    int limit = 20; // refuse networks with more internal nodes than this
    Exec exec = Exec::serial;
};

// All minimum cuts at p by exhaustive enumeration of the 2^n cut sets,
// in increasing bitmask order.
std::vector<CutSet> brute_force_min_cuts(const ParamNetwork& net, const ParamPoint& p,
                                         const BruteForceOptions& opts = {});

} // namespace pmcut
