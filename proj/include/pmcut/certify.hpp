#pragma once

#include <string>
#include <vector>

#include "pmcut/family.hpp"
#include "pmcut/maxflow.hpp"
#include "pmcut/network.hpp"

namespace pmcut {

// What a feasibility / complementary-slackness check can complain about.
enum class Condition {
    FlowNonnegative,
    FlowWithinCapacity,
    FlowConserved,
    SourceArcInCutStrict,    // j in S: x_sj < u_sj(p)
    SinkArcInCutSaturated,   // j in S: x_jt = u_jt
    SourceArcOutSaturated,   // j not in S: x_sj = u_sj(p)
    SinkArcOutStrict,        // j not in S: x_jt < u_jt
    InternalForwardSaturated, // j in S, k not: x_jk = u_jk
    InternalBackwardZero,     // j not in S, k in S: x_jk = 0
};

std::string condition_name(Condition c);

struct Violation {
    Condition cond;
    NodeId tail;
    NodeId head;
    Rational lhs;
    Rational rhs;

    std::string describe() const;
};

struct ScsReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

// Flow feasibility at p: matches the arc set exactly (throws MissingArcError
// otherwise), nonnegative, within capacity, conserved at internal nodes.
ScsReport check_feasible(const ParamNetwork& net, const ParamPoint& p,
                         const FlowAssignment& flow);

// Strong complementary slackness of (S, flow) at p. Implies S is the unique
// minimum cut. Feasibility violations short-circuit the report.
ScsReport check_scs(const ParamNetwork& net, const ParamPoint& p, const CutSet& s,
                    const FlowAssignment& flow);

struct VerificationReport {
    std::string label;
    int n = 0;
    long checks_run = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    Exec exec = Exec::serial;
    int certificate_limit = 12;
};

// End-to-end check of the 2^n certificates of the level-n instance: each one
// feasible, SCS-tight, and confirmed unique both by max-flow residual cuts
// and by brute force.
VerificationReport verify_theorem_main(int n, const VerifyOptions& opts = {});

// Growth facts about the family constants, for every level up to n_max
// (n_max >= 3): internal capacities nonnegative with u_{n,n-1} = 0, the
// squaring lower bound phi_n >= 3*phi_{n-1}^2, and the cut-count envelope
// 2^(2^n) <= 3*phi_n with the matching upper estimate 17*phi_n <= 2^(2^n*sqrt2).
VerificationReport verify_growth_bounds(int n_max);

} // namespace pmcut
