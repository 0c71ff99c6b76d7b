#include "pmcut/certify.hpp"

#include <chrono>
#include <stdexcept>

namespace pmcut {

std::string condition_name(Condition c) {
    switch (c) {
    case Condition::FlowNonnegative: return "flow-nonnegative";
    case Condition::FlowWithinCapacity: return "flow-within-capacity";
    case Condition::FlowConserved: return "flow-conserved";
    case Condition::SourceArcInCutStrict: return "source-arc-in-cut-strict";
    case Condition::SinkArcInCutSaturated: return "sink-arc-in-cut-saturated";
    case Condition::SourceArcOutSaturated: return "source-arc-out-saturated";
    case Condition::SinkArcOutStrict: return "sink-arc-out-strict";
    case Condition::InternalForwardSaturated: return "internal-forward-saturated";
    case Condition::InternalBackwardZero: return "internal-backward-zero";
    }
    return "?";
}

std::string Violation::describe() const {
    if (cond == Condition::FlowConserved)
        return "flow-conserved at node " + tail.str() + ": in " + lhs.str() + ", out " + rhs.str();
    return condition_name(cond) + " at " + tail.str() + " -> " + head.str() + ": " + lhs.str() +
           " vs " + rhs.str();
}

ScsReport check_feasible(const ParamNetwork& net, const ParamPoint& p,
                         const FlowAssignment& flow) {
    for (const auto& [key, value] : flow)
        if (!net.find_arc(key.first, key.second))
            throw MissingArcError("flow assigned to absent arc " + key.first.str() + " -> " +
                                  key.second.str());
    for (const Arc& arc : net.arcs())
        if (!flow.find(arc.tail, arc.head))
            throw MissingArcError("no flow for arc " + arc.tail.str() + " -> " + arc.head.str());

    ScsReport report;
    std::vector<Rational> inflow(net.n() + 1), outflow(net.n() + 1);
    for (const Arc& arc : net.arcs()) {
        const Rational& x = flow.at(arc.tail, arc.head);
        Rational u = affine_eval(arc.capacity, p);
        if (x.sign() < 0)
            report.violations.push_back({Condition::FlowNonnegative, arc.tail, arc.head, x, Rational(0)});
        if (x > u)
            report.violations.push_back({Condition::FlowWithinCapacity, arc.tail, arc.head, x, u});
        if (arc.head.is_internal()) inflow[arc.head.index()] += x;
        if (arc.tail.is_internal()) outflow[arc.tail.index()] += x;
    }
    for (int j = 1; j <= net.n(); ++j)
        if (!(inflow[j] == outflow[j]))
            report.violations.push_back({Condition::FlowConserved, NodeId::internal(j),
                                         NodeId::internal(j), inflow[j], outflow[j]});
    return report;
}

ScsReport check_scs(const ParamNetwork& net, const ParamPoint& p, const CutSet& s,
                    const FlowAssignment& flow) {
    if (net.n() < 64 && (s.mask() >> net.n()) != 0)
        throw std::domain_error("cut set mentions nodes beyond n");

    ScsReport report = check_feasible(net, p, flow);
    if (!report.passed()) return report;

    for (const Arc& arc : net.arcs()) {
        const Rational& x = flow.at(arc.tail, arc.head);
        Rational u = affine_eval(arc.capacity, p);
        if (arc.tail.is_source() && arc.head.is_internal()) {
            int j = arc.head.index();
            if (s.contains(j)) {
                if (!(x < u))
                    report.violations.push_back({Condition::SourceArcInCutStrict, arc.tail, arc.head, x, u});
            } else {
                if (!(x == u))
                    report.violations.push_back({Condition::SourceArcOutSaturated, arc.tail, arc.head, x, u});
            }
        } else if (arc.tail.is_internal() && arc.head.is_sink()) {
            int j = arc.tail.index();
            if (s.contains(j)) {
                if (!(x == u))
                    report.violations.push_back({Condition::SinkArcInCutSaturated, arc.tail, arc.head, x, u});
            } else {
                if (!(x < u))
                    report.violations.push_back({Condition::SinkArcOutStrict, arc.tail, arc.head, x, u});
            }
        } else if (arc.tail.is_internal() && arc.head.is_internal()) {
            int j = arc.tail.index(), k = arc.head.index();
            if (s.contains(j) && !s.contains(k)) {
                if (!(x == u))
                    report.violations.push_back({Condition::InternalForwardSaturated, arc.tail, arc.head, x, u});
            } else if (!s.contains(j) && s.contains(k)) {
                if (!x.is_zero())
                    report.violations.push_back({Condition::InternalBackwardZero, arc.tail, arc.head, x, Rational(0)});
            }
        } else {
            // s -> t arc: crosses every cut, so it must be saturated
            if (!(x == u))
                report.violations.push_back({Condition::InternalForwardSaturated, arc.tail, arc.head, x, u});
        }
    }
    return report;
}

VerificationReport verify_theorem_main(int n, const VerifyOptions& opts) {
    if (n < 1) throw std::domain_error("verification needs n >= 1");
    auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.label = "theorem-main";
    report.n = n;

    BuildOptions build_opts;
    build_opts.with_certificates = true;
    build_opts.certificate_limit = opts.certificate_limit;
    build_opts.exec = opts.exec;
    FamilyInstance inst = build_family(n, build_opts);

    std::int64_t count = std::int64_t{1} << n;
    std::vector<std::vector<std::string>> slots(count);
    parallel_for(count, opts.exec, [&](std::int64_t mask) {
        const Certificate& cert = inst.certificates[mask];
        std::vector<std::string>& fail = slots[mask];
        std::string tag = "cert " + cert.cut.str();

        ScsReport feas = check_feasible(inst.net, cert.point, cert.flow);
        if (!feas.passed())
            fail.push_back(tag + ": " + feas.violations.front().describe());

        ScsReport scs = check_scs(inst.net, cert.point, cert.cut, cert.flow);
        if (feas.passed() && !scs.passed())
            fail.push_back(tag + ": " + scs.violations.front().describe());

        std::optional<CutSet> uniq = unique_min_cut(inst.net, cert.point);
        if (!uniq)
            fail.push_back(tag + ": min cut not unique at certificate point");
        else if (!(*uniq == cert.cut))
            fail.push_back(tag + ": residual min cut is " + uniq->str());

        BruteForceOptions brute;
        brute.exec = Exec::serial; // already inside the per-certificate loop
        std::vector<CutSet> cuts = brute_force_min_cuts(inst.net, cert.point, brute);
        if (cuts.size() != 1 || !(cuts.front() == cert.cut))
            fail.push_back(tag + ": brute force found " + std::to_string(cuts.size()) +
                           " min cuts");
    });
    report.checks_run = 4 * count;
    for (const auto& slot : slots)
        for (const std::string& f : slot) report.failures.push_back(f);

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

enum class BoundStatus { proven, refuted, inconclusive };

// Sufficient integer check for 17*phi_n <= 2^(2^n * sqrt 2). Raising both
// sides to the 2^k-th power sharpens the dyadic exponent floor(2^(n+k)*sqrt2)
// until it separates the two sides (or we give up).
BoundStatus upper_envelope_status(int n, const BigInt& phi, int* rounds) {
    BigInt lhs = BigInt(17) * phi;
    for (int k = 0; k <= 8; ++k) {
        BigInt exponent_floor = BigInt::pow2(2 * n + 2 * k + 1).isqrt(); // floor(2^(n+k)*sqrt2)
        if (!exponent_floor.fits_long())
            break;
        unsigned long p = static_cast<unsigned long>(exponent_floor.to_long());
        BigInt powered = lhs.pow(1ul << k);
        if (rounds) *rounds = k;
        if (powered <= BigInt::pow2(p)) return BoundStatus::proven;
        if (powered > BigInt::pow2(p + 1)) return BoundStatus::refuted;
    }
    return BoundStatus::inconclusive;
}

} // namespace

VerificationReport verify_growth_bounds(int n_max) {
    if (n_max < 3) throw std::domain_error("growth bounds need n_max >= 3");
    auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.label = "growth-bounds";
    report.n = n_max;

    auto check = [&](bool ok, const std::string& what) {
        ++report.checks_run;
        if (!ok) report.failures.push_back(what);
    };

    // new internal arcs stay nonnegative, with exactly the last one zero
    for (int k = 2; k <= n_max; ++k) {
        FamilyInstance inst = build_family(k);
        for (int j = 1; j < k; ++j) {
            const Arc* arc = inst.net.find_arc(NodeId::internal(k), NodeId::internal(j));
            const Rational& c = arc->capacity.c;
            std::string name = "u_{" + std::to_string(k) + "," + std::to_string(j) + "}";
            if (j == k - 1)
                check(c.is_zero(), name + " expected 0, got " + c.str());
            else
                check(c.sign() > 0, name + " expected > 0, got " + c.str());
        }
    }

    for (int k = 3; k <= n_max; ++k) {
        FamilyConstants cur = family_constants(k);
        FamilyConstants prev = family_constants(k - 1);

        check(cur.phi >= BigInt(3) * prev.phi * prev.phi,
              "phi_" + std::to_string(k) + " < 3*phi_" + std::to_string(k - 1) + "^2");

        // 2^(2^k) <= 3*phi_k: the family really has doubly exponential growth
        check(BigInt::pow2(1ul << k) <= BigInt(3) * cur.phi,
              "2^(2^" + std::to_string(k) + ") > 3*phi_" + std::to_string(k));

        int rounds = 0;
        BoundStatus status = upper_envelope_status(k, cur.phi, &rounds);
        ++report.checks_run;
        if (status == BoundStatus::refuted)
            report.failures.push_back("17*phi_" + std::to_string(k) + " > 2^(2^" +
                                      std::to_string(k) + "*sqrt2)");
        else if (status == BoundStatus::inconclusive)
            report.notes.push_back("upper envelope inconclusive after dyadic refinement at n = " +
                                   std::to_string(k));
        else if (rounds > 0)
            report.notes.push_back("upper envelope at n = " + std::to_string(k) + " needed " +
                                   std::to_string(rounds) + " refinement rounds");
    }

    // envelope ingredients used by the cut-count estimate
    for (int k = 4; k <= n_max; ++k) {
        FamilyConstants low = family_constants(k - 2);
        FamilyConstants mid = family_constants(k - 1);
        BigInt sum_a(0), sum_b(0);
        for (const BigInt& a : low.a_s) sum_a += BigInt(3) * a;
        for (const BigInt& b : low.b_s) sum_b += b;
        check(sum_a <= mid.phi, "sum 3*a at level " + std::to_string(k - 2) + " exceeds phi_" +
                                    std::to_string(k - 1));
        check(Rational(sum_b) <= Rational(5, 48) * Rational(mid.phi),
              "sum b at level " + std::to_string(k - 2) + " exceeds (5/48)*phi_" +
                  std::to_string(k - 1));
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace pmcut
