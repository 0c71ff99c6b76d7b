#include "pmcut/family.hpp"

#include <stdexcept>

namespace pmcut {

void FlowAssignment::set(NodeId tail, NodeId head, Rational value) {
    flows_[std::make_pair(tail, head)] = std::move(value);
}

const Rational* FlowAssignment::find(NodeId tail, NodeId head) const {
    auto it = flows_.find(std::make_pair(tail, head));
    return it == flows_.end() ? nullptr : &it->second;
}

const Rational& FlowAssignment::at(NodeId tail, NodeId head) const {
    const Rational* r = find(tail, head);
    if (!r) throw MissingArcError("no flow for arc " + tail.str() + " -> " + head.str());
    return *r;
}

namespace {

// Constants for every level 1..n. levels[k-1] holds level k; theta/phi are
// zero at level 1 where the recursion has not started.
std::vector<FamilyConstants> constants_by_level(int n) {
    if (n < 1) throw std::domain_error("family level must be >= 1");
    std::vector<FamilyConstants> levels;
    levels.reserve(n);
    FamilyConstants cur;
    cur.n = 1;
    cur.a_s = {BigInt(1)};
    cur.b_s = {BigInt(1)};
    levels.push_back(cur);
    for (int k = 2; k <= n; ++k) {
        const FamilyConstants& prev = levels.back();
        BigInt theta = BigInt(3) * prev.a_s[k - 2];
        BigInt phi(4);
        if (k > 2) {
            BigInt sum(0);
            for (int j = 1; j < k; ++j)
                sum += theta * prev.b_s[j - 1] - BigInt(3) * prev.a_s[j - 1];
            phi = BigInt(4) * sum;
        }
        FamilyConstants next;
        next.n = k;
        next.theta = theta;
        next.phi = phi;
        next.a_s.resize(k);
        next.b_s.resize(k);
        for (int j = 1; j < k; ++j) {
            next.a_s[j - 1] = BigInt(4) * prev.a_s[j - 1];
            next.b_s[j - 1] = (BigInt(1) + theta) * prev.b_s[j - 1];
        }
        next.a_s[k - 1] = phi;
        next.b_s[k - 1] = BigInt(1);
        levels.push_back(std::move(next));
    }
    return levels;
}

void check_cut_in_range(int n, const CutSet& s) {
    if (n < 64 && (s.mask() >> n) != 0)
        throw std::domain_error("cut set mentions nodes beyond n");
}

ParamPoint point_for(const std::vector<FamilyConstants>& levels, const CutSet& s) {
    ParamPoint p = s.contains(1) ? ParamPoint{Rational(3, 4), Rational(3, 4)}
                                 : ParamPoint{Rational(1, 4), Rational(1, 4)};
    for (std::size_t k = 2; k <= levels.size(); ++k) {
        Rational theta(levels[k - 1].theta);
        Rational one_plus = Rational(1) + theta;
        if (s.contains(static_cast<int>(k)))
            p = {(p.lambda + Rational(3)) / Rational(4), p.mu / one_plus};
        else
            p = {p.lambda / Rational(4), (p.mu + theta) / one_plus};
    }
    return p;
}

FlowAssignment flow_for(const std::vector<FamilyConstants>& levels, const CutSet& s) {
    int n = static_cast<int>(levels.size());
    std::vector<Rational> xs(n + 1), xt(n + 1); // flow on s->j and j->t
    FlowAssignment x;
    ParamPoint p = s.contains(1) ? ParamPoint{Rational(3, 4), Rational(3, 4)}
                                 : ParamPoint{Rational(1, 4), Rational(1, 4)};
    xs[1] = xt[1] = s.contains(1) ? Rational(1) : Rational(1, 2);
    for (int k = 2; k <= n; ++k) {
        const FamilyConstants& prev = levels[k - 2];
        const FamilyConstants& cur = levels[k - 1];
        Rational theta(cur.theta);
        Rational one_plus = Rational(1) + theta;
        if (s.contains(k)) {
            // keeping node k on the source side: saturate the new internal arcs
            Rational internal_total(0);
            for (int j = 1; j < k; ++j) {
                Rational push(cur.theta * prev.b_s[j - 1]);
                xs[j] += Rational(BigInt(3) * prev.a_s[j - 1]);
                xt[j] += push;
                Rational w(cur.theta * prev.b_s[j - 1] - BigInt(3) * prev.a_s[j - 1]);
                x.set(NodeId::internal(k), NodeId::internal(j), w);
                internal_total += w;
            }
            Rational half_phi(cur.phi.div_exact(BigInt(2)));
            xs[k] = half_phi + internal_total;
            xt[k] = half_phi;
            p = {(p.lambda + Rational(3)) / Rational(4), p.mu / one_plus};
        } else {
            // node k stays on the sink side: route extra flow through the old nodes
            for (int j = 1; j < k; ++j) {
                Rational push(cur.theta * prev.b_s[j - 1]);
                xs[j] += push;
                xt[j] += push;
                x.set(NodeId::internal(k), NodeId::internal(j), Rational(0));
            }
            p = {p.lambda / Rational(4), (p.mu + theta) / one_plus};
            // s->k carries exactly its capacity phi*lambda + mu at the level-k point
            xs[k] = xt[k] = Rational(cur.phi) * p.lambda + p.mu;
        }
    }
    for (int j = 1; j <= n; ++j) {
        x.set(NodeId::source(), NodeId::internal(j), xs[j]);
        x.set(NodeId::internal(j), NodeId::sink(), xt[j]);
    }
    return x;
}

} // namespace

FamilyConstants family_constants(int n) {
    if (n < 2) throw std::domain_error("family constants need n >= 2");
    return constants_by_level(n).back();
}

FamilyInstance build_family(int n, const BuildOptions& opts) {
    if (n < 1) throw std::domain_error("family level must be >= 1");
    if (opts.with_certificates && n > opts.certificate_limit)
        throw LimitExceededError("certificate generation limited to n <= " +
                                 std::to_string(opts.certificate_limit));
    auto levels = constants_by_level(n);

    ParamNetwork net(n);
    std::vector<BigInt> sink(n + 1);
    sink[1] = BigInt(1);
    for (int k = 2; k <= n; ++k) {
        const FamilyConstants& prev = levels[k - 2];
        const FamilyConstants& cur = levels[k - 1];
        for (int j = 1; j < k; ++j) {
            sink[j] += cur.theta * prev.b_s[j - 1];
            BigInt w = cur.theta * prev.b_s[j - 1] - BigInt(3) * prev.a_s[j - 1];
            net.add_arc(NodeId::internal(k), NodeId::internal(j),
                        AffineExpr{Rational(0), Rational(0), Rational(w)});
        }
        sink[k] = cur.phi.div_exact(BigInt(2));
    }
    const FamilyConstants& top = levels.back();
    for (int j = 1; j <= n; ++j) {
        net.add_arc(NodeId::source(), NodeId::internal(j),
                    AffineExpr{Rational(top.a_s[j - 1]), Rational(top.b_s[j - 1]), Rational(0)});
        net.add_arc(NodeId::internal(j), NodeId::sink(),
                    AffineExpr{Rational(0), Rational(0), Rational(sink[j])});
    }

    FamilyInstance inst{std::move(net), {}};
    if (opts.with_certificates) {
        std::int64_t count = std::int64_t{1} << n;
        inst.certificates.resize(count);
        parallel_for(count, opts.exec, [&](std::int64_t mask) {
            CutSet s = CutSet::from_mask(static_cast<std::uint64_t>(mask));
            inst.certificates[mask] = Certificate{s, point_for(levels, s), flow_for(levels, s)};
        });
    }
    return inst;
}

ParamPoint family_point(int n, const CutSet& s) {
    auto levels = constants_by_level(n);
    check_cut_in_range(n, s);
    return point_for(levels, s);
}

FlowAssignment family_flow(int n, const CutSet& s) {
    auto levels = constants_by_level(n);
    check_cut_in_range(n, s);
    return flow_for(levels, s);
}

} // namespace pmcut
