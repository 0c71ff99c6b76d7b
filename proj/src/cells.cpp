#include "pmcut/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmcut {

namespace {

// cross product of (a - o) and (b - o); positive = left turn
Rational cross(const ParamPoint& o, const ParamPoint& a, const ParamPoint& b) {
    return (a.lambda - o.lambda) * (b.mu - o.mu) - (a.mu - o.mu) * (b.lambda - o.lambda);
}

bool on_segment(const ParamPoint& a, const ParamPoint& b, const ParamPoint& p) {
    if (!cross(a, b, p).is_zero()) return false;
    return min(a.lambda, b.lambda) <= p.lambda && p.lambda <= max(a.lambda, b.lambda) &&
           min(a.mu, b.mu) <= p.mu && p.mu <= max(a.mu, b.mu);
}

// Normalize a convex vertex loop: strip duplicates and collinear middles,
// collapse flat shapes to canonical segments/points, orient CCW, start at the
// lex-smallest vertex.
std::vector<ParamPoint> canonical(std::vector<ParamPoint> pts) {
    std::vector<ParamPoint> v;
    for (const ParamPoint& p : pts)
        if (v.empty() || !(v.back() == p)) v.push_back(p);
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    if (v.size() <= 1) return v;

    bool flat = true;
    for (std::size_t i = 2; i < v.size() && flat; ++i)
        flat = cross(v[0], v[1], v[i]).is_zero();
    if (flat) {
        ParamPoint lo = v[0], hi = v[0];
        for (const ParamPoint& p : v) {
            if (p < lo) lo = p;
            if (hi < p) hi = p;
        }
        if (lo == hi) return {lo};
        return {lo, hi};
    }

    // drop collinear middle vertices (incl. spikes) until stable
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() > 2; ++i) {
            const ParamPoint& prev = v[(i + v.size() - 1) % v.size()];
            const ParamPoint& nxt = v[(i + 1) % v.size()];
            if (cross(prev, v[i], nxt).is_zero()) {
                v.erase(v.begin() + i);
                changed = true;
                break;
            }
        }
    }

    Rational signed2(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const ParamPoint& a = v[i];
        const ParamPoint& b = v[(i + 1) % v.size()];
        signed2 += a.lambda * b.mu - b.lambda * a.mu;
    }
    if (signed2.sign() < 0) std::reverse(v.begin(), v.end());

    std::size_t start = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[start]) start = i;
    std::rotate(v.begin(), v.begin() + start, v.end());
    return v;
}

} // namespace

ConvexPolygon ConvexPolygon::box(const ParamPoint& lo, const ParamPoint& hi) {
    if (!(lo.lambda < hi.lambda) || !(lo.mu < hi.mu))
        throw std::invalid_argument("box corners must satisfy lo < hi componentwise");
    return ConvexPolygon({lo, {hi.lambda, lo.mu}, hi, {lo.lambda, hi.mu}});
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<ParamPoint> pts) {
    return ConvexPolygon(canonical(std::move(pts)));
}

Rational ConvexPolygon::area2() const {
    if (vertices_.size() < 3) return Rational(0);
    Rational total(0);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const ParamPoint& a = vertices_[i];
        const ParamPoint& b = vertices_[(i + 1) % vertices_.size()];
        total += a.lambda * b.mu - b.lambda * a.mu;
    }
    return total.sign() < 0 ? -total : total;
}

ConvexPolygon::Location ConvexPolygon::locate(const ParamPoint& p) const {
    if (vertices_.empty()) return Location::outside;
    if (vertices_.size() == 1)
        return p == vertices_[0] ? Location::boundary : Location::outside;
    if (vertices_.size() == 2)
        return on_segment(vertices_[0], vertices_[1], p) ? Location::boundary : Location::outside;
    bool edge = false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Rational c = cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p);
        if (c.sign() < 0) return Location::outside;
        if (c.is_zero()) edge = true;
    }
    return edge ? Location::boundary : Location::interior;
}

ConvexPolygon ConvexPolygon::clip(const AffineExpr& g) const {
    if (vertices_.empty()) return ConvexPolygon();
    std::vector<ParamPoint> out;
    std::size_t m = vertices_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const ParamPoint& cur = vertices_[i];
        const ParamPoint& nxt = vertices_[(i + 1) % m];
        Rational gc = affine_eval(g, cur);
        Rational gn = affine_eval(g, nxt);
        if (gc.sign() <= 0) out.push_back(cur);
        if ((gc.sign() < 0 && gn.sign() > 0) || (gc.sign() > 0 && gn.sign() < 0)) {
            Rational t = gc / (gc - gn);
            out.push_back({cur.lambda + t * (nxt.lambda - cur.lambda),
                           cur.mu + t * (nxt.mu - cur.mu)});
        }
    }
    return ConvexPolygon(canonical(std::move(out)));
}

namespace {

std::vector<AffineExpr> all_cut_forms(const ParamNetwork& net, int limit, Exec exec,
                                      const char* what) {
    if (net.n() > limit)
        throw LimitExceededError(std::string(what) + " limited to n <= " + std::to_string(limit) +
                                 ", network has n = " + std::to_string(net.n()));
    std::int64_t count = std::int64_t{1} << net.n();
    std::vector<AffineExpr> forms(count);
    parallel_for(count, exec, [&](std::int64_t mask) {
        forms[mask] = cut_capacity_affine(net, CutSet::from_mask(static_cast<std::uint64_t>(mask)));
    });
    return forms;
}

ConvexPolygon cell_against(const AffineExpr& f, const std::vector<AffineExpr>& others,
                           const ParamPoint& lo, const ParamPoint& hi) {
    ConvexPolygon poly = ConvexPolygon::box(lo, hi);
    for (const AffineExpr& g : others) {
        if (g == f) continue;
        AffineExpr diff = f - g;
        if (diff.is_constant()) {
            if (diff.c.sign() > 0) return ConvexPolygon();
            continue;
        }
        poly = poly.clip(diff);
        if (poly.empty()) break;
    }
    return poly;
}

} // namespace

ConvexPolygon cell_of(const ParamNetwork& net, const CutSet& s, const ParamPoint& box_lo,
                      const ParamPoint& box_hi, const CellOptions& opts) {
    if (net.n() < 64 && (s.mask() >> net.n()) != 0)
        throw std::domain_error("cut set mentions nodes beyond n");
    std::vector<AffineExpr> forms = all_cut_forms(net, opts.limit, opts.exec, "cell enumeration");
    return cell_against(forms[s.mask()], forms, box_lo, box_hi);
}

CellDiagram enumerate_cells(const ParamNetwork& net, const ParamPoint& box_lo,
                            const ParamPoint& box_hi, const CellOptions& opts) {
    std::vector<AffineExpr> forms = all_cut_forms(net, opts.limit, opts.exec, "cell enumeration");

    // one clip job per distinct capacity form
    std::map<AffineExpr, std::vector<std::uint64_t>> by_form;
    for (std::uint64_t mask = 0; mask < forms.size(); ++mask)
        by_form[forms[mask]].push_back(mask);
    std::vector<const AffineExpr*> distinct;
    distinct.reserve(by_form.size());
    for (const auto& [form, masks] : by_form) distinct.push_back(&form);

    std::vector<AffineExpr> contenders;
    contenders.reserve(distinct.size());
    for (const AffineExpr* f : distinct) contenders.push_back(*f);

    std::vector<ConvexPolygon> polys(distinct.size());
    parallel_for(static_cast<std::int64_t>(distinct.size()), opts.exec, [&](std::int64_t i) {
        polys[i] = cell_against(*distinct[i], contenders, box_lo, box_hi);
    });

    CellDiagram diagram;
    diagram.n = net.n();
    diagram.box_lo = box_lo;
    diagram.box_hi = box_hi;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        const std::vector<std::uint64_t>& masks = by_form.at(*distinct[i]);
        bool fat = polys[i].has_interior() && polys[i].area2().sign() > 0;
        if (fat && masks.size() > 1)
            throw CellOverlapError("cuts " + CutSet::from_mask(masks[0]).str() + " and " +
                                   CutSet::from_mask(masks[1]).str() +
                                   " share one capacity form over a region with interior");
        if (fat)
            diagram.cells.emplace(CutSet::from_mask(masks[0]), polys[i]);
        else
            for (std::uint64_t m : masks) diagram.degenerate.push_back(CutSet::from_mask(m));
    }
    std::sort(diagram.degenerate.begin(), diagram.degenerate.end());
    return diagram;
}

int count_distinct_min_cuts(const ParamNetwork& net, const ParamPoint& box_lo,
                            const ParamPoint& box_hi, const CellOptions& opts) {
    return static_cast<int>(enumerate_cells(net, box_lo, box_hi, opts).cells.size());
}

SweepResult northeast_sweep(const ParamNetwork& net, const std::vector<ParamPoint>& path,
                            const SweepOptions& opts) {
    if (path.empty()) throw std::invalid_argument("empty sweep path");
    if (validate_ssm(net) == SsmClass::NotSSM)
        throw NotSsmError("sweep requires a source-sink monotone network");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!leq_componentwise(path[i], path[i + 1]))
            throw NotMonotonePathError("path step " + std::to_string(i) +
                                       " is not componentwise non-decreasing");

    std::vector<AffineExpr> forms = all_cut_forms(net, opts.limit, opts.exec, "sweep");
    std::int64_t count = static_cast<std::int64_t>(forms.size());

    SweepResult result;
    auto emit = [&](Rational t0, Rational t1, std::uint64_t cut) {
        if (!result.segments.empty() && result.segments.back().cut.mask() == cut) {
            result.segments.back().t_end = std::move(t1);
            return;
        }
        result.segments.push_back({std::move(t0), std::move(t1), CutSet::from_mask(cut)});
    };

    // argmin by value then slope; the tied minimizers form a lattice whose
    // bottom element is their intersection
    auto best_cut_at = [&](const std::vector<Rational>& v0, const std::vector<Rational>& slope,
                           const Rational& tau, Rational* best_v0, Rational* best_slope) {
        std::uint64_t cut = 0;
        bool have = false;
        Rational bv, bs;
        for (std::int64_t m = 0; m < count; ++m) {
            Rational val = v0[m] + tau * slope[m];
            int cv = have ? rat_cmp(val, bv + tau * bs) : -1;
            int cs = cv == 0 ? rat_cmp(slope[m], bs) : 0;
            if (cv < 0 || (cv == 0 && cs < 0)) {
                bv = v0[m];
                bs = slope[m];
                cut = static_cast<std::uint64_t>(m);
                have = true;
            } else if (cv == 0 && cs == 0) {
                cut &= static_cast<std::uint64_t>(m);
            }
        }
        *best_v0 = bv;
        *best_slope = bs;
        return cut;
    };

    if (path.size() == 1) {
        std::vector<Rational> v0(count), slope(count, Rational(0));
        parallel_for(count, opts.exec,
                     [&](std::int64_t m) { v0[m] = affine_eval(forms[m], path[0]); });
        Rational bv, bs;
        std::uint64_t cut = best_cut_at(v0, slope, Rational(0), &bv, &bs);
        emit(Rational(0), Rational(0), cut);
        result.distinct.push_back(result.segments.back().cut);
        return result;
    }

    std::vector<Rational> v0(count), slope(count);
    for (std::size_t piece = 0; piece + 1 < path.size(); ++piece) {
        const ParamPoint& p = path[piece];
        const ParamPoint& q = path[piece + 1];
        Rational dl = q.lambda - p.lambda;
        Rational dm = q.mu - p.mu;
        parallel_for(count, opts.exec, [&](std::int64_t m) {
            v0[m] = affine_eval(forms[m], p);
            slope[m] = forms[m].a * dl + forms[m].b * dm;
        });

        Rational tau(0);
        for (;;) {
            Rational bv, bs;
            std::uint64_t cut = best_cut_at(v0, slope, tau, &bv, &bs);

            // earliest point where some steeper-decreasing form catches up
            Rational tau_next(1);
            bool crossing = false;
            for (std::int64_t m = 0; m < count; ++m) {
                if (!(slope[m] < bs)) continue;
                Rational root = (v0[m] - bv) / (bs - slope[m]);
                if (root > tau && (!crossing || root < tau_next)) {
                    tau_next = root;
                    crossing = true;
                }
            }
            Rational base(static_cast<long>(piece));
            if (!crossing || tau_next >= Rational(1)) {
                emit(base + tau, base + Rational(1), cut);
                break;
            }
            emit(base + tau, base + tau_next, cut);
            tau = tau_next;
        }
    }

    for (const SweepSegment& seg : result.segments)
        if (result.distinct.empty() || !(result.distinct.back() == seg.cut))
            result.distinct.push_back(seg.cut);
    return result;
}

} // namespace pmcut
