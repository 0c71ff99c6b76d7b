#include "pmcut/network.hpp"

#include <sstream>

namespace pmcut {

std::string CutSet::str() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 1; i <= 64; ++i) {
        if (!contains(i)) continue;
        if (!first) out << ',';
        out << i;
        first = false;
    }
    out << '}';
    return out.str();
}

ParamNetwork::ParamNetwork(int n) : n_(n) {
    if (n < 0) throw std::domain_error("negative node count");
    if (n > 64) throw std::domain_error("at most 64 internal nodes supported");
}

void ParamNetwork::check_endpoint(NodeId v) const {
    if (v.is_internal() && v.index() > n_)
        throw std::domain_error("internal node index exceeds n");
}

void ParamNetwork::add_arc(NodeId tail, NodeId head, AffineExpr capacity) {
    check_endpoint(tail);
    check_endpoint(head);
    if (tail == head) throw std::domain_error("self-loop");
    if (head.is_source()) throw std::domain_error("arc enters the source");
    if (tail.is_sink()) throw std::domain_error("arc leaves the sink");
    auto key = std::make_pair(tail, head);
    if (index_.count(key))
        throw DuplicateArcError("parallel arc " + tail.str() + " -> " + head.str());
    index_.emplace(key, arcs_.size());
    arcs_.push_back(Arc{tail, head, std::move(capacity)});
}

const Arc* ParamNetwork::find_arc(NodeId tail, NodeId head) const {
    auto it = index_.find(std::make_pair(tail, head));
    return it == index_.end() ? nullptr : &arcs_[it->second];
}

bool ParamNetwork::operator==(const ParamNetwork& o) const {
    if (n_ != o.n_ || arcs_.size() != o.arcs_.size()) return false;
    // arc order is not significant
    for (const Arc& a : arcs_) {
        const Arc* b = o.find_arc(a.tail, a.head);
        if (!b || !(b->capacity == a.capacity)) return false;
    }
    return true;
}

SsmClass validate_ssm(const ParamNetwork& net) {
    bool strict = true;
    for (const Arc& arc : net.arcs()) {
        const AffineExpr& u = arc.capacity;
        bool source_arc = arc.tail.is_source() && !arc.head.is_sink();
        bool sink_arc = arc.head.is_sink();
        if (source_arc) {
            if (u.a.sign() < 0 || u.b.sign() < 0) return SsmClass::NotSSM;
            if (!(u.a.sign() > 0 && u.b.sign() > 0)) strict = false;
        } else if (sink_arc) {
            if (u.a.sign() > 0 || u.b.sign() > 0) return SsmClass::NotSSM;
            if (!u.is_constant()) strict = false;
        } else {
            if (!u.is_constant()) return SsmClass::NotSSM;
        }
    }
    return strict ? SsmClass::StrictSSM : SsmClass::GeneralSSM;
}

AffineExpr cut_capacity_affine(const ParamNetwork& net, const CutSet& s) {
    AffineExpr total{Rational(0), Rational(0), Rational(0)};
    for (const Arc& arc : net.arcs())
        if (arc_crosses(arc, s)) total += arc.capacity;
    return total;
}

Rational cut_capacity(const ParamNetwork& net, const CutSet& s, const ParamPoint& p) {
    Rational total(0);
    for (const Arc& arc : net.arcs())
        if (arc_crosses(arc, s)) total += affine_eval(arc.capacity, p);
    return total;
}

int arc_count_nonzero(const ParamNetwork& net) {
    int count = 0;
    for (const Arc& arc : net.arcs())
        if (!arc.capacity.is_zero()) ++count;
    return count;
}

} // namespace pmcut
