#include "pmcut/maxflow.hpp"

#include <deque>

namespace pmcut {

namespace {

struct ResidualEdge {
    int from;
    int to;
    Rational cap;
};

// Residual graph with integer node encoding: 0 = s, 1..n internal, n+1 = t.
struct Residual {
    int n;
    std::vector<ResidualEdge> edges; // forward at even index, twin reverse at odd
    std::vector<std::vector<int>> adj;
    std::vector<int> arc_edge; // network arc index -> forward edge index

    explicit Residual(const ParamNetwork& net, const ParamPoint& p)
        : n(net.n()), adj(net.n() + 2) {
        arc_edge.reserve(net.arcs().size());
        for (const Arc& arc : net.arcs()) {
            Rational cap = affine_eval(arc.capacity, p);
            if (cap.sign() < 0)
                throw NegativeCapacityError("capacity of arc " + arc.tail.str() + " -> " +
                                            arc.head.str() + " is " + cap.str() + " at (" +
                                            p.lambda.str() + ", " + p.mu.str() + ")");
            int u = encode(arc.tail);
            int v = encode(arc.head);
            arc_edge.push_back(static_cast<int>(edges.size()));
            adj[u].push_back(static_cast<int>(edges.size()));
            edges.push_back({u, v, std::move(cap)});
            adj[v].push_back(static_cast<int>(edges.size()));
            edges.push_back({v, u, Rational(0)});
        }
    }

    int encode(NodeId v) const {
        if (v.is_source()) return 0;
        if (v.is_sink()) return n + 1;
        return v.index();
    }

    int source() const { return 0; }
    int sink() const { return n + 1; }
};

} // namespace

FlowResult max_flow(const ParamNetwork& net, const ParamPoint& p) {
    Residual g(net, p);
    const int s = g.source(), t = g.sink();
    std::vector<int> pred(g.n + 2);

    for (;;) {
        // BFS for a shortest augmenting path
        std::fill(pred.begin(), pred.end(), -1);
        pred[s] = -2;
        std::deque<int> queue{s};
        while (!queue.empty() && pred[t] == -1) {
            int u = queue.front();
            queue.pop_front();
            for (int e : g.adj[u]) {
                int v = g.edges[e].to;
                if (pred[v] == -1 && g.edges[e].cap.sign() > 0) {
                    pred[v] = e;
                    queue.push_back(v);
                }
            }
        }
        if (pred[t] == -1) break;

        Rational bottleneck = g.edges[pred[t]].cap;
        for (int v = g.edges[pred[t]].from; v != s; v = g.edges[pred[v]].from)
            bottleneck = min(bottleneck, g.edges[pred[v]].cap);
        for (int v = t; v != s; v = g.edges[pred[v]].from) {
            int e = pred[v];
            g.edges[e].cap -= bottleneck;
            g.edges[e ^ 1].cap += bottleneck;
        }
    }

    FlowResult result;
    result.value = Rational(0);
    const auto& arcs = net.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        // flow on the original arc = what moved to the reverse edge
        const Rational& f = g.edges[g.arc_edge[i] ^ 1].cap;
        result.flow.set(arcs[i].tail, arcs[i].head, f);
        if (arcs[i].tail.is_source()) result.value += f;
    }

    // forward reachability from s over positive residual edges
    std::vector<char> from_s(g.n + 2, 0);
    from_s[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int e : g.adj[u]) {
            int v = g.edges[e].to;
            if (!from_s[v] && g.edges[e].cap.sign() > 0) {
                from_s[v] = 1;
                queue.push_back(v);
            }
        }
    }
    // backward reachability to t (adj holds both directions, so walk twins)
    std::vector<char> to_t(g.n + 2, 0);
    to_t[t] = 1;
    queue = {t};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : g.adj[v]) {
            // edge e leaves v; its twin enters v, from edges[e].to
            int u = g.edges[e].to;
            if (!to_t[u] && g.edges[e ^ 1].cap.sign() > 0) {
                to_t[u] = 1;
                queue.push_back(u);
            }
        }
    }

    CutSet minimal, maximal;
    for (int j = 1; j <= g.n; ++j) {
        if (from_s[j]) minimal = minimal.with(j);
        if (!to_t[j]) maximal = maximal.with(j);
    }
    result.min_cut_minimal = minimal;
    result.min_cut_maximal = maximal;
    return result;
}

std::optional<CutSet> unique_min_cut(const ParamNetwork& net, const ParamPoint& p) {
    FlowResult r = max_flow(net, p);
    if (r.min_cut_minimal == r.min_cut_maximal) return r.min_cut_minimal;
    return std::nullopt;
}

std::vector<CutSet> brute_force_min_cuts(const ParamNetwork& net, const ParamPoint& p,
                                         const BruteForceOptions& opts) {
    if (net.n() > opts.limit)
        throw LimitExceededError("brute force limited to n <= " + std::to_string(opts.limit) +
                                 ", network has n = " + std::to_string(net.n()));

    const auto& arcs = net.arcs();
    std::vector<Rational> cap(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        cap[i] = affine_eval(arcs[i].capacity, p);

    std::int64_t count = std::int64_t{1} << net.n();
    std::vector<Rational> value(count);
    parallel_for(count, opts.exec, [&](std::int64_t mask) {
        CutSet s = CutSet::from_mask(static_cast<std::uint64_t>(mask));
        Rational total(0);
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (arc_crosses(arcs[i], s)) total += cap[i];
        value[mask] = std::move(total);
    });

    std::vector<CutSet> best;
    for (std::int64_t mask = 0; mask < count; ++mask) {
        if (mask == 0 || value[mask] < value[best.front().mask()]) {
            best.clear();
            best.push_back(CutSet::from_mask(mask));
        } else if (value[mask] == value[best.front().mask()]) {
            best.push_back(CutSet::from_mask(mask));
        }
    }
    return best;
}

} // namespace pmcut
