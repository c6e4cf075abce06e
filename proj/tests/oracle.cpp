#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace ripsrank::oracle {

namespace {

void check_budget(const Graph& g, const OracleBudget& b) {
    if (g.edge_count() > b.max_edges)
        throw std::invalid_argument("oracle: graph exceeds edge budget");
    if (g.node_count() > b.max_nodes)
        throw std::invalid_argument("oracle: graph exceeds node budget");
}

// BFS over the subset-selected edges; adjacency rebuilt per subset, naively.
std::vector<bool> reachable_under(const Graph& g, std::uint64_t subset,
                                  NodeId source) {
    const auto& edges = g.edges();
    std::vector<std::vector<NodeId>> adj(g.node_count());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (subset & (std::uint64_t(1) << e)) {
            adj[edges[e].u].push_back(edges[e].v);
            adj[edges[e].v].push_back(edges[e].u);
        }
    }
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
        NodeId v = queue.back();
        queue.pop_back();
        for (NodeId w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return seen;
}

double subset_probability(std::uint64_t subset, std::size_t m, double beta) {
    int a = 0;
    for (std::size_t e = 0; e < m; ++e)
        if (subset & (std::uint64_t(1) << e)) ++a;
    return std::pow(beta, a) * std::pow(1.0 - beta, static_cast<double>(m) - a);
}

} // namespace

double oracle_sir_expectation(const Graph& g, double beta, NodeId source,
                              const OracleBudget& budget) {
    check_budget(g, budget);
    const std::size_t m = g.edge_count();
    double expectation = 0.0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        const auto seen = reachable_under(g, subset, source);
        std::size_t size = 0;
        for (bool s : seen) size += s ? 1 : 0;
        expectation += subset_probability(subset, m, beta) * static_cast<double>(size);
    }
    return expectation;
}

double oracle_reach_probability(const Graph& g, double beta, NodeId source,
                                NodeId node, const OracleBudget& budget) {
    check_budget(g, budget);
    if (node == source) return 0.0;
    const std::size_t m = g.edge_count();
    double prob = 0.0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset)
        if (reachable_under(g, subset, source)[node])
            prob += subset_probability(subset, m, beta);
    return prob;
}

double oracle_in_component_probability(const Graph& g, double beta, NodeId node,
                                       const OracleBudget& budget) {
    check_budget(g, budget);
    const std::size_t m = g.edge_count();
    const auto& edges = g.edges();
    double prob = 0.0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        bool incident = false;
        for (std::size_t e = 0; e < m && !incident; ++e)
            if ((subset & (std::uint64_t(1) << e)) &&
                (edges[e].u == node || edges[e].v == node))
                incident = true;
        if (incident) prob += subset_probability(subset, m, beta);
    }
    return prob;
}

std::uint32_t oracle_coreness(const Graph& g, NodeId v) {
    for (std::uint32_t c = static_cast<std::uint32_t>(g.degree(v));; --c) {
        // Repeatedly delete nodes of degree < c; v's coreness is the largest
        // c for which v survives.
        std::vector<bool> alive(g.node_count(), true);
        std::vector<std::size_t> deg(g.node_count());
        for (NodeId u = 0; u < g.node_count(); ++u) deg[u] = g.degree(u);
        bool changed = true;
        while (changed) {
            changed = false;
            for (NodeId u = 0; u < g.node_count(); ++u) {
                if (alive[u] && deg[u] < c) {
                    alive[u] = false;
                    changed = true;
                    for (NodeId w : g.neighbors(u))
                        if (alive[w]) --deg[w];
                }
            }
        }
        if (alive[v] || c == 0) return c;
    }
}

double oracle_tau(const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("oracle_tau: length mismatch");
    if (a.size() < 2) throw std::invalid_argument("oracle_tau: need >= 2 entries");
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = (static_cast<double>(a[i]) - static_cast<double>(a[j])) *
                             (static_cast<double>(b[i]) - static_cast<double>(b[j]));
            if (d > 0) sum += 1.0;
            else if (d < 0) sum -= 1.0;
        }
    }
    return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::vector<double> oracle_expected_sizes(const Graph& g, double beta,
                                          const OracleBudget& budget) {
    std::vector<double> out(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        out[v] = oracle_sir_expectation(g, beta, v, budget);
    return out;
}

} // namespace ripsrank::oracle
