#include "ripsrank/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ripsrank {

ShellDecomposition k_shell(const Graph& g) {
    const std::size_t n = g.node_count();
    ShellDecomposition sd;
    sd.coreness.assign(n, 0);
    sd.iteration.assign(n, {});

    std::vector<std::uint32_t> rdeg(n);
    std::vector<bool> alive(n, true);
    for (NodeId v = 0; v < n; ++v) rdeg[v] = static_cast<std::uint32_t>(g.degree(v));

    std::size_t remaining = n;
    std::vector<NodeId> sweep;
    std::vector<std::pair<NodeId, std::uint32_t>> shell_members; // node, sweep no.

    for (std::uint32_t k = 0; remaining > 0; ++k) {
        shell_members.clear();
        std::uint32_t sweeps = 0;
        for (;;) {
            // One simultaneous sweep: residual degrees are read before any
            // removal of this sweep takes effect.
            sweep.clear();
            for (NodeId v = 0; v < n; ++v)
                if (alive[v] && rdeg[v] <= k) sweep.push_back(v);
            if (sweep.empty()) break;
            ++sweeps;
            for (NodeId v : sweep) {
                alive[v] = false;
                shell_members.emplace_back(v, sweeps);
            }
            for (NodeId v : sweep)
                for (NodeId w : g.neighbors(v))
                    if (alive[w]) --rdeg[w];
            remaining -= sweep.size();
        }
        for (auto [v, s] : shell_members) {
            sd.coreness[v] = k;
            sd.iteration[v] = {s, sweeps};
        }
    }
    return sd;
}

Ranking degree_centrality(const Graph& g) {
    std::vector<double> score(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        score[v] = static_cast<double>(g.degree(v));
    return make_ranking(score, g);
}

Ranking k_shell_ranking(const Graph& g) {
    const auto sd = k_shell(g);
    std::vector<double> score(sd.coreness.begin(), sd.coreness.end());
    return make_ranking(score, g);
}

Ranking mdd(const Graph& g, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("mdd: lambda outside [0,1]");

    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> kr(n), ke(n, 0);
    std::vector<bool> alive(n, true);
    std::vector<double> score(n, 0.0);
    for (NodeId v = 0; v < n; ++v) kr[v] = static_cast<std::uint32_t>(g.degree(v));

    auto mixed = [&](NodeId v) { return kr[v] + lambda * ke[v]; };

    std::size_t remaining = n;
    std::vector<NodeId> sweep;
    while (remaining > 0) {
        double t = std::numeric_limits<double>::infinity();
        for (NodeId v = 0; v < n; ++v)
            if (alive[v]) t = std::min(t, mixed(v));
        // Peel everything whose mixed degree falls to t, cascading like the
        // plain k-shell peel.
        for (;;) {
            sweep.clear();
            for (NodeId v = 0; v < n; ++v)
                if (alive[v] && mixed(v) <= t + 1e-9) sweep.push_back(v);
            if (sweep.empty()) break;
            for (NodeId v : sweep) {
                alive[v] = false;
                score[v] = t;
            }
            for (NodeId v : sweep)
                for (NodeId w : g.neighbors(v))
                    if (alive[w]) {
                        --kr[w];
                        ++ke[w];
                    }
            remaining -= sweep.size();
        }
    }
    return make_ranking(score, g);
}

std::vector<double> cnc(const Graph& g) {
    const auto sd = k_shell(g);
    std::vector<double> out(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v)) out[v] += static_cast<double>(sd.coreness[w]);
    return out;
}

Ranking cnc_plus(const Graph& g) {
    const auto base = cnc(g);
    std::vector<double> out(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v)) out[v] += base[w];
    return make_ranking(out, g);
}

Ranking ks_if(const Graph& g) {
    const auto sd = k_shell(g);
    const std::size_t n = g.node_count();
    std::vector<double> delta(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto it = sd.iteration[v];
        delta[v] = static_cast<double>(sd.coreness[v]) *
                   (1.0 + static_cast<double>(it.n) / static_cast<double>(it.m));
    }
    std::vector<double> score(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        score[v] = delta[v] * static_cast<double>(g.degree(v));
        for (NodeId w : g.neighbors(v))
            score[v] += delta[w] * static_cast<double>(g.degree(w));
    }
    return make_ranking(score, g);
}

Ranking h_index(const Graph& g) {
    std::vector<double> score(g.node_count(), 0.0);
    std::vector<std::size_t> nbr_deg;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        nbr_deg.clear();
        for (NodeId w : g.neighbors(v)) nbr_deg.push_back(g.degree(w));
        std::sort(nbr_deg.begin(), nbr_deg.end(), std::greater<>());
        std::size_t h = 0;
        while (h < nbr_deg.size() && nbr_deg[h] >= h + 1) ++h;
        score[v] = static_cast<double>(h);
    }
    return make_ranking(score, g);
}

Ranking cluster_rank(const Graph& g) {
    std::vector<double> score(g.node_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double sum = 0.0;
        for (NodeId w : g.neighbors(v)) sum += static_cast<double>(g.degree(w)) + 1.0;
        score[v] = std::pow(10.0, -clustering_coefficient(g, v)) * sum;
    }
    return make_ranking(score, g);
}

} // namespace ripsrank
