#pragma once

#include "ripsrank/graph.hpp"
#include "ripsrank/ranking.hpp"

#include <cstdint>
#include <vector>

namespace ripsrank {

// k-shell peel with per-node sub-iteration bookkeeping.  Shell k is peeled by
// simultaneous sweeps: each sweep removes every node whose residual degree is
// <= k, repeating until none remain, then k increments.  For node v removed
// in sweep n of a shell that took m sweeps, iteration[v] = {n, m}.
// Isolated nodes get coreness 0.
struct ShellDecomposition {
    std::vector<std::uint32_t> coreness;
    struct Iteration {
        std::uint32_t n = 0; // 1-based sweep index within the shell
        std::uint32_t m = 0; // total sweeps for that shell
    };
    std::vector<Iteration> iteration;
};

ShellDecomposition k_shell(const Graph& g);

Ranking degree_centrality(const Graph& g);

// Coreness as a ranking (score = shell index).
Ranking k_shell_ranking(const Graph& g);

// Mixed-degree decomposition: peel thresholds apply to
// k^m = k^r + lambda * k^e, with k^e counting already-removed neighbors.
// lambda = 0 reproduces the k-shell ordering.
Ranking mdd(const Graph& g, double lambda = 0.7);

// Neighborhood-coreness family: Cnc(v) = sum of neighbor coreness,
// Cnc+(v) = sum of neighbor Cnc values.
std::vector<double> cnc(const Graph& g);
Ranking cnc_plus(const Graph& g);

// k-shell with iteration factor: delta_u = ks(u) * (1 + n/m) from the shell
// sweep bookkeeping, IC_u = delta_u * deg(u) + sum over neighbors v of
// delta_v * deg(v).
Ranking ks_if(const Graph& g);

// Largest h such that v has >= h neighbors of degree >= h.
Ranking h_index(const Graph& g);

// ClusterRank, undirected form: CR(i) = 10^(-c_i) * sum_{j in N(i)} (deg(j)+1).
Ranking cluster_rank(const Graph& g);

} // namespace ripsrank
