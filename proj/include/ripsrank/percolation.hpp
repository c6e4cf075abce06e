#pragma once

#include "ripsrank/graph.hpp"

#include <cstdint>
#include <vector>

namespace ripsrank {

// One sampled beta-graph, reduced to its retained connected components.
// Only nodes with at least one active incident edge take part, so every
// component has size >= 2; components of size <= threshold are discarded.
struct BetaSample {
    std::vector<std::vector<NodeId>> components;
    double beta = 0.0;
    std::uint32_t threshold = 0;
};

BetaSample sample_beta_graph(const Graph& g, double beta,
                             std::uint32_t threshold, std::uint64_t seed,
                             std::uint64_t sample_index);

// Exact bond-percolation law of the source's component, by enumeration over
// all 2^m edge subsets.  The component always counts the source itself, so
// expected_cc_size >= 1 and equals 1 exactly when beta = 0.
struct PercolationExact {
    NodeId source = 0;
    double beta = 0.0;
    double expected_cc_size = 0.0;
    std::vector<double> reach_prob;          // reach_prob[v]: Pr[v reached from
                                             // source]; 0 for the source itself
    std::vector<double> component_size_dist; // index s: Pr[|CC(source)| = s]
};

inline constexpr std::size_t kExactEdgeBudget = 22;

// Throws when edge_count > kExactEdgeBudget (2^m subsets are enumerated).
PercolationExact exact_percolation(const Graph& g, double beta, NodeId source);

} // namespace ripsrank
