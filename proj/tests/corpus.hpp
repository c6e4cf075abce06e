#pragma once

// Deterministic test fixtures: small named graphs plus the enumerated corpus
// of every non-isomorphic connected graph with at most 6 nodes and at most
// 8 edges (88 graphs), which backs the oracle-equivalence and estimator
// acceptance checks.

#include "ripsrank/graph.hpp"

#include <utility>
#include <vector>

namespace ripsrank::testing {

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

Graph path_graph(std::size_t n);            // 0-1-...-(n-1)
Graph star_graph(std::size_t leaves);       // node 0 is the center
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph triangle_with_pendant();              // triangle 0-1-2, pendant 3 on 0
Graph square_with_diagonal();               // 4-cycle + diagonal 0-2

// Built once on first use; order is fixed (nodes ascending, then the
// enumeration order of the canonical representatives).
const std::vector<Graph>& connected_corpus();

} // namespace ripsrank::testing
