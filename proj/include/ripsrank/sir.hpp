#pragma once

#include "ripsrank/graph.hpp"
#include "ripsrank/philox.hpp"
#include "ripsrank/ranking.hpp"

#include <cstdint>
#include <vector>

namespace ripsrank {

struct SirConfig {
    double beta = 0.1;
    std::uint32_t runs = 10000; // Monte-Carlo runs per seed node
    std::uint64_t master_seed = 0;
    std::uint32_t workers = 0; // 0 = hardware concurrency; no effect on output
};

struct GroundTruth {
    std::vector<double> mean_spread; // per node, seed included, in [1, n]
    std::uint32_t runs_used = 0;
    double beta = 0.0;
};

// One synchronous-round SIR epidemic from seed_node; every infected node gets
// one Bernoulli(beta) trial per susceptible neighbor, then recovers.  Returns
// the final removed count, seed included.
std::uint32_t sir_run(const Graph& g, NodeId seed_node, double beta,
                      PhiloxStream& rng);

// mean_spread[v] averages sir_run over cfg.runs runs; run r of node v draws
// from the stream (master_seed, v, r), so results are independent of worker
// count and aggregation order.
GroundTruth ground_truth(const Graph& g, const SirConfig& cfg);

// Same sort/tie/rank contract as rips_rank, keyed by mean_spread.
Ranking ground_truth_ranking(const GroundTruth& gt, const Graph& g);

// TSV "node\tmean_spread\truns".
void write_ground_truth_tsv(const GroundTruth& gt, const Graph& g,
                            std::ostream& out);
GroundTruth read_ground_truth_tsv(std::istream& in, const Graph& g);

} // namespace ripsrank
