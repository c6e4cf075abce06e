#pragma once

#include "ripsrank/graph.hpp"
#include "ripsrank/ranking.hpp"

#include <cstdint>
#include <vector>

namespace ripsrank {

enum class RipsMode { UNIFORM, WEIGHTED };

struct RipsConfig {
    double beta = 0.1;
    std::uint32_t samples = 200;  // number of beta-graphs (theta')
    std::uint32_t threshold = 1;  // keep components with |cc| > threshold
    RipsMode mode = RipsMode::WEIGHTED;
    std::uint64_t master_seed = 0;
    // 0 = one worker per hardware thread.  Output does not depend on this.
    std::uint32_t workers = 0;
};

struct InfluenceWeights {
    std::vector<double> weights; // W_H, indexed by node
    RipsConfig config;
    std::uint64_t hyperedge_count = 0; // retained components over all samples
};

// Accumulates hyper-edge weight over cfg.samples sampled beta-graphs:
// UNIFORM adds 1 per retained component containing u, WEIGHTED adds
// |cc| * beta * deg_G(u).  Deterministic in (g, cfg) for any worker count.
InfluenceWeights rips_weights(const Graph& g, const RipsConfig& cfg);

// Sort by weight descending; ties keep equal rank, listed by degree then index.
Ranking rips_rank(const InfluenceWeights& w, const Graph& g);

// Sample-size bound theta >= (ln 2 + k ln n) / (influence_lb * eps^2) * (8 + 2 eps) * n,
// rounded up.  Advisory: practical sample counts sit far below it.
std::uint64_t sample_size_bound(double epsilon, double k, std::size_t n,
                                double influence_lb);

} // namespace ripsrank
