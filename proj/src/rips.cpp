#include "ripsrank/rips.hpp"

#include "ripsrank/kernels.hpp"
#include "ripsrank/philox.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ripsrank {

namespace {

// Per-worker accumulation state.  Union-find scratch uses epoch stamps so a
// new sample costs O(touched) instead of O(n).
struct SampleScratch {
    std::vector<NodeId> parent;
    std::vector<std::uint32_t> size;
    std::vector<std::uint64_t> stamp;
    std::vector<NodeId> touched;
    std::vector<std::uint32_t> mask;
    std::uint64_t epoch = 0;

    explicit SampleScratch(std::size_t n, std::size_t m)
        : parent(n), size(n), stamp(n, 0), mask((m + 31) / 32) {
        touched.reserve(n);
    }

    void begin_sample() {
        ++epoch;
        touched.clear();
    }

    void touch(NodeId v) {
        if (stamp[v] != epoch) {
            stamp[v] = epoch;
            parent[v] = v;
            size[v] = 1;
            touched.push_back(v);
        }
    }

    NodeId find(NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(NodeId a, NodeId b) {
        NodeId ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (size[ra] < size[rb]) std::swap(ra, rb);
        parent[rb] = ra;
        size[ra] += size[rb];
    }
};

} // namespace

InfluenceWeights rips_weights(const Graph& g, const RipsConfig& cfg) {
    if (cfg.beta < 0.0 || cfg.beta > 1.0)
        throw std::invalid_argument("rips_weights: beta outside [0,1]");
    if (cfg.samples == 0)
        throw std::invalid_argument("rips_weights: samples must be >= 1");

    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    const auto& edges = g.edges();
    const std::uint64_t thr = bernoulli_threshold(cfg.beta);
    const auto masker = kern::bernoulli_words();

    unsigned workers = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, cfg.samples);

    // Integer accumulators keep the reduction exact: UNIFORM counts retained
    // components per node, WEIGHTED sums their sizes; the beta*deg factor is
    // applied once at the end.  Summing integers is order-independent, so the
    // result cannot depend on the worker count.
    std::vector<std::vector<std::uint64_t>> acc(workers,
                                                std::vector<std::uint64_t>(n, 0));
    std::vector<std::uint64_t> hyperedges(workers, 0);
    std::atomic<std::uint32_t> next_chunk{0};
    constexpr std::uint32_t kChunk = 64;
    const std::uint32_t nchunks = (cfg.samples + kChunk - 1) / kChunk;

    auto work = [&](unsigned wid) {
        SampleScratch scratch(n, m);
        auto& mine = acc[wid];
        std::uint64_t my_hyper = 0;
        for (;;) {
            const std::uint32_t chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= nchunks) break;
            const std::uint32_t lo = chunk * kChunk;
            const std::uint32_t hi = std::min(cfg.samples, lo + kChunk);
            for (std::uint32_t s = lo; s < hi; ++s) {
                scratch.begin_sample();
                masker(cfg.master_seed, s, thr, m, scratch.mask.data());
                for (std::size_t w = 0; w < scratch.mask.size(); ++w) {
                    std::uint32_t bits = scratch.mask[w];
                    while (bits) {
                        const std::size_t e = 32 * w + std::countr_zero(bits);
                        bits &= bits - 1;
                        scratch.touch(edges[e].u);
                        scratch.touch(edges[e].v);
                        scratch.unite(edges[e].u, edges[e].v);
                    }
                }
                for (NodeId v : scratch.touched) {
                    const NodeId root = scratch.find(v);
                    const std::uint32_t cc = scratch.size[root];
                    if (cc <= cfg.threshold) continue;
                    mine[v] += (cfg.mode == RipsMode::UNIFORM) ? 1 : cc;
                    if (v == root) ++my_hyper;
                }
            }
        }
        hyperedges[wid] += my_hyper;
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned wid = 0; wid < workers; ++wid) pool.emplace_back(work, wid);
        for (auto& t : pool) t.join();
    }

    InfluenceWeights out;
    out.config = cfg;
    out.weights.assign(n, 0.0);
    for (unsigned wid = 0; wid < workers; ++wid) out.hyperedge_count += hyperedges[wid];

    std::vector<std::uint64_t> total(n, 0);
    for (unsigned wid = 0; wid < workers; ++wid)
        for (std::size_t v = 0; v < n; ++v) total[v] += acc[wid][v];

    if (cfg.mode == RipsMode::UNIFORM) {
        for (std::size_t v = 0; v < n; ++v)
            out.weights[v] = static_cast<double>(total[v]);
    } else {
        for (std::size_t v = 0; v < n; ++v)
            out.weights[v] = static_cast<double>(total[v]) * cfg.beta *
                             static_cast<double>(g.degree(static_cast<NodeId>(v)));
    }
    return out;
}

Ranking rips_rank(const InfluenceWeights& w, const Graph& g) {
    if (w.weights.size() != g.node_count())
        throw std::invalid_argument("rips_rank: weights do not cover the graph");
    return make_ranking(w.weights, g);
}

std::uint64_t sample_size_bound(double epsilon, double k, std::size_t n,
                                double influence_lb) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("sample_size_bound: epsilon outside (0,1]");
    if (k <= 0.0) throw std::invalid_argument("sample_size_bound: k must be positive");
    if (n < 2) throw std::invalid_argument("sample_size_bound: n must be >= 2");
    if (influence_lb <= 0.0)
        throw std::invalid_argument("sample_size_bound: influence lower bound must be positive");
    if (influence_lb > static_cast<double>(n))
        throw std::invalid_argument("sample_size_bound: influence lower bound exceeds n");

    const double nd = static_cast<double>(n);
    const double theta = (std::log(2.0) + k * std::log(nd)) /
                         (influence_lb * epsilon * epsilon) *
                         (8.0 + 2.0 * epsilon) * nd;
    return static_cast<std::uint64_t>(std::ceil(theta));
}

} // namespace ripsrank
