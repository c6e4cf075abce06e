#include "ripsrank/sir.hpp"

#include <atomic>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ripsrank {

namespace {

// One epidemic; stamp[v] == epoch marks infected-or-removed.  Shared by
// sir_run and ground_truth so both consume the stream identically.
std::uint32_t run_epidemic(const Graph& g, NodeId seed_node, std::uint64_t thr,
                           PhiloxStream& rng, std::vector<std::uint64_t>& stamp,
                           std::uint64_t epoch, std::vector<NodeId>& frontier,
                           std::vector<NodeId>& next) {
    frontier.clear();
    next.clear();
    stamp[seed_node] = epoch;
    frontier.push_back(seed_node);
    std::uint32_t removed = 1;

    while (!frontier.empty()) {
        for (NodeId v : frontier) {
            for (NodeId w : g.neighbors(v)) {
                if (stamp[w] == epoch) continue; // not susceptible
                if (rng.bernoulli(thr)) {
                    stamp[w] = epoch;
                    next.push_back(w);
                    ++removed;
                }
            }
        }
        frontier.swap(next);
        next.clear();
    }
    return removed;
}

} // namespace

std::uint32_t sir_run(const Graph& g, NodeId seed_node, double beta,
                      PhiloxStream& rng) {
    if (seed_node >= g.node_count())
        throw std::out_of_range("sir_run: seed node out of range");
    if (beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("sir_run: beta outside [0,1]");

    std::vector<std::uint64_t> stamp(g.node_count(), 0);
    std::vector<NodeId> frontier, next;
    return run_epidemic(g, seed_node, bernoulli_threshold(beta), rng, stamp, 1,
                        frontier, next);
}

GroundTruth ground_truth(const Graph& g, const SirConfig& cfg) {
    if (cfg.beta < 0.0 || cfg.beta > 1.0)
        throw std::invalid_argument("ground_truth: beta outside [0,1]");
    if (cfg.runs == 0)
        throw std::invalid_argument("ground_truth: runs must be >= 1");

    const std::size_t n = g.node_count();
    const std::uint64_t thr = bernoulli_threshold(cfg.beta);

    unsigned workers = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));

    std::vector<std::uint64_t> totals(n, 0);
    std::atomic<std::uint32_t> next_node{0};

    auto work = [&] {
        std::vector<std::uint64_t> stamp(n, 0);
        std::vector<NodeId> frontier, next;
        std::uint64_t epoch = 0;
        for (;;) {
            const std::uint32_t v = next_node.fetch_add(1, std::memory_order_relaxed);
            if (v >= n) break;
            std::uint64_t sum = 0;
            for (std::uint32_t r = 0; r < cfg.runs; ++r) {
                // Run r of node v owns stream (v, r): worker split can't
                // change what any individual run draws.
                PhiloxStream rng(cfg.master_seed,
                                 (static_cast<std::uint64_t>(v) << 32) | r);
                sum += run_epidemic(g, v, thr, rng, stamp, ++epoch, frontier, next);
            }
            totals[v] = sum;
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    GroundTruth gt;
    gt.beta = cfg.beta;
    gt.runs_used = cfg.runs;
    gt.mean_spread.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        gt.mean_spread[v] =
            static_cast<double>(totals[v]) / static_cast<double>(cfg.runs);
    return gt;
}

Ranking ground_truth_ranking(const GroundTruth& gt, const Graph& g) {
    if (gt.mean_spread.size() != g.node_count())
        throw std::invalid_argument("ground_truth_ranking: spread does not cover the graph");
    return make_ranking(gt.mean_spread, g);
}

void write_ground_truth_tsv(const GroundTruth& gt, const Graph& g,
                            std::ostream& out) {
    out << "node\tmean_spread\truns\n";
    char buf[64];
    for (NodeId v = 0; v < g.node_count(); ++v) {
        // %.17g round-trips exactly, so a cached file reproduces the ranking.
        std::snprintf(buf, sizeof buf, "%.17g", gt.mean_spread[v]);
        out << g.label(v) << '\t' << buf << '\t' << gt.runs_used << '\n';
    }
}

GroundTruth read_ground_truth_tsv(std::istream& in, const Graph& g) {
    GroundTruth gt;
    gt.mean_spread.assign(g.node_count(), -1.0);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("node\t", 0) == 0) continue;
        std::istringstream ls(line);
        std::string label;
        double mean;
        std::uint32_t runs;
        if (!(ls >> label >> mean >> runs))
            throw std::runtime_error("ground truth TSV line " + std::to_string(line_no) +
                                     ": expected node, mean_spread, runs");
        const std::int64_t v = g.index_of(label);
        if (v < 0)
            throw std::runtime_error("ground truth TSV: unknown node '" + label + "'");
        gt.mean_spread[static_cast<std::size_t>(v)] = mean;
        gt.runs_used = runs;
    }
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (gt.mean_spread[v] < 0.0)
            throw std::runtime_error("ground truth TSV: missing node '" + g.label(static_cast<NodeId>(v)) + "'");
    return gt;
}

} // namespace ripsrank
