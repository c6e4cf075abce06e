#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"
#include "ripsrank/percolation.hpp"
#include "ripsrank/sir.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace ripsrank;
using namespace ripsrank::testing;

TEST_CASE("sir_run endpoints") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});

    // beta = 0: only the seed is ever removed.
    for (NodeId v = 0; v < 5; ++v) {
        PhiloxStream rng(1, v);
        CHECK(sir_run(g, v, 0.0, rng) == 1);
    }

    // beta = 1: deterministic flood fills the seed's component.
    PhiloxStream r0(2, 0), r3(2, 1), r4(2, 2);
    CHECK(sir_run(g, 0, 1.0, r0) == 3);
    CHECK(sir_run(g, 3, 1.0, r3) == 2);
    CHECK(sir_run(g, 4, 1.0, r4) == 2);
}

TEST_CASE("single edge: mean spread is 1 + beta") {
    Graph g = make_graph(2, {{0, 1}});
    SirConfig cfg;
    cfg.beta = 0.3;
    cfg.runs = 100000;
    cfg.master_seed = 6;
    GroundTruth gt = ground_truth(g, cfg);
    // Removed count is 1 or 2, variance beta(1-beta).
    const double se = std::sqrt(cfg.beta * (1 - cfg.beta) / cfg.runs);
    CHECK(std::abs(gt.mean_spread[0] - (1 + cfg.beta)) < 4 * se);
    CHECK(std::abs(gt.mean_spread[1] - (1 + cfg.beta)) < 4 * se);
}

TEST_CASE("path end at beta 0.5 spreads 1.75 on average") {
    Graph g = path_graph(3);
    SirConfig cfg;
    cfg.beta = 0.5;
    cfg.runs = 100000;
    cfg.master_seed = 10;
    GroundTruth gt = ground_truth(g, cfg);
    // Spread from an end takes values 1, 2, 3 w.p. 1/2, 1/4, 1/4:
    // mean 1.75, variance 0.6875.
    const double se = std::sqrt(0.6875 / cfg.runs);
    CHECK(std::abs(gt.mean_spread[0] - 1.75) < 4 * se);
    CHECK(std::abs(gt.mean_spread[2] - 1.75) < 4 * se);
}

TEST_CASE("ground truth at beta 1 equals component sizes exactly") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    SirConfig cfg;
    cfg.beta = 1.0;
    cfg.runs = 50;
    GroundTruth gt = ground_truth(g, cfg);
    const double expect[] = {3, 3, 3, 2, 2, 1};
    for (NodeId v = 0; v < 6; ++v)
        CHECK(gt.mean_spread[v] == doctest::Approx(expect[v]).epsilon(1e-12));
}

TEST_CASE("star center spreads strictly more than the leaves") {
    Graph g = star_graph(3);
    SirConfig cfg;
    cfg.beta = 0.3;
    cfg.runs = 40000;
    cfg.master_seed = 3;
    GroundTruth gt = ground_truth(g, cfg);
    for (NodeId leaf = 1; leaf <= 3; ++leaf)
        CHECK(gt.mean_spread[0] > gt.mean_spread[leaf]);
}

TEST_CASE("monte-carlo means track the exact percolation oracle") {
    Graph g = triangle_with_pendant();
    SirConfig cfg;
    cfg.beta = 0.5;
    cfg.runs = 100000;
    cfg.master_seed = 17;
    GroundTruth gt = ground_truth(g, cfg);
    // Exact per-source variances of |CC(source)| at beta = 0.5.
    const double var[] = {0.9375, 1.246094, 1.246094, 1.609375};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double exact = exact_percolation(g, cfg.beta, v).expected_cc_size;
        const double se = std::sqrt(var[v] / cfg.runs);
        REQUIRE(std::abs(gt.mean_spread[v] - exact) < 4 * se);
    }
}

TEST_CASE("spread is bounded by component size and floored at 1") {
    Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    SirConfig cfg;
    cfg.beta = 0.7;
    cfg.runs = 2000;
    cfg.master_seed = 5;
    GroundTruth gt = ground_truth(g, cfg);
    const double comp_size[] = {4, 4, 4, 4, 2, 2, 1};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        REQUIRE(gt.mean_spread[v] >= 1.0);
        REQUIRE(gt.mean_spread[v] <= comp_size[v]);
    }
}

TEST_CASE("ground truth is reproducible across worker counts") {
    Graph g = gen_er(40, 0.1, 2);
    SirConfig cfg;
    cfg.beta = 0.25;
    cfg.runs = 500;
    cfg.master_seed = 77;
    cfg.workers = 1;
    GroundTruth a = ground_truth(g, cfg);
    cfg.workers = 4;
    GroundTruth b = ground_truth(g, cfg);
    cfg.workers = 0;
    GroundTruth c = ground_truth(g, cfg);
    CHECK(a.mean_spread == b.mean_spread);
    CHECK(a.mean_spread == c.mean_spread);
}

TEST_CASE("ranking: beta 1 ties everyone on a connected graph") {
    Graph g = cycle_graph(5);
    SirConfig cfg;
    cfg.beta = 1.0;
    cfg.runs = 10;
    Ranking r = ground_truth_ranking(ground_truth(g, cfg), g);
    for (const auto& e : r.entries) CHECK(e.rank == 1);
}

TEST_CASE("ranking: competition ranks on a tied spread vector") {
    Graph g = path_graph(3);
    GroundTruth gt;
    gt.mean_spread = {3.2, 1.1, 3.2};
    gt.runs_used = 1;
    gt.beta = 0.5;
    Ranking r = ground_truth_ranking(gt, g);
    auto ranks = r.ranks_by_node();
    CHECK(ranks[0] == 1);
    CHECK(ranks[1] == 3);
    CHECK(ranks[2] == 1);
}

TEST_CASE("high-run ranking matches the oracle ranking on an asymmetric graph") {
    // All six exact expectations are distinct (minimum gap ~0.059 at
    // beta = 0.5), so 10^6 runs (standard error ~0.002) must reproduce the
    // oracle order exactly, ranks included.
    Graph g = make_graph(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 4}, {4, 5}, {1, 4}});
    std::vector<double> exact = oracle::oracle_expected_sizes(g, 0.5);
    Ranking want = make_ranking(exact, g);

    SirConfig cfg;
    cfg.beta = 0.5;
    cfg.runs = 1000000;
    cfg.master_seed = 23;
    Ranking got = ground_truth_ranking(ground_truth(g, cfg), g);

    REQUIRE(got.entries.size() == want.entries.size());
    for (std::size_t i = 0; i < got.entries.size(); ++i) {
        CHECK(got.entries[i].node == want.entries[i].node);
        CHECK(got.entries[i].rank == want.entries[i].rank);
    }
}

TEST_CASE("ground truth TSV round-trips exactly") {
    Graph g = triangle_with_pendant();
    SirConfig cfg;
    cfg.beta = 0.35;
    cfg.runs = 3000;
    cfg.master_seed = 12;
    GroundTruth gt = ground_truth(g, cfg);

    std::ostringstream out;
    write_ground_truth_tsv(gt, g, out);
    std::istringstream in(out.str());
    GroundTruth back = read_ground_truth_tsv(in, g);
    CHECK(back.mean_spread == gt.mean_spread); // bit-exact via %.17g
    CHECK(back.runs_used == gt.runs_used);

    // Unknown node label in the file is an error.
    std::istringstream bad("node\tmean_spread\truns\nnope\t1.5\t10\n");
    CHECK_THROWS_AS(read_ground_truth_tsv(bad, g), std::runtime_error);
}
