#include "doctest.h"

#include "corpus.hpp"
#include "oracle.hpp"
#include "ripsrank/metrics.hpp"
#include "ripsrank/philox.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace ripsrank;
using namespace ripsrank::testing;

namespace {

// A ranking whose node v carries the given rank vector entry; scores are
// chosen so make_ranking reproduces exactly those competition ranks.
Ranking ranking_from_ranks(const std::vector<std::uint32_t>& ranks,
                           const Graph& g) {
    std::vector<double> scores(ranks.size());
    for (std::size_t v = 0; v < ranks.size(); ++v)
        scores[v] = double(ranks.size()) - double(ranks[v]);
    Ranking r = make_ranking(scores, g);
    // Sanity: the construction must realize the requested ranks.
    auto got = r.ranks_by_node();
    REQUIRE(got == ranks);
    return r;
}

} // namespace

TEST_CASE("kendall tau on rank vectors") {
    CHECK(kendall_tau({1, 2, 3}, {1, 2, 3}) == doctest::Approx(1.0));
    CHECK(kendall_tau({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
    CHECK(kendall_tau({1, 2, 3}, {1, 3, 2}) == doctest::Approx(1.0 / 3.0));
    // Ties contribute zero for their pairs.
    CHECK(kendall_tau({1, 1, 3}, {1, 2, 3}) == doctest::Approx(2.0 / 3.0));

    CHECK_THROWS_AS(kendall_tau({1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(kendall_tau({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("kendall tau on rankings") {
    Graph g = path_graph(4);
    Ranking a = ranking_from_ranks({1, 2, 3, 4}, g);
    Ranking b = ranking_from_ranks({4, 3, 2, 1}, g);
    CHECK(kendall_tau(a, a) == doctest::Approx(1.0));
    CHECK(kendall_tau(a, b) == doctest::Approx(-1.0));
    CHECK(kendall_tau(a, b) == doctest::Approx(kendall_tau(b, a)));
}

TEST_CASE("kendall tau matches the textbook double loop") {
    PhiloxStream rng(2024, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.next_below(11); // n in [2, 12]
        std::vector<std::uint32_t> a(n), b(n);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(a[i], a[rng.next_below(std::uint32_t(i + 1))]);
            std::swap(b[i], b[rng.next_below(std::uint32_t(i + 1))]);
        }
        const double fast = kendall_tau(a, b);
        const double slow = oracle::oracle_tau(a, b);
        REQUIRE(fast == doctest::Approx(slow).epsilon(1e-12));
    }
}

TEST_CASE("monotonicity fixtures") {
    Graph g4 = path_graph(4);
    CHECK(monotonicity(ranking_from_ranks({1, 2, 3, 4}, g4)) ==
          doctest::Approx(1.0));
    CHECK(monotonicity(ranking_from_ranks({1, 1, 1, 1}, g4)) ==
          doctest::Approx(0.0));
    // Tie pattern {2,1,1}: M = (1 - 2/12)^2 = 25/36.
    CHECK(monotonicity(ranking_from_ranks({1, 1, 3, 4}, g4)) ==
          doctest::Approx(25.0 / 36.0));
}

TEST_CASE("monotonicity depends only on the tie partition") {
    Graph g = path_graph(5);
    // Same partition sizes {2, 2, 1} at different rank values.
    const double a = monotonicity(ranking_from_ranks({1, 1, 3, 3, 5}, g));
    const double b = monotonicity(ranking_from_ranks({1, 2, 2, 4, 4}, g));
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("rank distribution") {
    Graph g3 = path_graph(3);
    auto all_tied = rank_distribution(ranking_from_ranks({1, 1, 1}, g3));
    REQUIRE(all_tied.size() == 1);
    CHECK(all_tied.at(1) == doctest::Approx(1.0));

    auto unique = rank_distribution(ranking_from_ranks({1, 2, 3}, g3));
    REQUIRE(unique.size() == 3);
    for (const auto& [rank, frac] : unique)
        CHECK(frac == doctest::Approx(1.0 / 3.0));

    auto mixed = rank_distribution(ranking_from_ranks({1, 1, 3}, g3));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed.at(1) == doctest::Approx(2.0 / 3.0));
    CHECK(mixed.at(3) == doctest::Approx(1.0 / 3.0));

    double total = 0.0;
    for (const auto& [rank, frac] : mixed) total += frac;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("evaluate bundles tau, monotonicity, histogram") {
    Graph g = path_graph(4);
    Ranking ref = ranking_from_ranks({1, 2, 3, 4}, g);
    Ranking cand = ranking_from_ranks({1, 1, 3, 4}, g);
    EvalReport rep = evaluate(ref, cand);
    CHECK(rep.n == 4);
    CHECK(rep.kendall_tau == doctest::Approx(kendall_tau(ref, cand)));
    CHECK(rep.monotonicity == doctest::Approx(25.0 / 36.0));
    CHECK(rep.rank_histogram.at(1) == doctest::Approx(0.5));

    std::ostringstream out;
    write_eval_report(rep, out);
    const std::string text = out.str();
    CHECK(text.find("tau\t") != std::string::npos);
    CHECK(text.find("monotonicity\t") != std::string::npos);
    CHECK(text.find("n\t4") != std::string::npos);
}

TEST_CASE("tau is invariant under a common relabeling") {
    Graph g = gen_er(10, 0.4, 77);
    PhiloxStream rng(5, 5);
    std::vector<std::uint32_t> a(10), b(10);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    for (std::size_t i = 9; i > 0; --i) {
        std::swap(a[i], a[rng.next_below(std::uint32_t(i + 1))]);
        std::swap(b[i], b[rng.next_below(std::uint32_t(i + 1))]);
    }
    const double before = kendall_tau(a, b);

    // Apply one permutation to both rank vectors (same node relabeling).
    std::vector<std::uint32_t> pa(10), pb(10);
    std::vector<std::size_t> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 9; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(std::uint32_t(i + 1))]);
    for (std::size_t v = 0; v < 10; ++v) {
        pa[perm[v]] = a[v];
        pb[perm[v]] = b[v];
    }
    CHECK(kendall_tau(pa, pb) == doctest::Approx(before).epsilon(1e-12));
}
