#include "ripsrank/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ripsrank {

namespace {

// Rank per node id, after checking the two rankings cover the same node set.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
aligned_ranks(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("kendall_tau: rankings cover different node counts");

    std::vector<NodeId> nodes_a, nodes_b;
    for (const auto& e : a.entries) nodes_a.push_back(e.node);
    for (const auto& e : b.entries) nodes_b.push_back(e.node);
    std::sort(nodes_a.begin(), nodes_a.end());
    std::sort(nodes_b.begin(), nodes_b.end());
    if (nodes_a != nodes_b)
        throw std::invalid_argument("kendall_tau: rankings cover different node sets");
    if (std::adjacent_find(nodes_a.begin(), nodes_a.end()) != nodes_a.end())
        throw std::invalid_argument("kendall_tau: duplicate node in ranking");

    const NodeId max_node = nodes_a.back();
    std::vector<std::uint32_t> ra(max_node + 1, 0), rb(max_node + 1, 0);
    for (const auto& e : a.entries) ra[e.node] = e.rank;
    for (const auto& e : b.entries) rb[e.node] = e.rank;

    // Compact to the common node list so absent ids (if ids are sparse)
    // don't enter the pair loop.
    std::vector<std::uint32_t> ca, cb;
    ca.reserve(nodes_a.size());
    cb.reserve(nodes_a.size());
    for (NodeId v : nodes_a) {
        ca.push_back(ra[v]);
        cb.push_back(rb[v]);
    }
    return {std::move(ca), std::move(cb)};
}

} // namespace

double kendall_tau(const std::vector<std::uint32_t>& a,
                   const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("kendall_tau: sequence lengths differ");
    const std::size_t n = a.size();
    if (n < 2) throw std::invalid_argument("kendall_tau: need at least 2 entries");

    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::int64_t da = static_cast<std::int64_t>(a[i]) - a[j];
            const std::int64_t db = static_cast<std::int64_t>(b[i]) - b[j];
            const std::int64_t prod = da * db;
            sum += (prod > 0) - (prod < 0);
        }
    }
    return 2.0 * static_cast<double>(sum) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

double kendall_tau(const Ranking& reference, const Ranking& candidate) {
    auto [ra, rb] = aligned_ranks(reference, candidate);
    return kendall_tau(ra, rb);
}

double monotonicity(const Ranking& r) {
    const std::size_t n = r.size();
    if (n < 2) throw std::invalid_argument("monotonicity: need at least 2 entries");

    std::map<std::uint32_t, std::uint64_t> counts;
    for (const auto& e : r.entries) ++counts[e.rank];

    double tie_mass = 0.0;
    for (const auto& [rank, nr] : counts)
        tie_mass += static_cast<double>(nr) * static_cast<double>(nr - 1);
    const double frac =
        tie_mass / (static_cast<double>(n) * static_cast<double>(n - 1));
    return (1.0 - frac) * (1.0 - frac);
}

std::map<std::uint32_t, double> rank_distribution(const Ranking& r) {
    std::map<std::uint32_t, double> out;
    if (r.entries.empty()) return out;
    for (const auto& e : r.entries) out[e.rank] += 1.0;
    for (auto& [rank, frac] : out) frac /= static_cast<double>(r.size());
    return out;
}

EvalReport evaluate(const Ranking& reference, const Ranking& candidate) {
    EvalReport rep;
    rep.kendall_tau = kendall_tau(reference, candidate);
    rep.monotonicity = monotonicity(candidate);
    rep.rank_histogram = rank_distribution(candidate);
    rep.n = candidate.size();
    return rep;
}

void write_eval_report(const EvalReport& report, std::ostream& out) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", report.kendall_tau);
    out << "tau\t" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.6f", report.monotonicity);
    out << "monotonicity\t" << buf << '\n';
    out << "n\t" << report.n << '\n';
    for (const auto& [rank, frac] : report.rank_histogram) {
        std::snprintf(buf, sizeof buf, "%.6f", frac);
        out << "rank\t" << rank << '\t' << buf << '\n';
    }
}

} // namespace ripsrank
