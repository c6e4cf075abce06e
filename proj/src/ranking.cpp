#include "ripsrank/ranking.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ripsrank {

std::vector<std::uint32_t> Ranking::ranks_by_node() const {
    NodeId max_node = 0;
    for (const auto& e : entries) max_node = std::max(max_node, e.node);
    std::vector<std::uint32_t> ranks(entries.empty() ? 0 : max_node + 1, 0);
    for (const auto& e : entries) ranks[e.node] = e.rank;
    return ranks;
}

Ranking make_ranking(const std::vector<double>& scores, const Graph& g) {
    if (scores.size() != g.node_count())
        throw std::invalid_argument("make_ranking: score count does not match graph");

    std::vector<NodeId> order(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    Ranking r;
    r.entries.reserve(order.size());
    std::uint32_t rank = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && scores[order[i]] != scores[order[i - 1]])
            rank = static_cast<std::uint32_t>(i + 1);
        r.entries.push_back({order[i], scores[order[i]], rank});
    }
    return r;
}

void write_ranking_tsv(const Ranking& r, const Graph& g, std::ostream& out) {
    out << "rank\tnode\tscore\n";
    char buf[64];
    for (const auto& e : r.entries) {
        std::snprintf(buf, sizeof buf, "%.6f", e.score);
        out << e.rank << '\t' << g.label(e.node) << '\t' << buf << '\n';
    }
}

LabeledRanking read_ranking_tsv(std::istream& in) {
    LabeledRanking r;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("rank\t", 0) == 0) continue; // header
        std::istringstream ls(line);
        std::uint32_t rank;
        std::string label;
        double score;
        if (!(ls >> rank >> label >> score))
            throw std::runtime_error("ranking TSV line " + std::to_string(line_no) +
                                     ": expected rank, node, score");
        r.ranks.push_back(rank);
        r.labels.push_back(label);
        r.scores.push_back(score);
    }
    if (r.labels.empty())
        throw std::runtime_error("ranking TSV: no entries");
    return r;
}

} // namespace ripsrank
