#pragma once

#include "ripsrank/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ripsrank {

struct RankEntry {
    NodeId node;
    double score;
    std::uint32_t rank; // competition rank: 1 + #entries with strictly greater score
};

// Scores sorted non-increasing; ties share the smallest applicable rank.
// Order within a tie is degree descending, then node index ascending, so the
// listing is deterministic even though tied entries share a rank.
struct Ranking {
    std::vector<RankEntry> entries;

    std::size_t size() const { return entries.size(); }
    // rank indexed by node id.
    std::vector<std::uint32_t> ranks_by_node() const;
};

// Builds a Ranking from per-node scores (scores[v] for node v of g).
Ranking make_ranking(const std::vector<double>& scores, const Graph& g);

// TSV with header "rank\tnode\tscore"; nodes as labels, scores with 6 decimals.
void write_ranking_tsv(const Ranking& r, const Graph& g, std::ostream& out);

// A ranking read back from TSV keeps labels instead of graph indices.
struct LabeledRanking {
    std::vector<std::string> labels;
    std::vector<double> scores;
    std::vector<std::uint32_t> ranks;
};
LabeledRanking read_ranking_tsv(std::istream& in);

} // namespace ripsrank
