#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ripsrank {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u, v; // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph: dense indices, CSR adjacency with
// sorted neighbor lists, original string labels.  Safe for concurrent reads.
class Graph {
public:
    Graph(std::size_t node_count, std::vector<Edge> edges,
          std::vector<std::string> labels);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t degree(NodeId v) const;
    std::span<const NodeId> neighbors(NodeId v) const;

    const std::string& label(NodeId v) const;
    const std::vector<std::string>& labels() const { return labels_; }
    // Index for a label, or -1 if absent.
    std::int64_t index_of(const std::string& label) const;

    bool has_edge(NodeId u, NodeId v) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
    std::vector<std::uint32_t> adj_offsets_; // CSR: node v's neighbors at
    std::vector<NodeId> adj_;                // adj_[offsets[v] .. offsets[v+1])
};

struct LoadStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

// Edge-list format: one edge per line, two whitespace-separated node tokens
// (extra tokens ignored), '#' starts a comment line, blank lines skipped.
// Tokens are interned in first-seen order.  Throws on a one-token line
// (message carries the line number) and on input with no edges at all.
Graph load_edge_list(std::istream& in, LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, LoadStats* stats = nullptr);

// Writes the graph back in the same format (labels, one edge per line);
// reloading the result reproduces the graph exactly.
void write_edge_list(const Graph& g, std::ostream& out);

enum class ThresholdConvention {
    MEAN_OVER_MEAN_SQUARE, // <k> / <k^2>
    HMF,                   // <k> / (<k^2> - <k>)
};

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t max_degree = 0;
    double avg_degree = 0.0;
    double beta_th = 0.0;
    ThresholdConvention convention = ThresholdConvention::MEAN_OVER_MEAN_SQUARE;
};

// Throws if every node has degree zero (threshold undefined).
GraphStats graph_stats(const Graph& g,
                       ThresholdConvention convention =
                           ThresholdConvention::MEAN_OVER_MEAN_SQUARE);

// Local clustering: 2*triangles(v) / (deg(v)*(deg(v)-1)); 0 when deg < 2.
double clustering_coefficient(const Graph& g, NodeId v);

// Components of the subgraph spanned by the active edges.  active[i]
// corresponds to g.edges()[i].  Nodes with no active incident edge belong to
// no component, so every returned component has size >= 2.
std::vector<std::vector<NodeId>>
connected_components(const Graph& g, const std::vector<bool>& active);

// Components of the full graph (all edges active).
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Erdos-Renyi G(n, p), deterministic for a fixed seed.  Labels are "0".."n-1".
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

} // namespace ripsrank
