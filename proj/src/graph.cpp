#include "ripsrank/graph.hpp"

#include "ripsrank/philox.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ripsrank {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
    if (labels_.size() != node_count)
        throw std::invalid_argument("graph: label count does not match node count");

    label_index_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        if (!label_index_.emplace(labels_[i], static_cast<NodeId>(i)).second)
            throw std::invalid_argument("graph: duplicate label '" + labels_[i] + "'");
    }

    std::vector<std::uint32_t> deg(node_count, 0);
    for (auto& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.v >= node_count) throw std::invalid_argument("graph: edge index out of range");
        ++deg[e.u];
        ++deg[e.v];
    }

    adj_offsets_.assign(node_count + 1, 0);
    for (std::size_t v = 0; v < node_count; ++v)
        adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_.resize(adj_offsets_[node_count]);

    std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& e : edges_) {
        adj_[cursor[e.u]++] = e.v;
        adj_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < node_count; ++v)
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
    for (std::size_t v = 0; v < node_count; ++v) {
        auto b = adj_.begin() + adj_offsets_[v];
        auto e = adj_.begin() + adj_offsets_[v + 1];
        if (std::adjacent_find(b, e) != e)
            throw std::invalid_argument("graph: duplicate edge");
    }
}

std::size_t Graph::degree(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("degree: node index out of range");
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("neighbors: node index out of range");
    return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
}

const std::string& Graph::label(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("label: node index out of range");
    return labels_[v];
}

std::int64_t Graph::index_of(const std::string& label) const {
    auto it = label_index_.find(label);
    return it == label_index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    auto nb = neighbors(degree(u) <= degree(v) ? u : v);
    NodeId other = degree(u) <= degree(v) ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

Graph load_edge_list(std::istream& in, LoadStats* stats) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    LoadStats local;

    auto intern = [&](const std::string& tok) -> NodeId {
        auto [it, inserted] = index.try_emplace(tok, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(tok);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;      // blank line
        if (a[0] == '#') continue;     // comment
        if (!(ls >> b))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two node tokens, found one");
        NodeId u = intern(a), v = intern(b);
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        NodeId lo = std::min(u, v), hi = std::max(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
        if (!seen.insert(key).second) {
            ++local.duplicate_edges_dropped;
            continue;
        }
        edges.push_back({lo, hi});
    }

    if (edges.empty())
        throw std::runtime_error("edge list: no edges found in input");

    if (stats) *stats = local;
    const std::size_t node_count = labels.size();
    return Graph(node_count, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::string& path, LoadStats* stats) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list file: " + path);
    return load_edge_list(in, stats);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

GraphStats graph_stats(const Graph& g, ThresholdConvention convention) {
    if (g.node_count() == 0)
        throw std::invalid_argument("graph_stats: empty graph");

    GraphStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    s.convention = convention;

    double k1 = 0.0, k2 = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double d = static_cast<double>(g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
        k1 += d;
        k2 += d * d;
    }
    k1 /= static_cast<double>(g.node_count());
    k2 /= static_cast<double>(g.node_count());
    s.avg_degree = k1;

    if (k2 == 0.0)
        throw std::runtime_error("graph_stats: epidemic threshold undefined (all degrees zero)");
    if (convention == ThresholdConvention::MEAN_OVER_MEAN_SQUARE) {
        s.beta_th = k1 / k2;
    } else {
        if (k2 - k1 <= 0.0)
            throw std::runtime_error("graph_stats: HMF threshold undefined (<k^2> <= <k>)");
        s.beta_th = k1 / (k2 - k1);
    }
    return s;
}

double clustering_coefficient(const Graph& g, NodeId v) {
    std::size_t d = g.degree(v);
    if (d < 2) return 0.0;
    auto nb = g.neighbors(v);
    std::size_t links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) ++links;
    return 2.0 * static_cast<double>(links) /
           (static_cast<double>(d) * static_cast<double>(d - 1));
}

namespace {

// Minimal union-find with path halving; used by both component routines.
struct UnionFind {
    std::vector<NodeId> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<NodeId>(i);
    }
    NodeId find(NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<std::vector<NodeId>>
connected_components(const Graph& g, const std::vector<bool>& active) {
    if (active.size() != g.edge_count())
        throw std::invalid_argument("connected_components: active mask size mismatch");

    UnionFind uf(g.node_count());
    std::vector<bool> touched(g.node_count(), false);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!active[i]) continue;
        uf.unite(edges[i].u, edges[i].v);
        touched[edges[i].u] = true;
        touched[edges[i].v] = true;
    }

    std::unordered_map<NodeId, std::size_t> slot;
    std::vector<std::vector<NodeId>> comps;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!touched[v]) continue;
        NodeId root = uf.find(v);
        auto [it, inserted] = slot.try_emplace(root, comps.size());
        if (inserted) comps.emplace_back();
        comps[it->second].push_back(v);
    }
    return comps;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    // Full-graph variant: singletons included.
    UnionFind uf(g.node_count());
    for (const auto& e : g.edges()) uf.unite(e.u, e.v);
    std::unordered_map<NodeId, std::size_t> slot;
    std::vector<std::vector<NodeId>> comps;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        NodeId root = uf.find(v);
        auto [it, inserted] = slot.try_emplace(root, comps.size());
        if (inserted) comps.emplace_back();
        comps[it->second].push_back(v);
    }
    return comps;
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_er: n must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_er: p outside [0,1]");

    std::vector<Edge> edges;
    const std::uint64_t total = n * (n - 1) / 2;

    // Unranks monotonically increasing pair indices into (u, v), u < v,
    // row-major over u; the cursor persists across calls so the whole
    // generation is O(n + edges).
    std::uint64_t row_u = 0, row_base = 0, row_len = n - 1;
    auto pair_at = [&](std::uint64_t idx) -> Edge {
        while (idx >= row_base + row_len) {
            row_base += row_len;
            ++row_u;
            --row_len;
        }
        return {static_cast<NodeId>(row_u),
                static_cast<NodeId>(row_u + 1 + (idx - row_base))};
    };

    PhiloxStream rng(seed, /*stream=*/0);
    if (p >= 1.0) {
        for (std::uint64_t i = 0; i < total; ++i) edges.push_back(pair_at(i));
    } else if (p > 0.0) {
        // Geometric jumps between successful pairs; same law as per-pair coins
        // but O(edges) draws.
        const double log1mp = std::log1p(-p);
        double idx = -1.0;
        while (true) {
            double u = rng.next_unit();
            idx += 1.0 + std::floor(std::log1p(-u) / log1mp);
            if (idx >= static_cast<double>(total)) break;
            edges.push_back(pair_at(static_cast<std::uint64_t>(idx)));
        }
    }

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Graph(n, std::move(edges), std::move(labels));
}

} // namespace ripsrank
