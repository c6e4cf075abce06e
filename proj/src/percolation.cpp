#include "ripsrank/percolation.hpp"

#include "ripsrank/kernels.hpp"
#include "ripsrank/philox.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace ripsrank {

BetaSample sample_beta_graph(const Graph& g, double beta,
                             std::uint32_t threshold, std::uint64_t seed,
                             std::uint64_t sample_index) {
    if (beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("sample_beta_graph: beta outside [0,1]");

    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    const auto& edges = g.edges();

    std::vector<std::uint32_t> mask((m + 31) / 32);
    kern::bernoulli_words()(seed, sample_index, bernoulli_threshold(beta), m,
                            mask.data());

    // Union-find over active edges only; untouched nodes never enter V_beta.
    std::vector<NodeId> parent(n);
    for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<NodeId>(v);
    std::vector<std::uint32_t> size(n, 1);
    std::vector<bool> touched(n, false);

    auto find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (std::size_t w = 0; w < mask.size(); ++w) {
        std::uint32_t bits = mask[w];
        while (bits) {
            const std::size_t e = 32 * w + std::countr_zero(bits);
            bits &= bits - 1;
            const NodeId a = edges[e].u, b = edges[e].v;
            touched[a] = touched[b] = true;
            NodeId ra = find(a), rb = find(b);
            if (ra != rb) {
                if (size[ra] < size[rb]) std::swap(ra, rb);
                parent[rb] = ra;
                size[ra] += size[rb];
            }
        }
    }

    BetaSample s;
    s.beta = beta;
    s.threshold = threshold;
    std::unordered_map<NodeId, std::size_t> slot;
    for (NodeId v = 0; v < n; ++v) {
        if (!touched[v]) continue;
        NodeId root = find(v);
        if (size[root] <= threshold) continue;
        auto [it, inserted] = slot.try_emplace(root, s.components.size());
        if (inserted) s.components.emplace_back();
        s.components[it->second].push_back(v);
    }
    return s;
}

PercolationExact exact_percolation(const Graph& g, double beta, NodeId source) {
    if (beta < 0.0 || beta > 1.0)
        throw std::invalid_argument("exact_percolation: beta outside [0,1]");
    if (source >= g.node_count())
        throw std::out_of_range("exact_percolation: source out of range");
    const std::size_t m = g.edge_count();
    if (m > kExactEdgeBudget)
        throw std::invalid_argument(
            "exact_percolation: " + std::to_string(m) + " edges exceeds the 2^" +
            std::to_string(kExactEdgeBudget) + " enumeration budget");

    const std::size_t n = g.node_count();
    const auto& edges = g.edges();

    // Pr[subset] = beta^a * (1-beta)^(m-a): tabulated once per popcount.
    std::vector<double> pow_b(m + 1, 1.0), pow_q(m + 1, 1.0);
    for (std::size_t i = 1; i <= m; ++i) {
        pow_b[i] = pow_b[i - 1] * beta;
        pow_q[i] = pow_q[i - 1] * (1.0 - beta);
    }

    PercolationExact out;
    out.source = source;
    out.beta = beta;
    out.reach_prob.assign(n, 0.0);
    out.component_size_dist.assign(n + 1, 0.0);

    std::vector<NodeId> parent(n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t(1) << m); ++subset) {
        for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<NodeId>(v);
        auto find = [&](NodeId x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        std::uint64_t bits = subset;
        while (bits) {
            const std::size_t e = std::countr_zero(bits);
            bits &= bits - 1;
            NodeId ra = find(edges[e].u), rb = find(edges[e].v);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }

        const int a = std::popcount(subset);
        const double prob = pow_b[a] * pow_q[m - a];
        const NodeId src_root = find(source);
        std::size_t cc = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (find(static_cast<NodeId>(v)) == src_root) {
                ++cc;
                if (v != source) out.reach_prob[v] += prob;
            }
        }
        out.component_size_dist[cc] += prob;
        out.expected_cc_size += prob * static_cast<double>(cc);
    }
    return out;
}

} // namespace ripsrank
