#pragma once

#include "ripsrank/ranking.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace ripsrank {

// Kendall tau over competition ranks:
//   tau = 2/(n(n-1)) * sum_{i<j} sign((a_i - a_j)(b_i - b_j)),
// so pairs tied in either ranking contribute 0.  Both rankings must cover
// the same node set, n >= 2.
double kendall_tau(const Ranking& reference, const Ranking& candidate);

// Same formula on two aligned rank sequences.
double kendall_tau(const std::vector<std::uint32_t>& a,
                   const std::vector<std::uint32_t>& b);

// M(R) = (1 - sum_r n_r(n_r - 1) / (n(n-1)))^2, n_r = nodes sharing rank r.
double monotonicity(const Ranking& r);

// Fraction of nodes at each distinct rank; fractions sum to 1.
std::map<std::uint32_t, double> rank_distribution(const Ranking& r);

struct EvalReport {
    double kendall_tau = 0.0;
    double monotonicity = 0.0; // of the candidate ranking
    std::map<std::uint32_t, double> rank_histogram;
    std::size_t n = 0;
};

EvalReport evaluate(const Ranking& reference, const Ranking& candidate);

// Key/value document: tau, monotonicity, n, then rank<TAB>fraction rows.
void write_eval_report(const EvalReport& report, std::ostream& out);

} // namespace ripsrank
