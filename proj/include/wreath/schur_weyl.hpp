#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/labels.hpp"
#include "wreath/set_partitions.hpp"

namespace wreath {

// Balanced set partition of {1..k} u {1'..k'}: every block meets the two
// halves in the same number of points.  The partition is given as a
// restricted growth string over 2k points, unprimed first.
inline bool is_balanced(const std::vector<int>& rgs, int k) {
    if (static_cast<int>(rgs.size()) != 2 * k)
        throw std::invalid_argument("is_balanced: expected a partition of 2k points");
    int blocks = 0;
    for (int b : rgs) blocks = std::max(blocks, b + 1);
    std::vector<int> diff(blocks, 0);
    for (int i = 0; i < k; ++i) ++diff[rgs[i]];
    for (int i = k; i < 2 * k; ++i) --diff[rgs[i]];
    return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
}

// Number of balanced set partitions of 2k points = dim of the balanced
// diagram algebra in degree k.  Enumerates all B(2k) partitions, so k is
// capped; past the cap we refuse rather than stall.
constexpr int kBalancedBudget = 6;

inline Integer balanced_dimension(int k) {
    if (k < 0) throw std::invalid_argument("balanced_dimension: negative k");
    if (k > kBalancedBudget)
        throw budget_error("balanced_dimension: k = " + std::to_string(k) +
                           " exceeds the enumeration budget (k <= " +
                           std::to_string(kBalancedBudget) + ")");
    Integer count = 0;
    enumerate_set_partitions(2 * k, [&](const std::vector<int>& rgs) {
        if (is_balanced(rgs, k)) ++count;
    });
    return count;
}

// dim End_{T wr S_n}(V^{tensor k}): sum of squared multiplicities over the
// k-th level of the branching graph.
inline Integer endomorphism_dimension(int k, int n) {
    Integer total = 0;
    for (const auto& [label, mult] : tensor_power_decomposition(k, n)) total += mult * mult;
    return total;
}

struct SchurWeylReport {
    int k = 0, n = 0;
    Integer balanced;
    Integer endomorphisms;
    bool surjective_bound_holds = false;  // balanced >= endomorphisms
    bool isomorphic = false;              // equality, expected iff n >= k
};

inline SchurWeylReport schur_weyl_check(int k, int n) {
    SchurWeylReport r;
    r.k = k;
    r.n = n;
    r.balanced = balanced_dimension(k);
    r.endomorphisms = endomorphism_dimension(k, n);
    r.surjective_bound_holds = r.balanced >= r.endomorphisms;
    r.isomorphic = r.balanced == r.endomorphisms;
    return r;
}

}  // namespace wreath
