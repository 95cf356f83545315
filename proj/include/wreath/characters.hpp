#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/partition.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

namespace detail {

// Remove border strips of the given cycle lengths from the beta-set, one
// cycle at a time.  Removing a strip of size r means lowering one beta
// number by r onto a free slot; the sign is the parity of the number of
// beta numbers jumped over (= strip height - 1).
inline Integer mn_beta(std::vector<int>& beta, const std::vector<int>& cycles, size_t idx) {
    if (idx == cycles.size()) return 1;
    const int r = cycles[idx];
    Integer total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int t = beta[i] - r;
        if (t < 0) continue;
        if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > t && b < beta[i]) ++jumped;
        std::vector<int> next = beta;
        next[i] = t;
        std::sort(next.begin(), next.end(), std::greater<int>());
        Integer sub = mn_beta(next, cycles, idx + 1);
        if (jumped % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    return total;
}

}  // namespace detail

// Murnaghan-Nakayama: the value of the irreducible symmetric group character
// chi^lam on the conjugacy class with the given cycle type.
inline Integer mn_character(const Partition& lam, const CycleType& cls) {
    if (lam.size() != cls.size())
        throw std::invalid_argument("mn_character: |lambda| must equal the permutation degree");
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static MemoCache<Key, Integer> cache;
    Key key{lam.parts(), cls.cycles().parts()};
    return cache.get_or_compute(key, [&] {
        const int len = std::max(lam.length(), 1);
        std::vector<int> beta(len);
        for (int i = 0; i < len; ++i) beta[i] = lam.part(i) + (len - 1 - i);
        std::vector<int> cycles = cls.cycles().parts();  // largest first
        return detail::mn_beta(beta, cycles, 0);
    });
}

}  // namespace wreath
