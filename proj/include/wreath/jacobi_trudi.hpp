#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "wreath/partition.hpp"

namespace wreath {

// One term of a Jacobi-Trudi determinant expansion: sign * prod_i h_{degrees[i]}.
// Zero degrees (h_0 = 1) are dropped from the list.
struct JacobiTrudiTerm {
    int sign = 1;                // +1 or -1
    std::vector<int> degrees;    // degrees of the complete homogeneous factors

    friend auto operator<=>(const JacobiTrudiTerm&, const JacobiTrudiTerm&) = default;
};

// Expand s_lam = det(h_{lam_i - i + j})_{i,j=1..len} by summing over
// permutations.  Terms containing an h of negative degree vanish and are
// skipped.  The identity permutation comes first.
inline std::vector<JacobiTrudiTerm> jacobi_trudi_terms(const Partition& lam) {
    const int len = lam.length();
    if (len == 0) return {JacobiTrudiTerm{1, {}}};

    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<JacobiTrudiTerm> out;
    do {
        JacobiTrudiTerm term;
        int inversions = 0;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
            for (int j = i + 1; j < len; ++j)
                if (perm[i] > perm[j]) ++inversions;
            int d = lam.parts()[i] - i + perm[i];
            if (d < 0)
                ok = false;
            else if (d > 0)
                term.degrees.push_back(d);
        }
        if (!ok) continue;
        term.sign = inversions % 2 == 0 ? 1 : -1;
        out.push_back(std::move(term));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace wreath
