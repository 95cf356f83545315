#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/jacobi_trudi.hpp"
#include "wreath/labels.hpp"
#include "wreath/oracle.hpp"
#include "wreath/partition.hpp"
#include "wreath/sym_products.hpp"

namespace wreath {

// Signed formal sum of irreducible labels; zero coefficients are dropped.
struct VirtualDecomposition {
    std::map<PartitionSequence, Integer> terms;

    void add(const PartitionSequence& label, const Integer& c) {
        if (c == 0) return;
        auto it = terms.find(label);
        if (it == terms.end()) {
            terms.emplace(label, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }

    bool effective() const {
        for (const auto& [label, c] : terms)
            if (c < 0) return false;
        return true;
    }
};

// Restriction of W(lam) from GL_n to T wr S_n as a signed sum over the
// determinantal expansion.  For an honest representation this is effective;
// callers who want the guarantee use restrict_gl_irrep below.
inline VirtualDecomposition restrict_gl_irrep_virtual(const Partition& lam, int n) {
    if (lam.length() > n)
        throw std::invalid_argument("restrict_gl_irrep: lambda has more than n rows");
    VirtualDecomposition acc;
    for (const auto& term : jacobi_trudi_terms(lam))
        for (const auto& [label, mult] : decompose_sym_product_to_irreps(term.degrees, n))
            acc.add(label, term.sign > 0 ? mult : -mult);
    return acc;
}

inline std::map<PartitionSequence, Integer> restrict_gl_irrep(const Partition& lam, int n) {
    VirtualDecomposition acc = restrict_gl_irrep_virtual(lam, n);
    if (!acc.effective()) {
        std::ostringstream msg;
        msg << "restrict_gl_irrep: negative multiplicity survived cancellation for n=" << n
            << "; residual coefficients:";
        for (const auto& [label, c] : acc.terms) msg << ' ' << c.str();
        throw std::logic_error(msg.str());
    }
    return std::move(acc.terms);
}

// dim W(lam) over GL_n: product over cells of (n + j - i) / hook length.
inline Integer weyl_dimension(const Partition& lam, int n) {
    if (lam.length() > n) return 0;
    const auto hooks = hook_lengths(lam);
    Integer num = 1, den = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j) {
            num *= n + j - i;
            den *= hooks[i][j];
        }
    return exact_div(num, den, "Weyl dimension");
}

// dim of the S_n-invariants of the symmetrized weight space W(lam)_{mu-bar},
// as an alternating sum of multiset partition counts.
inline Integer symmetrized_weight_invariants(const Partition& lam, const Partition& mu, int n) {
    Integer sum = 0;
    for (const auto& term : jacobi_trudi_terms(lam)) {
        const Integer part = invariant_dimension_in_weight(term.degrees, n, mu);
        sum += term.sign > 0 ? part : -part;
    }
    return sum;
}

struct GayMismatch {
    Partition lam, mu;
    Integer invariants, induced;
};

struct GayCheckResult {
    int pairs_checked = 0;
    std::vector<GayMismatch> mismatches;
};

// Compare the two sides of the weight-space statement for every pair of
// partitions of d, with the invariants computed inside GL_n.  Mismatches are
// reported, not thrown: for n < d the identity is allowed to fail.
inline GayCheckResult gay_check(int d, int n) {
    if (d < 0 || n < 0) throw std::invalid_argument("gay_check: negative argument");
    GayCheckResult res;
    const auto parts = partitions_of(d);
    for (const auto& lam : parts)
        for (const auto& mu : parts) {
            ++res.pairs_checked;
            const Integer lhs = symmetrized_weight_invariants(lam, mu, n);
            const Integer rhs = induced_normalizer_multiplicity(lam, mu);
            if (lhs != rhs) res.mismatches.push_back({lam, mu, lhs, rhs});
        }
    return res;
}

}  // namespace wreath
