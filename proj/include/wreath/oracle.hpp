#pragma once

// Character-theoretic brute force.  Everything here works by counting fixed
// monomials and summing over conjugacy classes; none of it shares code with
// the combinatorial decomposition rules it is used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/characters.hpp"
#include "wreath/jacobi_trudi.hpp"
#include "wreath/labels.hpp"
#include "wreath/partition.hpp"
#include "wreath/set_partitions.hpp"

namespace wreath {

namespace detail {

// Fixed monomial tuples of a permutation with the given cycle lengths, on
// Sym^{k_1} x ... x Sym^{k_m}.  A fixed tuple assigns each cycle one exponent
// vector; factor j must see total degree k_j.  If `totals` is non-null,
// totals[c] prescribes the per-variable total exponent on cycle c.
inline Integer fixed_tuples_by_cycles(const std::vector<int>& cycles,
                                      const std::vector<int>& ks,
                                      const std::vector<int>* totals) {
    const int m = static_cast<int>(ks.size());
    std::vector<int> rem = ks;
    std::function<Integer(size_t)> rec = [&](size_t c) -> Integer {
        if (c == cycles.size()) {
            for (int r : rem)
                if (r != 0) return 0;
            return 1;
        }
        const int len = cycles[c];
        Integer total = 0;
        std::vector<int> e(m, 0);
        std::function<void(int, int)> assign = [&](int j, int still) {
            // still = required remaining sum when totals is prescribed
            if (j == m) {
                if (totals == nullptr || still == 0) total += rec(c + 1);
                return;
            }
            const int cap = rem[j] / len;
            const int hi = totals ? std::min(cap, still) : cap;
            for (int v = 0; v <= hi; ++v) {
                rem[j] -= v * len;
                e[j] = v;
                assign(j + 1, still - v);
                rem[j] += v * len;
            }
            e[j] = 0;
        };
        assign(0, totals ? (*totals)[c] : 0);
        return total;
    };
    return rec(0);
}

// Reference implementation: enumerate every monomial tuple and test it.
inline Integer fixed_tuples_direct(const std::vector<int>& img, const std::vector<int>& ks,
                                   const Partition* weight) {
    const int n = static_cast<int>(img.size());
    const int m = static_cast<int>(ks.size());
    std::vector<std::vector<int>> expo(m, std::vector<int>(n, 0));
    Integer count = 0;

    std::function<void(int)> factor = [&](int j) {
        if (j == m) {
            for (int f = 0; f < m; ++f)
                for (int i = 0; i < n; ++i)
                    if (expo[f][i] != expo[f][img[i]]) return;
            if (weight) {
                std::vector<int> tot(n, 0);
                for (int f = 0; f < m; ++f)
                    for (int i = 0; i < n; ++i) tot[i] += expo[f][i];
                std::erase(tot, 0);
                if (Partition(tot) != *weight) return;
            }
            ++count;
            return;
        }
        std::function<void(int, int)> fill = [&](int i, int rest) {
            if (i == n - 1) {
                expo[j][i] = rest;
                factor(j + 1);
                expo[j][i] = 0;
                return;
            }
            for (int v = 0; v <= rest; ++v) {
                expo[j][i] = v;
                fill(i + 1, rest - v);
            }
            expo[j][i] = 0;
        };
        if (n == 0) {
            if (ks[j] == 0) factor(j + 1);
            return;
        }
        fill(0, ks[j]);
    };
    factor(0);
    return count;
}

inline Integer monomial_space_size(const std::vector<int>& ks, int n) {
    Integer prod = 1;
    for (int k : ks) prod *= binomial(n + k - 1, k);
    return prod;
}

}  // namespace detail

// Trace of a permutation of the given cycle type on Sym^{k_1} x ... x Sym^{k_m}
// of C^n, n = cls.size().  Fixed basis monomial tuples are counted directly
// when the basis is small and by the per-cycle assignment otherwise.
inline Integer sym_product_trace_direct(const std::vector<int>& ks, const CycleType& cls) {
    return detail::fixed_tuples_direct(cls.canonical_permutation(), ks, nullptr);
}

inline Integer sym_product_trace_by_cycles(const std::vector<int>& ks, const CycleType& cls) {
    return detail::fixed_tuples_by_cycles(cls.cycles().parts(), ks, nullptr);
}

inline Integer sym_product_trace(const std::vector<int>& ks, const CycleType& cls) {
    if (detail::monomial_space_size(ks, cls.size()) <= 2000)
        return sym_product_trace_direct(ks, cls);
    return sym_product_trace_by_cycles(ks, cls);
}

// Same trace, restricted to the symmetrized weight subspace of mu: only fixed
// tuples whose multiset of per-variable total exponents is mu (plus zeros).
inline Integer sym_product_trace_in_weight_direct(const std::vector<int>& ks, const CycleType& cls,
                                                  const Partition& mu) {
    return detail::fixed_tuples_direct(cls.canonical_permutation(), ks, &mu);
}

inline Integer sym_product_trace_in_weight_by_cycles(const std::vector<int>& ks,
                                                     const CycleType& cls, const Partition& mu) {
    // fixed tuples give every variable of a cycle the same total, so the
    // weight constraint becomes a choice of one total per cycle
    const std::vector<int> cycles = cls.cycles().parts();
    const int n = cls.size();
    if (mu.size() != 0 && mu.length() > n) return 0;

    // distribute mu's parts (plus zeros) over cycles: need[t] variables of total t
    std::map<int, int> need;
    for (int p : mu.parts()) ++need[p];
    need[0] += n - mu.length();

    std::vector<int> totals(cycles.size(), 0);
    Integer count = 0;
    std::function<void(size_t)> choose = [&](size_t c) {
        if (c == cycles.size()) {
            count += detail::fixed_tuples_by_cycles(cycles, ks, &totals);
            return;
        }
        const int len = cycles[c];
        for (auto& [t, cnt] : need) {
            if (cnt < len) continue;
            cnt -= len;
            totals[c] = t;
            choose(c + 1);
            cnt += len;
        }
        totals[c] = 0;
    };
    choose(0);
    return count;
}

inline Integer sym_product_trace_in_weight(const std::vector<int>& ks, const CycleType& cls,
                                           const Partition& mu) {
    if (detail::monomial_space_size(ks, cls.size()) <= 2000)
        return sym_product_trace_in_weight_direct(ks, cls, mu);
    return sym_product_trace_in_weight_by_cycles(ks, cls, mu);
}

// <f, chi^lam> over S_n for a class function given by traces.  Throws if the
// averaged sum fails to be an integer, which would mean f is not a character.
inline Integer specht_multiplicity_from_traces(
    int n, const std::function<Integer(const CycleType&)>& trace, const Partition& lam) {
    if (lam.size() != n)
        throw std::invalid_argument("specht_multiplicity_from_traces: |lambda| != n");
    Integer sum = 0;
    for (const auto& c : partitions_of(n)) {
        CycleType cls(c);
        sum += cls.class_size() * trace(cls) * mn_character(lam, cls);
    }
    return exact_div(sum, factorial(n), "Frobenius inner product");
}

inline Integer sym_product_specht_oracle(const std::vector<int>& ks, int n, const Partition& lam) {
    return specht_multiplicity_from_traces(
        n, [&](const CycleType& cls) { return sym_product_trace(ks, cls); }, lam);
}

// Multiplicity of V^{(label)} in Sym^{k_1} x ... x Sym^{k_m} over T wr S_n,
// by pure character theory: the label's weight vector nu singles out one
// weight space, which is a module over the stabilizer prod_w S_{n_w}; the
// multiplicity is the inner product with the outer product of Specht
// characters there.
inline Integer irrep_multiplicity_oracle(const std::vector<int>& ks, int n,
                                         const PartitionSequence& label) {
    if (!label.valid_for(n))
        throw std::invalid_argument("irrep_multiplicity_oracle: label not valid for n");
    int degree = 0;
    for (int k : ks) {
        if (k < 0) throw std::invalid_argument("irrep_multiplicity_oracle: negative exponent");
        degree += k;
    }
    if (label.degree() != degree) return 0;

    const auto entries = AlgebraicIrrepLabel::from_sequence(label, n).entries();
    const int groups = static_cast<int>(entries.size());

    // one cycle type per group; accumulate sum of prod(class sizes) * trace * character
    std::vector<CycleType> chosen(groups);
    Integer sum = 0;
    std::function<void(int)> pick = [&](int g) {
        if (g == groups) {
            std::vector<int> cycles, totals;
            Integer weight = 1;
            for (int i = 0; i < groups; ++i) {
                weight *= chosen[i].class_size();
                weight *= mn_character(entries[i].second, chosen[i]);
                for (int len : chosen[i].cycles().parts()) {
                    cycles.push_back(len);
                    totals.push_back(entries[i].first);
                }
            }
            if (weight != 0) sum += weight * detail::fixed_tuples_by_cycles(cycles, ks, &totals);
            return;
        }
        for (const auto& c : partitions_of(entries[g].second.size())) {
            chosen[g] = CycleType(c);
            pick(g + 1);
        }
    };
    pick(0);

    Integer order = 1;
    for (const auto& [w, shape] : entries) order *= factorial(shape.size());
    return exact_div(sum, order, "weight-space inner product");
}

// Number of set partitions of {1..|mu|} with block sizes mu fixed by a
// permutation of the given cycle type.
inline Integer normalizer_trace(const Partition& mu, const CycleType& cls) {
    const int d = mu.size();
    if (cls.size() != d) throw std::invalid_argument("normalizer_trace: size mismatch");
    const std::vector<int> img = cls.canonical_permutation();
    Integer count = 0;
    enumerate_set_partitions(d, [&](const std::vector<int>& a) {
        if (rgs_block_sizes(a) != mu) return;
        int blocks = 0;
        for (int b : a) blocks = std::max(blocks, b + 1);
        std::vector<int> to(blocks, -1);
        for (int i = 0; i < d; ++i) {
            const int dest = a[img[i]];
            if (to[a[i]] == -1)
                to[a[i]] = dest;
            else if (to[a[i]] != dest)
                return;
        }
        ++count;
    });
    return count;
}

// Multiplicity of S^lam in the module induced from the trivial representation
// of the normalizer N(mu) of the Young subgroup S_mu.
inline Integer induced_normalizer_multiplicity(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("induced_normalizer_multiplicity: |lambda| != |mu|");
    return specht_multiplicity_from_traces(
        lam.size(), [&](const CycleType& cls) { return normalizer_trace(mu, cls); }, lam);
}

// Multiplicity of S^target in the restriction of W(gl_lam) from GL_n to S_n,
// via the determinantal expansion and symmetric-power traces.
inline Integer gl_restrict_specht_oracle(const Partition& gl_lam, int n, const Partition& target) {
    Integer sum = 0;
    for (const auto& term : jacobi_trudi_terms(gl_lam)) {
        const Integer part = sym_product_specht_oracle(term.degrees, n, target);
        sum += term.sign > 0 ? part : -part;
    }
    return sum;
}

// dim End_{T wr S_n}(V^{tensor k}) without the branching graph: one summand
// per exponent profile mu, namely dim End of the induced module on that
// weight orbit.
inline Integer endomorphism_dimension_oracle(int k, int n) {
    if (k < 0 || n < 1) throw std::invalid_argument("endomorphism_dimension_oracle: bad arguments");
    Integer total = 0;
    for (const auto& mu : partitions_of_max_length(k, n)) {
        const Integer ways = padded_multinomial(k, mu.parts());
        Integer rep = 1;
        int run = 0, prev = -1;
        for (int p : mu.parts()) {
            run = (p == prev) ? run + 1 : 1;
            prev = p;
            rep *= run;
        }
        total += exact_div(ways * ways, rep, "endomorphism dimension");
    }
    return total;
}

}  // namespace wreath
