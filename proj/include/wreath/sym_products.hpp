#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/labels.hpp"
#include "wreath/multiset.hpp"
#include "wreath/partition.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

// The multiset {1^{k_1}, ..., m^{k_m}} attached to Sym^{k_1} x ... x Sym^{k_m}.
inline Multiset sym_ground(const std::vector<int>& ks) {
    for (int k : ks)
        if (k < 0) throw std::invalid_argument("sym_ground: negative exponent");
    return Multiset::from_counts(ks);
}

// Sym^k(V) over T wr S_n: one stable permutation module per partition mu of k
// with at most n parts.  Variables sharing an exponent w form a single block
// of weight w, so the label has the one-row partition (m_w) in weight w.
inline std::map<PartitionSequence, Integer> decompose_sym_power(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("decompose_sym_power: negative argument");
    std::map<PartitionSequence, Integer> out;
    for (const auto& mu : partitions_of_max_length(k, n)) {
        const int maxw = mu.empty() ? 0 : mu.parts().front();
        std::vector<Partition> seq(maxw);
        for (int w = 1; w <= maxw; ++w) {
            int m_w = 0;
            for (int p : mu.parts())
                if (p == w) ++m_w;
            if (m_w > 0) seq[w - 1] = Partition{m_w};
        }
        out[PartitionSequence(std::move(seq))] += 1;
    }
    return out;
}

// Tensor product of two weighted permutation modules: one summand per
// non-negative integer matrix with row sums a.parts() and column sums
// b.parts(); cell (i,j) becomes a block of its own size and weight
// a.weight_i + b.weight_j.
inline std::map<WeightedPermLabel, Integer> tensor_weighted_perm(const WeightedPermLabel& a,
                                                                 const WeightedPermLabel& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("tensor_weighted_perm: ambient mismatch");
    const std::vector<int> rows = a.parts(), cols = b.parts();
    const std::vector<int> wa = a.weights(), wb = b.weights();
    const int R = static_cast<int>(rows.size()), C = static_cast<int>(cols.size());

    std::map<WeightedPermLabel, Integer> out;
    std::vector<std::vector<int>> mat(R, std::vector<int>(C, 0));
    std::vector<int> colrem = cols;
    std::function<void(int, int, int)> rec = [&](int r, int c, int rowrem) {
        if (r == R) {
            std::vector<int> parts, weights;
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < C; ++j)
                    if (mat[i][j] > 0) {
                        parts.push_back(mat[i][j]);
                        weights.push_back(wa[i] + wb[j]);
                    }
            out[WeightedPermLabel(parts, weights)] += 1;
            return;
        }
        if (c == C - 1) {
            if (rowrem <= colrem[c]) {
                mat[r][c] = rowrem;
                colrem[c] -= rowrem;
                rec(r + 1, 0, r + 1 < R ? rows[r + 1] : 0);
                colrem[c] += rowrem;
                mat[r][c] = 0;
            }
            return;
        }
        for (int v = 0; v <= std::min(rowrem, colrem[c]); ++v) {
            mat[r][c] = v;
            colrem[c] -= v;
            rec(r, c + 1, rowrem - v);
            colrem[c] += v;
        }
        mat[r][c] = 0;
    };
    if (R == 0)
        rec(0, 0, 0);
    else
        rec(0, 0, rows[0]);
    return out;
}

// Sym^{k_1} x ... x Sym^{k_m} as a sum of stable permutation modules: one
// summand M~(Type(P)) per multiset partition P of the ground multiset with at
// most n blocks.
inline std::map<PartitionSequence, Integer> decompose_sym_product_to_perm(
    const std::vector<int>& ks, int n) {
    if (n < 0) throw std::invalid_argument("decompose_sym_product_to_perm: negative n");
    std::map<PartitionSequence, Integer> out;
    enumerate_multiset_partitions(sym_ground(ks), static_cast<int>(ks.size()), n,
                                  [&](const MultisetPartition& p) { out[type_of(p)] += 1; });
    return out;
}

// Irreducible decomposition, through the permutation modules and their Kostka
// expansions.
inline std::map<PartitionSequence, Integer> decompose_sym_product_to_irreps(
    const std::vector<int>& ks, int n) {
    std::map<PartitionSequence, Integer> out;
    for (const auto& [seq, mult] : decompose_sym_product_to_perm(ks, n))
        for (const auto& [label, inner] : decompose_perm_module(WeightedPermLabel::from_sequence(seq, n)))
            out[label.to_sequence()] += mult * inner;
    return out;
}

// Irreducible decomposition, counted directly: the multiplicity of
// V^{(mu^1, mu^2, ...)} is the number of pairs (P, (T_w)) where P is a
// multiset partition with at most n blocks and T_w is a semistandard tableau
// of shape mu^w whose content lists the multiplicities of the distinct
// size-w blocks of P.  Uses the raw tableau counter on purpose.
inline std::map<PartitionSequence, Integer> decompose_sym_product_to_irreps_direct(
    const std::vector<int>& ks, int n) {
    std::map<PartitionSequence, Integer> out;
    enumerate_multiset_partitions(
        sym_ground(ks), static_cast<int>(ks.size()), n, [&](const MultisetPartition& p) {
            std::map<int, std::vector<int>> content;  // block size -> run lengths
            const auto& bl = p.blocks();
            for (size_t i = 0; i < bl.size();) {
                size_t j = i;
                while (j < bl.size() && bl[j] == bl[i]) ++j;
                content[detail::block_size(bl[i])].push_back(static_cast<int>(j - i));
                i = j;
            }
            const int maxw = content.empty() ? 0 : content.rbegin()->first;

            std::vector<int> ws;
            std::vector<std::vector<std::pair<Partition, Integer>>> choices;
            for (const auto& [w, runs] : content) {
                int total = 0;
                for (int r : runs) total += r;
                std::vector<std::pair<Partition, Integer>> opts;
                for (const auto& mu : partitions_of(total)) {
                    Integer c = ssyt_count(mu, runs);
                    if (c != 0) opts.emplace_back(mu, c);
                }
                ws.push_back(w);
                choices.push_back(std::move(opts));
            }

            std::vector<Partition> seq(maxw);
            std::function<void(size_t, Integer)> rec = [&](size_t idx, Integer mult) {
                if (idx == choices.size()) {
                    out[PartitionSequence(seq)] += mult;
                    return;
                }
                for (const auto& [mu, c] : choices[idx]) {
                    seq[ws[idx] - 1] = mu;
                    rec(idx + 1, mult * c);
                }
                seq[ws[idx] - 1] = Partition{};
            };
            rec(0, 1);
        });
    return out;
}

// Specht multiplicities of the restriction to S_n: for each multiset
// partition P with at most n blocks, S^lam picks up K_{lam, UType(P)[n]}.
inline std::map<Partition, Integer> sym_product_specht_multiplicities(const std::vector<int>& ks,
                                                                      int n) {
    if (n < 0) throw std::invalid_argument("sym_product_specht_multiplicities: negative n");
    std::map<Partition, Integer> out;
    const auto lambdas = partitions_of(n);
    enumerate_multiset_partitions(sym_ground(ks), static_cast<int>(ks.size()), n,
                                  [&](const MultisetPartition& p) {
                                      const Composition content = utype_padded(p, n);
                                      for (const auto& lam : lambdas) {
                                          Integer k = kostka(lam, content);
                                          if (k != 0) out[lam] += k;
                                      }
                                  });
    return out;
}

// dim of the S_n-invariants: multiset partitions with at most n blocks.
inline Integer invariant_dimension(const std::vector<int>& ks, int n) {
    if (n < 0) throw std::invalid_argument("invariant_dimension: negative n");
    return count_multiset_partitions(sym_ground(ks), n);
}

// dim of the S_n-invariants inside the symmetrized weight space of mu:
// multiset partitions whose block sizes are exactly the parts of mu.
inline Integer invariant_dimension_in_weight(const std::vector<int>& ks, int n,
                                             const Partition& mu) {
    if (mu.length() > n) return 0;
    return count_partitions_with_part_sizes(sym_ground(ks), mu);
}

struct FoulkesCounts {
    Integer b_parts_of_size_a;  // partitions into b parts of size a
    Integer a_parts_of_size_b;  // partitions into a parts of size b
};

inline FoulkesCounts weak_foulkes_counts(const Multiset& m, int a, int b) {
    if (a < 1 || b < 1 || m.size() != a * b)
        throw std::invalid_argument("weak_foulkes_counts: need |M| = a*b");
    return {count_partitions_with_part_sizes(m, Partition(std::vector<int>(b, a))),
            count_partitions_with_part_sizes(m, Partition(std::vector<int>(a, b)))};
}

struct FoulkesScanResult {
    int multisets_checked = 0;
    std::vector<std::pair<Multiset, FoulkesCounts>> counterexamples;
};

// Check the claim "partitions into b parts of size a >= partitions into a
// parts of size b" (a < b) across every multiset of size ab over the given
// alphabet.  Counts depend only on the multiplicity partition, which is what
// the local cache keys on.
inline FoulkesScanResult weak_foulkes_scan(int a, int b, int alphabet) {
    if (!(a < b)) throw std::invalid_argument("weak_foulkes_scan: need a < b");
    if (alphabet < 1) throw std::invalid_argument("weak_foulkes_scan: need a positive alphabet");
    FoulkesScanResult res;
    std::map<Partition, FoulkesCounts> seen;
    for (const auto& m : multisets_of_size(alphabet, a * b)) {
        ++res.multisets_checked;
        const Partition profile = m.multiplicity_partition();
        auto it = seen.find(profile);
        if (it == seen.end()) it = seen.emplace(profile, weak_foulkes_counts(m, a, b)).first;
        const FoulkesCounts& c = it->second;
        if (c.b_parts_of_size_a < c.a_parts_of_size_b) res.counterexamples.emplace_back(m, c);
    }
    return res;
}

}  // namespace wreath
