#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/partition.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

// A finite sequence (lam^1, lam^2, ..., lam^l) of partitions, with lam^i
// carrying weight i.  Trailing empty partitions are stripped so that equal
// labels always compare equal.  The same sequence labels an irreducible for
// every n >= total_size(); the implicit weight-0 row of size n - total_size()
// is never stored.
class PartitionSequence {
    std::vector<Partition> seq_;

public:
    PartitionSequence() = default;
    explicit PartitionSequence(std::vector<Partition> seq) : seq_(std::move(seq)) {
        while (!seq_.empty() && seq_.back().empty()) seq_.pop_back();
    }
    PartitionSequence(std::initializer_list<Partition> seq)
        : PartitionSequence(std::vector<Partition>(seq)) {}

    const std::vector<Partition>& entries() const { return seq_; }
    int length() const { return static_cast<int>(seq_.size()); }
    bool empty() const { return seq_.empty(); }

    // Partition in weight w >= 1; empty beyond the stored length.
    const Partition& entry(int w) const {
        static const Partition none;
        if (w < 1) throw std::invalid_argument("PartitionSequence::entry: weight must be >= 1");
        return w <= length() ? seq_[w - 1] : none;
    }

    // Polynomial degree: sum of w * |lam^w|.
    int degree() const {
        int d = 0;
        for (int w = 1; w <= length(); ++w) d += w * seq_[w - 1].size();
        return d;
    }

    int total_size() const {
        int s = 0;
        for (const auto& p : seq_) s += p.size();
        return s;
    }

    bool valid_for(int n) const { return total_size() <= n; }

    // dim V^{(lam^1,...)} over T wr S_n: distribute n points over the weight
    // classes (one class of size |lam^w| per weight, plus the weight-0
    // padding), times Specht dimensions.
    Integer dimension(int n) const {
        if (!valid_for(n))
            throw std::invalid_argument("PartitionSequence::dimension: label not valid for n");
        std::vector<int> sizes;
        Integer f = 1;
        for (const auto& p : seq_) {
            if (!p.empty()) sizes.push_back(p.size());
            f *= specht_dimension(p);
        }
        return padded_multinomial(n, sizes) * f;
    }

    friend auto operator<=>(const PartitionSequence&, const PartitionSequence&) = default;
};

// Label of an irreducible algebraic representation of T wr S_n: pairwise
// distinct integer weights, a non-empty partition for each, sizes summing
// to n.  Polynomial labels are exactly those with non-negative weights whose
// weight-0 shape (if any) is a single row.
class AlgebraicIrrepLabel {
    std::vector<std::pair<int, Partition>> entries_;  // (weight, shape), weight-ascending
    int n_ = 0;

public:
    AlgebraicIrrepLabel() = default;

    AlgebraicIrrepLabel(std::vector<std::pair<int, Partition>> entries, int n)
        : entries_(std::move(entries)), n_(n) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        int total = 0;
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].second.empty())
                throw std::invalid_argument("AlgebraicIrrepLabel: empty shape");
            if (i > 0 && entries_[i].first == entries_[i - 1].first)
                throw std::invalid_argument("AlgebraicIrrepLabel: repeated weight");
            total += entries_[i].second.size();
        }
        if (total != n_)
            throw std::invalid_argument("AlgebraicIrrepLabel: shape sizes must sum to n");
    }

    // Pad a polynomial label out to its explicit weight-0 form.
    static AlgebraicIrrepLabel from_sequence(const PartitionSequence& seq, int n) {
        if (!seq.valid_for(n))
            throw std::invalid_argument("AlgebraicIrrepLabel::from_sequence: label not valid for n");
        std::vector<std::pair<int, Partition>> entries;
        const int pad = n - seq.total_size();
        if (pad > 0) entries.emplace_back(0, Partition{pad});
        for (int w = 1; w <= seq.length(); ++w)
            if (!seq.entry(w).empty()) entries.emplace_back(w, seq.entry(w));
        return AlgebraicIrrepLabel(std::move(entries), n);
    }

    const std::vector<std::pair<int, Partition>>& entries() const { return entries_; }
    int ambient() const { return n_; }

    int degree() const {
        int d = 0;
        for (const auto& [w, shape] : entries_) d += w * shape.size();
        return d;
    }

    // Does this label come from a polynomial representation?  Defined only on
    // the algebraic-with-non-negative-weights side.
    bool is_polynomial() const {
        for (const auto& [w, shape] : entries_) {
            if (w < 0)
                throw std::domain_error("is_polynomial: label has a negative weight");
            if (w == 0 && shape.length() > 1) return false;
        }
        return true;
    }

    PartitionSequence to_sequence() const {
        if (!is_polynomial())
            throw std::invalid_argument("AlgebraicIrrepLabel::to_sequence: not polynomial");
        int maxw = 0;
        for (const auto& [w, shape] : entries_) maxw = std::max(maxw, w);
        std::vector<Partition> seq(maxw);
        for (const auto& [w, shape] : entries_)
            if (w >= 1) seq[w - 1] = shape;
        return PartitionSequence(std::move(seq));
    }

    Integer dimension() const {
        std::vector<int> sizes;
        Integer f = 1;
        for (const auto& [w, shape] : entries_) {
            sizes.push_back(shape.size());
            f *= specht_dimension(shape);
        }
        return padded_multinomial(n_, sizes) * f;
    }

    friend auto operator<=>(const AlgebraicIrrepLabel&, const AlgebraicIrrepLabel&) = default;
};

inline bool is_polynomial_irrep(const AlgebraicIrrepLabel& label) { return label.is_polynomial(); }

// Weighted permutation module M(lam, k): one block of size lam_i and weight
// k_i per row, blocks ordered but the module depending only on the multiset
// of (weight, size) pairs.  Canonical order: weight ascending, then size
// descending, so equal-weight runs read off as partitions.
class WeightedPermLabel {
    std::vector<std::pair<int, int>> blocks_;  // (weight, size)
    int n_ = 0;

public:
    WeightedPermLabel() = default;

    WeightedPermLabel(const std::vector<int>& parts, const std::vector<int>& weights) {
        if (parts.size() != weights.size())
            throw std::invalid_argument("WeightedPermLabel: parts/weights length mismatch");
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("WeightedPermLabel: parts must be positive");
            blocks_.emplace_back(weights[i], parts[i]);
            n_ += parts[i];
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first < b.first : a.second > b.second;
                  });
    }

    // Explicit form of the stable module M~(lam^1,...) on n points: every row
    // of lam^w becomes a block of weight w, plus the weight-0 padding block.
    static WeightedPermLabel from_sequence(const PartitionSequence& seq, int n) {
        if (!seq.valid_for(n))
            throw std::invalid_argument("WeightedPermLabel::from_sequence: label not valid for n");
        std::vector<int> parts, weights;
        const int pad = n - seq.total_size();
        if (pad > 0) {
            parts.push_back(pad);
            weights.push_back(0);
        }
        for (int w = 1; w <= seq.length(); ++w)
            for (int part : seq.entry(w).parts()) {
                parts.push_back(part);
                weights.push_back(w);
            }
        return WeightedPermLabel(parts, weights);
    }

    PartitionSequence to_sequence() const {
        int zero_blocks = 0, maxw = 0;
        for (const auto& [w, size] : blocks_) {
            if (w < 0)
                throw std::invalid_argument("WeightedPermLabel::to_sequence: negative weight");
            if (w == 0) ++zero_blocks;
            maxw = std::max(maxw, w);
        }
        if (zero_blocks > 1)
            throw std::invalid_argument("WeightedPermLabel::to_sequence: several weight-0 blocks");
        std::vector<std::vector<int>> rows(maxw);
        for (const auto& [w, size] : blocks_)
            if (w >= 1) rows[w - 1].push_back(size);
        std::vector<Partition> seq;
        seq.reserve(rows.size());
        for (auto& r : rows) seq.push_back(Partition(std::move(r)));
        return PartitionSequence(std::move(seq));
    }

    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
    int ambient() const { return n_; }

    std::vector<int> parts() const {
        std::vector<int> out;
        out.reserve(blocks_.size());
        for (const auto& b : blocks_) out.push_back(b.second);
        return out;
    }

    std::vector<int> weights() const {
        std::vector<int> out;
        out.reserve(blocks_.size());
        for (const auto& b : blocks_) out.push_back(b.first);
        return out;
    }

    int degree() const {
        int d = 0;
        for (const auto& [w, size] : blocks_) d += w * size;
        return d;
    }

    // Rows are ordered, so the tabloid count is the plain multinomial even
    // when two rows share a size and weight.
    Integer dimension() const { return padded_multinomial(n_, parts()); }

    friend auto operator<=>(const WeightedPermLabel&, const WeightedPermLabel&) = default;
};

// M(lam, k) decomposed into irreducibles: pick one partition mu^w per weight
// class, with multiplicity the product over classes of Kostka numbers
// K_{mu^w, (sizes of weight-w blocks)}.
inline std::map<AlgebraicIrrepLabel, Integer> decompose_perm_module(const WeightedPermLabel& m) {
    std::map<int, std::vector<int>> classes;  // weight -> block sizes
    for (const auto& [w, size] : m.blocks()) classes[w].push_back(size);

    std::vector<int> class_weights;
    std::vector<std::vector<std::pair<Partition, Integer>>> choices;  // per class: (mu, K)
    for (const auto& [w, sizes] : classes) {
        int total = 0;
        for (int s : sizes) total += s;
        std::vector<std::pair<Partition, Integer>> opts;
        for (const auto& mu : partitions_of(total)) {
            Integer k = kostka(mu, Composition(sizes));
            if (k != 0) opts.emplace_back(mu, k);
        }
        class_weights.push_back(w);
        choices.push_back(std::move(opts));
    }

    std::map<AlgebraicIrrepLabel, Integer> out;
    std::vector<std::pair<int, Partition>> picked(class_weights.size(), {0, Partition{}});
    std::function<void(size_t, Integer)> rec = [&](size_t idx, Integer mult) {
        if (idx == choices.size()) {
            out[AlgebraicIrrepLabel(picked, m.ambient())] += mult;
            return;
        }
        for (const auto& [mu, k] : choices[idx]) {
            picked[idx] = {class_weights[idx], mu};
            rec(idx + 1, mult * k);
        }
    };
    rec(0, 1);
    return out;
}

// Forget the torus: restriction of V^{(entries)} to S_n is the iterated
// Littlewood-Richardson product of all the shapes, padding row included.
inline std::map<Partition, Integer> restrict_to_symmetric_group(const AlgebraicIrrepLabel& label) {
    std::vector<Partition> shapes;
    for (const auto& [w, shape] : label.entries()) shapes.push_back(shape);
    return schur_product(shapes);
}

// Branching for tensoring with the defining representation V^{((1))}:
// move one box up a weight (lam^w -> lam^{w+1}), or pull a new box out of
// the padding row into weight 1 (possible only while total_size < n).
// Every edge has multiplicity one.
inline std::map<PartitionSequence, Integer> tensor_with_defining(const PartitionSequence& seq,
                                                                 int n) {
    if (n < 1) throw std::invalid_argument("tensor_with_defining: need n >= 1");
    if (!seq.valid_for(n))
        throw std::invalid_argument("tensor_with_defining: label not valid for n");

    std::map<PartitionSequence, Integer> out;
    auto emit = [&](std::vector<Partition> entries) {
        PartitionSequence t(std::move(entries));
        if (t.valid_for(n)) out[t] += 1;
    };

    if (seq.total_size() < n)
        for (const auto& grown : seq.entry(1).add_box()) {
            std::vector<Partition> entries(seq.entries());
            if (entries.empty()) entries.push_back(Partition{});
            entries[0] = grown;
            emit(std::move(entries));
        }

    for (int w = 1; w <= seq.length(); ++w)
        for (const auto& shrunk : seq.entry(w).remove_box())
            for (const auto& grown : seq.entry(w + 1).add_box()) {
                std::vector<Partition> entries(seq.entries());
                if (w + 1 > static_cast<int>(entries.size())) entries.resize(w + 1);
                entries[w - 1] = shrunk;
                entries[w] = grown;
                emit(std::move(entries));
            }

    return out;
}

// Full decomposition of V^{((1))}^{tensor k}, by walking the branching graph
// level by level.
inline std::map<PartitionSequence, Integer> tensor_power_decomposition(int k, int n) {
    if (k < 0) throw std::invalid_argument("tensor_power_decomposition: negative power");
    if (n < 1) throw std::invalid_argument("tensor_power_decomposition: need n >= 1");
    std::map<PartitionSequence, Integer> level;
    level[PartitionSequence{}] = 1;
    for (int step = 0; step < k; ++step) {
        std::map<PartitionSequence, Integer> next;
        for (const auto& [label, mult] : level)
            for (const auto& [to, one] : tensor_with_defining(label, n)) next[to] += mult * one;
        level = std::move(next);
    }
    return level;
}

inline Integer tensor_power_multiplicity(const PartitionSequence& target, int power, int n) {
    if (power < 0) throw std::invalid_argument("tensor_power_multiplicity: negative power");
    if (n < 1) throw std::invalid_argument("tensor_power_multiplicity: need n >= 1");
    if (target.degree() != power || !target.valid_for(n)) return 0;
    const auto level = tensor_power_decomposition(power, n);
    auto it = level.find(target);
    return it == level.end() ? Integer(0) : it->second;
}

// All partition sequences of the given polynomial degree (no ambient bound).
inline std::vector<PartitionSequence> partition_sequences_of_degree(int d) {
    std::vector<PartitionSequence> out;
    std::vector<Partition> cur;
    // weight w contributes w * |lam^w|; choose sizes greedily from weight 1 up
    std::function<void(int, int)> rec = [&](int w, int rest) {
        if (rest == 0) {
            out.push_back(PartitionSequence(cur));
            return;
        }
        if (w > rest) return;
        for (int size = rest / w; size >= 0; --size) {
            for (const auto& p : partitions_of(size)) {
                cur.push_back(p);
                rec(w + 1, rest - w * size);
                cur.pop_back();
            }
        }
    };
    rec(1, d);
    return out;
}

}  // namespace wreath
