#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/labels.hpp"
#include "wreath/partition.hpp"
#include "wreath/tableaux.hpp"

namespace wreath {

// Finite multiset over positive integer symbols, stored sparsely.
class Multiset {
    std::vector<std::pair<int, int>> entries_;  // (symbol, multiplicity), symbol-ascending

public:
    Multiset() = default;

    explicit Multiset(const std::vector<int>& elements) {
        std::map<int, int> counts;
        for (int e : elements) {
            if (e < 1) throw std::invalid_argument("Multiset: symbols must be >= 1");
            ++counts[e];
        }
        entries_.assign(counts.begin(), counts.end());
    }

    // counts[j] copies of symbol j+1
    static Multiset from_counts(const std::vector<int>& counts) {
        Multiset out;
        for (size_t j = 0; j < counts.size(); ++j) {
            if (counts[j] < 0) throw std::invalid_argument("Multiset: negative count");
            if (counts[j] > 0) out.entries_.emplace_back(static_cast<int>(j) + 1, counts[j]);
        }
        return out;
    }

    static Multiset distinct(int m) {
        return from_counts(std::vector<int>(m, 1));
    }

    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int size() const {
        int s = 0;
        for (const auto& [sym, mult] : entries_) s += mult;
        return s;
    }

    int max_symbol() const { return entries_.empty() ? 0 : entries_.back().first; }

    int count(int symbol) const {
        for (const auto& [sym, mult] : entries_)
            if (sym == symbol) return mult;
        return 0;
    }

    std::vector<int> dense(int alphabet) const {
        if (max_symbol() > alphabet)
            throw std::invalid_argument("Multiset::dense: alphabet too small");
        std::vector<int> out(alphabet, 0);
        for (const auto& [sym, mult] : entries_) out[sym - 1] = mult;
        return out;
    }

    Partition multiplicity_partition() const {
        std::vector<int> mults;
        for (const auto& [sym, mult] : entries_) mults.push_back(mult);
        return Partition(std::move(mults));
    }

    friend auto operator<=>(const Multiset&, const Multiset&) = default;
};

namespace detail {

inline int block_size(const std::vector<int>& b) {
    return std::accumulate(b.begin(), b.end(), 0);
}

// Total order on blocks: by size, then lexicographically on the dense vector.
inline bool block_less(const std::vector<int>& a, const std::vector<int>& b) {
    const int sa = block_size(a), sb = block_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

// Non-empty sub-multisets of rest, largest block first.
inline std::vector<std::vector<int>> submultisets_desc(const std::vector<int>& rest) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(rest.size(), 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == rest.size()) {
            if (block_size(cur) > 0) out.push_back(cur);
            return;
        }
        for (int c = 0; c <= rest[idx]; ++c) {
            cur[idx] = c;
            rec(idx + 1);
        }
        cur[idx] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return block_less(b, a); });
    return out;
}

}  // namespace detail

// Partition of a multiset into non-empty blocks.  Blocks are dense count
// vectors over a fixed alphabet 1..m, kept sorted by (size, lex).
class MultisetPartition {
    int alphabet_ = 0;
    std::vector<std::vector<int>> blocks_;

public:
    MultisetPartition() = default;

    MultisetPartition(int alphabet, std::vector<std::vector<int>> blocks)
        : alphabet_(alphabet), blocks_(std::move(blocks)) {
        for (const auto& b : blocks_) {
            if (static_cast<int>(b.size()) != alphabet_)
                throw std::invalid_argument("MultisetPartition: block arity mismatch");
            int s = 0;
            for (int c : b) {
                if (c < 0) throw std::invalid_argument("MultisetPartition: negative count");
                s += c;
            }
            if (s == 0) throw std::invalid_argument("MultisetPartition: empty block");
        }
        std::sort(blocks_.begin(), blocks_.end(), detail::block_less);
    }

    int alphabet() const { return alphabet_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    Multiset ground() const {
        std::vector<int> counts(alphabet_, 0);
        for (const auto& b : blocks_)
            for (int j = 0; j < alphabet_; ++j) counts[j] += b[j];
        return Multiset::from_counts(counts);
    }

    friend auto operator<=>(const MultisetPartition&, const MultisetPartition&) = default;
};

// Visit every partition of `ground` into at most max_blocks non-empty blocks
// (no limit when max_blocks < 0).  Blocks are chosen in non-increasing
// (size, lex) order, so each partition is produced exactly once.
inline void enumerate_multiset_partitions(
    const Multiset& ground, int alphabet, int max_blocks,
    const std::function<void(const MultisetPartition&)>& visit) {
    if (alphabet < ground.max_symbol())
        throw std::invalid_argument("enumerate_multiset_partitions: alphabet too small");

    std::vector<int> rest = ground.dense(alphabet);
    std::vector<std::vector<int>> chosen;
    chosen.reserve(ground.size());

    std::function<void(const std::vector<int>*)> rec = [&](const std::vector<int>* bound) {
        const int remaining = detail::block_size(rest);
        if (remaining == 0) {
            visit(MultisetPartition(alphabet, chosen));
            return;
        }
        if (max_blocks >= 0) {
            const int slots = max_blocks - static_cast<int>(chosen.size());
            const int cap = bound ? detail::block_size(*bound) : remaining;
            if (slots <= 0 || static_cast<long long>(slots) * cap < remaining) return;
        }
        for (const auto& b : detail::submultisets_desc(rest)) {
            if (bound && detail::block_less(*bound, b)) continue;
            for (size_t j = 0; j < b.size(); ++j) rest[j] -= b[j];
            chosen.push_back(b);
            rec(&chosen.back());
            chosen.pop_back();
            for (size_t j = 0; j < b.size(); ++j) rest[j] += b[j];
        }
    };
    rec(nullptr);
}

inline void enumerate_multiset_partitions(
    const Multiset& ground, const std::function<void(const MultisetPartition&)>& visit) {
    enumerate_multiset_partitions(ground, ground.max_symbol(), -1, visit);
}

// Number of partitions of `ground` into at most max_blocks blocks.  Cached on
// the exact sparse form, so relabelling symmetry stays a testable fact.
inline Integer count_multiset_partitions(const Multiset& ground, int max_blocks = -1) {
    using Key = std::pair<std::vector<std::pair<int, int>>, int>;
    static MemoCache<Key, Integer> cache;
    Key key{ground.entries(), max_blocks};
    return cache.get_or_compute(key, [&] {
        Integer count = 0;
        enumerate_multiset_partitions(ground, std::max(ground.max_symbol(), 1), max_blocks,
                                      [&](const MultisetPartition&) { ++count; });
        return count;
    });
}

// Type(P): the partition in weight s records the multiplicities of the
// distinct blocks of size s.
inline PartitionSequence type_of(const MultisetPartition& p) {
    std::map<int, std::vector<int>> buckets;  // block size -> run lengths
    const auto& bl = p.blocks();
    for (size_t i = 0; i < bl.size();) {
        size_t j = i;
        while (j < bl.size() && bl[j] == bl[i]) ++j;
        buckets[detail::block_size(bl[i])].push_back(static_cast<int>(j - i));
        i = j;
    }
    const int maxs = buckets.empty() ? 0 : buckets.rbegin()->first;
    std::vector<Partition> seq(maxs);
    for (auto& [s, runs] : buckets) seq[s - 1] = Partition(std::move(runs));
    return PartitionSequence(std::move(seq));
}

// UType(P): multiplicities of all distinct blocks, sizes forgotten.
inline Partition utype_of(const MultisetPartition& p) {
    std::vector<int> runs;
    const auto& bl = p.blocks();
    for (size_t i = 0; i < bl.size();) {
        size_t j = i;
        while (j < bl.size() && bl[j] == bl[i]) ++j;
        runs.push_back(static_cast<int>(j - i));
        i = j;
    }
    return Partition(std::move(runs));
}

// UType(P)[n]: UType with an extra part n - (number of blocks) in front.
// The result is a composition; sorting it is the caller's business.
inline Composition utype_padded(const MultisetPartition& p, int n) {
    if (p.block_count() > n)
        throw std::invalid_argument("utype_padded: partition has more than n blocks");
    std::vector<int> parts{n - p.block_count()};
    const Partition u = utype_of(p);
    for (int r : u.parts()) parts.push_back(r);
    return Composition(std::move(parts));
}

// Element of the array model: a sparse non-negative array b indexed by tuples
// (i_1..i_m) != 0, cell value = number of blocks with that content vector.
class Multitabloid {
    int arity_ = 0;
    std::map<std::vector<int>, int> cells_;

public:
    Multitabloid() = default;

    Multitabloid(int arity, std::map<std::vector<int>, int> cells)
        : arity_(arity), cells_(std::move(cells)) {
        for (const auto& [t, b] : cells_) {
            if (static_cast<int>(t.size()) != arity_)
                throw std::invalid_argument("Multitabloid: index arity mismatch");
            int s = 0;
            for (int v : t) {
                if (v < 0) throw std::invalid_argument("Multitabloid: negative index");
                s += v;
            }
            if (s == 0) throw std::invalid_argument("Multitabloid: all-zero index");
            if (b <= 0) throw std::invalid_argument("Multitabloid: cell values must be positive");
        }
    }

    int arity() const { return arity_; }
    const std::map<std::vector<int>, int>& cells() const { return cells_; }

    int block_count() const {
        int s = 0;
        for (const auto& [t, b] : cells_) s += b;
        return s;
    }

    // k_j = sum over cells of i_j * b(i)
    std::vector<int> marginals() const {
        std::vector<int> ks(arity_, 0);
        for (const auto& [t, b] : cells_)
            for (int j = 0; j < arity_; ++j) ks[j] += t[j] * b;
        return ks;
    }

    friend auto operator<=>(const Multitabloid&, const Multitabloid&) = default;
};

// All arrays with prescribed weighted marginals ks and at most n blocks.
// Backtracks over index tuples in lexicographic order; this deliberately does
// not go through multiset partitions, so the bijection between the two models
// can be tested rather than assumed.
inline void enumerate_multitabloids(const std::vector<int>& ks, int n,
                                    const std::function<void(const Multitabloid&)>& visit) {
    const int m = static_cast<int>(ks.size());
    for (int k : ks)
        if (k < 0) throw std::invalid_argument("enumerate_multitabloids: negative marginal");
    if (n < 0) throw std::invalid_argument("enumerate_multitabloids: negative block budget");

    std::vector<std::vector<int>> tuples;
    {
        std::vector<int> cur(m, 0);
        std::function<void(int)> gen = [&](int j) {
            if (j == m) {
                if (detail::block_size(cur) > 0) tuples.push_back(cur);
                return;
            }
            for (int v = 0; v <= ks[j]; ++v) {
                cur[j] = v;
                gen(j + 1);
            }
            cur[j] = 0;
        };
        gen(0);
    }
    // largest tuple size from each suffix, for pruning
    std::vector<int> suffix_cap(tuples.size() + 1, 0);
    for (size_t i = tuples.size(); i > 0; --i)
        suffix_cap[i - 1] = std::max(suffix_cap[i], detail::block_size(tuples[i - 1]));

    std::map<std::vector<int>, int> cells;
    std::vector<int> rem = ks;
    std::function<void(size_t, int)> rec = [&](size_t idx, int budget) {
        const int total_rem = detail::block_size(rem);
        if (total_rem == 0) {
            visit(Multitabloid(m, cells));
            return;
        }
        if (idx == tuples.size()) return;
        if (static_cast<long long>(budget) * suffix_cap[idx] < total_rem) return;

        const auto& t = tuples[idx];
        int maxb = budget;
        for (int j = 0; j < m; ++j)
            if (t[j] > 0) maxb = std::min(maxb, rem[j] / t[j]);
        int b = 0;
        while (true) {
            if (b > 0) cells[t] = b;
            rec(idx + 1, budget - b);
            if (b == maxb) break;
            ++b;
            for (int j = 0; j < m; ++j) rem[j] -= t[j];
        }
        for (int j = 0; j < m; ++j) rem[j] += maxb * t[j];
        cells.erase(t);
    };
    rec(0, n);
}

// Type of an array, read off the antidiagonals: cells with index sum s are
// the distinct blocks of size s, the cell value their multiplicity.
inline PartitionSequence type_of(const Multitabloid& tab) {
    std::map<int, std::vector<int>> buckets;
    for (const auto& [t, b] : tab.cells()) buckets[detail::block_size(t)].push_back(b);
    const int maxs = buckets.empty() ? 0 : buckets.rbegin()->first;
    std::vector<Partition> seq(maxs);
    for (auto& [s, runs] : buckets) seq[s - 1] = Partition(std::move(runs));
    return PartitionSequence(std::move(seq));
}

inline MultisetPartition array_to_multiset_partition(const Multitabloid& tab) {
    std::vector<std::vector<int>> blocks;
    for (const auto& [t, b] : tab.cells())
        for (int r = 0; r < b; ++r) blocks.push_back(t);
    return MultisetPartition(tab.arity(), std::move(blocks));
}

inline Multitabloid multiset_partition_to_array(const MultisetPartition& p) {
    std::map<std::vector<int>, int> cells;
    for (const auto& b : p.blocks()) ++cells[b];
    return Multitabloid(p.alphabet(), std::move(cells));
}

// All multisets of the given size over the alphabet 1..m, in lexicographic
// order of their dense count vectors.
inline std::vector<Multiset> multisets_of_size(int alphabet, int size) {
    if (alphabet < 0 || size < 0)
        throw std::invalid_argument("multisets_of_size: negative argument");
    std::vector<Multiset> out;
    std::vector<int> counts(alphabet, 0);
    std::function<void(int, int)> rec = [&](int sym, int rest) {
        if (sym == alphabet) {
            if (rest == 0) out.push_back(Multiset::from_counts(counts));
            return;
        }
        if (sym == alphabet - 1) {
            counts[sym] = rest;
            rec(sym + 1, 0);
            counts[sym] = 0;
            return;
        }
        for (int c = 0; c <= rest; ++c) {
            counts[sym] = c;
            rec(sym + 1, rest - c);
        }
        counts[sym] = 0;
    };
    if (alphabet == 0 && size > 0) return out;
    rec(0, size);
    return out;
}

// Number of partitions of `ground` whose block sizes are exactly `sizes`.
inline Integer count_partitions_with_part_sizes(const Multiset& ground, const Partition& sizes) {
    if (sizes.size() != ground.size()) return 0;
    using Key = std::pair<std::vector<std::pair<int, int>>, std::vector<int>>;
    static MemoCache<Key, Integer> cache;
    Key key{ground.entries(), sizes.parts()};
    return cache.get_or_compute(key, [&] {
        const int m = std::max(ground.max_symbol(), 1);
        std::vector<int> rest = ground.dense(m);
        Integer count = 0;
        // blocks in the prescribed size order; among equal sizes require
        // non-increasing lex so each partition is counted once
        std::function<void(int, const std::vector<int>*)> rec =
            [&](int idx, const std::vector<int>* bound) {
                if (idx == sizes.length()) {
                    ++count;
                    return;
                }
                const int want = sizes.parts()[idx];
                const bool tied = idx > 0 && sizes.parts()[idx - 1] == want;
                for (const auto& b : detail::submultisets_desc(rest)) {
                    if (detail::block_size(b) != want) continue;
                    if (tied && bound && *bound < b) continue;
                    for (size_t j = 0; j < b.size(); ++j) rest[j] -= b[j];
                    rec(idx + 1, &b);
                    for (size_t j = 0; j < b.size(); ++j) rest[j] += b[j];
                }
            };
        rec(0, nullptr);
        return count;
    });
}

}  // namespace wreath
