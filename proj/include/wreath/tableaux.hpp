#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/partition.hpp"

namespace wreath {

// Memoization cache usable from several threads at once.  Concurrent inserts
// of the same key are benign: both threads compute the same value.
template <typename Key, typename Value>
class MemoCache {
    std::map<Key, Value> map_;
    mutable std::mutex mu_;

public:
    template <typename F>
    Value get_or_compute(const Key& key, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(key, std::move(v)).first->second;
    }
};

// Number of semistandard Young tableaux of the given shape whose content is
// the given letter-count vector (letter i+1 appears content[i] times).
// Plain cell-by-cell backtracking, no cache; this is the reference counter.
inline Integer ssyt_count(const Partition& shape, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) return 0;
        total += c;
    }
    if (total != shape.size()) return 0;
    if (shape.empty()) return 1;

    const int rows = shape.length();
    const int letters = static_cast<int>(content.size());
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(shape.parts()[r], 0);

    Integer count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.parts()[r]) {
            ++nr;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);            // rows weakly increase
        if (r > 0 && c < shape.parts()[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);  // columns strictly
        for (int v = lo; v <= letters; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            fill[r][c] = v;
            rec(nr, nc);
            ++remaining[v - 1];
        }
    };
    rec(0, 0);
    return count;
}

// Kostka number K_{shape,content}: cached wrapper around ssyt_count.  The
// cache key strips zero parts from the content but keeps its order, so
// invariance under permuting the content stays a checkable theorem.
inline Integer kostka(const Partition& shape, const Composition& content) {
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    static MemoCache<Key, Integer> cache;
    auto norm = content.normalized();
    // zeros never affect the count, so key on the stripped form
    Key key{shape.parts(), norm.parts};
    return cache.get_or_compute(key, [&] {
        std::vector<int> letters = content.parts();
        return ssyt_count(shape, letters);
    });
}

inline Integer kostka(const Partition& shape, const Partition& content) {
    return kostka(shape, Composition(content.parts()));
}

// Littlewood-Richardson coefficient c^nu_{lam,mu}: the number of skew SSYT of
// shape nu/lam and content mu whose reverse reading word (rows top to bottom,
// each read right to left) is a lattice word.  Cells are filled exactly in
// reading-word order, so the lattice constraint prunes as we go.
inline Integer lr_count(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (nu.size() != lam.size() + mu.size()) return 0;
    if (!nu.contains(lam)) return 0;
    if (mu.empty()) return nu == lam ? 1 : 0;

    const int rows = nu.length();
    const int letters = mu.length();
    std::vector<int> used(letters, 0);
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(nu.parts()[r], 0);  // 0 marks lam cells too

    // skew cells in reading order: row 0 right-to-left, then row 1, ...
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu.parts()[r] - 1; c >= lam.part(r); --c) cells.emplace_back(r, c);

    Integer count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= letters; ++v) {
            if (used[v - 1] == mu.parts()[v - 1]) continue;
            if (v > 1 && used[v - 1] >= used[v - 2]) continue;  // lattice word
            if (c + 1 < nu.parts()[r] && v > fill[r][c + 1]) continue;  // row weakly increasing
            if (r > 0 && c >= lam.part(r - 1) && c < nu.parts()[r - 1] && v <= fill[r - 1][c])
                continue;  // column strictly increasing
            ++used[v - 1];
            fill[r][c] = v;
            rec(idx + 1);
            --used[v - 1];
        }
        fill[r][c] = 0;
    };
    rec(0);
    return count;
}

inline Integer littlewood_richardson(const Partition& lam, const Partition& mu,
                                     const Partition& nu) {
    using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
    static MemoCache<Key, Integer> cache;
    Key key{lam.parts(), mu.parts(), nu.parts()};
    return cache.get_or_compute(key, [&] { return lr_count(lam, mu, nu); });
}

// Expansion of the product s_{shapes[0]} s_{shapes[1]} ... into Schur terms,
// by iterated Littlewood-Richardson expansion.
inline std::map<Partition, Integer> schur_product(const std::vector<Partition>& shapes) {
    std::map<Partition, Integer> acc;
    acc[Partition{}] = 1;
    for (const auto& mu : shapes) {
        if (mu.empty()) continue;
        std::map<Partition, Integer> next;
        for (const auto& [lam, c] : acc) {
            for (const auto& nu : partitions_of(lam.size() + mu.size())) {
                Integer lr = littlewood_richardson(lam, mu, nu);
                if (lr != 0) next[nu] += c * lr;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace wreath
