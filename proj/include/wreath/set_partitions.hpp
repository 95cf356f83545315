#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"
#include "wreath/partition.hpp"

namespace wreath {

// Visit every set partition of {0,..,n-1} as a restricted growth string:
// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); a[i] is the block of point i,
// blocks numbered in order of first appearance.
inline void enumerate_set_partitions(int n,
                                     const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            visit(a);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            a[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

// Block sizes of a restricted growth string, as a partition.
inline Partition rgs_block_sizes(const std::vector<int>& rgs) {
    int blocks = 0;
    for (int b : rgs) blocks = std::max(blocks, b + 1);
    std::vector<int> sizes(blocks, 0);
    for (int b : rgs) ++sizes[b];
    return Partition(std::move(sizes));
}

// Bell number via the Bell triangle.
inline Integer bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: negative argument");
    std::vector<Integer> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const Integer& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace wreath
