#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wreath/arith.hpp"

namespace wreath {

// Integer partition: weakly decreasing positive parts.  Canonicalized at
// construction; the empty list is the unique partition of 0.
class Partition {
    std::vector<int> parts_;

public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
        std::sort(parts_.rbegin(), parts_.rend());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.assign(parts_[0], 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++c[j];
        }
        return Partition(std::move(c));
    }

    // Result of adding one extra part, re-sorted.  A zero part is a no-op.
    Partition with_part(int extra) const {
        if (extra == 0) return *this;
        std::vector<int> v = parts_;
        v.push_back(extra);
        return Partition(std::move(v));
    }

    // All partitions obtained by adding a single box.
    std::vector<Partition> add_box() const {
        std::vector<Partition> out;
        for (int r = 0; r <= length(); ++r) {
            int row = part(r);
            if (r == 0 || part(r - 1) > row) {
                std::vector<int> v = parts_;
                if (r < length())
                    ++v[r];
                else
                    v.push_back(1);
                out.emplace_back(std::move(v));
            }
        }
        return out;
    }

    // All partitions obtained by removing a single box.
    std::vector<Partition> remove_box() const {
        std::vector<Partition> out;
        for (int r = 0; r < length(); ++r) {
            if (r + 1 == length() || parts_[r] > parts_[r + 1]) {
                std::vector<int> v = parts_;
                --v[r];
                out.emplace_back(std::move(v));
            }
        }
        return out;
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner.parts()[i] > parts_[i]) return false;
        return true;
    }
};

// Composition: an ordered list of non-negative integers.  Kept as-given;
// normalization (dropping zeros) is explicit, and the dropped entries'
// original positions are reported alongside.
class Composition {
    std::vector<int> parts_;

public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend auto operator<=>(const Composition&, const Composition&) = default;

    struct Normalized {
        std::vector<int> parts;      // zero parts removed, order preserved
        std::vector<int> positions;  // original index of each surviving part
    };

    Normalized normalized() const {
        Normalized out;
        for (int i = 0; i < length(); ++i)
            if (parts_[i] != 0) {
                out.parts.push_back(parts_[i]);
                out.positions.push_back(i);
            }
        return out;
    }

    Partition sorted() const { return Partition(parts_); }
};

// Cycle type of a conjugacy class of S_n.
class CycleType {
    Partition cycles_;

public:
    CycleType() = default;
    explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

    const Partition& cycles() const { return cycles_; }
    int size() const { return cycles_.size(); }

    friend auto operator<=>(const CycleType&, const CycleType&) = default;

    // z = prod i^{m_i} m_i!  where m_i = number of cycles of length i.
    Integer centralizer_order() const {
        Integer z = 1;
        int run = 0, prev = -1;
        for (int p : cycles_.parts()) {
            if (p == prev)
                ++run;
            else {
                prev = p;
                run = 1;
            }
            z *= p;
            z *= run;
        }
        return z;
    }

    Integer class_size() const {
        return exact_div(factorial(size()), centralizer_order(), "class size");
    }

    // One permutation of this cycle type on {0,..,n-1}, cycles laid out
    // consecutively: image[i] = next element of i's cycle.
    std::vector<int> canonical_permutation() const {
        std::vector<int> img(size());
        int base = 0;
        for (int len : cycles_.parts()) {
            for (int j = 0; j < len; ++j) img[base + j] = base + (j + 1) % len;
            base += len;
        }
        return img;
    }
};

// All partitions of n, in deterministic (descending-lex) order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Partitions of n with at most max_len parts.
inline std::vector<Partition> partitions_of_max_length(int n, int max_len) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.length() <= max_len) out.push_back(p);
    return out;
}

// Hook lengths row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& lam) {
    auto conj = lam.conjugate();
    std::vector<std::vector<int>> hooks(lam.length());
    for (int i = 0; i < lam.length(); ++i) {
        hooks[i].resize(lam.parts()[i]);
        for (int j = 0; j < lam.parts()[i]; ++j)
            hooks[i][j] = (lam.parts()[i] - j) + (conj.parts()[j] - i) - 1;
    }
    return hooks;
}

// Dimension of the Specht module S^lam (hook length formula).
inline Integer specht_dimension(const Partition& lam) {
    Integer hooks = 1;
    for (auto& row : hook_lengths(lam))
        for (int h : row) hooks *= h;
    return exact_div(factorial(lam.size()), hooks, "hook length formula");
}

// multinomial(n; n - sum(sizes), sizes...)
inline Integer padded_multinomial(int n, const std::vector<int>& sizes) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > n) throw std::invalid_argument("padded_multinomial: sizes exceed n");
    Integer den = factorial(n - total);
    for (int s : sizes) den *= factorial(s);
    return exact_div(factorial(n), den, "padded multinomial");
}

}  // namespace wreath
