// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "wreath/gl_restrict.hpp"
#include "wreath/io.hpp"
#include "wreath/oracle.hpp"
#include "wreath/schur_weyl.hpp"
#include "wreath/set_partitions.hpp"
#include "wreath/sym_products.hpp"

using namespace wreath;

namespace {

PartitionSequence seq(std::initializer_list<Partition> ps) { return PartitionSequence(ps); }

using SeqMap = std::map<PartitionSequence, Integer>;

bool check_restriction_table(std::ostream& log) {
    const std::vector<std::pair<Partition, SeqMap>> table{
        {Partition{}, {{seq({}), 1}}},
        {Partition{1}, {{seq({Partition{1}}), 1}}},
        {Partition{2}, {{seq({Partition{2}}), 1}, {seq({Partition{}, Partition{1}}), 1}}},
        {Partition{1, 1}, {{seq({Partition{1, 1}}), 1}}},
        {Partition{3},
         {{seq({Partition{3}}), 1},
          {seq({Partition{1}, Partition{1}}), 1},
          {seq({Partition{}, Partition{}, Partition{1}}), 1}}},
        {Partition{2, 1}, {{seq({Partition{2, 1}}), 1}, {seq({Partition{1}, Partition{1}}), 1}}},
        {Partition{1, 1, 1}, {{seq({Partition{1, 1, 1}}), 1}}},
        {Partition{4},
         {{seq({Partition{4}}), 1},
          {seq({Partition{2}, Partition{1}}), 1},
          {seq({Partition{}, Partition{2}}), 1},
          {seq({Partition{1}, Partition{}, Partition{1}}), 1},
          {seq({Partition{}, Partition{}, Partition{}, Partition{1}}), 1}}},
        {Partition{3, 1},
         {{seq({Partition{3, 1}}), 1},
          {seq({Partition{1, 1}, Partition{1}}), 1},
          {seq({Partition{2}, Partition{1}}), 1},
          {seq({Partition{}, Partition{1, 1}}), 1},
          {seq({Partition{1}, Partition{}, Partition{1}}), 1}}},
        {Partition{2, 2},
         {{seq({Partition{2, 2}}), 1},
          {seq({Partition{2}, Partition{1}}), 1},
          {seq({Partition{}, Partition{2}}), 1}}},
        {Partition{2, 1, 1},
         {{seq({Partition{2, 1, 1}}), 1}, {seq({Partition{1, 1}, Partition{1}}), 1}}},
        {Partition{1, 1, 1, 1}, {{seq({Partition{1, 1, 1, 1}}), 1}}},
    };

    bool ok = true;
    for (const auto& [lam, want] : table)
        for (int n : {lam.size() + 1, 8})
            if (restrict_gl_irrep(lam, n) != want) {
                log << "  row " << to_text(lam) << " wrong at n = " << n << "\n";
                ok = false;
            }
    return ok;
}

bool check_square_of_symmetric_square(std::ostream& log) {
    const SeqMap want{{seq({Partition{2, 2}}), 1},
                      {seq({Partition{1, 1}, Partition{1}}), 1},
                      {seq({Partition{}, Partition{2}}), 1},
                      {seq({Partition{}, Partition{1, 1}}), 1},
                      {seq({Partition{1}, Partition{}, Partition{1}}), 2},
                      {seq({Partition{2}, Partition{1}}), 2},
                      {seq({Partition{}, Partition{}, Partition{}, Partition{1}}), 1}};

    bool ok = true;
    for (int n : {4, 5, 8})
        if (decompose_sym_product_to_perm({2, 2}, n) != want) {
            log << "  summand list wrong at n = " << n << "\n";
            ok = false;
        }

    std::vector<long long> mults;
    Integer total = 0, tabloids = 0;
    for (const auto& [s, mult] : want) {
        mults.push_back(to_int64(mult, "mult"));
        tabloids += mult;
        total += mult * WeightedPermLabel::from_sequence(s, 4).dimension();
    }
    std::sort(mults.begin(), mults.end());
    if (mults != std::vector<long long>{1, 1, 1, 1, 1, 2, 2}) {
        log << "  multiplicity profile wrong\n";
        ok = false;
    }
    if (tabloids != 9) {
        log << "  expected 9 multitabloids, got " << tabloids.str() << "\n";
        ok = false;
    }
    if (total != 100) {
        log << "  dimensions sum to " << total.str() << ", expected 100\n";
        ok = false;
    }

    // the eight-summand variant missing M~(-|(1,1)) must fail the same identity
    const Integer crippled =
        total - WeightedPermLabel::from_sequence(seq({Partition{}, Partition{1, 1}}), 4).dimension();
    if (crippled == 100) {
        log << "  eight-summand variant unexpectedly passes the dimension identity\n";
        ok = false;
    }
    return ok;
}

bool check_tensor_worked_example(std::ostream& log) {
    const auto prod =
        tensor_weighted_perm(WeightedPermLabel({3, 2}, {0, 2}), WeightedPermLabel({3, 2}, {1, 4}));
    const std::map<WeightedPermLabel, Integer> want{
        {WeightedPermLabel({3, 2}, {1, 6}), 1},
        {WeightedPermLabel({2, 1, 1, 1}, {1, 3, 4, 6}), 1},
        {WeightedPermLabel({1, 2, 2}, {1, 3, 4}), 1}};
    if (prod != want) {
        log << "  got " << prod.size() << " summands:\n";
        for (const auto& [m, c] : prod) log << "    " << to_text(m) << " x" << c.str() << "\n";
        return false;
    }
    return true;
}

bool check_oracle_equivalence(std::ostream& log) {
    bool ok = true;
    for (int d = 0; d <= 5; ++d)
        for (const auto& kpart : partitions_of(d)) {
            const std::vector<int>& ks = kpart.parts();
            for (int n = 1; n <= 6; ++n) {
                std::map<Partition, Integer> route_a;
                for (const auto& [s, mult] : decompose_sym_product_to_irreps(ks, n))
                    for (const auto& [lam, c] :
                         restrict_to_symmetric_group(AlgebraicIrrepLabel::from_sequence(s, n)))
                        route_a[lam] += mult * c;
                const auto route_b = sym_product_specht_multiplicities(ks, n);
                for (const auto& lam : partitions_of(n)) {
                    auto find = [&](const std::map<Partition, Integer>& m) {
                        auto it = m.find(lam);
                        return it == m.end() ? Integer(0) : it->second;
                    };
                    const Integer a = find(route_a), b = find(route_b);
                    const Integer c = sym_product_specht_oracle(ks, n, lam);
                    if (a != b || b != c) {
                        log << "  ks=" << to_text(kpart) << " n=" << n << " " << specht_text(lam)
                            << ": " << a.str() << " / " << b.str() << " / " << c.str() << "\n";
                        ok = false;
                    }
                }
            }
        }
    return ok;
}

bool check_bell_numbers(std::ostream& log) {
    bool ok = true;
    for (int m = 0; m <= 7; ++m) {
        Integer independent = 0;
        enumerate_set_partitions(m, [&](const std::vector<int>&) { ++independent; });
        const std::vector<int> ones(m, 1);
        for (int n : {m, 8}) {
            if (n < m) continue;
            const Integer dim = invariant_dimension(ones, n);
            if (dim != independent) {
                log << "  m=" << m << " n=" << n << ": invariants " << dim.str()
                    << " != set partitions " << independent.str() << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool check_schur_weyl(std::ostream& log) {
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
        const Integer bal = balanced_dimension(k);
        for (int n = std::max(k, 1); n <= 8; ++n)
            if (endomorphism_dimension(k, n) != bal) {
                log << "  k=" << k << " n=" << n << ": expected equality\n";
                ok = false;
            }
        for (int n = 1; n < k; ++n)
            if (endomorphism_dimension(k, n) >= bal) {
                log << "  k=" << k << " n=" << n << ": expected strict slack\n";
                ok = false;
            }
    }
    return ok;
}

bool check_weight_space_invariants(std::ostream& log) {
    bool ok = true;
    for (int d = 0; d <= 6; ++d) {
        const auto res = gay_check(d, 8);
        const int p = static_cast<int>(partitions_of(d).size());
        if (res.pairs_checked != p * p) {
            log << "  d=" << d << ": checked " << res.pairs_checked << " pairs\n";
            ok = false;
        }
        for (const auto& m : res.mismatches) {
            log << "  d=" << d << " lambda=" << to_text(m.lam) << " mu=" << to_text(m.mu) << ": "
                << m.invariants.str() << " != " << m.induced.str() << "\n";
            ok = false;
        }
    }
    return ok;
}

bool check_foulkes_scan(std::ostream& log) {
    bool ok = true;
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; a * b <= 8; ++b) {
            const auto res = weak_foulkes_scan(a, b, a * b);
            for (const auto& [m, c] : res.counterexamples) {
                log << "  a=" << a << " b=" << b << " " << to_text(m) << ": "
                    << c.b_parts_of_size_a.str() << " < " << c.a_parts_of_size_b.str() << "\n";
                ok = false;
            }
        }
    return ok;
}

bool check_stability(std::ostream& log) {
    bool ok = true;
    for (int d = 0; d <= 5; ++d)
        for (const auto& kpart : partitions_of(d)) {
            const std::vector<int>& ks = kpart.parts();
            if (decompose_sym_product_to_perm(ks, d + 1) != decompose_sym_product_to_perm(ks, 8)) {
                log << "  perm map unstable for ks=" << to_text(kpart) << "\n";
                ok = false;
            }
            if (decompose_sym_product_to_irreps(ks, d + 1) !=
                decompose_sym_product_to_irreps(ks, 8)) {
                log << "  irreducible map unstable for ks=" << to_text(kpart) << "\n";
                ok = false;
            }
        }
    return ok;
}

bool check_tensor_conservation(std::ostream& log) {
    bool ok = true;
    for (int d = 0; d <= 3; ++d)
        for (const auto& s : partition_sequences_of_degree(d))
            for (int n = 1; n <= 6; ++n) {
                if (!s.valid_for(n)) continue;
                Integer total = 0;
                for (const auto& [to, mult] : tensor_with_defining(s, n))
                    total += mult * to.dimension(n);
                if (total != Integer(n) * s.dimension(n)) {
                    log << "  " << irrep_text(s) << " n=" << n << ": " << total.str()
                        << " != " << (Integer(n) * s.dimension(n)).str() << "\n";
                    ok = false;
                }
            }
    return ok;
}

struct Criterion {
    const char* name;
    double limit_seconds;  // 0: no budget
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"low-degree restriction table at n = degree+1 and n = 8", 5.0, check_restriction_table},
        {"square of a symmetric square: nine multitabloids, dimension 100", 1.0,
         check_square_of_symmetric_square},
        {"pairwise tensor product worked example at n = 5", 1.0, check_tensor_worked_example},
        {"two rules and the character oracle agree on all Specht multiplicities", 60.0,
         check_oracle_equivalence},
        {"invariants of tensor powers are Bell numbers", 10.0, check_bell_numbers},
        {"balanced diagrams match endomorphisms, with strict slack below the range", 10.0,
         check_schur_weyl},
        {"weight-space invariants equal induced-module multiplicities", 60.0,
         check_weight_space_invariants},
        {"partition-count inequality has no small counterexample", 120.0, check_foulkes_scan},
        {"decomposition maps stable in the ambient rank", 0.0, check_stability},
        {"tensoring with the defining representation conserves dimension", 0.0,
         check_tensor_conservation},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "  exception: " << e.what() << "\n";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            log << "  took " << secs << " s, budget " << c.limit_seconds << " s\n";
            ok = false;
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name << " ("
                  << std::fixed << std::setprecision(2) << secs << "s)\n";
        if (!ok) {
            std::cout << log.str();
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
