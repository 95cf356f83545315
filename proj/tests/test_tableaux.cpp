#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "wreath/characters.hpp"
#include "wreath/jacobi_trudi.hpp"
#include "wreath/tableaux.hpp"

using namespace wreath;

namespace {

// dominance order on partitions of equal size
bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

// number of non-negative integer matrices with the given row and column sums
// = coefficient of the monomial x^cols in prod_i h_{rows[i]}
Integer matrix_count(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<int> colrem = cols;
    std::function<Integer(size_t, size_t, int)> rec = [&](size_t r, size_t c,
                                                          int rowrem) -> Integer {
        if (r == rows.size()) return 1;
        if (c + 1 == cols.size() || cols.empty()) {
            if (cols.empty()) {
                if (rowrem != 0) return 0;
                return rec(r + 1, 0, r + 1 < rows.size() ? rows[r + 1] : 0);
            }
            if (rowrem > colrem[c]) return 0;
            colrem[c] -= rowrem;
            Integer sub = rec(r + 1, 0, r + 1 < rows.size() ? rows[r + 1] : 0);
            colrem[c] += rowrem;
            return sub;
        }
        Integer total = 0;
        for (int v = 0; v <= std::min(rowrem, colrem[c]); ++v) {
            colrem[c] -= v;
            total += rec(r, c + 1, rowrem - v);
            colrem[c] += v;
        }
        return total;
    };
    if (rows.empty()) {
        for (int c : cols)
            if (c != 0) return 0;
        return 1;
    }
    return rec(0, 0, rows[0]);
}

}  // namespace

TEST_CASE("kostka numbers: golden values") {
    CHECK(kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka(Partition{2}, Partition{1, 1}) == 1);
    CHECK(kostka(Partition{3, 1}, Partition{2, 1, 1}) == 2);
    CHECK(kostka(Partition{2, 2}, Partition{1, 1, 1, 1}) == 2);
    CHECK(kostka(Partition{2, 2}, Partition{2, 1, 1}) == 1);
    CHECK(kostka(Partition{2, 2}, Partition{2, 2}) == 1);
    CHECK(kostka(Partition{2, 2}, Partition{3, 1}) == 0);
    CHECK(kostka(Partition{}, Partition{}) == 1);
    CHECK(kostka(Partition{2}, Partition{1, 1, 1}) == 0);  // size mismatch
}

TEST_CASE("kostka: K_{lam,lam} = 1 and content-permutation invariance") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(kostka(lam, lam) == 1);

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                std::vector<int> content = mu.parts();
                std::sort(content.begin(), content.end());
                const Integer want = kostka(lam, mu);
                do {
                    CHECK(kostka(lam, Composition(content)) == want);
                } while (std::next_permutation(content.begin(), content.end()));
                // zeros sprinkled in change nothing
                std::vector<int> padded{0};
                for (int p : mu.parts()) {
                    padded.push_back(p);
                    padded.push_back(0);
                }
                CHECK(kostka(lam, Composition(padded)) == want);
            }
}

TEST_CASE("kostka: dominance support and permutation-module dimensions") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                CHECK((kostka(lam, mu) != 0) == dominates(lam, mu));

    // dim M^mu = n!/prod(mu_i!) = sum_lam K_{lam,mu} f^lam
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            Integer dim = 0;
            for (const auto& lam : partitions_of(n))
                dim += kostka(lam, mu) * specht_dimension(lam);
            CHECK(dim == padded_multinomial(n, mu.parts()));
        }
}

TEST_CASE("kostka with standard content counts standard tableaux") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(kostka(lam, Partition(std::vector<int>(n, 1))) == specht_dimension(lam));
}

TEST_CASE("littlewood-richardson: golden values and symmetry") {
    CHECK(littlewood_richardson(Partition{2}, Partition{1}, Partition{2, 1}) == 1);
    CHECK(littlewood_richardson(Partition{2, 1}, Partition{}, Partition{2, 1}) == 1);
    CHECK(littlewood_richardson(Partition{2, 1}, Partition{1}, Partition{2, 2}) == 1);
    CHECK(littlewood_richardson(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(littlewood_richardson(Partition{2}, Partition{1}, Partition{1, 1, 1}) == 0);
    CHECK(littlewood_richardson(Partition{2}, Partition{2}, Partition{2, 1}) == 0);  // size

    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    for (const auto& nu : partitions_of(a + b))
                        CHECK(littlewood_richardson(lam, mu, nu) ==
                              littlewood_richardson(mu, lam, nu));
}

TEST_CASE("littlewood-richardson: Pieri rule") {
    auto is_horizontal_strip = [](const Partition& inner, const Partition& outer) {
        if (!outer.contains(inner)) return false;
        for (int i = 1; i < outer.length(); ++i)
            if (outer.part(i) > inner.part(i - 1)) return false;
        return true;
    };
    for (int a = 0; a <= 4; ++a)
        for (int k = 0; a + k <= 6; ++k)
            for (const auto& lam : partitions_of(a))
                for (const auto& nu : partitions_of(a + k)) {
                    const Integer want = is_horizontal_strip(lam, nu) ? 1 : 0;
                    CHECK(littlewood_richardson(lam, Partition{k}, nu) == want);
                }
}

TEST_CASE("schur products: dimensions and the power of s_1") {
    // induced-module dimension: sum_nu c^nu f^nu = binomial(a+b, a) f^lam f^mu
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    Integer dim = 0;
                    for (const auto& [nu, c] : schur_product({lam, mu}))
                        dim += c * specht_dimension(nu);
                    CHECK(dim == binomial(a + b, a) * specht_dimension(lam) *
                                     specht_dimension(mu));
                }

    // s_1^n = sum_lam f^lam s_lam
    for (int n = 0; n <= 6; ++n) {
        const auto prod = schur_product(std::vector<Partition>(n, Partition{1}));
        for (const auto& lam : partitions_of(n)) {
            auto it = prod.find(lam);
            REQUIRE(it != prod.end());
            CHECK(it->second == specht_dimension(lam));
        }
        CHECK(prod.size() == partitions_of(n).size());
    }
}

TEST_CASE("murnaghan-nakayama characters: golden values") {
    CHECK(mn_character(Partition{2, 1}, CycleType(Partition{1, 1, 1})) == 2);
    CHECK(mn_character(Partition{2, 1}, CycleType(Partition{2, 1})) == 0);
    CHECK(mn_character(Partition{2, 1}, CycleType(Partition{3})) == -1);
    CHECK(mn_character(Partition{}, CycleType(Partition{})) == 1);
    CHECK_THROWS_AS(mn_character(Partition{2}, CycleType(Partition{1})), std::invalid_argument);
}

TEST_CASE("murnaghan-nakayama: identity, trivial and sign characters") {
    for (int n = 1; n <= 7; ++n) {
        const CycleType id(Partition(std::vector<int>(n, 1)));
        for (const auto& lam : partitions_of(n)) {
            CHECK(mn_character(lam, id) == specht_dimension(lam));
            CHECK(mn_character(Partition{n}, CycleType(lam)) == 1);
            const int sign = (n - lam.length()) % 2 == 0 ? 1 : -1;
            CHECK(mn_character(Partition(std::vector<int>(n, 1)), CycleType(lam)) == sign);
        }
    }
}

TEST_CASE("murnaghan-nakayama: first orthogonality") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                Integer sum = 0;
                for (const auto& c : partitions_of(n)) {
                    const CycleType cls(c);
                    sum += cls.class_size() * mn_character(lam, cls) * mn_character(mu, cls);
                }
                CHECK(sum == (lam == mu ? factorial(n) : Integer(0)));
            }
}

TEST_CASE("jacobi-trudi: golden expansions") {
    CHECK(jacobi_trudi_terms(Partition{}) == std::vector<JacobiTrudiTerm>{{1, {}}});
    CHECK(jacobi_trudi_terms(Partition{4}) == std::vector<JacobiTrudiTerm>{{1, {4}}});
    CHECK(jacobi_trudi_terms(Partition{1, 1}) ==
          std::vector<JacobiTrudiTerm>{{1, {1, 1}}, {-1, {2}}});
    CHECK(jacobi_trudi_terms(Partition{2, 2}) ==
          std::vector<JacobiTrudiTerm>{{1, {2, 2}}, {-1, {3, 1}}});
}

TEST_CASE("jacobi-trudi: h-expansion recovers Schur functions") {
    // expanding every term's h-product back into Schur functions via
    // Littlewood-Richardson must cancel down to s_lam itself
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            std::map<Partition, Integer> acc;
            for (const auto& term : jacobi_trudi_terms(lam)) {
                std::vector<Partition> rows;
                for (int d : term.degrees) rows.push_back(Partition{d});
                for (const auto& [nu, c] : schur_product(rows))
                    acc[nu] += term.sign > 0 ? c : -c;
            }
            std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
            REQUIRE(acc.size() == 1);
            CHECK(acc.begin()->first == lam);
            CHECK(acc.begin()->second == 1);
        }
}

TEST_CASE("jacobi-trudi: monomial coefficients are Kostka numbers") {
    // coefficient of m_mu in s_lam, read off the h-expansion by counting
    // contingency matrices, equals K_{lam,mu}
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                Integer coeff = 0;
                for (const auto& term : jacobi_trudi_terms(lam)) {
                    const Integer m = matrix_count(term.degrees, mu.parts());
                    coeff += term.sign > 0 ? m : -m;
                }
                CHECK(coeff == kostka(lam, mu));
            }
}
