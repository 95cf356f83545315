#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/arith.hpp"
#include "wreath/gl_restrict.hpp"
#include "wreath/io.hpp"
#include "wreath/labels.hpp"
#include "wreath/multiset.hpp"
#include "wreath/oracle.hpp"
#include "wreath/partition.hpp"
#include "wreath/schur_weyl.hpp"
#include "wreath/sym_products.hpp"

namespace wreath {

namespace cli_detail {

using Json = nlohmann::json;

struct Options {
    std::string format = "text";
    unsigned long long seed = 0;
    bool json() const { return format == "json"; }
};

struct Summand {
    int degree = 0;
    std::string text;
    Json label;
    long long multiplicity = 0;
};

inline Json sequence_json(const PartitionSequence& s) {
    Json arr = Json::array();
    for (int w = 1; w <= s.length(); ++w) arr.push_back(s.entry(w).parts());
    return arr;
}

// Canonical order is degree-major, then the structural order the maps already
// come in.  A nonzero seed deterministically reshuffles the presentation;
// consumers are expected to treat the list as unordered.
inline void arrange(std::vector<Summand>& rows, const Options& opt) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Summand& a, const Summand& b) { return a.degree < b.degree; });
    if (opt.seed != 0) {
        std::mt19937_64 gen(opt.seed);
        std::shuffle(rows.begin(), rows.end(), gen);
    }
}

inline void emit_summands(std::vector<Summand> rows, int n, const Options& opt, std::ostream& out,
                          const char* key = "summands", const char* label_key = "label") {
    arrange(rows, opt);
    if (opt.json()) {
        Json j;
        j["ambient_n"] = n;
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back({{label_key, r.label}, {"multiplicity", r.multiplicity}});
        j[key] = std::move(arr);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows) out << r.text << " x" << r.multiplicity << "\n";
    }
}

inline std::vector<Summand> sequence_rows(const std::map<PartitionSequence, Integer>& dec,
                                          const std::string& prefix) {
    std::vector<Summand> rows;
    for (const auto& [seq, mult] : dec)
        rows.push_back({seq.degree(), prefix + to_text(seq), sequence_json(seq),
                        to_int64(mult, "multiplicity")});
    return rows;
}

inline std::vector<Summand> specht_rows(const std::map<Partition, Integer>& dec) {
    std::vector<Summand> rows;
    for (const auto& [lam, mult] : dec)
        rows.push_back({lam.size(), specht_text(lam), Json(lam.parts()),
                        to_int64(mult, "multiplicity")});
    return rows;
}

struct VerifyFailure {
    std::string where;
    std::string detail;
};

// Cross-check the two combinatorial decomposition routes and the character
// oracle on every exponent tuple of total degree <= max_degree, for every
// ambient 1 <= n <= max_n.  Returns failures instead of throwing so the
// caller can report them all.
inline std::vector<VerifyFailure> run_verification(int max_degree, int max_n, long long& cases) {
    std::vector<VerifyFailure> failures;
    auto fail = [&](const std::string& where, const std::string& detail) {
        failures.push_back({where, detail});
    };

    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& kpart : partitions_of(d)) {
            const std::vector<int> ks = kpart.parts();
            std::string kname = "ks=" + to_text(kpart);
            for (int n = 1; n <= max_n; ++n) {
                ++cases;
                const std::string where = kname + " n=" + std::to_string(n);

                const auto perm = decompose_sym_product_to_perm(ks, n);
                const auto irreps = decompose_sym_product_to_irreps(ks, n);
                const auto direct = decompose_sym_product_to_irreps_direct(ks, n);
                if (irreps != direct) fail(where, "tableau route disagrees with Kostka route");

                for (const auto& label : partition_sequences_of_degree(d)) {
                    if (!label.valid_for(n)) continue;
                    Integer claimed = 0;
                    if (auto it = irreps.find(label); it != irreps.end()) claimed = it->second;
                    const Integer oracle = irrep_multiplicity_oracle(ks, n, label);
                    if (claimed != oracle)
                        fail(where, "multiplicity of " + irrep_text(label) + ": rule says " +
                                        claimed.str() + ", characters say " + oracle.str());
                }

                const auto specht = sym_product_specht_multiplicities(ks, n);
                for (const auto& lam : partitions_of(n)) {
                    Integer claimed = 0;
                    if (auto it = specht.find(lam); it != specht.end()) claimed = it->second;
                    const Integer oracle = sym_product_specht_oracle(ks, n, lam);
                    if (claimed != oracle)
                        fail(where, "multiplicity of " + specht_text(lam) + ": rule says " +
                                        claimed.str() + ", characters say " + oracle.str());
                }

                Integer want_dim = 1;
                for (int k : ks) want_dim *= binomial(n + k - 1, k);
                Integer perm_dim = 0, irrep_dim = 0;
                for (const auto& [seq, mult] : perm)
                    perm_dim += mult * WeightedPermLabel::from_sequence(seq, n).dimension();
                for (const auto& [seq, mult] : irreps) irrep_dim += mult * seq.dimension(n);
                if (perm_dim != want_dim)
                    fail(where, "permutation-module dimensions sum to " + perm_dim.str() +
                                    ", expected " + want_dim.str());
                if (irrep_dim != want_dim)
                    fail(where, "irreducible dimensions sum to " + irrep_dim.str() +
                                    ", expected " + want_dim.str());

                const Integer inv = invariant_dimension(ks, n);
                Integer triv = 0;
                if (auto it = specht.find(Partition{n}); it != specht.end()) triv = it->second;
                if (inv != triv)
                    fail(where, "invariant dimension " + inv.str() +
                                    " != trivial-module multiplicity " + triv.str());
            }
        }
    }
    return failures;
}

inline const std::vector<Partition>& builtin_table_shapes() {
    static const std::vector<Partition> shapes = {
        Partition{},        Partition{1},       Partition{2},    Partition{1, 1},
        Partition{3},       Partition{2, 1},    Partition{1, 1, 1}, Partition{4},
        Partition{3, 1},    Partition{2, 2},    Partition{2, 1, 1}, Partition{1, 1, 1, 1}};
    return shapes;
}

}  // namespace cli_detail

// Entry point used by both the binary and the tests.  Returns the process
// exit code: 0 success, 1 a checked identity failed, 2 bad usage or input,
// 3 a computation was refused for exceeding its budget.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::Json;
    using cli_detail::Options;

    CLI::App app{"decompositions of symmetric-power products over monomial matrix groups"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed-order", opt.seed,
                   "nonzero: deterministically reshuffle rendered summand lists");

    std::string ks_text, lambda_text, label_text, weight_text, to = "irreps";
    int n = 0, power = 0, k = 0, a = 0, b = 0, alphabet = 0, degree = 0;
    int max_degree = 5, max_n = 6;

    auto* sym = app.add_subcommand("sym-product", "decompose a product of symmetric powers");
    sym->add_option("--ks", ks_text, "exponents, comma separated")->required();
    sym->add_option("--n", n, "ambient rank")->required()->check(CLI::NonNegativeNumber);
    sym->add_option("--to", to, "target: perm, irreps or specht")
        ->check(CLI::IsMember({"perm", "irreps", "specht"}))
        ->capture_default_str();

    auto* res = app.add_subcommand("restrict-gl", "restrict a GL irreducible to the wreath group");
    res->add_option("--lambda", lambda_text, "highest weight, e.g. [2,2]")->required();
    res->add_option("--n", n, "ambient rank")->required()->check(CLI::NonNegativeNumber);

    auto* tv = app.add_subcommand("tensor-v", "multiplicity in a tensor power of the defining rep");
    tv->add_option("--label", label_text, "target label, e.g. ((1)|-|(1))")->required();
    tv->add_option("--n", n, "ambient rank")->required()->check(CLI::PositiveNumber);
    tv->add_option("--power", power, "tensor power")->required()->check(CLI::NonNegativeNumber);

    auto* inv = app.add_subcommand("invariants", "dimension of the invariant space");
    inv->add_option("--ks", ks_text, "exponents, comma separated")->required();
    inv->add_option("--n", n, "ambient rank")->required()->check(CLI::NonNegativeNumber);
    inv->add_option("--weight", weight_text, "restrict to a symmetrized weight, e.g. [2,1]");

    auto* fk = app.add_subcommand("foulkes", "scan multisets for the partition-count inequality");
    fk->add_option("--a", a, "smaller part size")->required()->check(CLI::PositiveNumber);
    fk->add_option("--b", b, "larger part size")->required()->check(CLI::PositiveNumber);
    fk->add_option("--alphabet", alphabet, "alphabet size (default a*b)");

    auto* sw = app.add_subcommand("schur-weyl", "balanced diagram dimension vs endomorphisms");
    sw->add_option("--k", k, "tensor power")->required()->check(CLI::NonNegativeNumber);
    sw->add_option("--n", n, "ambient rank")->required()->check(CLI::PositiveNumber);

    auto* gay = app.add_subcommand("gay", "weight-space invariants vs induced modules");
    gay->add_option("--degree", degree, "degree of the partitions scanned")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gay->add_option("--n", n, "ambient rank")->required()->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "cross-check the rules against the character oracle");
    ver->add_option("--max-degree", max_degree, "largest total exponent degree")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    ver->add_option("--max-n", max_n, "largest ambient rank")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* tbl = app.add_subcommand("table-4-3", "print the built-in low-degree restriction table");

    for (CLI::App* s : {sym, res, tv, inv, fk, sw, gay, ver, tbl}) s->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.push_back("wreath");
        for (const auto& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sym->parsed()) {
            const std::vector<int> ks = parse_int_list(ks_text);
            if (to == "perm")
                cli_detail::emit_summands(
                    cli_detail::sequence_rows(decompose_sym_product_to_perm(ks, n), "M~"), n, opt,
                    out);
            else if (to == "irreps")
                cli_detail::emit_summands(
                    cli_detail::sequence_rows(decompose_sym_product_to_irreps(ks, n), "V"), n, opt,
                    out);
            else
                cli_detail::emit_summands(
                    cli_detail::specht_rows(sym_product_specht_multiplicities(ks, n)), n, opt, out,
                    "specht", "shape");
            return 0;
        }

        if (res->parsed()) {
            const Partition lam = parse_partition(lambda_text);
            cli_detail::emit_summands(cli_detail::sequence_rows(restrict_gl_irrep(lam, n), "V"), n,
                                      opt, out);
            return 0;
        }

        if (tv->parsed()) {
            const PartitionSequence label = parse_sequence(label_text);
            const Integer mult = tensor_power_multiplicity(label, power, n);
            if (opt.json())
                out << Json{{"multiplicity", to_int64(mult, "multiplicity")}}.dump(2) << "\n";
            else
                out << mult.str() << "\n";
            return 0;
        }

        if (inv->parsed()) {
            const std::vector<int> ks = parse_int_list(ks_text);
            Integer dim;
            if (weight_text.empty())
                dim = invariant_dimension(ks, n);
            else
                dim = invariant_dimension_in_weight(ks, n, parse_partition(weight_text));
            if (opt.json())
                out << Json{{"dimension", to_int64(dim, "dimension")}}.dump(2) << "\n";
            else
                out << dim.str() << "\n";
            return 0;
        }

        if (fk->parsed()) {
            if (alphabet == 0) alphabet = a * b;
            const auto scan = weak_foulkes_scan(a, b, alphabet);
            if (opt.json()) {
                Json j;
                j["multisets_checked"] = scan.multisets_checked;
                Json arr = Json::array();
                for (const auto& [m, c] : scan.counterexamples)
                    arr.push_back({{"multiset", to_text(m)},
                                   {"b_parts_of_size_a", to_int64(c.b_parts_of_size_a, "count")},
                                   {"a_parts_of_size_b", to_int64(c.a_parts_of_size_b, "count")}});
                j["counterexamples"] = std::move(arr);
                out << j.dump(2) << "\n";
            } else {
                out << "checked " << scan.multisets_checked << " multisets over alphabet "
                    << alphabet << "\n";
                for (const auto& [m, c] : scan.counterexamples)
                    out << "counterexample " << to_text(m) << ": " << c.b_parts_of_size_a.str()
                        << " < " << c.a_parts_of_size_b.str() << "\n";
                if (scan.counterexamples.empty()) out << "no counterexamples\n";
            }
            return scan.counterexamples.empty() ? 0 : 1;
        }

        if (sw->parsed()) {
            const auto rep = schur_weyl_check(k, n);
            const bool expect_iso = n >= k;
            const bool ok = rep.surjective_bound_holds && (!expect_iso || rep.isomorphic);
            if (opt.json()) {
                Json j{{"k", rep.k},
                       {"n", rep.n},
                       {"balanced", to_int64(rep.balanced, "balanced")},
                       {"endomorphisms", to_int64(rep.endomorphisms, "endomorphisms")},
                       {"isomorphic", rep.isomorphic}};
                out << j.dump(2) << "\n";
            } else {
                out << "balanced = " << rep.balanced.str() << "\n";
                out << "endomorphisms = " << rep.endomorphisms.str() << "\n";
                out << "isomorphic = " << (rep.isomorphic ? "yes" : "no") << (expect_iso ? " (expected yes)"
                                                                                         : "")
                    << "\n";
            }
            return ok ? 0 : 1;
        }

        if (gay->parsed()) {
            const auto res_gay = gay_check(degree, n);
            if (opt.json()) {
                Json j;
                j["pairs_checked"] = res_gay.pairs_checked;
                Json arr = Json::array();
                for (const auto& m : res_gay.mismatches)
                    arr.push_back({{"lambda", m.lam.parts()},
                                   {"mu", m.mu.parts()},
                                   {"invariants", to_int64(m.invariants, "invariants")},
                                   {"induced", to_int64(m.induced, "induced")}});
                j["mismatches"] = std::move(arr);
                out << j.dump(2) << "\n";
            } else {
                out << "checked " << res_gay.pairs_checked << " pairs\n";
                for (const auto& m : res_gay.mismatches)
                    out << "mismatch lambda=" << to_text(m.lam) << " mu=" << to_text(m.mu)
                        << " invariants=" << m.invariants.str() << " induced=" << m.induced.str()
                        << "\n";
                if (res_gay.mismatches.empty()) out << "no mismatches\n";
            }
            return res_gay.mismatches.empty() ? 0 : 1;
        }

        if (ver->parsed()) {
            long long cases = 0;
            const auto failures = cli_detail::run_verification(max_degree, max_n, cases);
            if (opt.json()) {
                Json j;
                j["cases"] = cases;
                Json arr = Json::array();
                for (const auto& f : failures)
                    arr.push_back({{"where", f.where}, {"detail", f.detail}});
                j["failures"] = std::move(arr);
                out << j.dump(2) << "\n";
            } else {
                for (const auto& f : failures) out << "FAIL " << f.where << ": " << f.detail << "\n";
                out << "verified " << cases << " cases, " << failures.size() << " failures\n";
            }
            return failures.empty() ? 0 : 1;
        }

        if (tbl->parsed()) {
            const int ambient = 8;  // any rank at least twice the largest degree gives the stable table
            if (opt.json()) {
                Json rows = Json::array();
                for (const auto& lam : cli_detail::builtin_table_shapes()) {
                    auto decomposition = restrict_gl_irrep(lam, ambient);
                    auto summands = cli_detail::sequence_rows(decomposition, "V");
                    cli_detail::arrange(summands, opt);
                    Json arr = Json::array();
                    for (const auto& s : summands)
                        arr.push_back({{"label", s.label}, {"multiplicity", s.multiplicity}});
                    rows.push_back({{"gl", lam.parts()}, {"summands", std::move(arr)}});
                }
                out << Json{{"rows", std::move(rows)}}.dump(2) << "\n";
            } else {
                for (const auto& lam : cli_detail::builtin_table_shapes()) {
                    auto decomposition = restrict_gl_irrep(lam, ambient);
                    auto summands = cli_detail::sequence_rows(decomposition, "V");
                    cli_detail::arrange(summands, opt);
                    out << gl_text(lam) << " -> ";
                    for (size_t i = 0; i < summands.size(); ++i) {
                        if (i) out << " + ";
                        if (summands[i].multiplicity != 1) out << summands[i].multiplicity << "*";
                        out << summands[i].text;
                    }
                    out << "\n";
                }
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace wreath
