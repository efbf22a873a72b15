// Acceptance suite: one criterion per entry, one PASS/FAIL line each, with
// wall-time per criterion. Exits nonzero when any criterion fails.
//
//   acceptance [--seed=N] [--filter=substring]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "detgb/detail/combinations.hpp"
#include "detgb/errors.hpp"
#include "detgb/ladder.hpp"
#include "detgb/oracle.hpp"
#include "detgb/schubert.hpp"
#include "detgb/text_io.hpp"
#include "detgb/tri_char.hpp"
#include "test_support.hpp"

using namespace detgb;

namespace {

std::uint64_t g_seed = testsupport::kDefaultSeed;
int g_failures = 0;
std::ostringstream g_detail;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ++g_failures;
        g_detail << "    FAILED: " << what << "\n";
    }
}

struct Criterion {
    std::string name;
    std::function<void()> body;
};

std::vector<Polynomial> reduced_basis(const Permutation& w, const TermOrder& ord) {
    std::vector<Polynomial> out;
    for (const auto& el : reduced_gb_schubert(w, ord)) out.push_back(el.poly);
    return out;
}

// ---------------------------------------------------------------- 1
void essential_set_goldens() {
    expect(essential_set(Permutation::parse("2143")) ==
               std::vector<EssentialBox>{{1, 1, 0}, {3, 3, 2}},
           "ess(2143) = {(1,1) rank 0, (3,3) rank 2}");
    const auto ess7 = essential_set(Permutation::parse("1453276"));
    expect(ess7 == std::vector<EssentialBox>{{3, 3, 1}, {4, 2, 1}, {6, 6, 5}},
           "ess(1453276) = {(3,3),(4,2),(6,6)}");
    std::vector<int> degrees;
    for (const auto& b : ess7) degrees.push_back(b.rank + 1);
    expect(degrees == std::vector<int>{2, 2, 6}, "generator degrees (2,2,6)");
}

// ---------------------------------------------------------------- 2
void elusive_count() {
    const Permutation w = Permutation::parse("[1,9,4,2,7,6,3,5,10,8]");
    const auto distinct = elusive_minor_set(w);
    expect(distinct.size() == 91, "exactly 91 elusive minors, got " +
                                      std::to_string(distinct.size()));
}

// ---------------------------------------------------------------- 3
void formula_equals_oracle() {
    auto check_one = [](const Permutation& w, const TermOrder& ord) {
        const std::vector<Minor> elusive = elusive_minor_set(w);
        if (elusive.empty()) return;
        const std::vector<Polynomial> oracle =
            inter_reduce(testsupport::expand_all(elusive), ord);
        const auto formula = reduced_gb_schubert(w, ord);
        expect(oracle.size() == formula.size(), "basis sizes agree for " + w.to_string());
        // inter_reduce preserves the input order of elusive minors; match by
        // leading term.
        for (const auto& el : formula) {
            bool found = false;
            for (const Polynomial& p : oracle)
                if (p == el.poly) found = true;
            expect(found, "formula element matches the oracle for " + w.to_string());
        }
    };
    const TermOrder ord4 = TermOrder::scanning(ScanVariant::NEW, 4, 4);
    testsupport::for_each_permutation(4, [&](const Permutation& w) { check_one(w, ord4); });

    const TermOrder ord5 = TermOrder::scanning(ScanVariant::NEW, 5, 5);
    std::mt19937_64 rng(g_seed);
    for (int trial = 0; trial < 50; ++trial)
        check_one(testsupport::random_permutation(5, rng), ord5);
}

// ---------------------------------------------------------------- 4
void groebner_checks() {
    for (ScanVariant v : {ScanVariant::NEW, ScanVariant::SWE}) {
        const TermOrder ord = TermOrder::scanning(v, 4, 4);
        testsupport::for_each_permutation(4, [&](const Permutation& w) {
            const auto basis = reduced_basis(w, ord);
            if (basis.empty()) return;
            expect(is_groebner(basis, ord),
                   "reduced basis of " + w.to_string() + " passes under " + variant_name(v));
        });
    }
    const TermOrder diag = TermOrder::scanning(ScanVariant::NWE, 4, 4);
    const std::vector<Polynomial> fulton = {
        Polynomial::monomial(1, Term::single({1, 1})),
        expand_minor(Minor({1, 2, 3}, {1, 2, 3}))};
    expect(!is_groebner(fulton, diag),
           "Fulton generators of 2143 fail under a diagonal order");
}

// ---------------------------------------------------------------- 5
void minimal_but_not_reduced() {
    const TermOrder ord = TermOrder::scanning(ScanVariant::NEW, 4, 4);
    const auto elusive =
        testsupport::expand_all(elusive_minor_set(Permutation::parse("2143")));
    expect(is_minimal_gb(elusive, ord), "elusive minors of 2143 are minimal");
    expect(!is_reduced_gb(elusive, ord), "elusive minors of 2143 are not reduced");
}

// ---------------------------------------------------------------- 6
void vexillary_reducedness() {
    std::mt19937_64 rng(g_seed + 6);
    const TermOrder anti = TermOrder::scanning(ScanVariant::NEW, 6, 6);
    const TermOrder diag = TermOrder::scanning(ScanVariant::NWE, 6, 6);
    int sampled = 0;
    while (sampled < 30) {
        const Permutation w = testsupport::random_permutation(6, rng);
        if (!is_vexillary(w)) continue;
        const auto elusive = testsupport::expand_all(elusive_minor_set(w));
        if (elusive.empty()) continue;
        ++sampled;
        expect(is_reduced_gb(elusive, anti),
               "elusive minors of vexillary " + w.to_string() + " reduced under new");
        expect(is_reduced_gb(elusive, diag),
               "elusive minors of vexillary " + w.to_string() + " reduced under nwe");
    }
}

// ---------------------------------------------------------------- 7
void reduced_implies_vexillary() {
    testsupport::for_each_permutation(4, [](const Permutation& w) {
        if (is_vexillary(w)) return;
        const auto elusive = elusive_minor_set(w);
        bool reducible_pair = false;
        for (const Minor& a : elusive)
            for (const Minor& b : elusive)
                if (!(a == b) && contains(a, b) && !rterm(a, b).empty())
                    reducible_pair = true;
        expect(reducible_pair,
               "non-vexillary " + w.to_string() + " has a reducible elusive pair");
    });
}

// ---------------------------------------------------------------- 8
void single_minor_reduction_formula() {
    const TermOrder ord = TermOrder::scanning(ScanVariant::NEW, 5, 5);
    std::vector<int> indices = {1, 2, 3, 4, 5};
    std::vector<Minor> minors;
    for (int size = 1; size <= 4; ++size)
        detail::for_each_subset(indices, size, [&](const std::vector<int>& rows) {
            detail::for_each_subset(indices, size, [&](const std::vector<int>& cols) {
                minors.emplace_back(rows, cols);
            });
        });
    for (const Minor& m1 : minors)
        for (const Minor& m2 : minors) {
            if (m1 == m2 || !contains(m1, m2)) continue;
            Polynomial formula = expand_minor(m1);
            for (const Term& t : rterm(m1, m2)) formula.erase_term(t);
            const Polynomial oracle =
                normal_form(expand_minor(m1), {expand_minor(m2)}, ord);
            expect(formula == oracle, "removal formula equals the oracle normal form");
        }
}

// ---------------------------------------------------------------- 9
void length_divisibility() {
    std::mt19937_64 rng(g_seed + 9);
    int blocks = 0;
    while (blocks < 200) {
        const Block b = testsupport::random_diagonal_block(8, 8, rng);
        if (b.empty()) continue;
        ++blocks;
        const int degree = std::uniform_int_distribution<int>(1, 6)(rng);
        const Term t = testsupport::random_minor_term(8, 8, degree, rng);
        for (int r = 1; r <= 4; ++r) {
            const bool by_length = divisible_by_block_minor(t, b, r, OrderKind::diagonal);
            const bool by_search =
                find_block_minor_witness(t, b, r, OrderKind::diagonal).has_value();
            expect(by_length == by_search, "length criterion equals witness search");
        }
    }
}

// ---------------------------------------------------------------- 10
void normality() {
    const TermOrder ord5 = TermOrder::scanning(ScanVariant::NEW, 5, 5);
    testsupport::for_each_permutation(5, [&](const Permutation& w) {
        if (!is_vexillary(w)) return;
        const auto basis = reduced_basis(w, ord5);
        if (basis.empty()) return;
        expect(is_normal(w_characteristic_set(basis, ord5), ord5),
               "W-characteristic set of vexillary " + w.to_string() + " is normal");
    });

    const TermOrder ord7 = TermOrder::scanning(ScanVariant::NEW, 7, 7);
    const auto basis7 = reduced_basis(Permutation::parse("1453276"), ord7);
    const TriangularSet ts = w_characteristic_set(basis7, ord7);
    const NormalityReport report = check_normality(ts, ord7);
    expect(!report.normal, "1453276 is not normal under new");
    bool witness = false;
    for (const auto& v : report.violations)
        if (v.element_lv == Cell{1, 6} && v.offending_var == Cell{3, 2}) witness = true;
    expect(witness, "violation pins lv x[1,6] with offending variable x[3,2]");
    bool has16 = false;
    for (const Polynomial& p : ts.polys)
        if (leading_variable(p, ord7) == Cell{1, 6}) has16 = true;
    expect(has16, "the reduced six-minor keeps leading variable x[1,6]");
}

// ---------------------------------------------------------------- 11
void strong_pairs() {
    const TermOrder ord4 = TermOrder::scanning(ScanVariant::NEW, 4, 4);
    testsupport::for_each_permutation(4, [&](const Permutation& w) {
        const auto basis = reduced_basis(w, ord4);
        if (basis.empty()) return;
        expect(strong_pair_partial_check(basis, w_characteristic_set(basis, ord4), ord4),
               "strong-pair evidence for " + w.to_string());
    });
    const TermOrder ord7 = TermOrder::scanning(ScanVariant::NEW, 7, 7);
    const auto basis7 = reduced_basis(Permutation::parse("1453276"), ord7);
    expect(strong_pair_partial_check(basis7, w_characteristic_set(basis7, ord7), ord7),
           "strong-pair evidence for 1453276");
}

// ---------------------------------------------------------------- 12
void two_sided_reduced_bases() {
    setenv("DETGB_MAX_SCALE", "200", 1);
    std::mt19937_64 rng(g_seed + 12);
    std::vector<std::pair<Ladder, std::vector<int>>> samples;
    while (samples.size() < 10) {
        const Ladder ladder = testsupport::random_two_sided_ladder(5, 5, rng);
        const std::vector<int> r = {static_cast<int>(rng() % 2) + 1,
                                    static_cast<int>(rng() % 2) + 1};
        std::size_t count = 0;
        for (const auto& group : two_sided_generators(ladder, r)) count += group.size();
        if (count == 0 || count > 150) continue;
        samples.push_back({ladder, r});
    }
    auto run_order = [&](ScanVariant v, bool assert_result) {
        const TermOrder ord = TermOrder::scanning(v, 5, 5);
        bool all_ok = true;
        for (const auto& [ladder, r] : samples) {
            std::vector<Polynomial> gens;
            for (const auto& group : two_sided_generators(ladder, r))
                for (const Minor& m : group) gens.push_back(expand_minor(m));
            const bool gb = is_groebner(gens, ord);
            const bool reduced = is_reduced_gb(gens, ord);
            if (assert_result) {
                expect(gb, "two-sided generators form a basis under " + variant_name(v));
                expect(reduced, "two-sided generators are reduced under " + variant_name(v));
            }
            all_ok = all_ok && gb && reduced;
        }
        return all_ok;
    };
    run_order(ScanVariant::NWE, true);
    run_order(ScanVariant::SEN, true);
    // The remaining diagonal variants are recorded without asserting.
    const bool nws = run_order(ScanVariant::NWS, false);
    const bool sew = run_order(ScanVariant::SEW, false);
    g_detail << "    note: nws " << (nws ? "passed" : "FAILED") << ", sew "
             << (sew ? "passed" : "FAILED") << " (recorded, not asserted)\n";
    unsetenv("DETGB_MAX_SCALE");
}

// ---------------------------------------------------------------- 13
void ladder_round_trip() {
    // Every one-sided spec with a_k + b_1 <= 6.
    int specs = 0;
    std::function<void(std::vector<int>&, std::vector<int>&, std::vector<int>&)> extend =
        [&](std::vector<int>& a, std::vector<int>& b, std::vector<int>& r) {
            // The correspondence needs n >= a_k + b_1; prune branches that
            // already exceed the S6 bound (extensions only grow a_k).
            if (!a.empty() && a.back() + b.front() > 6) return;
            if (!a.empty()) {
                BlockwiseIdealSpec spec = one_sided_ideal(a, b, r, 6, 6);
                const Permutation w = ladder_to_vexillary(spec, 6);
                std::vector<EssentialBox> wanted;
                for (std::size_t i = 0; i < a.size(); ++i)
                    wanted.push_back({a[i], b[i], r[i] - 1});
                std::sort(wanted.begin(), wanted.end(),
                          [](const EssentialBox& x, const EssentialBox& y) {
                              return std::pair(x.row, x.col) < std::pair(y.row, y.col);
                          });
                expect(is_vexillary(w), "correspondent is vexillary");
                expect(essential_set(w) == wanted, "essential set reproduces the spec");
                ++specs;
            }
            // Row bounds weakly increase and column bounds weakly decrease;
            // the shifted staircase values a-r strictly increase from >= 0
            // and b-r strictly decrease to >= 0.
            const int prev_a = a.empty() ? 1 : a.back();
            const int prev_b = a.empty() ? 5 : b.back();
            const int prev_ar = a.empty() ? -1 : a.back() - r.back();
            const int prev_br = a.empty() ? 100 : b.back() - r.back();
            for (int na = prev_a; na <= 5; ++na)
                for (int nb = 1; nb <= prev_b; ++nb)
                    for (int nr = 1; nr <= std::min(na, nb); ++nr) {
                        if (na - nr <= prev_ar || nb - nr >= prev_br) continue;
                        a.push_back(na);
                        b.push_back(nb);
                        r.push_back(nr);
                        extend(a, b, r);
                        a.pop_back();
                        b.pop_back();
                        r.pop_back();
                    }
        };
    std::vector<int> a, b, r;
    extend(a, b, r);
    expect(specs > 0, "enumerated at least one spec");
    g_detail << "    note: " << specs << " one-sided specs checked\n";
}

// ---------------------------------------------------------------- 14
void performance_budget() {
    const auto start = std::chrono::steady_clock::now();
    const Permutation w = Permutation::parse("[1,9,4,2,7,6,3,5,10,8]");
    const TermOrder ord = TermOrder::scanning(ScanVariant::NEW, 10, 10);
    const auto basis = reduced_gb_schubert(w, ord);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    expect(basis.size() == 91, "reduced basis has 91 elements");
    expect(ms < 60000, "completed within 60 s (took " + std::to_string(ms) + " ms)");
    g_detail << "    note: reduced basis of the S10 example took " << ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string filter;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--seed=", 0) == 0) g_seed = std::strtoull(arg.c_str() + 7, nullptr, 10);
        if (arg.rfind("--filter=", 0) == 0) filter = arg.substr(9);
    }

    const std::vector<Criterion> criteria = {
        {"1 essential-set golden values", essential_set_goldens},
        {"2 elusive count of the S10 example", elusive_count},
        {"3 closed formula equals oracle inter-reduction (S4 + 50 x S5)", formula_equals_oracle},
        {"4 groebner verification incl. the diagonal failure", groebner_checks},
        {"5 minimal-but-not-reduced witness", minimal_but_not_reduced},
        {"6 vexillary elusive minors are reduced (30 x S6)", vexillary_reducedness},
        {"7 reduced implies vexillary, contrapositive on S4", reduced_implies_vexillary},
        {"8 single-minor removal formula vs oracle, exhaustive 5x5", single_minor_reduction_formula},
        {"9 length-based divisibility vs witness search (200 blocks)", length_divisibility},
        {"10 normality of W-characteristic sets", normality},
        {"11 strong-pair partial check", strong_pairs},
        {"12 two-sided ladder reduced bases (10 ladders)", two_sided_reduced_bases},
        {"13 ladder <-> vexillary round trip in S6", ladder_round_trip},
        {"14 performance budget for the S10 example", performance_budget},
    };

    int failed_criteria = 0;
    for (const Criterion& c : criteria) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
        g_failures = 0;
        g_detail.str("");
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body();
        } catch (const std::exception& e) {
            ++g_failures;
            g_detail << "    EXCEPTION: " << e.what() << "\n";
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool ok = g_failures == 0;
        if (!ok) ++failed_criteria;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << " (" << ms << " ms)\n"
                  << g_detail.str();
    }
    if (failed_criteria > 0) {
        std::cout << failed_criteria << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
