#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "detgb/detail/combinations.hpp"
#include "detgb/errors.hpp"
#include "detgb/minor.hpp"
#include "detgb/term_order.hpp"
#include "test_support.hpp"

using namespace detgb;

namespace {

Term T(std::vector<Cell> cells) { return Term::from_cells(std::move(cells)); }

const std::vector<ScanVariant> kAllVariants = {
    ScanVariant::NEW, ScanVariant::NES, ScanVariant::SWE, ScanVariant::SWN,
    ScanVariant::NWE, ScanVariant::NWS, ScanVariant::SEW, ScanVariant::SEN};

}  // namespace

TEST_CASE("variant names and kinds") {
    CHECK(variant_from_name("new") == ScanVariant::NEW);
    CHECK(variant_from_name("sen") == ScanVariant::SEN);
    CHECK_FALSE(variant_from_name("lex").has_value());
    CHECK(variant_kind(ScanVariant::SWN) == OrderKind::anti_diagonal);
    CHECK(variant_kind(ScanVariant::NWS) == OrderKind::diagonal);
    for (ScanVariant v : kAllVariants) CHECK(variant_from_name(variant_name(v)) == v);
}

TEST_CASE("NEW scans row by row to the west") {
    const TermOrder ord = TermOrder::scanning(ScanVariant::NEW, 3, 3);
    const std::vector<Cell> expected = {{1, 3}, {1, 2}, {1, 1}, {2, 3}, {2, 2},
                                        {2, 1}, {3, 3}, {3, 2}, {3, 1}};
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(ord.var_rank(expected[k]) == static_cast<int>(k));
    CHECK(ord.var_compare({1, 3}, {1, 2}) == std::strong_ordering::greater);
    CHECK(ord.var_compare({2, 2}, {2, 2}) == std::strong_ordering::equal);
    CHECK_THROWS_AS(ord.var_rank({0, 1}), InvalidInput);
    CHECK_THROWS_AS(ord.var_rank({1, 4}), InvalidInput);
}

TEST_CASE("SWE scans upward row by row to the east") {
    const TermOrder ord = TermOrder::scanning(ScanVariant::SWE, 3, 3);
    const std::vector<Cell> expected = {{3, 1}, {3, 2}, {3, 3}, {2, 1}, {2, 2},
                                        {2, 3}, {1, 1}, {1, 2}, {1, 3}};
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(ord.var_rank(expected[k]) == static_cast<int>(k));
}

TEST_CASE("term comparison golden values") {
    const TermOrder ord = TermOrder::scanning(ScanVariant::NEW, 3, 3);
    const Term t = T({{1, 3}, {2, 2}, {3, 1}});
    const Term u = T({{1, 3}, {2, 1}, {3, 2}});
    CHECK(ord.term_compare(t, t) == std::strong_ordering::equal);
    CHECK(ord.term_compare(t, u) == std::strong_ordering::greater);
    CHECK(ord.term_compare(u, Term{}) == std::strong_ordering::greater);
    // Exponents take part in the comparison.
    const Term sq = T({{1, 3}, {1, 3}});
    CHECK(ord.term_compare(sq, T({{1, 3}})) == std::strong_ordering::greater);
    CHECK(ord.term_compare(sq, T({{1, 3}, {1, 2}})) == std::strong_ordering::greater);
}

TEST_CASE("term order is total and multiplicative") {
    std::mt19937_64 rng(testsupport::kDefaultSeed);
    const TermOrder ord = TermOrder::scanning(ScanVariant::NES, 5, 5);
    std::vector<Term> sample;
    for (int k = 0; k < 60; ++k)
        sample.push_back(testsupport::random_minor_term(
            5, 5, std::uniform_int_distribution<int>(0, 4)(rng), rng));
    for (const Term& a : sample)
        for (const Term& b : sample) {
            const auto ab = ord.term_compare(a, b);
            const auto ba = ord.term_compare(b, a);
            if (a == b)
                CHECK(ab == std::strong_ordering::equal);
            else
                CHECK(((ab == std::strong_ordering::less && ba == std::strong_ordering::greater) ||
                       (ab == std::strong_ordering::greater && ba == std::strong_ordering::less)));
        }
    for (const Term& a : sample)
        for (const Term& b : sample)
            for (const Term& c : sample)
                if (ord.term_less(a, b) && ord.term_less(b, c)) CHECK(ord.term_less(a, c));
    // u < v implies uw < vw.
    for (int trial = 0; trial < 200; ++trial) {
        const Term& a = sample[rng() % sample.size()];
        const Term& b = sample[rng() % sample.size()];
        const Term w = testsupport::random_minor_term(5, 5, 2, rng);
        if (ord.term_less(a, b)) CHECK(ord.term_less(a.times(w), b.times(w)));
    }
    // Any nonempty set has a minimum under a total order; sorting realizes it.
    std::vector<Term> sorted = sample;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Term& x, const Term& y) { return ord.term_less(x, y); });
    for (const Term& t : sample) CHECK_FALSE(ord.term_less(t, sorted.front()));
}

TEST_CASE("corner property holds for the eight variants") {
    for (ScanVariant v : kAllVariants) {
        CHECK(check_corner_property(TermOrder::scanning(v, 5, 5)));
        CHECK(check_corner_property(TermOrder::scanning(v, 1, 1)));
        CHECK(check_corner_property(TermOrder::scanning(v, 3, 6)));
    }
    CHECK_THROWS_AS(check_corner_property(TermOrder::scanning(ScanVariant::NEW, 11, 11)),
                    ScaleLimit);
}

TEST_CASE("custom orders are validated by the corner property") {
    // Row-major listing equals NWE: a valid diagonal order.
    std::vector<Cell> row_major;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) row_major.push_back({i, j});
    const TermOrder ok = TermOrder::custom(row_major, OrderKind::diagonal, 3, 3);
    CHECK(ok.var_rank({1, 1}) == 0);

    // The same listing is not anti-diagonal.
    CHECK_THROWS_AS(TermOrder::custom(row_major, OrderKind::anti_diagonal, 3, 3), InvalidInput);

    // A scrambled order that places the greatest variable mid-matrix fails.
    std::vector<Cell> scrambled = {{2, 2}, {1, 3}, {1, 2}, {1, 1}, {2, 3},
                                   {2, 1}, {3, 3}, {3, 2}, {3, 1}};
    CHECK_THROWS_AS(TermOrder::custom(scrambled, OrderKind::anti_diagonal, 3, 3), InvalidInput);
    CHECK_THROWS_AS(TermOrder::custom(scrambled, OrderKind::diagonal, 3, 3), InvalidInput);

    std::vector<Cell> incomplete = {{1, 1}};
    CHECK_THROWS_AS(TermOrder::custom(incomplete, OrderKind::diagonal, 3, 3), InvalidInput);
}

TEST_CASE("leading terms of minors are the (anti-)diagonal products, exhaustively") {
    std::vector<int> indices = {1, 2, 3, 4, 5, 6};
    for (ScanVariant v : kAllVariants) {
        const TermOrder ord = TermOrder::scanning(v, 6, 6);
        for (int size = 1; size <= 4; ++size) {
            detail::for_each_subset(indices, size, [&](const std::vector<int>& rows) {
                detail::for_each_subset(indices, size, [&](const std::vector<int>& cols) {
                    const Minor m(rows, cols);
                    const Polynomial p = expand_minor(m);
                    const auto [lt, lc] = p.leading(ord);
                    CHECK(lt == leading_term(m, ord));
                    CHECK(lc == leading_coefficient(m, ord.kind()));
                });
            });
        }
    }
}

TEST_CASE("corner property implies anti-diagonal leading terms on random minors") {
    std::mt19937_64 rng(testsupport::kDefaultSeed + 1);
    const TermOrder ord = TermOrder::scanning(ScanVariant::SWN, 8, 8);
    REQUIRE(check_corner_property(ord));
    for (int trial = 0; trial < 40; ++trial) {
        const int size = std::uniform_int_distribution<int>(1, 5)(rng);
        const Term t = testsupport::random_minor_term(8, 8, size, rng);
        std::vector<int> rows = t.row_sequence();
        std::vector<int> cols = t.col_sequence();
        std::sort(cols.begin(), cols.end());
        const Minor m(rows, cols);
        CHECK(expand_minor(m).leading(ord).first == leading_term(m, OrderKind::anti_diagonal));
    }
}
