#include "detgb/tri_char.hpp"

#include <algorithm>
#include <map>

#include "detgb/errors.hpp"
#include "detgb/oracle.hpp"

namespace detgb {

Cell leading_variable(const Polynomial& P, const TermOrder& ord) {
    require(!P.is_zero(), "leading variable of the zero polynomial");
    const std::vector<Cell> support = P.support_cells();
    require(!support.empty(), "leading variable of a constant polynomial");
    return ord.greatest_cell(support);
}

Polynomial initial_of(const Polynomial& P, const TermOrder& ord) {
    require(!P.is_zero(), "initial of the zero polynomial");
    const std::vector<Cell> support = P.support_cells();
    if (support.empty()) return P;  // a constant is its own initial
    const Cell lv = ord.greatest_cell(support);
    int top = 0;
    for (const auto& [t, c] : P.terms()) {
        int mult = 0;
        for (const Cell& cell : t.cells())
            if (cell == lv) ++mult;
        top = std::max(top, mult);
    }
    Term power;
    for (int k = 0; k < top; ++k) power = power.times(Term::single(lv));
    Polynomial out;
    for (const auto& [t, c] : P.terms()) {
        int mult = 0;
        for (const Cell& cell : t.cells())
            if (cell == lv) ++mult;
        if (mult == top) out.add_term(t.divided_by(power), c);
    }
    return out;
}

namespace {

// Lexicographic comparison of whole polynomials: walk the sorted term lists
// from the top; the first differing term decides, a strict prefix is smaller.
bool poly_lex_less(const Polynomial& a, const Polynomial& b, const TermOrder& ord) {
    const auto ta = a.sorted_terms(ord);
    const auto tb = b.sorted_terms(ord);
    for (std::size_t k = 0; k < std::min(ta.size(), tb.size()); ++k) {
        const auto cmp = ord.term_compare(ta[k].first, tb[k].first);
        if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    }
    return ta.size() < tb.size();
}

}  // namespace

TriangularSet w_characteristic_set(const std::vector<Polynomial>& G, const TermOrder& ord) {
    require(is_reduced_gb(G, ord),
            "W-characteristic extraction expects a reduced Groebner basis");
    std::map<int, const Polynomial*> minimal_by_lv;  // keyed by variable rank
    for (const Polynomial& g : G) {
        const int rank = ord.var_rank(leading_variable(g, ord));
        auto it = minimal_by_lv.find(rank);
        if (it == minimal_by_lv.end() || poly_lex_less(g, *it->second, ord))
            minimal_by_lv[rank] = &g;
    }
    TriangularSet ts;
    // Ascending leading variable = descending rank.
    for (auto it = minimal_by_lv.rbegin(); it != minimal_by_lv.rend(); ++it)
        ts.polys.push_back(*it->second);
    return ts;
}

NormalityReport check_normality(const TriangularSet& ts, const TermOrder& ord) {
    std::vector<Cell> lvs;
    for (const Polynomial& p : ts.polys) lvs.push_back(leading_variable(p, ord));
    NormalityReport report;
    for (const Polynomial& p : ts.polys) {
        const Polynomial ini = initial_of(p, ord);
        for (const Cell& c : ini.support_cells())
            if (std::find(lvs.begin(), lvs.end(), c) != lvs.end())
                report.violations.push_back({leading_variable(p, ord), c});
    }
    report.normal = report.violations.empty();
    return report;
}

bool is_normal(const TriangularSet& ts, const TermOrder& ord) {
    return check_normality(ts, ord).normal;
}

bool strong_pair_partial_check(const std::vector<Polynomial>& G, const TriangularSet& ts,
                               const TermOrder& ord) {
    for (const Polynomial& p : ts.polys) {
        const Polynomial ini = initial_of(p, ord);
        if (normal_form(ini, G, ord).is_zero()) return false;
    }
    return true;
}

}  // namespace detgb
