#include "detgb/schubert.hpp"

#include <algorithm>
#include <unordered_set>

#include "detgb/detail/combinations.hpp"
#include "detgb/errors.hpp"

namespace detgb {

std::vector<FultonGenerator> fulton_generators(const Permutation& w) {
    std::vector<FultonGenerator> out;
    for (const EssentialBox& box : essential_set(w)) {
        const int size = box.rank + 1;
        std::vector<int> row_pool(box.row), col_pool(box.col);
        for (int i = 0; i < box.row; ++i) row_pool[i] = i + 1;
        for (int j = 0; j < box.col; ++j) col_pool[j] = j + 1;
        detail::for_each_subset(row_pool, size, [&](const std::vector<int>& rows) {
            detail::for_each_subset(col_pool, size, [&](const std::vector<int>& cols) {
                out.push_back({Minor(rows, cols), box});
            });
        });
    }
    return out;
}

bool attends(const Minor& m, const EssentialBox& box, int m_size) {
    const int other_size = box.rank + 1;
    int rows_in = 0, cols_in = 0;
    for (int i : m.rows)
        if (i <= box.row) ++rows_in;
    for (int j : m.cols)
        if (j <= box.col) ++cols_in;
    return (rows_in >= other_size && cols_in == m_size) ||
           (rows_in == m_size && cols_in >= other_size);
}

std::vector<FultonGenerator> elusive_minors(const Permutation& w) {
    const std::vector<EssentialBox> ess = essential_set(w);
    std::vector<FultonGenerator> out;
    for (const FultonGenerator& gen : fulton_generators(w)) {
        bool elusive = true;
        for (const EssentialBox& other : ess) {
            if (other.rank >= gen.box.rank) continue;
            if (attends(gen.minor, other, gen.box.rank + 1)) {
                elusive = false;
                break;
            }
        }
        if (elusive) out.push_back(gen);
    }
    return out;
}

std::vector<Minor> elusive_minor_set(const Permutation& w) {
    std::vector<Minor> out;
    for (const FultonGenerator& gen : elusive_minors(w))
        if (std::find(out.begin(), out.end(), gen.minor) == out.end()) out.push_back(gen.minor);
    return out;
}

Minor corner_minor(const Permutation& w, int p, int q) {
    const std::vector<Cell> diagram = rothe_diagram(w);
    require(std::find(diagram.begin(), diagram.end(), Cell{p, q}) != diagram.end(),
            "(" + std::to_string(p) + "," + std::to_string(q) +
                ") is not a box of the Rothe diagram");
    const int r = rank_nw(w, p, q);
    std::vector<int> rows(r + 1), cols(r + 1);
    for (int k = 0; k <= r; ++k) {
        rows[k] = p - r + k;
        cols[k] = q - r + k;
    }
    return Minor(std::move(rows), std::move(cols));
}

std::strong_ordering order_r_compare(const Minor& a, const Minor& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (int k = 0; k < a.size(); ++k)
        if (a.rows[k] != b.rows[k]) return b.rows[k] <=> a.rows[k];  // larger entry is smaller
    for (int k = 0; k < a.size(); ++k)
        if (a.cols[k] != b.cols[k]) return b.cols[k] <=> a.cols[k];
    return std::strong_ordering::equal;
}

bool order_r_less(const Minor& a, const Minor& b) {
    return order_r_compare(a, b) == std::strong_ordering::less;
}

std::vector<Term> rterm(const Minor& m1, const Minor& m2) {
    require(contains(m1, m2) && !(m1 == m2), "removed terms need a strictly contained minor");
    const Minor rest = complement(m1, m2);
    const Polynomial inner = expand_minor(m2);
    const Polynomial outer = expand_minor(rest);
    std::vector<Term> out;
    out.reserve(inner.term_count() * outer.term_count());
    for (const auto& [t, c] : inner.terms())
        for (const auto& [u, d] : outer.terms()) out.push_back(t.times(u));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> rterm_set(const Minor& m, const std::vector<Minor>& contained) {
    std::unordered_set<Term, TermHash> seen;
    for (const Minor& inner : contained)
        for (Term& t : rterm(m, inner)) seen.insert(std::move(t));
    std::vector<Term> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial reduce_elusive(const Minor& m, const std::vector<Minor>& contained_elusive) {
    Polynomial p = expand_minor(m);
    for (const Term& t : rterm_set(m, contained_elusive)) p.erase_term(t);
    return p;
}

std::vector<ReducedBasisElement> reduced_gb_schubert(const Permutation& w,
                                                     const TermOrder& ord) {
    require(ord.rows() >= w.size() && ord.cols() >= w.size(),
            "term order dimensions too small for the permutation");
    const bool vex = is_vexillary(w);
    if (ord.kind() == OrderKind::diagonal && !vex)
        throw Unsupported(
            "diagonal term orders are supported only for vexillary (2143-avoiding) "
            "permutations; for " +
            w.to_string() + " the generators fail to form a Groebner basis there");

    const std::vector<Minor> elusive = elusive_minor_set(w);
    std::vector<ReducedBasisElement> out;
    out.reserve(elusive.size());
    for (const Minor& m : elusive) {
        if (ord.kind() == OrderKind::diagonal) {
            // Vexillary case: the elusive minors are already reduced.
            out.push_back({m, expand_minor(m)});
            continue;
        }
        std::vector<Minor> inside;
        for (const Minor& other : elusive)
            if (!(other == m) && contains(m, other)) inside.push_back(other);
        out.push_back({m, reduce_elusive(m, inside)});
    }
    std::sort(out.begin(), out.end(), [&](const ReducedBasisElement& a,
                                          const ReducedBasisElement& b) {
        return ord.term_greater(leading_term(a.source, ord), leading_term(b.source, ord));
    });
    return out;
}

}  // namespace detgb
