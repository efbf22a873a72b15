#include "detgb/minor.hpp"

#include <algorithm>
#include <numeric>

#include "detgb/errors.hpp"

namespace detgb {

namespace {

void require_strictly_increasing(const std::vector<int>& xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        require(xs[i] >= 1, std::string(what) + " indices must be >= 1");
        require(i == 0 || xs[i] > xs[i - 1],
                std::string(what) + " indices must be strictly increasing");
    }
}

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Minor::Minor(std::vector<int> r, std::vector<int> c) : rows(std::move(r)), cols(std::move(c)) {
    require(rows.size() == cols.size(), "a minor needs equally many rows and columns");
    require(!rows.empty(), "a minor needs at least one row");
    require_strictly_increasing(rows, "row");
    require_strictly_increasing(cols, "column");
}

Polynomial expand_minor(const Minor& m) {
    const int r = m.size();
    Polynomial out;
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Cell> cells(r);
        for (int k = 0; k < r; ++k) cells[k] = {m.rows[k], m.cols[perm[k]]};
        out.add_term(Term::from_cells(std::move(cells)), permutation_parity(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Term leading_term(const Minor& m, OrderKind kind) {
    const int r = m.size();
    std::vector<Cell> cells(r);
    for (int k = 0; k < r; ++k) {
        const int col = kind == OrderKind::anti_diagonal ? m.cols[r - 1 - k] : m.cols[k];
        cells[k] = {m.rows[k], col};
    }
    return Term::from_cells(std::move(cells));
}

Term leading_term(const Minor& m, const TermOrder& ord) { return leading_term(m, ord.kind()); }

Int leading_coefficient(const Minor& m, OrderKind kind) {
    if (kind == OrderKind::diagonal) return 1;
    const int r = m.size();
    return (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
}

bool contains(const Minor& outer, const Minor& inner) {
    return std::includes(outer.rows.begin(), outer.rows.end(), inner.rows.begin(),
                         inner.rows.end()) &&
           std::includes(outer.cols.begin(), outer.cols.end(), inner.cols.begin(),
                         inner.cols.end());
}

Minor complement(const Minor& outer, const Minor& inner) {
    require(contains(outer, inner), "complement of a minor that is not contained");
    require(inner.size() < outer.size(), "complement of a minor by itself is empty");
    std::vector<int> rows, cols;
    std::set_difference(outer.rows.begin(), outer.rows.end(), inner.rows.begin(),
                        inner.rows.end(), std::back_inserter(rows));
    std::set_difference(outer.cols.begin(), outer.cols.end(), inner.cols.begin(),
                        inner.cols.end(), std::back_inserter(cols));
    return Minor(std::move(rows), std::move(cols));
}

}  // namespace detgb
