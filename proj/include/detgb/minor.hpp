#pragma once
// Minors of the generic matrix identified by their row and column index
// sets, their signed expansion, closed-form leading terms, and containment.

#include <compare>
#include <vector>

#include "detgb/polynomial.hpp"
#include "detgb/term.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

struct Minor {
    std::vector<int> rows;  // strictly increasing
    std::vector<int> cols;  // strictly increasing, same length as rows
    Minor(std::vector<int> r, std::vector<int> c);
    int size() const { return static_cast<int>(rows.size()); }
    friend bool operator==(const Minor&, const Minor&) = default;
    friend auto operator<=>(const Minor&, const Minor&) = default;
};

// Signed Leibniz expansion relative to ascending rows and columns: size()!
// terms, every coefficient +-1.
Polynomial expand_minor(const Minor& m);

// Anti-diagonal product (rows[k], cols[r+1-k]) resp. diagonal product
// (rows[k], cols[k]); equals the lexicographic maximum of expand_minor under
// any term order of the matching kind.
Term leading_term(const Minor& m, OrderKind kind);
Term leading_term(const Minor& m, const TermOrder& ord);
Int leading_coefficient(const Minor& m, OrderKind kind);

bool contains(const Minor& outer, const Minor& inner);

// Rows and columns of `outer` not used by `inner`; requires strict
// containment.
Minor complement(const Minor& outer, const Minor& inner);

}  // namespace detgb
