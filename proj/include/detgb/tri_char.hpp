#pragma once
// W-characteristic sets extracted from reduced lexicographic Groebner bases,
// the normality test, and the partial strong-pair check.

#include <optional>
#include <vector>

#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// Ordered by strictly increasing leading variable under the active order.
struct TriangularSet {
    std::vector<Polynomial> polys;
};

// Greatest variable effectively appearing in P.
Cell leading_variable(const Polynomial& P, const TermOrder& ord);

// Coefficient polynomial of the highest power of the leading variable when P
// is written univariately in it.
Polynomial initial_of(const Polynomial& P, const TermOrder& ord);

// The lexicographically minimal basis element per leading variable, in
// increasing leading-variable order. The input must be a reduced Groebner
// basis (checked).
TriangularSet w_characteristic_set(const std::vector<Polynomial>& G, const TermOrder& ord);

struct NormalityViolation {
    Cell element_lv;      // leading variable of the element whose initial misbehaves
    Cell offending_var;   // leading variable of the set appearing in that initial
    friend bool operator==(const NormalityViolation&, const NormalityViolation&) = default;
};

struct NormalityReport {
    bool normal = true;
    std::vector<NormalityViolation> violations;  // all offending pairs, in set order
};

NormalityReport check_normality(const TriangularSet& ts, const TermOrder& ord);
bool is_normal(const TriangularSet& ts, const TermOrder& ord);

// The consequence of strongness that is checkable without saturation
// machinery: no initial of the W-characteristic set reduces to zero modulo
// the reduced basis. One-directional evidence only.
bool strong_pair_partial_check(const std::vector<Polynomial>& G, const TriangularSet& ts,
                               const TermOrder& ord);

}  // namespace detgb
