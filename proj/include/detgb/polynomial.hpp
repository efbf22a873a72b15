#pragma once
// Sparse polynomials over the cells of the generic matrix with exact integer
// coefficients. The zero polynomial is the empty term map; no zero
// coefficient is ever stored.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detgb/term.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

using Int = boost::multiprecision::cpp_int;

class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(Int c);
    static Polynomial monomial(Int c, Term t);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::unordered_map<Term, Int, TermHash>& terms() const { return terms_; }

    Int coeff(const Term& t) const;
    bool has_term(const Term& t) const;
    void add_term(const Term& t, const Int& c);  // accumulates; drops zeros
    void erase_term(const Term& t);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial times_monomial(const Int& c, const Term& t) const;

    std::pair<Term, Int> leading(const TermOrder& ord) const;  // throws on zero
    std::vector<std::pair<Term, Int>> sorted_terms(const TermOrder& ord) const;  // descending
    std::vector<Cell> support_cells() const;  // distinct, sorted row-major
    int total_degree() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    std::unordered_map<Term, Int, TermHash> terms_;
};

}  // namespace detgb
