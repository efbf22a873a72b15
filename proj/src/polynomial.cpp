#include "detgb/polynomial.hpp"

#include <algorithm>

#include "detgb/errors.hpp"

namespace detgb {

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    p.add_term(Term{}, c);
    return p;
}

Polynomial Polynomial::monomial(Int c, Term t) {
    Polynomial p;
    p.add_term(t, c);
    return p;
}

Int Polynomial::coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
}

bool Polynomial::has_term(const Term& t) const { return terms_.count(t) != 0; }

void Polynomial::add_term(const Term& t, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::erase_term(const Term& t) { terms_.erase(t); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

Polynomial Polynomial::times_monomial(const Int& c, const Term& t) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [u, d] : terms_) out.add_term(u.times(t), d * c);
    return out;
}

std::pair<Term, Int> Polynomial::leading(const TermOrder& ord) const {
    require(!terms_.empty(), "leading term of the zero polynomial");
    auto it = terms_.begin();
    auto best = it;
    for (++it; it != terms_.end(); ++it)
        if (ord.term_greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::vector<std::pair<Term, Int>> Polynomial::sorted_terms(const TermOrder& ord) const {
    std::vector<std::pair<Term, Int>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return ord.term_greater(a.first, b.first); });
    return out;
}

std::vector<Cell> Polynomial::support_cells() const {
    std::vector<Cell> cells;
    for (const auto& [t, c] : terms_)
        cells.insert(cells.end(), t.cells().begin(), t.cells().end());
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [t, c] : terms_) {
        auto it = o.terms_.find(t);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

}  // namespace detgb
