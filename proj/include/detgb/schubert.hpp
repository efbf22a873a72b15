#pragma once
// Fulton generators, the attend test, elusive minors, removed-term sets, and
// the combinatorial construction of reduced Groebner bases of Schubert
// determinantal ideals.

#include <compare>
#include <vector>

#include "detgb/minor.hpp"
#include "detgb/permutation.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

struct FultonGenerator {
    Minor minor;
    EssentialBox box;  // the essential box the minor was drawn from
    friend bool operator==(const FultonGenerator&, const FultonGenerator&) = default;
};

// For each essential box (p, q, r): all (r+1)-minors inside the northwest
// p x q rectangle, ordered by box, then rows, then columns. The same minor
// may appear under several boxes of equal rank.
std::vector<FultonGenerator> fulton_generators(const Permutation& w);

// The attend test for a generator of size m_size against another essential
// box: the intersection with the box's rectangle contains at least
// box.rank+1 full rows or full columns of the minor.
bool attends(const Minor& m, const EssentialBox& box, int m_size);

// Fulton generators attending no essential box of strictly smaller rank.
std::vector<FultonGenerator> elusive_minors(const Permutation& w);

// The elusive minors as a deduplicated set of minors (a minor drawn from two
// boxes of equal rank is kept once); this set is the minimal Groebner basis.
std::vector<Minor> elusive_minor_set(const Permutation& w);

// ([p-r, p], [q-r, q]) for (p, q) in the Rothe diagram, r its northwest rank;
// always elusive.
Minor corner_minor(const Permutation& w, int p, int q);

// Total order on generators: by degree, then row lists with larger early
// entries ranking smaller, then the same on columns. Used by the oracle-side
// sequential reduction; the closed formula below never needs it.
std::strong_ordering order_r_compare(const Minor& a, const Minor& b);
bool order_r_less(const Minor& a, const Minor& b);

// Removed terms of m1 by m2: products of a term of m2 and a term of the
// complement of m2 in m1; exactly size(m2)! * (size(m1)-size(m2))! terms.
std::vector<Term> rterm(const Minor& m1, const Minor& m2);

// Union of rterm(m, mi) over mi, deduplicated; every mi must be strictly
// contained in m.
std::vector<Term> rterm_set(const Minor& m, const std::vector<Minor>& contained);

// The closed reduction formula: expand_minor(m) with every removed term
// deleted, surviving coefficients untouched. Valid for anti-diagonal orders.
Polynomial reduce_elusive(const Minor& m, const std::vector<Minor>& contained_elusive);

struct ReducedBasisElement {
    Minor source;      // the elusive minor
    Polynomial poly;   // its expansion minus the removed terms
};

// The reduced Groebner basis of the Schubert determinantal ideal, sorted by
// leading term descending. Anti-diagonal orders work for every permutation;
// diagonal orders only for vexillary ones (where the elusive minors are
// already reduced and are returned expanded verbatim).
std::vector<ReducedBasisElement> reduced_gb_schubert(const Permutation& w,
                                                     const TermOrder& ord);

}  // namespace detgb
