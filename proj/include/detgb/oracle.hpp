#pragma once
// Desk-scale classical oracle: polynomial reduction, S-polynomials,
// Buchberger verification, minimal/reduced audits, inter-reduction, and the
// generalized Laplace expansion. Everything here is meant to arbitrate the
// combinatorial constructions, so the code stays as close to the textbook
// definitions as possible.

#include <cstdint>
#include <optional>
#include <vector>

#include "detgb/minor.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// One reduction step of P modulo Q at the term t of P: subtracts
// (coeff_P(t)/lc(Q)) * (t/lt(Q)) * Q. Divisors must have leading coefficient
// +-1, which keeps the arithmetic fraction-free.
Polynomial reduce_once(const Polynomial& P, const Polynomial& Q, const Term& t,
                       const TermOrder& ord);

// Full reduction modulo a set: no term of the result is divisible by any
// leading term of G. Deterministic strategy (greatest reducible term first,
// divisors in the given order).
Polynomial normal_form(const Polynomial& P, const std::vector<Polynomial>& G,
                       const TermOrder& ord);

// Same result on Groebner bases, but picks reduction steps pseudo-randomly;
// used to exercise confluence.
Polynomial normal_form_randomized(const Polynomial& P, const std::vector<Polynomial>& G,
                                  const TermOrder& ord, std::uint64_t seed);

Polynomial s_polynomial(const Polynomial& F, const Polynomial& G, const TermOrder& ord);

// Buchberger check: every S-polynomial reduces to zero. Guarded desk-scale
// operation; DETGB_MAX_SCALE overrides both guard values.
bool is_groebner(const std::vector<Polynomial>& G, const TermOrder& ord);

// Divisibility audits. Both presume G is already known to be a Groebner
// basis; they do not re-verify it.
bool is_minimal_gb(const std::vector<Polynomial>& G, const TermOrder& ord);
bool is_reduced_gb(const std::vector<Polynomial>& G, const TermOrder& ord);

// Reduce every element modulo the others; on a minimal Groebner basis this
// produces the reduced one.
std::vector<Polynomial> inter_reduce(const std::vector<Polynomial>& G, const TermOrder& ord);

struct LaplaceSummand {
    int sign = 1;              // (-1)^(sum of the positions of the chosen rows and columns)
    Minor sub;                 // row set = the requested rows
    std::optional<Minor> rest; // complement; absent when sub is the whole minor
};

// Generalized Laplace expansion of a minor along a subset of its rows; the
// signed sum of the products of the summands equals expand_minor(m).
std::vector<LaplaceSummand> laplace_expand(const Minor& m, const std::vector<int>& rows);

// Current guard values (polynomial count, variable count).
std::pair<int, int> oracle_scale_limits();

}  // namespace detgb
