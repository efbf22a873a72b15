#include "detgb/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "detgb/detail/combinations.hpp"
#include "detgb/errors.hpp"

namespace detgb {

namespace {

Int unit_leading_coefficient(const Polynomial& Q, const TermOrder& ord) {
    const auto [lt, lc] = Q.leading(ord);
    require(lc == 1 || lc == -1,
            "reduction requires a divisor with leading coefficient +1 or -1");
    return lc;
}

void require_unit_divisors(const std::vector<Polynomial>& G, const TermOrder& ord) {
    for (const Polynomial& g : G) {
        require(!g.is_zero(), "zero polynomial in a divisor set");
        unit_leading_coefficient(g, ord);
    }
}

}  // namespace

Polynomial reduce_once(const Polynomial& P, const Polynomial& Q, const Term& t,
                       const TermOrder& ord) {
    require(P.has_term(t), "reduction step at a term absent from the polynomial");
    const Int lc_q = unit_leading_coefficient(Q, ord);
    const Term lt_q = Q.leading(ord).first;
    require(lt_q.divides(t), "reduction step at a term the divisor's leading term misses");
    const Term cofactor = t.divided_by(lt_q);
    const Int factor = P.coeff(t) * lc_q;  // equals coeff / lc since lc is a unit
    Polynomial out = P;
    out -= Q.times_monomial(factor, cofactor);
    return out;
}

namespace {

struct ReductionSite {
    Term term;
    std::size_t divisor;
};

std::vector<ReductionSite> reducible_sites(const Polynomial& P, const std::vector<Term>& lts,
                                           const TermOrder& ord) {
    std::vector<ReductionSite> sites;
    for (const auto& [t, c] : P.terms())
        for (std::size_t k = 0; k < lts.size(); ++k)
            if (lts[k].divides(t)) sites.push_back({t, k});
    std::sort(sites.begin(), sites.end(), [&](const ReductionSite& a, const ReductionSite& b) {
        const auto cmp = ord.term_compare(a.term, b.term);
        if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::greater;
        return a.divisor < b.divisor;
    });
    return sites;
}

}  // namespace

Polynomial normal_form(const Polynomial& P, const std::vector<Polynomial>& G,
                       const TermOrder& ord) {
    require_unit_divisors(G, ord);
    std::vector<Term> lts;
    lts.reserve(G.size());
    for (const Polynomial& g : G) lts.push_back(g.leading(ord).first);
    Polynomial cur = P;
    while (true) {
        const std::vector<ReductionSite> sites = reducible_sites(cur, lts, ord);
        if (sites.empty()) return cur;
        cur = reduce_once(cur, G[sites.front().divisor], sites.front().term, ord);
    }
}

Polynomial normal_form_randomized(const Polynomial& P, const std::vector<Polynomial>& G,
                                  const TermOrder& ord, std::uint64_t seed) {
    require_unit_divisors(G, ord);
    std::vector<Term> lts;
    lts.reserve(G.size());
    for (const Polynomial& g : G) lts.push_back(g.leading(ord).first);
    std::mt19937_64 rng(seed);
    Polynomial cur = P;
    while (true) {
        const std::vector<ReductionSite> sites = reducible_sites(cur, lts, ord);
        if (sites.empty()) return cur;
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng);
        cur = reduce_once(cur, G[sites[pick].divisor], sites[pick].term, ord);
    }
}

Polynomial s_polynomial(const Polynomial& F, const Polynomial& G, const TermOrder& ord) {
    require(!F.is_zero() && !G.is_zero(), "S-polynomial of a zero polynomial");
    const auto [lt_f, lc_f] = F.leading(ord);
    const auto [lt_g, lc_g] = G.leading(ord);
    const Term l = Term::lcm(lt_f, lt_g);
    Polynomial out = F.times_monomial(lc_g, l.divided_by(lt_f));
    out -= G.times_monomial(lc_f, l.divided_by(lt_g));
    return out;
}

std::pair<int, int> oracle_scale_limits() {
    int max_polys = 60, max_vars = 40;
    if (const char* env = std::getenv("DETGB_MAX_SCALE")) {
        const int v = std::atoi(env);
        if (v > 0) {
            max_polys = v;
            max_vars = v;
        }
    }
    return {max_polys, max_vars};
}

bool is_groebner(const std::vector<Polynomial>& G, const TermOrder& ord) {
    const auto [max_polys, max_vars] = oracle_scale_limits();
    if (static_cast<int>(G.size()) > max_polys)
        throw ScaleLimit("Buchberger check limited to " + std::to_string(max_polys) +
                         " polynomials (set DETGB_MAX_SCALE to raise)");
    {
        std::vector<Cell> vars;
        for (const Polynomial& g : G) {
            const std::vector<Cell> sup = g.support_cells();
            vars.insert(vars.end(), sup.begin(), sup.end());
        }
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        if (static_cast<int>(vars.size()) > max_vars)
            throw ScaleLimit("Buchberger check limited to " + std::to_string(max_vars) +
                             " variables (set DETGB_MAX_SCALE to raise)");
    }
    require_unit_divisors(G, ord);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const Term lt_i = G[i].leading(ord).first;
            const Term lt_j = G[j].leading(ord).first;
            // Product criterion: coprime leading terms reduce to zero.
            if (!lt_i.shares_cell(lt_j)) continue;
            if (!normal_form(s_polynomial(G[i], G[j], ord), G, ord).is_zero()) return false;
        }
    return true;
}

bool is_minimal_gb(const std::vector<Polynomial>& G, const TermOrder& ord) {
    for (const Polynomial& g : G) {
        const auto [lt, lc] = g.leading(ord);
        if (lc != 1 && lc != -1) return false;
        for (const Polynomial& h : G) {
            if (&h == &g) continue;
            if (h.leading(ord).first.divides(lt)) return false;
        }
    }
    return true;
}

bool is_reduced_gb(const std::vector<Polynomial>& G, const TermOrder& ord) {
    for (const Polynomial& g : G) {
        if (g.leading(ord).second != 1 && g.leading(ord).second != -1) return false;
        for (const Polynomial& h : G) {
            if (&h == &g) continue;
            const Term lt_h = h.leading(ord).first;
            for (const auto& [t, c] : g.terms())
                if (lt_h.divides(t)) return false;
        }
    }
    return true;
}

std::vector<Polynomial> inter_reduce(const std::vector<Polynomial>& G, const TermOrder& ord) {
    require(is_minimal_gb(G, ord),
            "inter-reduction expects a minimal Groebner basis (unit leading coefficients, no "
            "redundant leading terms)");
    std::vector<Polynomial> out = G;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(out.size() - 1);
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i) others.push_back(out[j]);
        out[i] = normal_form(out[i], others, ord);
    }
    return out;
}

std::vector<LaplaceSummand> laplace_expand(const Minor& m, const std::vector<int>& rows) {
    require(!rows.empty(), "Laplace expansion needs a non-empty row subset");
    require(std::is_sorted(rows.begin(), rows.end()) &&
                std::adjacent_find(rows.begin(), rows.end()) == rows.end(),
            "row subset must be strictly increasing");
    require(std::includes(m.rows.begin(), m.rows.end(), rows.begin(), rows.end()),
            "row subset must be contained in the minor's rows");
    const int k = static_cast<int>(rows.size());
    int row_positions = 0;  // 1-based positions of the chosen rows within m
    for (int i = 0; i < m.size(); ++i)
        if (std::binary_search(rows.begin(), rows.end(), m.rows[i])) row_positions += i + 1;

    std::vector<LaplaceSummand> out;
    detail::for_each_subset(m.cols, k, [&](const std::vector<int>& cols) {
        int col_positions = 0;
        for (int j = 0; j < m.size(); ++j)
            if (std::binary_search(cols.begin(), cols.end(), m.cols[j])) col_positions += j + 1;
        const int sign = (row_positions + col_positions) % 2 == 0 ? 1 : -1;
        Minor sub(rows, cols);
        if (k == m.size()) {
            out.push_back({sign, std::move(sub), std::nullopt});
        } else {
            out.push_back({sign, sub, complement(m, sub)});
        }
    });
    return out;
}

}  // namespace detgb
