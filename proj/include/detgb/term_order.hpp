#pragma once
// Scanning variable orders on the m x n generic matrix and the lexicographic
// term orders they induce. The eight built-in variants are anti-diagonal
// (NEW, NES, SWE, SWN) or diagonal (NWE, NWS, SEW, SEN). Custom variable
// orders are accepted once they pass the corner-property check, which is
// what guarantees that every minor's leading term is its (anti-)diagonal
// product.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/term.hpp"

namespace detgb {

enum class OrderKind { anti_diagonal, diagonal };

enum class ScanVariant { NEW, NES, SWE, SWN, NWE, NWS, SEW, SEN };

OrderKind variant_kind(ScanVariant v);
std::string variant_name(ScanVariant v);  // lowercase, e.g. "new"
std::optional<ScanVariant> variant_from_name(std::string_view name);
std::string order_kind_name(OrderKind k);

class TermOrder {
public:
    static TermOrder scanning(ScanVariant v, int rows, int cols);
    // Explicit variable order, greatest cell first; must list every cell of
    // the grid exactly once and pass check_corner_property for `kind`.
    static TermOrder custom(const std::vector<Cell>& greatest_first, OrderKind kind,
                            int rows, int cols);

    OrderKind kind() const { return kind_; }
    std::optional<ScanVariant> variant() const { return variant_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int var_rank(Cell c) const;  // 0 is the greatest variable
    std::strong_ordering var_compare(Cell a, Cell b) const;
    Cell greatest_cell(const std::vector<Cell>& cells) const;

    // Lexicographic comparison of exponent vectors: decided at the greatest
    // variable where the exponents differ.
    std::strong_ordering term_compare(const Term& a, const Term& b) const;
    bool term_less(const Term& a, const Term& b) const;
    bool term_greater(const Term& a, const Term& b) const;

private:
    TermOrder() = default;
    OrderKind kind_ = OrderKind::anti_diagonal;
    std::optional<ScanVariant> variant_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> rank_;  // row-major cell index -> rank
};

// True iff the greatest variable of every square submatrix sits at the NE or
// SW corner (anti-diagonal) resp. NW or SE corner (diagonal). Exhaustive over
// all square submatrices; rejects grids larger than max_dim per side.
bool check_corner_property(const TermOrder& ord, int max_dim = 10);

}  // namespace detgb
