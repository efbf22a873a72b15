#pragma once
// Cells of the generic matrix and terms built from them.
//
// A term of a minor admits the two-row-array view: a strictly increasing row
// sequence paired with pairwise distinct columns. General monomials arising
// in oracle arithmetic (lcms, S-polynomial intermediates) may repeat rows,
// columns, or whole cells, so a Term is stored as a sorted multiset of cells.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace detgb {

struct Cell {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Term {
public:
    Term() = default;  // the constant term 1
    static Term from_cells(std::vector<Cell> cells);
    static Term single(Cell c);

    int degree() const { return static_cast<int>(cells_.size()); }
    bool is_one() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }

    // Two-row-array view; requires pairwise distinct rows.
    bool has_distinct_rows() const;
    std::vector<int> row_sequence() const;
    std::vector<int> col_sequence() const;

    bool divides(const Term& other) const;  // multiset inclusion
    Term times(const Term& other) const;
    Term divided_by(const Term& divisor) const;
    static Term lcm(const Term& a, const Term& b);
    bool shares_cell(const Term& other) const;

    friend bool operator==(const Term&, const Term&) = default;
    // Order-independent comparison, used only for deterministic output.
    friend auto operator<=>(const Term&, const Term&) = default;

private:
    std::vector<Cell> cells_;  // sorted (row, col); duplicates encode exponents
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace detgb
