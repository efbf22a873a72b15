#pragma once
// Cell subsets of the generic matrix with their diagonality flags, the
// minors lying inside a block, and the length-based divisibility test for
// terms by leading terms of block minors.

#include <optional>
#include <vector>

#include "detgb/minor.hpp"
#include "detgb/term.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

enum class Diagonality { diagonal, anti_diagonal, both, neither };

std::string diagonality_name(Diagonality d);

class Block {
public:
    Block(std::vector<Cell> cells, int rows, int cols);
    static Block nw_rectangle(int p, int q, int rows, int cols);
    static Block full(int rows, int cols);

    int rows() const { return rows_; }  // ambient matrix dimensions
    int cols() const { return cols_; }
    bool contains(Cell c) const;
    bool contains_grid(const Minor& m) const;  // every cell of rows x cols inside
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t cell_count() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool is_diagonal() const { return diagonal_; }
    bool is_anti_diagonal() const { return anti_diagonal_; }
    bool matches_kind(OrderKind kind) const;
    Diagonality diagonality() const;
    bool intersects(const Block& other) const;
    std::vector<Cell> intersection_cells(const Block& other) const;
    friend bool operator==(const Block& a, const Block& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    std::vector<Cell> cells_;  // sorted (row, col), no duplicates
    std::vector<char> grid_;
    int rows_ = 0;
    int cols_ = 0;
    bool diagonal_ = false;
    bool anti_diagonal_ = false;
};

// All r-minors whose full row x column grid lies inside the block, ordered by
// rows then columns lexicographically.
std::vector<Minor> block_minors(const Block& b, int r);

// Sub-array of t keeping the pairs whose cell lies in the block.
Term term_intersect_block(const Term& t, const Block& b);

// Length of the longest strictly decreasing (anti-diagonal) resp. strictly
// increasing (diagonal) subsequence of the column sequence of t ∩ B.
int term_length(const Term& t, const Block& b, OrderKind kind);

// True iff some r-minor inside the block has a leading term dividing t;
// decided by term_length >= r. The block must carry the matching
// diagonality, which is the hypothesis making the length criterion exact.
bool divisible_by_block_minor(const Term& t, const Block& b, int r, OrderKind kind);

// Exhaustive search for such a witness minor; makes no diagonality
// assumption on the block.
std::optional<Minor> find_block_minor_witness(const Term& t, const Block& b, int r,
                                              OrderKind kind);

}  // namespace detgb
