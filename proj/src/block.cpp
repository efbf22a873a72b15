#include "detgb/block.hpp"

#include <algorithm>

#include "detgb/detail/combinations.hpp"
#include "detgb/errors.hpp"

namespace detgb {

std::string diagonality_name(Diagonality d) {
    switch (d) {
        case Diagonality::diagonal: return "diagonal";
        case Diagonality::anti_diagonal: return "anti_diagonal";
        case Diagonality::both: return "both";
        case Diagonality::neither: return "neither";
    }
    return "?";
}

namespace {

// Rectangle closure between opposite corners; `diag` picks NW/SE corners,
// otherwise NE/SW.
bool rectangle_closed(const std::vector<Cell>& cells, const std::vector<char>& grid, int n,
                      bool diag) {
    for (const Cell& a : cells)
        for (const Cell& b : cells) {
            const bool corner_pair = diag ? (a.row <= b.row && a.col <= b.col)
                                          : (a.row >= b.row && a.col <= b.col);
            if (!corner_pair) continue;
            const int rlo = std::min(a.row, b.row), rhi = std::max(a.row, b.row);
            for (int i = rlo; i <= rhi; ++i)
                for (int j = a.col; j <= b.col; ++j)
                    if (!grid[static_cast<std::size_t>(i - 1) * n + (j - 1)]) return false;
        }
    return true;
}

}  // namespace

Block::Block(std::vector<Cell> cells, int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 1 && cols >= 1, "block needs positive ambient dimensions");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (const Cell& c : cells)
        require(c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols,
                "block cell outside the ambient matrix");
    cells_ = std::move(cells);
    grid_.assign(static_cast<std::size_t>(rows) * cols, 0);
    for (const Cell& c : cells_) grid_[static_cast<std::size_t>(c.row - 1) * cols + (c.col - 1)] = 1;
    diagonal_ = rectangle_closed(cells_, grid_, cols_, true);
    anti_diagonal_ = rectangle_closed(cells_, grid_, cols_, false);
}

Block Block::nw_rectangle(int p, int q, int rows, int cols) {
    require(p >= 1 && p <= rows && q >= 1 && q <= cols, "rectangle outside the ambient matrix");
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(p) * q);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) cells.push_back({i, j});
    return Block(std::move(cells), rows, cols);
}

Block Block::full(int rows, int cols) { return nw_rectangle(rows, cols, rows, cols); }

bool Block::contains(Cell c) const {
    if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_) return false;
    return grid_[static_cast<std::size_t>(c.row - 1) * cols_ + (c.col - 1)] != 0;
}

bool Block::contains_grid(const Minor& m) const {
    for (int i : m.rows)
        for (int j : m.cols)
            if (!contains({i, j})) return false;
    return true;
}

bool Block::matches_kind(OrderKind kind) const {
    return kind == OrderKind::diagonal ? diagonal_ : anti_diagonal_;
}

Diagonality Block::diagonality() const {
    if (diagonal_ && anti_diagonal_) return Diagonality::both;
    if (diagonal_) return Diagonality::diagonal;
    if (anti_diagonal_) return Diagonality::anti_diagonal;
    return Diagonality::neither;
}

bool Block::intersects(const Block& other) const {
    for (const Cell& c : cells_)
        if (other.contains(c)) return true;
    return false;
}

std::vector<Cell> Block::intersection_cells(const Block& other) const {
    std::vector<Cell> out;
    for (const Cell& c : cells_)
        if (other.contains(c)) out.push_back(c);
    return out;
}

std::vector<Minor> block_minors(const Block& b, int r) {
    std::vector<Minor> out;
    if (r < 1) return out;
    std::vector<int> rows_present, cols_present;
    for (int i = 1; i <= b.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j)
            if (b.contains({i, j})) {
                if (rows_present.empty() || rows_present.back() != i) rows_present.push_back(i);
                break;
            }
    {
        std::vector<char> seen(b.cols() + 1, 0);
        for (const Cell& c : b.cells()) seen[c.col] = 1;
        for (int j = 1; j <= b.cols(); ++j)
            if (seen[j]) cols_present.push_back(j);
    }
    if (static_cast<int>(rows_present.size()) < r) return out;
    detail::for_each_subset(rows_present, r, [&](const std::vector<int>& rows) {
        // Columns whose full column over `rows` lies in the block.
        std::vector<int> usable;
        for (int j : cols_present) {
            bool all = true;
            for (int i : rows)
                if (!b.contains({i, j})) {
                    all = false;
                    break;
                }
            if (all) usable.push_back(j);
        }
        if (static_cast<int>(usable.size()) < r) return;
        detail::for_each_subset(usable, r, [&](const std::vector<int>& cols) {
            out.emplace_back(rows, cols);
        });
    });
    return out;
}

Term term_intersect_block(const Term& t, const Block& b) {
    std::vector<Cell> kept;
    for (const Cell& c : t.cells())
        if (b.contains(c)) kept.push_back(c);
    return Term::from_cells(std::move(kept));
}

namespace {

// Longest strictly monotone subsequence by patience sorting.
int longest_strictly_increasing(std::vector<int> xs, bool decreasing) {
    if (decreasing)
        for (int& x : xs) x = -x;
    std::vector<int> tails;
    for (int x : xs) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

int term_length(const Term& t, const Block& b, OrderKind kind) {
    const Term inside = term_intersect_block(t, b);
    if (inside.is_one()) return 0;
    return longest_strictly_increasing(inside.col_sequence(),
                                       kind == OrderKind::anti_diagonal);
}

bool divisible_by_block_minor(const Term& t, const Block& b, int r, OrderKind kind) {
    require(r >= 1, "minor size must be >= 1");
    require(b.matches_kind(kind),
            std::string("block is not ") + order_kind_name(kind) +
                ", so the length criterion does not apply");
    return term_length(t, b, kind) >= r;
}

std::optional<Minor> find_block_minor_witness(const Term& t, const Block& b, int r,
                                              OrderKind kind) {
    require(r >= 1, "minor size must be >= 1");
    const Term inside = term_intersect_block(t, b);
    if (inside.degree() < r) return std::nullopt;
    std::optional<Minor> found;
    detail::for_each_subset(inside.cells(), r, [&](const std::vector<Cell>& pick) {
        if (found) return;
        // Rows are inherited in increasing order; the column pattern must
        // match the kind for `pick` to be the leading term of the minor.
        for (int k = 1; k < r; ++k) {
            if (pick[k].row == pick[k - 1].row) return;
            const bool ok = kind == OrderKind::anti_diagonal ? pick[k].col < pick[k - 1].col
                                                             : pick[k].col > pick[k - 1].col;
            if (!ok) return;
        }
        std::vector<int> rows, cols;
        for (const Cell& c : pick) rows.push_back(c.row);
        for (const Cell& c : pick) cols.push_back(c.col);
        std::sort(cols.begin(), cols.end());
        Minor m(rows, cols);
        if (b.contains_grid(m)) found = m;
    });
    return found;
}

}  // namespace detgb
