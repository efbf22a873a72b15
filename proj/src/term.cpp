#include "detgb/term.hpp"

#include <algorithm>

#include "detgb/errors.hpp"

namespace detgb {

Term Term::from_cells(std::vector<Cell> cells) {
    for (const Cell& c : cells)
        require(c.row >= 1 && c.col >= 1, "cell indices must be >= 1");
    std::sort(cells.begin(), cells.end());
    Term t;
    t.cells_ = std::move(cells);
    return t;
}

Term Term::single(Cell c) { return from_cells({c}); }

bool Term::has_distinct_rows() const {
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (cells_[i].row == cells_[i - 1].row) return false;
    return true;
}

std::vector<int> Term::row_sequence() const {
    require(has_distinct_rows(), "term has a repeated row and no two-row-array form");
    std::vector<int> rows;
    rows.reserve(cells_.size());
    for (const Cell& c : cells_) rows.push_back(c.row);
    return rows;
}

std::vector<int> Term::col_sequence() const {
    require(has_distinct_rows(), "term has a repeated row and no two-row-array form");
    std::vector<int> cols;
    cols.reserve(cells_.size());
    for (const Cell& c : cells_) cols.push_back(c.col);
    return cols;
}

bool Term::divides(const Term& other) const {
    std::size_t j = 0;
    for (const Cell& c : cells_) {
        while (j < other.cells_.size() && other.cells_[j] < c) ++j;
        if (j == other.cells_.size() || !(other.cells_[j] == c)) return false;
        ++j;
    }
    return true;
}

Term Term::times(const Term& other) const {
    Term out;
    out.cells_.resize(cells_.size() + other.cells_.size());
    std::merge(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
               out.cells_.begin());
    return out;
}

Term Term::divided_by(const Term& divisor) const {
    require(divisor.divides(*this), "term division with a non-dividing divisor");
    Term out;
    out.cells_.reserve(cells_.size() - divisor.cells_.size());
    std::size_t j = 0;
    for (const Cell& c : cells_) {
        if (j < divisor.cells_.size() && divisor.cells_[j] == c) {
            ++j;
        } else {
            out.cells_.push_back(c);
        }
    }
    return out;
}

Term Term::lcm(const Term& a, const Term& b) {
    // Multiset max: keep, per distinct cell, the larger multiplicity.
    Term out;
    std::size_t i = 0, j = 0;
    while (i < a.cells_.size() || j < b.cells_.size()) {
        if (j == b.cells_.size() || (i < a.cells_.size() && a.cells_[i] < b.cells_[j])) {
            out.cells_.push_back(a.cells_[i++]);
        } else if (i == a.cells_.size() || b.cells_[j] < a.cells_[i]) {
            out.cells_.push_back(b.cells_[j++]);
        } else {
            out.cells_.push_back(a.cells_[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

bool Term::shares_cell(const Term& other) const {
    std::size_t i = 0, j = 0;
    while (i < cells_.size() && j < other.cells_.size()) {
        if (cells_[i] < other.cells_[j]) {
            ++i;
        } else if (other.cells_[j] < cells_[i]) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const Cell& c : t.cells()) {
        h ^= static_cast<std::size_t>(c.row) * 131u + static_cast<std::size_t>(c.col);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detgb
