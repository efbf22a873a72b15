#include "detgb/term_order.hpp"

#include <algorithm>

#include "detgb/detail/combinations.hpp"
#include "detgb/errors.hpp"

namespace detgb {

OrderKind variant_kind(ScanVariant v) {
    switch (v) {
        case ScanVariant::NEW:
        case ScanVariant::NES:
        case ScanVariant::SWE:
        case ScanVariant::SWN:
            return OrderKind::anti_diagonal;
        default:
            return OrderKind::diagonal;
    }
}

std::string variant_name(ScanVariant v) {
    switch (v) {
        case ScanVariant::NEW: return "new";
        case ScanVariant::NES: return "nes";
        case ScanVariant::SWE: return "swe";
        case ScanVariant::SWN: return "swn";
        case ScanVariant::NWE: return "nwe";
        case ScanVariant::NWS: return "nws";
        case ScanVariant::SEW: return "sew";
        case ScanVariant::SEN: return "sen";
    }
    return "?";
}

std::optional<ScanVariant> variant_from_name(std::string_view name) {
    static const std::pair<std::string_view, ScanVariant> table[] = {
        {"new", ScanVariant::NEW}, {"nes", ScanVariant::NES}, {"swe", ScanVariant::SWE},
        {"swn", ScanVariant::SWN}, {"nwe", ScanVariant::NWE}, {"nws", ScanVariant::NWS},
        {"sew", ScanVariant::SEW}, {"sen", ScanVariant::SEN},
    };
    for (const auto& [n, v] : table)
        if (n == name) return v;
    return std::nullopt;
}

std::string order_kind_name(OrderKind k) {
    return k == OrderKind::anti_diagonal ? "anti-diagonal" : "diagonal";
}

namespace {

// Position of the cell in the scan, 0 = greatest.
int scan_rank(ScanVariant v, int m, int n, int i, int j) {
    switch (v) {
        case ScanVariant::NEW: return (i - 1) * n + (n - j);
        case ScanVariant::NES: return (n - j) * m + (i - 1);
        case ScanVariant::SWE: return (m - i) * n + (j - 1);
        case ScanVariant::SWN: return (j - 1) * m + (m - i);
        case ScanVariant::NWE: return (i - 1) * n + (j - 1);
        case ScanVariant::NWS: return (j - 1) * m + (i - 1);
        case ScanVariant::SEW: return (m - i) * n + (n - j);
        case ScanVariant::SEN: return (n - j) * m + (m - i);
    }
    return 0;
}

}  // namespace

TermOrder TermOrder::scanning(ScanVariant v, int rows, int cols) {
    require(rows >= 1 && cols >= 1, "term order needs positive matrix dimensions");
    TermOrder ord;
    ord.kind_ = variant_kind(v);
    ord.variant_ = v;
    ord.rows_ = rows;
    ord.cols_ = cols;
    ord.rank_.resize(static_cast<std::size_t>(rows) * cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            ord.rank_[static_cast<std::size_t>(i - 1) * cols + (j - 1)] =
                scan_rank(v, rows, cols, i, j);
    return ord;
}

TermOrder TermOrder::custom(const std::vector<Cell>& greatest_first, OrderKind kind,
                            int rows, int cols) {
    require(rows >= 1 && cols >= 1, "term order needs positive matrix dimensions");
    require(static_cast<int>(greatest_first.size()) == rows * cols,
            "custom variable order must list every cell exactly once");
    TermOrder ord;
    ord.kind_ = kind;
    ord.rows_ = rows;
    ord.cols_ = cols;
    ord.rank_.assign(static_cast<std::size_t>(rows) * cols, -1);
    for (std::size_t r = 0; r < greatest_first.size(); ++r) {
        const Cell c = greatest_first[r];
        require(c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols,
                "custom variable order has an out-of-range cell");
        auto& slot = ord.rank_[static_cast<std::size_t>(c.row - 1) * cols + (c.col - 1)];
        require(slot == -1, "custom variable order repeats a cell");
        slot = static_cast<int>(r);
    }
    require(check_corner_property(ord),
            "custom variable order fails the corner property for the requested kind");
    return ord;
}

int TermOrder::var_rank(Cell c) const {
    require(c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_,
            "cell outside the matrix dimensions of the term order");
    return rank_[static_cast<std::size_t>(c.row - 1) * cols_ + (c.col - 1)];
}

std::strong_ordering TermOrder::var_compare(Cell a, Cell b) const {
    // Smaller rank means the greater variable.
    return var_rank(b) <=> var_rank(a);
}

Cell TermOrder::greatest_cell(const std::vector<Cell>& cells) const {
    require(!cells.empty(), "greatest_cell of an empty cell set");
    Cell best = cells.front();
    int best_rank = var_rank(best);
    for (const Cell& c : cells) {
        const int r = var_rank(c);
        if (r < best_rank) {
            best = c;
            best_rank = r;
        }
    }
    return best;
}

std::strong_ordering TermOrder::term_compare(const Term& a, const Term& b) const {
    if (a == b) return std::strong_ordering::equal;
    // Walk the union of supports from the greatest variable downward and
    // decide at the first exponent difference.
    auto ranked = [&](const Term& t) {
        std::vector<int> rs;
        rs.reserve(t.cells().size());
        for (const Cell& c : t.cells()) rs.push_back(var_rank(c));
        std::sort(rs.begin(), rs.end());
        return rs;  // ascending rank = descending variable
    };
    const std::vector<int> ra = ranked(a);
    const std::vector<int> rb = ranked(b);
    std::size_t i = 0, j = 0;
    while (i < ra.size() && j < rb.size()) {
        if (ra[i] < rb[j]) return std::strong_ordering::greater;  // a has the greater variable
        if (rb[j] < ra[i]) return std::strong_ordering::less;
        ++i;
        ++j;
    }
    if (i < ra.size()) return std::strong_ordering::greater;
    if (j < rb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

bool TermOrder::term_less(const Term& a, const Term& b) const {
    return term_compare(a, b) == std::strong_ordering::less;
}

bool TermOrder::term_greater(const Term& a, const Term& b) const {
    return term_compare(a, b) == std::strong_ordering::greater;
}

bool check_corner_property(const TermOrder& ord, int max_dim) {
    const int m = ord.rows(), n = ord.cols();
    if (m > max_dim || n > max_dim)
        throw ScaleLimit("corner-property scan is limited to " + std::to_string(max_dim) +
                         " rows/columns per side");
    std::vector<int> all_rows(m), all_cols(n);
    for (int i = 0; i < m; ++i) all_rows[i] = i + 1;
    for (int j = 0; j < n; ++j) all_cols[j] = j + 1;

    const bool anti = ord.kind() == OrderKind::anti_diagonal;
    bool ok = true;
    for (int k = 1; k <= std::min(m, n) && ok; ++k) {
        detail::for_each_subset(all_rows, k, [&](const std::vector<int>& rows) {
            if (!ok) return;
            detail::for_each_subset(all_cols, k, [&](const std::vector<int>& cols) {
                if (!ok) return;
                Cell best{rows[0], cols[0]};
                int best_rank = ord.var_rank(best);
                for (int r : rows)
                    for (int c : cols) {
                        const int rank = ord.var_rank({r, c});
                        if (rank < best_rank) {
                            best = {r, c};
                            best_rank = rank;
                        }
                    }
                const Cell ne{rows.front(), cols.back()};
                const Cell sw{rows.back(), cols.front()};
                const Cell nw{rows.front(), cols.front()};
                const Cell se{rows.back(), cols.back()};
                if (anti) {
                    if (!(best == ne || best == sw)) ok = false;
                } else {
                    if (!(best == nw || best == se)) ok = false;
                }
            });
        });
    }
    return ok;
}

}  // namespace detgb
