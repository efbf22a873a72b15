#include "detgb/ladder.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "detgb/errors.hpp"
#include "detgb/schubert.hpp"

namespace detgb {

namespace {

void validate_corner_sequence(const std::vector<std::pair<int, int>>& corners, int m, int n,
                              const char* which) {
    require(!corners.empty(), std::string(which) + " corner list must be non-empty");
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const auto [a, b] = corners[i];
        require(a >= 1 && a <= m && b >= 1 && b <= n,
                std::string(which) + " corner (" + std::to_string(a) + "," + std::to_string(b) +
                    ") outside the ambient matrix");
        if (i > 0) {
            require(corners[i - 1].first < a,
                    std::string(which) + " corner rows must be strictly increasing");
            require(corners[i - 1].second >= b,
                    std::string(which) + " corner columns must be weakly decreasing");
        }
    }
}

std::string format_pair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string describe_minor(const Minor& m) {
    std::string s = "({";
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        s += (i ? "," : "") + std::to_string(m.rows[i]);
    s += "},{";
    for (std::size_t i = 0; i < m.cols.size(); ++i)
        s += (i ? "," : "") + std::to_string(m.cols[i]);
    return s + "})";
}

}  // namespace

Ladder::Ladder(std::vector<std::pair<int, int>> lower_corners,
               std::vector<std::pair<int, int>> upper_corners, int m, int n)
    : lower(std::move(lower_corners)), upper(std::move(upper_corners)), rows(m), cols(n) {
    require(m >= 1 && n >= 1, "ladder needs positive ambient dimensions");
    validate_corner_sequence(lower, m, n, "lower");
    validate_corner_sequence(upper, m, n, "upper");
}

Ladder Ladder::one_sided(std::vector<std::pair<int, int>> lower_corners, int m, int n) {
    return Ladder(std::move(lower_corners), {{1, 1}}, m, n);
}

Block Ladder::materialize() const {
    std::vector<Cell> cells;
    for (int p = 1; p <= rows; ++p)
        for (int q = 1; q <= cols; ++q) {
            bool below = false, above = false;
            for (const auto& [a, b] : lower)
                if (p <= a && q <= b) {
                    below = true;
                    break;
                }
            for (const auto& [c, d] : upper)
                if (p >= c && q >= d) {
                    above = true;
                    break;
                }
            if (below && above) cells.push_back({p, q});
        }
    return Block(std::move(cells), rows, cols);
}

std::vector<Block> Ladder::components() const {
    const Block whole = materialize();
    std::vector<Block> out;
    for (const auto& [c, d] : upper) {
        std::vector<Cell> cells;
        for (const Cell& cell : whole.cells())
            if (cell.row >= c && cell.col >= d) cells.push_back(cell);
        out.emplace_back(std::move(cells), rows, cols);
    }
    return out;
}

BlockwiseIdealSpec::BlockwiseIdealSpec(std::vector<Block> blocks_in, std::vector<int> sizes_in,
                                       int m, int n)
    : blocks(std::move(blocks_in)), sizes(std::move(sizes_in)), rows(m), cols(n) {
    require(blocks.size() == sizes.size(), "one minor size per block is required");
    require(!blocks.empty(), "a blockwise ideal needs at least one block");
    for (int r : sizes) require(r >= 1, "minor sizes must be positive");
    for (const Block& b : blocks)
        require(b.rows() == rows && b.cols() == cols,
                "all blocks must share the ambient matrix dimensions");
}

std::vector<Minor> BlockwiseIdealSpec::generators_of(int i) const {
    return block_minors(blocks.at(i), sizes.at(i));
}

std::vector<Minor> BlockwiseIdealSpec::all_generators() const {
    std::vector<Minor> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::vector<Minor> gi = generators_of(static_cast<int>(i));
        for (const Minor& m : gi)
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return out;
}

bool BlockwiseIdealSpec::all_blocks_match(OrderKind kind) const {
    for (const Block& b : blocks)
        if (!b.matches_kind(kind)) return false;
    return true;
}

BlockwiseIdealSpec one_sided_ideal(const std::vector<int>& a, const std::vector<int>& b,
                                   const std::vector<int>& r, int m, int n) {
    const std::size_t k = a.size();
    require(k >= 1 && b.size() == k && r.size() == k,
            "one-sided spec needs equally long a, b, r sequences");
    for (std::size_t i = 0; i < k; ++i) {
        require(a[i] >= 1 && a[i] <= m && b[i] >= 1 && b[i] <= n,
                "corner " + format_pair(a[i], b[i]) + " outside the ambient matrix");
        require(r[i] >= 1, "minor sizes must be positive");
        if (i > 0) {
            require(a[i - 1] <= a[i] && b[i - 1] >= b[i],
                    "monotonicity violated: row bounds must be weakly increasing and column "
                    "bounds weakly decreasing");
        }
    }
    // Note the boundary: minors may use all rows or columns of their
    // rectangle (a_i - r_i = 0), which the essential-set correspondence
    // needs; only r_i exceeding a dimension is rejected.
    for (std::size_t i = 0; i < k; ++i) {
        require(a[i] - r[i] >= 0 && b[i] - r[i] >= 0,
                "staircase condition violated: corner " + format_pair(a[i], b[i]) +
                    " admits no minors of size " + std::to_string(r[i]));
        if (i > 0)
            require(a[i - 1] - r[i - 1] < a[i] - r[i] && b[i - 1] - r[i - 1] > b[i] - r[i],
                    "staircase condition violated: a-r must strictly increase and b-r strictly "
                    "decrease (redundant rectangles)");
    }
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < k; ++i) blocks.push_back(Block::nw_rectangle(a[i], b[i], m, n));
    return BlockwiseIdealSpec(std::move(blocks), r, m, n);
}

Permutation ladder_to_vexillary(const BlockwiseIdealSpec& spec, int n) {
    require(n >= 1, "ambient symmetric group size must be positive");
    require(n <= 8, "exhaustive vexillary search is limited to n <= 8");
    std::vector<EssentialBox> wanted;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        // Recover the rectangle corner from the block.
        int p = 0, q = 0;
        for (const Cell& c : spec.blocks[i].cells()) {
            p = std::max(p, c.row);
            q = std::max(q, c.col);
        }
        require(spec.blocks[i].cell_count() == static_cast<std::size_t>(p) * q,
                "ladder_to_vexillary expects northwest-rectangle blocks");
        wanted.push_back({p, q, spec.sizes[i] - 1});
    }
    std::sort(wanted.begin(), wanted.end(),
              [](const EssentialBox& x, const EssentialBox& y) {
                  return std::pair(x.row, x.col) < std::pair(y.row, y.col);
              });
    int max_row = 0, max_col = 0;
    for (const EssentialBox& e : wanted) {
        max_row = std::max(max_row, e.row);
        max_col = std::max(max_col, e.col);
    }
    require(n >= max_row + max_col,
            "n must be at least the row bound plus the largest column bound (" +
                std::to_string(max_row + max_col) + ")");

    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    do {
        Permutation w{std::vector<int>(line)};
        if (!is_vexillary_by_pattern(w)) continue;
        if (essential_set(w) == wanted) return w;
    } while (std::next_permutation(line.begin(), line.end()));
    throw InternalError("no vexillary permutation matches the one-sided spec; this contradicts "
                        "the correspondence and indicates a bug");
}

std::vector<std::vector<Minor>> two_sided_generators(const Ladder& ladder,
                                                     const std::vector<int>& r) {
    const std::vector<Block> comps = ladder.components();
    require(r.size() == comps.size(), "one minor size per upper corner is required");
    for (int ri : r) require(ri >= 1, "minor sizes must be positive");

    std::vector<std::vector<Minor>> groups(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (const Minor& m : block_minors(comps[i], r[i])) {
            bool keep = true;
            for (std::size_t j = 0; j < comps.size() && keep; ++j) {
                if (j == i) continue;
                int full = 0;
                if (j < i) {
                    // Columns of m fully inside component j.
                    for (int c : m.cols) {
                        bool all = true;
                        for (int row : m.rows)
                            if (!comps[j].contains({row, c})) {
                                all = false;
                                break;
                            }
                        if (all) ++full;
                    }
                } else {
                    for (int row : m.rows) {
                        bool all = true;
                        for (int c : m.cols)
                            if (!comps[j].contains({row, c})) {
                                all = false;
                                break;
                            }
                        if (all) ++full;
                    }
                }
                if (full > r[j] - 1) keep = false;
            }
            if (keep) groups[i].push_back(m);
        }
    }
    return groups;
}

bool minor_attends_block(const Minor& m, const Block& b, int needed) {
    int full_rows = 0, full_cols = 0;
    for (int i : m.rows) {
        bool all = true;
        for (int j : m.cols)
            if (!b.contains({i, j})) {
                all = false;
                break;
            }
        if (all) ++full_rows;
    }
    for (int j : m.cols) {
        bool all = true;
        for (int i : m.rows)
            if (!b.contains({i, j})) {
                all = false;
                break;
            }
        if (all) ++full_cols;
    }
    return full_rows >= needed || full_cols >= needed;
}

CriterionResult criterion_disjoint_blocks(const BlockwiseIdealSpec& spec) {
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < spec.blocks.size(); ++j)
            if (spec.blocks[i].intersects(spec.blocks[j]))
                return {false, "blocks " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " share a cell"};
    return {true, {}};
}

CriterionResult criterion_disjoint_leading_vars(const BlockwiseIdealSpec& spec,
                                                const TermOrder& ord) {
    require(spec.all_blocks_match(ord.kind()),
            "criterion needs " + order_kind_name(ord.kind()) + " blocks to go with the " +
                order_kind_name(ord.kind()) + " term order");
    std::vector<std::vector<Cell>> lt_support(spec.blocks.size());
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        std::vector<Cell> cells;
        for (const Minor& m : spec.generators_of(static_cast<int>(i))) {
            const Term lt = leading_term(m, ord);
            cells.insert(cells.end(), lt.cells().begin(), lt.cells().end());
        }
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        lt_support[i] = std::move(cells);
    }
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < spec.blocks.size(); ++j) {
            std::vector<Cell> shared;
            std::set_intersection(lt_support[i].begin(), lt_support[i].end(),
                                  lt_support[j].begin(), lt_support[j].end(),
                                  std::back_inserter(shared));
            if (!shared.empty())
                return {false, "blocks " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " share the leading-term variable x[" +
                                   std::to_string(shared.front().row) + "," +
                                   std::to_string(shared.front().col) + "]"};
        }
    return {true, {}};
}

CriterionResult criterion_attend_or_lcm(const BlockwiseIdealSpec& spec, const TermOrder& ord) {
    // A generator attending a strictly smaller block is redundant (its
    // Laplace expansion along the attending rows or columns lands in that
    // block's ideal) and drops out. Every surviving cross-block pair must
    // then have coprime leading terms for the pairwise lcm witnesses to
    // exist. Restricting the check to pairs of strictly smaller opposite
    // size would be vacuous for equal sizes and is genuinely unsound there.
    std::vector<std::vector<Minor>> kept(spec.blocks.size());
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        for (const Minor& g : spec.generators_of(static_cast<int>(i))) {
            bool redundant = false;
            for (std::size_t j = 0; j < spec.blocks.size() && !redundant; ++j)
                if (j != i && spec.sizes[j] < spec.sizes[i] &&
                    minor_attends_block(g, spec.blocks[j], spec.sizes[j]))
                    redundant = true;
            if (!redundant) kept[i].push_back(g);
        }
    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < spec.blocks.size(); ++j)
            for (const Minor& gi : kept[i]) {
                const Term lti = leading_term(gi, ord);
                for (const Minor& gj : kept[j])
                    if (lti.shares_cell(leading_term(gj, ord)))
                        return {false,
                                "surviving generators " + describe_minor(gi) + " of block " +
                                    std::to_string(i + 1) + " and " + describe_minor(gj) +
                                    " of block " + std::to_string(j + 1) +
                                    " share a leading-term variable"};
            }
    return {true, {}};
}

CriterionResult criterion_rowcolumn(const BlockwiseIdealSpec& spec) {
    if (spec.rows > 12 || spec.cols > 12)
        throw ScaleLimit("row/column witness search is limited to 12 x 12 matrices");
    require(spec.all_blocks_match(OrderKind::diagonal), "criterion needs diagonal blocks");

    struct Bounds {
        int min_r, max_r, min_c, max_c;
    };
    auto bounds_of = [](const Minor& m) {
        return Bounds{m.rows.front(), m.rows.back(), m.cols.front(), m.cols.back()};
    };

    for (std::size_t i = 0; i < spec.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < spec.blocks.size(); ++j) {
            const std::vector<Cell> shared = spec.blocks[i].intersection_cells(spec.blocks[j]);
            const std::vector<Minor> gi = spec.generators_of(static_cast<int>(i));
            const std::vector<Minor> gj = spec.generators_of(static_cast<int>(j));
            std::map<std::pair<std::array<int, 4>, std::array<int, 4>>, bool> memo;
            for (const Minor& a : gi)
                for (const Minor& b : gj) {
                    const Bounds ba = bounds_of(a), bb = bounds_of(b);
                    const auto key = std::pair(std::array{ba.min_r, ba.max_r, ba.min_c, ba.max_c},
                                               std::array{bb.min_r, bb.max_r, bb.min_c, bb.max_c});
                    auto it = memo.find(key);
                    bool ok;
                    if (it != memo.end()) {
                        ok = it->second;
                    } else {
                        ok = false;
                        for (const Cell& cd : shared) {
                            if (cd.row > std::min(ba.min_r, bb.min_r) ||
                                cd.col > std::min(ba.min_c, bb.min_c))
                                continue;
                            for (const Cell& ab : spec.blocks[i].cells()) {
                                if (ab.row < ba.max_r || ab.col < ba.max_c) continue;
                                bool found = false;
                                for (const Cell& tab : spec.blocks[j].cells()) {
                                    if (tab.row < bb.max_r || tab.col < bb.max_c) continue;
                                    if ((ab.row >= tab.row && ab.col <= tab.col) ||
                                        (ab.row <= tab.row && ab.col >= tab.col)) {
                                        found = true;
                                        break;
                                    }
                                }
                                if (found) {
                                    ok = true;
                                    break;
                                }
                            }
                            if (ok) break;
                        }
                        memo.emplace(key, ok);
                    }
                    if (!ok) {
                        std::ostringstream msg;
                        msg << "no covering witness for the generator pair ("
                            << format_pair(a.rows.front(), a.cols.front()) << "... of block "
                            << i + 1 << ", ... of block " << j + 1 << ")";
                        return {false, msg.str()};
                    }
                }
        }
    return {true, {}};
}

}  // namespace detgb
