#pragma once
// One- and two-sided ladders, blockwise determinantal ideal specifications,
// the ladder <-> vexillary correspondence, the two-sided generating sets, and
// the sufficient Groebner-basis criteria for blockwise ideals.

#include <string>
#include <vector>

#include "detgb/block.hpp"
#include "detgb/minor.hpp"
#include "detgb/permutation.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

// A two-sided ladder given by its corner sequences: rows of the lower
// corners strictly increase while columns weakly decrease, and likewise for
// the upper corners. A cell (p, q) belongs to the ladder iff p <= a_i and
// q <= b_i for some lower corner and p >= c_j and q >= d_j for some upper
// corner.
struct Ladder {
    std::vector<std::pair<int, int>> lower;  // (a_i, b_i)
    std::vector<std::pair<int, int>> upper;  // (c_j, d_j)
    int rows = 0;                            // ambient m
    int cols = 0;                            // ambient n

    Ladder(std::vector<std::pair<int, int>> lower_corners,
           std::vector<std::pair<int, int>> upper_corners, int m, int n);
    static Ladder one_sided(std::vector<std::pair<int, int>> lower_corners, int m, int n);

    Block materialize() const;
    // The one-sided component below-right of each upper corner, in corner
    // order.
    std::vector<Block> components() const;
};

struct BlockwiseIdealSpec {
    std::vector<Block> blocks;
    std::vector<int> sizes;  // parallel to blocks, each >= 1
    int rows = 0;
    int cols = 0;

    BlockwiseIdealSpec(std::vector<Block> blocks, std::vector<int> sizes, int m, int n);
    // All r_i-minors inside block i.
    std::vector<Minor> generators_of(int i) const;
    std::vector<Minor> all_generators() const;
    bool all_blocks_match(OrderKind kind) const;
};

// Northwest-rectangle spec X_{a_i b_i} with minor sizes r_i; validates the
// monotonicity of (a, b) and the strict staircase conditions on a - r and
// b - r separately.
BlockwiseIdealSpec one_sided_ideal(const std::vector<int>& a, const std::vector<int>& b,
                                   const std::vector<int>& r, int m, int n);

// The unique vexillary permutation in S_n whose essential boxes are
// (a_i, b_i) with ranks r_i - 1. Found by exhaustive search; n <= 8.
Permutation ladder_to_vexillary(const BlockwiseIdealSpec& spec, int n);

// The generating sets of Theorem-style two-sided ladder ideals, grouped per
// upper corner: the r_i-minors inside component i having at most r_j - 1
// full columns in component j for j < i and at most r_j - 1 full rows in
// component j for j > i.
std::vector<std::vector<Minor>> two_sided_generators(const Ladder& ladder,
                                                     const std::vector<int>& r);

struct CriterionResult {
    bool holds = false;
    std::string violation;  // empty when holds; first violating pair otherwise
    explicit operator bool() const { return holds; }
};

// Pairwise disjoint blocks.
CriterionResult criterion_disjoint_blocks(const BlockwiseIdealSpec& spec);

// Cross-block generator pairs never share a leading-term variable.
CriterionResult criterion_disjoint_leading_vars(const BlockwiseIdealSpec& spec,
                                                const TermOrder& ord);

// Every cross-block generator pair with a strictly smaller opposite size
// either attends the smaller block or has coprime leading terms.
CriterionResult criterion_attend_or_lcm(const BlockwiseIdealSpec& spec, const TermOrder& ord);

// Per cross-block generator pair, a covering one-sided-ladder witness
// (x_cd in the intersection, x_ab and x_ab~ bounding corners with comparable
// positions) exists. Guarded to ambient dimensions <= 12.
CriterionResult criterion_rowcolumn(const BlockwiseIdealSpec& spec);

// A generator attends a block when the block contains at least `needed` full
// rows or full columns of the generator's grid.
bool minor_attends_block(const Minor& m, const Block& b, int needed);

}  // namespace detgb
