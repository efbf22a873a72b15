#pragma once
// Permutations in one-line notation together with the Rothe diagram,
// northwest rank function, essential set, and vexillary detection.

#include <string>
#include <vector>

#include "detgb/term.hpp"

namespace detgb {

class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);  // must be a bijection on [1..n]
    static Permutation identity(int n);
    // Accepts the compact digit form "2143" (n <= 9) and the bracketed or
    // bare comma/space separated list "[10,9,2,...]".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(w_.size()); }
    int image(int i) const;     // w_i, 1-based
    int preimage(int v) const;  // w^{-1}(v)
    const std::vector<int>& one_line() const { return w_; }
    std::string to_string() const;
    friend bool operator==(const Permutation&, const Permutation&);

private:
    std::vector<int> w_;
    std::vector<int> inv_;
};

struct EssentialBox {
    int row = 0;
    int col = 0;
    int rank = 0;  // rank of the northwest row x col submatrix of w^T
    friend bool operator==(const EssentialBox&, const EssentialBox&) = default;
};

// Boxes (i, j) with j < w_i and w^{-1}(j) > i, sorted by (row, col).
std::vector<Cell> rothe_diagram(const Permutation& w);

// #{ i <= p : w_i <= q }.
int rank_nw(const Permutation& w, int p, int q);

// Boxes of the Rothe diagram with neither the east nor the south neighbour in
// the diagram, each carrying its northwest rank; sorted by (row, col).
std::vector<EssentialBox> essential_set(const Permutation& w);

bool is_vexillary(const Permutation& w);
bool is_vexillary_by_pattern(const Permutation& w);        // 2143-pattern scan
bool is_vexillary_by_essential_set(const Permutation& w);  // essential-set antichain test

}  // namespace detgb
