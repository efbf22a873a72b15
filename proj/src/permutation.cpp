#include "detgb/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

#include "detgb/errors.hpp"

namespace detgb {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = static_cast<int>(w_.size());
    require(n >= 1, "a permutation needs at least one entry");
    inv_.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = w_[i - 1];
        require(v >= 1 && v <= n, "permutation entry " + std::to_string(v) +
                                      " outside [1.." + std::to_string(n) + "]");
        require(inv_[v] == 0, "permutation repeats the value " + std::to_string(v));
        inv_[v] = i;
    }
}

Permutation Permutation::identity(int n) {
    require(n >= 1, "identity permutation needs n >= 1");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    require(!s.empty(), "empty permutation");
    if (s.front() == '[') {
        require(s.back() == ']', "unbalanced brackets in permutation \"" + text + "\"");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            require(!tok.empty(), "empty entry in permutation \"" + text + "\"");
            try {
                std::size_t pos = 0;
                const int v = std::stoi(tok, &pos);
                require(pos == tok.size(), "bad permutation entry \"" + tok + "\"");
                w.push_back(v);
            } catch (const InvalidInput&) {
                throw;
            } catch (...) {
                throw InvalidInput("bad permutation entry \"" + tok + "\"");
            }
        }
    } else {
        // Compact one-digit-per-value form, n <= 9.
        for (char c : s) {
            require(c >= '1' && c <= '9',
                    "compact permutation form allows only digits 1-9, got \"" + text + "\"");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

int Permutation::image(int i) const {
    require(i >= 1 && i <= size(), "permutation index out of range");
    return w_[i - 1];
}

int Permutation::preimage(int v) const {
    require(v >= 1 && v <= size(), "permutation value out of range");
    return inv_[v];
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w_[i]);
    }
    return out + "]";
}

bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }

std::vector<Cell> rothe_diagram(const Permutation& w) {
    std::vector<Cell> boxes;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < w.image(i); ++j)
            if (w.preimage(j) > i) boxes.push_back({i, j});
    return boxes;  // already sorted (row, col) by construction
}

int rank_nw(const Permutation& w, int p, int q) {
    require(p >= 1 && p <= w.size() && q >= 1 && q <= w.size(),
            "rank request outside the permutation matrix");
    int rank = 0;
    for (int i = 1; i <= p; ++i)
        if (w.image(i) <= q) ++rank;
    return rank;
}

std::vector<EssentialBox> essential_set(const Permutation& w) {
    const std::vector<Cell> diagram = rothe_diagram(w);
    std::set<std::pair<int, int>> in_diagram;
    for (const Cell& c : diagram) in_diagram.insert({c.row, c.col});
    std::vector<EssentialBox> ess;
    for (const Cell& c : diagram) {
        if (in_diagram.count({c.row, c.col + 1}) || in_diagram.count({c.row + 1, c.col}))
            continue;
        ess.push_back({c.row, c.col, rank_nw(w, c.row, c.col)});
    }
    return ess;  // (row, col) sorted, inherited from the diagram
}

bool is_vexillary_by_pattern(const Permutation& w) {
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (w.image(j) >= w.image(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (w.image(k) <= w.image(i)) continue;
                for (int l = k + 1; l <= n; ++l)
                    if (w.image(l) > w.image(i) && w.image(l) < w.image(k)) return false;
            }
        }
    return true;
}

bool is_vexillary_by_essential_set(const Permutation& w) {
    const std::vector<EssentialBox> ess = essential_set(w);
    for (std::size_t a = 0; a < ess.size(); ++a)
        for (std::size_t b = 0; b < ess.size(); ++b)
            if (ess[a].row < ess[b].row && ess[a].col < ess[b].col) return false;
    return true;
}

bool is_vexillary(const Permutation& w) {
    const bool by_pattern = is_vexillary_by_pattern(w);
    assert(by_pattern == is_vexillary_by_essential_set(w));
    return by_pattern;
}

}  // namespace detgb
