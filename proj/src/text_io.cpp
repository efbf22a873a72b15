#include "detgb/text_io.hpp"

#include <algorithm>
#include <sstream>

#include "detgb/errors.hpp"

namespace detgb {

using nlohmann::json;

std::string format_cell(Cell c) {
    return "x[" + std::to_string(c.row) + "," + std::to_string(c.col) + "]";
}

std::string format_term(const Term& t) {
    if (t.is_one()) return "1";
    std::string out;
    const auto& cells = t.cells();
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        while (j < cells.size() && cells[j] == cells[i]) ++j;
        if (!out.empty()) out += "*";
        out += format_cell(cells[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string format_minor(const Minor& m) {
    auto list = [](const std::vector<int>& xs) {
        std::string s = "{";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(xs[i]);
        }
        return s + "}";
    };
    return "(" + list(m.rows) + "," + list(m.cols) + ")";
}

std::string format_polynomial(const Polynomial& p, const TermOrder& ord) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [t, c] : p.sorted_terms(ord)) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || t.is_one()) {
            out += mag.str();
            if (!t.is_one()) out += "*";
        }
        if (!t.is_one()) out += format_term(t);
    }
    return out;
}

std::string format_essential_box(const EssentialBox& b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ") rank " +
           std::to_string(b.rank);
}

json permutation_to_json(const Permutation& w) {
    return json{{"schema", kJsonSchemaVersion}, {"n", w.size()}, {"w", w.one_line()}};
}

Permutation permutation_from_json(const json& j) {
    require(j.contains("w") && j["w"].is_array(), "permutation JSON needs a \"w\" array");
    std::vector<int> w;
    for (const auto& v : j["w"]) w.push_back(v.get<int>());
    return Permutation(std::move(w));
}

json minor_to_json(const Minor& m) { return json{{"rows", m.rows}, {"cols", m.cols}}; }

Minor minor_from_json(const json& j) {
    require(j.contains("rows") && j.contains("cols"), "minor JSON needs \"rows\" and \"cols\"");
    return Minor(j["rows"].get<std::vector<int>>(), j["cols"].get<std::vector<int>>());
}

json term_to_json(const Term& t) {
    json cells = json::array();
    for (const Cell& c : t.cells()) cells.push_back({c.row, c.col});
    return cells;
}

Term term_from_json(const json& j) {
    require(j.is_array(), "term JSON must be an array of [row, col] pairs");
    std::vector<Cell> cells;
    for (const auto& e : j) {
        require(e.is_array() && e.size() == 2, "term cell must be a [row, col] pair");
        cells.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Term::from_cells(std::move(cells));
}

json polynomial_to_json(const Polynomial& p) {
    // Deterministic order-independent listing: terms sorted by their cells.
    std::vector<std::pair<Term, Int>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    json arr = json::array();
    for (const auto& [t, c] : terms)
        arr.push_back(json{{"coeff", c.str()}, {"term", term_to_json(t)}});
    return json{{"terms", arr}};
}

Polynomial polynomial_from_json(const json& j) {
    require(j.contains("terms") && j["terms"].is_array(),
            "polynomial JSON needs a \"terms\" array");
    Polynomial p;
    for (const auto& e : j["terms"]) {
        require(e.contains("coeff") && e.contains("term"),
                "polynomial term JSON needs \"coeff\" and \"term\"");
        p.add_term(term_from_json(e["term"]), Int(e["coeff"].get<std::string>()));
    }
    return p;
}

namespace {

std::vector<std::pair<int, int>> corner_list_from_json(const json& j, const char* key) {
    require(j.contains(key) && j[key].is_array(),
            std::string("ladder JSON needs a \"") + key + "\" array of [row, col] pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j[key]) {
        require(e.is_array() && e.size() == 2, "corner must be a [row, col] pair");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

}  // namespace

json ladder_to_json(const Ladder& l) {
    json lower = json::array(), upper = json::array();
    for (const auto& [a, b] : l.lower) lower.push_back({a, b});
    for (const auto& [c, d] : l.upper) upper.push_back({c, d});
    return json{{"schema", kJsonSchemaVersion}, {"m", l.rows}, {"n", l.cols},
                {"lower", lower},              {"upper", upper}};
}

Ladder ladder_from_json(const json& j) {
    const auto lower = corner_list_from_json(j, "lower");
    std::vector<std::pair<int, int>> upper;
    if (j.contains("upper"))
        upper = corner_list_from_json(j, "upper");
    else
        upper = {{1, 1}};  // full one-sided ladder
    int m = 0, n = 0;
    for (const auto& [a, b] : lower) {
        m = std::max(m, a);
        n = std::max(n, b);
    }
    for (const auto& [c, d] : upper) {
        m = std::max(m, c);
        n = std::max(n, d);
    }
    if (j.contains("m")) m = j["m"].get<int>();
    if (j.contains("n")) n = j["n"].get<int>();
    return Ladder(lower, upper, m, n);
}

BlockwiseIdealSpec blockwise_spec_from_json(const json& j) {
    require(j.contains("m") && j.contains("n"), "blockwise spec JSON needs \"m\" and \"n\"");
    require(j.contains("blocks") && j["blocks"].is_array(),
            "blockwise spec JSON needs a \"blocks\" array");
    require(j.contains("r") && j["r"].is_array(), "blockwise spec JSON needs an \"r\" array");
    const int m = j["m"].get<int>();
    const int n = j["n"].get<int>();
    std::vector<Block> blocks;
    for (const auto& e : j["blocks"]) {
        if (e.contains("rect")) {
            require(e["rect"].is_array() && e["rect"].size() == 2,
                    "\"rect\" must be a [p, q] pair");
            blocks.push_back(Block::nw_rectangle(e["rect"][0].get<int>(),
                                                 e["rect"][1].get<int>(), m, n));
        } else if (e.contains("cells")) {
            std::vector<Cell> cells;
            for (const auto& cj : e["cells"]) {
                require(cj.is_array() && cj.size() == 2, "cell must be a [row, col] pair");
                cells.push_back({cj[0].get<int>(), cj[1].get<int>()});
            }
            blocks.push_back(Block(std::move(cells), m, n));
        } else if (e.contains("lower")) {
            json lj = e;
            lj["m"] = m;
            lj["n"] = n;
            blocks.push_back(ladder_from_json(lj).materialize());
        } else {
            throw InvalidInput("block JSON needs \"rect\", \"cells\", or \"lower\"");
        }
    }
    return BlockwiseIdealSpec(std::move(blocks), j["r"].get<std::vector<int>>(), m, n);
}

void one_sided_sequences_from_json(const json& j, std::vector<int>& a, std::vector<int>& b,
                                   std::vector<int>& r, int& m, int& n) {
    require(j.contains("a") && j.contains("b") && j.contains("r"),
            "one-sided spec JSON needs \"a\", \"b\", and \"r\" arrays");
    a = j["a"].get<std::vector<int>>();
    b = j["b"].get<std::vector<int>>();
    r = j["r"].get<std::vector<int>>();
    m = 0;
    n = 0;
    for (int x : a) m = std::max(m, x);
    for (int x : b) n = std::max(n, x);
    if (j.contains("m")) m = j["m"].get<int>();
    if (j.contains("n")) n = j["n"].get<int>();
}

BlockwiseIdealSpec one_sided_spec_from_json(const json& j) {
    std::vector<int> a, b, r;
    int m = 0, n = 0;
    one_sided_sequences_from_json(j, a, b, r, m, n);
    return one_sided_ideal(a, b, r, m, n);
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    require(!j.is_discarded(), "malformed JSON input");
    return j;
}

}  // namespace detgb
