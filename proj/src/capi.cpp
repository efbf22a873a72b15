// extern "C" surface over the C++ core. Exceptions are mapped to status
// codes here and never cross the boundary.

#include "detgb.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "detgb/errors.hpp"
#include "detgb/oracle.hpp"
#include "detgb/schubert.hpp"
#include "detgb/text_io.hpp"
#include "detgb/tri_char.hpp"

using nlohmann::json;

struct detgb_permutation {
    detgb::Permutation value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_message(char** slot, const std::string& msg) {
    if (slot) *slot = dup_string(msg);
}

template <class Fn>
detgb_status guarded(char** error_message, Fn&& fn) {
    if (error_message) *error_message = nullptr;
    try {
        return fn();
    } catch (const detgb::InvalidInput& e) {
        set_message(error_message, e.what());
        return DETGB_ERROR_INVALID_INPUT;
    } catch (const detgb::Unsupported& e) {
        set_message(error_message, e.what());
        return DETGB_ERROR_UNSUPPORTED;
    } catch (const detgb::ScaleLimit& e) {
        set_message(error_message, e.what());
        return DETGB_ERROR_SCALE;
    } catch (const std::exception& e) {
        set_message(error_message, e.what());
        return DETGB_ERROR_INTERNAL;
    } catch (...) {
        set_message(error_message, "unknown error");
        return DETGB_ERROR_INTERNAL;
    }
}

bool want_json(const char* format) {
    if (!format || !*format) return false;
    const std::string f = format;
    detgb::require(f == "text" || f == "json", "format must be \"text\" or \"json\"");
    return f == "json";
}

detgb::TermOrder order_for(const char* order, int rows, int cols) {
    detgb::require(order && *order, "a term order is required (--order)");
    const auto variant = detgb::variant_from_name(order);
    detgb::require(variant.has_value(), std::string("unknown term order \"") + order +
                                            "\"; expected one of new, nes, swe, swn, nwe, nws, "
                                            "sew, sen");
    return detgb::TermOrder::scanning(*variant, rows, cols);
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += "\n";
    }
    return out;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::string schubert_payload(const detgb::Permutation& w, const std::string& what,
                             const char* order, bool as_json, bool with_stats) {
    using namespace detgb;
    const auto start = std::chrono::steady_clock::now();

    if (what == "ess" || what == "rothe") {
        json j{{"schema", kJsonSchemaVersion}, {"w", w.one_line()}};
        std::vector<std::string> lines;
        std::size_t count = 0;
        if (what == "ess") {
            const auto ess = essential_set(w);
            count = ess.size();
            json arr = json::array();
            std::string line;
            for (const auto& b : ess) {
                arr.push_back({{"row", b.row}, {"col", b.col}, {"rank", b.rank}});
                if (!line.empty()) line += "; ";
                line += format_essential_box(b);
            }
            j["essential_set"] = arr;
            if (!line.empty()) lines.push_back(line);
        } else {
            const auto boxes = rothe_diagram(w);
            count = boxes.size();
            json arr = json::array();
            std::string line;
            for (const Cell& c : boxes) {
                arr.push_back({c.row, c.col});
                if (!line.empty()) line += "; ";
                line += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
            }
            j["rothe_diagram"] = arr;
            if (!line.empty()) lines.push_back(line);
        }
        if (with_stats) {
            j["stats"] = {{"boxes", count}, {"time_ms", elapsed_ms(start)}};
            lines = {"boxes: " + std::to_string(count),
                     "time_ms: " + std::to_string(elapsed_ms(start))};
        }
        return as_json ? j.dump() : join_lines(lines);
    }

    if (what == "fulton" || what == "elusive") {
        const auto fulton = fulton_generators(w);
        const auto chosen = what == "fulton" ? fulton : elusive_minors(w);
        const auto distinct = what == "elusive" ? elusive_minor_set(w) : std::vector<Minor>{};
        if (with_stats) {
            json j{{"schema", kJsonSchemaVersion},
                   {"w", w.one_line()},
                   {"stats",
                    {{"generators", fulton.size()},
                     {"time_ms", elapsed_ms(start)}}}};
            std::vector<std::string> lines{"generators: " + std::to_string(fulton.size())};
            if (what == "elusive") {
                j["stats"]["elusive"] = distinct.size();
                lines.push_back("elusive: " + std::to_string(distinct.size()));
            }
            j["stats"]["time_ms"] = elapsed_ms(start);
            lines.push_back("time_ms: " + std::to_string(elapsed_ms(start)));
            return as_json ? j.dump() : join_lines(lines);
        }
        json arr = json::array();
        std::vector<std::string> lines;
        for (const auto& gen : chosen) {
            json e = minor_to_json(gen.minor);
            e["box"] = {{"row", gen.box.row}, {"col", gen.box.col}, {"rank", gen.box.rank}};
            arr.push_back(e);
            lines.push_back(format_essential_box(gen.box) + ": " + format_minor(gen.minor));
        }
        json j{{"schema", kJsonSchemaVersion}, {"w", w.one_line()}, {"generators", arr}};
        return as_json ? j.dump() : join_lines(lines);
    }

    if (what == "redgb") {
        const TermOrder ord = order_for(order, w.size(), w.size());
        const auto basis = reduced_gb_schubert(w, ord);
        if (with_stats) {
            const auto fulton = fulton_generators(w);
            const auto distinct = elusive_minor_set(w);
            std::size_t removed = 0;
            for (const auto& el : basis) {
                const std::size_t full = expand_minor(el.source).term_count();
                removed += full - el.poly.term_count();
            }
            json j{{"schema", kJsonSchemaVersion},
                   {"w", w.one_line()},
                   {"order", order},
                   {"stats",
                    {{"generators", fulton.size()},
                     {"elusive", distinct.size()},
                     {"removed_terms", removed},
                     {"basis", basis.size()},
                     {"time_ms", elapsed_ms(start)}}}};
            std::vector<std::string> lines{
                "generators: " + std::to_string(fulton.size()),
                "elusive: " + std::to_string(distinct.size()),
                "removed_terms: " + std::to_string(removed),
                "basis: " + std::to_string(basis.size()),
                "time_ms: " + std::to_string(elapsed_ms(start))};
            return as_json ? j.dump() : join_lines(lines);
        }
        json arr = json::array();
        std::vector<std::string> lines;
        for (const auto& el : basis) {
            arr.push_back({{"source", minor_to_json(el.source)},
                           {"poly", polynomial_to_json(el.poly)}});
            lines.push_back(format_polynomial(el.poly, ord));
        }
        json j{{"schema", kJsonSchemaVersion},
               {"w", w.one_line()},
               {"order", order},
               {"basis", arr}};
        return as_json ? j.dump() : join_lines(lines);
    }

    if (what == "wchar") {
        const TermOrder ord = order_for(order, w.size(), w.size());
        const auto basis = reduced_gb_schubert(w, ord);
        std::vector<Polynomial> polys;
        for (const auto& el : basis) polys.push_back(el.poly);
        const TriangularSet ts = w_characteristic_set(polys, ord);
        json arr = json::array();
        std::vector<std::string> lines;
        for (const Polynomial& p : ts.polys) {
            const Cell lv = leading_variable(p, ord);
            arr.push_back({{"lv", {lv.row, lv.col}}, {"poly", polynomial_to_json(p)}});
            lines.push_back(format_cell(lv) + ": " + format_polynomial(p, ord));
        }
        json j{{"schema", kJsonSchemaVersion},
               {"w", w.one_line()},
               {"order", order},
               {"w_characteristic_set", arr}};
        if (with_stats) {
            j["stats"] = {{"elements", ts.polys.size()}, {"time_ms", elapsed_ms(start)}};
            lines = {"elements: " + std::to_string(ts.polys.size()),
                     "time_ms: " + std::to_string(elapsed_ms(start))};
        }
        return as_json ? j.dump() : join_lines(lines);
    }

    throw detgb::InvalidInput("unknown schubert subcommand \"" + what +
                              "\"; expected ess, rothe, fulton, elusive, redgb, or wchar");
}

}  // namespace

extern "C" {

const char* detgb_version(void) { return "0.1.0"; }

detgb_status detgb_permutation_parse(const char* text, detgb_permutation** out,
                                     char** error_message) {
    return guarded(error_message, [&]() {
        detgb::require(text != nullptr && out != nullptr,
                       "permutation text and output slot must be non-null");
        *out = new detgb_permutation{detgb::Permutation::parse(text)};
        return DETGB_OK;
    });
}

void detgb_permutation_free(detgb_permutation* w) { delete w; }

int detgb_permutation_size(const detgb_permutation* w) { return w ? w->value.size() : 0; }

detgb_status detgb_permutation_is_vexillary(const detgb_permutation* w, int* out_is_vexillary) {
    return guarded(nullptr, [&]() {
        detgb::require(w != nullptr && out_is_vexillary != nullptr, "null argument");
        *out_is_vexillary = detgb::is_vexillary(w->value) ? 1 : 0;
        return DETGB_OK;
    });
}

detgb_status detgb_permutation_format(const detgb_permutation* w, char** out) {
    return guarded(nullptr, [&]() {
        detgb::require(w != nullptr && out != nullptr, "null argument");
        *out = dup_string(w->value.to_string());
        return DETGB_OK;
    });
}

detgb_status detgb_schubert(const detgb_permutation* w, const char* what, const char* order,
                            const char* format, int with_stats, char** out_payload,
                            char** error_message) {
    return guarded(error_message, [&]() {
        detgb::require(w != nullptr && what != nullptr && out_payload != nullptr,
                       "null argument");
        const std::string payload =
            schubert_payload(w->value, what, order, want_json(format), with_stats != 0);
        *out_payload = dup_string(payload);
        return DETGB_OK;
    });
}

detgb_status detgb_verify(const detgb_permutation* w, const char* check, const char* target,
                          const char* order, const char* format, char** out_report,
                          char** error_message) {
    return guarded(error_message, [&]() {
        using namespace detgb;
        require(w != nullptr && check != nullptr && out_report != nullptr, "null argument");
        const std::string what = check;
        const std::string tgt = target && *target ? target : "fulton";
        const bool as_json = want_json(format);
        const TermOrder ord = order_for(order, w->value.size(), w->value.size());

        bool pass = false;
        std::string detail;

        if (what == "gb" || what == "minimal" || what == "reduced") {
            std::vector<Polynomial> polys;
            if (tgt == "fulton") {
                std::vector<Minor> seen;
                for (const auto& gen : fulton_generators(w->value))
                    if (std::find(seen.begin(), seen.end(), gen.minor) == seen.end()) {
                        seen.push_back(gen.minor);
                        polys.push_back(expand_minor(gen.minor));
                    }
            } else if (tgt == "elusive") {
                for (const Minor& m : elusive_minor_set(w->value))
                    polys.push_back(expand_minor(m));
            } else if (tgt == "redgb") {
                for (const auto& el : reduced_gb_schubert(w->value, ord))
                    polys.push_back(el.poly);
            } else {
                throw InvalidInput("unknown verify target \"" + tgt +
                                   "\"; expected fulton, elusive, or redgb");
            }
            if (what == "gb")
                pass = is_groebner(polys, ord);
            else if (what == "minimal")
                pass = is_minimal_gb(polys, ord);
            else
                pass = is_reduced_gb(polys, ord);
        } else if (what == "normality" || what == "strongpair") {
            std::vector<Polynomial> polys;
            for (const auto& el : reduced_gb_schubert(w->value, ord)) polys.push_back(el.poly);
            const TriangularSet ts = w_characteristic_set(polys, ord);
            if (what == "normality") {
                const NormalityReport rep = check_normality(ts, ord);
                pass = rep.normal;
                for (const NormalityViolation& v : rep.violations) {
                    if (!detail.empty()) detail += "; ";
                    detail += "initial of the element with leading variable " +
                              format_cell(v.element_lv) + " involves " +
                              format_cell(v.offending_var);
                }
            } else {
                pass = strong_pair_partial_check(polys, ts, ord);
                if (!pass) detail = "an initial reduces to zero modulo the basis";
            }
        } else {
            throw InvalidInput("unknown verify check \"" + what +
                               "\"; expected gb, minimal, reduced, normality, or strongpair");
        }

        std::string text;
        if (as_json) {
            json j{{"schema", kJsonSchemaVersion}, {"check", what},
                   {"target", tgt},               {"w", w->value.one_line()},
                   {"order", order},              {"pass", pass}};
            if (!detail.empty()) j["detail"] = detail;
            text = j.dump();
        } else {
            std::vector<std::string> lines{
                "check: " + what, "target: " + tgt + " " + w->value.to_string(),
                "order: " + std::string(order), std::string("result: ") + (pass ? "pass" : "fail")};
            if (!detail.empty()) lines.push_back("detail: " + detail);
            text = join_lines(lines);
        }
        *out_report = dup_string(text);
        return pass ? DETGB_OK : DETGB_CHECK_FAILED;
    });
}

detgb_status detgb_ladder(const char* subcommand, const char* spec_json, const char* order,
                          const char* format, int n, char** out_payload, char** error_message) {
    return guarded(error_message, [&]() {
        using namespace detgb;
        require(subcommand != nullptr && spec_json != nullptr && out_payload != nullptr,
                "null argument");
        const std::string sub = subcommand;
        const bool as_json = want_json(format);
        const json spec = parse_json(spec_json);
        std::string text;

        if (sub == "onesided") {
            const BlockwiseIdealSpec ideal = one_sided_spec_from_json(spec);
            json arr = json::array();
            std::vector<std::string> lines;
            std::size_t total = 0;
            for (std::size_t i = 0; i < ideal.blocks.size(); ++i) {
                const auto gens = ideal.generators_of(static_cast<int>(i));
                total += gens.size();
                json gen_arr = json::array();
                for (const Minor& m : gens) gen_arr.push_back(minor_to_json(m));
                arr.push_back({{"size", ideal.sizes[i]}, {"minors", gen_arr}});
                lines.push_back("block " + std::to_string(i + 1) + ": r=" +
                                std::to_string(ideal.sizes[i]) + " minors=" +
                                std::to_string(gens.size()));
            }
            lines.push_back("generators: " + std::to_string(total));
            json j{{"schema", kJsonSchemaVersion}, {"blocks", arr}, {"generators", total}};
            text = as_json ? j.dump() : join_lines(lines);
        } else if (sub == "twosided") {
            const Ladder ladder = ladder_from_json(spec);
            require(spec.contains("r") && spec["r"].is_array(),
                    "two-sided spec JSON needs an \"r\" array");
            const auto r = spec["r"].get<std::vector<int>>();
            const auto groups = two_sided_generators(ladder, r);
            json arr = json::array();
            std::vector<std::string> lines;
            std::size_t total = 0;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                total += groups[i].size();
                json gen_arr = json::array();
                for (const Minor& m : groups[i]) gen_arr.push_back(minor_to_json(m));
                arr.push_back({{"upper", {ladder.upper[i].first, ladder.upper[i].second}},
                               {"size", r[i]},
                               {"minors", gen_arr}});
                lines.push_back("group " + std::to_string(i + 1) + " (upper corner (" +
                                std::to_string(ladder.upper[i].first) + "," +
                                std::to_string(ladder.upper[i].second) + "), r=" +
                                std::to_string(r[i]) + "): " + std::to_string(groups[i].size()) +
                                " minors");
                for (const Minor& m : groups[i]) lines.push_back("  " + format_minor(m));
            }
            lines.push_back("generators: " + std::to_string(total));
            json j{{"schema", kJsonSchemaVersion},
                   {"ladder", ladder_to_json(ladder)},
                   {"groups", arr},
                   {"generators", total}};
            text = as_json ? j.dump() : join_lines(lines);
        } else if (sub == "tovex") {
            std::vector<int> a, b, r;
            int m = 0, cols = 0;
            one_sided_sequences_from_json(spec, a, b, r, m, cols);
            const BlockwiseIdealSpec ideal = one_sided_ideal(a, b, r, m, cols);
            int ambient = n;
            if (ambient == 0) {
                int max_a = 0, max_b = 0;
                for (int x : a) max_a = std::max(max_a, x);
                for (int x : b) max_b = std::max(max_b, x);
                ambient = max_a + max_b;
            }
            const Permutation w = ladder_to_vexillary(ideal, ambient);
            // Round-trip check, re-asserted on every run.
            const auto ess = essential_set(w);
            bool match = ess.size() == a.size();
            for (std::size_t i = 0; match && i < ess.size(); ++i) {
                std::size_t found = ess.size();
                for (std::size_t k = 0; k < ess.size(); ++k)
                    if (ess[k].row == a[i] && ess[k].col == b[i] && ess[k].rank == r[i] - 1)
                        found = k;
                if (found == ess.size()) match = false;
            }
            json j{{"schema", kJsonSchemaVersion},
                   {"n", ambient},
                   {"w", w.one_line()},
                   {"ess_match", match}};
            std::vector<std::string> lines{"w = " + w.to_string(),
                                           std::string("ess match: ") + (match ? "yes" : "no")};
            text = as_json ? j.dump() : join_lines(lines);
        } else if (sub == "criteria") {
            const BlockwiseIdealSpec ideal = blockwise_spec_from_json(spec);
            const TermOrder ord = order_for(order, ideal.rows, ideal.cols);
            json j{{"schema", kJsonSchemaVersion}};
            std::vector<std::string> lines;
            auto report = [&](const std::string& name, const CriterionResult& res) {
                j[name] = {{"holds", res.holds}};
                if (!res.holds) j[name]["violation"] = res.violation;
                lines.push_back(name + ": " + (res.holds ? "true" : "false") +
                                (res.violation.empty() ? "" : " (" + res.violation + ")"));
            };
            report("disjoint_blocks", criterion_disjoint_blocks(ideal));
            report("disjoint_leading_vars", criterion_disjoint_leading_vars(ideal, ord));
            report("attend_or_lcm", criterion_attend_or_lcm(ideal, ord));
            report("rowcolumn", criterion_rowcolumn(ideal));
            text = as_json ? j.dump() : join_lines(lines);
        } else {
            throw InvalidInput("unknown ladder subcommand \"" + sub +
                               "\"; expected onesided, twosided, tovex, or criteria");
        }
        *out_payload = dup_string(text);
        return DETGB_OK;
    });
}

void detgb_string_free(char* s) { std::free(s); }

}  // extern "C"
