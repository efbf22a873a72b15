#pragma once
// Canonical text and JSON forms for the library's values. The polynomial
// text form lists terms descending under the active order, with explicit
// signs and `x[i,j]` factors joined by `*`.

#include <string>
#include <vector>

#include "json.hpp"

#include "detgb/block.hpp"
#include "detgb/ladder.hpp"
#include "detgb/minor.hpp"
#include "detgb/permutation.hpp"
#include "detgb/polynomial.hpp"
#include "detgb/schubert.hpp"
#include "detgb/term_order.hpp"
#include "detgb/tri_char.hpp"

namespace detgb {

inline constexpr int kJsonSchemaVersion = 1;

std::string format_cell(Cell c);                    // x[i,j]
std::string format_term(const Term& t);             // x[..]*x[..], "1" for the constant
std::string format_minor(const Minor& m);           // ({1,2},{1,2})
std::string format_polynomial(const Polynomial& p, const TermOrder& ord);
std::string format_essential_box(const EssentialBox& b);  // (p,q) rank r

nlohmann::json permutation_to_json(const Permutation& w);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json minor_to_json(const Minor& m);
Minor minor_from_json(const nlohmann::json& j);

nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json ladder_to_json(const Ladder& l);
Ladder ladder_from_json(const nlohmann::json& j);

// Blockwise spec: {"m":..,"n":..,"r":[..],"blocks":[...]} where a block is
// {"rect":[p,q]}, {"cells":[[i,j],...]}, or a ladder object.
BlockwiseIdealSpec blockwise_spec_from_json(const nlohmann::json& j);

// One-sided spec: {"a":[..],"b":[..],"r":[..],"m":..,"n":..} (m, n optional).
BlockwiseIdealSpec one_sided_spec_from_json(const nlohmann::json& j);
// The raw sequences, for callers that need them (e.g. tovex bounds).
void one_sided_sequences_from_json(const nlohmann::json& j, std::vector<int>& a,
                                   std::vector<int>& b, std::vector<int>& r, int& m, int& n);

nlohmann::json parse_json(const std::string& text);  // InvalidInput on bad JSON

}  // namespace detgb
