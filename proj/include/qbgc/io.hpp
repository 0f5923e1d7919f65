#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "qbgc/bijection.hpp"

namespace qbgc {

using Json = nlohmann::ordered_json;

Json root_system_json(const WeylGroup& W);

std::string qbg_dot(const QuantumBruhatGraph& g);
Json qbg_json(const QuantumBruhatGraph& g);

Json inversion_table_json(const InversionTable& table);

Json alcove_path_json(const AlcoveModel& model, const AlcovePath& p);
Json qls_path_json(const QlsModel& model, const QlsPath& p, int w);

// Terms as { "weight": [...], "q": k, "coeff": n }, canonical order; coeff
// falls back to a decimal string outside the 64-bit range.
Json character_json(const GradedCharacter& c);
GradedCharacter character_from_json(const Json& j);

}  // namespace qbgc
