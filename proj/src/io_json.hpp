#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "geometry.hpp"

namespace boxhelly {

// Family file schema:
//   {"dim": d, "label": "...", "boxes": [[{"lo": "p/q", "hi": "p/q",
//    "lo_open": bool, "hi_open": bool}, ... d records], ...]}
// Rationals are strings ("p/q" lowest terms, or "p" when integral) so the
// file stays exact; plain JSON integers and decimal strings are accepted
// on input. The open flags default to false when omitted.
nlohmann::ordered_json family_to_json(const BoxFamily& f);
BoxFamily family_from_json(const nlohmann::json& j);

// Text forms, including the trailing newline the CLI writes. Parsing wraps
// malformed JSON or schema violations in ParseError.
std::string family_to_text(const BoxFamily& f);
BoxFamily family_from_text(std::string_view text);

}  // namespace boxhelly
