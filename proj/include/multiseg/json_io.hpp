#pragma once

#include <string>

#include <json.hpp>

#include "multiseg/multisegment.hpp"

namespace multiseg {

/// JSON forms: a Segment is [a, b]; a Multisegment is a list of such pairs
/// (duplicates carry multiplicity, input order irrelevant, output
/// canonical); the Infinity symbol is the string "infinity".
nlohmann::json to_json(const Segment& s);
nlohmann::json to_json(const Multisegment& m);
nlohmann::json to_json(const RemovalOutcome& o);

Segment segment_from_json(const nlohmann::json& j);
Multisegment multisegment_from_json(const nlohmann::json& j);
RemovalOutcome outcome_from_json(const nlohmann::json& j);

/// Accepts the JSON form or the compact notation "[0,3]+[1,2]+[1,2]".
/// Rejects malformed text and pairs with b < a.
Multisegment parse_multisegment(const std::string& text);
Segment parse_segment(const std::string& text);

} // namespace multiseg
