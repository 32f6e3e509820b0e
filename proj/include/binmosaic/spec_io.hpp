#pragma once

#include "binmosaic/model.hpp"

#include <json.hpp>

#include <string>

namespace binmosaic {

// {"format": 1, "initial_p1": "1/2", "steps": [{"q0": "1/3", "q1": "2/3"}, ...]}
// Probabilities are "num/den" strings so the round trip is exact. A missing
// "format" is read as version 1.
nlohmann::json chain_spec_to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(const nlohmann::json& doc);

// Pretty-printed document with a trailing newline.
std::string dump_chain_spec(const ChainSpec& spec);
ChainSpec parse_chain_spec(const std::string& text);

}  // namespace binmosaic
