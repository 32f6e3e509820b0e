#include "binmosaic/spec_io.hpp"

#include <stdexcept>

namespace binmosaic {

namespace {

constexpr int kSpecFormat = 1;

Rational read_fraction(const nlohmann::json& node, const char* what) {
  if (!node.is_string()) {
    throw std::invalid_argument(std::string("spec field ") + what + " must be a \"num/den\" string");
  }
  return Rational::parse(node.get<std::string>());
}

}  // namespace

nlohmann::json chain_spec_to_json(const ChainSpec& spec) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : spec.steps()) {
    steps.push_back({{"q0", step.p_zero_given[0].value().to_string()},
                     {"q1", step.p_zero_given[1].value().to_string()}});
  }
  return {{"format", kSpecFormat},
          {"initial_p1", spec.initial_p1().value().to_string()},
          {"steps", std::move(steps)}};
}

ChainSpec chain_spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("chain spec must be a JSON object");
  }
  if (doc.contains("format") && doc.at("format") != kSpecFormat) {
    throw std::invalid_argument("unsupported chain spec format " + doc.at("format").dump());
  }
  if (!doc.contains("initial_p1")) {
    throw std::invalid_argument("chain spec is missing \"initial_p1\"");
  }
  const Rational initial = read_fraction(doc.at("initial_p1"), "initial_p1");
  std::vector<std::array<Rational, 2>> steps;
  if (doc.contains("steps")) {
    const auto& list = doc.at("steps");
    if (!list.is_array()) {
      throw std::invalid_argument("chain spec \"steps\" must be an array");
    }
    for (const auto& step : list) {
      if (!step.is_object() || !step.contains("q0") || !step.contains("q1")) {
        throw std::invalid_argument("each step needs \"q0\" and \"q1\"");
      }
      steps.push_back({read_fraction(step.at("q0"), "q0"), read_fraction(step.at("q1"), "q1")});
    }
  }
  return chain_spec_new(initial, steps);
}

std::string dump_chain_spec(const ChainSpec& spec) { return chain_spec_to_json(spec).dump(2) + "\n"; }

ChainSpec parse_chain_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("chain spec is not valid JSON: ") + e.what());
  }
  return chain_spec_from_json(doc);
}

}  // namespace binmosaic
