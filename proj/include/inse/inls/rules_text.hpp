#pragma once

#include "inse/inls/engine.hpp"

#include <iosfwd>

namespace inse::inls {

// Declarative rulebase format:
//   input service_quality 0 10
//   output price 0 10
//   term service_quality low T 0 0 2 4 / 0 0 2.5 4.5 I 0 0 0 2 F 2 4 10 10
//   rule if service_quality is low then price is cheap
// Each membership spec is a lower trapezoid "a b c d" with an optional upper
// trapezoid after '/' (defaults to the lower one).
RuleBase parse_rulebase(std::istream& in);
RuleBase load_rulebase(const std::string& path);

} // namespace inse::inls
