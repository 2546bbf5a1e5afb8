#pragma once

#include <string>
#include <variant>

#include "limitada/machines.hpp"

namespace limitada {

using AnyMachine = std::variant<OneWayMachine, TwoWayMachine, OneLimitedMachine, CommonGuessMachine>;

// "1dfa", "1nfa", "2dfa", "2nfa", "1la", "d1la", "cg-2dfa" or "cg-2nfa".
std::string kind_of(const AnyMachine& m);

std::string serialize(const AnyMachine& m, int indent = 2);

// Throws InputError with the byte offset on malformed JSON, or the field path
// on a schema violation.
AnyMachine parse_machine(const std::string& text);

}  // namespace limitada
