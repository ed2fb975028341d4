#pragma once

// FamilySpec JSON: {"kind": "<name>", "params": {"<param>": <number>, ...}}

#include <string>

#include "solvpot/families.hpp"

namespace solvpot {

/// Throws InvalidSpec on malformed JSON, unknown kind, or missing/unknown parameters.
FamilySpec spec_from_json(const std::string& text);

/// Parameters are written in storage order with round-trip precision.
std::string spec_to_json(const FamilySpec& spec, int indent = 2);

FamilySpec read_spec_file(const std::string& path);

}  // namespace solvpot
