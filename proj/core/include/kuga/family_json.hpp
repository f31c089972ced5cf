#pragma once

#include "kuga/invariants.hpp"

#include <json.hpp>

#include <string>

namespace kuga {

/// Parses a family document. Schema:
///   {"genus": int, "base_genus": int, "q_f": int?, "hyperelliptic": bool,
///    "fibers": [{"compact_jacobian": bool,
///                "delta": {"<index>": count, ...},
///                "xi":    {"<index>": count, ...}}, ...]}
/// delta/xi keys are decimal-string indices with implicit zeros elsewhere.
/// Unknown keys are rejected. Throws SchemaError with a location prefix.
FamilyInvariants family_from_json(const nlohmann::json &doc);
FamilyInvariants family_from_string(const std::string &text);
FamilyInvariants family_from_file(const std::string &path);

/// Inverse of family_from_json; emits keys in schema order.
nlohmann::ordered_json family_to_json(const FamilyInvariants &fam);

} // namespace kuga
