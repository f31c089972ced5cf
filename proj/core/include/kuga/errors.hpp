#pragma once

#include <stdexcept>
#include <string>

namespace kuga {

/// Input document does not describe a well-formed family (bad JSON shape,
/// out-of-range index, census identity broken, ...).
class SchemaError : public std::runtime_error {
public:
  explicit SchemaError(const std::string &what) : std::runtime_error(what) {}
};

/// A requested scenario carries contradictory or out-of-range assumptions.
class ScenarioError : public std::invalid_argument {
public:
  explicit ScenarioError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace kuga
