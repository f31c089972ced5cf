#pragma once

#include "kuga/formulas.hpp"
#include "kuga/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kuga {

/// One validated identity or bound, with its exact margin.
struct CheckLine {
  enum class Kind { Equality, GreaterEq, Greater };

  std::string id;    // stable machine name
  std::string title; // what is being checked
  Rational lhs;
  Rational rhs;
  Kind kind = Kind::Equality;
  bool holds = false;
  Rational slack; // lhs - rhs

  /// A non-strict bound attained exactly.
  bool sharp() const { return holds && kind == Kind::GreaterEq && slack.is_zero(); }
  std::string relation_symbol() const;
};

/// Full validation record for one family document.
struct Report {
  FamilyInvariants family;
  Totals census;
  DerivedInvariants derived;
  std::optional<long long> q_f;
  bool q_f_inferred = false;
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;
  bool consistent = false;

  std::string render_text() const;
  nlohmann::ordered_json render_json() const;
};

/// Validates the census, derives the relative invariants (census formulas
/// for hyperelliptic families, the degree equality otherwise), resolves or
/// infers q_f, and runs every check applicable to the family's kind.
/// Structural problems throw SchemaError; mathematical violations come back
/// as failing check lines with consistent = false.
Report check_family(const FamilyInvariants &fam);

} // namespace kuga
