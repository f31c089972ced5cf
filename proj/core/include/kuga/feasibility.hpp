#pragma once

#include "kuga/linear_expr.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kuga {

/// Constraint relation against zero: expr >= 0, expr > 0 or expr = 0.
enum class Relation { GreaterEq, Greater, Equal };

struct Constraint {
  std::string name;
  LinearExpr expr;
  Relation rel = Relation::GreaterEq;

  bool satisfied_by(const Assignment &assignment) const;
  std::string str() const;
};

/// A finite system of exact linear constraints over declared variables.
/// Every invariant variable carries an explicit nonnegativity row, so the
/// constraint list alone fully describes the admissible region.
class LinearSystem {
public:
  const std::vector<std::string> &variables() const { return variables_; }
  const std::vector<Constraint> &constraints() const { return constraints_; }

  /// Declares a variable together with its "nonneg(v)" row.
  void declare_nonneg(const std::string &name);
  /// Declares a variable with no implied sign.
  void declare_free(const std::string &name);

  bool declared(const std::string &name) const;

  /// Adds a constraint; every variable it mentions must be declared.
  void add(std::string name, LinearExpr expr, Relation rel);

  /// Index of the first constraint an assignment violates, if any.
  std::optional<std::size_t> violated_by(const Assignment &assignment) const;

  const Constraint *find(const std::string &name) const;

private:
  std::vector<std::string> variables_;
  std::vector<Constraint> constraints_;
};

enum class Verdict { Feasible, Infeasible };

/// One term of an infeasibility proof: a nonnegative multiplier applied to a
/// constraint (to its negated side for equality rows), such that the whole
/// combination has no variables left and a contradictory sign.
struct RefutationTerm {
  std::size_t constraint = 0;
  std::string constraint_name;
  bool negated = false; // meaningful only for Relation::Equal rows
  Rational multiplier;  // > 0
};

/// Either a rational point satisfying every constraint, or a nonnegative
/// combination of constraints equal to a negative constant (or to zero with
/// a strict row involved), i.e. a proof that no point exists.
struct Certificate {
  Verdict verdict = Verdict::Feasible;
  Assignment witness;
  std::vector<RefutationTerm> refutation;
  Rational refutation_constant;
  bool refutation_strict = false;

  std::string digest() const; // one-line deterministic summary
};

/// Decides the system exactly by Fourier-Motzkin elimination, carrying
/// strictness through every derived row. The returned certificate is
/// re-verified by substitution before being returned.
Certificate fourier_motzkin(const LinearSystem &sys);

/// Recomputes a certificate from scratch against the system: a witness must
/// satisfy every constraint; a refutation must recombine, with nonnegative
/// multipliers, to a variable-free contradiction.
bool certificate_valid(const LinearSystem &sys, const Certificate &cert);

// ---------------------------------------------------------------------------
// Scenario assembly: the constraint systems satisfied by any non-isotrivial
// Kuga family with the given discrete shape. An infeasible system proves no
// such family exists; a feasible one only means the inequalities alone do
// not obstruct it.
// ---------------------------------------------------------------------------

enum class FamilyKind { GeneralStrictlyMaximal, HyperellipticKuga };

enum class DeltaNcState {
  NonEmpty,       // some singular fibre has non-compact Jacobian
  Empty,          // all singular fibres have compact Jacobians (and exist)
  EmptyNoSingular // no singular fibres at all (general families only)
};

/// Albanese-degree regime used for hyperelliptic scenarios with q_f >= 3,
/// where the two possible degrees carry different proven facts.
enum class AlbaneseRegime { Unrestricted, DegreeTwo, DegreeAtLeastThree };

struct Scenario {
  long long g = 2;
  long long q_f = 0;
  FamilyKind kind = FamilyKind::GeneralStrictlyMaximal;
  DeltaNcState nc = DeltaNcState::NonEmpty;
  AlbaneseRegime regime = AlbaneseRegime::Unrestricted;

  /// Throws ScenarioError when the assumption set is contradictory or
  /// out of the proven range (q_f > g/2, q_f >= 2 with Delta_nc nonempty,
  /// degree->=3 regime with 3*q_f > g+1, ...).
  void validate() const;

  std::string label() const;
};

/// Assembles the scenario's constraint system: Arakelov equality, the
/// applicable lower and upper bounds for omega^2 with the right strictness,
/// the compact-part bounds, the census positivity encoding non-isotriviality
/// and, for hyperelliptic families, the degree formula and fibred-cover
/// constraints.
LinearSystem build_system(const Scenario &s);

/// build_system + fourier_motzkin, with certificate verification.
Certificate decide(const Scenario &s);

// ---------------------------------------------------------------------------
// Genus scan.
// ---------------------------------------------------------------------------

enum class NcRegime { NonEmptyOnly, EmptyOnly, All };

struct ScanPart {
  Scenario scenario;
  Certificate certificate;
};

/// One (g, q_f, regime) table cell; feasible iff any admissible sub-scenario
/// (Albanese regime, singular-fibre branch) is feasible.
struct ScanCell {
  long long g = 2;
  long long q_f = 0;
  DeltaNcState nc = DeltaNcState::NonEmpty;
  Verdict verdict = Verdict::Feasible;
  std::vector<ScanPart> parts;

  std::string regime_name() const;
  std::string digest() const;
};

struct ScanResult {
  FamilyKind kind = FamilyKind::GeneralStrictlyMaximal;
  std::vector<ScanCell> cells; // ordered by (g, regime, q_f)

  std::optional<long long> max_feasible_g() const;
  /// Largest feasible g within one (regime, q_f) column.
  std::optional<long long> max_feasible_g(DeltaNcState nc, long long q_f) const;
};

/// Decides every admissible (g, q_f, regime) cell for g in [g_min, g_max].
/// Hyperelliptic scans iterate q_f over the proven range per regime
/// (q_f <= 1 when Delta_nc is nonempty, q_f <= g/2 otherwise, with the
/// Albanese-degree split above q_f >= 3); general scans pin q_f = 0.
ScanResult genus_scan(FamilyKind kind, long long g_min, long long g_max, NcRegime regime);

const char *to_string(Verdict v);
const char *to_string(DeltaNcState s);

} // namespace kuga
