#pragma once

#include "kuga/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kuga {

/// One node of the stable model of a hyperelliptic degeneration, recorded by
/// the index of its image on the pointed rational quotient curve and the
/// local multiplicity (xy = t^m).
struct NodeRecord {
  long long index_alpha = 2; // 2 <= alpha <= g+1
  long long multiplicity = 1;
};

/// Node census of a single singular fibre.
///
/// delta[i] counts nodes of type i (0 <= i <= g/2); xi[j] is the
/// branch-index census of the induced admissible double cover and is only
/// meaningful for hyperelliptic families. Absent keys mean zero.
struct FiberData {
  std::map<long long, long long> delta;
  std::map<long long, long long> xi;
  bool compact_jacobian = true;

  long long delta_at(long long i) const {
    auto it = delta.find(i);
    return it == delta.end() ? 0 : it->second;
  }
  long long xi_at(long long j) const {
    auto it = xi.find(j);
    return it == xi.end() ? 0 : it->second;
  }
  /// xi_0 + 2 * sum_{j>=1} xi_j; must equal delta_0 on hyperelliptic fibres.
  long long delta0_from_xi() const;
  /// Total node count of the fibre.
  long long node_count() const;
};

/// Folds one node of index alpha into a fibre census: odd index 2k+1 yields a
/// type-k node; even index 2j+2 yields two type-0 nodes upstairs and one
/// xi_j point downstairs (counted twice for j = 0, which is how xi_0 is
/// normalized). Throws std::domain_error when alpha is outside [2, g+1].
void classify_node(const NodeRecord &node, long long g, FiberData &fiber);

/// Complete discrete record of one semi-stable family.
struct FamilyInvariants {
  long long g = 2;                // fibre genus, >= 2
  long long b = 0;                // base genus
  std::optional<long long> q_f;   // relative irregularity, if known
  bool hyperelliptic = false;
  std::vector<FiberData> fibers;  // singular fibres only
};

/// Census totals over all singular fibres, split by Jacobian compactness.
struct Totals {
  std::vector<long long> delta;   // delta[i], i = 0..g/2, all fibres
  std::vector<long long> delta_c; // same, compact-Jacobian fibres only
  std::vector<long long> xi;      // xi[j], j = 0..(g-1)/2; empty for non-hyperelliptic
  long long s_nc = 0;             // number of fibres with non-compact Jacobian
  long long delta_f = 0;          // total node count

  long long delta_h() const;      // sum of delta[i] for i >= 2
  long long delta_h_c() const;
  long long xi_tail() const;      // sum of xi[j] for j >= 1
};

/// Validates every per-fibre invariant (index ranges, nonnegativity,
/// compact Jacobian <=> no type-0 nodes, the xi/delta_0 identity on
/// hyperelliptic fibres, xi data forbidden otherwise) and accumulates the
/// totals. Throws SchemaError naming the offending fibre.
Totals totals(const FamilyInvariants &fam);

/// The three relative invariants tied together by Noether's formula
/// 12*lambda = omega_sq + delta_f, plus the log-canonical degree of the base.
struct DerivedInvariants {
  Rational delta_f;
  Rational lambda;          // deg f_* Omega^1_{S/B}(log Upsilon)
  Rational omega_sq;        // omega_{S/B}^2
  Rational log_canon_base;  // deg Omega^1_B(log Delta_nc) = 2b - 2 + s_nc
};

/// Solves Noether's formula for the missing quantity. Exactly two of the
/// three arguments must be set; a negative completion is rejected since all
/// three invariants are nonnegative.
DerivedInvariants noether_complete(std::optional<Rational> lambda,
                                   std::optional<Rational> omega_sq,
                                   std::optional<Rational> delta_f);

} // namespace kuga
