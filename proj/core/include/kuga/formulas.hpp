#pragma once

#include "kuga/rational.hpp"

#include <utility>
#include <vector>

namespace kuga {

/// Outcome of one inequality check, with the signed margin so that sharpness
/// (slack exactly zero) is visible in reports.
struct InequalityVerdict {
  Rational lhs;
  Rational rhs;
  bool strict_required = false;
  bool holds = false;
  Rational slack; // lhs - rhs, nonnegative (positive if strict) when the check holds

  static InequalityVerdict of(Rational lhs, Rational rhs, bool strict_required);
};

// ---------------------------------------------------------------------------
// Cornalba-Harris formulas for hyperelliptic fibrations.
//
// The node census (xi_0; delta_i; xi_j) determines the Hodge degree
// deg f_* Omega^1_{S/B}(log Upsilon) and, through Noether's formula,
// omega_{S/B}^2. Coefficient accessors are exposed separately so the
// feasibility engine can assemble symbolic constraints from the same source.
// ---------------------------------------------------------------------------

Rational ch_degree_coeff_xi0(long long g);                  // g / (4(2g+1))
Rational ch_degree_coeff_delta(long long g, long long i);   // i(g-i) / (2g+1)
Rational ch_degree_coeff_xi(long long g, long long j);      // (j+1)(g-j) / (2(2g+1))

Rational ch_omega_coeff_xi0(long long g);                   // (g-1) / (2g+1)
Rational ch_omega_coeff_delta(long long g, long long i);    // 12i(g-i)/(2g+1) - 1
Rational ch_omega_coeff_xi(long long g, long long j);       // 6(j+1)(g-j)/(2g+1) - 2

/// Hodge-bundle degree of a hyperelliptic fibration from its census.
/// delta[i] indexes node types from 0 (entry 0 is not part of the formula);
/// xi[0] is the doubled index-2 count. Entries must be nonnegative.
Rational ch_degree(long long g, const std::vector<long long> &delta,
                   const std::vector<long long> &xi);

/// omega_{S/B}^2 of a hyperelliptic fibration from its census (the
/// Cornalba-Harris degree combined with Noether's formula).
Rational ch_omega_sq(long long g, const std::vector<long long> &delta,
                     const std::vector<long long> &xi);

// ---------------------------------------------------------------------------
// Slope and degree bounds for arbitrary semi-stable families.
// ---------------------------------------------------------------------------

/// Moriwaki's sharp slope inequality:
///   (8g+4) * lambda >= g*delta_0 + sum_{i>=1} 4i(g-i)*delta_i.
InequalityVerdict moriwaki_slope(long long g, const Rational &lambda,
                                 const std::vector<long long> &delta);

/// Lower bound for omega^2 of any non-isotrivial semi-stable family:
///   4(g-1)/g * lambda + (3g-4)/g * delta_1 + (7g-16)/g * delta_h.
Rational lower_bound_general(long long g, const Rational &lambda, long long delta_1,
                             long long delta_h);

/// Upper bound for omega^2 from the Miyaoka-type argument:
///   (2g-2) * deg Omega^1_B(log Delta_nc) + 2*delta_1(compact) + 3*delta_h(compact).
/// The bound is strict exactly when Delta_nc is nonempty or there are no
/// singular fibres at all; callers supply that fact.
std::pair<Rational, bool> upper_bound(long long g, const Rational &log_canon_base,
                                      long long delta_1_c, long long delta_h_c, bool strict);

/// Arakelov equality value for the Hodge degree of a Kuga family:
///   (g - q_f)/2 * deg Omega^1_B(log Delta_nc).
/// q_f = 0 is the strictly maximal Higgs field case.
Rational arakelov_degree(long long g, long long q_f, const Rational &log_canon_base);

// ---------------------------------------------------------------------------
// Hyperelliptic lower bound with positive relative irregularity, and the
// per-index coefficients behind it.
// ---------------------------------------------------------------------------

/// Per-index coefficients of the intermediate bound
///   omega^2 - 4(g-1)/(g-q_f)*lambda >=
///     sum_{i<q_f} a_i*delta_i + sum_{i>=q_f} b_i*delta_i
///   + sum_{j<q_f} c_j*xi_j   + sum_{j>=q_f} d_j*xi_j.
/// At q_f = 0 only b and d apply and they reduce to the exact
/// Cornalba-Harris identity coefficients.
Rational coeff_a(long long g, long long q_f, long long i);
Rational coeff_b(long long g, long long q_f, long long i);
Rational coeff_c(long long g, long long q_f, long long j);
Rational coeff_d(long long g, long long q_f, long long j);

/// Coefficient of delta_i in the exact identity for
/// omega^2 - 4(g-1)/(g-q_f)*lambda once every xi invariant vanishes
/// (all singular fibres with compact Jacobians):
///   4(2g+1-3q_f)i(g-i) / ((2g+1)(g-q_f)) - 1.
Rational lower_compact_delta_coeff(long long g, long long q_f, long long i);

/// Lower bound for omega^2 of a hyperelliptic family with relative
/// irregularity q_f (the theorem's grouped form). Requires 0 <= q_f < g.
/// With Delta_nc nonempty the bound groups delta_1 and delta_h; with
/// Delta_nc empty it keeps one coefficient per node type.
Rational lower_bound_hyperelliptic(long long g, long long q_f, const Rational &lambda,
                                   const std::vector<long long> &delta, bool delta_nc_empty);

/// Fibred-cover constraint for q_f >= 1: low-index census entries are
/// dominated by high-index ones,
///   sum_{i>=q_f} (2i+1)(2g+1-2i)/(g+1)*delta_i
///     + sum_{j>=q_f} 2(j+1)(g-j)/(g+1)*xi_j
///   >= xi_0 + sum_{i<q_f} 4i(2i+1)*delta_i + sum_{j<q_f} 2(j+1)(2j+1)*xi_j.
InequalityVerdict xi_constraint(long long g, long long q_f,
                                const std::vector<long long> &delta,
                                const std::vector<long long> &xi);

/// The same constraint specialized to families whose singular fibres all
/// have compact Jacobians (xi vanishes); requires q_f >= 2.
InequalityVerdict sigma0_constraint(long long g, long long q_f,
                                    const std::vector<long long> &delta);

/// Upper bound (g-1)/d + 1 on q_f in terms of the Albanese degree d >= 2.
/// Equality forces isotriviality (Xiao), so non-isotrivial families satisfy
/// the strict version.
Rational qf_bound(long long g, long long d);

/// Whether q_f is admissible for Albanese degree d on a non-isotrivial
/// family: q_f < (g-1)/d + 1 when xiao_strict, q_f <= (g-1)/d + 1 otherwise.
bool qf_admissible(long long g, long long d, long long q_f, bool xiao_strict);

/// The polynomial 4*q(13g - 21q + 8) - 50g - 51 controlling the sign
/// analysis in the high-irregularity regime.
Rational f_gq(const Rational &g, const Rational &q_f);

} // namespace kuga
