#include "kuga/errors.hpp"
#include "kuga/feasibility.hpp"
#include "kuga/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace kuga {

namespace {

const char *kOmega = "omega2";
const char *kLambda = "lambda";
const char *kLogDeg = "logdeg"; // deg Omega^1_B(log Delta_nc), relaxed to a nonnegative rational

std::string var_delta(long long i) { return "delta[" + std::to_string(i) + "]"; }
std::string var_delta_c(long long i) { return "delta_c[" + std::to_string(i) + "]"; }
std::string var_xi(long long j) { return "xi[" + std::to_string(j) + "]"; }

LinearExpr var(const std::string &name) { return LinearExpr::variable(name); }

} // namespace

void Scenario::validate() const {
  if (g < 2)
    throw ScenarioError("scenario: genus must be >= 2");
  if (kind == FamilyKind::GeneralStrictlyMaximal) {
    if (q_f != 0)
      throw ScenarioError("scenario: a strictly maximal Higgs field forces q_f = 0");
    if (regime != AlbaneseRegime::Unrestricted)
      throw ScenarioError("scenario: Albanese regimes apply to hyperelliptic scenarios only");
    return;
  }
  if (q_f < 0)
    throw ScenarioError("scenario: q_f must be nonnegative");
  if (2 * q_f > g)
    throw ScenarioError("scenario: q_f <= g/2 for a non-isotrivial family");
  if (nc == DeltaNcState::NonEmpty && q_f > 1)
    throw ScenarioError("scenario: q_f <= 1 when some fibre has non-compact Jacobian");
  if (nc == DeltaNcState::EmptyNoSingular)
    throw ScenarioError("scenario: a non-isotrivial hyperelliptic family has singular fibres");
  if (regime != AlbaneseRegime::Unrestricted) {
    if (nc != DeltaNcState::Empty || q_f < 3)
      throw ScenarioError("scenario: Albanese regimes are split only for q_f >= 3 "
                          "with all Jacobians compact");
    if (regime == AlbaneseRegime::DegreeAtLeastThree && 3 * q_f > g + 1)
      throw ScenarioError("scenario: q_f exceeds the bound (g-1)/d + 1 for degree >= 3");
  }
}

std::string Scenario::label() const {
  std::string out = kind == FamilyKind::GeneralStrictlyMaximal ? "general" : "hyperelliptic";
  out += " g=" + std::to_string(g);
  out += " q_f=" + std::to_string(q_f);
  out += " ";
  out += to_string(nc);
  if (regime == AlbaneseRegime::DegreeTwo)
    out += " alb-deg=2";
  else if (regime == AlbaneseRegime::DegreeAtLeastThree)
    out += " alb-deg>=3";
  return out;
}

LinearSystem build_system(const Scenario &s) {
  s.validate();
  const long long g = s.g, q = s.q_f;
  const long long imax = g / 2;
  const long long jmax = (g - 1) / 2;
  // xi invariants vanish as soon as every singular fibre has a compact
  // Jacobian, so those columns exist only in the nc-nonempty systems.
  const bool with_xi = s.kind == FamilyKind::HyperellipticKuga && s.nc == DeltaNcState::NonEmpty;

  LinearSystem sys;
  sys.declare_nonneg(kOmega);
  sys.declare_nonneg(kLambda);
  sys.declare_nonneg(kLogDeg);
  for (long long i = 1; i <= imax; ++i) {
    sys.declare_nonneg(var_delta(i));
    sys.declare_nonneg(var_delta_c(i));
  }
  if (with_xi)
    for (long long j = 0; j <= jmax; ++j)
      sys.declare_nonneg(var_xi(j));

  {
    LinearExpr ara = var(kLambda);
    ara -= Rational(g - q, 2) * var(kLogDeg);
    sys.add("arakelov", std::move(ara), Relation::Equal);
  }

  for (long long i = 1; i <= imax; ++i) {
    LinearExpr pair = var(var_delta(i));
    pair -= var(var_delta_c(i));
    sys.add("compact-part(" + std::to_string(i) + ")", std::move(pair), Relation::GreaterEq);
  }

  {
    LinearExpr up = Rational(2 * g - 2) * var(kLogDeg);
    up += Rational(2) * var(var_delta_c(1));
    for (long long i = 2; i <= imax; ++i)
      up += Rational(3) * var(var_delta_c(i));
    up -= var(kOmega);
    const bool strict = s.nc != DeltaNcState::Empty;
    sys.add("upper-bound", std::move(up), strict ? Relation::Greater : Relation::GreaterEq);
  }

  if (s.nc != DeltaNcState::NonEmpty)
    sys.add("log-degree-min", var(kLogDeg) - LinearExpr(Rational(2)), Relation::GreaterEq);

  if (s.kind == FamilyKind::GeneralStrictlyMaximal) {
    LinearExpr low = var(kOmega);
    low -= Rational(4 * (g - 1), g) * var(kLambda);
    low -= Rational(3 * g - 4, g) * var(var_delta(1));
    for (long long i = 2; i <= imax; ++i)
      low -= Rational(7 * g - 16, g) * var(var_delta(i));
    sys.add("lower-bound", std::move(low), Relation::GreaterEq);

    if (s.nc == DeltaNcState::Empty) {
      LinearExpr pos;
      for (long long i = 1; i <= imax; ++i)
        pos += var(var_delta(i));
      sys.add("singular-fibres", std::move(pos), Relation::Greater);
    } else if (s.nc == DeltaNcState::EmptyNoSingular) {
      for (long long i = 1; i <= imax; ++i)
        sys.add("smooth-family(" + std::to_string(i) + ")", var(var_delta(i)), Relation::Equal);
    }
    return sys;
  }

  // Hyperelliptic: the census determines the Hodge degree exactly.
  {
    LinearExpr ch = var(kLambda);
    for (long long i = 1; i <= imax; ++i)
      ch -= ch_degree_coeff_delta(g, i) * var(var_delta(i));
    if (with_xi) {
      ch -= ch_degree_coeff_xi0(g) * var(var_xi(0));
      for (long long j = 1; j <= jmax; ++j)
        ch -= ch_degree_coeff_xi(g, j) * var(var_xi(j));
    }
    sys.add("ch-degree", std::move(ch), Relation::Equal);
  }
  sys.add("non-isotrivial", var(kLambda), Relation::Greater);

  {
    // With non-compact fibres around, the xi census is live and the bound
    // carries the fibred-cover weights; once every Jacobian is compact the
    // xi-free identity gives the stronger per-index coefficients.
    LinearExpr low = var(kOmega);
    low -= Rational(4 * (g - 1), g - q) * var(kLambda);
    for (long long i = 1; i <= imax; ++i) {
      const Rational coeff = with_xi ? (i < q ? coeff_a(g, q, i) : coeff_b(g, q, i))
                                     : lower_compact_delta_coeff(g, q, i);
      low -= coeff * var(var_delta(i));
    }
    if (with_xi)
      for (long long j = 1; j <= jmax; ++j)
        low -= (j < q ? coeff_c(g, q, j) : coeff_d(g, q, j)) * var(var_xi(j));
    sys.add("lower-bound", std::move(low), Relation::GreaterEq);
  }

  if (q >= 1) {
    LinearExpr fc;
    for (long long i = 1; i <= imax; ++i) {
      if (i >= q)
        fc += Rational((2 * i + 1) * (2 * g + 1 - 2 * i), g + 1) * var(var_delta(i));
      else
        fc -= Rational(4 * i * (2 * i + 1)) * var(var_delta(i));
    }
    if (with_xi) {
      fc -= var(var_xi(0));
      for (long long j = 1; j <= jmax; ++j) {
        if (j >= q)
          fc += Rational(2 * (j + 1) * (g - j), g + 1) * var(var_xi(j));
        else
          fc -= Rational(2 * (j + 1) * (2 * j + 1)) * var(var_xi(j));
      }
    }
    sys.add("fibred-cover", std::move(fc), Relation::GreaterEq);
  }

  if (s.regime == AlbaneseRegime::DegreeTwo)
    for (long long i = 1; i < q; ++i)
      sys.add("albanese-deg2(" + std::to_string(i) + ")", var(var_delta(i)), Relation::Equal);

  return sys;
}

Certificate decide(const Scenario &s) { return fourier_motzkin(build_system(s)); }

std::string ScanCell::regime_name() const { return to_string(nc); }

namespace {

std::string part_tag(const ScanCell &cell, const Scenario &s) {
  if (s.regime == AlbaneseRegime::DegreeTwo)
    return "alb2:";
  if (s.regime == AlbaneseRegime::DegreeAtLeastThree)
    return "alb3:";
  if (cell.parts.size() > 1 && s.kind == FamilyKind::GeneralStrictlyMaximal)
    return s.nc == DeltaNcState::EmptyNoSingular ? "smooth:" : "nodal:";
  return "";
}

} // namespace

std::string ScanCell::digest() const {
  std::string out;
  for (const ScanPart &part : parts) {
    if (!out.empty())
      out += " | ";
    out += part_tag(*this, part.scenario) + part.certificate.digest();
  }
  return out;
}

std::optional<long long> ScanResult::max_feasible_g() const {
  std::optional<long long> best;
  for (const ScanCell &cell : cells)
    if (cell.verdict == Verdict::Feasible && (!best || cell.g > *best))
      best = cell.g;
  return best;
}

std::optional<long long> ScanResult::max_feasible_g(DeltaNcState nc, long long q_f) const {
  std::optional<long long> best;
  for (const ScanCell &cell : cells)
    if (cell.nc == nc && cell.q_f == q_f && cell.verdict == Verdict::Feasible &&
        (!best || cell.g > *best))
      best = cell.g;
  return best;
}

namespace {

ScanCell decide_cell(FamilyKind kind, long long g, long long q_f, DeltaNcState nc) {
  ScanCell cell;
  cell.g = g;
  cell.q_f = q_f;
  cell.nc = nc;

  std::vector<Scenario> scenarios;
  if (kind == FamilyKind::GeneralStrictlyMaximal) {
    scenarios.push_back({g, 0, kind, nc, AlbaneseRegime::Unrestricted});
    if (nc == DeltaNcState::Empty)
      scenarios.push_back({g, 0, kind, DeltaNcState::EmptyNoSingular, AlbaneseRegime::Unrestricted});
  } else if (nc == DeltaNcState::NonEmpty || q_f <= 2) {
    scenarios.push_back({g, q_f, kind, nc, AlbaneseRegime::Unrestricted});
  } else {
    scenarios.push_back({g, q_f, kind, nc, AlbaneseRegime::DegreeTwo});
    if (3 * q_f <= g + 1)
      scenarios.push_back({g, q_f, kind, nc, AlbaneseRegime::DegreeAtLeastThree});
  }

  cell.verdict = Verdict::Infeasible;
  for (const Scenario &s : scenarios) {
    Certificate cert = decide(s);
    if (cert.verdict == Verdict::Feasible)
      cell.verdict = Verdict::Feasible;
    cell.parts.push_back(ScanPart{s, std::move(cert)});
  }
  return cell;
}

} // namespace

ScanResult genus_scan(FamilyKind kind, long long g_min, long long g_max, NcRegime regime) {
  if (g_max < 2 || g_min > g_max)
    throw ScenarioError("genus_scan: empty genus range");
  ScanResult res;
  res.kind = kind;
  for (long long g = std::max<long long>(2, g_min); g <= g_max; ++g) {
    if (regime != NcRegime::EmptyOnly) {
      if (kind == FamilyKind::GeneralStrictlyMaximal) {
        res.cells.push_back(decide_cell(kind, g, 0, DeltaNcState::NonEmpty));
      } else {
        for (long long q_f = 0; q_f <= std::min<long long>(1, g / 2); ++q_f)
          res.cells.push_back(decide_cell(kind, g, q_f, DeltaNcState::NonEmpty));
      }
    }
    if (regime != NcRegime::NonEmptyOnly) {
      if (kind == FamilyKind::GeneralStrictlyMaximal) {
        res.cells.push_back(decide_cell(kind, g, 0, DeltaNcState::Empty));
      } else {
        for (long long q_f = 0; 2 * q_f <= g; ++q_f)
          res.cells.push_back(decide_cell(kind, g, q_f, DeltaNcState::Empty));
      }
    }
  }
  return res;
}

} // namespace kuga
