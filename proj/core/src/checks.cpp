#include "kuga/checks.hpp"

#include "kuga/family_json.hpp"

#include <sstream>

namespace kuga {

namespace {

CheckLine make_line(std::string id, std::string title, Rational lhs, Rational rhs,
                    CheckLine::Kind kind) {
  CheckLine line;
  line.id = std::move(id);
  line.title = std::move(title);
  line.slack = lhs - rhs;
  line.lhs = std::move(lhs);
  line.rhs = std::move(rhs);
  line.kind = kind;
  switch (kind) {
  case CheckLine::Kind::Equality:
    line.holds = line.slack.is_zero();
    break;
  case CheckLine::Kind::GreaterEq:
    line.holds = line.slack.sign() >= 0;
    break;
  case CheckLine::Kind::Greater:
    line.holds = line.slack.sign() > 0;
    break;
  }
  return line;
}

CheckLine from_verdict(std::string id, std::string title, const InequalityVerdict &v) {
  return make_line(std::move(id), std::move(title), v.lhs, v.rhs,
                   v.strict_required ? CheckLine::Kind::Greater : CheckLine::Kind::GreaterEq);
}

} // namespace

std::string CheckLine::relation_symbol() const {
  switch (kind) {
  case Kind::Equality:
    return "=";
  case Kind::GreaterEq:
    return ">=";
  case Kind::Greater:
    return ">";
  }
  return "?";
}

Report check_family(const FamilyInvariants &fam) {
  Report rep;
  rep.family = fam;
  rep.census = totals(fam);

  const long long g = fam.g;
  const Totals &t = rep.census;
  const Rational log_deg = Rational(2 * fam.b - 2 + t.s_nc);
  const Rational delta_f{t.delta_f};

  // Relative invariants: the census pins them down for hyperelliptic
  // families; otherwise they come from the degree equality at the given
  // (or assumed strictly maximal) q_f.
  Rational lambda, omega_sq;
  long long q_used = fam.q_f.value_or(0);
  bool q_known = fam.q_f.has_value();

  if (fam.hyperelliptic) {
    lambda = ch_degree(g, t.delta, t.xi);
    omega_sq = ch_omega_sq(g, t.delta, t.xi);

    if (!q_known) {
      if (log_deg.sign() > 0) {
        const Rational q_exact = Rational(g) - Rational(2) * lambda / log_deg;
        const Rational q_floor{q_exact.floor()};
        rep.checks.push_back(make_line(
            "arakelov-rank", "degree equality solves to an integral q_f in [0, g]", q_exact,
            q_floor, CheckLine::Kind::Equality));
        if (q_exact == q_floor && q_exact.sign() >= 0 && q_exact <= Rational(g)) {
          q_used = static_cast<long long>(q_exact.floor());
          q_known = true;
          rep.q_f_inferred = true;
          rep.notes.push_back("q_f = " + std::to_string(q_used) +
                              " inferred from the degree equality");
        }
      } else if (lambda.is_zero()) {
        rep.notes.push_back("isotrivial data (lambda = 0): q_f left undetermined");
      } else {
        rep.checks.push_back(make_line("arakelov-rank",
                                       "positive Hodge degree needs positive log-degree", log_deg,
                                       Rational(0), CheckLine::Kind::Greater));
      }
    } else {
      rep.checks.push_back(make_line("arakelov",
                                     "Hodge degree equals (g - q_f)/2 * log-degree", lambda,
                                     arakelov_degree(g, q_used, log_deg),
                                     CheckLine::Kind::Equality));
    }
  } else {
    if (!q_known)
      rep.notes.push_back("q_f missing for a non-hyperelliptic family: "
                          "assuming a strictly maximal Higgs field (q_f = 0)");
    lambda = arakelov_degree(g, q_used, log_deg);
    omega_sq = Rational(12) * lambda - delta_f;
    rep.notes.push_back("lambda taken from the degree equality at q_f = " +
                        std::to_string(q_used));
    q_known = true;
  }

  rep.q_f = q_known ? std::optional<long long>(q_used) : std::nullopt;
  rep.derived = DerivedInvariants{delta_f, lambda, omega_sq, log_deg};

  rep.checks.push_back(make_line("noether", "12*lambda = omega2 + delta_f",
                                 Rational(12) * lambda, omega_sq + delta_f,
                                 CheckLine::Kind::Equality));
  rep.checks.push_back(make_line("hodge-degree-nonneg", "lambda >= 0", lambda, Rational(0),
                                 CheckLine::Kind::GreaterEq));
  rep.checks.push_back(make_line("omega2-nonneg", "omega2 >= 0", omega_sq, Rational(0),
                                 CheckLine::Kind::GreaterEq));

  // The slope and log-canonical bounds are theorems about non-isotrivial
  // families; lambda = 0 data gets only the structural checks above.
  const bool non_isotrivial = lambda.sign() > 0;
  if (!non_isotrivial)
    rep.notes.push_back("isotrivial data (lambda = 0): slope and log-canonical bounds "
                        "not applicable");

  if (q_known && non_isotrivial)
    rep.checks.push_back(make_line("xiao-bound",
                                   "2*q_f <= g for a non-isotrivial family", Rational(g),
                                   Rational(2 * q_used), CheckLine::Kind::GreaterEq));

  if (non_isotrivial)
    rep.checks.push_back(
        from_verdict("moriwaki-slope", "(8g+4)*lambda covers the weighted node census",
                     moriwaki_slope(g, lambda, t.delta)));

  if (non_isotrivial) {
    long long delta_h = 0;
    for (std::size_t i = 2; i < t.delta.size(); ++i)
      delta_h += t.delta[i];
    rep.checks.push_back(make_line("lower-general",
                                   "omega2 >= slope lower bound (any semi-stable family)",
                                   omega_sq,
                                   lower_bound_general(g, lambda, t.delta.size() > 1 ? t.delta[1] : 0,
                                                       delta_h),
                                   CheckLine::Kind::GreaterEq));
  }

  if (non_isotrivial && fam.hyperelliptic && q_known && q_used < g)
    rep.checks.push_back(make_line(
        "lower-hyperelliptic", "omega2 >= hyperelliptic lower bound at q_f", omega_sq,
        lower_bound_hyperelliptic(g, q_used, lambda, t.delta, t.s_nc == 0),
        CheckLine::Kind::GreaterEq));

  if (non_isotrivial) {
    const bool strict = t.s_nc > 0 || fam.fibers.empty();
    const auto [bound, is_strict] =
        upper_bound(g, log_deg, t.delta_c.size() > 1 ? t.delta_c[1] : 0, t.delta_h_c(), strict);
    CheckLine line = make_line("upper-bound", "omega2 <= log-canonical upper bound", bound,
                               omega_sq,
                               is_strict ? CheckLine::Kind::Greater : CheckLine::Kind::GreaterEq);
    if (line.sharp())
      rep.notes.push_back("upper bound attained exactly: equality case (all Jacobians "
                          "compact, singular fibres present)");
    rep.checks.push_back(std::move(line));
  }

  if (non_isotrivial && fam.hyperelliptic && q_known && q_used >= 1)
    rep.checks.push_back(from_verdict("fibred-cover",
                                      "high-index census dominates low-index census",
                                      xi_constraint(g, q_used, t.delta, t.xi)));
  if (non_isotrivial && fam.hyperelliptic && q_known && q_used >= 2 && t.s_nc == 0)
    rep.checks.push_back(from_verdict("compact-balance",
                                      "compact-Jacobian census balance at q_f >= 2",
                                      sigma0_constraint(g, q_used, t.delta)));

  rep.consistent = true;
  for (const CheckLine &line : rep.checks)
    rep.consistent = rep.consistent && line.holds;
  return rep;
}

std::string Report::render_text() const {
  std::ostringstream out;
  out << "family: genus=" << family.g << " base_genus=" << family.b
      << " hyperelliptic=" << (family.hyperelliptic ? "yes" : "no")
      << " fibres=" << family.fibers.size() << " noncompact=" << census.s_nc << "\n";

  out << "census:";
  for (std::size_t i = 0; i < census.delta.size(); ++i)
    if (census.delta[i] != 0)
      out << " delta[" << i << "]=" << census.delta[i];
  for (std::size_t i = 0; i < census.delta_c.size(); ++i)
    if (census.delta_c[i] != 0)
      out << " delta_c[" << i << "]=" << census.delta_c[i];
  for (std::size_t j = 0; j < census.xi.size(); ++j)
    if (census.xi[j] != 0)
      out << " xi[" << j << "]=" << census.xi[j];
  if (census.delta_f == 0)
    out << " (smooth)";
  out << "\n";

  out << "derived: delta_f=" << derived.delta_f.str() << " lambda=" << derived.lambda.str()
      << " omega2=" << derived.omega_sq.str() << " log-degree=" << derived.log_canon_base.str();
  if (q_f)
    out << " q_f=" << *q_f << (q_f_inferred ? " (inferred)" : "");
  out << "\n";

  for (const std::string &note : notes)
    out << "note: " << note << "\n";

  for (const CheckLine &line : checks) {
    out << "check " << line.id << ": " << (line.holds ? "PASS" : "FAIL") << " " << line.lhs.str()
        << " " << line.relation_symbol() << " " << line.rhs.str() << " (slack "
        << line.slack.str() << ")";
    if (line.sharp())
      out << " [sharp]";
    out << "\n";
  }

  out << "status: " << (consistent ? "consistent" : "violated") << "\n";
  if (!consistent) {
    out << "violated:";
    for (const CheckLine &line : checks)
      if (!line.holds)
        out << " " << line.id;
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json Report::render_json() const {
  nlohmann::ordered_json doc;
  doc["family"] = family_to_json(family);

  nlohmann::ordered_json census_doc;
  auto census_map = [](const std::vector<long long> &v) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0)
        obj[std::to_string(i)] = v[i];
    return obj;
  };
  census_doc["delta"] = census_map(census.delta);
  census_doc["delta_compact"] = census_map(census.delta_c);
  census_doc["xi"] = census_map(census.xi);
  census_doc["s_nc"] = census.s_nc;
  census_doc["delta_f"] = census.delta_f;
  doc["census"] = std::move(census_doc);

  nlohmann::ordered_json derived_doc;
  derived_doc["delta_f"] = derived.delta_f.str();
  derived_doc["lambda"] = derived.lambda.str();
  derived_doc["omega2"] = derived.omega_sq.str();
  derived_doc["log_canon_base"] = derived.log_canon_base.str();
  doc["derived"] = std::move(derived_doc);

  if (q_f) {
    doc["q_f"] = nlohmann::ordered_json{{"value", *q_f}, {"inferred", q_f_inferred}};
  } else {
    doc["q_f"] = nullptr;
  }

  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckLine &line : checks) {
    nlohmann::ordered_json c;
    c["id"] = line.id;
    c["title"] = line.title;
    c["lhs"] = line.lhs.str();
    c["relation"] = line.relation_symbol();
    c["rhs"] = line.rhs.str();
    c["holds"] = line.holds;
    c["slack"] = line.slack.str();
    c["sharp"] = line.sharp();
    doc["checks"].push_back(std::move(c));
  }

  doc["notes"] = notes;
  doc["status"] = consistent ? "consistent" : "violated";
  return doc;
}

} // namespace kuga
