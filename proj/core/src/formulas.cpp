#include "kuga/formulas.hpp"

#include <stdexcept>
#include <string>

namespace kuga {

namespace {

void check_census(long long g, const std::vector<long long> &delta,
                  const std::vector<long long> &xi, const char *who) {
  if (g < 2)
    throw std::domain_error(std::string(who) + ": genus must be >= 2");
  if (static_cast<long long>(delta.size()) > g / 2 + 1)
    throw std::domain_error(std::string(who) + ": delta census longer than g/2 allows");
  if (static_cast<long long>(xi.size()) > (g - 1) / 2 + 1)
    throw std::domain_error(std::string(who) + ": xi census longer than (g-1)/2 allows");
  for (long long v : delta)
    if (v < 0)
      throw std::domain_error(std::string(who) + ": negative delta entry");
  for (long long v : xi)
    if (v < 0)
      throw std::domain_error(std::string(who) + ": negative xi entry");
}

long long at(const std::vector<long long> &v, std::size_t i) {
  return i < v.size() ? v[i] : 0;
}

} // namespace

InequalityVerdict InequalityVerdict::of(Rational lhs, Rational rhs, bool strict_required) {
  InequalityVerdict v;
  v.slack = lhs - rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.strict_required = strict_required;
  v.holds = strict_required ? v.slack.sign() > 0 : v.slack.sign() >= 0;
  return v;
}

Rational ch_degree_coeff_xi0(long long g) { return Rational(g, 4 * (2 * g + 1)); }

Rational ch_degree_coeff_delta(long long g, long long i) {
  return Rational(i * (g - i), 2 * g + 1);
}

Rational ch_degree_coeff_xi(long long g, long long j) {
  return Rational((j + 1) * (g - j), 2 * (2 * g + 1));
}

Rational ch_omega_coeff_xi0(long long g) { return Rational(g - 1, 2 * g + 1); }

Rational ch_omega_coeff_delta(long long g, long long i) {
  return Rational(12 * i * (g - i), 2 * g + 1) - Rational(1);
}

Rational ch_omega_coeff_xi(long long g, long long j) {
  return Rational(6 * (j + 1) * (g - j), 2 * g + 1) - Rational(2);
}

Rational ch_degree(long long g, const std::vector<long long> &delta,
                   const std::vector<long long> &xi) {
  check_census(g, delta, xi, "ch_degree");
  Rational sum = ch_degree_coeff_xi0(g) * Rational(at(xi, 0));
  for (long long i = 1; i <= g / 2; ++i)
    sum += ch_degree_coeff_delta(g, i) * Rational(at(delta, std::size_t(i)));
  for (long long j = 1; j <= (g - 1) / 2; ++j)
    sum += ch_degree_coeff_xi(g, j) * Rational(at(xi, std::size_t(j)));
  return sum;
}

Rational ch_omega_sq(long long g, const std::vector<long long> &delta,
                     const std::vector<long long> &xi) {
  check_census(g, delta, xi, "ch_omega_sq");
  Rational sum = ch_omega_coeff_xi0(g) * Rational(at(xi, 0));
  for (long long i = 1; i <= g / 2; ++i)
    sum += ch_omega_coeff_delta(g, i) * Rational(at(delta, std::size_t(i)));
  for (long long j = 1; j <= (g - 1) / 2; ++j)
    sum += ch_omega_coeff_xi(g, j) * Rational(at(xi, std::size_t(j)));
  return sum;
}

InequalityVerdict moriwaki_slope(long long g, const Rational &lambda,
                                 const std::vector<long long> &delta) {
  check_census(g, delta, {}, "moriwaki_slope");
  Rational rhs = Rational(g) * Rational(at(delta, 0));
  for (long long i = 1; i <= g / 2; ++i)
    rhs += Rational(4 * i * (g - i)) * Rational(at(delta, std::size_t(i)));
  return InequalityVerdict::of(Rational(8 * g + 4) * lambda, rhs, false);
}

Rational lower_bound_general(long long g, const Rational &lambda, long long delta_1,
                             long long delta_h) {
  if (g < 2)
    throw std::domain_error("lower_bound_general: genus must be >= 2");
  return Rational(4 * (g - 1), g) * lambda + Rational(3 * g - 4, g) * Rational(delta_1) +
         Rational(7 * g - 16, g) * Rational(delta_h);
}

std::pair<Rational, bool> upper_bound(long long g, const Rational &log_canon_base,
                                      long long delta_1_c, long long delta_h_c, bool strict) {
  Rational bound = Rational(2 * g - 2) * log_canon_base + Rational(2 * delta_1_c) +
                   Rational(3 * delta_h_c);
  return {std::move(bound), strict};
}

Rational arakelov_degree(long long g, long long q_f, const Rational &log_canon_base) {
  if (q_f < 0 || q_f > g)
    throw std::domain_error("arakelov_degree: q_f must lie in [0, g]");
  return Rational(g - q_f, 2) * log_canon_base;
}

namespace {

// Shared pieces of the per-index coefficients: the exact census coefficient
// of omega^2 - 4(g-1)/(g-q_f)*lambda, and the weight carried over from the
// fibred-cover constraint.
Rational identity_delta_coeff(long long g, long long q_f, long long i) {
  return Rational(4 * (2 * g - 3 * q_f + 1) * i * (g - i), (2 * g + 1) * (g - q_f)) - Rational(1);
}

Rational identity_xi_coeff(long long g, long long q_f, long long j) {
  return Rational(2 * (2 * g - 3 * q_f + 1) * (j + 1) * (g - j), (2 * g + 1) * (g - q_f)) -
         Rational(2);
}

Rational cover_weight(long long g, long long q_f) {
  return Rational((g - 1) * q_f, (2 * g + 1) * (g - q_f));
}

void check_gq(long long g, long long q_f, const char *who) {
  if (g < 2)
    throw std::domain_error(std::string(who) + ": genus must be >= 2");
  if (q_f < 0 || q_f >= g)
    throw std::domain_error(std::string(who) + ": q_f must lie in [0, g)");
}

} // namespace

Rational lower_compact_delta_coeff(long long g, long long q_f, long long i) {
  check_gq(g, q_f, "lower_compact_delta_coeff");
  return identity_delta_coeff(g, q_f, i);
}

Rational coeff_a(long long g, long long q_f, long long i) {
  check_gq(g, q_f, "coeff_a");
  return identity_delta_coeff(g, q_f, i) + cover_weight(g, q_f) * Rational(4 * i * (2 * i + 1));
}

Rational coeff_b(long long g, long long q_f, long long i) {
  check_gq(g, q_f, "coeff_b");
  return identity_delta_coeff(g, q_f, i) -
         cover_weight(g, q_f) * Rational((2 * i + 1) * (2 * g + 1 - 2 * i), g + 1);
}

Rational coeff_c(long long g, long long q_f, long long j) {
  check_gq(g, q_f, "coeff_c");
  return identity_xi_coeff(g, q_f, j) +
         cover_weight(g, q_f) * Rational(2 * (j + 1) * (2 * j + 1));
}

Rational coeff_d(long long g, long long q_f, long long j) {
  check_gq(g, q_f, "coeff_d");
  return identity_xi_coeff(g, q_f, j) -
         cover_weight(g, q_f) * Rational(2 * (j + 1) * (g - j), g + 1);
}

Rational lower_bound_hyperelliptic(long long g, long long q_f, const Rational &lambda,
                                   const std::vector<long long> &delta, bool delta_nc_empty) {
  check_gq(g, q_f, "lower_bound_hyperelliptic");
  check_census(g, delta, {}, "lower_bound_hyperelliptic");

  Rational sum = Rational(4 * (g - 1), g - q_f) * lambda;
  if (delta_nc_empty) {
    for (long long i = 1; i <= g / 2; ++i)
      sum += identity_delta_coeff(g, q_f, i) * Rational(at(delta, std::size_t(i)));
    return sum;
  }
  long long delta_h = 0;
  for (long long i = 2; i <= g / 2; ++i)
    delta_h += at(delta, std::size_t(i));
  sum += Rational(3 * g * g - (8 * q_f + 1) * g + 10 * q_f - 4, (g + 1) * (g - q_f)) *
         Rational(at(delta, 1));
  sum += Rational(7 * g * g - (16 * q_f + 9) * g + 34 * q_f - 16, (g + 1) * (g - q_f)) *
         Rational(delta_h);
  return sum;
}

InequalityVerdict xi_constraint(long long g, long long q_f,
                                const std::vector<long long> &delta,
                                const std::vector<long long> &xi) {
  if (q_f < 1)
    throw std::domain_error("xi_constraint: requires q_f >= 1");
  check_census(g, delta, xi, "xi_constraint");

  Rational lhs(0), rhs(Rational(at(xi, 0)));
  for (long long i = 1; i <= g / 2; ++i) {
    const Rational count{at(delta, std::size_t(i))};
    if (i >= q_f)
      lhs += Rational((2 * i + 1) * (2 * g + 1 - 2 * i), g + 1) * count;
    else
      rhs += Rational(4 * i * (2 * i + 1)) * count;
  }
  for (long long j = 1; j <= (g - 1) / 2; ++j) {
    const Rational count{at(xi, std::size_t(j))};
    if (j >= q_f)
      lhs += Rational(2 * (j + 1) * (g - j), g + 1) * count;
    else
      rhs += Rational(2 * (j + 1) * (2 * j + 1)) * count;
  }
  return InequalityVerdict::of(std::move(lhs), std::move(rhs), false);
}

InequalityVerdict sigma0_constraint(long long g, long long q_f,
                                    const std::vector<long long> &delta) {
  if (q_f < 2)
    throw std::domain_error("sigma0_constraint: requires q_f >= 2");
  return xi_constraint(g, q_f, delta, {});
}

Rational qf_bound(long long g, long long d) {
  if (d < 2)
    throw std::domain_error("qf_bound: Albanese degree is >= 2 for non-isotrivial families");
  return Rational(g - 1, d) + Rational(1);
}

bool qf_admissible(long long g, long long d, long long q_f, bool xiao_strict) {
  const Rational bound = qf_bound(g, d);
  const Rational q{q_f};
  return xiao_strict ? q < bound : q <= bound;
}

Rational f_gq(const Rational &g, const Rational &q_f) {
  return Rational(4) * q_f * (Rational(13) * g - Rational(21) * q_f + Rational(8)) -
         Rational(50) * g - Rational(51);
}

} // namespace kuga
