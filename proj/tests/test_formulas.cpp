#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kuga/formulas.hpp"

#include <random>
#include <vector>

using namespace kuga;

namespace {

// census layout: delta[i] indexed from 0, xi[j] indexed from 0
const std::vector<long long> g3_delta = {8, 4};     // delta_0 = 8, delta_1 = 4
const std::vector<long long> g3_xi = {8, 0};        // xi_0 = 8
const std::vector<long long> g4_delta = {0, 12, 0}; // delta_1 = 12
const std::vector<long long> g4_xi = {0, 0};

} // namespace

TEST_CASE("degree formula on the worked families") {
  CHECK(ch_degree(3, g3_delta, g3_xi) == Rational(2));
  CHECK(ch_degree(4, g4_delta, g4_xi) == Rational(4));
  CHECK(ch_degree(9, {}, {}) == Rational(0));
  CHECK_THROWS_AS(ch_degree(3, {0, -1}, {}), std::domain_error);
}

TEST_CASE("omega^2 formula on the worked families") {
  CHECK(ch_omega_sq(3, g3_delta, g3_xi) == Rational(12));
  CHECK(ch_omega_sq(4, g4_delta, g4_xi) == Rational(36));
  CHECK(ch_omega_sq(7, {}, {}) == Rational(0));
}

TEST_CASE("omega^2 census formula agrees with the degree formula through Noether") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 1000; ++trial) {
    const long long g = 2 + static_cast<long long>(rng() % 29);
    std::vector<long long> delta(static_cast<std::size_t>(g / 2) + 1);
    std::vector<long long> xi(static_cast<std::size_t>((g - 1) / 2) + 1);
    for (auto &v : delta)
      v = static_cast<long long>(rng() % 7);
    for (auto &v : xi)
      v = static_cast<long long>(rng() % 7);
    // delta_0 and xi are tied on hyperelliptic fibres, but the identity
    // below is purely formal, so arbitrary nonnegative entries are fair.
    long long delta_f = xi[0];
    for (std::size_t i = 1; i < delta.size(); ++i)
      delta_f += delta[i];
    for (std::size_t j = 1; j < xi.size(); ++j)
      delta_f += 2 * xi[j];
    CHECK(ch_omega_sq(g, delta, xi) ==
          Rational(12) * ch_degree(g, delta, xi) - Rational(delta_f));
  }
}

TEST_CASE("slope inequality") {
  // genus-3 family: (8*3+4)*2 = 56 vs 3*8 + 4*1*2*4 = 56
  const InequalityVerdict sharp = moriwaki_slope(3, Rational(2), g3_delta);
  CHECK(sharp.holds);
  CHECK(sharp.slack == Rational(0));

  const InequalityVerdict trivial = moriwaki_slope(2, Rational(0), {0, 0});
  CHECK(trivial.holds);
  CHECK(trivial.slack == Rational(0));

  const InequalityVerdict forced = moriwaki_slope(3, Rational(0), {1, 0});
  CHECK_FALSE(forced.holds);
  CHECK(forced.slack == Rational(-3));
}

TEST_CASE("general lower bound") {
  CHECK(lower_bound_general(3, Rational(2), 4, 0) == Rational(12));
  CHECK(lower_bound_general(4, Rational(4), 12, 0) == Rational(36));
  CHECK(lower_bound_general(5, Rational(0), 0, 0) == Rational(0));
}

TEST_CASE("upper bound and strictness flag") {
  const auto [b1, s1] = upper_bound(3, Rational(2), 4, 0, true);
  CHECK(b1 == Rational(16));
  CHECK(s1);
  CHECK(Rational(12) < b1);

  const auto [b2, s2] = upper_bound(4, Rational(2), 12, 0, false);
  CHECK(b2 == Rational(36));
  CHECK_FALSE(s2);

  const auto [b3, s3] = upper_bound(2, Rational(0), 0, 0, false);
  CHECK(b3 == Rational(0));
  CHECK_FALSE(s3);
}

TEST_CASE("degree equality value") {
  CHECK(arakelov_degree(3, 1, Rational(2)) == Rational(2));
  CHECK(arakelov_degree(4, 0, Rational(2)) == Rational(4));
  CHECK(arakelov_degree(5, 5, Rational(7, 3)) == Rational(0));
  CHECK_THROWS_AS(arakelov_degree(3, 4, Rational(1)), std::domain_error);
}

TEST_CASE("hyperelliptic lower bound, noncompact branch") {
  // 4*2/2 * 2 + (3*9 - 9*3 + 10 - 4)/(4*2) * 4 = 8 + 3 = 11
  CHECK(lower_bound_hyperelliptic(3, 1, Rational(2), g3_delta, false) == Rational(11));
  CHECK(Rational(11) <= Rational(12));
  CHECK_THROWS_AS(lower_bound_hyperelliptic(3, 3, Rational(1), {}, false), std::domain_error);
}

TEST_CASE("hyperelliptic lower bound at q_f = 0 is the general bound, term by term") {
  for (long long g = 2; g <= 30; ++g) {
    // lambda coefficient
    CHECK(Rational(4 * (g - 1), g - 0) == Rational(4 * (g - 1), g));
    // delta_1 coefficient: evaluate on the unit vector
    std::vector<long long> e1(static_cast<std::size_t>(g / 2) + 1, 0);
    e1[1] = 1;
    CHECK(lower_bound_hyperelliptic(g, 0, Rational(0), e1, false) ==
          lower_bound_general(g, Rational(0), 1, 0));
    // higher-type coefficients all collapse to the delta_h coefficient
    for (long long i = 2; i <= g / 2; ++i) {
      std::vector<long long> ei(static_cast<std::size_t>(g / 2) + 1, 0);
      ei[static_cast<std::size_t>(i)] = 1;
      CHECK(lower_bound_hyperelliptic(g, 0, Rational(0), ei, false) ==
            lower_bound_general(g, Rational(0), 0, 1));
    }
  }
}

TEST_CASE("hyperelliptic lower bound, compact branch") {
  CHECK(lower_bound_hyperelliptic(4, 0, Rational(4), g4_delta, true) == Rational(36));
  // per-index coefficients stay individual in the compact branch
  CHECK(lower_compact_delta_coeff(8, 1, 1) == Rational(39, 17));
  CHECK(lower_compact_delta_coeff(6, 2, 2) == Rational(43, 13));
}

TEST_CASE("fibred-cover constraint") {
  const InequalityVerdict v = xi_constraint(3, 1, g3_delta, g3_xi);
  CHECK(v.holds);
  CHECK(v.lhs == Rational(15));
  CHECK(v.rhs == Rational(8));

  const InequalityVerdict zeros = xi_constraint(5, 1, {}, {});
  CHECK(zeros.holds);
  CHECK(zeros.slack == Rational(0));

  const InequalityVerdict forced = xi_constraint(5, 2, {}, {1});
  CHECK_FALSE(forced.holds);

  CHECK_THROWS_AS(xi_constraint(5, 0, {}, {}), std::domain_error);
}

TEST_CASE("compact census balance") {
  CHECK(sigma0_constraint(5, 2, {0, 0, 1}).holds);
  CHECK_FALSE(sigma0_constraint(5, 2, {0, 1, 0}).holds);
  // 5*11/8 = 55/8 < 12
  const InequalityVerdict v = sigma0_constraint(7, 2, {0, 1, 1});
  CHECK_FALSE(v.holds);
  CHECK(v.lhs == Rational(55, 8));
  CHECK(v.rhs == Rational(12));
  CHECK_THROWS_AS(sigma0_constraint(7, 1, {}), std::domain_error);
}

TEST_CASE("irregularity bound from the Albanese degree") {
  CHECK(qf_bound(3, 2) == Rational(2));
  CHECK(qf_bound(7, 3) == Rational(3));
  CHECK(qf_bound(2, 2) == Rational(3, 2));
  CHECK_THROWS_AS(qf_bound(5, 1), std::domain_error);

  CHECK(qf_admissible(3, 2, 1, true));  // 1 < 2
  CHECK_FALSE(qf_admissible(3, 2, 2, true));
  CHECK(qf_admissible(3, 2, 2, false));
  CHECK(qf_admissible(7, 3, 2, true)); // 2 < 3
}

TEST_CASE("per-index coefficients specialize at q_f = 1") {
  for (long long g = 2; g <= 40; ++g) {
    CHECK(coeff_b(g, 1, 1) == Rational(3 * g - 6, g + 1));
    for (long long i = 2; i <= g / 2; ++i)
      CHECK(coeff_b(g, 1, i) == Rational(4 * i * (g - i) - g - 2, g + 1));
    for (long long j = 1; j <= (g - 1) / 2; ++j) {
      const Rational dj = coeff_d(g, 1, j);
      CHECK(dj == Rational(2 * ((j + 1) * (g - j) - (g + 1)), g + 1));
      CHECK(dj.sign() >= 0);
    }
  }
  CHECK(coeff_b(7, 1, 1) == Rational(15, 8));
}

TEST_CASE("coefficient signs over the full scan range") {
  for (long long g = 2; g <= 60; ++g) {
    for (long long q = 2; 3 * q <= g + 1; ++q) {
      for (long long i = 1; i <= q - 1; ++i)
        CHECK(coeff_a(g, q, i).sign() > 0);
      for (long long j = 1; j <= q - 1; ++j)
        CHECK(coeff_c(g, q, j).sign() >= 0);
      for (long long j = q; j <= (g - 1) / 2; ++j)
        CHECK(coeff_d(g, q, j).sign() >= 0);
    }
  }
}

TEST_CASE("sign-analysis polynomial") {
  for (long long g = 2; g <= 51; ++g) {
    CHECK(f_gq(Rational(g), Rational(3)) == Rational(106 * g - 711));
    CHECK(Rational(3) * f_gq(Rational(g), Rational(g + 1, 3)) ==
          Rational(24 * g * g - 122 * g - 149));
  }
  CHECK(f_gq(Rational(8), Rational(3)) == Rational(137));
}
