// Acceptance suite: every release criterion as one timed pass/fail line.
// Exits with the number of failed criteria.

#include "kuga/checks.hpp"
#include "kuga/family_json.hpp"
#include "kuga/feasibility.hpp"
#include "kuga/formulas.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace kuga;

namespace {

const std::string kFixtures = KUGA_FIXTURE_DIR;

int failures = 0;

void criterion(int number, const std::string &title, double budget_seconds,
               const std::function<void(std::ostream &)> &body) {
  std::ostringstream why;
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    body(why);
  } catch (const std::exception &e) {
    why << "exception: " << e.what() << "; ";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!why.str().empty())
    ok = false;
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    why << "runtime " << elapsed << "s exceeds " << budget_seconds << "s; ";
  }
  std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              elapsed);
  if (!ok) {
    std::printf("     %s\n", why.str().c_str());
    ++failures;
  }
}

template <typename T>
void expect(std::ostream &why, bool cond, const T &message) {
  if (!cond)
    why << message << "; ";
}

} // namespace

int main() {
  criterion(1, "genus-3 family reproduces exactly, all checks pass", 1.0, [](std::ostream &why) {
    const Report rep = check_family(family_from_file(kFixtures + "/genus3_hyperelliptic.json"));
    expect(why, rep.census.xi.at(0) == 8, "xi_0 total != 8");
    expect(why, rep.census.delta.at(1) == 4, "delta_1 total != 4");
    expect(why, rep.census.delta_f == 12, "delta_f != 12");
    expect(why, rep.derived.lambda == Rational(2), "deg != 2");
    expect(why, rep.derived.omega_sq == Rational(12), "omega^2 != 12");
    expect(why, rep.q_f == 1 && rep.q_f_inferred, "q_f not inferred as 1");
    expect(why, rep.consistent, "some check failed");
  });

  criterion(2, "genus-4 family reproduces exactly, upper bound attained", 1.0,
            [](std::ostream &why) {
    const Report rep = check_family(family_from_file(kFixtures + "/genus4_hyperelliptic.json"));
    expect(why, rep.census.delta.at(1) == 12, "delta_1 total != 12");
    expect(why, rep.census.delta_f == 12, "delta_f != 12");
    expect(why, rep.derived.lambda == Rational(4), "deg != 4");
    expect(why, rep.derived.omega_sq == Rational(36), "omega^2 != 36");
    expect(why, rep.q_f == 0 && rep.q_f_inferred, "rank of the ample part != g");
    bool saw_upper = false;
    for (const CheckLine &line : rep.checks)
      if (line.id == "upper-bound") {
        saw_upper = true;
        expect(why, line.slack.is_zero(), "upper bound slack != 0");
        expect(why, line.kind == CheckLine::Kind::GreaterEq, "equality case wrongly strict");
      }
    expect(why, saw_upper, "no upper-bound check");
    expect(why, rep.consistent, "some check failed");
  });

  criterion(3, "strictly-maximal scan 2..50: no family above genus 4", 5.0,
            [](std::ostream &why) {
    const ScanResult scan = genus_scan(FamilyKind::GeneralStrictlyMaximal, 2, 50, NcRegime::All);
    for (const ScanCell &cell : scan.cells) {
      if (cell.g >= 5)
        expect(why, cell.verdict == Verdict::Infeasible,
               "feasible cell at g=" + std::to_string(cell.g));
      if (cell.g >= 4 && cell.nc == DeltaNcState::NonEmpty)
        expect(why, cell.verdict == Verdict::Infeasible,
               "feasible noncompact cell at g=" + std::to_string(cell.g));
      for (const ScanPart &part : cell.parts)
        if (part.certificate.verdict == Verdict::Infeasible)
          expect(why, certificate_valid(build_system(part.scenario), part.certificate),
                 "refutation failed re-verification at g=" + std::to_string(cell.g));
    }
    expect(why, scan.max_feasible_g() == 4, "max feasible g != 4");
  });

  criterion(4, "hyperelliptic scan 2..50: no family above genus 7, column bounds exact", 30.0,
            [](std::ostream &why) {
    const ScanResult scan = genus_scan(FamilyKind::HyperellipticKuga, 2, 50, NcRegime::All);
    for (const ScanCell &cell : scan.cells)
      if (cell.g >= 8)
        expect(why, cell.verdict == Verdict::Infeasible,
               "feasible cell at g=" + std::to_string(cell.g) +
                   " q_f=" + std::to_string(cell.q_f));
    expect(why, scan.max_feasible_g(DeltaNcState::NonEmpty, 0) == 3, "noncompact q_f=0 bound");
    expect(why, scan.max_feasible_g(DeltaNcState::NonEmpty, 1) == 7, "noncompact q_f=1 bound");
    expect(why, scan.max_feasible_g(DeltaNcState::Empty, 0) == 4, "compact q_f=0 bound");
    expect(why, scan.max_feasible_g(DeltaNcState::Empty, 1) == 5, "compact q_f=1 bound");
    expect(why, scan.max_feasible_g(DeltaNcState::Empty, 2) == 5, "compact q_f=2 bound");
    expect(why, scan.max_feasible_g(DeltaNcState::Empty, 3) == 6, "compact q_f=3 bound");
    expect(why, scan.max_feasible_g() == 7, "max feasible g != 7");
    for (const ScanCell &cell : scan.cells)
      for (const ScanPart &part : cell.parts)
        if (part.certificate.verdict == Verdict::Infeasible)
          expect(why, certificate_valid(build_system(part.scenario), part.certificate),
                 "refutation failed re-verification at g=" + std::to_string(cell.g));
  });

  criterion(5, "identity suite: census formulas and the q_f=0 reduction", 10.0,
            [](std::ostream &why) {
    std::mt19937_64 rng(1000003);
    for (int trial = 0; trial < 1000; ++trial) {
      const long long g = 2 + static_cast<long long>(rng() % 29);
      std::vector<long long> delta(static_cast<std::size_t>(g / 2) + 1);
      std::vector<long long> xi(static_cast<std::size_t>((g - 1) / 2) + 1);
      for (auto &v : delta)
        v = static_cast<long long>(rng() % 9);
      for (auto &v : xi)
        v = static_cast<long long>(rng() % 9);
      long long delta_f = xi[0];
      for (std::size_t i = 1; i < delta.size(); ++i)
        delta_f += delta[i];
      for (std::size_t j = 1; j < xi.size(); ++j)
        delta_f += 2 * xi[j];
      if (ch_omega_sq(g, delta, xi) !=
          Rational(12) * ch_degree(g, delta, xi) - Rational(delta_f)) {
        expect(why, false, "census identity failed at trial " + std::to_string(trial));
        return;
      }
    }
    for (long long g = 2; g <= 30; ++g) {
      // degree term
      if (lower_bound_hyperelliptic(g, 0, Rational(1), {}, false) !=
          lower_bound_general(g, Rational(1), 0, 0)) {
        expect(why, false, "degree term differs at g=" + std::to_string(g));
        return;
      }
      // one census coefficient at a time
      for (long long i = 1; i <= g / 2; ++i) {
        std::vector<long long> unit(static_cast<std::size_t>(g / 2) + 1, 0);
        unit[static_cast<std::size_t>(i)] = 1;
        const Rational hyper = lower_bound_hyperelliptic(g, 0, Rational(0), unit, false);
        const Rational general =
            lower_bound_general(g, Rational(0), i == 1 ? 1 : 0, i == 1 ? 0 : 1);
        if (hyper != general) {
          expect(why, false, "q_f=0 reduction differs at g=" + std::to_string(g) +
                                 " i=" + std::to_string(i));
          return;
        }
      }
    }
  });

  criterion(6, "elimination agrees with the brute-force oracle on 500 systems", 60.0,
            [](std::ostream &why) {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> nvars(1, 3);
    std::uniform_int_distribution<int> ncons(1, 6);
    std::uniform_int_distribution<int> relkind(0, 19);
    const char *names[] = {"x", "y", "z"};
    int agree = 0;
    for (int trial = 0; trial < 500; ++trial) {
      LinearSystem sys;
      const int n = nvars(rng);
      for (int v = 0; v < n; ++v)
        sys.declare_free(names[v]);
      const int m = ncons(rng);
      for (int k = 0; k < m; ++k) {
        LinearExpr e{Rational(coeff(rng))};
        for (int v = 0; v < n; ++v)
          e.add_term(names[v], Rational(coeff(rng)));
        const int r = relkind(rng);
        sys.add("c" + std::to_string(k), std::move(e),
                r < 12   ? Relation::GreaterEq
                : r < 17 ? Relation::Greater
                         : Relation::Equal);
      }
      const bool fm = fourier_motzkin(sys).verdict == Verdict::Feasible;
      const bool oracle = kuga_test::oracle_feasible(sys);
      if (fm == oracle)
        ++agree;
      else
        expect(why, false, "disagreement on trial " + std::to_string(trial));
    }
    expect(why, agree == 500, std::to_string(agree) + "/500 agreed");
  });

  criterion(7, "coefficient sign suite and sign-analysis polynomial", 10.0,
            [](std::ostream &why) {
    for (long long g = 2; g <= 60; ++g) {
      for (long long q = 2; 3 * q <= g + 1; ++q) {
        for (long long i = 1; i <= q - 1; ++i)
          expect(why, coeff_a(g, q, i).sign() > 0,
                 "a not positive at g=" + std::to_string(g) + " q=" + std::to_string(q));
        for (long long j = 1; j <= q - 1; ++j)
          expect(why, coeff_c(g, q, j).sign() >= 0,
                 "c negative at g=" + std::to_string(g) + " q=" + std::to_string(q));
        for (long long j = q; j <= (g - 1) / 2; ++j)
          expect(why, coeff_d(g, q, j).sign() >= 0,
                 "d negative at g=" + std::to_string(g) + " q=" + std::to_string(q));
      }
    }
    for (long long g = 2; g <= 51; ++g) {
      expect(why, f_gq(Rational(g), Rational(3)) == Rational(106 * g - 711),
             "f(g,3) mismatch at g=" + std::to_string(g));
      expect(why,
             Rational(3) * f_gq(Rational(g), Rational(g + 1, 3)) ==
                 Rational(24 * g * g - 122 * g - 149),
             "3*f(g,(g+1)/3) mismatch at g=" + std::to_string(g));
    }
  });

  return failures;
}
