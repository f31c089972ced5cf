#include "kuga/invariants.hpp"

#include "kuga/errors.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kuga {

long long FiberData::delta0_from_xi() const {
  long long total = xi_at(0);
  for (const auto &[j, count] : xi)
    if (j >= 1)
      total += 2 * count;
  return total;
}

long long FiberData::node_count() const {
  long long total = 0;
  for (const auto &[i, count] : delta)
    total += count;
  return total;
}

void classify_node(const NodeRecord &node, long long g, FiberData &fiber) {
  if (node.index_alpha < 2 || node.index_alpha > g + 1)
    throw std::domain_error("classify_node: index " + std::to_string(node.index_alpha) +
                            " outside [2, g+1] for g=" + std::to_string(g));
  if (node.multiplicity < 1)
    throw std::domain_error("classify_node: multiplicity must be positive");

  const long long m = node.multiplicity;
  if (node.index_alpha % 2 == 1) {
    const long long k = (node.index_alpha - 1) / 2;
    fiber.delta[k] += m;
  } else {
    const long long j = (node.index_alpha - 2) / 2;
    fiber.xi[j] += (j == 0 ? 2 * m : m);
    fiber.delta[0] += 2 * m;
  }
}

long long Totals::delta_h() const {
  long long sum = 0;
  for (std::size_t i = 2; i < delta.size(); ++i)
    sum += delta[i];
  return sum;
}

long long Totals::delta_h_c() const {
  long long sum = 0;
  for (std::size_t i = 2; i < delta_c.size(); ++i)
    sum += delta_c[i];
  return sum;
}

long long Totals::xi_tail() const {
  long long sum = 0;
  for (std::size_t j = 1; j < xi.size(); ++j)
    sum += xi[j];
  return sum;
}

Totals totals(const FamilyInvariants &fam) {
  if (fam.g < 2)
    throw SchemaError("family: genus must be >= 2, got " + std::to_string(fam.g));
  if (fam.b < 0)
    throw SchemaError("family: base_genus must be >= 0");
  if (fam.q_f && (*fam.q_f < 0 || *fam.q_f > fam.g))
    throw SchemaError("family: q_f must lie in [0, g]");

  const long long imax = fam.g / 2;
  const long long jmax = (fam.g - 1) / 2;

  Totals t;
  t.delta.assign(static_cast<std::size_t>(imax) + 1, 0);
  t.delta_c.assign(static_cast<std::size_t>(imax) + 1, 0);
  if (fam.hyperelliptic)
    t.xi.assign(static_cast<std::size_t>(jmax) + 1, 0);

  for (std::size_t k = 0; k < fam.fibers.size(); ++k) {
    const FiberData &f = fam.fibers[k];
    const std::string where = "fibers[" + std::to_string(k) + "]";

    for (const auto &[i, count] : f.delta) {
      if (i < 0 || i > imax)
        throw SchemaError(where + ": delta index " + std::to_string(i) +
                          " outside [0, " + std::to_string(imax) + "]");
      if (count < 0)
        throw SchemaError(where + ": negative delta count");
    }
    if (!fam.hyperelliptic && !f.xi.empty())
      throw SchemaError(where + ": xi census only defined for hyperelliptic families");
    for (const auto &[j, count] : f.xi) {
      if (j < 0 || j > jmax)
        throw SchemaError(where + ": xi index " + std::to_string(j) +
                          " outside [0, " + std::to_string(jmax) + "]");
      if (count < 0)
        throw SchemaError(where + ": negative xi count");
    }

    const long long d0 = f.delta_at(0);
    if (f.compact_jacobian != (d0 == 0))
      throw SchemaError(where + ": compact_jacobian flag contradicts delta[0]=" +
                        std::to_string(d0));
    if (fam.hyperelliptic && d0 != f.delta0_from_xi())
      throw SchemaError(where + ": delta[0] must equal xi[0] + 2*sum(xi[j>=1]), got " +
                        std::to_string(d0) + " vs " + std::to_string(f.delta0_from_xi()));
    if (f.node_count() == 0)
      throw SchemaError(where + ": fibre has no nodes; only singular fibres are listed");

    for (const auto &[i, count] : f.delta) {
      t.delta[static_cast<std::size_t>(i)] += count;
      if (f.compact_jacobian)
        t.delta_c[static_cast<std::size_t>(i)] += count;
      t.delta_f += count;
    }
    for (const auto &[j, count] : f.xi)
      t.xi[static_cast<std::size_t>(j)] += count;
    if (!f.compact_jacobian)
      ++t.s_nc;
  }
  return t;
}

DerivedInvariants noether_complete(std::optional<Rational> lambda,
                                   std::optional<Rational> omega_sq,
                                   std::optional<Rational> delta_f) {
  const int given = int(lambda.has_value()) + int(omega_sq.has_value()) + int(delta_f.has_value());
  if (given != 2)
    throw std::invalid_argument("noether_complete: exactly two of lambda, omega_sq, delta_f required");

  DerivedInvariants d;
  if (!lambda) {
    d.omega_sq = *omega_sq;
    d.delta_f = *delta_f;
    d.lambda = (d.omega_sq + d.delta_f) / Rational(12);
  } else if (!omega_sq) {
    d.lambda = *lambda;
    d.delta_f = *delta_f;
    d.omega_sq = Rational(12) * d.lambda - d.delta_f;
  } else {
    d.lambda = *lambda;
    d.omega_sq = *omega_sq;
    d.delta_f = Rational(12) * d.lambda - d.omega_sq;
  }

  const char *neg = nullptr;
  if (d.lambda.sign() < 0)
    neg = "lambda";
  else if (d.omega_sq.sign() < 0)
    neg = "omega_sq";
  else if (d.delta_f.sign() < 0)
    neg = "delta_f";
  if (neg)
    throw std::domain_error(std::string("noether_complete: ") + neg +
                            " comes out negative; the given pair is inconsistent");
  return d;
}

} // namespace kuga
