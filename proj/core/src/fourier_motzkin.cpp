#include "kuga/feasibility.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace kuga {

bool Constraint::satisfied_by(const Assignment &assignment) const {
  const Rational v = expr.eval(assignment);
  switch (rel) {
  case Relation::GreaterEq:
    return v.sign() >= 0;
  case Relation::Greater:
    return v.sign() > 0;
  case Relation::Equal:
    return v.is_zero();
  }
  return false;
}

std::string Constraint::str() const {
  const char *op = rel == Relation::GreaterEq ? " >= 0"
                   : rel == Relation::Greater ? " > 0"
                                              : " = 0";
  return expr.str() + op;
}

void LinearSystem::declare_free(const std::string &name) {
  if (declared(name))
    throw std::logic_error("LinearSystem: variable '" + name + "' declared twice");
  variables_.push_back(name);
}

void LinearSystem::declare_nonneg(const std::string &name) {
  declare_free(name);
  add("nonneg(" + name + ")", LinearExpr::variable(name), Relation::GreaterEq);
}

bool LinearSystem::declared(const std::string &name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

void LinearSystem::add(std::string name, LinearExpr expr, Relation rel) {
  for (const auto &[var, coeff] : expr.terms())
    if (!declared(var))
      throw std::logic_error("LinearSystem: constraint '" + name + "' uses undeclared variable '" +
                             var + "'");
  constraints_.push_back(Constraint{std::move(name), std::move(expr), rel});
}

std::optional<std::size_t> LinearSystem::violated_by(const Assignment &assignment) const {
  for (std::size_t k = 0; k < constraints_.size(); ++k)
    if (!constraints_[k].satisfied_by(assignment))
      return k;
  return std::nullopt;
}

const Constraint *LinearSystem::find(const std::string &name) const {
  for (const Constraint &c : constraints_)
    if (c.name == name)
      return &c;
  return nullptr;
}

namespace {

// Multipliers over the base rows. Entries for inequality rows stay
// nonnegative throughout; equality rows admit either sign (a negative entry
// means the negated side of the equality). Kept sorted by row index, and
// every derived row satisfies  row == sum(multiplier_k * base_k)  exactly.
using Combo = std::vector<std::pair<std::size_t, Rational>>;

Combo combo_axpy(const Combo &a, const Rational &ta, const Combo &b, const Rational &tb) {
  Combo out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, ta * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, tb * b[j].second);
      ++j;
    } else {
      Rational m = ta * a[i].second + tb * b[j].second;
      if (!m.is_zero())
        out.emplace_back(a[i].first, std::move(m));
      ++i;
      ++j;
    }
  }
  return out;
}

// Sparse row: sorted (variable index, nonzero coefficient) pairs.
using Terms = std::vector<std::pair<std::uint32_t, Rational>>;

struct Row {
  Terms coef;
  Rational constant;
  bool strict = false;
  bool equality = false; // only during preprocessing; split afterwards
  Combo combo;

  const Rational *coeff_of(std::uint32_t v) const {
    auto it = std::lower_bound(coef.begin(), coef.end(), v,
                               [](const auto &term, std::uint32_t x) { return term.first < x; });
    return it != coef.end() && it->first == v ? &it->second : nullptr;
  }
};

Terms terms_axpy(const Terms &a, const Rational &ta, const Terms &b, const Rational &tb) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, ta * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, tb * b[j].second);
      ++j;
    } else {
      Rational c = ta * a[i].second + tb * b[j].second;
      if (!c.is_zero())
        out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

// Scales the row by a positive rational making all entries integral with
// content 1; keeps number growth in check across eliminations.
void normalize_row(Row &row) {
  BigInt den_lcm = 1;
  BigInt num_gcd = 0;
  auto absorb = [&](const Rational &r) {
    if (r.is_zero())
      return;
    den_lcm = boost::multiprecision::lcm(den_lcm, r.den());
    num_gcd = boost::multiprecision::gcd(num_gcd, r.num());
  };
  for (const auto &[v, c] : row.coef)
    absorb(c);
  absorb(row.constant);
  if (num_gcd.is_zero())
    return;
  const Rational scale{den_lcm, boost::multiprecision::abs(num_gcd)};
  if (scale == Rational(1))
    return;
  for (auto &[v, c] : row.coef)
    c *= scale;
  row.constant *= scale;
  for (auto &[idx, mult] : row.combo)
    mult *= scale;
}

struct Eliminator {
  explicit Eliminator(const LinearSystem &sys) : sys_(sys) {
    for (std::size_t k = 0; k < sys.constraints().size(); ++k) {
      const Constraint &c = sys.constraints()[k];
      Row row;
      row.coef.reserve(c.expr.terms().size());
      for (const auto &[var, coeff] : c.expr.terms())
        row.coef.emplace_back(var_index(var), coeff);
      std::sort(row.coef.begin(), row.coef.end(),
                [](const auto &a, const auto &b) { return a.first < b.first; });
      row.constant = c.expr.constant();
      row.strict = (c.rel == Relation::Greater);
      row.equality = (c.rel == Relation::Equal);
      row.combo = {{k, Rational(1)}};
      base_.push_back(std::move(row));
    }
  }

  bool run() {
    for (Row &row : base_)
      if (row.equality)
        equalities_.push_back(std::move(row));
      else
        push_row(std::move(row));
    base_.clear();
    if (contradiction_)
      return true;

    substitute_equalities();
    if (contradiction_)
      return true;

    std::vector<bool> pending(sys_.variables().size(), true);
    for (const Step &step : steps_)
      pending[step.var] = false;
    std::size_t left = 0;
    for (bool p : pending)
      left += p;
    while (left-- > 0) {
      const std::uint32_t x = pick_variable(pending);
      pending[x] = false;
      if (eliminate(x))
        return true;
    }
    return false;
  }

  const std::optional<Row> &contradiction() const { return contradiction_; }

  Assignment reconstruct_witness() const {
    Assignment assignment;
    for (const std::string &name : sys_.variables())
      assignment[name] = Rational(0);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
      std::optional<Rational> lo, hi;
      bool lo_strict = false, hi_strict = false;
      for (const Row &row : it->rows) {
        Rational rest = row.constant;
        const Rational *cx = nullptr;
        for (const auto &[v, c] : row.coef) {
          if (v == it->var) {
            cx = &c;
            continue;
          }
          rest += c * assignment.at(sys_.variables()[v]);
        }
        const Rational bound = -rest / *cx;
        const bool lower = cx->sign() > 0;
        if (row.equality || lower) {
          if (!lo || bound > *lo) {
            lo = bound;
            lo_strict = row.strict;
          } else if (bound == *lo) {
            lo_strict = lo_strict || row.strict;
          }
        }
        if (row.equality || !lower) {
          if (!hi || bound < *hi) {
            hi = bound;
            hi_strict = row.strict;
          } else if (bound == *hi) {
            hi_strict = hi_strict || row.strict;
          }
        }
      }
      assignment[sys_.variables()[it->var]] = pick_value(lo, lo_strict, hi, hi_strict);
    }
    return assignment;
  }

  std::vector<RefutationTerm> refutation_terms(const Row &row) const {
    std::vector<RefutationTerm> terms;
    for (const auto &[k, mult] : row.combo) {
      if (mult.is_zero())
        continue;
      RefutationTerm t;
      t.constraint = k;
      t.constraint_name = sys_.constraints()[k].name;
      t.negated = mult.sign() < 0;
      t.multiplier = t.negated ? -mult : mult;
      terms.push_back(std::move(t));
    }
    return terms;
  }

private:
  struct Step {
    std::uint32_t var = 0;
    std::vector<Row> rows; // rows mentioning var right before its elimination
  };

  std::uint32_t var_index(const std::string &name) {
    if (var_index_.empty()) {
      for (std::uint32_t v = 0; v < sys_.variables().size(); ++v)
        var_index_[sys_.variables()[v]] = v;
    }
    return var_index_.at(name);
  }

  // Gaussian step: each equality row pins one variable and is added, with a
  // signed multiplier, to every other row containing it.
  void substitute_equalities() {
    for (std::size_t e = 0; e < equalities_.size(); ++e) {
      Row eq = std::move(equalities_[e]);
      normalize_row(eq);
      if (eq.coef.empty()) {
        if (!eq.constant.is_zero()) {
          if (eq.constant.sign() > 0)
            flip_equality(eq);
          if (!contradiction_)
            contradiction_ = std::move(eq);
          return;
        }
        continue;
      }
      const std::uint32_t x = eq.coef.front().first;
      const Rational pivot = eq.coef.front().second;

      for (std::size_t k = e + 1; k < equalities_.size(); ++k)
        substitute_into(equalities_[k], eq, x, pivot);
      std::vector<Row> rows = std::move(active_);
      active_.clear();
      dedup_.clear();
      for (Row &row : rows) {
        substitute_into(row, eq, x, pivot);
        push_row(std::move(row));
        if (contradiction_)
          return;
      }
      Step step;
      step.var = x;
      step.rows.push_back(std::move(eq));
      steps_.push_back(std::move(step));
    }
    equalities_.clear();
  }

  static void substitute_into(Row &row, const Row &eq, std::uint32_t x, const Rational &pivot) {
    const Rational *cx = row.coeff_of(x);
    if (!cx)
      return;
    const Rational t = -*cx / pivot;
    row.coef = terms_axpy(row.coef, Rational(1), eq.coef, t);
    row.constant += t * eq.constant;
    row.combo = combo_axpy(row.combo, Rational(1), eq.combo, t);
  }

  // An equality row may be scaled by -1; its multipliers only reference
  // equality constraints, where signed multipliers are legitimate.
  void flip_equality(Row &row) {
    for (auto &[v, c] : row.coef)
      c = -c;
    row.constant = -row.constant;
    for (auto &[k, m] : row.combo)
      m = -m;
  }

  void push_row(Row row) {
    normalize_row(row);
    if (row.coef.empty()) {
      const bool bad = row.constant.sign() < 0 || (row.constant.is_zero() && row.strict);
      if (bad && !contradiction_)
        contradiction_ = std::move(row);
      return;
    }
    auto it = dedup_.find(row.coef);
    if (it == dedup_.end()) {
      dedup_.emplace(row.coef, active_.size());
      active_.push_back(std::move(row));
      return;
    }
    Row &kept = active_[it->second];
    const bool stronger = row.constant < kept.constant ||
                          (row.constant == kept.constant && row.strict && !kept.strict);
    if (stronger)
      kept = std::move(row);
  }

  std::uint32_t pick_variable(const std::vector<bool> &pending) const {
    std::vector<long long> pos(pending.size(), 0), neg(pending.size(), 0);
    for (const Row &row : active_)
      for (const auto &[v, c] : row.coef)
        (c.sign() > 0 ? pos : neg)[v]++;
    std::uint32_t best = 0;
    long long best_cost = 0;
    bool found = false;
    for (std::uint32_t v = 0; v < pending.size(); ++v) {
      if (!pending[v])
        continue;
      const long long cost = pos[v] * neg[v] - (pos[v] + neg[v]);
      if (!found || cost < best_cost) {
        best = v;
        best_cost = cost;
        found = true;
      }
    }
    return best;
  }

  bool eliminate(std::uint32_t x) {
    std::vector<Row> pos, neg, rest;
    for (Row &row : active_) {
      const Rational *cx = row.coeff_of(x);
      if (!cx)
        rest.push_back(std::move(row));
      else if (cx->sign() > 0)
        pos.push_back(std::move(row));
      else
        neg.push_back(std::move(row));
    }
    Step step;
    step.var = x;
    step.rows = pos;
    step.rows.insert(step.rows.end(), neg.begin(), neg.end());
    steps_.push_back(std::move(step));

    active_ = std::move(rest);
    dedup_.clear();
    for (std::size_t k = 0; k < active_.size(); ++k)
      dedup_.emplace(active_[k].coef, k);

    for (const Row &p : pos) {
      const Rational tp = Rational(1) / *p.coeff_of(x);
      for (const Row &n : neg) {
        const Rational tn = Rational(-1) / *n.coeff_of(x);
        Row combined;
        combined.coef = terms_axpy(p.coef, tp, n.coef, tn);
        combined.constant = tp * p.constant + tn * n.constant;
        combined.strict = p.strict || n.strict;
        combined.combo = combo_axpy(p.combo, tp, n.combo, tn);
        push_row(std::move(combined));
        if (contradiction_)
          return true;
      }
    }
    return false;
  }

  static Rational pick_value(const std::optional<Rational> &lo, bool lo_strict,
                             const std::optional<Rational> &hi, bool hi_strict) {
    const Rational zero(0);
    if (!lo && !hi)
      return zero;
    if (lo && hi) {
      if (*lo == *hi)
        return *lo;
      return (*lo + *hi) / Rational(2);
    }
    if (lo) {
      if (zero > *lo || (zero == *lo && !lo_strict))
        return zero;
      if (!lo_strict)
        return *lo;
      return Rational(lo->floor() + 1);
    }
    if (zero < *hi || (zero == *hi && !hi_strict))
      return zero;
    if (!hi_strict)
      return *hi;
    return Rational(hi->ceil() - 1);
  }

  const LinearSystem &sys_;
  std::map<std::string, std::uint32_t> var_index_;
  std::vector<Row> base_;
  std::vector<Row> equalities_;
  std::vector<Row> active_;
  std::map<Terms, std::size_t> dedup_;
  std::vector<Step> steps_;
  std::optional<Row> contradiction_;
};

} // namespace

Certificate fourier_motzkin(const LinearSystem &sys) {
  Eliminator elim(sys);
  Certificate cert;
  if (elim.run()) {
    const auto &row = *elim.contradiction();
    cert.verdict = Verdict::Infeasible;
    cert.refutation = elim.refutation_terms(row);
    cert.refutation_constant = row.constant;
    cert.refutation_strict = row.strict;
  } else {
    cert.verdict = Verdict::Feasible;
    cert.witness = elim.reconstruct_witness();
  }
  if (!certificate_valid(sys, cert))
    throw std::logic_error("fourier_motzkin: certificate failed re-verification");
  return cert;
}

bool certificate_valid(const LinearSystem &sys, const Certificate &cert) {
  if (cert.verdict == Verdict::Feasible) {
    for (const std::string &v : sys.variables())
      if (!cert.witness.contains(v))
        return false;
    return !sys.violated_by(cert.witness).has_value();
  }

  if (cert.refutation.empty())
    return false;
  LinearExpr combined;
  bool any_strict = false;
  for (const RefutationTerm &t : cert.refutation) {
    if (t.constraint >= sys.constraints().size())
      return false;
    if (t.multiplier.sign() <= 0)
      return false;
    const Constraint &c = sys.constraints()[t.constraint];
    if (t.negated && c.rel != Relation::Equal)
      return false;
    LinearExpr e = c.expr;
    e *= t.negated ? -t.multiplier : t.multiplier;
    combined += e;
    any_strict = any_strict || (c.rel == Relation::Greater);
  }
  if (!combined.is_constant())
    return false;
  const Rational &constant = combined.constant();
  if (constant != cert.refutation_constant || any_strict != cert.refutation_strict)
    return false;
  return constant.sign() < 0 || (constant.is_zero() && any_strict);
}

std::string Certificate::digest() const {
  if (verdict == Verdict::Feasible) {
    std::string out = "witness{";
    bool first = true;
    for (const auto &[name, value] : witness) {
      if (value.is_zero())
        continue;
      if (!first)
        out += ",";
      out += name + "=" + value.str();
      first = false;
    }
    if (first)
      out += "0";
    out += "}";
    return out;
  }
  std::string out = "refute{";
  for (std::size_t i = 0; i < refutation.size(); ++i) {
    if (i)
      out += ",";
    out += refutation[i].constraint_name;
    if (refutation[i].negated)
      out += "[-]";
    out += "*" + refutation[i].multiplier.str();
  }
  out += "}";
  return out;
}

const char *to_string(Verdict v) {
  return v == Verdict::Feasible ? "feasible" : "infeasible";
}

const char *to_string(DeltaNcState s) {
  switch (s) {
  case DeltaNcState::NonEmpty:
    return "nc-nonempty";
  case DeltaNcState::Empty:
    return "nc-empty";
  case DeltaNcState::EmptyNoSingular:
    return "nc-empty-smooth";
  }
  return "?";
}

} // namespace kuga
