#pragma once

#include "kuga/rational.hpp"

#include <map>
#include <string>

namespace kuga {

using Assignment = std::map<std::string, Rational>;

/// Affine expression  constant + sum(coeff[v] * v)  over named variables.
/// Zero coefficients are never stored, so structural equality is semantic
/// equality and printing has no noise terms.
class LinearExpr {
public:
  LinearExpr() = default;
  explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {}

  static LinearExpr variable(const std::string &name) {
    LinearExpr e;
    e.add_term(name, Rational(1));
    return e;
  }

  const std::map<std::string, Rational> &terms() const { return terms_; }
  const Rational &constant() const { return constant_; }

  Rational coeff(const std::string &name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const std::string &name, const Rational &coeff);
  void add_constant(const Rational &c) { constant_ += c; }

  bool is_constant() const { return terms_.empty(); }

  LinearExpr &operator+=(const LinearExpr &other);
  LinearExpr &operator-=(const LinearExpr &other);
  LinearExpr &operator*=(const Rational &scalar);

  friend LinearExpr operator+(LinearExpr a, const LinearExpr &b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr &b) { return a -= b; }
  friend LinearExpr operator*(const Rational &s, LinearExpr e) { return e *= s; }

  friend bool operator==(const LinearExpr &a, const LinearExpr &b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  /// Exact value at a full assignment; throws naming the first missing variable.
  Rational eval(const Assignment &assignment) const;

  /// Deterministic rendering, terms in variable-name order, e.g. "2*x + y - 3".
  std::string str() const;

private:
  std::map<std::string, Rational> terms_;
  Rational constant_;
};

} // namespace kuga
