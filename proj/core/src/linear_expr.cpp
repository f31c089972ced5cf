#include "kuga/linear_expr.hpp"

#include <stdexcept>

namespace kuga {

void LinearExpr::add_term(const std::string &name, const Rational &coeff) {
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(name, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LinearExpr &LinearExpr::operator+=(const LinearExpr &other) {
  for (const auto &[name, coeff] : other.terms_)
    add_term(name, coeff);
  constant_ += other.constant_;
  return *this;
}

LinearExpr &LinearExpr::operator-=(const LinearExpr &other) {
  for (const auto &[name, coeff] : other.terms_)
    add_term(name, -coeff);
  constant_ -= other.constant_;
  return *this;
}

LinearExpr &LinearExpr::operator*=(const Rational &scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    constant_ = Rational(0);
    return *this;
  }
  for (auto &[name, coeff] : terms_)
    coeff *= scalar;
  constant_ *= scalar;
  return *this;
}

Rational LinearExpr::eval(const Assignment &assignment) const {
  Rational value = constant_;
  for (const auto &[name, coeff] : terms_) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument("LinearExpr: unassigned variable '" + name + "'");
    value += coeff * it->second;
  }
  return value;
}

std::string LinearExpr::str() const {
  std::string out;
  for (const auto &[name, coeff] : terms_) {
    if (out.empty()) {
      if (coeff == Rational(1))
        out += name;
      else if (coeff == Rational(-1))
        out += "-" + name;
      else
        out += coeff.str() + "*" + name;
      continue;
    }
    const Rational a = coeff.abs();
    out += coeff.sign() < 0 ? " - " : " + ";
    if (a == Rational(1))
      out += name;
    else
      out += a.str() + "*" + name;
  }
  if (out.empty())
    return constant_.str();
  if (!constant_.is_zero()) {
    out += constant_.sign() < 0 ? " - " : " + ";
    out += constant_.abs().str();
  }
  return out;
}

} // namespace kuga
