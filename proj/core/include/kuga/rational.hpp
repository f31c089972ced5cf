#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace kuga {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Values are always kept in lowest terms with a positive denominator, so
/// equality is plain field comparison and printing is canonical. There is no
/// floating-point path anywhere; every operation is exact or throws.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw std::domain_error("Rational: zero denominator");
    normalize();
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt &num() const { return num_; }
  const BigInt &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  friend Rational operator-(const Rational &x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero())
      throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational &operator+=(const Rational &x) { return *this = *this + x; }
  Rational &operator-=(const Rational &x) { return *this = *this - x; }
  Rational &operator*=(const Rational &x) { return *this = *this * x; }
  Rational &operator/=(const Rational &x) { return *this = *this / x; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
      return std::strong_ordering::less;
    if (lhs > rhs)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer <= value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && num_ % den_ != 0)
      --q;
    return q;
  }
  /// Smallest integer >= value.
  BigInt ceil() const {
    BigInt q = num_ / den_;
    if (num_ > 0 && num_ % den_ != 0)
      ++q;
    return q;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Canonical form "p/q", with "/q" omitted for integers.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /// Parses "p" or "p/q"; the inverse of str() on canonical output.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_part = slash == std::string_view::npos ? text : text.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (num_part.empty() || den_part.empty())
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    try {
      return Rational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
    } catch (const std::runtime_error &) {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_; // > 0
};

inline Rational rational(long long num, long long den) { return Rational(num, den); }

} // namespace kuga
