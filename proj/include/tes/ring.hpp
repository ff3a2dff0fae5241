#ifndef TES_RING_HPP
#define TES_RING_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tes/rational.hpp"

namespace tes {

/// Commutative monomial: variable name -> positive exponent, kept sorted.
using Monomial = std::vector<std::pair<std::string, int>>;

/// Multivariate polynomial over Q in canonical form: monomials sorted
/// lexicographically, no zero coefficients. The empty monomial is the
/// constant term.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  static Poly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

  /// Builds a canonical polynomial out of an arbitrary term list.
  static Poly from_terms(std::vector<std::pair<Monomial, Rational>> raw);

 private:
  std::vector<std::pair<Monomial, Rational>> terms_;
};

/// Exact coefficient: a rational or a commutative polynomial over Q.
/// Mixed arithmetic promotes the rational to a constant polynomial.
class RingValue {
 public:
  RingValue() : v_(Rational(0)) {}
  RingValue(Rational q) : v_(std::move(q)) {}        // NOLINT
  RingValue(long n) : v_(Rational(n)) {}             // NOLINT
  RingValue(Poly p) : v_(std::move(p)) { demote(); }  // NOLINT

  static RingValue variable(const std::string& name) { return RingValue(Poly::variable(name)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const;
  bool is_one() const;
  const Rational& rational() const;  // throws unless is_rational()
  Poly poly() const;                 // promoted view

  RingValue operator-() const;
  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue& operator+=(const RingValue& o) { return *this = *this + o; }
  RingValue& operator-=(const RingValue& o) { return *this = *this - o; }
  RingValue& operator*=(const RingValue& o) { return *this = *this * o; }
  friend bool operator==(const RingValue& a, const RingValue& b);
  friend bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

  std::string str() const;

 private:
  void demote();  // constant Poly collapses back to Rational
  std::variant<Rational, Poly> v_;
};

std::ostream& operator<<(std::ostream& os, const RingValue& v);

}  // namespace tes

#endif
