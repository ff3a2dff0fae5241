#ifndef TES_RATIONAL_HPP
#define TES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tes {

/// Arbitrary-precision rational, kept canonical (reduced, denominator > 0).
/// Equality is structural; there is no floating-point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(const std::string& s);  // "p", "-p" or "p/q"

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Division is provided for completeness of the field Q (used by the
  /// classic-series test oracles); the group algorithms never divide by
  /// anything but 1.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string str() const;  // canonical: "p" when q == 1, else "p/q"

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace tes

#endif
