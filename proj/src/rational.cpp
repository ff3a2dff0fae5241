#include "tes/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tes {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  try {
    mpq_class v(s, 10);
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational: malformed '" + s + "'");
  }
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace tes
