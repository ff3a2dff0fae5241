#include "tes/ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tes {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.terms_.push_back({Monomial{{name, 1}}, Rational(1)});
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.empty() && terms_[0].second.is_one();
}

Poly Poly::from_terms(std::vector<std::pair<Monomial, Rational>> raw) {
  std::map<Monomial, Rational> acc;
  for (auto& [m, c] : raw) {
    Monomial ms = m;
    std::sort(ms.begin(), ms.end());
    acc[std::move(ms)] += c;
  }
  Poly out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.push_back({m, -c});
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<std::pair<Monomial, Rational>> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return Poly::from_terms(std::move(raw));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].first, a[i].second + b[j].second});
      ++i, ++j;
    }
  }
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<std::pair<Monomial, Rational>> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) raw.push_back({mono_mul(ma, mb), ca * cb});
  return Poly::from_terms(std::move(raw));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.empty()) {
      os << c.str();
      continue;
    }
    bool printed = false;
    if (!c.is_one()) {
      os << c.str();
      printed = true;
    }
    for (const auto& [v, e] : m) {
      if (printed) os << "*";
      os << v;
      if (e != 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

bool RingValue::is_zero() const {
  if (is_rational()) return std::get<Rational>(v_).is_zero();
  return std::get<Poly>(v_).is_zero();
}

bool RingValue::is_one() const {
  if (is_rational()) return std::get<Rational>(v_).is_one();
  return std::get<Poly>(v_).is_one();
}

const Rational& RingValue::rational() const {
  if (!is_rational()) throw std::invalid_argument("RingValue: not a rational");
  return std::get<Rational>(v_);
}

Poly RingValue::poly() const {
  if (is_rational()) return Poly(std::get<Rational>(v_));
  return std::get<Poly>(v_);
}

void RingValue::demote() {
  if (!is_rational()) {
    const Poly& p = std::get<Poly>(v_);
    if (p.is_zero()) {
      v_ = Rational(0);
    } else if (p.terms().size() == 1 && p.terms()[0].first.empty()) {
      Rational c = p.terms()[0].second;  // copy out before the variant reuses the slot
      v_ = std::move(c);
    }
  }
}

RingValue RingValue::operator-() const {
  if (is_rational()) return RingValue(-std::get<Rational>(v_));
  return RingValue(-std::get<Poly>(v_));
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  if (a.is_rational() && b.is_rational()) return RingValue(a.rational() + b.rational());
  return RingValue(a.poly() + b.poly());
}

RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

RingValue operator*(const RingValue& a, const RingValue& b) {
  if (a.is_rational() && b.is_rational()) return RingValue(a.rational() * b.rational());
  return RingValue(a.poly() * b.poly());
}

bool operator==(const RingValue& a, const RingValue& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  return a.poly() == b.poly();
}

std::string RingValue::str() const {
  if (is_rational()) return std::get<Rational>(v_).str();
  return std::get<Poly>(v_).str();
}

std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.str(); }

}  // namespace tes
