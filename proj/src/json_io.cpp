#include "tes/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace tes {

using nlohmann::json;

json ring_to_json(const RingValue& v) {
  if (v.is_rational()) return v.rational().str();
  json arr = json::array();
  Poly p = v.poly();
  for (const auto& [m, q] : p.terms()) {
    json vars = json::object();
    for (const auto& [name, e] : m) vars[name] = e;
    arr.push_back({{"vars", vars}, {"q", q.str()}});
  }
  return arr;
}

RingValue ring_from_json(const json& j) {
  if (j.is_string()) return RingValue(Rational::parse(j.get<std::string>()));
  if (j.is_number_integer()) return RingValue(Rational(j.get<long>()));
  if (!j.is_array()) throw std::invalid_argument("ring value: expected string or term list");
  std::vector<std::pair<Monomial, Rational>> raw;
  for (const json& term : j) {
    Monomial m;
    for (const auto& [name, e] : term.at("vars").items()) {
      int exp = e.get<int>();
      if (exp <= 0) throw std::invalid_argument("ring value: exponents must be positive");
      m.push_back({name, exp});
    }
    raw.push_back({std::move(m), Rational::parse(term.at("q").get<std::string>())});
  }
  return RingValue(Poly::from_terms(std::move(raw)));
}

namespace {

std::string key_to_string(const Carrier& c, const MonoidElement& k) {
  if (c.inst == OperadId::Dup) return tree_code(k.tree());
  if (c.inst == OperadId::As)
    return std::to_string(c.kind == CarrierKind::Monoid ? k.grading() : k.element().arity());
  throw std::invalid_argument("series JSON: dias series have no wire format");
}

MonoidElement key_from_string(const Carrier& c, const std::string& s) {
  if (c.inst == OperadId::Dup) {
    TreeId t;
    try {
      t = parse_tree(s);
    } catch (const TreeParseError& e) {
      throw std::invalid_argument("series key '" + s + "': " + e.message);
    }
    return MonoidElement{OperadId::Dup, t, 0};
  }
  if (c.inst == OperadId::As) {
    int n = std::stoi(s);
    if (n < 0) throw std::invalid_argument("series key: negative grading");
    return MonoidElement{OperadId::As, n, 0};
  }
  throw std::invalid_argument("series JSON: dias series have no wire format");
}

}  // namespace

json series_to_json(const GradedSeries& s) {
  json j;
  j["carrier"] = s.carrier().kind == CarrierKind::Monoid ? "monoid" : "operad";
  j["instance"] = operad_name(s.carrier().inst);
  if (s.carrier().p2 && s.carrier().inst == OperadId::Dup)
    j["p2"] = *s.carrier().p2 == dup_over_generator() ? "over" : "under";
  else
    j["p2"] = nullptr;
  j["truncation"] = s.truncation();
  json terms = json::array();
  for (const auto& [k, v] : s.sorted_terms())
    terms.push_back({{"key", key_to_string(s.carrier(), k)}, {"coeff", ring_to_json(v)}});
  j["terms"] = std::move(terms);
  return j;
}

GradedSeries series_from_json(const json& j) {
  std::string kind = j.at("carrier").get<std::string>();
  if (kind != "monoid" && kind != "operad")
    throw std::invalid_argument("series JSON: carrier must be monoid or operad");
  OperadId inst = operad_from_name(j.at("instance").get<std::string>());
  Carrier c;
  if (kind == "monoid") {
    OperadElement p2;
    if (inst == OperadId::Dup) {
      if (!j.contains("p2") || j.at("p2").is_null())
        throw std::invalid_argument("series JSON: dup monoid series need p2 over|under");
      std::string side = j.at("p2").get<std::string>();
      if (side == "over")
        p2 = dup_over_generator();
      else if (side == "under")
        p2 = dup_under_generator();
      else
        throw std::invalid_argument("series JSON: p2 must be over or under");
    } else if (inst == OperadId::As) {
      p2 = OperadElement{OperadId::As, 2, 0};
    } else {
      throw std::invalid_argument("series JSON: dias series have no wire format");
    }
    c = Carrier::monoid(inst, p2);
  } else {
    c = Carrier::operad(inst);
  }
  GradedSeries s(c, j.at("truncation").get<int>());
  for (const json& term : j.at("terms")) {
    MonoidElement k = key_from_string(c, term.at("key").get<std::string>());
    s.add_coeff(k, ring_from_json(term.at("coeff")));
  }
  return s;
}

namespace {

std::string gen_code(AlgebraKind k, Gen g) { return gen_str(k, g); }

json word_to_json(AlgebraKind k, const Word& w) {
  json arr = json::array();
  for (Gen g : w) arr.push_back(gen_code(k, g));
  return arr;
}

// Canonical content order for display: by grading, then rendered code.
bool word_out_less(AlgebraKind k, const Word& a, const Word& b) {
  int ga = word_grading(k, a), gb = word_grading(k, b);
  if (ga != gb) return ga < gb;
  return word_str(k, a) < word_str(k, b);
}

}  // namespace

json tensor_to_json(const Tensor2& t) {
  std::vector<std::pair<std::pair<Word, Word>, Rational>> items(t.terms().begin(),
                                                                t.terms().end());
  std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
    if (x.first.first != y.first.first)
      return word_out_less(t.left_kind(), x.first.first, y.first.first);
    return word_out_less(t.right_kind(), x.first.second, y.first.second);
  });
  json arr = json::array();
  for (const auto& [wz, c] : items)
    arr.push_back({{"left", word_to_json(t.left_kind(), wz.first)},
                   {"right", word_to_json(t.right_kind(), wz.second)},
                   {"q", c.str()}});
  return arr;
}

json free_element_to_json(const FreeElement& x) {
  std::vector<std::pair<Word, Rational>> items(x.terms().begin(), x.terms().end());
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    return word_out_less(x.kind(), a.first, b.first);
  });
  json arr = json::array();
  for (const auto& [w, c] : items)
    arr.push_back({{"word", word_to_json(x.kind(), w)}, {"q", c.str()}});
  return arr;
}

}  // namespace tes
