#include <doctest.h>

#include <stdexcept>

#include <random>

#include "tes/json_io.hpp"

using namespace tes;
using nlohmann::json;

TEST_CASE("ring JSON round trip") {
  RingValue q(Rational(5, 6));
  CHECK(ring_from_json(ring_to_json(q)) == q);
  RingValue p = RingValue::variable("a") * RingValue::variable("d") +
                RingValue::variable("b") * RingValue::variable("c");
  CHECK(ring_from_json(ring_to_json(p)) == p);
  CHECK(ring_to_json(q).get<std::string>() == "5/6");
  CHECK(ring_from_json(json::parse("\"-3/9\"")) == RingValue(Rational(-1, 3)));
}

TEST_CASE("series JSON schema and round trip") {
  GradedSeries s = identity_diffeo(OperadId::Dup, 2);
  s.set_coeff(MonoidElement{OperadId::Dup, parse_tree("v/v"), 0}, RingValue::variable("a"));
  json j = series_to_json(s);
  CHECK(j["carrier"] == "operad");
  CHECK(j["instance"] == "dup");
  CHECK(j["truncation"] == 2);
  CHECK(j["p2"].is_null());
  CHECK(series_from_json(j) == s);

  GradedSeries m = unit_series(carrier_over_monoid(), 3);
  m.set_coeff(MonoidElement{OperadId::Dup, parse_tree("v"), 0}, RingValue(Rational(1, 2)));
  json jm = series_to_json(m);
  CHECK(jm["carrier"] == "monoid");
  CHECK(jm["p2"] == "over");
  CHECK(series_from_json(jm) == m);
  // terms sorted canonically: neutral first
  CHECK(jm["terms"][0]["key"] == "0");

  GradedSeries a = unit_series(carrier_as_monoid(), 2);
  a.set_coeff(MonoidElement{OperadId::As, 2, 0}, RingValue(3));
  CHECK(series_from_json(series_to_json(a)) == a);
}

TEST_CASE("randomized ring value round trips") {
  std::mt19937_64 rng(42);
  const char* vars[] = {"a", "b", "c", "x1", "long_name"};
  for (int it = 0; it < 200; ++it) {
    RingValue v(Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 5)));
    for (int t = 0; t < 3; ++t) {
      RingValue mono(Rational(static_cast<long>(rng() % 7) - 3));
      for (int k = 0; k < static_cast<int>(rng() % 3); ++k)
        mono *= RingValue::variable(vars[rng() % 5]);
      v += mono;
    }
    CHECK(ring_from_json(ring_to_json(v)) == v);
  }
}

TEST_CASE("randomized series round trips") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 40; ++it) {
    GradedSeries s(it % 2 ? carrier_over_monoid() : Carrier::operad(OperadId::Dup),
                   1 + static_cast<int>(rng() % 5));
    if (it % 2) s.set_coeff(MonoidElement::neutral(OperadId::Dup), RingValue(1));
    for (int d = it % 2 ? 1 : 0; d <= s.truncation(); ++d) {
      const std::vector<TreeId>& ts = trees_of_order(it % 2 ? d : d + 1);
      for (TreeId t : ts)
        if (rng() % 2)
          s.set_coeff(MonoidElement{OperadId::Dup, t, 0},
                      RingValue(Rational(static_cast<long>(rng() % 7) - 3)));
    }
    if (!(it % 2)) s.set_coeff(MonoidElement{OperadId::Dup, tree_vtx(), 0}, RingValue(1));
    CHECK(series_from_json(series_to_json(s)) == s);
  }
}

TEST_CASE("malformed series documents are rejected") {
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"carrier":"monoid","instance":"dup",
      "p2":null,"truncation":2,"terms":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"carrier":"monoid","instance":"dias",
      "p2":null,"truncation":2,"terms":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"carrier":"operad","instance":"dup",
      "truncation":1,"terms":[{"key":"1110000","coeff":"1"}]})")),
                  std::invalid_argument);  // shifted grading 2 exceeds truncation 1
}

TEST_CASE("tensor JSON") {
  Tensor2 t = coprod_dif(parse_tree("v/v/v"));
  json j = tensor_to_json(t);
  REQUIRE(j.size() == 3);
  // sorted by grading of the left leg: empty word first
  CHECK(j[0]["left"].empty());
  CHECK(j[0]["right"][0] == "1110000");
  CHECK(j[1]["q"] == "2");
  FreeElement s = antipode(AlgebraKind{HopfFamily::Sym, true}, 2);
  json js = free_element_to_json(s);
  CHECK(js.size() == 2);
}
