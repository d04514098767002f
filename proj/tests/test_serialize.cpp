#include "quartic/serialize.hpp"

#include <doctest.h>

using namespace quartic;

TEST_CASE("tower elements") {
  auto t = TowerDescriptor::make({2, -3});
  TowerElement x = TowerElement(Rational(1, 2)).in(t) + TowerElement::monomial(t, 3, -7);
  json j = tower_to_json(x);
  CHECK(j["generators"] == json::array({2, -3}));
  CHECK(j["coords"]["0"] == "1/2");
  CHECK(j["coords"]["3"] == "-7");
  TowerCache cache;
  CHECK(tower_from_json(j, cache) == x);
  CHECK(tower_from_json(tower_to_json(TowerElement(5)), cache) == TowerElement(5));
  json bad = j;
  bad["coords"]["4"] = "1";
  CHECK_THROWS(tower_from_json(bad, cache));
}

TEST_CASE("monomials") {
  Monomial m{2, 0, 1, 1};
  CHECK(monomial_name(m, 4) == "x^2*z*w");
  CHECK(parse_monomial("x^2*z*w") == m);
  CHECK(parse_monomial("1") == Monomial{});
  CHECK_THROWS(parse_monomial("q"));
}

TEST_CASE("conic documents round-trip") {
  SurfaceParams p{1, 87, 15, 39, 21};
  NodeConics nc = conics_for_node(p, 3);
  TowerCache cache;
  for (auto& r : nc.records) {
    ConicDocument d = to_document(p, r, true);
    json j = conic_to_json(d);
    CHECK(j["node"] == 3);
    CHECK(j["plane"].size() == 4);
    ConicDocument back = conic_from_json(json::parse(j.dump()), cache);
    CHECK(back == d);
    CHECK(conic_to_json(back) == j);
  }
}

TEST_CASE("output order and envelope") {
  auto set = all_conics({1, 87, 15, 39, 21}, {2, 1});
  auto order = output_order(set);
  REQUIRE(order.size() == 64);
  CHECK(set.record(order.front()).node == 1);
  CHECK(set.record(order[15]).branch == 1);
  CHECK(set.record(order[16]).branch == -1);
  CHECK(set.record(order.back()).node == 2);
  json e = envelope("groups", 42);
  CHECK(e["schema"] == "quartic-conics/1");
  CHECK(e["seed"] == 42);
}
