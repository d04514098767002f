#include "quartic/tower.hpp"

#include <doctest.h>

using namespace quartic;

namespace {
Tower q2() { return TowerDescriptor::make({2}); }
TowerElement sqrt_of(const Tower& t, std::uint32_t mask) { return TowerElement::monomial(t, mask); }
}  // namespace

TEST_CASE("multiply") {
  auto t = q2();
  TowerElement r2 = sqrt_of(t, 1);
  CHECK((TowerElement(1) + r2) * (TowerElement(1) - r2) == TowerElement(-1));
  auto t23 = TowerDescriptor::make({2, 3});
  TowerElement p = sqrt_of(t23, 1) * sqrt_of(t23, 2);
  CHECK(p.coeff(3) == 1);
  CHECK(p * TowerElement(1) == p);
}

TEST_CASE("invert") {
  auto t = q2();
  TowerElement r2 = sqrt_of(t, 1);
  CHECK(invert(r2) == r2.scaled(Rational(1, 2)));
  CHECK(invert(TowerElement(1) + r2) == TowerElement(-1) + r2);
  CHECK(invert(TowerElement(3)) == TowerElement(Rational(1, 3)));
  CHECK_THROWS_AS(invert(TowerElement(0)), DegenerateError);
}

TEST_CASE("sign automorphisms") {
  auto t = q2();
  TowerElement x = TowerElement(1) + sqrt_of(t, 1);
  CHECK(apply_sign_automorphism(x, {-1}) == TowerElement(1) - sqrt_of(t, 1));
  CHECK(apply_sign_automorphism(x, {1}) == x);
  auto t23 = TowerDescriptor::make({2, 3});
  TowerElement s6 = sqrt_of(t23, 3);
  CHECK(apply_sign_automorphism(s6, {-1, -1}) == s6);
  CHECK(apply_sign_automorphism(s6, {-1, 1}) == -s6);
}

TEST_CASE("tower_sqrt") {
  auto t = q2();
  TowerElement r2 = sqrt_of(t, 1);
  auto s = tower_sqrt(TowerElement(3).in(t) + r2.scaled(2));
  REQUIRE(s);
  CHECK((*s == TowerElement(1) + r2 || *s == -(TowerElement(1) + r2)));
  auto two = tower_sqrt(TowerElement(2).in(t));
  REQUIRE(two);
  CHECK((*two == r2 || *two == -r2));
  CHECK_FALSE(tower_sqrt(TowerElement(3).in(t)).has_value());
  // needs a generator the radicand does not mention: 6 = (sqrt2 sqrt3)^2
  auto t23 = TowerDescriptor::make({2, 3});
  auto six = tower_sqrt(TowerElement(6).in(t23));
  REQUIRE(six);
  CHECK(*six * *six == TowerElement(6));
}

TEST_CASE("embed_rational_sqrt") {
  auto t23 = TowerDescriptor::make({2, 3});
  auto a = embed_rational_sqrt(6, t23);
  REQUIRE(a);
  CHECK(a->coeff(3) * a->coeff(3) == 1);
  auto b = embed_rational_sqrt(8, q2());
  REQUIRE(b);
  CHECK(b->coeff(1) * b->coeff(1) == 4);
  CHECK_FALSE(embed_rational_sqrt(5, t23).has_value());
}

TEST_CASE("descriptors") {
  CHECK_THROWS_AS(TowerDescriptor::make({2, 8}), DegenerateError);
  auto t = TowerDescriptor::make({12, -75});
  CHECK(t->generators() == std::vector<Integer>{3, -3});
}

TEST_CASE("embedding and numeric evaluation") {
  auto small = TowerDescriptor::make({6});
  auto big = TowerDescriptor::make({2, 3});
  TowerEmbedding e(small, big);
  TowerElement x = TowerElement(1) + TowerElement::monomial(small, 1, 5);
  TowerElement y = e(x);
  CHECK(y.coeff(3) * y.coeff(3) == 25);
  auto v = evaluate_numeric(y, {std::sqrt(std::complex<double>(2)), std::sqrt(std::complex<double>(3))});
  CHECK(std::abs(std::abs(v.real() - 1) - 5 * std::sqrt(6.0)) < 1e-9);
  CHECK_THROWS_AS(TowerEmbedding(TowerDescriptor::make({5}), big), DegenerateError);
}
