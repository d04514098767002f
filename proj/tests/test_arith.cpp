#include "quartic/arith.hpp"

#include <doctest.h>

using namespace quartic;

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Rational(18)).value() == 2);
  CHECK(squarefree_part(Rational(-12)).value() == -3);
  CHECK(squarefree_part(Rational(1)).is_trivial());
  CHECK(squarefree_part(Rational(8, 27)).value() == 6);  // 8/27 = 6 * (2/9)^2
  CHECK_THROWS(squarefree_part(Rational(0)));
}

TEST_CASE("square class rank") {
  CHECK(square_class_rank({2, 3, 6}).rank == 2);
  CHECK(square_class_rank({4, 9}).rank == 0);
  CHECK(square_class_rank({-1}).rank == 1);
  auto r = square_class_rank({4, 2, 8, 3});
  CHECK(r.rank == 2);
  CHECK(r.basis_indices == std::vector<std::size_t>{1, 3});
}

TEST_CASE("class in span") {
  CHECK(class_in_span(6, {2, 3}) == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(class_in_span(5, {2, 3}).has_value());
  CHECK(class_in_span(36, {2}) == std::vector<std::size_t>{});
  CHECK(class_in_span(Rational(-3, 4), {-1, 3}) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("factorization and square roots") {
  auto f = factor(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned>{2, 3});
  CHECK(f[2] == std::pair<Integer, unsigned>{5, 1});
  Integer p1("1000003"), p2("1000033");  // beyond trial division
  auto g = factor(p1 * p2);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == p1);
  CHECK(integer_sqrt(Integer(144)) == Integer(12));
  CHECK_FALSE(integer_sqrt(Integer(145)).has_value());
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
