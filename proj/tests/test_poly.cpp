#include "quartic/geometry.hpp"
#include "quartic/poly.hpp"

#include <doctest.h>

using namespace quartic;

namespace {
Monomial mono(std::initializer_list<int> e) {
  Monomial m{};
  int k = 0;
  for (int v : e) m[k++] = std::uint8_t(v);
  return m;
}
QPoly var(unsigned n, unsigned k) { return QPoly::variable(n, k); }
std::vector<Rational> pt(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("evaluate the Segre cubic") {
  const QPoly& d = delta_polynomial();
  CHECK(d.evaluate(pt({1, 0, -2, -2, 2})) == 0);
  CHECK(d.evaluate(pt({1, 0, 0, 0, 0})) == 16);
  CHECK(d.evaluate(pt({1, 87, 15, 39, 21})) == 47977);
}

TEST_CASE("act_linear") {
  QPoly fermat = family_quartic({1, 0, 0, 0, 0});
  std::vector<std::vector<Rational>> g1{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  CHECK(fermat.act_linear(g1) == fermat);
  QPoly q5 = var(4, 0) * var(4, 1) - var(4, 2) * var(4, 3);
  std::vector<std::vector<Rational>> g4{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  CHECK(q5.act_linear(g4) == -q5);
  std::vector<std::vector<Rational>> id{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(q5.act_linear(id) == q5);
  // composition law
  QPoly f = var(4, 0) * var(4, 0) * var(4, 1) + var(4, 3);
  std::vector<std::vector<Rational>> M{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 3}, {0, 0, 0, 1}};
  std::vector<std::vector<Rational>> N{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}};
  std::vector<std::vector<Rational>> NM(4, std::vector<Rational>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) NM[a][b] += N[a][c] * M[c][b];
  CHECK(f.act_linear(M).act_linear(N) == f.act_linear(NM));
}

TEST_CASE("exact_divide") {
  QPoly x = var(4, 0), y = var(4, 1);
  auto q = (x * x - y * y).exact_divide(x - y);
  REQUIRE(q);
  CHECK(*q == x + y);
  CHECK_FALSE((x * x + y * y).exact_divide(x - y).has_value());
  QPoly one = QPoly::constant(4, 1);
  CHECK(*(x * y).exact_divide(one) == x * y);
}

TEST_CASE("restrict_to_plane") {
  QPoly x = var(4, 0), z = var(4, 2), w = var(4, 3);
  QPoly f = x * x + w * w;
  auto r = f.restrict_to_plane(pt({0, 0, 1, 1}));
  CHECK(r == var(3, 0) * var(3, 0) + var(3, 2) * var(3, 2));
  std::vector<Rational> plane = pt({3, 5, 7, 1});
  CHECK(w.restrict_to_plane(plane) == -(var(3, 0).scaled(3) + var(3, 1).scaled(5) + var(3, 2).scaled(7)));
  QPoly qp = x * z + z * z;  // no w terms
  CHECK(qp.restrict_to_plane(plane) == var(3, 0) * var(3, 2) + var(3, 2) * var(3, 2));
}

TEST_CASE("restrict_to_line") {
  auto cubic = delta_polynomial().restrict_to_line(pt({1, 0, 0, 0, 0}), pt({1, 0, -2, -2, 2}));
  // double root at s = 0 (the node), simple root elsewhere
  CHECK(cubic.coeff(mono({0, 3})) == 0);
  CHECK(cubic.coeff(mono({1, 2})) == 0);
  CHECK(cubic.coeff(mono({3, 0})) == 16);
  CHECK_THROWS(delta_polynomial().restrict_to_line(pt({1, 2, 3, 4, 5}), pt({2, 4, 6, 8, 10})));
  auto a = QPoly::variable(5, 0).restrict_to_line(pt({1, 0, 0, 0, 0}), pt({0, 1, 0, 0, 0}));
  CHECK(a == QPoly::variable(2, 0));
}

TEST_CASE("gradient") {
  QPoly x4 = var(4, 0) * var(4, 0) * var(4, 0) * var(4, 0);
  auto g = x4.gradient();
  CHECK(g[0] == (var(4, 0) * var(4, 0) * var(4, 0)).scaled(4));
  CHECK(g[1].is_zero());
  auto gf = family_quartic({1, 0, 0, 0, 0}).gradient();
  CHECK(gf[0].evaluate(pt({1, 0, 0, 0})) == 4);
  CHECK(gf[3].evaluate(pt({1, 0, 0, 0})) == 0);
}
