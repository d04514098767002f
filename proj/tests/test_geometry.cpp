#include "quartic/geometry.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace quartic;

namespace {
Monomial mono(std::initializer_list<int> e) {
  Monomial m{};
  int k = 0;
  for (int v : e) m[k++] = std::uint8_t(v);
  return m;
}
}  // namespace

TEST_CASE("surface equation") {
  QPoly f = surface_equation({1, 0, 0, 0, 0});
  CHECK(f.terms().size() == 4);
  CHECK(f.coeff(mono({0, 0, 0, 4})) == 1);
  QPoly g = surface_equation({0, 1, 0, 0, 0});
  CHECK(g.terms().size() == 1);
  CHECK(g.coeff(mono({1, 1, 1, 1})) == 1);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    std::array<Rational, 5> c;
    for (auto& x : c) x = long(rng() % 41) - 20;
    c[0] = 1;
    QPoly X = surface_equation(SurfaceParams(c));
    for (unsigned m = 0; m < 16; ++m) CHECK(gamma_element(m).pull_back(X) == X);
  }
}

TEST_CASE("delta and singular test") {
  CHECK(delta({1, 0, -2, -2, 2}) == 0);
  CHECK(delta({1, 0, 0, 0, 0}) == 16);
  CHECK(delta({1, 87, 15, 39, 21}) == 47977);
  CHECK(singular_test({1, 0, 0, 0, 0}).smooth);
  SurfaceParams s{1, 87, 15, 39, 21};
  CHECK(singular_test(s).smooth);
  CHECK(evaluate(Hyperplane::QpC, s) == 17);
  CHECK(evaluate(Hyperplane::Pp0, s) == 241);
  CHECK(evaluate(Hyperplane::Pm1, s) == -173);
  CHECK(evaluate(Hyperplane::Pp3, s) == 25);
  auto v = singular_test({0, 2, 1, 0, 0});
  CHECK_FALSE(v.smooth);
  CHECK(v.delta_vanishes);
  CHECK_THROWS_AS(require_smooth({1, 0, -2, 0, 0}), DegenerateError);
}

TEST_CASE("nodes") {
  for (int i = 1; i <= kNodes; ++i) {
    SurfaceParams q(node(i));
    CHECK(delta(q) == 0);
    for (auto& g : delta_polynomial().gradient()) CHECK(g.evaluate(q.vec()) == 0);
  }
}

TEST_CASE("kummer_from_point") {
  auto c = kummer_coefficients({1, 2, 3, 4});
  CHECK(c[0] == -154000);
  SurfaceParams K = kummer_from_point({1, 2, 3, 4});
  CHECK(delta(K) == 0);
  CHECK_THROWS_AS(kummer_from_point({1, 1, 2, 2}), DegenerateError);
}

TEST_CASE("third intersection and residual") {
  auto t = third_intersection({1, 0, 0, 0, 0}, 1);
  CHECK(t.point == SurfaceParams({1, 0, 1, 1, -1}));
  CHECK(t.beta == 12);
  CHECK_THROWS_AS(third_intersection({1, 0, -2, -2, 2}, 2), DegenerateError);
  auto c = family_coefficients(residual_surface({1, 0, 0, 0, 0}, 1));
  REQUIRE(c);
  CHECK(projectively_equal({c->begin(), c->end()}, {1, 0, 1, 1, -1}));
  // beta_i = grad Delta(p) . q_i / 4
  SurfaceParams p{3, -5, 7, 2, 11};
  auto grad = delta_polynomial().gradient();
  for (int i = 1; i <= kNodes; ++i) {
    Rational s = 0;
    for (int k = 0; k < 5; ++k) s += grad[k].evaluate(p.vec()) * node(i)[k];
    CHECK(beta(p, i) == s / 4);
  }
}

TEST_CASE("singular points on the Segre cubic") {
  for (Point3 P : {Point3{1, 2, 3, 4}, Point3{1, 3, 5, 7}}) {
    SurfaceParams K = kummer_from_point(P);
    auto pts = singular_points_on_segre(K, TowerDescriptor::make({}));
    for (unsigned m = 0; m < 16; ++m) {
      auto g = gamma_element(m).apply(P);
      bool found = false;
      for (auto& s : pts) {
        std::vector<Rational> sv;
        for (auto& x : s) sv.push_back(x.rational_part());
        found = found || projectively_equal(sv, {g.begin(), g.end()});
      }
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(singular_points_on_segre({1, 0, -2, 0, 0}, TowerDescriptor::make({})), DegenerateError);
}

TEST_CASE("invariant lines and Segre planes") {
  const auto& tab = invariant_lines_table();
  REQUIRE(tab.size() == 15);
  CHECK(tab[0].gamma == 1);
  CHECK(tab[0].printed_plane[0] == "q+C");
  CHECK(segre_planes().size() == 15);
  auto d = segre_plane_decomposition(Hyperplane::QpC);
  std::set<HyperplaneTriple> got(d.begin(), d.end());
  using H = Hyperplane;
  std::set<HyperplaneTriple> want{{H::A, H::QpC, H::QmC}, {H::QpC, H::Pp0, H::Pm1}, {H::QpC, H::Pm0, H::Pp1}};
  CHECK(got == want);
  for (auto& t : segre_plane_decomposition(H::A)) CHECK(t[0] == H::A);
}

TEST_CASE("Gamma words") {
  CHECK(gamma_word(0b0101) == "g1g3");
  CHECK(parse_gamma_word("g2g4") == 0b1010u);
  CHECK(parse_gamma_word("") == 0u);
  CHECK_FALSE(parse_gamma_word("g3g1").has_value());
  CHECK(loop_target_from_name("Delta")->is_delta());
  CHECK(loop_target_from_name("p-2")->hyperplane == Hyperplane::Pm2);
}
