#include "quartic/conics.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace quartic;

namespace {
Monomial mono(std::initializer_list<int> e) {
  Monomial m{};
  int k = 0;
  for (int v : e) m[k++] = std::uint8_t(v);
  return m;
}

const ConicSet& sample_set() {
  static const ConicSet s = all_conics({1, 87, 15, 39, 21});
  return s;
}
}  // namespace

TEST_CASE("trope from a singular point") {
  Plane t = trope_from_singular_point({TowerElement(1), TowerElement(1), TowerElement(1), TowerElement(1)});
  for (auto& c : t) CHECK(c == TowerElement(1));
  Plane w = trope_from_singular_point({TowerElement(0), TowerElement(0), TowerElement(0), TowerElement(1)});
  CHECK(w[0].is_zero());
  CHECK(w[3] == TowerElement(1));
}

TEST_CASE("Q' and mu over the rational Kummer oracle") {
  SurfaceParams K = kummer_from_point({1, 2, 3, 4});
  QPoly X = surface_equation(K);
  auto pts = singular_points_on_segre(K, TowerDescriptor::make({}));
  for (auto& s : pts) {
    if (s[3].is_zero()) continue;
    TowerElement inv = invert(s[3]);
    TowerPoint n{s[0] * inv, s[1] * inv, s[2] * inv, TowerElement(1)};
    auto qm = qprime_and_mu(X, n);  // throws unless X - mu Q'^2 is divisible by the trope
    for (auto& [m, c] : qm.qprime.terms()) CHECK(m[3] == 0);
    // a4 / a3 = r1 / r2 and a5 / a3 = r1 / r3
    TowerElement a3 = qm.qprime.coeff(mono({1, 1, 0, 0})), a4 = qm.qprime.coeff(mono({1, 0, 1, 0})),
                 a5 = qm.qprime.coeff(mono({0, 1, 1, 0}));
    if (!a3.is_zero()) {
      CHECK(a4 * n[1] == a3 * n[2]);
      CHECK(a5 * n[0] == a3 * n[2]);
    }
  }
}

TEST_CASE("node 1 at the sample point") {
  SurfaceParams p{1, 87, 15, 39, 21};
  NodeConics nc = conics_for_node(p, 1);
  CHECK(nc.records.size() == 32);
  for (auto& r : nc.records) CHECK(verify_conic(p, r));
  auto pair = conic_pair(p, 1, nc.seed);
  CHECK(pair[0].branch == 1);
  CHECK(pair[1].branch == -1);
  // a perturbed record fails
  ConicRecord bad = nc.records[0];
  bad.quad.add_term(mono({1, 0, 0, 1}), TowerElement(1));
  CHECK_FALSE(verify_conic(p, bad));
  // the plane set is Gamma-stable
  std::set<std::string> planes;
  for (auto& r : nc.records) planes.insert(canonical_form(r).plane_key());
  for (auto& r : nc.records)
    for (unsigned m = 0; m < 16; ++m) {
      ConicRecord g = r;
      g.plane = gamma_element(m).apply(r.plane);
      CHECK(planes.count(canonical_form(g).plane_key()) == 1);
    }
}

TEST_CASE("all 320 conics") {
  const ConicSet& s = sample_set();
  CHECK(s.size() == 320);
  CHECK(s.distinct_planes == 160);
  std::map<std::string, std::vector<std::size_t>> by_plane;
  for (std::size_t l = 0; l < s.size(); ++l) by_plane[s.canonical[l].plane_key()].push_back(l);
  for (auto& [k, ls] : by_plane) {
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] / 2 == ls[1] / 2);  // the two conics on a plane are a conjugate pair
  }
}

TEST_CASE("closed-form node 1 planes") {
  SurfaceParams p{1, 87, 15, 39, 21};
  auto f = node1_plane_formulas(p);
  CHECK(node1_planes_agree(f, sample_set().nodes[0]));
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) CHECK_FALSE(projectively_equal(f.planes[a], f.planes[b]));
}

TEST_CASE("degenerate input") {
  CHECK_THROWS_AS(conics_for_node({1, 0, -2, 0, 0}, 1), DegenerateError);
}
