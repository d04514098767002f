#include "quartic/groups.hpp"

#include <doctest.h>

using namespace quartic;

TEST_CASE("Gamma") {
  auto g = gamma_group();
  CHECK(g.size() == 16);
  for (auto& a : g)
    for (auto& b : g) CHECK(a * b == b * a);
  const auto& phi = phi_generators();
  GroupElement p4sq = phi[3] * phi[3];
  CHECK(p4sq.m3() == gamma_generators()[2].m3());
}

TEST_CASE("Omega") {
  auto r = omega_report();
  CHECK(r.gamma_order == 16);
  CHECK(r.omega_order == 11520);
  CHECK(r.gamma_normal);
  CHECK(r.quotient_order == 720);
  CHECK(r.trivial_centre);
  CHECK(r.quotient_matches_s6_statistics);
}

TEST_CASE("generator actions") {
  const auto& phi = phi_generators();
  CHECK(hyperplane_cycles(action_on_hyperplanes(phi[0])) == "(p+0,p-0)(p+1,p-1)(p+2,p-2)(p+3,p-3)");
  CHECK(node_cycles(action_on_nodes(phi[1])) == "(q1,q2)(q7,q9)(q8,q10)");
  CHECK(hyperplane_cycles(action_on_hyperplanes(phi[4])) == "(A,q+C)(q+D,p+0)(q-D,p-1)(q+E,p-0)(q-E,p+1)(p+2,p-3)");
  CHECK(hyperplane_cycles(Perm::identity(15)) == "()");
}

TEST_CASE("conjugate rule") {
  std::array<unsigned, kHyperplanes> col{};
  col[std::size_t(Hyperplane::QpC)] = 0b0100;
  col[std::size_t(Hyperplane::QpD)] = 0b1000;
  col[std::size_t(Hyperplane::QmE)] = 0b1100;
  const auto& phi2 = phi_generators()[1];
  CHECK(conjugate_rule(phi2, Hyperplane::A, col) == 0);
  CHECK(conjugate_rule(phi2, Hyperplane::QpE, col) == 0b1100);
  auto gam = gamma_group();
  for (auto& phi : phi_generators())
    for (auto& g : gam) CHECK(gamma_mask_of(phi.inverse() * g * phi).has_value());
  for (int i = 1; i <= kNodes; ++i) CHECK(action_on_nodes(transporter(i, 1))(std::uint32_t(i - 1)) == 0);
}
