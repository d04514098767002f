// Projective matrix groups acting on P^3 x P^4: Gamma (order 16) inside
// Omega (order 11520), and their induced permutations.
#pragma once

#include "quartic/gaussian.hpp"
#include "quartic/geometry.hpp"
#include "quartic/perm.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

using Mat3 = std::array<std::array<Gaussian, 4>, 4>;   // acts on [x,y,z,w]
using Mat4 = std::array<std::array<Rational, 5>, 5>;   // acts on [A,B,C,D,E]

// A pair of matrices up to independent scalars. Stored normalized so that the
// first nonzero entry of each matrix is 1; equality is then entrywise.
class GroupElement {
 public:
  GroupElement();  // identity
  GroupElement(const Mat3& m3, const Mat4& m4);

  const Mat3& m3() const { return m3_; }
  const Mat4& m4() const { return m4_; }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);  // a after b
  GroupElement inverse() const;
  bool is_identity() const;
  bool p3_is_identity() const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.m3_ == b.m3_ && a.m4_ == b.m4_;
  }
  const std::string& key() const { return key_; }

  std::array<Gaussian, 4> apply(const std::array<Gaussian, 4>& P) const;
  std::array<Rational, 5> apply(const std::array<Rational, 5>& p) const;

 private:
  void normalize();
  Mat3 m3_;
  Mat4 m4_;
  std::string key_;
};

GroupElement from_signed_perm(const SignedPerm& g);  // P^4 part trivial

const std::array<GroupElement, 5>& phi_generators();   // phi_1..phi_5
const std::array<GroupElement, 4>& gamma_generators(); // gamma_1..gamma_4
std::vector<GroupElement> gamma_group();
const std::vector<GroupElement>& omega_group();        // computed once, cached

// Which element of Gamma (as a generator mask) has this P^3 part, if any.
std::optional<unsigned> gamma_mask_of(const GroupElement& g);

Perm action_on_hyperplanes(const GroupElement& g);  // on the 15, in Hyperplane order
Perm action_on_nodes(const GroupElement& g);        // on nodes, 0-based

// Cycle notation with names: "(p+0,p-0)(q+D,q+E)", "(q5,q6)"; "()" if trivial.
std::string hyperplane_cycles(const Perm& p);
std::string node_cycles(const Perm& p);

struct OmegaReport {
  std::size_t gamma_order = 0;
  bool gamma_abelian = false;
  bool gamma_involutions = false;
  std::size_t omega_order = 0;
  bool gamma_normal = false;
  std::size_t quotient_order = 0;
  bool trivial_centre = false;
  std::size_t hyperplane_image_order = 0;
  bool gamma_in_kernel = false;
  std::map<std::size_t, std::size_t> quotient_element_orders;  // on the nodes
  bool quotient_matches_s6_statistics = false;
};
OmegaReport omega_report();

// phi^-1 gamma_{phi(H)} phi for phi taking the target node to q_1.
// table_q1 maps each hyperplane to a Gamma mask (0 for an empty cell).
unsigned conjugate_rule(const GroupElement& phi, Hyperplane H, const std::array<unsigned, kHyperplanes>& table_q1);

// Some element of Omega carrying node `from` to node `to` (1-based).
const GroupElement& transporter(int from, int to);

}  // namespace quartic
