// The 320 conics: for each node q_i, the sixteen tropes of the Kummer
// surface X_{p_i}, and on each trope the conjugate pair cut out by
// a2 Q_i +- r Q' with r^2 = -mu a2^2 / Delta.
#pragma once

#include "quartic/geometry.hpp"
#include "quartic/poly.hpp"
#include "quartic/tower.hpp"

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace quartic {

using TPoly = MultiPoly<TowerElement>;
using Plane = std::array<TowerElement, 4>;

TPoly to_tower_poly(const QPoly& f);

// The plane dual to the singular point [r3:r2:r1:1]: r3 x + r2 y + r1 z + w.
Plane trope_from_singular_point(const TowerPoint& s);

struct QPrimeMu {
  TPoly qprime;           // a0 x^2 + a1 y^2 + a2 z^2 + a3 xy + a4 xz + a5 yz
  TowerElement a2;
  TowerElement mu_scaled;  // mu * a2^2 = A_i r1^4 + C_i r1^2 + A_i
  TowerElement mu;
};
// residual is X_{p_i} as returned by residual_surface; s = [r3:r2:r1:1].
QPrimeMu qprime_and_mu(const QPoly& residual, const TowerPoint& s);

struct ConicRecord {
  int node = 0;
  unsigned gamma = 0;  // Gamma mask applied to the seed trope
  int branch = 1;      // sign of the radical in a2 Q_i + branch * r Q'
  Plane plane;
  TPoly quad{4};
};

// The conjugate pair on the trope of s (gamma = 0, branches +1 and -1).
std::array<ConicRecord, 2> conic_pair(const SurfaceParams& p, int i, const TowerPoint& s);

struct NodeConics {
  int node = 0;
  Tower tower;                   // generated by the node's five classes
  std::vector<Rational> classes;
  QPoly residual;
  TowerPoint seed;               // singular point of X_{p_i} behind the seed trope
  QPrimeMu qm;
  TowerElement radical;          // r
  std::vector<ConicRecord> records;  // index 2 * gamma + (branch < 0)
};
NodeConics conics_for_node(const SurfaceParams& p, int i);

// Plane scaled so its last nonzero coefficient is 1; the conic restricted to
// it (eliminating that variable) scaled to leading coefficient 1.
struct CanonicalConic {
  Plane plane;
  TPoly conic{3};
  std::string plane_key() const;
  std::string key() const;
};
CanonicalConic canonical_form(const ConicRecord& c);
CanonicalConic embed(const CanonicalConic& c, const TowerEmbedding& e);
CanonicalConic apply_sign_automorphism(const CanonicalConic& c, const std::vector<int>& signs);

bool verify_conic(const SurfaceParams& p, const ConicRecord& c);

// All conics of the selected nodes, labelled (node - 1) * 32 + 2 * gamma + (branch < 0)
// relative to the nodes present; planes labelled by record label / 2.
struct ConicSet {
  SurfaceParams point{1, 0, 0, 0, 0};
  Tower global;                         // independent subset of the ten global classes
  std::vector<std::size_t> global_basis;
  std::vector<NodeConics> nodes;
  std::vector<CanonicalConic> canonical;  // over `global`, by label
  std::unordered_map<std::string, std::size_t> index;
  std::size_t distinct_planes = 0;

  std::size_t size() const { return canonical.size(); }
  const ConicRecord& record(std::size_t label) const;
};
ConicSet all_conics(const SurfaceParams& p, const std::vector<int>& nodes = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

// Closed-form node-1 tropes over Q(sqrt Delta, sqrt of the nine hyperplane
// forms through q_1): Gamma-orbit of [r0 : r1 : r2 : r3], seed first.
struct Node1Formulas {
  // independent subset of Delta, q+C, q+D, -q-E, p+0, p-0, p+1, p-1, p+2, p-2
  Tower tower;
  std::array<Plane, 16> planes;
};
Node1Formulas node1_plane_formulas(const SurfaceParams& p);
bool projectively_equal(const Plane& a, const Plane& b);
// Do the closed-form planes coincide with the trope planes of node 1?
bool node1_planes_agree(const Node1Formulas& f, const NodeConics& node1);

}  // namespace quartic
