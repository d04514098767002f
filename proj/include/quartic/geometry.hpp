// The quartic family X_p, p = [A:B:C:D:E], and the P^4 side of the picture:
// the Segre cubic Delta = 0, its ten nodes, the fifteen singular
// hyperplanes, and the Kummer correspondences.
#pragma once

#include "quartic/gaussian.hpp"
#include "quartic/poly.hpp"
#include "quartic/tower.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

// Projective point of P^4 stored by its pinned representative: integer
// coordinates, gcd 1, first nonzero coordinate positive.
class SurfaceParams {
 public:
  SurfaceParams(const std::array<Rational, 5>& coords);  // NOLINT
  SurfaceParams(std::initializer_list<long> coords);

  const std::array<Rational, 5>& coords() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  std::vector<Rational> vec() const { return {c_.begin(), c_.end()}; }
  std::string to_string() const;  // "[a,b,c,d,e]"
  bool operator==(const SurfaceParams&) const = default;

 private:
  std::array<Rational, 5> c_;
};

std::array<Rational, 5> pin(const std::array<Rational, 5>& v);
bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b);

// --- hyperplanes -------------------------------------------------------------

enum class Hyperplane : std::uint8_t {
  A, QpC, QmC, QpD, QmD, QpE, QmE, Pp0, Pm0, Pp1, Pm1, Pp2, Pm2, Pp3, Pm3
};
constexpr std::size_t kHyperplanes = 15;

const std::array<Hyperplane, kHyperplanes>& all_hyperplanes();
std::string name(Hyperplane h);                                    // "A", "q+C", ..., "p-3"
std::optional<Hyperplane> hyperplane_from_name(const std::string& s);
const std::array<int, 5>& hyperplane_form(Hyperplane h);
Rational evaluate(Hyperplane h, const SurfaceParams& p);

// A loop row: one of the fifteen hyperplanes, or the Segre cubic itself.
struct LoopTarget {
  std::optional<Hyperplane> hyperplane;  // empty = Delta
  static LoopTarget delta() { return {}; }
  bool is_delta() const { return !hyperplane; }
  std::string name() const { return hyperplane ? quartic::name(*hyperplane) : "Delta"; }
  bool operator==(const LoopTarget&) const = default;
};
std::optional<LoopTarget> loop_target_from_name(const std::string& s);

// --- the family --------------------------------------------------------------

const QPoly& delta_polynomial();  // arity 5
Rational delta(const SurfaceParams& p);
QPoly surface_equation(const SurfaceParams& p);
QPoly family_quartic(const std::array<Rational, 5>& coeffs);  // no pinning
// Read [A..E] back off a quartic; empty if it is not of the family shape.
std::optional<std::array<Rational, 5>> family_coefficients(const QPoly& f);

struct SingularVerdict {
  bool smooth = true;
  bool delta_vanishes = false;
  std::vector<Hyperplane> vanishing;
};
SingularVerdict singular_test(const SurfaceParams& p);
// Throws DegenerateError naming the first vanishing form.
void require_smooth(const SurfaceParams& p);

// --- nodes of the Segre cubic -------------------------------------------------

constexpr int kNodes = 10;
const std::array<Rational, 5>& node(int i);  // 1-based
const QPoly& node_quadric(int i);            // Q_i in x,y,z,w
Rational beta(const SurfaceParams& p, int i);

struct ThirdIntersection {
  SurfaceParams point;
  Rational beta;
};
ThirdIntersection third_intersection(const SurfaceParams& p, int i);
// 4 beta_i X_p - Delta Q_i^2: the member of the family through p_i.
QPoly residual_surface(const SurfaceParams& p, int i);

// --- Gamma as signed permutations ------------------------------------------

// gamma(v)_k = sign[k] * v[perm[k]]
struct SignedPerm {
  std::array<std::uint8_t, 4> perm{0, 1, 2, 3};
  std::array<std::int8_t, 4> sign{1, 1, 1, 1};

  SignedPerm then(const SignedPerm& inner) const;  // this o inner
  template <class T>
  std::array<T, 4> apply(const std::array<T, 4>& v) const {
    std::array<T, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = sign[k] > 0 ? v[perm[k]] : T(0) - v[perm[k]];
    return out;
  }
  template <class T>
  MultiPoly<T> pull_back(const MultiPoly<T>& f) const;  // f o gamma
};

// Bit j of mask selects gamma_{j+1}; the element is the ordered product.
SignedPerm gamma_element(unsigned mask);
std::string gamma_word(unsigned mask);  // "g1g3", "" for the identity
std::optional<unsigned> parse_gamma_word(const std::string& w);

template <class T>
MultiPoly<T> SignedPerm::pull_back(const MultiPoly<T>& f) const {
  std::vector<MultiPoly<T>> forms;
  for (int k = 0; k < 4; ++k) forms.push_back(MultiPoly<T>::variable(4, perm[k]).scaled(T(int(sign[k]))));
  return f.compose(forms);
}

// --- Kummer surfaces ------------------------------------------------------------

using Point3 = std::array<Rational, 4>;
using TowerPoint = std::array<TowerElement, 4>;

std::array<Rational, 5> kummer_coefficients(const Point3& P);  // unpinned
SurfaceParams kummer_from_point(const Point3& P);
bool on_invariant_lines(const Point3& P);

std::array<TowerPoint, 16> singular_points_on_segre(const SurfaceParams& P, const Tower& tower);

// --- invariant lines and Segre planes -----------------------------------------

using HyperplaneTriple = std::array<Hyperplane, 3>;

struct InvariantLinePair {
  unsigned gamma;                         // mask, nonzero
  std::array<std::array<Gaussian, 4>, 2> L;     // basis of L
  std::array<std::array<Gaussian, 4>, 2> Lbar;  // basis of L-bar
  std::array<std::string, 3> printed_plane;      // as tabulated
  HyperplaneTriple segre_plane;                  // determined computationally
};

const std::vector<InvariantLinePair>& invariant_lines_table();
std::array<HyperplaneTriple, 3> segre_plane_decomposition(Hyperplane h);
// All 15 Segre planes, each sorted by hyperplane order.
std::vector<HyperplaneTriple> segre_planes();
// Does X_p, p generic on the plane, have the pair L, L-bar as singular lines?
bool plane_singular_along(const HyperplaneTriple& plane, const InvariantLinePair& lines);

}  // namespace quartic
