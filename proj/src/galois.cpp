#include "quartic/galois.hpp"

#include <algorithm>

namespace quartic {

namespace {

using H = Hyperplane;

ClassProduct cp(int sign, std::initializer_list<H> f) { return {sign, std::vector<H>(f)}; }

std::vector<Rational> evaluate_all(const auto& products, const SurfaceParams& p) {
  std::vector<Rational> out;
  for (auto& c : products) out.push_back(c.evaluate(p));
  return out;
}

}  // namespace

Rational ClassProduct::evaluate(const SurfaceParams& p) const {
  Rational v = sign * delta(p);
  if (sgn(v) == 0) throw DegenerateError("class " + to_string() + " vanishes: Delta = 0");
  for (auto h : factors) {
    Rational f = quartic::evaluate(h, p);
    if (sgn(f) == 0) throw DegenerateError("class " + to_string() + " vanishes: " + name(h) + " = 0");
    v *= f;
  }
  return v;
}

bool ClassProduct::contains(const LoopTarget& t) const {
  if (t.is_delta()) return true;
  return std::count(factors.begin(), factors.end(), *t.hyperplane) % 2 == 1;
}

std::string ClassProduct::to_string() const {
  std::string s = sign < 0 ? "-Delta" : "Delta";
  for (auto h : factors) s += "*" + name(h);
  return s;
}

const std::array<ClassProduct, 5>& node_class_products(int i) {
  static const std::array<std::array<ClassProduct, 5>, kNodes> lists{{
      {cp(1, {H::QpC, H::Pm0, H::Pp1}), cp(1, {H::QpC, H::Pp0, H::Pm1}), cp(1, {H::QpD, H::Pp0, H::Pm2}),
       cp(1, {H::QpD, H::Pm0, H::Pp2}), cp(-1, {H::QmE, H::Pp1, H::Pm2})},
      {cp(1, {H::QpC, H::Pm0, H::Pp1}), cp(1, {H::QpC, H::Pp0, H::Pm1}), cp(1, {H::QpE, H::Pp0, H::Pm3}),
       cp(1, {H::QpE, H::Pm0, H::Pp3}), cp(-1, {H::QmD, H::Pp1, H::Pm3})},
      {cp(1, {H::QpD, H::Pm0, H::Pp2}), cp(1, {H::QpD, H::Pp0, H::Pm2}), cp(1, {H::QpE, H::Pp0, H::Pm3}),
       cp(1, {H::QpE, H::Pm0, H::Pp3}), cp(-1, {H::QmC, H::Pp2, H::Pm3})},
      {cp(-1, {H::QmD, H::Pp1, H::Pm3}), cp(-1, {H::QmD, H::Pm1, H::Pp3}), cp(-1, {H::QmE, H::Pm1, H::Pp2}),
       cp(-1, {H::QmE, H::Pp1, H::Pm2}), cp(-1, {H::QmC, H::Pp2, H::Pm3})},
      {cp(-1, {H::A, H::QpE, H::QmE}), cp(-1, {H::A, H::QpD, H::QmD}), cp(1, {H::QpD, H::Pp0, H::Pm2}),
       cp(1, {H::QpE, H::Pp0, H::Pm3}), cp(-1, {H::QmE, H::Pp1, H::Pm2})},
      {cp(-1, {H::A, H::QpE, H::QmE}), cp(-1, {H::A, H::QpD, H::QmD}), cp(1, {H::QpD, H::Pm0, H::Pp2}),
       cp(1, {H::QpE, H::Pm0, H::Pp3}), cp(-1, {H::QmE, H::Pm1, H::Pp2})},
      // nodes 7-10 transported from nodes 5-6 by the coordinate swaps in Omega
      {cp(-1, {H::A, H::QpC, H::QmC}), cp(-1, {H::A, H::QpE, H::QmE}), cp(1, {H::QpC, H::Pp0, H::Pm1}),
       cp(1, {H::QpE, H::Pp0, H::Pm3}), cp(-1, {H::QmE, H::Pm1, H::Pp2})},
      {cp(-1, {H::A, H::QpC, H::QmC}), cp(-1, {H::A, H::QpE, H::QmE}), cp(1, {H::QpC, H::Pm0, H::Pp1}),
       cp(1, {H::QpE, H::Pm0, H::Pp3}), cp(-1, {H::QmE, H::Pp1, H::Pm2})},
      {cp(-1, {H::A, H::QpC, H::QmC}), cp(-1, {H::A, H::QpD, H::QmD}), cp(1, {H::QpC, H::Pp0, H::Pm1}),
       cp(1, {H::QpD, H::Pp0, H::Pm2}), cp(-1, {H::QmD, H::Pm1, H::Pp3})},
      {cp(-1, {H::A, H::QpC, H::QmC}), cp(-1, {H::A, H::QpD, H::QmD}), cp(1, {H::QpC, H::Pm0, H::Pp1}),
       cp(1, {H::QpD, H::Pm0, H::Pp2}), cp(-1, {H::QmD, H::Pp1, H::Pm3})},
  }};
  if (i < 1 || i > kNodes) throw std::out_of_range("node index must be 1..10");
  return lists[i - 1];
}

const std::array<ClassProduct, 10>& global_class_products() {
  static const std::array<ClassProduct, 10> list{
      cp(-1, {H::A, H::QpC, H::QmC}), cp(-1, {H::A, H::QpD, H::QmD}), cp(-1, {H::A, H::QpE, H::QmE}),
      cp(1, {H::QpC, H::Pp0, H::Pm1}), cp(1, {H::QpC, H::Pm0, H::Pp1}), cp(1, {H::QpD, H::Pp0, H::Pm2}),
      cp(1, {H::QpD, H::Pm0, H::Pp2}), cp(1, {H::QpE, H::Pp0, H::Pm3}), cp(1, {H::QpE, H::Pm0, H::Pp3}),
      cp(-1, {H::QmC, H::Pp2, H::Pm3})};
  return list;
}

std::vector<Rational> node_classes(const SurfaceParams& p, int i) { return evaluate_all(node_class_products(i), p); }

std::vector<Rational> global_classes(const SurfaceParams& p) { return evaluate_all(global_class_products(), p); }

std::string GaloisGroupReport::statement() const { return "Gal(L/K) = C2^" + std::to_string(rank); }

GaloisGroupReport galois_group(const SurfaceParams& p) {
  require_smooth(p);
  GaloisGroupReport r;
  r.classes = global_classes(p);
  for (auto& c : r.classes) r.squarefree.push_back(squarefree_part(c));
  auto rk = square_class_rank(r.classes);
  r.rank = rk.rank;
  r.basis = rk.basis_indices;
  return r;
}

namespace {

Perm permutation_from_signs(const ConicSet& set, const std::vector<int>& signs) {
  std::vector<std::uint32_t> img(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) {
    auto it = set.index.find(apply_sign_automorphism(set.canonical[k], signs).key());
    if (it == set.index.end()) throw InvariantError("Galois image of a conic is not among the conics");
    img[k] = std::uint32_t(it->second);
  }
  return Perm(std::move(img));
}

}  // namespace

Perm galois_action_on_conics(const ConicSet& set, std::size_t j) {
  if (j >= set.global_basis.size()) throw std::out_of_range("Galois generator index exceeds the rank");
  std::vector<int> signs(set.global_basis.size(), 1);
  signs[j] = -1;
  return permutation_from_signs(set, signs);
}

Perm galois_action_flipping(const ConicSet& set, const std::vector<std::size_t>& classes) {
  auto flipped = [&](std::size_t k) { return std::find(classes.begin(), classes.end(), k) != classes.end(); };
  std::vector<int> signs;
  for (auto b : set.global_basis) signs.push_back(flipped(b) ? -1 : 1);
  // Classes outside the basis are products of basis classes; the flip pattern
  // must respect those relations.
  auto g = global_classes(set.point);
  std::vector<Rational> basis;
  for (auto b : set.global_basis) basis.push_back(g[b]);
  SquareClassSolver solver(basis);
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto combo = solver.solve(g[k]);
    if (!combo) throw InvariantError("global class outside the span of the basis");
    int s = 1;
    for (auto c : *combo) s *= signs[c];
    if ((s < 0) != flipped(k)) throw DegenerateError("flip pattern is inconsistent with the class relations at this point");
  }
  return permutation_from_signs(set, signs);
}

}  // namespace quartic
