#include "quartic/conics.hpp"

#include "quartic/galois.hpp"

#include <set>

namespace quartic {

namespace {

Monomial mono(std::initializer_list<int> e) {
  Monomial m{};
  int k = 0;
  for (int v : e) m[k++] = std::uint8_t(v);
  return m;
}

std::string element_key(const TowerElement& x) {
  std::string s;
  for (auto& [m, c] : x.terms()) s += std::to_string(m) + ":" + c.get_str() + ";";
  return s.empty() ? "0" : s;
}

std::string poly_key(const TPoly& f) {
  std::string s;
  for (auto& [m, c] : f.terms()) {
    for (unsigned k = 0; k < f.arity(); ++k) s += char('0' + m[k]);
    s += "=" + element_key(c) + "|";
  }
  return s;
}

TPoly map_coefficients(const TPoly& f, const auto& fn) {
  TPoly r(f.arity());
  for (auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

Plane normalized(const Plane& t) {
  int e = -1;
  for (int k = 0; k < 4; ++k)
    if (!t[k].is_zero()) e = k;
  if (e < 0) throw DegenerateError("zero plane");
  TowerElement inv = invert(t[e]);
  Plane out;
  for (int k = 0; k < 4; ++k) out[k] = t[k] * inv;
  return out;
}

std::array<ConicRecord, 2> make_pair(const SurfaceParams& p, int i, const QPoly& residual, const TowerPoint& s,
                                     QPrimeMu* qm_out = nullptr, TowerElement* r_out = nullptr) {
  QPrimeMu qm = qprime_and_mu(residual, s);
  if (qm.mu_scaled.is_zero()) throw DegenerateError("mu vanishes: the conic pair collapses");
  Rational dl = delta(p);
  auto r = tower_sqrt(qm.mu_scaled.scaled(-1 / dl));
  if (!r) throw DegenerateError("node " + std::to_string(i) + ": -mu/Delta is not a square in the node tower");
  TPoly Q = to_tower_poly(node_quadric(i));
  Plane plane = trope_from_singular_point(s);
  std::array<ConicRecord, 2> out;
  for (int b = 0; b < 2; ++b) {
    out[b].node = i;
    out[b].branch = b == 0 ? 1 : -1;
    out[b].plane = plane;
    out[b].quad = Q.scaled(qm.a2) + qm.qprime.scaled(r->scaled(out[b].branch));
  }
  // (a2 Q + r Q')(a2 Q - r Q') = (a2^2 / Delta)(Delta Q^2 + mu Q'^2) = (4 beta a2^2 / Delta) X_p on T
  std::vector<TowerElement> pv(plane.begin(), plane.end());
  TowerElement scale = (qm.a2 * qm.a2).scaled(4 * beta(p, i) / dl);
  TPoly lhs = (out[0].quad * out[1].quad).restrict_to_plane(pv);
  TPoly rhs = to_tower_poly(surface_equation(p)).scaled(scale).restrict_to_plane(pv);
  if (!(lhs == rhs)) throw InvariantError("conic pair does not multiply to the surface on its trope");
  if (qm_out) *qm_out = qm;
  if (r_out) *r_out = *r;
  return out;
}

}  // namespace

TPoly to_tower_poly(const QPoly& f) {
  TPoly r(f.arity());
  for (auto& [m, c] : f.terms()) r.add_term(m, TowerElement(c));
  return r;
}

Plane trope_from_singular_point(const TowerPoint& s) { return {s[0], s[1], s[2], s[3]}; }

QPrimeMu qprime_and_mu(const QPoly& residual, const TowerPoint& s) {
  if (!(s[3] == TowerElement(1))) throw std::invalid_argument("singular point must be normalized to w = 1");
  const TowerElement &r3 = s[0], &r2 = s[1], &r1 = s[2];
  TowerElement r1s = r1 * r1, r2s = r2 * r2, r3s = r3 * r3;
  TowerElement k = (r1s * r2s * r3s).scaled(2) - r1s * r1s - r2s * r2s - r3s * r3s + TowerElement(1);
  TowerElement u23 = r2 * r3, u13 = r1 * r3, u12 = r1 * r2;
  TowerElement f23 = (u23 - r1) * (u23 + r1), f13 = (u13 - r2) * (u13 + r2), f12 = (u12 - r3) * (u12 + r3);
  QPrimeMu out;
  out.a2 = f13 * f12;
  if (out.a2.is_zero()) throw DegenerateError("a2 vanishes: degenerate trope");
  out.qprime = TPoly(4);
  out.qprime.add_term(mono({2, 0, 0, 0}), f23 * f13);
  out.qprime.add_term(mono({0, 2, 0, 0}), f23 * f12);
  out.qprime.add_term(mono({0, 0, 2, 0}), out.a2);
  out.qprime.add_term(mono({1, 1, 0, 0}), r3 * r2 * k);
  out.qprime.add_term(mono({1, 0, 1, 0}), r3 * r1 * k);
  out.qprime.add_term(mono({0, 1, 1, 0}), r2 * r1 * k);

  Rational Ai = residual.coeff(mono({4, 0, 0, 0})), Ci = residual.coeff(mono({2, 2, 0, 0}));
  out.mu_scaled = (r1s * r1s).scaled(Ai) + r1s.scaled(Ci) + TowerElement(Ai);
  out.mu = out.mu_scaled * invert(out.a2 * out.a2);

  TPoly rest = to_tower_poly(residual) - (out.qprime * out.qprime).scaled(out.mu);
  TPoly T = TPoly::linear({s[0], s[1], s[2], s[3]});
  if (!rest.exact_divide(T)) throw InvariantError("X_{p_i} - mu Q'^2 is not divisible by the trope");
  return out;
}

std::array<ConicRecord, 2> conic_pair(const SurfaceParams& p, int i, const TowerPoint& s) {
  return make_pair(p, i, residual_surface(p, i), s);
}

NodeConics conics_for_node(const SurfaceParams& p, int i) {
  require_smooth(p);
  NodeConics nc;
  nc.node = i;
  nc.classes = node_classes(p, i);
  nc.tower = TowerDescriptor::make(nc.classes);
  nc.residual = residual_surface(p, i);
  auto coeffs = family_coefficients(nc.residual);
  auto pts = singular_points_on_segre(SurfaceParams(*coeffs), nc.tower);
  nc.seed = pts[0];
  auto pair = make_pair(p, i, nc.residual, nc.seed, &nc.qm, &nc.radical);

  nc.records.resize(32);
  std::set<std::string> keys, planes;
  for (unsigned m = 0; m < 16; ++m) {
    SignedPerm g = gamma_element(m);
    for (int b = 0; b < 2; ++b) {
      ConicRecord& r = nc.records[2 * m + b];
      r.node = i;
      r.gamma = m;
      r.branch = pair[b].branch;
      r.plane = g.apply(pair[b].plane);
      r.quad = g.pull_back(pair[b].quad);
      auto c = canonical_form(r);
      keys.insert(c.key());
      planes.insert(c.plane_key());
    }
  }
  if (keys.size() != 32 || planes.size() != 16)
    throw DegenerateError("node " + std::to_string(i) + ": Gamma-orbit collapsed (" + std::to_string(keys.size()) +
                          " conics on " + std::to_string(planes.size()) + " planes)");
  return nc;
}

std::string CanonicalConic::plane_key() const {
  std::string s;
  for (auto& c : plane) s += element_key(c) + "|";
  return s;
}

std::string CanonicalConic::key() const { return plane_key() + "#" + poly_key(conic); }

CanonicalConic canonical_form(const ConicRecord& c) {
  CanonicalConic out;
  out.plane = normalized(c.plane);
  out.conic = c.quad.restrict_to_plane({out.plane.begin(), out.plane.end()});
  if (out.conic.is_zero()) throw InvariantError("conic quadric vanishes on its plane");
  out.conic = out.conic.scaled(invert(out.conic.terms().begin()->second));
  return out;
}

CanonicalConic embed(const CanonicalConic& c, const TowerEmbedding& e) {
  CanonicalConic out;
  for (int k = 0; k < 4; ++k) out.plane[k] = e(c.plane[k]);
  out.conic = map_coefficients(c.conic, [&](const TowerElement& x) { return e(x); });
  return out;
}

CanonicalConic apply_sign_automorphism(const CanonicalConic& c, const std::vector<int>& signs) {
  CanonicalConic out;
  for (int k = 0; k < 4; ++k) out.plane[k] = apply_sign_automorphism(c.plane[k], signs);
  out.conic = map_coefficients(c.conic, [&](const TowerElement& x) { return apply_sign_automorphism(x, signs); });
  return out;
}

bool verify_conic(const SurfaceParams& p, const ConicRecord& c) {
  try {
    std::vector<TowerElement> pv(c.plane.begin(), c.plane.end());
    TPoly X = to_tower_poly(surface_equation(p)).restrict_to_plane(pv);
    TPoly q = c.quad.restrict_to_plane(pv);
    if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2) return false;
    if (X.is_zero() || !X.exact_divide(q)) return false;
    // smooth iff the symmetric matrix of the plane conic is nonsingular
    std::array<std::array<TowerElement, 3>, 3> M;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Monomial m{};
        m[a] += 1;
        m[b] += 1;
        M[a][b] = a == b ? q.coeff(m) : q.coeff(m).scaled(Rational(1, 2));
      }
    TowerElement det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                       M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    return !det.is_zero();
  } catch (const DegenerateError&) {
    return false;
  }
}

const ConicRecord& ConicSet::record(std::size_t label) const {
  return nodes.at(label / 32).records.at(label % 32);
}

ConicSet all_conics(const SurfaceParams& p, const std::vector<int>& node_list) {
  require_smooth(p);
  ConicSet set;
  set.point = p;
  auto g = global_classes(p);
  auto rank = square_class_rank(g);
  set.global_basis = rank.basis_indices;
  std::vector<Rational> basis;
  for (auto j : set.global_basis) basis.push_back(g[j]);
  set.global = TowerDescriptor::make(basis);

  std::set<std::string> planes;
  for (int i : node_list) {
    set.nodes.push_back(conics_for_node(p, i));
    const NodeConics& nc = set.nodes.back();
    TowerEmbedding e(nc.tower, set.global);
    for (auto& r : nc.records) {
      auto c = embed(canonical_form(r), e);
      if (!set.index.emplace(c.key(), set.canonical.size()).second)
        throw InvariantError("node " + std::to_string(i) + " repeats a conic of an earlier node");
      planes.insert(c.plane_key());
      set.canonical.push_back(std::move(c));
    }
  }
  set.distinct_planes = planes.size();
  return set;
}

Node1Formulas node1_plane_formulas(const SurfaceParams& p) {
  require_smooth(p);
  using H = Hyperplane;
  auto v = [&](H h) { return evaluate(h, p); };
  const std::array<std::pair<int, H>, 9> radicands{{{1, H::QpC}, {1, H::QpD}, {-1, H::QmE}, {1, H::Pp0}, {1, H::Pm0},
                                                    {1, H::Pp1}, {1, H::Pm1}, {1, H::Pp2}, {1, H::Pm2}}};
  std::vector<Rational> gens{delta(p)};
  for (auto& [s, h] : radicands) gens.push_back(s * v(h));
  Node1Formulas f;
  std::vector<Rational> basis;
  for (auto k : square_class_rank(gens).basis_indices) basis.push_back(gens[k]);
  f.tower = TowerDescriptor::make(basis);
  auto root = [&](int k) {  // sqrt of radicand k (0 = Delta)
    auto r = embed_rational_sqrt(gens[k], f.tower);
    if (!r) throw InvariantError("generator square root missing from its own tower");
    return *r;
  };
  TowerElement sC = root(1), sD = root(2), smE = root(3);
  TowerElement p0 = root(4), m0 = root(5), p1 = root(6), m1 = root(7), p2 = root(8), m2 = root(9);
  Rational Pp0 = v(H::Pp0), Pm0 = v(H::Pm0), Pp1 = v(H::Pp1), Pm1 = v(H::Pm1), Pp2 = v(H::Pp2), Pm2 = v(H::Pm2);
  Rational B = p[1];

  TowerElement r0 = (sD * sC * smE).scaled(8 * B);
  TowerElement r1 = sC * (m2 * m0 * p2 * p1 + (p1 * p0).scaled(Pp2) + m2 * m1 * p2 * p0 + (m1 * m0).scaled(Pm2));
  TowerElement r2 = sD * (m1 * m0 * p1 * p2 + (p2 * p0).scaled(Pp1) + m1 * m2 * p1 * p0 + (m2 * m0).scaled(Pm1));
  TowerElement r3 = -(smE * (m0 * m1 * p0 * p2 + (p2 * p1).scaled(Pp0) + m0 * m2 * p0 * p1 + (m2 * m1).scaled(Pm0)));
  Plane seed{r0, r1, r2, r3};
  for (unsigned m = 0; m < 16; ++m) f.planes[m] = gamma_element(m).apply(seed);
  return f;
}

bool projectively_equal(const Plane& a, const Plane& b) {
  bool az = true, bz = true;
  for (int k = 0; k < 4; ++k) {
    az = az && a[k].is_zero();
    bz = bz && b[k].is_zero();
  }
  if (az || bz) return az && bz;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k)
      if (!(a[j] * b[k] == a[k] * b[j])) return false;
  return true;
}

bool node1_planes_agree(const Node1Formulas& f, const NodeConics& node1) {
  if (node1.node != 1) throw std::invalid_argument("node1_planes_agree needs the node-1 conics");
  TowerEmbedding e(node1.tower, f.tower);
  std::vector<Plane> tropes;
  for (unsigned m = 0; m < 16; ++m) {
    Plane t;
    for (int k = 0; k < 4; ++k) t[k] = e(node1.records[2 * m].plane[k]);
    tropes.push_back(t);
  }
  std::vector<bool> used(16, false);
  for (auto& lp : f.planes) {
    bool hit = false;
    for (std::size_t j = 0; j < 16 && !hit; ++j)
      if (!used[j] && projectively_equal(lp, tropes[j])) used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace quartic
