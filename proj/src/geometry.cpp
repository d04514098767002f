#include "quartic/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace quartic {

// --- projective points --------------------------------------------------------

std::array<Rational, 5> pin(const std::array<Rational, 5>& v) {
  Integer l = 1, g = 0;
  for (auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::array<Integer, 5> n;
  for (int k = 0; k < 5; ++k) {
    Rational t = v[k] * l;
    n[k] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[k].get_mpz_t());
  }
  if (g == 0) throw DegenerateError("the zero vector is not a point of P^4");
  int s = 0;
  for (auto& c : n)
    if (sgn(c) != 0) {
      s = sgn(c);
      break;
    }
  std::array<Rational, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = Rational(n[k] * s / g);
  return out;
}

bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  bool za = std::all_of(a.begin(), a.end(), [](auto& x) { return sgn(x) == 0; });
  bool zb = std::all_of(b.begin(), b.end(), [](auto& x) { return sgn(x) == 0; });
  if (za || zb) return za && zb;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

SurfaceParams::SurfaceParams(const std::array<Rational, 5>& coords) : c_(pin(coords)) {}

SurfaceParams::SurfaceParams(std::initializer_list<long> coords) {
  if (coords.size() != 5) throw std::invalid_argument("a point of P^4 has five coordinates");
  std::array<Rational, 5> v;
  std::size_t k = 0;
  for (long c : coords) v[k++] = c;
  c_ = pin(v);
}

std::string SurfaceParams::to_string() const {
  std::string s = "[";
  for (int k = 0; k < 5; ++k) s += (k ? "," : "") + c_[k].get_str();
  return s + "]";
}

// --- hyperplanes --------------------------------------------------------------

namespace {
struct HyperplaneInfo {
  const char* name;
  std::array<int, 5> form;
};
const std::array<HyperplaneInfo, kHyperplanes> kInfo{{
    {"A", {1, 0, 0, 0, 0}},
    {"q+C", {2, 0, 1, 0, 0}},
    {"q-C", {2, 0, -1, 0, 0}},
    {"q+D", {2, 0, 0, 1, 0}},
    {"q-D", {2, 0, 0, -1, 0}},
    {"q+E", {2, 0, 0, 0, 1}},
    {"q-E", {2, 0, 0, 0, -1}},
    {"p+0", {4, 1, 2, 2, 2}},
    {"p-0", {4, -1, 2, 2, 2}},
    {"p+1", {4, 1, 2, -2, -2}},
    {"p-1", {4, -1, 2, -2, -2}},
    {"p+2", {4, 1, -2, 2, -2}},
    {"p-2", {4, -1, -2, 2, -2}},
    {"p+3", {4, 1, -2, -2, 2}},
    {"p-3", {4, -1, -2, -2, 2}},
}};
}  // namespace

const std::array<Hyperplane, kHyperplanes>& all_hyperplanes() {
  static const auto all = [] {
    std::array<Hyperplane, kHyperplanes> a;
    for (std::size_t k = 0; k < kHyperplanes; ++k) a[k] = Hyperplane(k);
    return a;
  }();
  return all;
}

std::string name(Hyperplane h) { return kInfo.at(std::size_t(h)).name; }

std::optional<Hyperplane> hyperplane_from_name(const std::string& s) {
  for (std::size_t k = 0; k < kHyperplanes; ++k)
    if (s == kInfo[k].name) return Hyperplane(k);
  return std::nullopt;
}

std::optional<LoopTarget> loop_target_from_name(const std::string& s) {
  if (s == "Delta") return LoopTarget::delta();
  if (auto h = hyperplane_from_name(s)) return LoopTarget{*h};
  return std::nullopt;
}

const std::array<int, 5>& hyperplane_form(Hyperplane h) { return kInfo.at(std::size_t(h)).form; }

Rational evaluate(Hyperplane h, const SurfaceParams& p) {
  Rational v = 0;
  for (int k = 0; k < 5; ++k) v += hyperplane_form(h)[k] * p[k];
  return v;
}

// --- the family ---------------------------------------------------------------

namespace {
Monomial mono(std::initializer_list<int> e) {
  Monomial m{};
  int k = 0;
  for (int v : e) m[k++] = std::uint8_t(v);
  return m;
}

// The five Gamma-invariant monomial groups of the family.
const std::array<std::vector<Monomial>, 5>& family_groups() {
  static const std::array<std::vector<Monomial>, 5> g{{
      {mono({4, 0, 0, 0}), mono({0, 4, 0, 0}), mono({0, 0, 4, 0}), mono({0, 0, 0, 4})},
      {mono({1, 1, 1, 1})},
      {mono({2, 2, 0, 0}), mono({0, 0, 2, 2})},
      {mono({2, 0, 2, 0}), mono({0, 2, 0, 2})},
      {mono({2, 0, 0, 2}), mono({0, 2, 2, 0})},
  }};
  return g;
}
}  // namespace

const QPoly& delta_polynomial() {
  static const QPoly d = [] {
    QPoly f(5);
    f.add_term(mono({3, 0, 0, 0, 0}), 16);
    f.add_term(mono({1, 2, 0, 0, 0}), 1);
    f.add_term(mono({1, 0, 2, 0, 0}), -4);
    f.add_term(mono({1, 0, 0, 2, 0}), -4);
    f.add_term(mono({1, 0, 0, 0, 2}), -4);
    f.add_term(mono({0, 0, 1, 1, 1}), 4);
    return f;
  }();
  return d;
}

Rational delta(const SurfaceParams& p) {
  const auto& [A, B, C, D, E] = p.coords();
  return 16 * A * A * A + A * B * B - 4 * A * (C * C + D * D + E * E) + 4 * C * D * E;
}

QPoly family_quartic(const std::array<Rational, 5>& coeffs) {
  QPoly f(4);
  for (int k = 0; k < 5; ++k)
    for (auto& m : family_groups()[k]) f.add_term(m, coeffs[k]);
  return f;
}

QPoly surface_equation(const SurfaceParams& p) { return family_quartic(p.coords()); }

std::optional<std::array<Rational, 5>> family_coefficients(const QPoly& f) {
  if (f.arity() != 4) return std::nullopt;
  std::array<Rational, 5> c;
  std::size_t seen = 0;
  for (int k = 0; k < 5; ++k) {
    const auto& g = family_groups()[k];
    c[k] = f.coeff(g[0]);
    for (auto& m : g)
      if (f.coeff(m) != c[k]) return std::nullopt;
    if (sgn(c[k]) != 0) seen += g.size();
  }
  if (seen != f.terms().size()) return std::nullopt;
  return c;
}

SingularVerdict singular_test(const SurfaceParams& p) {
  SingularVerdict v;
  v.delta_vanishes = sgn(delta(p)) == 0;
  for (auto h : all_hyperplanes())
    if (sgn(evaluate(h, p)) == 0) v.vanishing.push_back(h);
  v.smooth = !v.delta_vanishes && v.vanishing.empty();
  return v;
}

void require_smooth(const SurfaceParams& p) {
  auto v = singular_test(p);
  if (v.smooth) return;
  std::string what = v.delta_vanishes ? "Delta" : name(v.vanishing.front());
  throw DegenerateError("X_p is singular at p = " + p.to_string() + ": " + what + " vanishes");
}

// --- nodes -----------------------------------------------------------------------

const std::array<Rational, 5>& node(int i) {
  static const std::array<std::array<Rational, 5>, kNodes> nodes = [] {
    const int raw[kNodes][5] = {{1, 0, -2, -2, 2}, {1, 0, -2, 2, -2}, {1, 0, 2, -2, -2}, {1, 0, 2, 2, 2},
                                {0, -2, 1, 0, 0},  {0, 2, 1, 0, 0},   {0, -2, 0, 1, 0},  {0, 2, 0, 1, 0},
                                {0, -2, 0, 0, 1},  {0, 2, 0, 0, 1}};
    std::array<std::array<Rational, 5>, kNodes> out;
    for (int i = 0; i < kNodes; ++i)
      for (int k = 0; k < 5; ++k) out[i][k] = raw[i][k];
    return out;
  }();
  if (i < 1 || i > kNodes) throw std::out_of_range("node index must be 1..10");
  return nodes[i - 1];
}

const QPoly& node_quadric(int i) {
  static const std::array<QPoly, kNodes> qs = [] {
    std::array<QPoly, kNodes> out;
    auto sq = [](int a, int b, int c, int d) {
      QPoly f(4);
      f.add_term(mono({2, 0, 0, 0}), a);
      f.add_term(mono({0, 2, 0, 0}), b);
      f.add_term(mono({0, 0, 2, 0}), c);
      f.add_term(mono({0, 0, 0, 2}), d);
      return f;
    };
    auto mixed = [](int i, int j, int k, int l, int s) {
      QPoly f(4);
      Monomial a{}, b{};
      a[i] = a[j] = 1;
      b[k] = b[l] = 1;
      f.add_term(a, 1);
      f.add_term(b, s);
      return f;
    };
    out[0] = sq(1, -1, -1, 1);
    out[1] = sq(1, -1, 1, -1);
    out[2] = sq(1, 1, -1, -1);
    out[3] = sq(1, 1, 1, 1);
    out[4] = mixed(0, 1, 2, 3, -1);
    out[5] = mixed(0, 1, 2, 3, 1);
    out[6] = mixed(0, 2, 1, 3, -1);
    out[7] = mixed(0, 2, 1, 3, 1);
    out[8] = mixed(0, 3, 1, 2, -1);
    out[9] = mixed(0, 3, 1, 2, 1);
    return out;
  }();
  if (i < 1 || i > kNodes) throw std::out_of_range("node index must be 1..10");
  return qs[i - 1];
}

Rational beta(const SurfaceParams& p, int i) {
  const auto& [A, B, C, D, E] = p.coords();
  Rational sq = C * C + D * D + E * E;
  Rational base = 12 * A * A + B * B / 4;
  switch (i) {
    case 1: return base + 4 * A * (C + D - E) - sq + 2 * (C * D - C * E - D * E);
    case 2: return base + 4 * A * (C - D + E) - sq + 2 * (-C * D + C * E - D * E);
    case 3: return base + 4 * A * (-C + D + E) - sq + 2 * (-C * D - C * E + D * E);
    case 4: return base - 4 * A * (C + D + E) - sq + 2 * (C * D + C * E + D * E);
    case 5: return -(A * B + 2 * A * C - D * E);
    case 6: return A * B - 2 * A * C + D * E;
    case 7: return -(A * B + 2 * A * D - C * E);
    case 8: return A * B - 2 * A * D + C * E;
    case 9: return -(A * B + 2 * A * E - C * D);
    case 10: return A * B - 2 * A * E + C * D;
    default: throw std::out_of_range("node index must be 1..10");
  }
}

ThirdIntersection third_intersection(const SurfaceParams& p, int i) {
  const auto& q = node(i);
  Rational dp = delta(p);
  if (sgn(dp) == 0) throw DegenerateError("third_intersection: p lies on the Segre cubic");
  std::vector<Rational> qv(q.begin(), q.end());
  QPoly cubic = delta_polynomial().restrict_to_line(p.vec(), qv);
  if (cubic.is_zero()) throw DegenerateError("third_intersection: line lies in the Segre cubic");
  QPoly s2(2);
  s2.add_term(mono({2, 0}), 1);
  auto lin = cubic.exact_divide(s2);
  if (!lin) throw InvariantError("node is not a double root along the line");
  Rational alpha = lin->coeff(mono({1, 0})), b4 = lin->coeff(mono({0, 1}));
  if (alpha != dp) throw InvariantError("cubic leading coefficient differs from Delta(p)");
  Rational bt = beta(p, i);
  if (b4 != 4 * bt) throw InvariantError("line residual disagrees with the closed-form beta");
  if (sgn(bt) == 0) throw DegenerateError("third_intersection: beta vanishes, residual point is the node");
  std::array<Rational, 5> r;
  for (int k = 0; k < 5; ++k) r[k] = b4 * p[k] - alpha * q[k];
  return {SurfaceParams(r), bt};
}

QPoly residual_surface(const SurfaceParams& p, int i) {
  Rational bt = beta(p, i);
  if (sgn(bt) == 0) throw DegenerateError("residual_surface: beta vanishes");
  const QPoly& Q = node_quadric(i);
  QPoly r = surface_equation(p).scaled(4 * bt) - (Q * Q).scaled(delta(p));
  auto c = family_coefficients(r);
  if (!c) throw InvariantError("residual surface is not of the family shape");
  if (sgn(delta(p)) != 0) {
    auto t = third_intersection(p, i);
    if (!projectively_equal({c->begin(), c->end()}, t.point.vec()))
      throw InvariantError("residual surface differs from the line residual point");
  }
  return r;
}

// --- Gamma ------------------------------------------------------------------------

SignedPerm SignedPerm::then(const SignedPerm& b) const {
  SignedPerm r;
  for (int k = 0; k < 4; ++k) {
    r.perm[k] = b.perm[perm[k]];
    r.sign[k] = std::int8_t(sign[k] * b.sign[perm[k]]);
  }
  return r;
}

SignedPerm gamma_element(unsigned mask) {
  static const SignedPerm gens[4] = {
      {{1, 0, 3, 2}, {1, 1, 1, 1}},
      {{2, 3, 0, 1}, {1, 1, 1, 1}},
      {{0, 1, 2, 3}, {1, 1, -1, -1}},
      {{0, 1, 2, 3}, {1, -1, 1, -1}},
  };
  if (mask >= 16) throw std::out_of_range("gamma mask");
  SignedPerm g;
  for (int j = 0; j < 4; ++j)
    if ((mask >> j) & 1) g = g.then(gens[j]);
  return g;
}

std::string gamma_word(unsigned mask) {
  std::string s;
  for (int j = 0; j < 4; ++j)
    if ((mask >> j) & 1) s += "g" + std::to_string(j + 1);
  return s;
}

std::optional<unsigned> parse_gamma_word(const std::string& w) {
  unsigned mask = 0;
  std::size_t k = 0;
  int last = 0;
  while (k < w.size()) {
    if (w[k] != 'g' || k + 1 >= w.size() || w[k + 1] < '1' || w[k + 1] > '4') return std::nullopt;
    int j = w[k + 1] - '0';
    if (j <= last) return std::nullopt;  // canonical, increasing order only
    last = j;
    mask |= 1u << (j - 1);
    k += 2;
  }
  return mask;
}

// --- Kummer surfaces -------------------------------------------------------------

std::array<Rational, 5> kummer_coefficients(const Point3& P) {
  const auto& [x, y, z, w] = P;
  Rational x2 = x * x, y2 = y * y, z2 = z * z, w2 = w * w;
  Rational f1 = (y * z + x * w) * (y * z - x * w);
  Rational f2 = (x * z + y * w) * (x * z - y * w);
  Rational f3 = (z * w + x * y) * (z * w - x * y);
  std::array<Rational, 5> r;
  r[0] = f1 * f2 * f3;
  r[1] = 2 * x * y * z * w * (-x2 - y2 + z2 + w2) * (-x2 + y2 + z2 - w2) * (x2 - y2 + z2 - w2) *
         (x2 + y2 + z2 + w2);
  r[2] = f1 * f2 * (x2 * x2 + y2 * y2 - z2 * z2 - w2 * w2);
  r[3] = f1 * f3 * (-x2 * x2 + y2 * y2 - z2 * z2 + w2 * w2);
  r[4] = f2 * f3 * (x2 * x2 - y2 * y2 - z2 * z2 + w2 * w2);
  return r;
}

namespace {
using GVec = std::array<Gaussian, 4>;

// Is p in the span of u, v (all 3x3 minors of [p;u;v] vanish)?
bool in_span(const GVec& p, const GVec& u, const GVec& v) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        int idx[3] = {a, b, c};
        const GVec* rows[3] = {&p, &u, &v};
        Gaussian det = 0;
        for (int s = 0; s < 3; ++s) {
          Gaussian t1 = (*rows[0])[idx[s]] * (*rows[1])[idx[(s + 1) % 3]] * (*rows[2])[idx[(s + 2) % 3]];
          Gaussian t2 = (*rows[0])[idx[s]] * (*rows[1])[idx[(s + 2) % 3]] * (*rows[2])[idx[(s + 1) % 3]];
          det += t1 - t2;
        }
        if (!is_zero(det)) return false;
      }
  return true;
}

GVec apply(const SignedPerm& g, const GVec& v) { return g.apply(v); }

bool proportional(const GVec& a, const GVec& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!is_zero(a[i] * b[j] - a[j] * b[i])) return false;
  return true;
}

// Eigenvalue lambda with g v = lambda v, if any.
std::optional<Gaussian> eigenvalue(const SignedPerm& g, const GVec& v) {
  GVec gv = apply(g, v);
  if (!proportional(gv, v)) return std::nullopt;
  for (int k = 0; k < 4; ++k)
    if (!is_zero(v[k])) return gv[k] * inverse(v[k]);
  return std::nullopt;
}

// "s", "-is", "t", "0", ... -> basis coefficients (s-part, t-part)
std::pair<Gaussian, Gaussian> parse_entry(const std::string& e) {
  if (e == "0") return {0, 0};
  std::string s = e;
  Gaussian c = 1;
  if (s[0] == '-') {
    c = -1;
    s = s.substr(1);
  }
  if (s[0] == 'i') {
    c *= Gaussian::i();
    s = s.substr(1);
  }
  if (s == "s") return {c, 0};
  return {0, c};
}

std::array<GVec, 2> parse_line(const std::array<const char*, 4>& entries) {
  std::array<GVec, 2> basis;
  for (int k = 0; k < 4; ++k) {
    auto [a, b] = parse_entry(entries[k]);
    basis[0][k] = a;
    basis[1][k] = b;
  }
  return basis;
}

struct RawRow {
  std::array<const char*, 4> L, Lbar;
  std::array<const char*, 3> plane;
};
// Rows in mask order g1, g2, g1g2, g3, ... exactly as tabulated.
const RawRow kRawTable[15] = {
    {{"s", "s", "t", "t"}, {"s", "-s", "t", "-t"}, {"q+C", "p+0", "p-1"}},
    {{"s", "t", "s", "t"}, {"s", "t", "-s", "-t"}, {"q+D", "p+0", "p-2"}},
    {{"s", "t", "t", "s"}, {"s", "t", "-t", "-s"}, {"q+E", "p+0", "p-3"}},
    {{"s", "t", "0", "0"}, {"0", "0", "s", "t"}, {"A", "q+C", "q-C"}},
    {{"s", "-s", "t", "t"}, {"s", "s", "t", "-t"}, {"q-C", "p-0", "p+1"}},
    {{"s", "t", "is", "it"}, {"s", "t", "-is", "-it"}, {"q-D", "p-1", "p+3"}},
    {{"s", "t", "it", "is"}, {"s", "t", "-it", "-is"}, {"q-E", "p-1", "p+2"}},
    {{"s", "0", "t", "0"}, {"0", "s", "0", "t"}, {"A", "q+D", "q-D"}},
    {{"s", "is", "t", "it"}, {"s", "-is", "t", "-it"}, {"q-C", "p-2", "p+3"}},
    {{"s", "t", "-s", "t"}, {"s", "t", "s", "-t"}, {"q+D", "p-0", "p+2"}},
    {{"s", "t", "it", "-is"}, {"s", "t", "-it", "is"}, {"q-E", "p+1", "p-2"}},
    {{"s", "0", "0", "t"}, {"0", "s", "t", "0"}, {"A", "q+E", "q-E"}},
    {{"s", "-is", "t", "it"}, {"s", "is", "t", "-it"}, {"q-C", "p+2", "p-3"}},
    {{"s", "t", "-is", "it"}, {"s", "t", "is", "-it"}, {"q-D", "p+1", "p-3"}},
    {{"s", "t", "t", "-s"}, {"s", "t", "-t", "s"}, {"q+W", "p-0", "p+3"}},
};

bool line_pointwise_fixed(const SignedPerm& g, const std::array<GVec, 2>& b) {
  auto l0 = eigenvalue(g, b[0]), l1 = eigenvalue(g, b[1]);
  return l0 && l1 && *l0 == *l1;
}

bool maps_line_into(const SignedPerm& g, const std::array<GVec, 2>& from, const std::array<GVec, 2>& to) {
  return in_span(apply(g, from[0]), to[0], to[1]) && in_span(apply(g, from[1]), to[0], to[1]);
}

HyperplaneTriple sorted(HyperplaneTriple t) {
  std::sort(t.begin(), t.end());
  return t;
}
}  // namespace

bool on_invariant_lines(const Point3& P) {
  GVec p{P[0], P[1], P[2], P[3]};
  for (const auto& row : kRawTable) {
    auto L = parse_line(row.L), Lb = parse_line(row.Lbar);
    if (in_span(p, L[0], L[1]) || in_span(p, Lb[0], Lb[1])) return true;
  }
  return false;
}

SurfaceParams kummer_from_point(const Point3& P) {
  if (on_invariant_lines(P)) throw DegenerateError("kummer_from_point: P lies on an invariant line");
  SurfaceParams K(kummer_coefficients(P));
  if (sgn(delta(K)) != 0) throw InvariantError("Kummer point is off the Segre cubic");
  QPoly f = surface_equation(K);
  auto grad = f.gradient();
  for (unsigned m = 0; m < 16; ++m) {
    auto q = gamma_element(m).apply(P);
    std::vector<Rational> qv(q.begin(), q.end());
    for (auto& g : grad)
      if (sgn(g.evaluate(qv)) != 0) throw InvariantError("Kummer surface is not singular at Gamma.P");
  }
  return K;
}

std::array<TowerPoint, 16> singular_points_on_segre(const SurfaceParams& P, const Tower& tower) {
  if (sgn(delta(P)) != 0) throw DegenerateError("singular_points_on_segre: point is off the Segre cubic");
  for (auto h : all_hyperplanes())
    if (sgn(evaluate(h, P)) == 0)
      throw DegenerateError("singular_points_on_segre: point lies on hyperplane " + name(h));
  const auto& [A, B, C, D, E] = P.coords();
  Rational a = -A * A * B * B;
  if (sgn(a) == 0) throw DegenerateError("singular_points_on_segre: leading octic coefficient vanishes");
  Rational b = 4 * (2 * A * D - C * E) * (2 * A * E - C * D);
  Rational c = 2 * (A * A * B * B - 2 * (E * E + D * D) * (4 * A * A + C * C) + 16 * A * C * D * E);
  Rational disc = b * b - 4 * a * (c - 2 * a);
  const TowerElement one = TowerElement(1).in(tower);

  std::optional<TowerElement> sd;
  if (sgn(disc) == 0) sd = TowerElement(0).in(tower);
  else sd = embed_rational_sqrt(disc, tower);
  if (!sd) throw DegenerateError("singular_points_on_segre: tower-insufficient (discriminant)");

  Rational d4 = 4 * A * A - C * C, e2 = E * E - D * D;
  for (int s1 : {1, -1}) {
    TowerElement u = (TowerElement(-b) + sd->scaled(s1)).scaled(1 / (2 * a));
    auto sw = tower_sqrt(u * u - TowerElement(4));
    if (!sw) continue;
    for (int s2 : {1, -1}) {
      auto r1 = tower_sqrt((u + sw->scaled(s2)).scaled(Rational(1, 2)));
      if (!r1 || r1->is_zero()) continue;
      TowerElement z2 = *r1 * *r1, z4 = z2 * z2;
      TowerElement num = (z4 - one).scaled(A * d4) + (z4 + one).scaled(A * e2) + z2.scaled(C * e2);
      TowerElement den = (z2.scaled(E) - TowerElement(D)).scaled(d4);
      if (den.is_zero()) continue;
      auto r2 = tower_sqrt(-(num * invert(den)));
      if (!r2 || r2->is_zero()) continue;
      TowerElement numx = z2.scaled(B * C) + TowerElement(A * B) + z4.scaled(A * B);
      TowerElement denx = (*r2 * *r1).scaled(2 * (C * C - 4 * A * A));
      if (denx.is_zero()) continue;
      TowerElement r3 = -(numx * invert(denx));

      TowerPoint seed{r3.in(tower), r2->in(tower), r1->in(tower), one};
      std::array<TowerPoint, 16> out;
      for (unsigned m = 0; m < 16; ++m) out[m] = gamma_element(m).apply(seed);

      auto grad = surface_equation(P).gradient();
      for (auto& pt : out) {
        std::vector<TowerElement> v(pt.begin(), pt.end());
        for (auto& g : grad)
          if (!g.evaluate(v).is_zero()) throw InvariantError("computed point is not singular on X_P");
      }
      return out;
    }
  }
  throw DegenerateError("singular_points_on_segre: tower-insufficient (radical chain)");
}

// --- Segre planes ---------------------------------------------------------------

std::array<HyperplaneTriple, 3> segre_plane_decomposition(Hyperplane h) {
  std::vector<Rational> hv;
  for (int c : hyperplane_form(h)) hv.emplace_back(c);
  QPoly cubic = delta_polynomial().restrict_to_plane(hv);
  // group the other hyperplanes by their (projective) restriction
  std::vector<std::pair<QPoly, std::vector<Hyperplane>>> factors;
  for (auto k : all_hyperplanes()) {
    if (k == h) continue;
    QPoly lin = QPoly::linear({hyperplane_form(k).begin(), hyperplane_form(k).end()}).restrict_to_plane(hv);
    if (lin.is_zero()) continue;
    if (!cubic.exact_divide(lin)) continue;
    bool placed = false;
    for (auto& [f, hs] : factors) {
      if (lin.exact_divide(f) && f.exact_divide(lin)) {
        hs.push_back(k);
        placed = true;
      }
    }
    if (!placed) factors.push_back({lin, {k}});
  }
  if (factors.size() != 3) throw InvariantError("Segre plane decomposition: expected three linear factors");
  QPoly prod = factors[0].first * factors[1].first * factors[2].first;
  auto q = cubic.exact_divide(prod);
  if (!q || q->total_degree() != 0) throw InvariantError("Segre plane decomposition: factors do not multiply out");
  std::array<HyperplaneTriple, 3> out;
  for (int k = 0; k < 3; ++k) {
    if (factors[k].second.size() != 2) throw InvariantError("Segre plane is not cut by exactly three hyperplanes");
    out[k] = sorted({h, factors[k].second[0], factors[k].second[1]});
  }
  return out;
}

std::vector<HyperplaneTriple> segre_planes() {
  std::set<HyperplaneTriple> all;
  for (auto h : all_hyperplanes())
    for (auto& t : segre_plane_decomposition(h)) all.insert(t);
  return {all.begin(), all.end()};
}

namespace {
// A generic rational point of the plane cut out by three hyperplanes.
std::array<Rational, 5> generic_point(const HyperplaneTriple& plane) {
  // Row-reduce the 3x5 system and take a combination of kernel vectors.
  std::vector<std::vector<Rational>> m;
  for (auto h : plane) m.push_back({hyperplane_form(h).begin(), hyperplane_form(h).end()});
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (int c = 0; c < 5 && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t o = 0; o < m.size(); ++o)
      if (o != r && sgn(m[o][c]) != 0) {
        Rational f = m[o][c];
        for (int k = 0; k < 5; ++k) m[o][k] -= f * m[r][k];
      }
    pivcol.push_back(c);
    ++r;
  }
  const int weights[5] = {3, 7, 11, 13, 17};
  std::array<Rational, 5> x;
  int w = 0;
  for (int c = 0; c < 5; ++c)
    if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) x[c] = weights[w++];
  for (std::size_t row = 0; row < pivcol.size(); ++row) {
    Rational s = 0;
    for (int c = 0; c < 5; ++c)
      if (c != pivcol[row]) s += m[row][c] * x[c];
    x[pivcol[row]] = -s;
  }
  return x;
}
}  // namespace

bool plane_singular_along(const HyperplaneTriple& plane, const InvariantLinePair& lines) {
  auto x = generic_point(plane);
  MultiPoly<Gaussian> f(4);
  QPoly quartic = family_quartic(x);
  for (auto& [m, c] : quartic.terms()) f.add_term(m, Gaussian(c));
  auto grad = f.gradient();
  auto singular_along = [&](const std::array<GVec, 2>& b) {
    // a cubic binary form vanishing at four points of the line vanishes on it
    const int st[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    for (auto& [s, t] : st) {
      std::vector<Gaussian> pt(4);
      for (int k = 0; k < 4; ++k) pt[k] = b[0][k] * Gaussian(s) + b[1][k] * Gaussian(t);
      for (auto& g : grad)
        if (!is_zero(g.evaluate(pt))) return false;
    }
    return true;
  };
  return singular_along(lines.L) && singular_along(lines.Lbar);
}

const std::vector<InvariantLinePair>& invariant_lines_table() {
  static const std::vector<InvariantLinePair> table = [] {
    std::vector<InvariantLinePair> out;
    auto planes = segre_planes();
    for (unsigned m = 1; m < 16; ++m) {
      const auto& raw = kRawTable[m - 1];
      InvariantLinePair row;
      row.gamma = m;
      row.L = parse_line(raw.L);
      row.Lbar = parse_line(raw.Lbar);
      for (int k = 0; k < 3; ++k) row.printed_plane[k] = raw.plane[k];
      auto g = gamma_element(m);
      if (!line_pointwise_fixed(g, row.L) || !line_pointwise_fixed(g, row.Lbar))
        throw InvariantError("invariant line is not pointwise fixed by " + gamma_word(m));
      for (unsigned o = 0; o < 16; ++o) {
        auto go = gamma_element(o);
        bool ok = (maps_line_into(go, row.L, row.L) && maps_line_into(go, row.Lbar, row.Lbar)) ||
                  (maps_line_into(go, row.L, row.Lbar) && maps_line_into(go, row.Lbar, row.L));
        if (!ok) throw InvariantError("invariant line pair is not Gamma-stable");
      }
      int found = 0;
      for (auto& p : planes)
        if (plane_singular_along(p, row)) {
          row.segre_plane = p;
          ++found;
        }
      if (found != 1) throw InvariantError("invariant line pair does not match exactly one Segre plane");
      out.push_back(row);
    }
    return out;
  }();
  return table;
}

}  // namespace quartic
