#include "quartic/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace quartic {

namespace {

constexpr double kPi = std::numbers::pi;

double to_d(const Rational& r) { return r.get_d(); }

CPoint to_cpoint(const SurfaceParams& p) {
  CPoint c;
  for (int k = 0; k < 5; ++k) c[k] = to_d(p[k]);
  return c;
}

cplx cdelta(const CPoint& p) {
  const auto& [A, B, C, D, E] = p;
  return 16.0 * A * A * A + A * B * B - 4.0 * A * (C * C + D * D + E * E) + 4.0 * C * D * E;
}

cplx cform(Hyperplane h, const CPoint& p) {
  cplx v = 0;
  for (int k = 0; k < 5; ++k) v += double(hyperplane_form(h)[k]) * p[k];
  return v;
}

// beta_i = grad Delta(p) . q_i / 4
cplx cbeta(const CPoint& p, int i) {
  const auto& [A, B, C, D, E] = p;
  std::array<cplx, 5> g{48.0 * A * A + B * B - 4.0 * (C * C + D * D + E * E), 2.0 * A * B, -8.0 * A * C + 4.0 * D * E,
                        -8.0 * A * D + 4.0 * C * E, -8.0 * A * E + 4.0 * C * D};
  cplx s = 0;
  for (int k = 0; k < 5; ++k) s += g[k] * to_d(node(i)[k]);
  return s / 4.0;
}

struct NodeData {
  int node;
  CPoint q2;                       // family coefficients of Q_i^2
  std::array<std::array<double, 4>, 4> Q;  // Gram matrix of Q_i
};

NodeData node_data(int i) {
  NodeData d{i, {}, {}};
  auto c = family_coefficients(node_quadric(i) * node_quadric(i));
  if (!c) throw InvariantError("Q_i^2 is not of the family shape");
  for (int k = 0; k < 5; ++k) d.q2[k] = to_d((*c)[k]);
  for (auto& [m, v] : node_quadric(i).terms()) {
    int a = -1, b = -1;
    for (int k = 0; k < 4; ++k)
      for (int e = 0; e < m[k]; ++e) (a < 0 ? a : b) = k;
    double x = to_d(v);
    if (a == b) d.Q[a][a] += x;
    else d.Q[a][b] += x / 2, d.Q[b][a] += x / 2;
  }
  return d;
}

CPoint residual(const CPoint& p, const NodeData& nd) {
  cplx b4 = 4.0 * cbeta(p, nd.node), dl = cdelta(p);
  CPoint r;
  for (int k = 0; k < 5; ++k) r[k] = b4 * p[k] - dl * nd.q2[k];
  return r;
}

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx nonzero(cplx x, double scale, const char* what) {
  if (std::abs(x) <= 1e-13 * scale) throw NumericError(what);
  return x;
}

// The sixteen singular points [r3:r2:r1:1] of the Kummer surface with these
// coefficients, one per branch of the radical chain.
std::vector<std::array<cplx, 3>> singular_points(const CPoint& P) {
  const auto& [A, B, C, D, E] = P;
  double sc = 0;
  for (auto& x : P) sc = std::max(sc, std::abs(x));
  cplx a = nonzero(-A * A * B * B, std::pow(sc, 4), "leading octic coefficient");
  cplx b = 4.0 * (2.0 * A * D - C * E) * (2.0 * A * E - C * D);
  cplx c = 2.0 * (A * A * B * B - 2.0 * (E * E + D * D) * (4.0 * A * A + C * C) + 16.0 * A * C * D * E);
  cplx sd = std::sqrt(b * b - 4.0 * a * (c - 2.0 * a));
  cplx d4 = 4.0 * A * A - C * C, e2 = E * E - D * D;
  std::vector<std::array<cplx, 3>> out;
  for (int s1 : {1, -1}) {
    cplx u = (-b + double(s1) * sd) / (2.0 * a);
    cplx sw = std::sqrt(u * u - 4.0);
    for (int s2 : {1, -1}) {
      cplx z2 = (u + double(s2) * sw) / 2.0, z4 = z2 * z2;
      cplx num = A * d4 * (z4 - 1.0) + A * e2 * (z4 + 1.0) + C * e2 * z2;
      cplx den = nonzero((z2 * E - D) * d4, std::pow(sc, 3) * std::max(1.0, std::abs(z2)), "radical chain denominator");
      cplx r2a = std::sqrt(-num / den), r1a = std::sqrt(z2);
      for (int s3 : {1, -1})
        for (int s4 : {1, -1}) {
          cplx r1 = double(s3) * r1a, r2 = double(s4) * r2a;
          cplx numx = B * C * z2 + A * B + A * B * z4;
          cplx denx = nonzero(2.0 * (C * C - 4.0 * A * A) * r2 * r1, sc * sc * std::max(1e-300, std::abs(r1 * r2)),
                              "radical chain denominator");
          out.push_back({-numx / denx, r2, r1});
        }
    }
  }
  return out;
}

using Gram = std::array<std::array<cplx, 4>, 4>;

// Feature of a record: the plane (x, y, z coefficients with w = 1) and, for
// conics, the six entries of the quadric restricted to the plane.
struct Feature {
  std::array<cplx, 4> plane;
  std::array<cplx, 6> conic{};
};

std::array<cplx, 6> restrict_gram(const Gram& M, const std::array<cplx, 4>& t) {
  // x, y, z stay; w = -(t0 x + t1 y + t2 z) / t3
  cplx S[4][3]{};
  for (int k = 0; k < 3; ++k) {
    S[k][k] = 1.0;
    S[3][k] = -t[k] / t[3];
  }
  cplx N[3][3]{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) N[a][b] += S[r][a] * M[r][s] * S[s][b];
  return {N[0][0], N[1][1], N[2][2], N[0][1], N[0][2], N[1][2]};
}

std::vector<Feature> numeric_features(const CPoint& p, const NodeData& nd, bool conics) {
  CPoint R = residual(p, nd);
  cplx dl = cdelta(p);
  std::vector<Feature> out;
  for (auto& [r3, r2, r1] : singular_points(R)) {
    Feature f;
    f.plane = {r3, r2, r1, 1.0};
    if (!conics) {
      out.push_back(f);
      continue;
    }
    cplx r1s = r1 * r1, r2s = r2 * r2, r3s = r3 * r3;
    cplx k = 2.0 * r1s * r2s * r3s - r1s * r1s - r2s * r2s - r3s * r3s + 1.0;
    cplx f23 = (r2 * r3 - r1) * (r2 * r3 + r1), f13 = (r1 * r3 - r2) * (r1 * r3 + r2),
         f12 = (r1 * r2 - r3) * (r1 * r2 + r3);
    cplx a2 = f13 * f12;
    Gram Qp{};
    Qp[0][0] = f23 * f13;
    Qp[1][1] = f23 * f12;
    Qp[2][2] = a2;
    Qp[0][1] = Qp[1][0] = r3 * r2 * k / 2.0;
    Qp[0][2] = Qp[2][0] = r3 * r1 * k / 2.0;
    Qp[1][2] = Qp[2][1] = r2 * r1 * k / 2.0;
    cplx mu = R[0] * r1s * r1s + R[2] * r1s + R[0];
    cplx r = std::sqrt(-mu / dl);
    for (int br : {1, -1}) {
      Gram M;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) M[a][b] = a2 * nd.Q[a][b] + double(br) * r * Qp[a][b];
      f.conic = restrict_gram(M, f.plane);
      out.push_back(f);
    }
  }
  return out;
}

// Features of the exact records, with the principal square root of each generator.
std::vector<Feature> exact_features(const NodeConics& nc, bool conics) {
  std::vector<cplx> roots;
  for (auto& g : nc.tower->generators()) roots.push_back(std::sqrt(cplx(g.get_d())));
  std::vector<Feature> out;
  for (unsigned m = 0; m < 16; ++m)
    for (int b = 0; b < (conics ? 2 : 1); ++b) {
      const ConicRecord& rec = nc.records[2 * m + b];
      Feature f;
      for (int k = 0; k < 4; ++k) f.plane[k] = evaluate_numeric(rec.plane[k], roots);
      for (int k = 0; k < 3; ++k) f.plane[k] /= f.plane[3];
      f.plane[3] = 1.0;
      if (conics) {
        Gram M{};
        for (auto& [mono, c] : rec.quad.terms()) {
          int a = -1, bb = -1;
          for (int k = 0; k < 4; ++k)
            for (int e = 0; e < mono[k]; ++e) (a < 0 ? a : bb) = k;
          cplx x = evaluate_numeric(c, roots);
          if (a == bb) M[a][a] += x;
          else M[a][bb] += x / 2.0, M[bb][a] += x / 2.0;
        }
        f.conic = restrict_gram(M, f.plane);
      }
      out.push_back(f);
    }
  return out;
}

template <std::size_t N>
double proj_dist(const std::array<cplx, N>& u, const std::array<cplx, N>& v) {
  cplx ip = 0;
  double nu = 0, nv = 0;
  for (std::size_t k = 0; k < N; ++k) {
    ip += std::conj(u[k]) * v[k];
    nu += std::norm(u[k]);
    nv += std::norm(v[k]);
  }
  if (nu == 0 || nv == 0) return 1;
  return std::sqrt(std::max(0.0, 1.0 - std::norm(ip) / (nu * nv)));
}

double distance(const Feature& a, const Feature& b, bool conics) {
  double d = proj_dist(a.plane, b.plane);
  return conics ? d + proj_dist(a.conic, b.conic) : d;
}

// For each element of `from`, the index of its nearest element of `to`;
// empty if some match is ambiguous or two elements land on the same target.
std::optional<std::vector<std::size_t>> match(const std::vector<Feature>& from, const std::vector<Feature>& to,
                                              bool conics, double ratio) {
  if (from.size() != to.size()) return std::nullopt;
  std::vector<std::size_t> out(from.size());
  std::vector<bool> used(to.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    double best = 1e300, second = 1e300;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < to.size(); ++j) {
      double d = distance(from[i], to[j], conics);
      if (d < best) second = best, best = d, arg = j;
      else if (d < second) second = d;
    }
    if (!(second > ratio * best) || used[arg]) return std::nullopt;
    used[arg] = true;
    out[i] = arg;
  }
  return out;
}

// --- paths ----------------------------------------------------------------------

using Segment = std::function<CPoint(double)>;

CPoint with(const CPoint& base, int k, cplx v) {
  CPoint p = base;
  p[k] = v;
  return p;
}

// Values that must stay away from the loop: every factor whose vanishing
// degenerates the construction for this node.
std::vector<std::function<cplx(const CPoint&)>> bad_functions(const NodeData& nd) {
  std::vector<std::function<cplx(const CPoint&)>> fs;
  for (auto h : all_hyperplanes()) fs.push_back([h](const CPoint& p) { return cform(h, p); });
  fs.push_back(cdelta);
  int i = nd.node;
  fs.push_back([i](const CPoint& p) { return cbeta(p, i); });
  auto res = [nd](const CPoint& p) { return residual(p, nd); };
  fs.push_back([res](const CPoint& p) { return res(p)[0]; });
  fs.push_back([res](const CPoint& p) { return res(p)[1]; });
  fs.push_back([res](const CPoint& p) { auto r = res(p); return 2.0 * r[0] + r[2]; });
  fs.push_back([res](const CPoint& p) { auto r = res(p); return 2.0 * r[0] - r[2]; });
  for (auto h : all_hyperplanes()) fs.push_back([res, h](const CPoint& p) { return cform(h, res(p)); });
  return fs;
}

// Roots in v of f(base with coordinate k = v); f is a polynomial of low degree.
std::vector<cplx> roots_in(const std::function<cplx(const CPoint&)>& f, const CPoint& base, int k, cplx center,
                           double radius) {
  constexpr int N = 16;
  std::vector<cplx> vals(N), coeffs(N);
  for (int j = 0; j < N; ++j) vals[j] = f(with(base, k, center + radius * std::polar(1.0, 2 * kPi * j / N)));
  for (int c = 0; c < N; ++c) {
    cplx s = 0;
    for (int j = 0; j < N; ++j) s += vals[j] * std::polar(1.0, -2 * kPi * j * c / N);
    coeffs[c] = s / double(N);
  }
  double mx = 0;
  for (auto& c : coeffs) mx = std::max(mx, std::abs(c));
  if (mx == 0) return {};
  while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-10 * mx) coeffs.pop_back();
  auto ws = polynomial_roots(coeffs);
  for (auto& w : ws) w = center + radius * w;
  return ws;
}

double segment_point_distance(cplx a, cplx b, cplx s) {
  cplx d = b - a;
  double t = std::norm(d) == 0 ? 0 : std::clamp(std::real((s - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
  return std::abs(a + t * d - s);
}

}  // namespace

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  std::size_t n = coeffs.size() - 1;
  cplx lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  double bound = 1;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, 1 + std::abs(coeffs[k]));
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = bound * std::pow(cplx(0.4, 0.9), double(k)) / std::pow(std::abs(cplx(0.4, 0.9)), double(k));
  auto eval = [&](cplx x) {
    cplx s = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) s = s * x + coeffs[k];
    return s;
  };
  for (int it = 0; it < 2000; ++it) {
    double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cplx den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (den == 0.0) den = 1e-300;
      cplx dz = eval(z[k]) / den;
      z[k] -= dz;
      change = std::max(change, std::abs(dz));
    }
    if (change < 1e-15 * bound) break;
  }
  return z;
}

LoopPath plan_loop(const SurfaceParams& p, const LoopTarget& target, int node_index) {
  require_smooth(p);
  LoopPath path;
  path.target = target;
  NodeData nd = node_data(node_index);
  CPoint base = to_cpoint(p);

  if (target.is_delta()) {
    if (sgn(p[0]) == 0) throw DegenerateError("the Delta loop needs A != 0");
    path.coordinate = 1;
    Rational K = delta(p) - p[0] * p[1] * p[1];
    if (sgn(K) == 0) {
      // B' = 0: the two roots of Delta in B coincide; move A first.
      double dA = 1e300;
      for (auto& f : bad_functions(nd))
        for (auto& z : roots_in(f, base, 0, base[0], 1 + std::abs(base[0])))
          if (std::abs(z - base[0]) > 1e-9) dA = std::min(dA, std::abs(z - base[0]));
      path.epsilon = 0.25 * std::min(dA, std::abs(base[0]));
      base[0] += *path.epsilon;
    }
    const auto& [A, B, C, D, E] = base;
    cplx Kc = 16.0 * A * A * A - 4.0 * A * (C * C + D * D + E * E) + 4.0 * C * D * E;
    cplx Bp = std::sqrt(-Kc / A);
    path.center = Bp;
    double pb = 2 * std::abs(Bp);
    for (int s : {1, -1})
      for (auto [c, d, e] : {std::array{2, 2, 2}, {2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}})
        pb = std::min(pb, std::abs(4.0 * A + double(s) * Bp + double(c) * C + double(d) * D + double(e) * E));
    path.printed_bound = pb;
  } else {
    Hyperplane h = *target.hyperplane;
    const auto& form = hyperplane_form(h);
    std::string nm = name(h);
    int k = nm == "A" ? 0 : nm[0] == 'q' ? (nm[2] == 'C' ? 2 : nm[2] == 'D' ? 3 : 4) : 1;
    if (form[k] == 0)
      for (k = 0; form[k] == 0; ++k) {
      }
    path.coordinate = k;
    path.center = base[k] - cform(h, base) / double(form[k]);
    if (h == Hyperplane::QpC) {
      const auto& [A, B, C, D, E] = base;
      path.printed_bound = std::min({std::abs(B + 2.0 * D + 2.0 * E), std::abs(-B + 2.0 * D + 2.0 * E),
                                     std::abs(8.0 * A + B + 2.0 * D - 2.0 * E), std::abs(8.0 * A - B + 2.0 * D - 2.0 * E)});
    }
  }
  path.base = base;
  int k = path.coordinate;
  cplx v0 = base[k], vs = path.center;
  double scale = 1 + std::abs(v0) + std::abs(vs);

  std::vector<cplx> avoid;
  for (auto& f : bad_functions(nd))
    for (auto& z : roots_in(f, base, k, vs, scale))
      if (std::abs(z - vs) > 1e-7 * scale) avoid.push_back(z);
  path.clearance = 1e300;
  double base_clear = 1e300;
  for (auto& z : avoid) {
    path.clearance = std::min(path.clearance, std::abs(z - vs));
    base_clear = std::min(base_clear, std::abs(z - v0));
  }
  path.rho = 0.5 * std::min({path.clearance, path.printed_bound.value_or(1e300), std::abs(v0 - vs)});
  if (!(path.rho > 1e-12 * scale)) throw DegenerateError("no room for a loop around " + target.name());

  // Approach: prefer the straight radial segment; otherwise the polyline
  // with the largest clearance.
  double margin = 0.5 * std::min(path.rho, base_clear);
  auto score = [&](const std::vector<cplx>& pts) {
    double s = 1e300;
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      for (auto& z : avoid) s = std::min(s, segment_point_distance(pts[j], pts[j + 1], z));
      if (segment_point_distance(pts[j], pts[j + 1], vs) < path.rho * (1 - 1e-9)) return -1.0;
    }
    return s;
  };
  double th0 = std::arg(v0 - vs), dist0 = std::abs(v0 - vs);
  std::vector<cplx> best{v0, vs + path.rho * std::polar(1.0, th0)};
  double best_score = score(best);
  if (best_score < margin) {
    for (int j = 0; j < 24; ++j) {
      double th = th0 + 2 * kPi * j / 24;
      cplx end = vs + path.rho * std::polar(1.0, th);
      std::vector<std::vector<cplx>> cands{{v0, end}};
      for (double f : {0.5, 1.0, 1.5, 2.0}) cands.push_back({v0, vs + f * dist0 * std::polar(1.0, th), end});
      for (auto& c : cands) {
        double s = score(c);
        if (s > best_score) best_score = s, best = c;
      }
    }
  }
  path.approach = best;
  return path;
}

namespace {

std::vector<Segment> segments(const LoopPath& path, const CPoint& original) {
  std::vector<Segment> segs;
  int k = path.coordinate;
  if (path.epsilon) {
    cplx a0 = original[0], a1 = path.base[0];
    segs.push_back([=](double t) { return with(original, 0, a0 + t * (a1 - a0)); });
  }
  const auto& ap = path.approach;
  CPoint base = path.base;
  for (std::size_t j = 0; j + 1 < ap.size(); ++j) {
    cplx a = ap[j], b = ap[j + 1];
    segs.push_back([=](double t) { return with(base, k, a + t * (b - a)); });
  }
  cplx c = path.center, start = ap.back() - c;
  segs.push_back([=](double t) { return with(base, k, c + start * std::polar(1.0, 2 * kPi * t)); });
  for (std::size_t j = ap.size() - 1; j > 0; --j) {
    cplx a = ap[j], b = ap[j - 1];
    segs.push_back([=](double t) { return with(base, k, a + t * (b - a)); });
  }
  if (path.epsilon) {
    cplx a0 = path.base[0], a1 = original[0];
    segs.push_back([=](double t) { return with(original, 0, a0 + t * (a1 - a0)); });
  }
  return segs;
}

// Follow the records once round the loop; result[j] = index at the end of the record starting at j.
std::optional<std::vector<std::size_t>> follow(const std::vector<Segment>& segs, const std::vector<Feature>& start,
                                               const NodeData& nd, bool conics, int steps, double ratio) {
  std::vector<Feature> prev = start;
  std::vector<std::size_t> where(start.size());
  for (std::size_t j = 0; j < where.size(); ++j) where[j] = j;
  try {
    for (auto& seg : segs)
      for (int s = 1; s <= steps; ++s) {
        auto cur = numeric_features(seg(double(s) / steps), nd, conics);
        auto m = match(prev, cur, conics, ratio);
        if (!m) return std::nullopt;
        for (auto& w : where) w = (*m)[w];
        prev = std::move(cur);
      }
    auto close = match(prev, start, conics, ratio);
    if (!close) return std::nullopt;
    for (auto& w : where) w = (*close)[w];
  } catch (const NumericError&) {
    return std::nullopt;
  }
  return where;
}

std::optional<SignedGamma> as_gamma(const Perm& perm, bool conics) {
  for (unsigned g = 0; g < 16; ++g)
    for (int c = 0; c < (conics ? 2 : 1); ++c) {
      bool ok = true;
      for (unsigned m = 0; m < 16 && ok; ++m) {
        if (!conics) ok = perm(m) == (m ^ g);
        else
          for (unsigned b = 0; b < 2; ++b) ok = ok && perm(2 * m + b) == 2 * (m ^ g) + (b ^ unsigned(c));
      }
      if (ok) return SignedGamma{c == 1, g};
    }
  return std::nullopt;
}

TrackResult track(const SurfaceParams& p, const LoopTarget& target, const TrackOptions& opts, int node_index,
                  bool conics) {
  TrackResult res;
  res.path = plan_loop(p, target, node_index);
  NodeData nd = node_data(node_index);
  NodeConics nc = conics_for_node(p, node_index);
  CPoint base = to_cpoint(p);
  auto start = numeric_features(base, nd, conics);
  auto exact = exact_features(nc, conics);
  auto label = match(start, exact, conics, opts.ratio);
  if (!label) {
    res.error = "numeric records do not match the exact records at the base point";
    return res;
  }
  auto segs = segments(res.path, base);
  for (int steps = opts.steps; steps <= opts.max_steps; steps *= 2) {
    res.steps_used = steps;
    auto where = follow(segs, start, nd, conics, steps, opts.ratio);
    if (!where) continue;
    std::vector<std::uint32_t> img(start.size());
    for (std::size_t j = 0; j < start.size(); ++j) img[(*label)[j]] = std::uint32_t((*label)[(*where)[j]]);
    res.perm = Perm(std::move(img));
    res.ok = true;
    res.as_gamma = as_gamma(res.perm, conics);
    return res;
  }
  res.error = "ambiguous matching at " + std::to_string(opts.max_steps) + " steps";
  return res;
}

}  // namespace

TrackResult numeric_track_planes(const SurfaceParams& p, const LoopTarget& target, const TrackOptions& opts,
                                 int node) {
  return track(p, target, opts, node, false);
}

TrackResult numeric_track_conics(const SurfaceParams& p, const LoopTarget& target, const TrackOptions& opts,
                                 int node) {
  return track(p, target, opts, node, true);
}

}  // namespace quartic
