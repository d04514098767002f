#include "quartic/groups.hpp"

#include <functional>
#include <unordered_map>

namespace quartic {

namespace {

template <class T, std::size_t N>
using Mat = std::array<std::array<T, N>, N>;

template <class T, std::size_t N>
Mat<T, N> identity_matrix() {
  Mat<T, N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m[i][j] = T(i == j ? 1 : 0);
  return m;
}

template <class T, std::size_t N>
Mat<T, N> multiply(const Mat<T, N>& a, const Mat<T, N>& b) {
  Mat<T, N> r;
  for (auto& row : r) row.fill(T(0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < N; ++j)
        if (!is_zero(b[k][j])) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

template <class T, std::size_t N>
Mat<T, N> invert_matrix(Mat<T, N> a) {
  auto inv = identity_matrix<T, N>();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    while (p < N && is_zero(a[p][c])) ++p;
    if (p == N) throw InvariantError("singular group matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    T f = inverse(a[c][c]);
    for (std::size_t j = 0; j < N; ++j) {
      a[c][j] = a[c][j] * f;
      inv[c][j] = inv[c][j] * f;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || is_zero(a[r][c])) continue;
      T g = a[r][c];
      for (std::size_t j = 0; j < N; ++j) {
        a[r][j] = a[r][j] - g * a[c][j];
        inv[r][j] = inv[r][j] - g * inv[c][j];
      }
    }
  }
  return inv;
}

template <class T, std::size_t N>
void normalize_matrix(Mat<T, N>& m) {
  for (auto& row : m)
    for (auto& c : row)
      if (!is_zero(c)) {
        T f = inverse(c);
        for (auto& r2 : m)
          for (auto& x : r2)
            if (!is_zero(x)) x = x * f;
        return;
      }
  throw InvariantError("zero group matrix");
}

Mat3 gaussian_matrix(const std::array<std::array<int, 4>, 4>& re, const std::array<std::array<int, 4>, 4>& im) {
  Mat3 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = Gaussian(re[i][j], im[i][j]);
  return m;
}

Mat4 rational_matrix(const std::array<std::array<int, 5>, 5>& v) {
  Mat4 m;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = v[i][j];
  return m;
}

}  // namespace

GroupElement::GroupElement() : m3_(identity_matrix<Gaussian, 4>()), m4_(identity_matrix<Rational, 5>()) {
  normalize();
}

GroupElement::GroupElement(const Mat3& m3, const Mat4& m4) : m3_(m3), m4_(m4) { normalize(); }

void GroupElement::normalize() {
  normalize_matrix(m3_);
  normalize_matrix(m4_);
  key_.clear();
  for (auto& row : m3_)
    for (auto& c : row) key_ += c.re.get_str() + ":" + c.im.get_str() + ",";
  key_ += "|";
  for (auto& row : m4_)
    for (auto& c : row) key_ += c.get_str() + ",";
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(multiply(a.m3_, b.m3_), multiply(a.m4_, b.m4_));
}

GroupElement GroupElement::inverse() const { return GroupElement(invert_matrix(m3_), invert_matrix(m4_)); }

bool GroupElement::p3_is_identity() const { return m3_ == identity_matrix<Gaussian, 4>(); }
bool GroupElement::is_identity() const { return p3_is_identity() && m4_ == identity_matrix<Rational, 5>(); }

std::array<Gaussian, 4> GroupElement::apply(const std::array<Gaussian, 4>& P) const {
  std::array<Gaussian, 4> r;
  for (int i = 0; i < 4; ++i) {
    r[i] = 0;
    for (int j = 0; j < 4; ++j) r[i] += m3_[i][j] * P[j];
  }
  return r;
}

std::array<Rational, 5> GroupElement::apply(const std::array<Rational, 5>& p) const {
  std::array<Rational, 5> r;
  for (int i = 0; i < 5; ++i) {
    r[i] = 0;
    for (int j = 0; j < 5; ++j) r[i] += m4_[i][j] * p[j];
  }
  return r;
}

GroupElement from_signed_perm(const SignedPerm& g) {
  Mat3 m;
  for (auto& row : m) row.fill(Gaussian(0));
  for (int k = 0; k < 4; ++k) m[k][g.perm[k]] = Gaussian(int(g.sign[k]));
  return GroupElement(m, identity_matrix<Rational, 5>());
}

const std::array<GroupElement, 5>& phi_generators() {
  static const std::array<GroupElement, 5> gens = [] {
    using I4 = std::array<std::array<int, 4>, 4>;
    const I4 zero{};
    std::array<GroupElement, 5> g;
    g[0] = GroupElement(gaussian_matrix({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}}, zero),
                        rational_matrix({{{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}}));
    g[1] = GroupElement(gaussian_matrix({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}}, zero),
                        rational_matrix({{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}}}));
    g[2] = GroupElement(gaussian_matrix({{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}}, zero),
                        rational_matrix({{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}}}));
    g[3] = GroupElement(gaussian_matrix({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
                                        {{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}),
                        rational_matrix({{{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, -1}}}));
    g[4] = GroupElement(gaussian_matrix({{{1, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}}, zero),
                        rational_matrix({{{2, 0, 1, 0, 0}, {0, 0, 0, 8, -8}, {12, 0, -2, 0, 0}, {0, 1, 0, 2, 2}, {0, -1, 0, 2, 2}}}));
    return g;
  }();
  return gens;
}

const std::array<GroupElement, 4>& gamma_generators() {
  static const std::array<GroupElement, 4> gens = [] {
    std::array<GroupElement, 4> g;
    for (int j = 0; j < 4; ++j) g[j] = from_signed_perm(gamma_element(1u << j));
    return g;
  }();
  return gens;
}

std::vector<GroupElement> gamma_group() {
  std::vector<GroupElement> out;
  for (unsigned m = 0; m < 16; ++m) out.push_back(from_signed_perm(gamma_element(m)));
  return out;
}

std::optional<unsigned> gamma_mask_of(const GroupElement& g) {
  static const std::vector<GroupElement> gam = gamma_group();
  for (unsigned m = 0; m < 16; ++m)
    if (gam[m].m3() == g.m3()) return m;
  return std::nullopt;
}

const std::vector<GroupElement>& omega_group() {
  static const std::vector<GroupElement> all = [] {
    constexpr std::size_t cap = 20000;
    std::vector<GroupElement> order{GroupElement()};
    std::unordered_map<std::string, std::size_t> seen{{order[0].key(), 0}};
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (const auto& g : phi_generators()) {
        GroupElement h = g * order[k];
        if (seen.emplace(h.key(), order.size()).second) {
          order.push_back(std::move(h));
          if (order.size() > cap) throw InvariantError("Omega closure exceeded its cap");
        }
      }
    }
    return order;
  }();
  return all;
}

Perm action_on_hyperplanes(const GroupElement& g) {
  // The image of {c.p = 0} under p -> M p is {c M^-1 . p = 0}.
  Mat4 inv = invert_matrix(g.m4());
  std::vector<std::uint32_t> img(kHyperplanes);
  for (auto h : all_hyperplanes()) {
    std::vector<Rational> c(5, Rational(0));
    for (int j = 0; j < 5; ++j)
      for (int i = 0; i < 5; ++i) c[j] += hyperplane_form(h)[i] * inv[i][j];
    bool found = false;
    for (auto k : all_hyperplanes()) {
      std::vector<Rational> f(hyperplane_form(k).begin(), hyperplane_form(k).end());
      if (projectively_equal(c, f)) {
        img[std::size_t(h)] = std::uint32_t(k);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("group element does not permute the singular hyperplanes");
  }
  return Perm(std::move(img));
}

Perm action_on_nodes(const GroupElement& g) {
  std::vector<std::uint32_t> img(kNodes);
  for (int i = 1; i <= kNodes; ++i) {
    auto q = g.apply(node(i));
    bool found = false;
    for (int j = 1; j <= kNodes; ++j) {
      if (projectively_equal({q.begin(), q.end()}, {node(j).begin(), node(j).end()})) {
        img[i - 1] = std::uint32_t(j - 1);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("group element does not permute the nodes");
  }
  return Perm(std::move(img));
}

namespace {
std::string named_cycles(const Perm& p, const std::function<std::string(std::uint32_t)>& label) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p(s) == s) continue;
    out += "(";
    for (std::uint32_t k = s; !seen[k]; k = p(k)) {
      seen[k] = true;
      out += (k == s ? "" : ",") + label(k);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}
}  // namespace

std::string hyperplane_cycles(const Perm& p) {
  return named_cycles(p, [](std::uint32_t k) { return name(all_hyperplanes()[k]); });
}

std::string node_cycles(const Perm& p) {
  return named_cycles(p, [](std::uint32_t k) { return "q" + std::to_string(k + 1); });
}

OmegaReport omega_report() {
  OmegaReport r;
  auto gam = gamma_group();
  r.gamma_order = 0;
  {
    std::unordered_map<std::string, int> keys;
    for (auto& g : gam) keys[g.key()]++;
    r.gamma_order = keys.size();
  }
  r.gamma_abelian = true;
  r.gamma_involutions = true;
  for (auto& a : gam) {
    if (!a.is_identity() && !(a * a).is_identity()) r.gamma_involutions = false;
    for (auto& b : gam)
      if (!(a * b == b * a)) r.gamma_abelian = false;
  }
  const auto& om = omega_group();
  r.omega_order = om.size();

  // Normality needs only the generators on both sides.
  r.gamma_normal = true;
  for (auto& phi : phi_generators()) {
    GroupElement pinv = phi.inverse();
    for (auto& gm : gamma_generators()) {
      auto c = phi * gm * pinv;
      if (!gamma_mask_of(c) || !(c.m4() == GroupElement().m4())) r.gamma_normal = false;
    }
  }
  if (r.gamma_normal && r.omega_order % r.gamma_order == 0) r.quotient_order = r.omega_order / r.gamma_order;

  r.trivial_centre = true;
  for (auto& z : om) {
    if (z.is_identity()) continue;
    bool central = true;
    for (auto& phi : phi_generators())
      if (!(z * phi == phi * z)) {
        central = false;
        break;
      }
    if (central) {
      r.trivial_centre = false;
      break;
    }
  }

  std::vector<Perm> hyp_gens, node_gens;
  for (auto& phi : phi_generators()) {
    hyp_gens.push_back(action_on_hyperplanes(phi));
    node_gens.push_back(action_on_nodes(phi));
  }
  r.hyperplane_image_order = generate_group(hyp_gens).size();
  r.gamma_in_kernel = true;
  for (auto& g : gam)
    if (!action_on_hyperplanes(g).is_identity() || !action_on_nodes(g).is_identity()) r.gamma_in_kernel = false;

  for (auto& p : generate_group(node_gens)) r.quotient_element_orders[p.order()]++;
  const std::map<std::size_t, std::size_t> s6{{1, 1}, {2, 75}, {3, 80}, {4, 180}, {5, 144}, {6, 240}};
  r.quotient_matches_s6_statistics = r.quotient_element_orders == s6;
  return r;
}

unsigned conjugate_rule(const GroupElement& phi, Hyperplane H, const std::array<unsigned, kHyperplanes>& table_q1) {
  Hyperplane image = Hyperplane(action_on_hyperplanes(phi)(std::uint32_t(H)));
  unsigned gm = table_q1[std::size_t(image)];
  GroupElement conj = phi.inverse() * from_signed_perm(gamma_element(gm)) * phi;
  auto mask = gamma_mask_of(conj);
  if (!mask) throw InvariantError("conjugate of a Gamma element left Gamma");
  return *mask;
}

const GroupElement& transporter(int from, int to) {
  static const auto table = [] {
    std::array<std::array<int, kNodes>, kNodes> idx;
    for (auto& r : idx) r.fill(-1);
    const auto& om = omega_group();
    for (std::size_t k = 0; k < om.size(); ++k) {
      Perm p = action_on_nodes(om[k]);
      for (int i = 0; i < kNodes; ++i)
        if (idx[i][p(i)] < 0) idx[i][p(i)] = int(k);
    }
    return idx;
  }();
  int k = table.at(from - 1).at(to - 1);
  if (k < 0) throw InvariantError("Omega is not transitive on the nodes");
  return omega_group()[k];
}

}  // namespace quartic
