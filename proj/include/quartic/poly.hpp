// Sparse multivariate polynomials over an exact field T.
//
// T needs +, -, *, construction from int, and free functions is_zero(T),
// inverse(T), to_string(T). Rational, Gaussian and TowerElement qualify.
#pragma once

#include "quartic/arith.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

constexpr unsigned kMaxArity = 5;
using Monomial = std::array<std::uint8_t, kMaxArity>;

inline unsigned degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lexicographic, larger monomials first (x > y > z > w, A > ... > E).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Unqualified so that argument-dependent lookup sees overloads declared later.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}

template <class U, class T>
U coerce(const T& v) {
  if constexpr (std::is_same_v<U, std::complex<double>>) {
    if constexpr (std::is_same_v<T, Rational>) return v.get_d();
    else return v.to_complex();
  } else {
    return U(v);
  }
}

template <class T>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, T, GrlexGreater>;

  explicit MultiPoly(unsigned arity = 4) : arity_(arity) {
    if (arity == 0 || arity > kMaxArity) throw std::invalid_argument("unsupported arity");
  }

  static MultiPoly constant(unsigned arity, const T& c) {
    MultiPoly p(arity);
    p.add_term(Monomial{}, c);
    return p;
  }
  static MultiPoly variable(unsigned arity, unsigned k) {
    MultiPoly p(arity);
    Monomial m{};
    m.at(k) = 1;
    p.add_term(m, T(1));
    return p;
  }
  // sum_k coeffs[k] * x_k
  static MultiPoly linear(const std::vector<T>& coeffs) {
    MultiPoly p(coeffs.size());
    for (unsigned k = 0; k < coeffs.size(); ++k) {
      Monomial m{};
      m[k] = 1;
      p.add_term(m, coeffs[k]);
    }
    return p;
  }

  unsigned arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(const Monomial& m, const T& c) {
    for (unsigned k = arity_; k < kMaxArity; ++k)
      if (m[k]) throw std::invalid_argument("monomial exceeds arity");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max<int>(d, degree(m));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = degree(terms_.begin()->first);
    for (auto& [m, c] : terms_)
      if (degree(m) != d) return false;
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r(arity_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, T(0) - c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (auto& [m, c] : o.terms_) add_term(m, T(0) - c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.arity_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (unsigned k = 0; k < kMaxArity; ++k) m[k] = ma[k] + mb[k];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly scaled(const T& c) const {
    MultiPoly r(arity_);
    if (coeff_is_zero(c)) return r;
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

  template <class U = T>
  U evaluate(const std::vector<U>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluate: arity mismatch");
    unsigned maxdeg = 0;
    for (auto& [m, c] : terms_)
      for (unsigned k = 0; k < arity_; ++k) maxdeg = std::max<unsigned>(maxdeg, m[k]);
    std::vector<std::vector<U>> pw(arity_);
    for (unsigned k = 0; k < arity_; ++k) {
      pw[k].push_back(U(1));
      for (unsigned e = 1; e <= maxdeg; ++e) pw[k].push_back(pw[k].back() * point[k]);
    }
    U acc(0);
    for (auto& [m, c] : terms_) {
      U term = coerce<U>(c);
      for (unsigned k = 0; k < arity_; ++k)
        if (m[k]) term = term * pw[k][m[k]];
      acc = acc + term;
    }
    return acc;
  }

  std::vector<MultiPoly> gradient() const {
    std::vector<MultiPoly> g(arity_, MultiPoly(arity_));
    for (auto& [m, c] : terms_)
      for (unsigned k = 0; k < arity_; ++k) {
        if (!m[k]) continue;
        Monomial d = m;
        --d[k];
        g[k].add_term(d, c * T(int(m[k])));
      }
    return g;
  }

  // Substitute x_k := forms[k] (each a polynomial of a common arity).
  MultiPoly compose(const std::vector<MultiPoly>& forms) const {
    if (forms.size() != arity_) throw std::invalid_argument("compose: arity mismatch");
    unsigned out_arity = forms.at(0).arity();
    std::vector<std::vector<MultiPoly>> pw(arity_);
    for (unsigned k = 0; k < arity_; ++k) pw[k].push_back(constant(out_arity, T(1)));
    MultiPoly r(out_arity);
    for (auto& [m, c] : terms_) {
      MultiPoly term = constant(out_arity, c);
      for (unsigned k = 0; k < arity_; ++k) {
        while (pw[k].size() <= m[k]) pw[k].push_back(pw[k].back() * forms[k]);
        if (m[k]) term = term * pw[k][m[k]];
      }
      r += term;
    }
    return r;
  }

  // f(x M): variable k is replaced by sum_j M[j][k] x_j, so that
  // act_linear(act_linear(f, M), N) == act_linear(f, N M).
  MultiPoly act_linear(const std::vector<std::vector<T>>& M) const {
    if (M.size() != arity_) throw std::invalid_argument("act_linear: size mismatch");
    std::vector<MultiPoly> forms;
    for (unsigned k = 0; k < arity_; ++k) {
      std::vector<T> col;
      for (unsigned j = 0; j < arity_; ++j) col.push_back(M.at(j).at(k));
      forms.push_back(linear(col));
    }
    if (!invertible(M)) throw std::invalid_argument("act_linear: singular matrix");
    return compose(forms);
  }

  // Eliminate the last variable with a nonzero plane coefficient.
  MultiPoly restrict_to_plane(const std::vector<T>& plane) const {
    if (plane.size() != arity_) throw std::invalid_argument("restrict_to_plane: arity mismatch");
    int e = -1;
    for (unsigned k = 0; k < arity_; ++k)
      if (!coeff_is_zero(plane[k])) e = k;
    if (e < 0) throw DegenerateError("restrict_to_plane: zero plane");
    T inv = inverse(plane[e]);
    std::vector<MultiPoly> forms;
    unsigned out = arity_ - 1;
    for (unsigned k = 0, j = 0; k < arity_; ++k) {
      if (int(k) == e) {
        std::vector<T> lin(out, T(0));
        for (unsigned a = 0, b = 0; a < arity_; ++a)
          if (int(a) != e) lin[b++] = T(0) - plane[a] * inv;
        forms.push_back(linear(lin));
      } else {
        forms.push_back(variable(out, j++));
      }
    }
    return compose(forms);
  }

  // f(s a + t b) as a binary form in (s, t).
  MultiPoly restrict_to_line(const std::vector<T>& a, const std::vector<T>& b) const {
    if (a.size() != arity_ || b.size() != arity_) throw std::invalid_argument("restrict_to_line: arity");
    if (proportional(a, b)) throw DegenerateError("restrict_to_line: coincident points");
    std::vector<MultiPoly> forms;
    for (unsigned k = 0; k < arity_; ++k) forms.push_back(linear({a[k], b[k]}));
    return compose(forms);
  }

  std::optional<MultiPoly> exact_divide(const MultiPoly& g) const {
    check(g);
    if (g.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    const auto& [lm, lc] = *g.terms_.begin();
    T lc_inv = inverse(lc);
    MultiPoly q(arity_), r = *this;
    while (!r.is_zero()) {
      const auto& [rm, rc] = *r.terms_.begin();
      Monomial d;
      for (unsigned k = 0; k < kMaxArity; ++k) {
        if (rm[k] < lm[k]) return std::nullopt;
        d[k] = rm[k] - lm[k];
      }
      T c = rc * lc_inv;
      MultiPoly t(arity_);
      t.add_term(d, c);
      q.add_term(d, c);
      r -= t * g;
    }
    return q;
  }

  std::string to_string() const {
    static const char* p4[] = {"x", "y", "z", "w"};
    static const char* p5[] = {"A", "B", "C", "D", "E"};
    static const char* p3[] = {"x", "y", "z"};
    static const char* p2[] = {"s", "t"};
    static const char* p1[] = {"t"};
    const char** names = arity_ == 5 ? p5 : arity_ == 4 ? p4 : arity_ == 3 ? p3 : arity_ == 2 ? p2 : p1;
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string cs = quartic::to_string(c);
      bool unit = degree(m) > 0 && cs == "1";
      bool compound = cs.find_first_of("+ ") != std::string::npos || (cs.find('-', 1) != std::string::npos);
      if (!unit) os << (compound ? "(" + cs + ")" : cs);
      bool need_star = !unit;
      for (unsigned k = 0; k < arity_; ++k) {
        if (!m[k]) continue;
        os << (need_star ? "*" : "") << names[k];
        if (m[k] > 1) os << "^" << int(m[k]);
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void check(const MultiPoly& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
  }
  static bool proportional(const std::vector<T>& a, const std::vector<T>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (!coeff_is_zero(a[i] * b[j] - a[j] * b[i])) return false;
    return true;
  }
  static bool invertible(std::vector<std::vector<T>> m) {
    std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && coeff_is_zero(m[p][c])) ++p;
      if (p == n) return false;
      std::swap(m[p], m[c]);
      T inv = inverse(m[c][c]);
      for (std::size_t r = c + 1; r < n; ++r) {
        if (coeff_is_zero(m[r][c])) continue;
        T f = m[r][c] * inv;
        for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
      }
    }
    return true;
  }

  unsigned arity_;
  Terms terms_;
};

using QPoly = MultiPoly<Rational>;

}  // namespace quartic
