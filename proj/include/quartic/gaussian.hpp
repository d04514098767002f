// Gaussian rationals Q(i): the coefficient field of the P^3 half of Omega.
#pragma once

#include "quartic/arith.hpp"

#include <complex>
#include <string>

namespace quartic {

struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(const Rational& r, const Rational& i = 0) : re(r), im(i) {}  // NOLINT
  Gaussian(int r) : re(r) {}                                            // NOLINT
  static Gaussian i() { return {0, 1}; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
  // total order, only for use as map keys
  friend bool operator<(const Gaussian& a, const Gaussian& b) {
    int c = cmp(a.re, b.re);
    return c != 0 ? c < 0 : cmp(a.im, b.im) < 0;
  }
  Gaussian conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline bool is_zero(const Gaussian& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }
inline Gaussian inverse(const Gaussian& g) {
  Rational n = g.re * g.re + g.im * g.im;
  if (sgn(n) == 0) throw DegenerateError("inverse of zero");
  return {g.re / n, -g.im / n};
}
inline std::string to_string(const Gaussian& g) {
  if (sgn(g.im) == 0) return g.re.get_str();
  std::string im = g.im == 1 ? "i" : g.im == -1 ? "-i" : g.im.get_str() + "*i";
  if (sgn(g.re) == 0) return im;
  return "(" + g.re.get_str() + (sgn(g.im) > 0 ? "+" : "") + im + ")";
}

}  // namespace quartic
