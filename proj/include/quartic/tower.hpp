// Multiquadratic fields Q(sqrt d1, ..., sqrt dn).
//
// An element is a sparse vector over the monomial basis prod_{j in S} sqrt d_j,
// S a subset of the generators encoded as a bitmask. A null descriptor means
// "plain rational", which mixes freely with elements of any tower.
#pragma once

#include "quartic/arith.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quartic {

class TowerDescriptor;
using Tower = std::shared_ptr<const TowerDescriptor>;

class TowerDescriptor {
 public:
  // Radicands are reduced to squarefree integers; they must be independent
  // square classes.
  static Tower make(const std::vector<Rational>& radicands);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Integer>& generators() const { return gens_; }
  const Integer& generator(std::size_t j) const { return gens_[j]; }
  // prod of d_j over j in mask (the factor picked up when two monomials overlap)
  const Integer& overlap(std::uint32_t mask) const { return overlap_[mask]; }
  const SquareClassSolver& solver() const { return solver_; }

 private:
  TowerDescriptor(std::vector<Integer> gens, SquareClassSolver solver);
  std::vector<Integer> gens_;
  std::vector<Integer> overlap_;
  SquareClassSolver solver_;
};

class TowerElement {
 public:
  using Term = std::pair<std::uint32_t, Rational>;

  TowerElement() = default;
  TowerElement(const Rational& r);  // NOLINT: rationals embed implicitly
  TowerElement(long v) : TowerElement(Rational(v)) {}
  TowerElement(int v) : TowerElement(Rational(v)) {}
  TowerElement(Tower t, std::vector<Term> terms);  // terms may be unsorted

  static TowerElement monomial(Tower t, std::uint32_t mask, const Rational& c = 1);

  const Tower& tower() const { return tower_; }
  const std::vector<Term>& terms() const { return terms_; }  // sorted by mask, nonzero
  Rational coeff(std::uint32_t mask) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Rational rational_part() const { return coeff(0); }

  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend bool operator==(const TowerElement& a, const TowerElement& b);
  friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

  TowerElement scaled(const Rational& c) const;

  // Replace a null descriptor by t (used before serialization).
  TowerElement in(const Tower& t) const;

 private:
  static Tower common(const TowerElement& a, const TowerElement& b);
  Tower tower_;
  std::vector<Term> terms_;
};

inline bool is_zero(const TowerElement& x) { return x.is_zero(); }
TowerElement inverse(const TowerElement& x);
std::string to_string(const TowerElement& x);

TowerElement invert(const TowerElement& x);
TowerElement apply_sign_automorphism(const TowerElement& x, const std::vector<int>& signs);
std::optional<TowerElement> tower_sqrt(const TowerElement& x);
std::optional<TowerElement> embed_rational_sqrt(const Rational& r, const Tower& t);

// Numeric value once a complex square root has been chosen for each generator.
std::complex<double> evaluate_numeric(const TowerElement& x,
                                      const std::vector<std::complex<double>>& roots);

// Field embedding of one tower into another, fixed by the images of the
// generator square roots.
class TowerEmbedding {
 public:
  TowerEmbedding(Tower from, Tower to);  // throws DegenerateError if a class is missing
  TowerElement operator()(const TowerElement& x) const;
  const Tower& target() const { return to_; }

 private:
  Tower from_, to_;
  std::vector<TowerElement> basis_images_;
};

}  // namespace quartic
