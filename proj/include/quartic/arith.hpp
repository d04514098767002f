// Exact rationals, desk-scale factorization, and F2 linear algebra on
// square classes of Q*.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quartic {

using Integer = mpz_class;
using Rational = mpq_class;

// A mathematically degenerate input (point on a discriminant, zero divisor
// where the caller promised a unit, ...). Maps to CLI exit code 2.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A postcondition that must hold whenever the code is correct.
// Maps to CLI exit code 3.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);   // "3", "-7/2"
std::string to_string(const Rational& r);           // "n" or "n/d"

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational inverse(const Rational& r) {
  if (is_zero(r)) throw DegenerateError("inverse of zero");
  return Rational(1) / r;
}

// Prime factorization of |n| (n != 0) as (prime, exponent), primes ascending.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

// Exact square test; returns the root.
std::optional<Integer> integer_sqrt(const Integer& n);
std::optional<Rational> rational_sqrt(const Rational& r);

struct SquareClass {
  int sign = 1;
  Integer squarefree_part = 1;  // positive, squarefree

  Integer value() const { return sign * squarefree_part; }
  bool is_trivial() const { return sign == 1 && squarefree_part == 1; }
  bool operator==(const SquareClass&) const = default;
};

SquareClass squarefree_part(const Rational& r);

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> basis_indices;
};

RankResult square_class_rank(const std::vector<Rational>& classes);

std::optional<std::vector<std::size_t>> class_in_span(const Rational& target,
                                                      const std::vector<Rational>& basis);

// Reusable solver for repeated span queries against a fixed basis. Only the
// basis is ever factored; a target is reduced by the basis primes and the
// cofactor must be a perfect square, so huge targets never reach the
// factorizer.
class SquareClassSolver {
 public:
  explicit SquareClassSolver(const std::vector<Rational>& basis);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& independent_indices() const { return independent_; }

  std::optional<std::vector<std::size_t>> solve(const Rational& target) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  std::optional<Bits> vector_of(const Rational& target) const;

  std::size_t n_ = 0;
  std::vector<Integer> primes_;  // column j+1 is primes_[j]; column 0 is the sign
  struct Row {
    Bits v;        // reduced class vector
    Bits combo;    // which basis entries were combined
    std::size_t pivot;
  };
  std::vector<Row> pivots_;
  std::vector<std::size_t> independent_;
};

}  // namespace quartic
