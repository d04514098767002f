#include "quartic/arith.hpp"

#include <algorithm>
#include <map>

namespace quartic {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DegenerateError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text), 1);
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  } catch (const DegenerateError&) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    constexpr unsigned limit = 1000000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long long j = 1ull * i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(x - y);
          q = q * d % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer s;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    factor_large(s, out);
    factor_large(s, out);
    return;
  }
  Integer d = rho_factor(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw DegenerateError("factor of zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> out;
  for (unsigned p : small_primes()) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out[Integer(p)] += e;
    }
  }
  if (m > 1) {
    // Anything left with no factor below 1e6 and below 1e12 is prime.
    if (m < Integer(1000000) * 1000000) ++out[m];
    else factor_large(m, out);
  }
  return {out.begin(), out.end()};
}

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  auto a = integer_sqrt(r.get_num());
  if (!a) return std::nullopt;
  auto b = integer_sqrt(r.get_den());
  if (!b) return std::nullopt;
  return make_rational(*a, *b);
}

SquareClass squarefree_part(const Rational& r) {
  if (is_zero(r)) throw DegenerateError("square class of zero");
  Integer n = r.get_num() * r.get_den();
  SquareClass c;
  c.sign = sgn(n) < 0 ? -1 : 1;
  c.squarefree_part = 1;
  for (auto& [p, e] : factor(n))
    if (e % 2) c.squarefree_part *= p;
  return c;
}

// --- F2 linear algebra -----------------------------------------------------

namespace {
using Bits = std::vector<std::uint64_t>;
bool test(const Bits& b, std::size_t i) { return i / 64 < b.size() && (b[i / 64] >> (i % 64)) & 1; }
void flip(Bits& b, std::size_t i) {
  if (b.size() <= i / 64) b.resize(i / 64 + 1, 0);
  b[i / 64] ^= std::uint64_t(1) << (i % 64);
}
void xor_into(Bits& a, const Bits& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
}
std::optional<std::size_t> lowest(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b[w]) return w * 64 + __builtin_ctzll(b[w]);
  return std::nullopt;
}
}  // namespace

SquareClassSolver::SquareClassSolver(const std::vector<Rational>& basis) : n_(basis.size()) {
  std::vector<std::vector<std::pair<Integer, unsigned>>> facs;
  for (const auto& b : basis) {
    if (is_zero(b)) throw DegenerateError("zero entry in square-class basis");
    facs.push_back(factor(b.get_num() * b.get_den()));
    for (auto& [p, e] : facs.back())
      if (e % 2) primes_.push_back(p);
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());

  for (std::size_t k = 0; k < n_; ++k) {
    Row row;
    if (sgn(basis[k]) < 0) flip(row.v, 0);
    for (auto& [p, e] : facs[k]) {
      if (e % 2 == 0) continue;
      auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
      flip(row.v, 1 + (it - primes_.begin()));
    }
    flip(row.combo, k);
    for (const auto& piv : pivots_)
      if (test(row.v, piv.pivot)) {
        xor_into(row.v, piv.v);
        xor_into(row.combo, piv.combo);
      }
    auto lo = lowest(row.v);
    if (!lo) continue;
    row.pivot = *lo;
    // keep the echelon fully reduced so later lookups need a single pass
    for (auto& piv : pivots_)
      if (test(piv.v, row.pivot)) {
        xor_into(piv.v, row.v);
        xor_into(piv.combo, row.combo);
      }
    pivots_.push_back(std::move(row));
    independent_.push_back(k);
  }
}

std::optional<SquareClassSolver::Bits> SquareClassSolver::vector_of(const Rational& target) const {
  if (is_zero(target)) throw DegenerateError("zero target in square-class query");
  Bits v;
  if (sgn(target) < 0) flip(v, 0);
  Integer n = abs(target.get_num()) * target.get_den();
  for (std::size_t j = 0; j < primes_.size(); ++j) {
    Integer rest;
    auto e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), primes_[j].get_mpz_t());
    n = rest;
    if (e % 2) flip(v, 1 + j);
  }
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return v;
}

std::optional<std::vector<std::size_t>> SquareClassSolver::solve(const Rational& target) const {
  auto v = vector_of(target);
  if (!v) return std::nullopt;
  Bits combo;
  for (const auto& piv : pivots_)
    if (test(*v, piv.pivot)) {
      xor_into(*v, piv.v);
      xor_into(combo, piv.combo);
    }
  if (lowest(*v)) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n_; ++k)
    if (test(combo, k)) out.push_back(k);
  return out;
}

RankResult square_class_rank(const std::vector<Rational>& classes) {
  SquareClassSolver s(classes);
  return {s.rank(), s.independent_indices()};
}

std::optional<std::vector<std::size_t>> class_in_span(const Rational& target,
                                                      const std::vector<Rational>& basis) {
  if (is_zero(target)) throw DegenerateError("zero target in square-class query");
  return SquareClassSolver(basis).solve(target);
}

}  // namespace quartic
