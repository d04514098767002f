#include "quartic/tower.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace quartic {

TowerDescriptor::TowerDescriptor(std::vector<Integer> gens, SquareClassSolver solver)
    : gens_(std::move(gens)), solver_(std::move(solver)) {
  std::size_t n = gens_.size();
  overlap_.assign(std::size_t(1) << n, Integer(1));
  for (std::uint32_t m = 1; m < overlap_.size(); ++m) {
    unsigned j = std::countr_zero(m);
    overlap_[m] = overlap_[m & (m - 1)] * gens_[j];
  }
}

Tower TowerDescriptor::make(const std::vector<Rational>& radicands) {
  if (radicands.size() > 12) throw std::invalid_argument("tower too large");
  std::vector<Integer> gens;
  std::vector<Rational> as_rationals;
  for (const auto& r : radicands) {
    auto c = squarefree_part(r);
    gens.push_back(c.value());
    as_rationals.emplace_back(c.value());
  }
  SquareClassSolver solver(as_rationals);
  if (solver.rank() != gens.size())
    throw DegenerateError("tower generators are not independent square classes");
  return Tower(new TowerDescriptor(std::move(gens), std::move(solver)));
}

// --- element basics ----------------------------------------------------------

TowerElement::TowerElement(const Rational& r) {
  if (!quartic::is_zero(r)) terms_.emplace_back(0u, r);
}

TowerElement::TowerElement(Tower t, std::vector<Term> terms) : tower_(std::move(t)) {
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& term : terms) {
    if (quartic::is_zero(term.second)) continue;
    if (!terms_.empty() && terms_.back().first == term.first) {
      terms_.back().second += term.second;
      if (quartic::is_zero(terms_.back().second)) terms_.pop_back();
    } else {
      terms_.push_back(std::move(term));
    }
  }
  std::uint32_t limit = tower_ ? (1u << tower_->size()) : 1u;
  for (auto& term : terms_)
    if (term.first >= limit) throw std::invalid_argument("monomial outside tower");
}

TowerElement TowerElement::monomial(Tower t, std::uint32_t mask, const Rational& c) {
  return TowerElement(std::move(t), {{mask, c}});
}

Rational TowerElement::coeff(std::uint32_t mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, std::uint32_t m) { return t.first < m; });
  if (it != terms_.end() && it->first == mask) return it->second;
  return 0;
}

Tower TowerElement::common(const TowerElement& a, const TowerElement& b) {
  const Tower& ta = a.is_rational() ? Tower() : a.tower_;
  const Tower& tb = b.is_rational() ? Tower() : b.tower_;
  if (!ta) return b.tower_ ? b.tower_ : a.tower_;
  if (!tb || ta == tb) return ta;
  if (ta->generators() == tb->generators()) return ta;
  throw InvariantError("tower descriptor mismatch");
}

TowerElement TowerElement::operator-() const {
  TowerElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  Tower t = common(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (!quartic::is_zero(s)) out.emplace_back(i->first, std::move(s));
      ++i, ++j;
    }
  }
  terms_ = std::move(out);
  tower_ = std::move(t);
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) { return *this += -o; }

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  Tower t = TowerElement::common(a, b);
  if (a.is_zero() || b.is_zero()) return TowerElement(Rational(0)).in(t);
  if (a.is_rational() || b.is_rational()) {
    const TowerElement& x = a.is_rational() ? b : a;
    TowerElement r = x.scaled((a.is_rational() ? a : b).rational_part());
    r.tower_ = t;
    return r;
  }
  std::size_t dim = std::size_t(1) << t->size();
  std::vector<Rational> acc(dim);
  std::vector<bool> touched(dim, false);
  Rational tmp;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      std::uint32_t ov = ma & mb;
      if (ov) {
        mpz_mul(tmp.get_num_mpz_t(), tmp.get_num_mpz_t(), t->overlap(ov).get_mpz_t());
        tmp.canonicalize();
      }
      std::uint32_t m = ma ^ mb;
      mpq_add(acc[m].get_mpq_t(), acc[m].get_mpq_t(), tmp.get_mpq_t());
      touched[m] = true;
    }
  }
  TowerElement r;
  r.tower_ = t;
  for (std::uint32_t m = 0; m < dim; ++m)
    if (touched[m] && sgn(acc[m]) != 0) r.terms_.emplace_back(m, std::move(acc[m]));
  return r;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) { return *this = *this * o; }

bool operator==(const TowerElement& a, const TowerElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.is_rational() || !b.is_rational()) TowerElement::common(a, b);
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].first != b.terms_[k].first || a.terms_[k].second != b.terms_[k].second)
      return false;
  return true;
}

TowerElement TowerElement::scaled(const Rational& c) const {
  if (quartic::is_zero(c)) return TowerElement(Rational(0)).in(tower_);
  TowerElement r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

TowerElement TowerElement::in(const Tower& t) const {
  TowerElement r = *this;
  if (!r.tower_) r.tower_ = t;
  return r;
}

std::string to_string(const TowerElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Rational v = c;
    if (!first) {
      os << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    }
    first = false;
    if (m == 0) {
      os << v.get_str();
      continue;
    }
    if (v == -1) os << "-";
    else if (v != 1) os << v.get_str() << "*";
    os << "sqrt(";
    bool f2 = true;
    for (std::size_t j = 0; j < x.tower()->size(); ++j)
      if ((m >> j) & 1) {
        os << (f2 ? "" : "*") << x.tower()->generator(j).get_str();
        f2 = false;
      }
    os << ")";
  }
  return os.str();
}

// --- field operations --------------------------------------------------------

namespace {

std::uint32_t support(const TowerElement& x) {
  std::uint32_t m = 0;
  for (auto& t : x.terms()) m |= t.first;
  return m;
}

TowerElement conjugate(const TowerElement& x, unsigned j) {
  std::vector<TowerElement::Term> out(x.terms());
  for (auto& t : out)
    if ((t.first >> j) & 1) t.second = -t.second;
  return TowerElement(x.tower(), std::move(out));
}

TowerElement invert_below(const TowerElement& x, unsigned top) {
  std::uint32_t sup = support(x);
  while (top > 0 && !((sup >> (top - 1)) & 1)) --top;
  if (top == 0) return TowerElement(inverse(x.rational_part())).in(x.tower());
  unsigned j = top - 1;
  TowerElement xc = conjugate(x, j);
  TowerElement norm = x * xc;  // lies in the subfield without sqrt d_j
  return xc * invert_below(norm, j);
}

std::optional<TowerElement> embed_below(const Rational& r, const Tower& t, unsigned top) {
  if (auto q = rational_sqrt(r)) return TowerElement(*q).in(t);
  if (!t || sgn(r) == 0) return std::nullopt;
  auto subset = t->solver().solve(r);
  if (!subset) return std::nullopt;
  std::uint32_t mask = 0;
  for (auto k : *subset) {
    if (k >= top) return std::nullopt;
    mask |= 1u << k;
  }
  auto q = rational_sqrt(r / Rational(t->overlap(mask)));
  if (!q) throw InvariantError("square-class solver returned a non-square quotient");
  return TowerElement::monomial(t, mask, *q);
}

std::optional<TowerElement> sqrt_below(const TowerElement& x, unsigned top) {
  if (x.is_zero()) return x;
  if (x.is_rational()) return embed_below(x.rational_part(), x.tower(), top);
  if (top == 0) return std::nullopt;
  unsigned j = top - 1;
  std::uint32_t bit = 1u << j;
  const Tower& t = x.tower();
  const Integer& d = t->generator(j);
  std::vector<TowerElement::Term> us, vs;
  for (auto& [m, c] : x.terms()) {
    if (m & bit) vs.emplace_back(m ^ bit, c);
    else us.emplace_back(m, c);
  }
  if (vs.empty()) {
    // x lies below sqrt d_j; its root is either there too or sqrt d_j times one
    if (auto a = sqrt_below(x, j)) return a;
    auto b = sqrt_below(x.scaled(Rational(1) / Rational(d)), j);
    if (!b) return std::nullopt;
    std::vector<TowerElement::Term> terms;
    for (auto& [mb, cb] : b->terms()) terms.emplace_back(mb | bit, cb);
    return TowerElement(t, std::move(terms));
  }
  TowerElement u(t, us), v(t, vs);
  TowerElement norm = u * u - (v * v).scaled(Rational(d));
  auto m = sqrt_below(norm, j);
  if (!m) return std::nullopt;
  for (int s : {1, -1}) {
    TowerElement h = (u + m->scaled(s)).scaled(Rational(1, 2));
    if (h.is_zero()) continue;
    auto a = sqrt_below(h, j);
    if (!a) continue;
    TowerElement b = v * invert_below(a->scaled(2), j);
    std::vector<TowerElement::Term> terms(a->terms());
    for (auto& [mb, cb] : b.terms()) terms.emplace_back(mb | bit, cb);
    return TowerElement(t, std::move(terms));
  }
  return std::nullopt;
}

}  // namespace

TowerElement invert(const TowerElement& x) {
  if (x.is_zero()) throw DegenerateError("inverse of zero tower element");
  unsigned n = x.tower() ? x.tower()->size() : 0;
  return invert_below(x, n);
}

TowerElement inverse(const TowerElement& x) { return invert(x); }

TowerElement apply_sign_automorphism(const TowerElement& x, const std::vector<int>& signs) {
  if (!x.tower()) return x;
  if (signs.size() != x.tower()->size()) throw std::invalid_argument("sign vector length mismatch");
  std::uint32_t flip = 0;
  for (std::size_t j = 0; j < signs.size(); ++j)
    if (signs[j] < 0) flip |= 1u << j;
  std::vector<TowerElement::Term> out(x.terms());
  for (auto& t : out)
    if (std::popcount(t.first & flip) % 2) t.second = -t.second;
  return TowerElement(x.tower(), std::move(out));
}

std::optional<TowerElement> tower_sqrt(const TowerElement& x) {
  unsigned n = x.tower() ? x.tower()->size() : 0;
  auto s = sqrt_below(x, n);
  if (s && !(*s * *s == x)) throw InvariantError("tower_sqrt produced a wrong root");
  return s;
}

std::optional<TowerElement> embed_rational_sqrt(const Rational& r, const Tower& t) {
  if (is_zero(r)) throw DegenerateError("square root of zero requested as a generator");
  return embed_below(r, t, t ? t->size() : 0);
}

std::complex<double> evaluate_numeric(const TowerElement& x,
                                      const std::vector<std::complex<double>>& roots) {
  std::complex<double> acc = 0;
  for (const auto& [m, c] : x.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t j = 0; j < roots.size(); ++j)
      if ((m >> j) & 1) term *= roots[j];
    acc += term;
  }
  return acc;
}

TowerEmbedding::TowerEmbedding(Tower from, Tower to) : from_(std::move(from)), to_(std::move(to)) {
  std::size_t n = from_ ? from_->size() : 0;
  std::vector<TowerElement> gens;
  for (std::size_t j = 0; j < n; ++j) {
    auto img = embed_rational_sqrt(Rational(from_->generator(j)), to_);
    if (!img) throw DegenerateError("tower does not embed: generator class missing in target");
    gens.push_back(*img);
  }
  basis_images_.assign(std::size_t(1) << n, TowerElement(1).in(to_));
  for (std::uint32_t m = 1; m < basis_images_.size(); ++m)
    basis_images_[m] = basis_images_[m & (m - 1)] * gens[std::countr_zero(m)];
}

TowerElement TowerEmbedding::operator()(const TowerElement& x) const {
  TowerElement out = TowerElement(0).in(to_);
  for (const auto& [m, c] : x.terms()) out += basis_images_.at(m).scaled(c);
  return out;
}

}  // namespace quartic
