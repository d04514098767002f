#include "quartic/serialize.hpp"

#include <algorithm>
#include <numeric>

namespace quartic {

json tower_to_json(const TowerElement& x) {
  json j;
  j["generators"] = json::array();
  if (x.tower())
    for (auto& g : x.tower()->generators()) {
      if (g.fits_slong_p()) j["generators"].push_back(g.get_si());
      else j["generators"].push_back(g.get_str());  // beyond 64 bits
    }
  j["coords"] = json::object();
  for (auto& [mask, c] : x.terms()) j["coords"][std::to_string(mask)] = to_string(c);
  return j;
}

Tower TowerCache::get(const std::vector<Integer>& generators) {
  if (generators.empty()) return nullptr;
  auto it = towers_.find(generators);
  if (it != towers_.end()) return it->second;
  std::vector<Rational> rads(generators.begin(), generators.end());
  Tower t = TowerDescriptor::make(rads);
  if (t->generators() != generators) throw std::invalid_argument("tower generators must be squarefree integers");
  return towers_[generators] = t;
}

TowerElement tower_from_json(const json& j, TowerCache& cache) {
  std::vector<Integer> gens;
  for (auto& g : j.at("generators")) gens.push_back(g.is_string() ? Integer(g.get<std::string>()) : Integer(g.get<long>()));
  Tower t = cache.get(gens);
  std::vector<TowerElement::Term> terms;
  for (auto& [k, v] : j.at("coords").items()) {
    unsigned long mask = std::stoul(k);
    if (mask >> gens.size()) throw std::invalid_argument("coordinate mask " + k + " outside the tower");
    terms.emplace_back(std::uint32_t(mask), parse_rational(v.get<std::string>()));
  }
  if (!t) return terms.empty() ? TowerElement() : TowerElement(terms.at(0).second);
  return TowerElement(t, std::move(terms));
}

std::string monomial_name(const Monomial& m, unsigned arity) {
  static const char* vars = "xyzw";
  std::string s;
  for (unsigned k = 0; k < arity; ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[k];
    if (m[k] > 1) s += "^" + std::to_string(m[k]);
  }
  return s.empty() ? "1" : s;
}

Monomial parse_monomial(const std::string& s) {
  static const std::string vars = "xyzw";
  Monomial m{};
  if (s == "1") return m;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    std::string f = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    auto k = f.empty() ? std::string::npos : vars.find(f[0]);
    if (k == std::string::npos || (f.size() > 1 && (f[1] != '^' || f.size() < 3)))
      throw std::invalid_argument("bad monomial '" + s + "'");
    m[k] += f.size() > 1 ? std::uint8_t(std::stoi(f.substr(2))) : 1;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return m;
}

json point_to_json(const SurfaceParams& p) {
  json j = json::array();
  for (auto& c : p.coords()) j.push_back(to_string(c));
  return j;
}

SurfaceParams point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw std::invalid_argument("a point has five coordinates");
  std::array<Rational, 5> c;
  for (int k = 0; k < 5; ++k) c[k] = parse_rational(j[k].get<std::string>());
  return SurfaceParams(c);
}

ConicDocument to_document(const SurfaceParams& p, const ConicRecord& r, std::optional<bool> verified) {
  return {p, r.node, r.branch, r.gamma, r.plane, r.quad, verified};
}

json conic_to_json(const ConicDocument& c) {
  json j;
  j["point"] = point_to_json(c.point);
  j["node"] = c.node;
  j["branch"] = c.branch;
  j["gamma"] = gamma_word(c.gamma);
  j["plane"] = json::array();
  for (auto& x : c.plane) j["plane"].push_back(tower_to_json(x));
  j["quad"] = json::object();
  for (auto& [m, x] : c.quad.terms()) j["quad"][monomial_name(m, 4)] = tower_to_json(x);
  if (c.verified) j["verified"] = *c.verified;
  return j;
}

ConicDocument conic_from_json(const json& j, TowerCache& cache) {
  ConicDocument c;
  c.point = point_from_json(j.at("point"));
  c.node = j.at("node").get<int>();
  c.branch = j.at("branch").get<int>();
  auto g = parse_gamma_word(j.value("gamma", std::string()));
  if (!g) throw std::invalid_argument("bad gamma word");
  c.gamma = *g;
  if (j.at("plane").size() != 4) throw std::invalid_argument("a plane has four coefficients");
  for (int k = 0; k < 4; ++k) c.plane[k] = tower_from_json(j["plane"][k], cache);
  for (auto& [name, x] : j.at("quad").items()) c.quad.add_term(parse_monomial(name), tower_from_json(x, cache));
  if (j.contains("verified")) c.verified = j["verified"].get<bool>();
  return c;
}

bool operator==(const ConicDocument& a, const ConicDocument& b) {
  return a.point == b.point && a.node == b.node && a.branch == b.branch && a.gamma == b.gamma &&
         a.plane == b.plane && a.quad == b.quad && a.verified == b.verified;
}

std::vector<std::size_t> output_order(const ConicSet& set) {
  std::vector<std::size_t> order(set.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys(set.size());
  for (std::size_t l = 0; l < set.size(); ++l) keys[l] = set.canonical[l].plane_key();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto &ra = set.record(a), &rb = set.record(b);
    if (ra.node != rb.node) return ra.node < rb.node;
    if (ra.branch != rb.branch) return ra.branch > rb.branch;
    return keys[a] < keys[b];
  });
  return order;
}

json envelope(const std::string& command, std::uint64_t seed) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

}  // namespace quartic
