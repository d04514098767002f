#include "quartic/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quartic {

Perm::Perm(std::vector<std::uint32_t> image) : img_(std::move(image)) {
  std::vector<bool> hit(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Perm(std::move(v));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<std::uint32_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.img_[b.img_[i]];
  Perm r;
  r.img_ = std::move(v);
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = std::uint32_t(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycles() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      s += (j == i ? "" : ",") + std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::vector<Perm> generate_group(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  std::set<Perm> seen{Perm::identity(gens[0].size())};
  std::vector<Perm> order{*seen.begin()};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& g : gens) {
      Perm h = g * order[k];
      if (seen.insert(h).second) {
        order.push_back(std::move(h));
        if (order.size() > cap) throw std::length_error("permutation group exceeds cap");
      }
    }
  }
  return order;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::uint32_t> stack{s};
    comp[s] = int(out.size() - 1);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (auto& g : gens) {
        auto w = g(v);
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool all_commute(const std::vector<Perm>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

}  // namespace quartic
