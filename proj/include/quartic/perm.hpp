// Permutations of {0..n-1} and the groups they generate.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quartic {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> image);  // throws unless bijective
  static Perm identity(std::size_t n);

  std::size_t size() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& image() const { return img_; }

  // (a * b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::string cycles() const;  // "(0,1)(2,3)", "()" for the identity

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> img_;
};

// Breadth-first closure; throws std::length_error past the cap.
std::vector<Perm> generate_group(const std::vector<Perm>& gens, std::size_t cap = 1u << 16);
std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm>& gens, std::size_t n);
bool all_commute(const std::vector<Perm>& gens);

}  // namespace quartic
