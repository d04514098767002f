// Square classes cutting out the fields of definition of the conics, the
// resulting Galois group C2^n, and its permutation action on the conics.
#pragma once

#include "quartic/conics.hpp"
#include "quartic/perm.hpp"

#include <string>
#include <vector>

namespace quartic {

// sign * Delta * prod(factors); every class in the tables carries Delta once.
struct ClassProduct {
  int sign = 1;
  std::vector<Hyperplane> factors;

  Rational evaluate(const SurfaceParams& p) const;  // throws DegenerateError on a zero factor
  bool contains(const LoopTarget& t) const;        // odd multiplicity of the target form
  std::string to_string() const;                   // "-Delta*A*q+C*q-C"
};

const std::array<ClassProduct, 5>& node_class_products(int i);  // 1-based
const std::array<ClassProduct, 10>& global_class_products();

std::vector<Rational> node_classes(const SurfaceParams& p, int i);
std::vector<Rational> global_classes(const SurfaceParams& p);

struct GaloisGroupReport {
  std::vector<Rational> classes;       // the ten global values
  std::vector<SquareClass> squarefree;
  std::size_t rank = 0;
  std::vector<std::size_t> basis;      // indices into the ten, earliest first
  std::string statement() const;       // "Gal(L/K) = C2^10"
};
GaloisGroupReport galois_group(const SurfaceParams& p);

// Flip the square root of global basis generator j (0-based among the basis).
Perm galois_action_on_conics(const ConicSet& set, std::size_t j);
// Flip the square root of every global class in `classes` (indices into the ten).
Perm galois_action_flipping(const ConicSet& set, const std::vector<std::size_t>& classes);

}  // namespace quartic
