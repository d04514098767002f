// Monodromy of the 160 tropes and 320 conics: the stored tables, their
// derivation from the q_1 column through Omega, the permutation groups they
// generate, and the comparison with the Galois action.
#pragma once

#include "quartic/galois.hpp"
#include "quartic/groups.hpp"

#include <array>
#include <string>
#include <vector>

namespace quartic {

// An element of Gamma, optionally composed with the conjugate swap.
struct SignedGamma {
  bool swap = false;
  unsigned gamma = 0;
  bool operator==(const SignedGamma&) const = default;
  std::string to_string() const;  // "", "g1g3", "-g2", "-"
};
SignedGamma parse_signed_gamma(const std::string& s);  // throws invalid_argument

struct MonodromyTable {
  std::vector<LoopTarget> rows;
  std::vector<std::array<SignedGamma, kNodes>> entries;  // parallel to rows

  const SignedGamma& at(const LoopTarget& row, int node) const;  // node 1-based
  bool operator==(const MonodromyTable&) const = default;
};

struct StoredTables {
  MonodromyTable planes;  // 15 rows
  MonodromyTable conics;  // Delta row + 15 rows
};
StoredTables parse_tables(const std::string& text);
const std::string& embedded_tables_text();
const StoredTables& stored_tables();  // parsed once; structural law enforced

// Conic entry = swap composed with the plane entry where that is nontrivial,
// plus a Delta row of pure swaps.
bool structural_law_holds(const MonodromyTable& planes, const MonodromyTable& conics);

// The q_1 column: which Gamma element each hyperplane through q_1 induces.
std::array<unsigned, kHyperplanes> sigma_q1_column();
// Fill every column via phi^-1 gamma_{phi(H)} phi with phi(q_i) = q_1.
MonodromyTable derive_table(const std::array<unsigned, kHyperplanes>& q1_column);
// Does every phi with phi(q_i) = q_1 give the same column?
bool derivation_independent_of_transporter(const std::array<unsigned, kHyperplanes>& q1_column);

// Row permutations: planes labelled 16 (i-1) + mask, conics 32 (i-1) + 2 mask + swap.
Perm plane_row_permutation(const MonodromyTable& t, std::size_t row);
Perm conic_row_permutation(const MonodromyTable& t, std::size_t row);
std::vector<Perm> plane_monodromy_generators();
std::vector<Perm> conic_monodromy_generators();

struct GroupSummary {
  std::size_t order = 0;
  bool abelian = false;
  bool all_involutions = false;
  std::size_t orbits = 0;
};
GroupSummary summarize_group(const std::vector<Perm>& gens, std::size_t degree);

// Indices (into the ten global classes) whose square root the loop flips.
std::vector<std::size_t> loop_to_class_flips(const LoopTarget& target);

struct MatchRow {
  LoopTarget target;
  bool matches = false;
  std::string first_mismatch;  // "node 3" when not matching
};
struct MatchReport {
  std::vector<MatchRow> rows;
  bool all_rows_match = false;
  bool groups_equal = false;
  std::size_t galois_order = 0;
  std::size_t monodromy_order = 0;
  std::vector<std::size_t> orbit_sizes;
};
// The set must hold all ten nodes in order.
MatchReport match_galois_monodromy(const ConicSet& set);

}  // namespace quartic
