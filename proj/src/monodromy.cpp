#include "quartic/monodromy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quartic {

std::string SignedGamma::to_string() const {
  std::string w = gamma_word(gamma);
  return swap ? "-" + w : w;
}

SignedGamma parse_signed_gamma(const std::string& s) {
  SignedGamma g;
  std::string w = s;
  if (!w.empty() && w[0] == '-') {
    g.swap = true;
    w.erase(0, 1);
  }
  auto m = parse_gamma_word(w);
  if (!m) throw std::invalid_argument("not a Gamma word: '" + s + "'");
  g.gamma = *m;
  return g;
}

const SignedGamma& MonodromyTable::at(const LoopTarget& row, int node) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r] == row) return entries[r].at(node - 1);
  throw std::out_of_range("table has no row " + row.name());
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

StoredTables parse_tables(const std::string& text) {
  StoredTables t;
  MonodromyTable* cur = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto where = [&] { return "tables line " + std::to_string(lineno) + ": "; };
    if (line == "[planes]") { cur = &t.planes; continue; }
    if (line == "[conics]") { cur = &t.conics; continue; }
    if (!cur) throw std::invalid_argument(where() + "row before any section header");
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != kNodes + 1) throw std::invalid_argument(where() + "expected 11 cells");
    auto target = loop_target_from_name(cells[0]);
    if (!target) throw std::invalid_argument(where() + "unknown row '" + cells[0] + "'");
    std::array<SignedGamma, kNodes> row;
    for (int i = 0; i < kNodes; ++i) row[i] = parse_signed_gamma(cells[i + 1]);
    if (cur == &t.planes && (target->is_delta() || std::any_of(row.begin(), row.end(), [](auto& g) { return g.swap; })))
      throw std::invalid_argument(where() + "the plane table has no swaps and no Delta row");
    cur->rows.push_back(*target);
    cur->entries.push_back(row);
  }
  if (t.planes.rows.size() != kHyperplanes || t.conics.rows.size() != kHyperplanes + 1)
    throw std::invalid_argument("tables: expected 15 plane rows and 16 conic rows");
  return t;
}

bool structural_law_holds(const MonodromyTable& planes, const MonodromyTable& conics) {
  for (std::size_t r = 0; r < conics.rows.size(); ++r) {
    for (int i = 1; i <= kNodes; ++i) {
      SignedGamma want;
      if (conics.rows[r].is_delta()) {
        want = {true, 0};
      } else {
        const SignedGamma& g = planes.at(conics.rows[r], i);
        want = {g.gamma != 0, g.gamma};
      }
      if (!(conics.entries[r][i - 1] == want)) return false;
    }
  }
  return std::count_if(conics.rows.begin(), conics.rows.end(), [](auto& t) { return t.is_delta(); }) == 1;
}

const StoredTables& stored_tables() {
  static const StoredTables t = [] {
    auto parsed = parse_tables(embedded_tables_text());
    if (!structural_law_holds(parsed.planes, parsed.conics))
      throw InvariantError("stored conic table is not the signed plane table plus a Delta row");
    return parsed;
  }();
  return t;
}

std::array<unsigned, kHyperplanes> sigma_q1_column() {
  using H = Hyperplane;
  std::array<unsigned, kHyperplanes> col{};
  auto set = [&](H h, const char* w) { col[std::size_t(h)] = *parse_gamma_word(w); };
  set(H::QpC, "g3");
  set(H::QpD, "g4");
  set(H::QmE, "g3g4");
  set(H::Pp0, "g1g2");
  set(H::Pm0, "g1g2g3g4");
  set(H::Pp1, "g2g3g4");
  set(H::Pm1, "g2g3");
  set(H::Pp2, "g1g3g4");
  set(H::Pm2, "g1g4");
  return col;
}

MonodromyTable derive_table(const std::array<unsigned, kHyperplanes>& q1_column) {
  MonodromyTable t;
  for (auto h : all_hyperplanes()) {
    t.rows.push_back(LoopTarget{h});
    t.entries.emplace_back();
  }
  for (int i = 1; i <= kNodes; ++i) {
    const GroupElement& phi = transporter(i, 1);
    for (auto h : all_hyperplanes()) t.entries[std::size_t(h)][i - 1] = {false, conjugate_rule(phi, h, q1_column)};
  }
  return t;
}

bool derivation_independent_of_transporter(const std::array<unsigned, kHyperplanes>& q1_column) {
  auto reference = derive_table(q1_column);
  auto gam = gamma_group();
  for (const auto& phi : omega_group()) {
    int i = int(action_on_nodes(phi).inverse()(0)) + 1;  // phi(q_i) = q_1
    Perm hp = action_on_hyperplanes(phi);
    GroupElement inv = phi.inverse();
    for (auto h : all_hyperplanes()) {
      auto conj = gamma_mask_of(inv * gam[q1_column[hp(std::uint32_t(h))]] * phi);
      if (!conj || *conj != reference.entries[std::size_t(h)][i - 1].gamma) return false;
    }
  }
  return true;
}

Perm plane_row_permutation(const MonodromyTable& t, std::size_t row) {
  std::vector<std::uint32_t> img(16 * kNodes);
  for (int i = 0; i < kNodes; ++i)
    for (unsigned m = 0; m < 16; ++m) img[16 * i + m] = 16 * i + (m ^ t.entries[row][i].gamma);
  return Perm(std::move(img));
}

Perm conic_row_permutation(const MonodromyTable& t, std::size_t row) {
  std::vector<std::uint32_t> img(32 * kNodes);
  for (int i = 0; i < kNodes; ++i) {
    const SignedGamma& g = t.entries[row][i];
    for (unsigned m = 0; m < 16; ++m)
      for (unsigned b = 0; b < 2; ++b) img[32 * i + 2 * m + b] = 32 * i + 2 * (m ^ g.gamma) + (b ^ unsigned(g.swap));
  }
  return Perm(std::move(img));
}

std::vector<Perm> plane_monodromy_generators() {
  const auto& t = stored_tables().planes;
  std::vector<Perm> gens;
  for (std::size_t r = 0; r < t.rows.size(); ++r) gens.push_back(plane_row_permutation(t, r));
  return gens;
}

std::vector<Perm> conic_monodromy_generators() {
  const auto& t = stored_tables().conics;
  std::vector<Perm> gens;
  for (std::size_t r = 0; r < t.rows.size(); ++r) gens.push_back(conic_row_permutation(t, r));
  return gens;
}

GroupSummary summarize_group(const std::vector<Perm>& gens, std::size_t degree) {
  GroupSummary s;
  auto all = generate_group(gens);
  s.order = all.size();
  s.abelian = all_commute(gens);
  s.all_involutions = std::all_of(all.begin(), all.end(), [](const Perm& g) { return g.is_identity() || g.order() == 2; });
  s.orbits = orbits(gens, degree).size();
  return s;
}

std::vector<std::size_t> loop_to_class_flips(const LoopTarget& target) {
  std::vector<std::size_t> out;
  const auto& g = global_class_products();
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g[j].contains(target)) out.push_back(j);
  return out;
}

MatchReport match_galois_monodromy(const ConicSet& set) {
  if (set.nodes.size() != kNodes) throw std::invalid_argument("the Galois-monodromy match needs all ten nodes");
  for (int i = 0; i < kNodes; ++i)
    if (set.nodes[i].node != i + 1) throw std::invalid_argument("nodes must be in order 1..10");
  const auto& t = stored_tables().conics;
  MatchReport rep;
  rep.all_rows_match = true;
  std::vector<Perm> mono;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    MatchRow row{t.rows[r]};
    Perm table = conic_row_permutation(t, r);
    Perm galois = galois_action_flipping(set, loop_to_class_flips(t.rows[r]));
    row.matches = table == galois;
    if (!row.matches) {
      for (std::size_t k = 0; k < table.size(); ++k)
        if (table(std::uint32_t(k)) != galois(std::uint32_t(k))) {
          row.first_mismatch = "node " + std::to_string(k / 32 + 1);
          break;
        }
      rep.all_rows_match = false;
    }
    rep.rows.push_back(row);
    mono.push_back(table);
  }
  std::vector<Perm> gal;
  for (std::size_t j = 0; j < set.global_basis.size(); ++j) gal.push_back(galois_action_on_conics(set, j));
  auto G = generate_group(gal), M = generate_group(mono);
  rep.galois_order = G.size();
  rep.monodromy_order = M.size();
  rep.groups_equal = std::set<Perm>(G.begin(), G.end()) == std::set<Perm>(M.begin(), M.end());
  for (auto& o : orbits(gal, set.size())) rep.orbit_sizes.push_back(o.size());
  return rep;
}

}  // namespace quartic
