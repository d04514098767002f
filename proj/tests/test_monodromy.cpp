#include "quartic/monodromy.hpp"

#include <doctest.h>

using namespace quartic;

namespace {
LoopTarget row(const char* n) { return *loop_target_from_name(n); }
}  // namespace

TEST_CASE("stored tables") {
  const auto& st = stored_tables();
  CHECK(st.planes.rows.size() == 15);
  CHECK(st.conics.rows.size() == 16);
  CHECK(st.planes.at(row("q+C"), 1).to_string() == "g3");
  for (int i = 1; i <= kNodes; ++i) CHECK(st.conics.at(LoopTarget::delta(), i).to_string() == "-");
  CHECK(st.conics.at(row("p-2"), 5).to_string() == "-g1g4");
  CHECK(structural_law_holds(st.planes, st.conics));
}

TEST_CASE("parsing") {
  CHECK(parse_signed_gamma("-g2").swap);
  CHECK(parse_signed_gamma("-g2").gamma == 2);
  CHECK(parse_signed_gamma("") == SignedGamma{});
  CHECK_THROWS(parse_signed_gamma("g5"));
  CHECK_THROWS(parse_tables("[planes]\nA,g1\n"));
  CHECK_THROWS(parse_tables("A,,,,,,,,,,\n"));
  // a broken structural law is detected
  auto st = parse_tables(embedded_tables_text());
  st.conics.entries[1][0] = SignedGamma{false, 4};
  CHECK_FALSE(structural_law_holds(st.planes, st.conics));
}

TEST_CASE("derivation from the q1 column") {
  auto col = sigma_q1_column();
  auto d = derive_table(col);
  CHECK(d.at(row("q+E"), 2).to_string() == "g3g4");
  CHECK(d.at(row("p-2"), 1).to_string() == "g1g4");
  CHECK(d == stored_tables().planes);
  int nontrivial = 0;
  for (auto g : col) nontrivial += g != 0;
  CHECK(nontrivial == 9);
}

TEST_CASE("monodromy groups") {
  auto pg = summarize_group(plane_monodromy_generators(), 160);
  CHECK(pg.order == 512);
  CHECK(pg.abelian);
  CHECK(pg.all_involutions);
  auto cg = summarize_group(conic_monodromy_generators(), 320);
  CHECK(cg.order == 1024);
  CHECK(cg.abelian);
  CHECK(cg.all_involutions);
  CHECK(cg.orbits == 10);
}

TEST_CASE("loop to class flips") {
  CHECK(loop_to_class_flips(LoopTarget::delta()).size() == 10);
  CHECK(loop_to_class_flips(row("q+C")) == std::vector<std::size_t>{0, 3, 4});
  for (auto h : all_hyperplanes()) CHECK_FALSE(loop_to_class_flips(LoopTarget{h}).empty());
}
