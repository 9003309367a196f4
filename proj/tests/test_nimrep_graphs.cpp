#include <gtest/gtest.h>

#include "modinv/modinv.hpp"
#include "oracles.hpp"

using namespace modinv;

namespace {

std::vector<Complex> coxeter_spectrum(char family, int n) {
  std::vector<Complex> out;
  const int h = oracle::coxeter_number(family, n);
  for (int m : oracle::exponents(family, n)) out.emplace_back(2 * std::cos(M_PI * m / h), 0.0);
  return out;
}

std::vector<std::vector<int>> column_weights(const BranchingTable& t) {
  std::vector<std::vector<int>> w;
  for (const auto& c : t.cols) w.push_back(parse_weight(c));
  return w;
}

}  // namespace

TEST(NimrepGraphs, DynkinSpectraMatchExponents) {
  for (int n = 1; n <= 29; ++n)
    EXPECT_TRUE(spectrum_match_values(graph_catalog("A", n).adjacency, coxeter_spectrum('A', n)).match) << n;
  for (int n = 4; n <= 16; ++n)
    EXPECT_TRUE(spectrum_match_values(graph_catalog("D", n).adjacency, coxeter_spectrum('D', n)).match) << n;
  for (int n = 6; n <= 8; ++n)
    EXPECT_TRUE(spectrum_match_values(graph_catalog("E", n).adjacency, coxeter_spectrum('E', n)).match) << n;
  EXPECT_FALSE(spectrum_match_values(graph_catalog("D", 5).adjacency, coxeter_spectrum('A', 5)).match);
  EXPECT_THROW(graph_catalog("E", 9), Error);
  EXPECT_THROW(graph_by_name("X3"), Error);
}

TEST(NimrepGraphs, PerronFrobenius) {
  EXPECT_NEAR(perron_frobenius(graph_catalog("E", 8).adjacency), 2 * std::cos(M_PI / 30), 1e-12);
  EXPECT_NEAR(perron_frobenius(graph_catalog("T", 2).adjacency), 2 * std::cos(M_PI / 5), 1e-12);
}

TEST(NimrepGraphs, AdeAssignmentForEveryInvariant) {
  for (int k = 1; k <= 28; ++k) {
    ModularData md = build(su2_model(k));
    for (const auto& z : enumerate_invariants(md).invariants) {
      auto names = ade_assignment(z, md, k);
      ASSERT_EQ(names.size(), 1u) << "k = " << k;
      Graph g = graph_by_name(names[0]);
      auto nim = su2_nimrep_from_graph(k, g);
      ASSERT_TRUE(nim.has_value());
      EXPECT_TRUE(verify_nimrep(su2_ring(k), *nim));
      EXPECT_TRUE(spectrum_match(*nim, md, z).match);
      EXPECT_EQ(g.size(), z.trace());
      if (z == oracle::su2_A(k)) {
        EXPECT_EQ(names[0], "A" + std::to_string(k + 1));
      } else if (k % 2 == 0 && z == oracle::su2_D(k)) {
        EXPECT_EQ(names[0], "D" + std::to_string(k / 2 + 2));
      }
    }
  }
  EXPECT_EQ(ade_assignment(oracle::su2_E7(), build(su2_model(16)), 16), std::vector<std::string>{"E7"});
}

TEST(NimrepGraphs, TadpolesAreNimrepsButNotInvariants) {
  auto nim = su2_nimrep_from_graph(3, graph_catalog("T", 2));
  ASSERT_TRUE(nim.has_value());
  EXPECT_TRUE(verify_nimrep(su2_ring(3), *nim));
  // No invariant at k = 3 has trace 2.
  ModularData md = build(su2_model(3));
  for (const auto& z : enumerate_invariants(md).invariants) EXPECT_NE(z.trace(), 2);
  for (int k = 1; k <= 27; k += 2) {
    auto t = tadpole_exclusion(k);
    EXPECT_TRUE(t.excluded) << k;
    EXPECT_TRUE(t.extremal_is_sqrt2);
    EXPECT_NEAR(t.weights.squaredNorm(), t.global_index, 1e-9);
    EXPECT_NE(t.twice_h_mod1.numerator(), 0);
  }
  EXPECT_THROW(tadpole_exclusion(4), Error);
}

TEST(NimrepGraphs, NimrepValidityRejectsWrongGraphs) {
  EXPECT_FALSE(su2_nimrep_from_graph(6, graph_catalog("A", 6)).has_value());
  Nimrep bad{{IntMatrix::Identity(2, 2), 2 * IntMatrix::Identity(2, 2)}};
  EXPECT_FALSE(verify_nimrep(su2_ring(1), bad));
  Nimrep ok{{IntMatrix::Identity(2, 2), permutation_matrix({1, 0})}};
  EXPECT_TRUE(verify_nimrep(su2_ring(1), ok));
}

TEST(NimrepGraphs, OrbifoldOfA7IsD5) {
  Graph a7 = graph_catalog("A", 7);
  Graph q = orbifold_quotient(a7, {6, 5, 4, 3, 2, 1, 0}, 2);
  EXPECT_EQ(q.size(), 5);
  EXPECT_TRUE(isomorphism(q, graph_catalog("D", 5)).has_value());
  EXPECT_FALSE(isomorphism(q, graph_catalog("A", 5)).has_value());
  EXPECT_THROW(orbifold_quotient(a7, {1, 0, 2, 3, 4, 5, 6}, 2), Error);
  EXPECT_THROW(orbifold_quotient(a7, {6, 5, 4, 3, 2, 1, 0}, 3), Error);
}

TEST(NimrepGraphs, Su4InclusionGraphSpectrum) {
  BranchingTable t = su10_to_su4_table();
  const int n = static_cast<int>(t.rows.size());
  std::vector<int> conj(n);
  for (int j = 0; j < n; ++j) conj[j] = (n - j) % n;
  IntMatrix z = restrict(IntMatrix::Identity(n, n), t, t);
  IntMatrix cz = restrict(permutation_matrix(conj), t, t);
  auto weights = column_weights(t);

  Graph g = su4_level6_inclusion_graph();
  ASSERT_EQ(g.size(), 32);
  EXPECT_TRUE((g.adjacency.array() >= 0).all());
  EXPECT_NEAR(perron_frobenius(g.adjacency), oracle::su4_level6_character(0, 0, 0).real(), 1e-9);
  EXPECT_TRUE(spectrum_match_values(g.adjacency, oracle::spectrum_from_diagonal(z, weights)).match);

  std::vector<int> tau = su4_level6_translation();
  EXPECT_TRUE(is_automorphism(g.adjacency, tau));
  EXPECT_EQ(permutation_order(tau), 5);
  int fixed = 0;
  for (int i = 0; i < 32; ++i) fixed += tau[i] == i;
  EXPECT_EQ(fixed, 2);

  Graph q = orbifold_quotient(g, tau, 5);
  ASSERT_EQ(q.size(), 16);
  EXPECT_EQ(cz.trace(), 16);
  EXPECT_TRUE(spectrum_match_values(q.adjacency, oracle::spectrum_from_diagonal(cz, weights)).match);
}

TEST(NimrepGraphs, DotExport) {
  std::string dot = to_dot(graph_catalog("D", 5));
  EXPECT_NE(dot.find("graph D5 {"), std::string::npos);
  EXPECT_NE(dot.find("n2 -- n4;"), std::string::npos);
  std::string dir = to_dot(su4_level6_inclusion_graph());
  EXPECT_NE(dir.find("digraph"), std::string::npos);
  EXPECT_NE(dir.find("shape="), std::string::npos);
}

TEST(NimrepGraphs, IsomorphismFindsRelabelling) {
  Graph e6 = graph_catalog("E", 6);
  std::vector<int> p{5, 3, 1, 0, 2, 4};
  IntMatrix b = IntMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) b(p[i], p[j]) = e6.adjacency(i, j);
  auto iso = isomorphism(e6, graph_from_adjacency("relabelled", b));
  ASSERT_TRUE(iso.has_value());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(b((*iso)[i], (*iso)[j]), e6.adjacency(i, j));
}
