#include <random>

#include <gtest/gtest.h>

#include "modinv/modinv.hpp"
#include "oracles.hpp"

using namespace modinv;

TEST(FusionRing, Su2MatchesClosedForm) {
  for (int k = 1; k <= 20; ++k) {
    FusionRing r = su2_ring(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) ASSERT_EQ(r.n(a, b, c), oracle::su2_fusion(k, a, b, c)) << k;
    EXPECT_TRUE(verify_axioms(r).ok()) << k;
    EXPECT_TRUE(verify_axioms(r).warnings.empty());
  }
}

TEST(FusionRing, CatalogRingsSatisfyAxioms) {
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(verify_axioms(zn_ring(n)).ok()) << n;
  EXPECT_TRUE(verify_axioms(klein_ring()).ok());
  EXPECT_TRUE(verify_axioms(tensor_product(su2_ring(3), zn_ring(4))).ok());
}

TEST(FusionRing, DetectsEachAxiom) {
  FusionRing r = su2_ring(2);
  r.N[1](1, 2) = -1;
  EXPECT_TRUE(verify_axioms(r).has("non-negativity", {1, 1, 2}));

  r = su2_ring(2);
  r.N[1](2, 1) = 2;  // N_{1,2}^1 = 2 but N_{2,1}^1 = 1
  EXPECT_TRUE(verify_axioms(r).has("commutativity", {1, 2, 1}));

  r = su2_ring(2);
  r.N[0](1, 2) = 1;
  EXPECT_TRUE(verify_axioms(r).has("identity", {0, 1, 2}));

  r = su2_ring(3);
  r.conj[1] = 2;
  EXPECT_FALSE(verify_axioms(r).ok());

  // Z_3 with a doubled product breaks associativity but keeps commutativity.
  r = zn_ring(3);
  r.N[1](1, 2) = 2;
  r.N[1](2, 2) = 0;
  r.N[2](1, 2) = 0;
  EXPECT_FALSE(verify_axioms(r).ok());
}

TEST(FusionRing, RandomPerturbationsAreRejected) {
  std::mt19937 rng(12345);
  const FusionRing base = su2_ring(4);
  int rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FusionRing r = base;
    int l = 1 + static_cast<int>(rng() % 4), a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
    r.N[l](a, b) += 1;
    if (!verify_axioms(r).ok()) ++rejected;
  }
  EXPECT_EQ(rejected, 200);
}

TEST(FusionRing, QuantumDimensionsMatchSineRatios) {
  for (int k = 1; k <= 28; ++k) {
    RealVector d = quantum_dimensions(su2_ring(k));
    double w = 0;
    for (int a = 0; a <= k; ++a) {
      EXPECT_NEAR(d(a), oracle::su2_dimension(k, a), 1e-10);
      w += std::pow(oracle::su2_dimension(k, a), 2);
    }
    EXPECT_NEAR(global_index(d), w, 1e-8);
    EXPECT_NEAR(global_index(d), (k + 2) / (2 * std::pow(std::sin(M_PI / (k + 2)), 2)), 1e-8);
    EXPECT_LT(dimension_residual(su2_ring(k), d), 1e-10);
  }
  RealVector d = quantum_dimensions(klein_ring());
  EXPECT_NEAR((d - RealVector::Ones(4)).norm(), 0, 1e-12);
}

TEST(FusionRing, SimpleCurrents) {
  for (int k = 1; k <= 12; ++k) {
    FusionRing r = su2_ring(k);
    SimpleCurrentGroup g = simple_currents(r, quantum_dimensions(r));
    EXPECT_EQ(g.elements, (std::vector<int>{0, k}));
    EXPECT_EQ(g.invariant_factors, std::vector<int>{2});
  }
  FusionRing z12 = zn_ring(12);
  SimpleCurrentGroup g = simple_currents(z12, quantum_dimensions(z12));
  EXPECT_EQ(g.size(), 12);
  EXPECT_EQ(g.invariant_factors, std::vector<int>{12});
  EXPECT_EQ(g.order_of(8), 3);
  EXPECT_EQ(g.multiply(7, 9), 4);
  EXPECT_EQ(g.cyclic(4), (std::vector<int>{0, 4, 8}));

  FusionRing k4 = klein_ring();
  SimpleCurrentGroup gk = simple_currents(k4, quantum_dimensions(k4));
  EXPECT_EQ(gk.invariant_factors, (std::vector<int>{2, 2}));

  FusionRing t = tensor_product(zn_ring(2), zn_ring(4));
  SimpleCurrentGroup gt = simple_currents(t, quantum_dimensions(t));
  EXPECT_EQ(gt.invariant_factors, (std::vector<int>{2, 4}));
}

TEST(FusionRing, FusionMatrixRejectsUnknownLabel) {
  FusionRing r = su2_ring(3);
  EXPECT_THROW(fusion_matrix(r, 4), Error);
  EXPECT_THROW(r.index_of("x"), Error);
  EXPECT_EQ(r.index_of("2"), 2);
}
