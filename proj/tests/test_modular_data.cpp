#include <gtest/gtest.h>

#include "modinv/modinv.hpp"
#include "oracles.hpp"

using namespace modinv;

TEST(ModularData, Su2MatchesKacPeterson) {
  for (int k = 1; k <= 20; ++k) {
    ModularData md = build(su2_model(k));
    ASSERT_TRUE(md.nondegenerate) << k;
    EXPECT_LT((md.S().real() - oracle::su2_S(k)).norm(), 1e-10) << k;
    EXPECT_LT(md.S().imag().norm(), 1e-10);
    EXPECT_NEAR(md.c(), oracle::su2_central_charge(k), 1e-10);
    for (int a = 0; a <= k; ++a) EXPECT_EQ(md.C[a], a);
  }
}

TEST(ModularData, ZnMatchesGaussSum) {
  for (int n = 2; n <= 12; ++n)
    for (int a : zn_parameters(n)) {
      ModularData md = build(zn_model(n, a));
      ASSERT_TRUE(md.nondegenerate) << n << ":" << a;
      Eigen::MatrixXcd s = oracle::zn_S(n, a);
      EXPECT_LT((md.S() - s).norm(), 1e-9) << n << ":" << a;
      for (int j = 0; j < n; ++j) EXPECT_EQ(md.C[j], (n - j) % n);
    }
}

TEST(ModularData, Relations) {
  for (const std::string name : {"su2:5", "su2:16", "zn:10:9", "zn:7:2", "so8_1", "so16_1"}) {
    ModularData md = build(model_by_name(name));
    ModularResiduals r = modular_residuals(md);
    EXPECT_LT(r.unitarity, 1e-9) << name;
    EXPECT_LT(r.st_cubed, 1e-9) << name;
    EXPECT_LT(r.s_squared_c, 1e-9) << name;
    EXPECT_LT(r.omega_y, 1e-8) << name;
    EXPECT_LT(r.tstst, 1e-9) << name;
    EXPECT_TRUE(r.ct_commute) << name;
    EXPECT_LT(verlinde_check(md, model_by_name(name).ring), 1e-9) << name;
  }
}

TEST(ModularData, So8MatchesDisplayedMatrices) {
  ModularData md = build(so8_level1_model());
  EXPECT_LT((md.S() - so8_reference_S()).norm(), 1e-12);
  // c = 4: the principal branch gives e^{-iπ/3}; the displayed T is its complex conjugate.
  EXPECT_NEAR(md.c(), 4.0, 1e-12);
  EXPECT_LT((md.T() - so8_reference_T().conjugate()).norm(), 1e-12);
}

TEST(ModularData, VanishingGaussSum) {
  // Z_2 with a fermion: z = 1 - 1.
  ModelSpec s;
  s.name = "fermion";
  s.ring = zn_ring(2);
  s.h = {Rational(0), Rational(1, 2)};
  ModularData md = build(s);
  EXPECT_FALSE(md.nondegenerate);
  EXPECT_NEAR(std::abs(md.z), 0.0, 1e-12);
  EXPECT_THROW(md.S(), Error);
  EXPECT_THROW(md.T(), Error);
  EXPECT_THROW(md.c(), Error);
  EXPECT_THROW(verlinde_check(md, s.ring), Error);
  // Y stands in for S.
  EXPECT_LT((md.commutation_matrix() - md.Y).norm(), 1e-15);
}

TEST(ModularData, DegenerateBoson) {
  ModelSpec s;
  s.name = "boson";
  s.ring = zn_ring(2);
  s.h = {Rational(0), Rational(0)};
  ModularData md = build(s);
  EXPECT_FALSE(md.nondegenerate);
  EXPECT_EQ(degenerate_sectors(md), (std::vector<int>{0, 1}));
}

TEST(ModularData, RejectsInconsistentSpins) {
  ModelSpec s = su2_model(3);
  s.h[0] = Rational(1, 2);
  EXPECT_THROW(build(s), Error);
  s = zn_model(5, 2);
  s.h[1] = Rational(2, 5);  // conj(1) = 4 still has 1/5
  EXPECT_THROW(build(s), Error);
  s = su2_model(3);
  s.h.pop_back();
  EXPECT_THROW(build(s), Error);
}

TEST(ModularData, StatisticsPhase) {
  auto h = su2_model(2).h;
  EXPECT_NEAR(std::abs(statistics_phase(h, 2) - Complex(-1, 0)), 0, 1e-12);
  EXPECT_THROW(statistics_phase(h, 3), Error);
  EXPECT_TRUE(same_phase({Rational(1, 3), Rational(4, 3)}, 0, 1));
}

TEST(ModularData, TensorProductCentralChargeAdds) {
  ModelSpec p = tensor_product(su2_model(1), su2_model(2));
  ModularData md = build(p);
  EXPECT_TRUE(md.nondegenerate);
  EXPECT_NEAR(md.c(), 1.0 + 1.5, 1e-10);
  EXPECT_LT(verlinde_check(md, p.ring), 1e-9);
}
