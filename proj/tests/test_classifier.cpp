#include <gtest/gtest.h>

#include "modinv/modinv.hpp"
#include "oracles.hpp"

using namespace modinv;

namespace {

struct Fixture {
  ModelSpec spec;
  ModularData md;
  SimpleCurrentGroup g;
  std::vector<IntMatrix> list;

  explicit Fixture(const std::string& name) : spec(model_by_name(name)), md(build(spec)) {
    g = simple_currents(spec.ring, md.d);
    list = enumerate_invariants(md).invariants;
  }
  InvariantReport report(const IntMatrix& z) const { return classify(z, spec, md, g, list); }
  int index(const IntMatrix& z) const {
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == z) return static_cast<int>(i);
    return -1;
  }
};

}  // namespace

TEST(Classifier, D5IsPermutationAndSimpleCurrent) {
  Fixture f("su2:6");
  auto r = f.report(oracle::su2_D(6));
  ASSERT_TRUE(r.permutation.theta.has_value());
  EXPECT_TRUE(r.permutation.consistent);
  EXPECT_EQ(*r.permutation.theta, (std::vector<int>{0, 5, 2, 3, 4, 1, 6}));
  EXPECT_TRUE(r.simple_current);
  EXPECT_EQ(r.kind, InvariantKind::TypeII);
  EXPECT_EQ(r.counts.trace, 5);
}

TEST(Classifier, D10IsTypeIWithGramBranching) {
  Fixture f("su2:16");
  IntMatrix z = oracle::su2_D(16);
  auto r = f.report(z);
  EXPECT_EQ(r.kind, InvariantKind::TypeI);
  ASSERT_TRUE(r.typeI_branching.has_value());
  const IntMatrix& b = *r.typeI_branching;
  EXPECT_EQ(b.transpose() * b, z);
  EXPECT_TRUE((b.array() >= 0).all());
  EXPECT_EQ(b(0, 0), 1);
  EXPECT_EQ(b(0, 16), 1);
  EXPECT_EQ(b.rows(), 6);
  EXPECT_TRUE(r.simple_current);
  EXPECT_FALSE(r.permutation.theta.has_value());
}

TEST(Classifier, E7IsTypeIIWithParentD10) {
  Fixture f("su2:16");
  auto r = f.report(oracle::su2_E7());
  EXPECT_EQ(r.kind, InvariantKind::TypeII);
  EXPECT_TRUE(r.vacuum_symmetric);
  EXPECT_FALSE(r.typeI_branching.has_value());
  ASSERT_TRUE(r.parents.has_value());
  const int d10 = f.index(oracle::su2_D(16));
  EXPECT_EQ(r.parents->first, d10);
  EXPECT_EQ(r.parents->second, d10);
  EXPECT_FALSE(r.simple_current);
}

TEST(Classifier, E6AndE8AreTypeI) {
  for (auto [name, z] : {std::pair{"su2:10", oracle::su2_E6()}, std::pair{"su2:28", oracle::su2_E8()}}) {
    EXPECT_TRUE(is_invariant(build(model_by_name(name)), z).invariant);
    auto b = type1_decomposition(z);
    ASSERT_TRUE(b.has_value()) << name;
    EXPECT_EQ(b->transpose() * *b, z);
    EXPECT_EQ(b->rows(), name == std::string("su2:10") ? 3 : 2);
  }
}

TEST(Classifier, So16HeteroticParents) {
  Fixture f("so16_1");
  auto r = f.report(so16::heterotic_Z());
  EXPECT_EQ(r.kind, InvariantKind::Heterotic);
  EXPECT_FALSE(r.vacuum_symmetric);
  ASSERT_TRUE(r.parents.has_value());
  EXPECT_EQ(f.list[r.parents->first], so16::parent_plus());
  EXPECT_EQ(f.list[r.parents->second], so16::parent_minus());
  EXPECT_NE(so16::parent_plus(), so16::parent_minus());
  EXPECT_EQ(r.counts.x_plus, 2);
  EXPECT_EQ(r.counts.x_minus, 2);
}

TEST(Classifier, ChiralIndexRelations) {
  for (const std::string name : {"su2:6", "su2:10", "su2:16", "su2:28", "so8_1", "so16_1", "zn:12:1", "zn:9:2"}) {
    Fixture f(name);
    for (const auto& z : f.list) {
      auto r = f.report(z);
      EXPECT_NEAR(r.indices.w_plus, r.indices.w_minus, 1e-9 * f.md.w) << name;
      EXPECT_NEAR(r.indices.w_zero * r.indices.w_alpha, r.indices.w_plus * r.indices.w_plus, 1e-9 * f.md.w * f.md.w);
      if (r.typeI_branching) {
        EXPECT_EQ(r.typeI_branching->transpose() * *r.typeI_branching, z);
      }
    }
  }
}

TEST(Classifier, IndexOfBlockDiagonalInvariant) {
  // D10: vacuum block {0, 16} has dimension 2, so w+ = w / 2.
  Fixture f("su2:16");
  auto r = f.report(oracle::su2_D(16));
  EXPECT_NEAR(r.indices.w_plus, f.md.w / 2, 1e-9);
}

TEST(Classifier, PermutationTestCatchesBadPermutations) {
  FusionRing ring = su2_ring(6);
  auto h = su2_model(6).h;
  IntMatrix p = permutation_matrix({6, 1, 2, 3, 4, 5, 0});
  auto t = permutation_test(p, ring, h);
  EXPECT_FALSE(t.consistent);
  p = permutation_matrix({0, 1, 4, 3, 2, 5, 6});
  t = permutation_test(p, ring, h);
  EXPECT_FALSE(t.consistent);
  EXPECT_FALSE(as_permutation(oracle::su2_D(16)).has_value());
}

TEST(Classifier, NonNegativeDecomposition) {
  std::vector<IntMatrix> basis{oracle::su2_A(16), oracle::su2_D(16), oracle::su2_E7()};
  auto d = zz_diagnostics(oracle::su2_E7(), basis);
  EXPECT_EQ(d.zt_z, oracle::su2_E7().transpose() * oracle::su2_E7());
  auto c = nonnegative_decomposition(2 * oracle::su2_D(16) + oracle::su2_A(16), basis);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->at(0) * oracle::su2_A(16) + c->at(1) * oracle::su2_D(16) + c->at(2) * oracle::su2_E7(),
            2 * oracle::su2_D(16) + oracle::su2_A(16));
}

TEST(Classifier, KindNames) {
  EXPECT_EQ(to_string(InvariantKind::TypeI), "type I");
  EXPECT_EQ(to_string(InvariantKind::Heterotic), "heterotic");
}
