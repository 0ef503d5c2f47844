#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pa/idempotent.hpp"

using namespace pa;

TEST(Essential, Partition) {
  EXPECT_EQ(essential_partition(2, 3).str(), "1|2|3|4");
  EXPECT_EQ(essential_partition(3, 4).str(), "1|2|3,6|4|5");
  EXPECT_EQ(essential_partition(3, 2), identity_partition(3));
  EXPECT_THROW(essential_partition(2, 4), UndefinedIdempotent);
  EXPECT_EQ(propagating_number(essential_partition(4, 5)), 2);
}

TEST(Essential, Constant) {
  EXPECT_EQ(c_const(2, 3), Scalar(2));
  EXPECT_EQ(c_const(5, 6), Scalar(2));
  EXPECT_EQ(c_const(3, 5), Scalar(-6));
  EXPECT_EQ(c_const(3, 2), Scalar(1));
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(c_const(n, n), Scalar(-1));
}

TEST(Essential, QuasiIdempotent) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n < 2 * k; ++n) {
      Element e = essential_idempotent(Level::integer(k), n);
      ASSERT_EQ(mul_orbit(e, e), c_const(k, n) * e) << k << " " << n;
    }
  Element h = essential_idempotent(Level::half(2), 4);
  EXPECT_EQ(mul_orbit(h, h), c_const(3, 4) * h);
  EXPECT_THROW(essential_idempotent(Level::half(2), 5), UndefinedIdempotent);
}

TEST(Essential, InKernel) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n < 2 * k && n <= 3; ++n)
      if (k > n)
        continue;
      else
        ASSERT_TRUE(phi(essential_idempotent(Level::integer(k), n), n).is_zero()) << k << " " << n;
}

TEST(Xi, DirectFormulaAgreesWithDefinition) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 2 * k + 2; ++n)
      ASSERT_EQ(xi(k, n), oracle::xi(k, n)) << k << " " << n;
}

TEST(Xi, CoefficientsFromPropagatingNumber) {
  EXPECT_EQ(xi_coefficient(2, 2, 4), Scalar(1, 12));
  EXPECT_EQ(xi_coefficient(0, 2, 4), Scalar(2, 24));
  EXPECT_THROW(xi_coefficient(0, 2, 3), PoleError);
  EXPECT_THROW(xi(3, 4), PoleError);
  EXPECT_EQ(rook_partitions(2).size(), 7u);
  EXPECT_EQ(rook_partitions(3).size(), 34u);
}

TEST(Xi, DiagramCoefficients) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    auto all = enumerate(Level::integer(k));
    auto got = xi_diagram_coefficients(k, n);
    for (const auto &rho : all) {
      Scalar want = oracle::a_coefficient(rho, n, all);
      auto it = got.find(rho);
      ASSERT_EQ(it == got.end() ? Scalar() : it->second, want) << rho.str();
    }
    Scalar perm = Scalar(1) / factorial(static_cast<unsigned>(k));
    EXPECT_EQ(got.at(identity_partition(k)), perm);
  }
}

TEST(Xi, Idempotent) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k - 1; n <= 2 * k + 1; ++n)
      EXPECT_TRUE(verify_steps(k, n).pass()) << k << " " << n;
  for (int k = 1; k <= 3; ++k)
    EXPECT_TRUE(verify_xief(k).pass()) << k;
}

TEST(Xi, HalfLevel) {
  Element h = xi_half(1, 3);
  EXPECT_EQ(h.level(), Level::half(1));
  EXPECT_EQ(mul_orbit(h, h), h);
  EXPECT_EQ(xi_half(0, 4).size(), 1u);
}

TEST(Character, MatchesFixedSubsetCount) {
  for (int n = 1; n <= 6; ++n)
    for (const auto &sigma : all_permutations(n)) {
      CycleType ct = cycle_type(sigma);
      for (int j = 0; 2 * j <= n && j <= 3; ++j) {
        long want = oracle::fixed_subsets(sigma, j) - (j ? oracle::fixed_subsets(sigma, j - 1) : 0);
        ASSERT_EQ(two_row_character(ct, n, j), want);
      }
    }
}

TEST(Character, Orthogonality) {
  for (int n = 2; n <= 6; ++n)
    for (int j = 0; 2 * j <= n; ++j) {
      long sq = 0;
      for (const auto &sigma : all_permutations(n)) {
        long c = two_row_character(cycle_type(sigma), n, j);
        sq += c * c;
      }
      ASSERT_EQ(Scalar(sq), oracle::fact(n));
      std::vector<int> ones(static_cast<std::size_t>(n), 1);
      ASSERT_EQ(Scalar(two_row_character(ones, n, j)), hook_dim_two_row(n, j));
    }
  EXPECT_THROW(two_row_character({2, 1}, 4, 1), std::invalid_argument);
  EXPECT_EQ(cycle_type({2, 3, 1, 5, 4}), (CycleType{3, 2}));
}

TEST(Projector, MatchesXi) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 5}})
    EXPECT_EQ(phi(xi(k, n), n), epsilon_image(n, k, Level::integer(k))) << k << " " << n;
  EXPECT_EQ(phi_half(xi_half(1, 3), 3), epsilon_image(3, 1, Level::half(1)));
}

TEST(Projector, IsIdempotentMatrix) {
  SparseMatrix m = epsilon_image(4, 1, Level::integer(2));
  EXPECT_EQ(m * m, m);
  EXPECT_THROW(epsilon_image(9, 1, Level::integer(1)), SizeGuardError);
}

TEST(SquareIdentity, SmallCases) {
  for (int n = 1; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      EXPECT_TRUE(verify_square_identity(n, l).pass()) << n << " " << l;
}

TEST(Centrality, Witness) {
  EXPECT_EQ(noncentrality_witness(5).str(), "1,6|2,7|3,8|4|5,9,10");
  EXPECT_THROW(noncentrality_witness(1), std::invalid_argument);
}

TEST(Centrality, Dichotomy) {
  EXPECT_TRUE(verify_noncentrality(2, 2).pass());
  EXPECT_TRUE(verify_noncentrality(2, 3).pass());
  EXPECT_TRUE(verify_noncentrality(3, 4).pass());
  EXPECT_TRUE(verify_noncentrality(3, 5).pass());
  EXPECT_THROW(verify_noncentrality(2, 4), UndefinedIdempotent);
}
