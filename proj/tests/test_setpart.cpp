#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pa/setpart.hpp"

using namespace pa;

TEST(SetPartition, StandardLabeling) {
  SetPartition p = SetPartition::from_blocks(5, {{1, 4, 10}, {2, 6, 8, 9}, {3}, {5, 7}});
  std::vector<int> bottom, top;
  for (int v = 1; v <= 5; ++v)
    bottom.push_back(p.label(v) + 1);
  for (int v = 6; v <= 10; ++v)
    top.push_back(p.label(v) + 1);
  EXPECT_EQ(bottom, (std::vector<int>{1, 2, 3, 1, 4}));
  EXPECT_EQ(top, (std::vector<int>{2, 4, 2, 2, 1}));
  EXPECT_EQ(propagating_number(p), 3);
}

TEST(SetPartition, CanonicalForm) {
  EXPECT_EQ(SetPartition::from_blocks(1, {{1}, {2}}).labels(), (std::vector<std::uint8_t>{0, 1}));
  EXPECT_EQ(SetPartition::from_blocks(2, {{2, 3}, {1, 4}}), SetPartition::parse("1,4|2,3"));
  EXPECT_EQ(SetPartition::parse(" 3 | 4,1 | 2 ").str(), "1,4|2|3");
  for (int k = 1; k <= 3; ++k)
    for (const auto &p : enumerate(Level::integer(k)))
      ASSERT_EQ(SetPartition::from_blocks(k, p.blocks()), p);
}

TEST(SetPartition, Malformed) {
  EXPECT_THROW(SetPartition::from_blocks(2, {{1, 2}, {2, 3, 4}}), MalformedPartition);
  EXPECT_THROW(SetPartition::from_blocks(2, {{1, 2}, {3}}), MalformedPartition);
  EXPECT_THROW(SetPartition::from_blocks(1, {{1, 2, 3}}), MalformedPartition);
  EXPECT_THROW(SetPartition::parse("1,,2"), MalformedPartition);
  EXPECT_THROW(SetPartition::parse("1,2,3"), MalformedPartition);
}

TEST(SetPartition, Refines) {
  EXPECT_TRUE(refines(SetPartition::parse("1|2|3|4"), SetPartition::parse("1,2,3,4")));
  EXPECT_TRUE(refines(SetPartition::parse("1,4|2|3"), SetPartition::parse("1,2,4|3")));
  EXPECT_FALSE(refines(SetPartition::parse("1,2|3,4"), SetPartition::parse("1,3|2,4")));
  EXPECT_THROW(refines(SetPartition::parse("1|2"), SetPartition::parse("1|2|3|4")), LevelError);
}

TEST(SetPartition, Coarsenings) {
  EXPECT_EQ(coarsenings(SetPartition::parse("1,4|2|3")).size(), 5u);
  EXPECT_EQ(coarsenings(SetPartition::parse("1,2,3,4")).size(), 1u);
  auto all = coarsenings(SetPartition::parse("1|2|3|4"));
  EXPECT_EQ(all.size(), 15u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(SetPartition, Mobius) {
  EXPECT_EQ(mobius(SetPartition::parse("1|2|3|4"), SetPartition::parse("1,2,3,4")), -6);
  EXPECT_EQ(mobius(SetPartition::parse("1,4|2|3"), SetPartition::parse("1,2,3,4")), 2);
  EXPECT_EQ(mobius(SetPartition::parse("1,4|2|3"), SetPartition::parse("1,4|2|3")), 1);
  EXPECT_THROW(mobius(SetPartition::parse("1,2|3,4"), SetPartition::parse("1,3|2,4")), OrderError);
}

TEST(SetPartition, MobiusMatchesRecursiveDefinition) {
  auto all = enumerate(Level::integer(2));
  for (const auto &a : all)
    for (const auto &b : all)
      if (oracle::finer(a, b))
        ASSERT_EQ(mobius(a, b), oracle::mobius(a, b, all)) << a.str() << " " << b.str();
}

TEST(SetPartition, MobiusInversion) {
  for (int k : {2, 3}) {
    auto all = enumerate(Level::integer(k));
    for (const auto &pi : all)
      for (const auto &rho : all) {
        if (!refines(pi, rho))
          continue;
        Integer s = 0;
        for (const auto &sigma : coarsenings(pi))
          if (refines(sigma, rho))
            s += mobius(sigma, rho);
        ASSERT_EQ(s, pi == rho ? 1 : 0);
      }
  }
}

TEST(SetPartition, Concat) {
  // pi1 over pi2 with two middle components removed
  auto r = concat(SetPartition::parse("1|2,8|3,4|5|6,7"), SetPartition::parse("1,3|2,6|4|5|7,8"));
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.removed, 2);
  EXPECT_EQ(r.product.str(), "1,3|2,8|4|5|6,7");
  EXPECT_EQ(r.top_only_blocks.size(), 2u);
  EXPECT_EQ(r.bottom_only_blocks.size(), 2u);

  SetPartition p = SetPartition::parse("1,2,3|4,5,6");
  auto s = concat(p, p);
  EXPECT_TRUE(s.match);
  EXPECT_EQ(s.removed, 1);
  EXPECT_EQ(s.product, p);

  auto t = concat(SetPartition::parse("1|2,3,7|4,5|6,9,11|8,10|12"),
                  SetPartition::parse("1,3|2,7|4,5,6,12|8,9|10|11"));
  EXPECT_FALSE(t.match);
}

TEST(SetPartition, ConcatMatchesGraphSearch) {
  for (int k : {1, 2}) {
    auto all = enumerate(Level::integer(k));
    for (const auto &a : all)
      for (const auto &b : all) {
        auto got = concat(a, b);
        auto want = oracle::concat(a, b);
        ASSERT_EQ(got.product, want.product);
        ASSERT_EQ(got.removed, want.removed);
        ASSERT_EQ(got.match, want.match);
      }
  }
  std::mt19937_64 rng(3);
  auto all = enumerate(Level::integer(3));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    const auto &a = all[pick(rng)];
    const auto &b = all[pick(rng)];
    auto got = concat(a, b);
    auto want = oracle::concat(a, b);
    ASSERT_EQ(got.product, want.product);
    ASSERT_EQ(got.removed, want.removed);
    ASSERT_EQ(got.match, want.match);
  }
}

TEST(SetPartition, PropagatingNumberIsSubmultiplicative) {
  auto all = enumerate(Level::integer(2));
  for (const auto &a : all)
    for (const auto &b : all)
      ASSERT_LE(propagating_number(concat(a, b).product),
                std::min(propagating_number(a), propagating_number(b)));
}

TEST(SetPartition, Permute) {
  SetPartition pi = SetPartition::parse("1|2,3,7|4,5|6,9,11|8,10|12");
  Permutation id{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(permute(pi, id, id), pi);
  Permutation top{3, 1, 6, 2, 5, 4}, bottom_inv{2, 3, 1, 5, 4, 6};
  EXPECT_EQ(permute(pi, top, bottom_inv).str(), "1,3,9|2|4,5|6,11,12|7,8|10");
  EXPECT_THROW(permute(pi, {1, 1, 2, 3, 4, 5}, id), std::invalid_argument);

  std::mt19937_64 rng(9);
  auto all = enumerate(Level::integer(4));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 10; ++t) {
    Permutation s{1, 2, 3, 4}, s2{1, 2, 3, 4};
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(s2.begin(), s2.end(), rng);
    const auto &p = all[pick(rng)];
    EXPECT_EQ(propagating_number(permute(p, s2, s)), propagating_number(p));
  }
}

TEST(SetPartition, RookAndPermutation) {
  EXPECT_TRUE(is_rook(identity_partition(3)));
  EXPECT_TRUE(is_permutation(identity_partition(3)));
  EXPECT_TRUE(is_rook(singletons_partition(3)));
  EXPECT_FALSE(is_permutation(singletons_partition(3)));
  EXPECT_FALSE(is_rook(SetPartition::parse("1,2|3,4")));
  for (int k = 1; k <= 3; ++k)
    for (const auto &p : enumerate(Level::integer(k))) {
      ASSERT_EQ(is_rook(p), propagating_number(p) + p.num_blocks() == 2 * k);
      ASSERT_EQ(is_rook(p), oracle::rook(p));
    }
}

TEST(SetPartition, Enumerate) {
  EXPECT_EQ(enumerate(Level::integer(1)).size(), 2u);
  EXPECT_EQ(enumerate(Level::integer(2)).size(), 15u);
  EXPECT_EQ(enumerate(Level::half(2)).size(), 52u);
  EXPECT_EQ(enumerate(Level::half(0)).size(), 1u);
  for (int k = 1; k <= 3; ++k) {
    auto whole = enumerate(Level::integer(k));
    auto half = enumerate(Level::half(k));
    EXPECT_EQ(static_cast<long>(whole.size()), oracle::bell(2 * k));
    EXPECT_EQ(static_cast<long>(half.size()), oracle::bell(2 * k + 1));
    EXPECT_EQ(Integer(static_cast<long>(whole.size())), bell(2 * k));
    EXPECT_TRUE(std::is_sorted(whole.begin(), whole.end()));
    for (const auto &p : half)
      ASSERT_EQ(p.label(k + 1), p.label(2 * k + 2));
  }
}

TEST(SetPartition, Counters) {
  EXPECT_EQ(bell(6), 203);
  EXPECT_EQ(stirling2(6, 4), 65);
  EXPECT_EQ(count_partitions_max_blocks(6, 3), 122);
  EXPECT_EQ(count_partitions_max_blocks(4, 2), 8);
  EXPECT_EQ(bell(0), 1);
}

TEST(Level, ParseAndAdmit) {
  EXPECT_EQ(Level::parse("3"), Level::integer(3));
  EXPECT_EQ(Level::parse("5/2"), Level::half(2));
  EXPECT_EQ(Level::parse("5/2").str(), "5/2");
  EXPECT_THROW(Level::parse("4/2"), LevelError);
  EXPECT_THROW(Level::parse("-1"), LevelError);
  EXPECT_TRUE(Level::half(1).admits(SetPartition::parse("1|2,4|3")));
  EXPECT_FALSE(Level::half(1).admits(SetPartition::parse("1|2|3|4")));
}
