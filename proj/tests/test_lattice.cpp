#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace cubical;

TEST(Lattice, CountsMatchMonotoneFunctions) {
  for (unsigned n = 0; n <= 4; ++n) {
    const auto mono = oracle::monotone_functions(n);
    const auto all = enumerate_free(n);
    ASSERT_EQ(all.size(), mono.size()) << "n = " << n;
    EXPECT_EQ(free_lattice_size(n), mono.size());
    std::set<oracle::Table> tables;
    for (const auto& e : all) tables.insert(oracle::truth_table(e));
    EXPECT_EQ(tables, std::set<oracle::Table>(mono.begin(), mono.end()));
  }
}

TEST(Lattice, EnumerationRefusesLargeN) { EXPECT_THROW(enumerate_free(5), CapacityError); }

TEST(Lattice, NormalFormKeepsTheTruthTable) {
  std::mt19937_64 rng(oracle::seed);
  for (int i = 0; i < 2000; ++i) {
    const unsigned n = static_cast<unsigned>(rng() % 5);
    const auto t = random_term(rng, n, 5);
    EXPECT_EQ(oracle::truth_table(normalize(t, n)), oracle::truth_table(t, n)) << to_string(t);
  }
}

TEST(Lattice, NormalFormEqualityIsFunctionEquality) {
  std::mt19937_64 rng(oracle::seed + 1);
  int equal_pairs = 0;
  for (int i = 0; i < 3000; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
    const auto a = random_term(rng, n, 3);
    const auto b = random_term(rng, n, 3);
    const bool same = normalize(a, n) == normalize(b, n);
    equal_pairs += same;
    EXPECT_EQ(same, oracle::truth_table(a, n) == oracle::truth_table(b, n)) << to_string(a) << " / " << to_string(b);
  }
  EXPECT_GT(equal_pairs, 100);
}

TEST(Lattice, Laws) {
  const auto all = enumerate_free(2);
  for (const auto& a : all)
    for (const auto& b : all) {
      EXPECT_EQ(join(a, meet(a, b)), a);
      EXPECT_EQ(meet(a, join(a, b)), a);
      EXPECT_EQ(leq(a, b), join(a, b) == b);
      for (const auto& c : all) EXPECT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
    }
}

TEST(Lattice, ParseAndFormat) {
  EXPECT_EQ(format(normalize("(x0 v x1) ^ (x0 v x1)", 2)), "x0 v x1");
  EXPECT_EQ(format(normalize("x0 ^ (x0 v x1)", 2)), "x0");
  EXPECT_EQ(format(normalize("0 v 1", 0)), "1");
  EXPECT_EQ(format(normalize("x0 ^ 0", 1)), "0");
  const auto e = normalize("(x0 ^ x1) v x2", 3);
  EXPECT_EQ(normalize(format(e), 3), e);
}

TEST(Lattice, ParseErrors) {
  EXPECT_THROW(normalize("x0 v", 1), InputError);
  EXPECT_THROW(normalize("x3", 2), InputError);
  EXPECT_THROW(normalize("(x0", 1), InputError);
  EXPECT_THROW(normalize("~x0", 1), InputError);
}

TEST(DeMorgan, CountsAgreeWithDiamondTables) {
  for (unsigned n = 0; n <= 2; ++n) {
    const auto all = enumerate_free_dm(n);
    std::set<std::vector<unsigned>> tables;
    for (const auto& e : all) tables.insert(oracle::diamond_table(oracle::dm_term(e), n));
    EXPECT_EQ(tables.size(), all.size()) << "n = " << n;
  }
  EXPECT_EQ(enumerate_free_dm(1).size(), 6u);
  EXPECT_EQ(enumerate_free_dm(2).size(), 168u);
}

TEST(DeMorgan, NormalFormEqualityIsDiamondEquality) {
  std::mt19937_64 rng(oracle::seed + 2);
  int equal_pairs = 0;
  for (int i = 0; i < 1500; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 2);
    const auto a = random_term(rng, n, 3, true);
    const auto b = random_term(rng, n, 3, true);
    const bool same = normalize_dm(a, n) == normalize_dm(b, n);
    equal_pairs += same;
    EXPECT_EQ(same, oracle::diamond_table(a, n) == oracle::diamond_table(b, n)) << to_string(a) << " / " << to_string(b);
    EXPECT_EQ(oracle::diamond_table(oracle::dm_term(normalize_dm(a, n)), n), oracle::diamond_table(a, n));
  }
  EXPECT_GT(equal_pairs, 50);
}

TEST(DeMorgan, NegationLaws) {
  for (const auto& a : enumerate_free_dm(1)) {
    EXPECT_EQ(negate(negate(a)), a);
    for (const auto& b : enumerate_free_dm(1)) EXPECT_EQ(negate(join(a, b)), meet(negate(a), negate(b)));
  }
  EXPECT_EQ(format(normalize_dm("~(x0 ^ ~x1)", 2)), format(normalize_dm("~x0 v x1", 2)));
  EXPECT_NE(normalize_dm("x0 ^ ~x0", 1), normalize_dm("0", 1));
}
