#include <gtest/gtest.h>

#include <bit>
#include <boost/rational.hpp>
#include <random>

#include "oracles.hpp"

using namespace cubical;

namespace {

using Q = boost::rational<long long>;

std::vector<Q> random_point(std::mt19937_64& rng, unsigned n) {
  std::vector<Q> p;
  for (unsigned i = 0; i < n; ++i) {
    const long long den = 1 + static_cast<long long>(rng() % 12);
    p.emplace_back(static_cast<long long>(rng() % (den + 1)), den);
  }
  return p;
}

}  // namespace

TEST(Cube, CompositionIsAssociativeAndUnital) {
  std::mt19937_64 rng(oracle::seed + 10);
  for (Theory t : {Theory::dl, Theory::dm}) {
    for (int i = 0; i < 300; ++i) {
      const unsigned a = rng() % 4, b = rng() % 4, c = rng() % 4, d = rng() % 4;
      const auto f = oracle::random_morphism(rng, a, b, t);
      const auto g = oracle::random_morphism(rng, b, c, t);
      const auto h = oracle::random_morphism(rng, c, d, t);
      EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
      EXPECT_EQ(compose(f, CubeMorphism::identity(a, t)), f);
      EXPECT_EQ(compose(CubeMorphism::identity(b, t), f), f);
    }
  }
}

TEST(Cube, CompositionMatchesEvaluationAtRationalPoints) {
  std::mt19937_64 rng(oracle::seed + 11);
  const UnitInterval<Q> unit;
  for (Theory t : {Theory::dl, Theory::dm}) {
    for (int i = 0; i < 1000; ++i) {
      const unsigned a = rng() % 4, b = rng() % 4, c = rng() % 4;
      const auto f = oracle::random_morphism(rng, a, b, t);
      const auto g = oracle::random_morphism(rng, b, c, t);
      const auto p = random_point(rng, a);
      EXPECT_EQ(compose(g, f).apply(unit, p), g.apply(unit, f.apply(unit, p)));
    }
  }
}

TEST(Cube, CompositionMatchesBooleanTruthTables) {
  // Component k of g . f, as a truth table, is g_k evaluated on the tables of f.
  std::mt19937_64 rng(oracle::seed + 12);
  for (int i = 0; i < 300; ++i) {
    const unsigned a = rng() % 4, b = rng() % 4, c = 1 + rng() % 3;
    const auto f = oracle::random_morphism(rng, a, b);
    const auto g = oracle::random_morphism(rng, b, c);
    const auto gf = compose(g, f);
    for (unsigned k = 0; k < c; ++k) {
      oracle::Table expected = 0;
      for (unsigned pt = 0; pt < (1u << a); ++pt) {
        unsigned inner = 0;
        for (unsigned j = 0; j < b; ++j)
          if (oracle::truth_table(f.component(j)) >> pt & 1u) inner |= 1u << j;
        if (oracle::truth_table(g.component(k)) >> inner & 1u) expected |= oracle::Table{1} << pt;
      }
      EXPECT_EQ(oracle::truth_table(gf.component(k)), expected);
    }
  }
}

TEST(Cube, HomCounts) {
  for (unsigned m = 0; m <= 2; ++m)
    for (unsigned n = 0; n <= 2; ++n) {
      std::uint64_t expected = 1;
      for (unsigned i = 0; i < n; ++i) expected *= oracle::monotone_functions(m).size();
      EXPECT_EQ(hom_count(m, n), expected);
      const auto all = enumerate_hom(m, n);
      EXPECT_EQ(all.size(), expected);
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  EXPECT_EQ(hom_count(1, 1, Theory::dm), 6u);
  EXPECT_THROW(enumerate_hom(4, 4), CapacityError);
}

TEST(Cube, CubicalIdentities) {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned i = 0; i < n; ++i)
      for (bool e : {false, true}) {
        // Forgetting the coordinate just fixed gives back the identity.
        EXPECT_TRUE(compose(degeneracy(n, i), face(n, i, e)).is_identity());
        if (i + 1 < n) {
          EXPECT_TRUE(compose(connection(n, i, i + 1, ConnectionKind::meet), face(n, i + 1, true)).is_identity());
          EXPECT_TRUE(compose(connection(n, i, i + 1, ConnectionKind::join), face(n, i + 1, false)).is_identity());
        }
      }
  // Faces commute: d_j d_i = d_i d_(j-1) for i < j.
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i + 1; j < 3; ++j)
      EXPECT_EQ(compose(face(3, j, true), face(2, i, false)), compose(face(3, i, false), face(2, j - 1, true)));
}

TEST(Cube, ReversalIsAnInvolution) {
  const auto r = reversal(2, 1);
  EXPECT_TRUE(compose(r, r).is_identity());
  EXPECT_EQ(compose(r, face(2, 1, false, Theory::dm)), face(2, 1, true, Theory::dm));
  EXPECT_THROW(reversal(1, 0, Theory::dl), UnsupportedTheoryError);
}

TEST(Cube, ParseMorphism) {
  const auto f = morphism_from_terms(2, {"x0 v x1", "1"});
  EXPECT_EQ(f.source(), 2u);
  EXPECT_EQ(f.target(), 2u);
  EXPECT_EQ(parse_morphism(to_string(f)), f);
  EXPECT_THROW(compose(f, CubeMorphism::identity(3)), InputError);
}

TEST(Bipointed, FaithfulButNotFull) {
  const auto rows = compare_bipointed(2);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& c : rows) {
    EXPECT_TRUE(c.injective()) << c.m << "," << c.n;
    std::size_t expected = 1;
    for (unsigned i = 0; i < c.n; ++i) expected *= c.m + 2;
    EXPECT_EQ(c.bipointed, expected);
    if (c.m == 2 && c.n == 1) {
      EXPECT_EQ(c.image, 4u);
      EXPECT_EQ(c.cube, 6u);
      EXPECT_FALSE(c.surjective());
    }
  }
}

TEST(Bipointed, ImagesAreClosedUnderComposition) {
  for (const auto& f : enumerate_bipointed(1, 2))
    for (const auto& g : enumerate_bipointed(2, 2)) {
      const auto gf = compose(from_bipointed(g), from_bipointed(f));
      for (const auto& c : gf.components()) EXPECT_TRUE(c.is_bottom() || c.is_top() || (c.clauses().size() == 1 && std::popcount(c.clauses()[0]) == 1));
    }
}
