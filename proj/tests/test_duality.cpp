#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cubical;

namespace {

void expect_roundtrip(const FiniteLattice& l) {
  const auto w = duality_roundtrip(l);
  ASSERT_EQ(w.dual.size(), l.size());
  EXPECT_TRUE(is_lattice_isomorphism(l, w.dual, w.iso.forward));
  // Independent check of the map: x -> {j <= x} must preserve meets and joins.
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      EXPECT_EQ(w.iso.forward[l.meet(a, b)], w.dual.meet(w.iso.forward[a], w.iso.forward[b]));
      EXPECT_EQ(w.iso.forward[l.join(a, b)], w.dual.join(w.iso.forward[a], w.iso.forward[b]));
    }
}

}  // namespace

TEST(Duality, Chains) {
  for (std::size_t k = 1; k <= 7; ++k) {
    expect_roundtrip(FiniteLattice::chain(k));
    EXPECT_EQ(join_irreducibles(FiniteLattice::chain(k)).elements.size(), k - 1);
  }
}

TEST(Duality, BooleanLattices) {
  for (unsigned a = 0; a <= 3; ++a) {
    const auto l = FiniteLattice::boolean(a);
    expect_roundtrip(l);
    EXPECT_EQ(join_irreducibles(l).elements.size(), a);
  }
}

TEST(Duality, FreeLatticesHaveCubeIrreducibles) {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto l = FiniteLattice::free(n);
    EXPECT_EQ(l.size(), oracle::monotone_functions(n).size());
    expect_roundtrip(l);
    const auto j = join_irreducibles(l);
    EXPECT_TRUE(find_isomorphism(j.poset, FinitePoset::boolean_cube(n)).has_value()) << "n = " << n;
  }
}

TEST(Duality, LowerSetsOfSmallPosets) {
  // Antichain of two: Boolean square. V shape p, q < r: five lower sets.
  const auto anti = FinitePoset::from_order({"p", "q"}, {});
  EXPECT_TRUE(find_isomorphism(lower_sets(anti), FiniteLattice::boolean(2)).has_value());
  const auto v = FinitePoset::from_order({"p", "q", "r"}, {{0, 2}, {1, 2}});
  EXPECT_EQ(lower_sets(v).size(), 5u);
  EXPECT_TRUE(find_isomorphism(join_irreducibles(lower_sets(v)).poset, v).has_value());
}

TEST(Duality, NonDistributiveLatticeIsRejected) {
  // M3: three atoms between 0 and 1.
  EXPECT_THROW(FiniteLattice::from_order({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
               InputError);
}

TEST(Duality, IsomorphismSearchDistinguishes) {
  EXPECT_FALSE(find_isomorphism(FiniteLattice::chain(4), FiniteLattice::boolean(2)).has_value());
  EXPECT_TRUE(find_isomorphism(FiniteLattice::chain(4), FiniteLattice::chain(4)).has_value());
}

TEST(Duality, InvolutivePosetGivesDeMorganLattice) {
  const auto base = FinitePoset::from_order({"p", "q"}, {{0, 1}});
  const auto dm = DeMorganLattice::from_involutive(InvolutivePoset::make(base, {1, 0}));
  ASSERT_EQ(dm.lattice().size(), 3u);
  const auto& l = dm.lattice();
  for (std::size_t a = 0; a < l.size(); ++a) {
    EXPECT_EQ(dm.negate(dm.negate(a)), a);
    for (std::size_t b = 0; b < l.size(); ++b) EXPECT_EQ(dm.negate(l.join(a, b)), l.meet(dm.negate(a), dm.negate(b)));
  }
  EXPECT_EQ(dm.negate(l.bottom()), l.top());
}

TEST(Duality, InvolutionMustReverseOrder) {
  const auto base = FinitePoset::from_order({"p", "q"}, {{0, 1}});
  EXPECT_THROW(InvolutivePoset::make(base, {0, 1}), InputError);
  EXPECT_THROW(InvolutivePoset::make(base, {1, 1}), InputError);
}
