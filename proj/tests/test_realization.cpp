#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"

using namespace cubical;

namespace {

CubicalSet corpus_set(const std::string& name) { return CubicalSet::from_presentation(corpus::by_name(name)); }

}  // namespace

TEST(Realization, RepresentablesHaveFactorialTopSimplices) {
  const std::size_t factorial[] = {1, 1, 2, 6};
  for (unsigned n = 0; n <= 3; ++n) {
    const auto c = triangulate(CubicalSet::representable(n));
    EXPECT_EQ(c.dimension(), n);
    EXPECT_EQ(c.top_simplex_count(), factorial[n]) << "n = " << n;
    EXPECT_EQ(c.vertex_count(), std::size_t{1} << n);
    EXPECT_EQ(c.euler_characteristic(), 1);
  }
}

TEST(Realization, TriangulatedCubeCounts) {
  // Staircase triangulation of the 3-cube: 8 vertices, 19 edges, 18 triangles, 6 tetrahedra.
  const auto c = triangulate(CubicalSet::representable(3));
  EXPECT_EQ(c.count(1), 19u);
  EXPECT_EQ(c.count(2), 18u);
  EXPECT_EQ(c.count(3), 6u);
}

TEST(Realization, EulerCharacteristicsOfCorpus) {
  const std::map<std::string, long> expected{{"point", 1},           {"interval", 1}, {"circle", 0},
                                             {"path3", 1},           {"square", 1},   {"square-boundary", 0},
                                             {"torus", 0},           {"cube-boundary", 2}};
  for (const auto& [name, chi] : expected) {
    const auto x = corpus_set(name);
    EXPECT_EQ(triangulate(x).euler_characteristic(), chi) << name;
    EXPECT_EQ(realize_numeric(x, 3).euler_characteristic(), chi) << name;
    EXPECT_EQ(realize_numeric(x, 4).euler_characteristic(), chi) << name;
  }
}

TEST(Realization, TwoSamplesCollapseLoops) {
  // With only the corners sampled a loop has a single point, so its edge is dropped.
  EXPECT_EQ(realize_numeric(corpus_set("circle"), 2).euler_characteristic(), 1);
  EXPECT_EQ(realize_numeric(corpus_set("square"), 2).euler_characteristic(), 1);
}

TEST(Realization, BoundaryOfCubeMesh) {
  const auto m = realize_numeric(corpus_set("cube-boundary"), 3);
  EXPECT_EQ(m.points.size(), 26u);
  EXPECT_EQ(m.dimension(), 2u);
  const auto t = triangulate(corpus_set("cube-boundary"));
  EXPECT_EQ(t.vertex_count(), 8u);
  EXPECT_EQ(t.count(1), 18u);
}

TEST(Realization, ExportIsDeterministic) {
  const auto a = export_mesh(realize_numeric(corpus_set("torus"), 3), MeshFormat::off);
  const auto b = export_mesh(realize_numeric(corpus_set("torus"), 3), MeshFormat::off);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("OFF\n", 0), 0u);
  const auto obj = export_mesh(realize_numeric(corpus_set("circle"), 3), MeshFormat::obj);
  EXPECT_EQ(obj, "v 1.666667 0.000000 0.000000\nv 2.500000 0.000000 0.000000\nl 1 2\nl 2 1\n");
}

TEST(Realization, IntervalSegment) {
  const auto m = realize_numeric(CubicalSet::interval(1), 5);
  ASSERT_EQ(m.points.size(), 5u);
  EXPECT_EQ(m.count(1), 4u);
  EXPECT_DOUBLE_EQ(m.points.front().position[0], 0.0);
  EXPECT_DOUBLE_EQ(m.points.back().position[0], 1.0);
}

TEST(Realization, ExplicitDegenerateCellsChangeNothing) {
  auto p = corpus::circle();
  p.add_cell("c", 1);
  p.set_alias("c", "v", CubeMorphism::from_components(1, {}));
  const auto plain = export_mesh(realize_numeric(corpus_set("circle"), 3), MeshFormat::off);
  EXPECT_EQ(export_mesh(realize_numeric(CubicalSet::from_presentation(p), 3), MeshFormat::off), plain);
}

TEST(Realization, OffHeaderCounts) {
  const auto m = realize_numeric(corpus_set("square"), 3);
  const auto off = export_mesh(m, MeshFormat::off);
  std::istringstream in(off);
  std::string magic;
  std::size_t v = 0, f = 0, e = 0;
  in >> magic >> v >> f >> e;
  EXPECT_EQ(magic, "OFF");
  EXPECT_EQ(v, 9u);
  EXPECT_EQ(f, 8u);
  EXPECT_EQ(e, 0u);
}

TEST(Realization, EmptyPresentation) {
  const auto x = CubicalSet::from_presentation(Presentation(Theory::dl, 2));
  EXPECT_EQ(export_mesh(realize_numeric(x, 3), MeshFormat::off), "OFF\n0 0 0\n");
  EXPECT_EQ(triangulate(x).euler_characteristic(), 0);
}

TEST(Realization, Restrictions) {
  EXPECT_THROW(triangulate(corpus_set("dm-circle")), UnsupportedTheoryError);
  EXPECT_THROW(realize_numeric(corpus_set("interval"), 1), InputError);
  EXPECT_THROW(realize_numeric(corpus_set("cube-boundary"), 50, 1000), CapacityError);
  EXPECT_THROW(parse_mesh_format("ply"), InputError);
}

TEST(Realization, ProductsCarryAPresentation) {
  const auto i = CubicalSet::from_presentation(corpus::interval(2));
  const auto c = CubicalSet::from_presentation(corpus::circle(2));
  EXPECT_EQ(triangulate(product(i, i)).euler_characteristic(), 1);
  EXPECT_EQ(realize_numeric(product(c, i), 3).euler_characteristic(), 0);
}

TEST(Realization, GridMapsRespectComposition) {
  std::mt19937_64 rng(oracle::seed + 30);
  for (int i = 0; i < 200; ++i) {
    const unsigned a = rng() % 4, b = rng() % 4, c = rng() % 4;
    const auto f = oracle::random_morphism(rng, a, b);
    const auto g = oracle::random_morphism(rng, b, c);
    const auto gf = grid_map(compose(g, f), 3), fm = grid_map(f, 3), gm = grid_map(g, 3);
    for (std::size_t k = 0; k < gf.size(); ++k) EXPECT_EQ(gf[k], gm[fm[k]]);
  }
}

TEST(Realization, GridMapsAreMonotone) {
  const auto f = morphism_from_terms(2, {"x0 ^ x1", "x0 v x1"});
  const auto g = grid_map(f, 3);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front(), 0u);
  EXPECT_EQ(g.back(), 8u);
}
