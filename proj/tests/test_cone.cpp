#include <gtest/gtest.h>

#include <set>

#include "toricdef.hpp"

using namespace toricdef;

namespace {

Cone example() { return builtin_cone("example"); }

// Lattice points of Lambda up to height H under the default height functional.
std::vector<MVector> lattice_points(const Cone& c, long H) { return Window(c, H).points(); }

}  // namespace

TEST(ConeOverPolytope, Square) {
  Cone sq = builtin_cone("square");
  ASSERT_EQ(sq.size(), 4);
  EXPECT_EQ(sq.rays[0], (NVector{0, 0, 1}));
  EXPECT_EQ(sq.rays[2], (NVector{1, 1, 1}));
  EXPECT_EQ(*sq.rstar, (MVector{0, 0, 1}));
  for (int j = 0; j < 4; ++j) EXPECT_EQ(sq.edge_length(j), 1);
}

TEST(ConeOverPolytope, HexagonEdges) {
  Cone hex = builtin_cone("hexagon");
  std::vector<NVector> d{{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {-1, 0, 0}, {-1, -1, 0}, {0, -1, 0}};
  ASSERT_EQ(hex.size(), 6);
  for (int j = 0; j < 6; ++j) {
    EXPECT_EQ(hex.edge(j), d[j]);
    EXPECT_EQ(hex.edge_length(j), 1);
  }
}

TEST(ConeOverPolytope, P123) {
  Cone c = builtin_cone("p123");
  EXPECT_EQ(c.rays[0], (NVector{-1, -1, 1}));
  EXPECT_EQ(c.rays[1], (NVector{2, -1, 1}));
  EXPECT_EQ(c.rays[2], (NVector{-1, 1, 1}));
  std::set<MVector> dual(c.dual.begin(), c.dual.end());
  EXPECT_EQ(dual, (std::set<MVector>{{0, 1, 1}, {-2, -3, 1}, {1, 0, 1}}));
  EXPECT_EQ(c.edge_length(0), 3);
  EXPECT_EQ(c.edge_length(1), 1);
  EXPECT_EQ(c.edge_length(2), 2);
}

TEST(ConeOverPolytope, TriangleEdgeLengths) {
  Cone c = builtin_cone("triangle2");
  for (int j = 0; j < 3; ++j) EXPECT_EQ(c.edge_length(j), 2);
}

TEST(ConeOverPolytope, RejectsBadInput) {
  EXPECT_THROW(cone_over_polytope(Polytope2{{{0, 0}, {1, 0}}}), InputError);
  EXPECT_THROW(cone_over_polytope(Polytope2{{{0, 0}, {1, 0}, {1, 0}, {0, 1}}}), InputError);
  // clockwise
  EXPECT_THROW(cone_over_polytope(Polytope2{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}), InputError);
  // not convex
  EXPECT_THROW(cone_over_polytope(Polytope2{{{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}}), InputError);
  // collinear vertex
  EXPECT_THROW(cone_over_polytope(Polytope2{{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}), InputError);
}

TEST(ConeOverPolytope, DualGeneratorsVanishOnAdjacentRays) {
  for (const auto* name : {"hexagon", "square", "p123", "triangle2", "trapezoid"}) {
    Cone c = builtin_cone(name);
    for (int j = 0; j < c.size(); ++j) {
      EXPECT_EQ(pair(c.rays[j], c.dual[j]), 0);
      EXPECT_EQ(pair(c.rays[c.next(j)], c.dual[j]), 0);
      for (const auto& a : c.rays) EXPECT_GE(pair(a, c.dual[j]), 0);
      EXPECT_EQ(lattice_length(c.dual[j]), 1);
    }
  }
}

TEST(DualCone2d, Examples) {
  auto g = dual_cone_2d(NVector{-1, 2}, NVector{1, 2});
  std::set<MVector> gens(g.begin(), g.end());
  EXPECT_EQ(gens, (std::set<MVector>{{2, 1}, {-2, 1}}));

  auto r = dual_cone_2d(MVector{0, 1}, MVector{2, 1});
  EXPECT_EQ(std::set<NVector>(r.begin(), r.end()), (std::set<NVector>{{1, 0}, {-1, 2}}));

  auto q = dual_cone_2d(NVector{1, 0}, NVector{0, 1});
  EXPECT_EQ(std::set<MVector>(q.begin(), q.end()), (std::set<MVector>{{1, 0}, {0, 1}}));

  EXPECT_THROW(dual_cone_2d(NVector{1, 2}, NVector{-2, -4}), DomainError);
}

TEST(HilbertBasis, PaperExample) {
  auto h = hilbert_basis_2d(example());
  EXPECT_EQ(h, (std::vector<MVector>{{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST(HilbertBasis, SurfaceAndQuadrant) {
  for (int n = 1; n <= 4; ++n) {
    auto h = hilbert_basis_2d(an_surface_cone(n));
    EXPECT_EQ(std::set<MVector>(h.begin(), h.end()), (std::set<MVector>{{0, 1}, {1, 1}, {n + 1, n}}));
  }
  auto q = hilbert_basis_2d(cone_2d(NVector{1, 0}, NVector{0, 1}));
  EXPECT_EQ(q, (std::vector<MVector>{{0, 1}, {1, 0}}));
}

// Every lattice point of height <= 10 is a nonnegative combination of the
// Hilbert basis, found by dynamic programming over the window.
TEST(HilbertBasis, GeneratesLowHeightPoints) {
  for (const Cone& c : {example(), an_surface_cone(2), an_surface_cone(3), cone_2d(NVector{1, 0}, NVector{-3, 5})}) {
    auto h = hilbert_basis_2d(c);
    for (const auto& g : h)
      for (const auto& a : c.rays) EXPECT_GE(pair(a, g), 0);
    Window w(c, 10);
    std::set<MVector> reached{MVector{0, 0}};
    for (const auto& p : w.points())
      for (const auto& g : h)
        if (reached.count(p - g)) {
          reached.insert(p);
          break;
        }
    EXPECT_EQ(reached.size(), w.size());
  }
}

TEST(Gorenstein, Degrees) {
  EXPECT_EQ(*builtin_cone("hexagon").rstar, (MVector{0, 0, 1}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(*an_surface_cone(n).rstar, (MVector{1, 1}));
  EXPECT_EQ(*cone_2d(NVector{1, 0}, NVector{0, 1}).rstar, (MVector{1, 1}));
  EXPECT_FALSE(example().rstar.has_value());
  for (const auto* name : {"hexagon", "square", "p123", "triangle2", "trapezoid"}) {
    Cone c = builtin_cone(name);
    for (const auto& a : c.rays) EXPECT_EQ(pair(a, *c.rstar), 1);
  }
}

TEST(AnSurface, RaysAndRelation) {
  Cone c = an_surface_cone(1);
  EXPECT_EQ(std::set<NVector>(c.rays.begin(), c.rays.end()), (std::set<NVector>{{1, 0}, {-1, 2}}));
  for (int n = 1; n <= 6; ++n) {
    auto d = an_data(n);
    EXPECT_EQ(d.S1 + d.S3, (n + 1) * d.S2);
  }
  EXPECT_THROW(an_surface_cone(0), DomainError);
}

TEST(KSets, PaperExample) {
  Cone c = example();
  MVector R{0, 1};
  int a1 = c.rays[0] == NVector{-1, 2} ? 0 : 1, a2 = 1 - a1;
  EXPECT_TRUE(k_set_member(c, R, Face{{a1}}, MVector{1, 1}));
  EXPECT_FALSE(k_set_member(c, R, Face{{a2}}, MVector{1, 1}));
  for (const auto& p : std::vector<MVector>{{0, 0}, {2, 1}, {1, 1}, {4, 2}, {3, 2}}) {
    EXPECT_TRUE(k_set_member(c, R, Face{{a1}}, p)) << p.str();
    EXPECT_TRUE(k_set_member(c, R, Face{{a2}}, MVector{-p[0], p[1]})) << p.str();
  }
  EXPECT_THROW(k_set_member(c, R, Face{{a1}}, MVector{0, -1}), DomainError);
  EXPECT_TRUE(k_set_member(c, R, Face{}, MVector{5, 5}));
}

TEST(KSets, OriginInEveryPositiveRaySet) {
  Cone c = builtin_cone("p123");
  MVector R = special_degree(c, SpecialDegree{2, 1, 2});
  EXPECT_EQ(R, (MVector{-1, 0, 1}));
  EXPECT_EQ(pair(c.rays[0], R), 2);
  EXPECT_TRUE(k_set_member(c, R, Face{{0}}, MVector{0, 0, 0}));
}

// Lambda \ (R + Lambda) = union of the ray K-sets on a window.
TEST(KSets, ComplementIsUnionOfRaySets) {
  RationalSampler rs(21);
  for (const auto* name : {"hexagon", "p123", "example", "an:2"}) {
    Cone c = builtin_cone(name);
    for (int trial = 0; trial < 5; ++trial) {
      MVector R = MVector::zero(c.rank);
      for (int i = 0; i < c.rank; ++i) R[i] = rs.integer(-2, 3);
      for (const auto& l : lattice_points(c, 10)) {
        bool in_union = false;
        for (int j = 0; j < c.size(); ++j) in_union = in_union || k_set_member(c, R, Face{{j}}, l);
        EXPECT_EQ(in_union, !c.geq(l, R)) << name << " " << l.str();
      }
    }
  }
}

TEST(Faces, PolygonFaceLattice) {
  Cone c = builtin_cone("hexagon");
  EXPECT_EQ(c.faces(0).size(), 1u);
  EXPECT_EQ(c.faces(1).size(), 6u);
  EXPECT_EQ(c.faces(2).size(), 6u);
  EXPECT_EQ(c.faces(2).back().rays, (std::vector<int>{5, 0}));
  EXPECT_EQ(c.full_face().rays.size(), 6u);
  EXPECT_EQ(incidence_sign(Face{{0}}, Face{{0, 1}}), 1);
  EXPECT_EQ(incidence_sign(Face{{1}}, Face{{0, 1}}), -1);
  EXPECT_EQ(incidence_sign(Face{{0, 1}}, c.full_face()), 1);
}
