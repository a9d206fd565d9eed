#include <gtest/gtest.h>

#include <map>

#include "toricdef.hpp"

using namespace toricdef;

namespace {

// Independent window oracle for dim T^1(-R): additive functions on
// W \ Lambda(R) modulo restrictions of linear forms on M.
std::size_t t1_oracle(const Cone& c, const MVector& R, long H) {
  Window w(c, H);
  std::vector<MVector> pts;
  std::map<MVector, std::size_t> idx;
  for (const auto& p : w.points())
    if (!c.geq(p, R)) {
      idx[p] = pts.size();
      pts.push_back(p);
    }
  SparseSystem sys(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a; b < pts.size(); ++b) {
      auto it = idx.find(pts[a] + pts[b]);
      if (it == idx.end()) continue;
      SparseSystem::Row row{{a, Q(1)}, {b, Q(1)}, {it->second, Q(-1)}};
      sys.add(row, 0);
    }
  return sys.free_count() - span_of_points(pts, c.rank).dim();
}

void expect_complex(const DegreeComplex& dc) {
  for (std::size_t p = 0; p + 2 < dc.dims.size(); ++p) {
    if (dc.dims[p + 2] == 0 || dc.dims[p] == 0) continue;
    QMat prod = mat_mul(dc.maps[p + 1], dc.maps[p], dc.dims[p]);
    for (const auto& row : prod) EXPECT_TRUE(is_zero(row));
  }
}

const std::vector<std::string> kPolygons{"hexagon", "square", "p123", "triangle2", "trapezoid"};

}  // namespace

TEST(RaySpan, P123AtRstar) {
  Cone c = builtin_cone("p123");
  for (int j = 0; j < 3; ++j) {
    auto s = ray_span(c, *c.rstar, j);
    EXPECT_EQ(s.span.dim(), 2u);
    for (const auto& b : s.span.basis()) EXPECT_EQ(dot(b, c.rays[j].to_q()), 0);
  }
}

TEST(RaySpan, P123SpecialDegree) {
  Cone c = builtin_cone("p123");
  MVector R = special_degree(c, SpecialDegree{2, 1, 2});  // 2R* minus the generator pairing 3 with a2
  EXPECT_EQ(pair(c.rays[0], R), 2);
  EXPECT_EQ(pair(c.rays[1], R), -1);
  EXPECT_EQ(pair(c.rays[2], R), 2);
  EXPECT_EQ(ray_span(c, R, 0).span.dim(), 3u);
  EXPECT_EQ(ray_span(c, R, 1).span.dim(), 0u);
  EXPECT_EQ(ray_span(c, R, 2).span.dim(), 3u);
}

TEST(RaySpan, ZeroDegree) {
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    for (int j = 0; j < c.size(); ++j) EXPECT_EQ(ray_span(c, MVector{0, 0, 0}, j).span.dim(), 0u);
  }
}

TEST(RaySpan, TrichotomyMatchesEnumeration) {
  SpanOptions enumerate;
  enumerate.allow_closed_form = false;
  RationalSampler rs(31);
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    for (int trial = 0; trial < 4; ++trial) {
      MVector R{rs.integer(-2, 2), rs.integer(-2, 2), rs.integer(0, 3)};
      for (int j = 0; j < c.size(); ++j)
        EXPECT_EQ(ray_span(c, R, j).span, face_span(c, R, Face{{j}}, enumerate).span) << name << R.str();
    }
  }
}

TEST(FaceSpan, HexagonTwoFacesFullAtTwiceRstar) {
  Cone c = builtin_cone("hexagon");
  for (const auto& f : c.faces(2)) {
    auto s = face_span(c, 2 * *c.rstar, f);
    EXPECT_EQ(s.method, SpanMethod::ClosedForm);
    EXPECT_EQ(s.span.dim(), 3u);
  }
}

TEST(FaceSpan, LongEdgeGivesEdgePerp) {
  Cone c = builtin_cone("triangle2");
  for (const auto& f : c.faces(2)) {
    auto s = face_span(c, 2 * *c.rstar, f);
    EXPECT_EQ(s.span, kernel_basis({c.edge(f.rays[0]).to_q()}, 3));
  }
}

TEST(FaceSpan, FullFaceAtRstarIsZero) {
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    EXPECT_EQ(face_span(c, *c.rstar, c.full_face()).span.dim(), 0u);
  }
}

TEST(FaceSpan, ClosedFormMatchesEnumeration) {
  SpanOptions enumerate;
  enumerate.allow_closed_form = false;
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    for (long m = 2; m <= 3; ++m)
      for (const auto& f : c.faces(2)) {
        auto closed = face_span(c, m * *c.rstar, f);
        auto counted = face_span(c, m * *c.rstar, f, enumerate);
        EXPECT_EQ(closed.method, SpanMethod::ClosedForm);
        EXPECT_EQ(counted.method, SpanMethod::WindowEnumerated);
        EXPECT_EQ(closed.span, counted.span) << name << " m=" << m << " " << f.name();
      }
  }
}

TEST(FaceSpan, UncertifiedIsLoud) {
  Cone c = builtin_cone("p123");
  SpanOptions tight;
  tight.allow_closed_form = false;
  tight.max_height = 4;
  EXPECT_THROW(face_span(c, MVector{-1, -1, 2}, c.faces(2)[0], tight), UncertifiedError);
}

TEST(SpanComplex, T1AtRstar) {
  EXPECT_EQ(span_complex_cohomology(builtin_cone("hexagon"), MVector{0, 0, 1}).t[1], 3u);
  EXPECT_EQ(span_complex_cohomology(builtin_cone("square"), MVector{0, 0, 1}).t[1], 1u);
}

TEST(SpanComplex, T1MatchesVSpace) {
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    EXPECT_EQ(span_complex_cohomology(c, *c.rstar).t[1], v_space(c).V.dim() - 1) << name;
  }
}

TEST(SpanComplex, T1MatchesWindowOracle) {
  RationalSampler rs(32);
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    EXPECT_EQ(span_complex_cohomology(c, *c.rstar).t[1], t1_oracle(c, *c.rstar, 9)) << name;
    for (int trial = 0; trial < 3; ++trial) {
      MVector R{rs.integer(-2, 2), rs.integer(-2, 2), rs.integer(1, 2)};
      EXPECT_EQ(span_complex_cohomology(c, R).t[1], t1_oracle(c, R, 12)) << name << " " << R.str();
    }
  }
}

// Frozen from t1_oracle: P(1,2,3) special degrees each carry a one dimensional T^1.
TEST(SpanComplex, P123SpecialDegreesHaveOneDimensionalT1) {
  Cone c = builtin_cone("p123");
  for (const auto& d : special_degrees(c, 3)) {
    MVector R = special_degree(c, d);
    EXPECT_EQ(span_complex_cohomology(c, R).t[1], 1u) << d.str();
    EXPECT_EQ(t1_oracle(c, R, 14), 1u) << d.str();
  }
}

TEST(SpanComplex, SurfaceDegrees) {
  for (int n = 1; n <= 4; ++n) {
    Cone c = an_surface_cone(n);
    for (int k = 0; k <= n + 3; ++k) {
      MVector R{k, k};
      std::size_t expect = (k >= 2 && k <= n + 1) ? 1 : 0;
      EXPECT_EQ(span_complex_cohomology(c, R).t[1], expect) << "n=" << n << " k=" << k;
      EXPECT_EQ(t1_oracle(c, R, 4 * (n + 1)), expect);
    }
  }
}

TEST(SpanComplex, MapsComposeToZero) {
  RationalSampler rs(33);
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    for (int trial = 0; trial < 4; ++trial) {
      MVector R{rs.integer(-2, 2), rs.integer(-2, 2), rs.integer(0, 3)};
      expect_complex(build_degree_complex(c, R));
    }
  }
}

TEST(SpanComplex, RepresentativesAreCocycles) {
  Cone c = builtin_cone("hexagon");
  auto h = span_complex_cohomology(c, *c.rstar);
  for (const auto& v : h.representatives[1]) {
    EXPECT_TRUE(is_zero(h.complex.apply(1, v)));
    EXPECT_FALSE(class_normal_form(h.complex, 1, v).is_zero());
  }
}

TEST(MRStar, Dimensions) {
  EXPECT_EQ(mrstar_model(builtin_cone("hexagon"), 2).t2_dim(), 2u);
  // the cone over the square is a hypersurface singularity: T^2 vanishes
  EXPECT_EQ(mrstar_model(builtin_cone("square"), 2).t2_dim(), 0u);
}

TEST(MRStar, MatrixIdentities) {
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    for (long m = 2; m <= 3; ++m) {
      auto md = mrstar_model(c, m);
      const std::size_t n = md.ambient();
      for (const auto& row : mat_mul(md.delta, md.psi, 3)) EXPECT_TRUE(is_zero(row));
      if (!md.eta.empty()) {
        for (const auto& row : mat_mul(md.eta, md.delta, n)) EXPECT_TRUE(is_zero(row));
      }
      EXPECT_TRUE(md.ker_eta.contains(md.modulus)) << name << " m=" << m;
    }
  }
}

TEST(MRStar, TriangleLongEdgesAbsorbResidues) {
  Cone c = builtin_cone("triangle2");
  auto md = mrstar_model(c, 2);
  EXPECT_EQ(md.t2_dim(), 0u);
}

TEST(T2Class, CoboundaryIsZeroWithCertificate) {
  RationalSampler rs(34);
  Cone c = builtin_cone("hexagon");
  auto md = mrstar_model(c, 2);
  for (int trial = 0; trial < 10; ++trial) {
    QVec b = rs.vec(md.ambient());
    QVec q = mat_vec(md.delta, b);
    auto cls = t2_class_normal_form(md, q);
    ASSERT_TRUE(cls.is_zero());
    ASSERT_TRUE(cls.preimage.has_value());
    QVec pre(cls.preimage->begin(), cls.preimage->begin() + md.ambient());
    QVec rebuilt = mat_vec(md.delta, pre);
    for (std::size_t i = 0; i < md.D.dim(); ++i) rebuilt = rebuilt + (*cls.preimage)[md.ambient() + i] * md.D.basis()[i];
    EXPECT_EQ(rebuilt, q);
  }
}

TEST(T2Class, HexagonFirstEdgeIsNonzero) {
  Cone c = builtin_cone("hexagon");
  auto md = mrstar_model(c, 2);
  QVec q = zero_vec(md.ambient());
  for (int i = 0; i < 3; ++i) q[i] = c.edge(0)[i];
  auto cls = t2_class_normal_form(md, q);
  EXPECT_FALSE(cls.is_zero());
  EXPECT_FALSE(cls.preimage.has_value());
}

TEST(T2Class, SquareSquaresAreZero) {
  Cone c = builtin_cone("square");
  auto md = mrstar_model(c, 2);
  auto v = v_space(c);
  RationalSampler rs(35);
  for (int trial = 0; trial < 10; ++trial) {
    QVec t = rs.in(v.V);
    QVec q = zero_vec(md.ambient());
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 3; ++i) q[3 * j + i] = t[j] * t[j] * c.edge(j)[i];
    EXPECT_TRUE(t2_class_normal_form(md, q).is_zero());
  }
}

TEST(T2Class, NonCocycleRejected) {
  Cone c = builtin_cone("square");
  auto md = mrstar_model(c, 2);
  QVec q = zero_vec(md.ambient());
  q[0] = 1;
  EXPECT_THROW(t2_class_normal_form(md, q), DomainError);
}

TEST(Support, Examples) {
  Cone c = builtin_cone("p123");
  MVector R1 = special_degree(c, SpecialDegree{2, 1, 2});
  MVector R2 = special_degree(c, SpecialDegree{0, 1, 2});
  EXPECT_TRUE(t2_vanishing_by_support(c, R1));
  MVector sum = R1 + R2;
  EXPECT_EQ(pair(c.rays[0], sum), 4);
  EXPECT_EQ(pair(c.rays[1], sum), 1);
  EXPECT_EQ(pair(c.rays[2], sum), 2);
  EXPECT_FALSE(t2_vanishing_by_support(c, sum));
  EXPECT_TRUE(t2_vanishing_by_support(c, MVector{0, 0, 0}));
}

TEST(Support, ImpliesVanishingT2) {
  RationalSampler rs(36);
  for (const auto& name : kPolygons) {
    Cone c = builtin_cone(name);
    int hits = 0;
    for (int trial = 0; trial < 30 && hits < 5; ++trial) {
      MVector R{rs.integer(-3, 3), rs.integer(-3, 3), rs.integer(0, 3)};
      if (!t2_vanishing_by_support(c, R)) continue;
      ++hits;
      EXPECT_EQ(span_complex_cohomology(c, R).t[2], 0u) << name << " " << R.str();
    }
  }
}
