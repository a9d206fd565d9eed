#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricdef/lattice.hpp"

namespace toricdef {

struct Polytope2 {
  std::vector<std::array<long, 2>> vertices;  // counterclockwise
};

// A face of the cone, given by the indices of its rays. Two-dimensional
// faces keep the cyclic order (j, j+1), which fixes the orientation signs.
struct Face {
  std::vector<int> rays;
  int dim() const { return static_cast<int>(rays.size()); }
  bool contains(int j) const { return std::find(rays.begin(), rays.end(), j) != rays.end(); }
  std::string name() const {
    if (rays.empty()) return "0";
    std::string s = "{";
    for (std::size_t i = 0; i < rays.size(); ++i) s += (i ? "," : "") + std::to_string(rays[i] + 1);
    return s + "}";
  }
  friend bool operator==(const Face&, const Face&) = default;
};

// Sign of the restriction from face tau into the face tau_up one dimension
// higher: ray j enters (j, j+1) with +1 and (j-1, j) with -1; every other
// incidence carries +1.
inline int incidence_sign(const Face& tau, const Face& tau_up) {
  if (tau.dim() == 1 && tau_up.dim() == 2) return tau.rays[0] == tau_up.rays[0] ? 1 : -1;
  return 1;
}

class Cone {
 public:
  int rank = 0;
  std::vector<NVector> rays;  // primitive, cyclically ordered in rank 3
  std::vector<MVector> dual;  // dual[j] vanishes on rays j and j+1 (rank 3); on ray j (rank 2)
  std::optional<MVector> rstar;
  bool over_polygon = false;

  int size() const { return static_cast<int>(rays.size()); }
  int next(int j) const { return (j + 1) % size(); }
  int prev(int j) const { return (j + size() - 1) % size(); }

  bool in_lambda(const MVector& r) const {
    for (const auto& a : rays)
      if (pair(a, r) < 0) return false;
    return true;
  }
  // r >= d in the order of Lambda, i.e. r lies in d + Lambda.
  bool geq(const MVector& r, const MVector& d) const { return in_lambda(r - d); }

  NVector edge(int j) const { return rays[next(j)] - rays[j]; }
  long edge_length(int j) const { return lattice_length(edge(j)); }

  std::vector<Face> faces(int dim) const {
    std::vector<Face> out;
    if (dim == 0) return {Face{}};
    if (dim == 1) {
      for (int j = 0; j < size(); ++j) out.push_back(Face{{j}});
      return out;
    }
    if (dim == 2 && rank == 2) return {Face{{0, 1}}};
    if (dim == 2) {
      for (int j = 0; j < size(); ++j) out.push_back(Face{{j, next(j)}});
      return out;
    }
    if (dim == 3 && rank == 3) {
      Face all;
      for (int j = 0; j < size(); ++j) all.rays.push_back(j);
      return {all};
    }
    return out;
  }
  Face full_face() const { return faces(rank).front(); }

  // Primitive interior point of sigma: positive on Lambda minus the origin.
  NVector interior_point() const {
    NVector h = NVector::zero(rank);
    for (const auto& a : rays) h += a;
    return primitive(h);
  }
};

inline NVector perp2(const MVector& m) { return NVector{-m[1], m[0]}; }

inline MVector perp2(const NVector& a) { return MVector{-a[1], a[0]}; }

// Dual generators of a pointed rank-2 cone: [perp(a1), perp(a2)], each
// oriented to be nonnegative on the other ray.
inline std::vector<MVector> dual_cone_2d(const NVector& a1, const NVector& a2) {
  if (a1.n != 2 || a2.n != 2) throw DimensionError("dual_cone_2d needs rank 2 rays");
  if (a1[0] * a2[1] - a1[1] * a2[0] == 0) throw DomainError("degenerate cone: parallel rays");
  MVector g1 = primitive(perp2(a1)), g2 = primitive(perp2(a2));
  if (pair(a2, g1) < 0) g1 = -g1;
  if (pair(a1, g2) < 0) g2 = -g2;
  return {g1, g2};
}

inline std::vector<NVector> dual_cone_2d(const MVector& s1, const MVector& s2) {
  auto g = dual_cone_2d(retag<NVector>(s1), retag<NVector>(s2));
  return {retag<NVector>(g[0]), retag<NVector>(g[1])};
}

inline std::optional<MVector> gorenstein_degree(const std::vector<NVector>& rays) {
  if (rays.empty()) return std::nullopt;
  int r = rays[0].n;
  QMat a;
  for (const auto& v : rays) a.push_back(v.to_q());
  if (rank(a, r) < static_cast<std::size_t>(r)) return std::nullopt;
  auto x = solve(a, QVec(rays.size(), Q(1)), r);
  if (!x) return std::nullopt;
  MVector out = MVector::zero(r);
  for (int i = 0; i < r; ++i) {
    if ((*x)[i].get_den() != 1) return std::nullopt;
    out[i] = (*x)[i].get_num().get_si();
  }
  return out;
}

inline Cone cone_2d(const NVector& a1, const NVector& a2) {
  if (lattice_length(a1) != 1 || lattice_length(a2) != 1) throw InputError("rays must be primitive");
  Cone c;
  c.rank = 2;
  c.rays = {a1, a2};
  c.dual = dual_cone_2d(a1, a2);
  c.rstar = gorenstein_degree(c.rays);
  return c;
}

inline Cone cone_over_polytope(const Polytope2& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  if (n < 3) throw InputError("polytope needs at least three vertices");
  // strictly convex and counterclockwise: every other vertex lies strictly
  // to the left of every edge
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    if (a == b) throw InputError("repeated polytope vertex");
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == (i + 1) % n) continue;
      long side = (b[0] - a[0]) * (v[k][1] - a[1]) - (b[1] - a[1]) * (v[k][0] - a[0]);
      if (side <= 0) throw InputError("polytope vertices are not strictly convex and counterclockwise");
    }
  }
  Cone c;
  c.rank = 3;
  c.over_polygon = true;
  for (const auto& x : v) c.rays.push_back(NVector{x[0], x[1], 1});
  for (int j = 0; j < c.size(); ++j) {
    MVector s = primitive(cross<MVector>(c.rays[j], c.rays[c.next(j)]));
    for (const auto& a : c.rays)
      if (pair(a, s) < 0) {
        s = -s;
        break;
      }
    c.dual.push_back(s);
  }
  for (int j = 0; j < c.size(); ++j)
    for (const auto& a : c.rays)
      if (pair(a, c.dual[j]) < 0) throw InputError("polytope is not convex");
  c.rstar = gorenstein_degree(c.rays);
  return c;
}

// Rank 3 cone given by cyclically ordered rays in a common height-one plane.
inline Cone cone_over_polytope(const std::vector<NVector>& rays) {
  auto rs = gorenstein_degree(rays);
  if (!rs) throw InputError("rays do not lie on a common lattice hyperplane at height one");
  if (!(*rs == MVector{0, 0, 1})) throw InputError("rank 3 rays must have last coordinate 1");
  Polytope2 p;
  for (const auto& a : rays) p.vertices.push_back({a[0], a[1]});
  return cone_over_polytope(p);
}

inline Cone an_surface_cone(int n) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  auto rays = dual_cone_2d(MVector{0, 1}, MVector{n + 1, n});
  return cone_2d(rays[0], rays[1]);
}

inline std::vector<MVector> hilbert_basis_2d(const Cone& c) {
  if (c.rank != 2) throw DimensionError("hilbert_basis_2d needs a rank 2 cone");
  const MVector& g1 = c.dual[0];
  const MVector& g2 = c.dual[1];
  long det = g1[0] * g2[1] - g1[1] * g2[0];
  long ad = std::labs(det);
  long lo0 = std::min({0L, g1[0], g2[0], g1[0] + g2[0]}), hi0 = std::max({0L, g1[0], g2[0], g1[0] + g2[0]});
  long lo1 = std::min({0L, g1[1], g2[1], g1[1] + g2[1]}), hi1 = std::max({0L, g1[1], g2[1], g1[1] + g2[1]});
  std::vector<MVector> cand{g1, g2};
  for (long x = lo0; x <= hi0; ++x)
    for (long y = lo1; y <= hi1; ++y) {
      // lambda = u g1 + w g2 with u = det(lambda, g2)/det, w = det(g1, lambda)/det
      long u = (x * g2[1] - y * g2[0]) * (det > 0 ? 1 : -1);
      long w = (g1[0] * y - g1[1] * x) * (det > 0 ? 1 : -1);
      if (u >= 0 && u < ad && w >= 0 && w < ad && (x != 0 || y != 0)) cand.push_back(MVector{x, y});
    }
  std::vector<MVector> box;
  for (long x = lo0; x <= hi0; ++x)
    for (long y = lo1; y <= hi1; ++y) {
      MVector m{x, y};
      if (!m.is_zero() && c.in_lambda(m)) box.push_back(m);
    }
  std::set<MVector> out;
  for (const auto& l : cand) {
    bool reducible = false;
    for (const auto& m : box)
      if (!(m == l) && c.in_lambda(l - m) && !(l - m).is_zero()) {
        reducible = true;
        break;
      }
    if (!reducible) out.insert(l);
  }
  return {out.begin(), out.end()};
}

// K^R_tau = { lambda in Lambda : <a, lambda> < <a, R> for every ray a of tau }.
inline bool k_set_member(const Cone& c, const MVector& R, const Face& tau, const MVector& l) {
  if (!c.in_lambda(l)) throw DomainError("point " + l.str() + " is not in the semigroup");
  for (int j : tau.rays)
    if (pair(c.rays[j], l) >= pair(c.rays[j], R)) return false;
  return true;
}

// Same predicate without the domain check, for hot loops over known points.
inline bool in_k_set(const Cone& c, const MVector& R, const Face& tau, const MVector& l) {
  for (int j : tau.rays)
    if (pair(c.rays[j], l) >= pair(c.rays[j], R)) return false;
  return true;
}

inline bool in_k_ray(const Cone& c, const MVector& R, int j, const MVector& l) {
  return pair(c.rays[j], l) < pair(c.rays[j], R);
}

}  // namespace toricdef
