#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/cone.hpp"
#include "toricdef/oracle.hpp"

namespace toricdef {

enum class SpanMethod { ClosedForm, Bounded, WindowEnumerated };

inline std::string to_string(SpanMethod m) {
  switch (m) {
    case SpanMethod::ClosedForm: return "closed-form";
    case SpanMethod::Bounded: return "bounded-enumeration";
    case SpanMethod::WindowEnumerated: return "window-enumerated";
  }
  return "?";
}

struct SpanResult {
  Face face;
  RatSubspace span;
  SpanMethod method = SpanMethod::ClosedForm;
  long certified_height = 0;  // for enumerated spans
};

struct SpanOptions {
  long max_height = 48;
  bool allow_closed_form = true;
};

inline QVec to_q(const NVector& a) { return a.to_q(); }

// Multiple m with R = m R*, if any.
inline std::optional<long> rstar_multiple(const Cone& c, const MVector& R) {
  if (!c.rstar) return std::nullopt;
  const MVector& rs = *c.rstar;
  for (int i = 0; i < rs.n; ++i) {
    if (rs[i] == 0) continue;
    if (R[i] % rs[i] != 0) return std::nullopt;
    long m = R[i] / rs[i];
    if (R == m * rs) return m;
    return std::nullopt;
  }
  return std::nullopt;
}

inline RatSubspace span_of_points(const std::vector<MVector>& pts, int rank) {
  QMat rows;
  for (const auto& p : pts) rows.push_back(p.to_q());
  return RatSubspace::span(rows, rank);
}

inline SpanResult ray_span(const Cone& c, const MVector& R, int j) {
  if (!c.rstar) throw DomainError("ray_span trichotomy needs a Gorenstein cone");
  SpanResult s;
  s.face = Face{{j}};
  long p = pair(c.rays[j], R);
  if (p <= 0)
    s.span = RatSubspace(c.rank);
  else if (p == 1)
    s.span = kernel_basis({c.rays[j].to_q()}, c.rank);
  else
    s.span = RatSubspace::full(c.rank);
  return s;
}

// Points of K^R_tau inside a window, for an explicit list of points.
inline std::vector<MVector> k_points(const Cone& c, const MVector& R, const Face& tau, const Window& w) {
  std::vector<MVector> out;
  for (const auto& p : w.points())
    if (in_k_set(c, R, tau, p)) out.push_back(p);
  return out;
}

inline SpanResult face_span(const Cone& c, const MVector& R, const Face& tau, const SpanOptions& opt = {}) {
  SpanResult s;
  s.face = tau;
  if (tau.dim() == 0) {
    s.span = RatSubspace::full(c.rank);
    return s;
  }
  if (tau.dim() == 1 && c.rstar && opt.allow_closed_form) return ray_span(c, R, tau.rays[0]);
  auto m = rstar_multiple(c, R);
  if (opt.allow_closed_form && c.over_polygon && tau.dim() == 2 && m && *m >= 2) {
    int j = tau.rays[0];
    if (c.edge_length(j) >= *m)
      s.span = kernel_basis({c.edge(j).to_q()}, c.rank);
    else
      s.span = RatSubspace::full(c.rank);
    return s;
  }
  if (tau.dim() == c.rank) {
    // K^R_sigma is bounded: <h, lambda> <= sum_j (<a_j,R> - 1) for h = sum of rays
    long bound = 0;
    NVector h = NVector::zero(c.rank);
    for (int j = 0; j < c.size(); ++j) {
      long p = pair(c.rays[j], R);
      if (p <= 0) {
        s.span = RatSubspace(c.rank);
        s.method = SpanMethod::Bounded;
        return s;
      }
      bound += p - 1;
      h += c.rays[j];
    }
    long g = lattice_length(h);
    Window w(c, bound / g);
    s.span = span_of_points(k_points(c, R, tau, w), c.rank);
    s.method = SpanMethod::Bounded;
    s.certified_height = bound / g;
    return s;
  }
  long maxpair = 0;
  for (const auto& a : c.rays) maxpair = std::max(maxpair, std::labs(pair(a, R)));
  std::optional<RatSubspace> prev;
  for (long H = 4; H <= opt.max_height; H += 2) {
    Window w(c, H);
    RatSubspace cur = span_of_points(k_points(c, R, tau, w), c.rank);
    bool certified = cur.dim() == static_cast<std::size_t>(c.rank) ||
                     (prev && *prev == cur && H > 2 * maxpair);
    if (certified) {
      s.span = cur;
      s.method = SpanMethod::WindowEnumerated;
      s.certified_height = H;
      return s;
    }
    prev = cur;
  }
  throw UncertifiedError("span of K-set for face " + tau.name() + " at degree " + R.str() +
                         " not stabilized below height " + std::to_string(opt.max_height));
}

// ---------------------------------------------------------------------------
// The complex (span K^R_tau)^* over faces of dimension 0..rank with
// restriction maps and orientation signs.

struct DegreeComplex {
  MVector R;
  int rank = 0;
  std::vector<std::vector<SpanResult>> spans;  // spans[p][f]: faces of dimension p
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> dims;  // dim C^p
  std::vector<QMat> maps;         // maps[p]: C^p -> C^{p+1}, dims[p+1] x dims[p]

  std::size_t positions() const { return dims.size(); }
  const QMat& map(int p) const { return maps.at(p); }

  QVec apply(int p, const QVec& v) const {
    if (dims[p + 1] == 0) return {};
    return mat_vec(maps[p], v);
  }

  // Component of a cochain at position p for face index f.
  QVec component(int p, std::size_t f, const QVec& v) const {
    auto b = v.begin() + offsets[p][f];
    return QVec(b, b + spans[p][f].span.dim());
  }
};

// Restriction of functionals from span(big) to span(small), in echelon
// coordinates: row i = coordinates of small basis vector i in the big basis.
inline QMat restriction_matrix(const RatSubspace& big, const RatSubspace& small) {
  QMat m;
  for (const auto& v : small.basis()) m.push_back(big.coords(v));
  return m;
}

inline DegreeComplex build_degree_complex(const Cone& c, const MVector& R, const SpanOptions& opt = {}) {
  DegreeComplex dc;
  dc.R = R;
  dc.rank = c.rank;
  for (int p = 0; p <= c.rank; ++p) {
    std::vector<SpanResult> row;
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (const auto& f : c.faces(p)) {
      row.push_back(face_span(c, R, f, opt));
      off.push_back(total);
      total += row.back().span.dim();
    }
    dc.spans.push_back(std::move(row));
    dc.offsets.push_back(std::move(off));
    dc.dims.push_back(total);
  }
  for (int p = 0; p < c.rank; ++p) {
    QMat m(dc.dims[p + 1], zero_vec(dc.dims[p]));
    for (std::size_t g = 0; g < dc.spans[p + 1].size(); ++g) {
      const auto& up = dc.spans[p + 1][g];
      for (std::size_t f = 0; f < dc.spans[p].size(); ++f) {
        const auto& lo = dc.spans[p][f];
        bool incident = true;
        for (int r : lo.face.rays)
          if (!up.face.contains(r)) incident = false;
        if (!incident) continue;
        int sign = incidence_sign(lo.face, up.face);
        QMat block = restriction_matrix(lo.span, up.span);
        for (std::size_t i = 0; i < block.size(); ++i)
          for (std::size_t k = 0; k < block[i].size(); ++k)
            m[dc.offsets[p + 1][g] + i][dc.offsets[p][f] + k] += sign * block[i][k];
      }
    }
    dc.maps.push_back(std::move(m));
  }
  return dc;
}

inline RatSubspace kernel_at(const DegreeComplex& dc, int p) {
  if (p >= static_cast<int>(dc.maps.size())) return RatSubspace::full(dc.dims[p]);
  return kernel_basis(dc.maps[p], dc.dims[p]);
}

inline RatSubspace image_into(const DegreeComplex& dc, int p) {
  if (p == 0) return RatSubspace(dc.dims[0]);
  return image_basis(dc.maps[p - 1], dc.dims[p - 1]);
}

struct SpanCohomology {
  DegreeComplex complex;
  std::vector<std::size_t> t;           // t[k] = dim H^k, k = 0..2
  std::vector<QMat> representatives;    // basis of a complement of the image in the kernel
};

inline SpanCohomology span_complex_cohomology(const Cone& c, const MVector& R, const SpanOptions& opt = {}) {
  if (!c.rstar) throw DomainError("span complex cohomology needs a Gorenstein cone");
  SpanCohomology out{build_degree_complex(c, R, opt), {}, {}};
  for (int k = 0; k <= 2; ++k) {
    if (k >= static_cast<int>(out.complex.dims.size())) {
      out.t.push_back(0);
      out.representatives.push_back({});
      continue;
    }
    RatSubspace ker = kernel_at(out.complex, k);
    RatSubspace im = image_into(out.complex, k);
    QMat residues;
    for (const auto& v : ker.basis()) residues.push_back(im.reduce(v));
    auto e = rref(residues, out.complex.dims[k]);
    out.t.push_back(ker.dim() - im.dim());
    out.representatives.push_back(e.rows);
  }
  return out;
}

struct ClassNormalForm {
  QuotientCoords residue;
  std::optional<QVec> preimage;  // present iff the class is zero
  bool is_zero() const { return residue.is_zero(); }
};

// Class of a cocycle v at position k modulo the image of the previous map.
inline ClassNormalForm class_normal_form(const DegreeComplex& dc, int k, const QVec& v) {
  if (v.size() != dc.dims[k]) throw DimensionError("cochain of wrong length");
  if (k + 1 < static_cast<int>(dc.dims.size()) && !is_zero(dc.apply(k, v)))
    throw DomainError("not a cocycle");
  ClassNormalForm out;
  out.residue = quotient_coords(v, image_into(dc, k));
  if (out.residue.is_zero()) {
    if (k == 0)
      out.preimage = QVec{};
    else
      out.preimage = solve(dc.maps[k - 1], v, dc.dims[k - 1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit model for degree -m R* on a cone over a polygon:
// 0 -> N -> N^N -> (+)_j N / delta_j d_j -> (span K_sigma)^*.

struct MRStarModel {
  long m = 2;
  int N = 0;
  int rank = 3;
  std::vector<int> delta_bits;
  QMat psi;          // 3N x 3
  QMat delta;        // 3N x 3N, (b_j - b_{j+1}) in component j
  RatSubspace D;     // span of delta_j d_j placed in component j
  RatSubspace k_sigma;  // span of K^{mR*}_sigma in M
  QMat eta;          // rows: q -> sum_j q_j evaluated on a basis of span K_sigma
  RatSubspace modulus;  // im delta + D
  RatSubspace ker_eta;

  std::size_t ambient() const { return static_cast<std::size_t>(rank) * N; }
  std::size_t t2_dim() const { return ker_eta.dim() - modulus.dim(); }

  QVec summation(const QVec& q) const {
    QVec s = zero_vec(rank);
    for (int j = 0; j < N; ++j)
      for (int i = 0; i < rank; ++i) s[i] += q[rank * j + i];
    return s;
  }
};

inline MRStarModel mrstar_model(const Cone& c, long m) {
  if (!c.over_polygon || !c.rstar) throw DomainError("mrstar_model needs a Gorenstein cone over a polygon");
  if (m < 2) throw DomainError("mrstar_model needs m >= 2");
  MRStarModel md;
  md.m = m;
  md.N = c.size();
  md.rank = c.rank;
  const int r = c.rank, N = md.N;
  const std::size_t n = static_cast<std::size_t>(r) * N;
  md.psi.assign(n, zero_vec(r));
  md.delta.assign(n, zero_vec(n));
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < r; ++i) {
      md.psi[r * j + i][i] = 1;
      md.delta[r * j + i][r * j + i] += 1;
      md.delta[r * j + i][r * c.next(j) + i] -= 1;
    }
  QMat dcols;
  for (int j = 0; j < N; ++j) {
    md.delta_bits.push_back(c.edge_length(j) >= m ? 1 : 0);
    if (!md.delta_bits.back()) continue;
    QVec v = zero_vec(n);
    for (int i = 0; i < r; ++i) v[r * j + i] = c.edge(j)[i];
    dcols.push_back(v);
  }
  md.D = RatSubspace::span(dcols, n);
  md.k_sigma = face_span(c, m * *c.rstar, c.full_face()).span;
  for (const auto& u : md.k_sigma.basis()) {
    QVec row = zero_vec(n);
    for (int j = 0; j < N; ++j)
      for (int i = 0; i < r; ++i) row[r * j + i] = u[i];
    md.eta.push_back(row);
  }
  md.modulus = image_basis(md.delta, n) + md.D;
  md.ker_eta = md.eta.empty() ? RatSubspace::full(n) : kernel_basis(md.eta, n);
  return md;
}

struct T2Class {
  QuotientCoords residue;
  std::optional<QVec> preimage;  // b in N^N and coefficients c_j with q = delta(b) + sum c_j delta_j d_j
  bool is_zero() const { return residue.is_zero(); }
  friend bool operator==(const T2Class& a, const T2Class& b) { return a.residue == b.residue; }
};

inline T2Class t2_class_normal_form(const MRStarModel& md, const QVec& q) {
  if (q.size() != md.ambient()) throw DimensionError("T2 cochain of wrong length");
  if (!md.eta.empty() && !is_zero(mat_vec(md.eta, q))) throw DomainError("not a cocycle: eta(q) != 0");
  T2Class t;
  t.residue = quotient_coords(q, md.modulus);
  if (t.residue.is_zero()) {
    // columns: delta, then the D generators
    const std::size_t n = md.ambient();
    QMat a = md.delta;
    for (const auto& d : md.D.basis())
      for (std::size_t i = 0; i < n; ++i) a[i].push_back(d[i]);
    t.preimage = solve(a, q, n + md.D.dim());
    if (!t.preimage) throw IdentityViolation("zero residue without a preimage");
  }
  return t;
}

inline bool t2_vanishing_by_support(const Cone& c, const MVector& R) {
  int positive = 0;
  for (const auto& a : c.rays)
    if (pair(a, R) > 0) ++positive;
  return positive <= 2;
}

}  // namespace toricdef
