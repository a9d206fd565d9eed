#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricdef/degree_complex.hpp"
#include "toricdef/oracle.hpp"

namespace toricdef {

// ---------------------------------------------------------------------------
// V(P) = { t : sum_j t_j d_j = 0 }

struct VSpace {
  QMat relations;  // 2 x N, columns are the planar edge vectors
  RatSubspace V;
  QVec ones;
  int N = 0;

  bool contains(const QVec& t) const { return t.size() == static_cast<std::size_t>(N) && V.contains(t); }
};

inline VSpace v_space(const Cone& c) {
  if (!c.over_polygon) throw DomainError("v_space needs a cone over a polygon");
  VSpace v;
  v.N = c.size();
  v.relations.assign(2, zero_vec(v.N));
  for (int j = 0; j < v.N; ++j)
    for (int i = 0; i < 2; ++i) v.relations[i][j] = c.edge(j)[i];
  v.V = kernel_basis(v.relations, v.N);
  v.ones = QVec(v.N, Q(1));
  return v;
}

// ---------------------------------------------------------------------------
// Additive seeds: per-ray linear forms b_j on M representing a T^1 class of
// degree R (the function is <b_j, .> on K^R_{a_j}).

struct AdditiveSeed {
  MVector R;
  std::vector<QVec> b;
};

inline AdditiveSeed seed_from_t(const Cone& c, const VSpace& v, const QVec& t) {
  if (!c.rstar) throw DomainError("seed_from_t needs a Gorenstein cone");
  if (!v.contains(t)) throw DomainError("deformation parameter is not in V");
  AdditiveSeed s;
  s.R = *c.rstar;
  s.b.push_back(zero_vec(c.rank));
  for (int j = 0; j + 1 < c.size(); ++j) s.b.push_back(s.b.back() + t[j] * c.edge(j).to_q());
  return s;
}

// Extend a functional given in echelon coordinates of U to all of M by zero
// on the coordinate vectors of the non-pivot columns.
inline QVec extend_by_pivots(const RatSubspace& U, const QVec& values) {
  QVec b = zero_vec(U.ambient());
  for (std::size_t i = 0; i < U.dim(); ++i) b[U.pivots()[i]] = values[i];
  return b;
}

// Seed from a cocycle of the span complex at position 1 (one functional per ray).
inline AdditiveSeed seed_from_cocycle(const DegreeComplex& dc, const QVec& v) {
  AdditiveSeed s;
  s.R = dc.R;
  for (std::size_t j = 0; j < dc.spans[1].size(); ++j)
    s.b.push_back(extend_by_pivots(dc.spans[1][j].span, dc.component(1, j, v)));
  return s;
}

// Evaluations of xi^0, xi_j and xi^0_j for a seed of degree R, relative to
// the product degree RS = R + S.
class SeedEval {
 public:
  SeedEval(const Cone& c, AdditiveSeed seed, MVector RS) : c_(&c), s_(std::move(seed)), RS_(std::move(RS)) {}

  const AdditiveSeed& seed() const { return s_; }
  const MVector& degree() const { return s_.R; }

  // The class representative on Lambda \ Lambda(R), extended by zero.
  Q zero_ext(const MVector& l) const {
    if (!c_->in_lambda(l) || c_->geq(l, s_.R)) return 0;
    for (int j = 0; j < c_->size(); ++j)
      if (in_k_ray(*c_, s_.R, j, l)) return pair(s_.b[j], l);
    throw IdentityViolation("point " + l.str() + " outside every K-set");
  }
  // xi_j: the extension tilde-xi_j on K^{R+S}_{a_j}, zero elsewhere.
  Q on_ray(int j, const MVector& l) const {
    if (!c_->in_lambda(l) || !in_k_ray(*c_, RS_, j, l)) return 0;
    return pair(s_.b[j], l);
  }
  // xi^0_j: xi_j on K^{R+S}_{a_j} \ Lambda(R).
  Q zero_ext_on_ray(int j, const MVector& l) const {
    if (!c_->in_lambda(l) || !in_k_ray(*c_, RS_, j, l) || c_->geq(l, s_.R)) return 0;
    return pair(s_.b[j], l);
  }

 private:
  const Cone* c_;
  AdditiveSeed s_;
  MVector RS_;
};

// ---------------------------------------------------------------------------
// The pipeline: C, h_j, C^0_j, F_j, G_j and delta G.

struct FaceFunctional {
  Face face;
  RatSubspace span;  // span of K^{R+S}_tau
  QVec values;       // functional in echelon coordinates of span
  std::size_t points = 0;
};

struct PipelineTrace {
  MVector R, S;
  long height = 0;
  std::vector<std::vector<MVector>> k_sets;        // K^{R+S}_{a_j} cap W
  std::vector<std::map<MVector, Q>> F;             // solved F_j on K_j cap W
  std::vector<std::size_t> free_variables;         // per ray, must equal dim span K_j
  std::vector<std::vector<MVector>> exceptional1;  // P^j_1 cap W (R = S only)
  std::vector<std::vector<MVector>> exceptional2;  // P^j_2 cap W (R = S only)
  std::vector<FaceFunctional> delta_g;             // G_j - G_{j+1} on the 2-faces
  std::size_t equations = 0;
};

class Pipeline {
 public:
  Pipeline(const Cone& c, AdditiveSeed xi, AdditiveSeed mu, long H, const SpanOptions& opt = {})
      : c_(c),
        R_(xi.R),
        S_(mu.R),
        RS_(xi.R + mu.R),
        xi_(c_, xi, xi.R + mu.R),
        mu_(c_, mu, xi.R + mu.R),
        w_(c_, H),
        opt_(opt) {
    if (!c_.over_polygon) throw DomainError("pipeline implemented for cones over polygons");
  }

  const Cone& cone() const { return c_; }
  const Window& window() const { return w_; }
  const SeedEval& xi() const { return xi_; }
  const SeedEval& mu() const { return mu_; }

  Q dxi0(const MVector& x, const MVector& y) const { return xi_.zero_ext(x) + xi_.zero_ext(y) - xi_.zero_ext(x + y); }
  Q dmu0(const MVector& x, const MVector& y) const { return mu_.zero_ext(x) + mu_.zero_ext(y) - mu_.zero_ext(x + y); }

  Q C(const MVector& x, const MVector& y) const {
    MVector s = x + y;
    return xi_.zero_ext(x) * mu_.zero_ext(y) + xi_.zero_ext(y) * mu_.zero_ext(x) -
           dxi0(x, y) * mu_.zero_ext(s - R_) - dmu0(x, y) * xi_.zero_ext(s - S_);
  }

  Q C0(int j, const MVector& x, const MVector& y) const {
    MVector s = x + y;
    auto X = [&](const MVector& l) { return xi_.zero_ext_on_ray(j, l); };
    auto U = [&](const MVector& l) { return mu_.zero_ext_on_ray(j, l); };
    Q dx = X(x) + X(y) - X(s), du = U(x) + U(y) - U(s);
    return X(x) * U(y) + X(y) * U(x) - dx * U(s - R_) - du * X(s - S_);
  }

  Q h(int j, const MVector& l) const {
    return -xi_.on_ray(j, l) * mu_.on_ray(j, l) + xi_.on_ray(j, l - S_) * mu_.on_ray(j, l) +
           mu_.on_ray(j, l - R_) * xi_.on_ray(j, l);
  }

  Q dh(int j, const MVector& x, const MVector& y) const { return h(j, x) + h(j, y) - h(j, x + y); }

  bool in_kj(int j, const MVector& l) const { return c_.in_lambda(l) && in_k_ray(c_, RS_, j, l); }

  // Solve dF_j = C_j - dh_j over K_j cap W, fit delta G on the 2-faces.
  const PipelineTrace& run() {
    if (ran_) return trace_;
    ran_ = true;
    trace_.R = R_;
    trace_.S = S_;
    trace_.height = w_.bound();
    const int N = c_.size();
    for (int j = 0; j < N; ++j) solve_ray(j);
    if (R_ == S_) collect_exceptional();
    for (const auto& tau : c_.faces(2)) fit_face(tau);
    return trace_;
  }

  Q F(int j, const MVector& l) const {
    auto it = trace_.F[j].find(l);
    if (it == trace_.F[j].end()) throw UncertifiedError("F_j requested outside the window");
    return it->second;
  }
  Q G(int j, const MVector& l) const { return h(j, l) + F(j, l); }

  // The cup class in the span complex of degree R+S. The zig-zag through the
  // total complex (differential delta + (-1)^p d) yields -delta G.
  ClassNormalForm span_class(const DegreeComplex& dc) {
    run();
    return class_normal_form(dc, 2, class_vector(dc));
  }

  QVec class_vector(const DegreeComplex& dc) {
    run();
    QVec v = zero_vec(dc.dims[2]);
    for (std::size_t f = 0; f < trace_.delta_g.size(); ++f) {
      const auto& fg = trace_.delta_g[f];
      const auto& target = dc.spans[2][f].span;
      if (!(target == fg.span)) throw IdentityViolation("span mismatch on face " + fg.face.name());
      for (std::size_t i = 0; i < fg.values.size(); ++i) v[dc.offsets[2][f] + i] = -fg.values[i];
    }
    return v;
  }

  // Components q_j in N for the m = 2 model (R = S = R*).
  QVec mrstar_vector() {
    run();
    const int r = c_.rank;
    QVec q = zero_vec(static_cast<std::size_t>(r) * c_.size());
    for (std::size_t f = 0; f < trace_.delta_g.size(); ++f) {
      QVec lift = extend_by_pivots(trace_.delta_g[f].span, trace_.delta_g[f].values);
      for (int i = 0; i < r; ++i) q[r * f + i] = -lift[i];
    }
    return q;
  }

  const PipelineTrace& trace() const { return trace_; }

 private:
  void solve_ray(int j) {
    std::vector<MVector> pts;
    std::vector<std::size_t> var(w_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (in_kj(j, w_[i])) {
        var[i] = pts.size();
        pts.push_back(w_[i]);
      }
    SparseSystem sys(pts.size());
    std::size_t eqs = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a; b < pts.size(); ++b) {
        auto sidx = w_.index(pts[a] + pts[b]);
        if (!sidx || var[*sidx] == SIZE_MAX) continue;
        Q rhs = C(pts[a], pts[b]) - dh(j, pts[a], pts[b]);
        SparseSystem::Row row{{a, Q(1)}, {b, Q(1)}, {var[*sidx], Q(-1)}};
        ++eqs;
        if (!sys.add(std::move(row), rhs))
          throw IdentityViolation("dF_j = C_j - dh_j has no solution on ray " + std::to_string(j + 1));
      }
    std::size_t expect = face_span(c_, RS_, Face{{j}}, opt_).span.dim();
    if (sys.free_count() != expect)
      throw UncertifiedError("window too small for ray " + std::to_string(j + 1) + ": " +
                             std::to_string(sys.free_count()) + " additive functions on K_j cap W, expected " +
                             std::to_string(expect));
    QVec x = sys.solve();
    std::map<MVector, Q> F;
    for (std::size_t i = 0; i < pts.size(); ++i) F[pts[i]] = x[i];
    trace_.k_sets.push_back(std::move(pts));
    trace_.F.push_back(std::move(F));
    trace_.free_variables.push_back(sys.free_count());
    trace_.equations += eqs;
  }

  void collect_exceptional() {
    const int N = c_.size();
    for (int j = 0; j < N; ++j) {
      std::vector<MVector> p1, p2;
      for (const auto& l : trace_.k_sets[j]) {
        if (in_k_ray(c_, R_, j, l)) continue;
        if (in_k_ray(c_, R_, c_.next(j), l)) p1.push_back(l);
        if (in_k_ray(c_, R_, c_.prev(j), l)) p2.push_back(l);
      }
      bool need1 = c_.edge_length(j) == 1, need2 = c_.edge_length(c_.prev(j)) == 1;
      if ((need1 && p1.size() < 3) || (need2 && p2.size() < 3))
        throw UncertifiedError("window holds fewer than 3 points of an exceptional line on ray " +
                               std::to_string(j + 1));
      trace_.exceptional1.push_back(std::move(p1));
      trace_.exceptional2.push_back(std::move(p2));
    }
  }

  void fit_face(const Face& tau) {
    int j = tau.rays[0], k = tau.rays[1];
    FaceFunctional fg;
    fg.face = tau;
    fg.span = face_span(c_, RS_, tau, opt_).span;
    QMat rows;
    QVec rhs;
    std::vector<MVector> pts;
    for (const auto& l : trace_.k_sets[j])
      if (in_kj(k, l)) {
        rows.push_back(fg.span.coords(l.to_q()));
        rhs.push_back(G(j, l) - G(k, l));
        pts.push_back(l);
      }
    fg.points = pts.size();
    if (span_of_points(pts, c_.rank) != fg.span)
      throw UncertifiedError("window points of K-set for face " + tau.name() + " do not span it");
    auto sol = solve(rows, rhs, fg.span.dim());
    if (!sol) throw IdentityViolation("delta G is not additive on face " + tau.name());
    fg.values = *sol;
    trace_.delta_g.push_back(std::move(fg));
  }

  Cone c_;
  MVector R_, S_, RS_;
  SeedEval xi_, mu_;
  Window w_;
  SpanOptions opt_;
  bool ran_ = false;
  PipelineTrace trace_;
};

// Cochain views of the pipeline pieces for pointwise verification.
inline Cochain pipeline_xi0(const Pipeline& p) {
  return formula_cochain(1, [&p](Args a) { return p.xi().zero_ext(a[0]); }, p.xi().degree());
}
inline Cochain pipeline_mu0(const Pipeline& p) {
  return formula_cochain(1, [&p](Args a) { return p.mu().zero_ext(a[0]); }, p.mu().degree());
}
inline Cochain pipeline_C(const Pipeline& p) {
  return formula_cochain(2, [&p](Args a) { return p.C(a[0], a[1]); });
}

// dC = [d xi^0, d mu^0] on the window; dh_j = C^0_j and dG_j = C_j on
// pairs with sum in K_j cap W.
struct PipelineIdentities {
  VerifyReport dC, dh, dG;
  bool ok() const { return dC.ok() && dh.ok() && dG.ok(); }
};

inline PipelineIdentities verify_pipeline_identities(Pipeline& p) {
  p.run();
  PipelineIdentities out;
  const Window& w = p.window();
  const Cone& c = p.cone();
  Cochain dxi = differential(pipeline_xi0(p)), dmu = differential(pipeline_mu0(p));
  out.dC = verify_pointwise(differential(pipeline_C(p)),
                            bracket(dxi, dmu, c, p.xi().degree(), p.mu().degree()), w);
  auto record = [](VerifyReport& rep, bool equal, const std::string& where) {
    ++rep.checked;
    if (equal) return;
    ++rep.violations;
    if (rep.examples.size() < 5) rep.examples.push_back(where);
  };
  for (int j = 0; j < c.size(); ++j)
    w.for_each_tuple(2, [&](const std::vector<std::size_t>& t) {
      const MVector &x = w[t[0]], &y = w[t[1]];
      MVector s = x + y;
      if (!p.in_kj(j, s)) return;
      std::string where = "ray " + std::to_string(j + 1) + " at (" + x.str() + "," + y.str() + ")";
      record(out.dh, p.dh(j, x, y) == p.C0(j, x, y), where);
      record(out.dG, p.G(j, x) + p.G(j, y) - p.G(j, s) == p.C(x, y), where);
    });
  return out;
}

// Paper's explicit correction on the exceptional sets, for R = S = R*:
// F_j(c) = xi(c) s_j + mu(c) t_j on P^j_1 and -xi(c) s_{j-1} - mu(c) t_{j-1} on P^j_2.
inline Q exceptional_correction(const Pipeline& p, const QVec& t, const QVec& s, int j, const MVector& c) {
  const Cone& cn = p.cone();
  const MVector& R = p.xi().degree();
  if (!p.in_kj(j, c) || in_k_ray(cn, R, j, c)) return 0;
  if (in_k_ray(cn, R, cn.next(j), c)) return p.xi().zero_ext(c) * s[j] + p.mu().zero_ext(c) * t[j];
  int jm = cn.prev(j);
  if (in_k_ray(cn, R, jm, c)) return -p.xi().zero_ext(c) * s[jm] - p.mu().zero_ext(c) * t[jm];
  return 0;
}

// ---------------------------------------------------------------------------
// Closed form and versal quadrics.

inline QVec cup_closed_form_vector(const Cone& c, const QVec& t, const QVec& s) {
  const int r = c.rank;
  QVec q = zero_vec(static_cast<std::size_t>(r) * c.size());
  for (int j = 0; j < c.size(); ++j)
    for (int i = 0; i < r; ++i) q[r * j + i] = s[j] * t[j] * c.edge(j)[i];
  return q;
}

inline T2Class cup_closed_form(const Cone& c, const MRStarModel& md, const VSpace& v, const QVec& t, const QVec& s) {
  if (!v.contains(t) || !v.contains(s)) throw DomainError("cup arguments must lie in V");
  return t2_class_normal_form(md, cup_closed_form_vector(c, t, s));
}

struct PipelineCup {
  T2Class cls;
  PipelineTrace trace;
};

inline PipelineCup pipeline_cup(const Cone& c, const MRStarModel& md, const VSpace& v, const QVec& t, const QVec& s,
                                long H) {
  Pipeline p(c, seed_from_t(c, v, t), seed_from_t(c, v, s), H);
  p.run();
  return {t2_class_normal_form(md, p.mrstar_vector()), p.trace()};
}

// Quadratic form sum_{i<=j} coeff(i,j) t_i t_j, stored as a symmetric matrix.
struct QuadraticForm {
  QMat m;
  Q operator()(const QVec& t) const {
    Q s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) s += m[i][j] * t[i] * t[j];
    return s;
  }
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i; j < m.size(); ++j) {
        Q c = i == j ? m[i][i] : m[i][j] + m[j][i];
        if (c == 0) continue;
        std::string mono = i == j ? "t" + std::to_string(i + 1) + "^2"
                                  : "t" + std::to_string(i + 1) + "*t" + std::to_string(j + 1);
        Q a = abs(c);
        std::string coef = a == 1 ? "" : (a.get_den() == 1 ? a.get_num().get_str() : to_string(a)) + "*";
        if (out.empty())
          out += (c < 0 ? "-" : "") + coef + mono;
        else
          out += (c < 0 ? " - " : " + ") + coef + mono;
      }
    return out.empty() ? "0" : out;
  }
};

// Equations of the quadratic part of the versal base: sum over short edges of
// t_j^2 d_j must lie in the span of the long edges. Forms vanishing
// identically on V are dropped.
inline std::vector<QuadraticForm> versal_quadratics(const Cone& c, const VSpace& v) {
  if (!c.over_polygon) throw DomainError("versal_quadratics needs a cone over a polygon");
  const int N = c.size();
  QMat long_edges;
  for (int j = 0; j < N; ++j)
    if (c.edge_length(j) > 1) long_edges.push_back({Q(c.edge(j)[0]), Q(c.edge(j)[1])});
  RatSubspace L = RatSubspace::span(long_edges, 2);
  RatSubspace ann = annihilator(L);
  // each form as a diagonal vector of coefficients of t_j^2
  QMat forms;
  for (const auto& w : ann.basis()) {
    QVec f = zero_vec(N);
    for (int j = 0; j < N; ++j)
      if (c.edge_length(j) == 1) f[j] = w[0] * c.edge(j)[0] + w[1] * c.edge(j)[1];
    forms.push_back(f);
  }
  // restrict to V: the Gram matrix B^T diag(f) B, flattened
  const auto& B = v.V.basis();
  auto restricted = [&](const QVec& f) {
    QVec flat;
    for (const auto& x : B)
      for (const auto& y : B) {
        Q s = 0;
        for (int j = 0; j < N; ++j) s += f[j] * x[j] * y[j];
        flat.push_back(s);
      }
    return flat;
  };
  // keep a maximal subset of forms independent modulo those vanishing on V
  std::vector<QuadraticForm> out;
  QMat kept;
  for (const auto& f : forms) {
    QMat trial = kept;
    trial.push_back(restricted(f));
    if (rank(trial, B.size() * B.size()) > kept.size()) {
      kept = trial;
      QuadraticForm q;
      q.m.assign(N, zero_vec(N));
      for (int j = 0; j < N; ++j) q.m[j][j] = f[j];
      out.push_back(q);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Special degrees R^{p,q}_j = q R* - p s_j, with s_j vanishing on a_j, a_{j+1}.

struct SpecialDegree {
  int j = 0;  // zero-based edge index
  long p = 1, q = 2;
  std::string str() const {
    return "(" + std::to_string(j + 1) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

inline MVector special_degree(const Cone& c, const SpecialDegree& d) {
  if (!c.over_polygon || !c.rstar) throw DomainError("special degrees need a Gorenstein cone over a polygon");
  if (d.j < 0 || d.j >= c.size()) throw DomainError("edge index out of range");
  return d.q * *c.rstar - d.p * c.dual[d.j];
}

inline bool interior_of_dual(const Cone& c, const MVector& R) {
  for (const auto& a : c.rays)
    if (pair(a, R) <= 0) return false;
  return true;
}

inline bool valid_special_degree(const Cone& c, const SpecialDegree& d) {
  if (d.q < 2 || d.q > c.edge_length(d.j)) return false;
  return !interior_of_dual(c, special_degree(c, d));
}

// s_j and s_k lie on a common 2-face of the dual cone iff they are adjacent.
inline bool share_dual_face(const Cone& c, int j, int k) {
  return j == k || c.next(j) == k || c.next(k) == j;
}

enum class SpecialVerdict { ZeroSameEdge, ZeroNoCommonFace, ZeroBySupport, ZeroClass, NonzeroClass };

inline std::string to_string(SpecialVerdict v) {
  switch (v) {
    case SpecialVerdict::ZeroSameEdge: return "certified zero (same edge)";
    case SpecialVerdict::ZeroNoCommonFace: return "certified zero (no common 2-face)";
    case SpecialVerdict::ZeroBySupport: return "certified zero (T2 vanishes by support)";
    case SpecialVerdict::ZeroClass: return "zero class";
    case SpecialVerdict::NonzeroClass: return "nonzero class";
  }
  return "?";
}

struct SpecialCupResult {
  SpecialVerdict verdict = SpecialVerdict::ZeroClass;
  MVector R1, R2;
  std::size_t t1_first = 0, t1_second = 0, t2_sum = 0;
  std::optional<ClassNormalForm> cls;
  std::optional<PipelineTrace> trace;
  bool nonzero() const { return verdict == SpecialVerdict::NonzeroClass; }
};

inline SpecialCupResult special_degree_cup(const Cone& c, const SpecialDegree& d1, const SpecialDegree& d2, long H,
                                           const SpanOptions& opt = {}) {
  if (!valid_special_degree(c, d1) || !valid_special_degree(c, d2))
    throw DomainError("special degree outside the admissible range");
  SpecialCupResult res;
  res.R1 = special_degree(c, d1);
  res.R2 = special_degree(c, d2);
  if (d1.j == d2.j) {
    res.verdict = SpecialVerdict::ZeroSameEdge;
    return res;
  }
  if (!share_dual_face(c, d1.j, d2.j)) {
    res.verdict = SpecialVerdict::ZeroNoCommonFace;
    return res;
  }
  if (t2_vanishing_by_support(c, res.R1 + res.R2)) {
    res.verdict = SpecialVerdict::ZeroBySupport;
    return res;
  }
  auto h1 = span_complex_cohomology(c, res.R1, opt);
  auto h2 = span_complex_cohomology(c, res.R2, opt);
  auto hs = span_complex_cohomology(c, res.R1 + res.R2, opt);
  res.t1_first = h1.t[1];
  res.t1_second = h2.t[1];
  res.t2_sum = hs.t[2];
  if (h1.t[1] == 0 || h2.t[1] == 0 || hs.t[2] == 0) {
    res.verdict = SpecialVerdict::ZeroClass;
    return res;
  }
  Pipeline p(c, seed_from_cocycle(h1.complex, h1.representatives[1][0]),
             seed_from_cocycle(h2.complex, h2.representatives[1][0]), H, opt);
  res.cls = p.span_class(hs.complex);
  res.trace = p.trace();
  res.verdict = res.cls->is_zero() ? SpecialVerdict::ZeroClass : SpecialVerdict::NonzeroClass;
  return res;
}

// All admissible special degrees with p up to max_p.
inline std::vector<SpecialDegree> special_degrees(const Cone& c, long max_p) {
  std::vector<SpecialDegree> out;
  for (int j = 0; j < c.size(); ++j)
    for (long q = 2; q <= c.edge_length(j); ++q)
      for (long p = 1; p <= max_p; ++p) {
        SpecialDegree d{j, p, q};
        if (valid_special_degree(c, d)) out.push_back(d);
      }
  return out;
}

}  // namespace toricdef
