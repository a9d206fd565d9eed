#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "toricdef/cup.hpp"

namespace toricdef {

// Skew biadditive functions on a rank 2 semigroup, stored as c * det.
//
// Two evaluation conventions for shifted arguments:
//  Truncated: xi(x, y) = 0 unless x, y and x + y lie in Lambda.
//  Bilinear:  the determinant form is evaluated on all of M.
enum class ShiftConvention { Truncated, Bilinear };

inline long det2(const MVector& x, const MVector& y) { return x[0] * y[1] - x[1] * y[0]; }

struct SkewBiadditive {
  Q c = 1;
  MVector R;
  ShiftConvention conv = ShiftConvention::Truncated;
  const Cone* cone = nullptr;

  Q operator()(const MVector& x, const MVector& y) const {
    if (conv == ShiftConvention::Truncated && !(cone->in_lambda(x) && cone->in_lambda(y) && cone->in_lambda(x + y)))
      return 0;
    return c * det2(x, y);
  }
  SkewBiadditive with(ShiftConvention v) const {
    SkewBiadditive s = *this;
    s.conv = v;
    return s;
  }
};

struct SkewSpace {
  std::vector<SkewBiadditive> basis;
  std::size_t constraint_pairs = 0;  // window pairs with sum in Lambda \ Lambda(R)
  std::optional<std::pair<MVector, MVector>> witness;  // pair forcing c = 0
  bool certified = false;
  std::size_t dim() const { return basis.size(); }
};

// Alternating forms vanishing on pairs with sum in Lambda \ Lambda(R). Each
// such pair with nonzero determinant forces c = 0. If none occurs in the
// window the answer is certified when every <a_j, R> <= 1: then any sum
// outside Lambda(R) has a vanishing pairing with some ray, and so do both
// summands, which makes them proportional.
inline SkewSpace skew_space(const Cone& c, const MVector& R, const Window& w) {
  if (c.rank != 2) throw DimensionError("skew_space is implemented for rank 2 cones");
  SkewSpace out;
  for (std::size_t i = 0; i < w.size() && !out.witness; ++i)
    for (std::size_t k = i + 1; k < w.size(); ++k) {
      MVector s = w[i] + w[k];
      if (c.geq(s, R)) continue;
      ++out.constraint_pairs;
      if (det2(w[i], w[k]) != 0) {
        out.witness = std::make_pair(w[i], w[k]);
        break;
      }
    }
  if (out.witness) {
    out.certified = true;
    return out;
  }
  bool shallow = true;
  for (const auto& a : c.rays)
    if (pair(a, R) > 1) shallow = false;
  out.certified = shallow;
  out.basis.push_back(SkewBiadditive{1, R, ShiftConvention::Truncated, &c});
  return out;
}

// ---------------------------------------------------------------------------
// A_n surface data: sigma^dual = <S1, S3>, S2 = R* = (1,1).

struct AnData {
  int n = 1;
  Cone cone;
  MVector S1, S2, S3;
};

inline AnData an_data(int n) {
  AnData d;
  d.n = n;
  d.cone = an_surface_cone(n);
  d.S1 = MVector{0, 1};
  d.S2 = MVector{1, 1};
  d.S3 = MVector{n + 1, n};
  return d;
}

// (dim H^2_(1)(-R), dim H^3_(2)(-R)); both are 1 exactly at R = k S2 with 2 <= k <= n+1.
inline std::pair<int, int> an_dims(int n, const MVector& R) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  if (R.n != 2) throw DimensionError("A_n degrees have rank 2");
  if (R[0] == R[1] && R[0] >= 2 && R[0] <= n + 1) return {1, 1};
  return {0, 0};
}

// Additive representative of the H^1 class of degree k S2: zero on
// K_{a1}, x - y on K_{a2}. It takes the value a at a S3.
inline AdditiveSeed mu_seed(int n, int k) {
  if (k < 2 || k > n + 1) throw DomainError("mu_k needs 2 <= k <= n+1");
  AdditiveSeed s;
  s.R = k * MVector{1, 1};
  s.b = {QVec{0, 0}, QVec{1, -1}};
  return s;
}

// ---------------------------------------------------------------------------
// B = B1 - B2 and its defects.

class BracketRepresentative {
 public:
  BracketRepresentative(const Cone& c, SkewBiadditive xi, const AdditiveSeed& mu)
      : c_(c), xi_(std::move(xi)), mu_(c_, mu, xi_.R + mu.R), R_(xi_.R), S_(mu.R) {
    xi_.cone = &c_;
  }

  const SkewBiadditive& xi() const { return xi_; }
  const MVector& R() const { return R_; }
  const MVector& S() const { return S_; }

  Q mu0(const MVector& l) const { return mu_.zero_ext(l); }
  Q dmu0(const MVector& x, const MVector& y) const { return mu0(x) + mu0(y) - mu0(x + y); }

  Q B1(const MVector& x, const MVector& y) const {
    MVector s = x + y - S_;
    return xi_(s, y) * mu0(x) + xi_(x, s) * mu0(y);
  }
  Q B2(const MVector& x, const MVector& y) const { return xi_(x, y) * mu0(x + y - R_); }
  Q B(const MVector& x, const MVector& y) const { return B1(x, y) - B2(x, y); }

  Q dB(const MVector& x, const MVector& y, const MVector& z) const {
    return B(y, z) - B(x + y, z) + B(x, y + z) - B(x, y);
  }

  // [xi, d mu^0] with d mu^0 read literally on shifted arguments.
  Q bracket(const MVector& x, const MVector& y, const MVector& z) const {
    return xi_(x + y - S_, z) * dmu0(x, y) - xi_(x, y + z - S_) * dmu0(y, z) + dmu0(x + y - R_, z) * xi_(x, y) -
           dmu0(x, y + z - R_) * xi_(y, z);
  }

  // Case formulas for dB - [xi, d mu^0], indexed by whether x+y >= S and y+z >= S.
  int case_of(const MVector& x, const MVector& y, const MVector& z) const {
    bool c12 = c_.geq(x + y, S_), c23 = c_.geq(y + z, S_);
    if (c12 && c23) return 1;
    if (!c12 && c23) return 2;
    if (c12) return 3;
    return 4;
  }

  Q case_defect(const MVector& x, const MVector& y, const MVector& z) const {
    MVector t = x + y + z - S_;
    switch (case_of(x, y, z)) {
      case 1: return 0;
      case 2: return mu0(x) * (xi_(t, y) + xi_(y, z)) + mu0(y) * (xi_(x, t) - xi_(x, z));
      case 3: return mu0(y) * (xi_(x, z) - xi_(t, z)) + mu0(z) * (xi_(t, y) - xi_(x, y));
      default:
        return mu0(x) * (xi_(t, y) + xi_(y, z)) + mu0(y) * (xi_(x, t) - xi_(t, z)) + mu0(z) * (xi_(t, y) - xi_(x, y));
    }
  }

 private:
  Cone c_;
  SkewBiadditive xi_;
  SeedEval mu_;
  MVector R_, S_;
};

inline std::string triple_string(const MVector& x, const MVector& y, const MVector& z) {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

struct CaseReport {
  std::array<std::size_t, 5> triples{};     // per case, index 0 unused
  std::array<std::size_t, 5> violations{};  // per case
  std::vector<std::string> examples;
  std::size_t total_violations() const { return violations[1] + violations[2] + violations[3] + violations[4]; }
  bool ok() const { return total_violations() == 0; }
};

// Verifies dB - [xi, d mu^0] = case defect on every window triple, in the
// truncated convention.
inline CaseReport case_identity_check(const BracketRepresentative& rep, const Window& w) {
  CaseReport out;
  w.for_each_tuple(3, [&](const std::vector<std::size_t>& t) {
    const MVector &x = w[t[0]], &y = w[t[1]], &z = w[t[2]];
    int cs = rep.case_of(x, y, z);
    ++out.triples[cs];
    Q lhs = rep.dB(x, y, z) - rep.bracket(x, y, z);
    if (lhs != rep.case_defect(x, y, z)) {
      ++out.violations[cs];
      if (out.examples.size() < 5)
        out.examples.push_back("case " + std::to_string(cs) + " at " + triple_string(x, y, z));
    }
  });
  return out;
}

struct SurfaceZeroEntry {
  int k = 0;
  MVector R, S;
  std::size_t skew_dim = 0;
  bool skew_certified = false;
  CaseReport cases;                   // truncated convention
  std::size_t cocycle_checked = 0;    // triples for dB = [xi, d mu^0], bilinear convention
  std::size_t cocycle_violations = 0;
  std::size_t support_checked = 0;    // pairs with x + y outside Lambda(R + S)
  std::size_t support_violations = 0;
  std::vector<std::string> examples;
  bool ok() const { return cases.ok() && cocycle_violations == 0 && support_violations == 0; }
};

struct SurfaceZeroCertificate {
  int n = 1;
  long height = 0;
  std::vector<SurfaceZeroEntry> entries;
  std::size_t skipped = 0;  // degrees with no admissible xi
  bool ok() const {
    for (const auto& e : entries)
      if (!e.ok() || !e.skew_certified) return false;
    return true;
  }
};

// For each k and each degree R with R + S a multiple of S2 in the support of
// H^3_(2), checks that the representative (delta B, dB - [xi, d mu^0]) is zero:
// dB = [xi, d mu^0] on all window triples and B vanishes off Lambda(R + S).
inline SurfaceZeroCertificate verify_surface_zero(int n, long H) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  AnData an = an_data(n);
  Window w(an.cone, H);
  // the largest R + S is (n+1) S2; keep a margin of 4 above it
  long need = w.height((n + 1) * an.S2) + 4;
  if (H < need) throw UncertifiedError("window height must be at least " + std::to_string(need));
  SurfaceZeroCertificate cert;
  cert.n = n;
  cert.height = H;
  for (int k = 2; k <= n + 1; ++k) {
    AdditiveSeed mu = mu_seed(n, k);
    for (int m = 1; m <= n + 1; ++m) {
      MVector R = (m - k) * an.S2;
      SkewSpace sk = skew_space(an.cone, R, w);
      if (sk.dim() == 0) {
        ++cert.skipped;
        continue;
      }
      SurfaceZeroEntry e;
      e.k = k;
      e.R = R;
      e.S = mu.R;
      e.skew_dim = sk.dim();
      e.skew_certified = sk.certified;
      BracketRepresentative trunc(an.cone, sk.basis[0].with(ShiftConvention::Truncated), mu);
      BracketRepresentative bil(an.cone, sk.basis[0].with(ShiftConvention::Bilinear), mu);
      e.cases = case_identity_check(trunc, w);
      w.for_each_tuple(3, [&](const std::vector<std::size_t>& t) {
        const MVector &x = w[t[0]], &y = w[t[1]], &z = w[t[2]];
        ++e.cocycle_checked;
        if (bil.dB(x, y, z) != bil.bracket(x, y, z)) {
          ++e.cocycle_violations;
          if (e.examples.size() < 5) e.examples.push_back("dB != bracket at " + triple_string(x, y, z));
        }
      });
      MVector RS = R + mu.R;
      w.for_each_tuple(2, [&](const std::vector<std::size_t>& t) {
        const MVector &x = w[t[0]], &y = w[t[1]];
        if (an.cone.geq(x + y, RS)) return;
        ++e.support_checked;
        if (bil.B(x, y) != 0) {
          ++e.support_violations;
          if (e.examples.size() < 5) e.examples.push_back("B != 0 at (" + x.str() + "," + y.str() + ")");
        }
      });
      cert.entries.push_back(std::move(e));
    }
  }
  return cert;
}

}  // namespace toricdef
