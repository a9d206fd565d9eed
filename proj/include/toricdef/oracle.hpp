#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricdef/cone.hpp"

namespace toricdef {

// Finite truncation W = { lambda in Lambda : <h, lambda> <= H } for an
// interior point h of sigma. Heights are additive and positive off the
// origin, so W is monoid-like and its tuples S_n(W) are exactly the tuples of
// total height at most H.
class Window {
 public:
  Window(const Cone& cone, long H, std::optional<NVector> height = std::nullopt)
      : cone_(cone), H_(H), h_(height ? *height : cone.interior_point()) {
    if (H < 0) throw DomainError("window height must be nonnegative");
    if (h_.n != cone.rank) throw DimensionError("height functional of wrong rank");
    for (const auto& g : cone.dual)
      if (pair(h_, g) <= 0) throw DomainError("height functional is not positive on the dual cone");
    enumerate();
  }

  const Cone& cone() const { return cone_; }
  long bound() const { return H_; }
  const NVector& height_functional() const { return h_; }
  long height(const MVector& m) const { return pair(h_, m); }

  std::size_t size() const { return points_.size(); }
  const std::vector<MVector>& points() const { return points_; }
  const MVector& operator[](std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index(const MVector& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const MVector& m) const { return index_.count(m) > 0; }

  // Visit every n-tuple of point indices with total height <= H.
  template <class Fn>
  void for_each_tuple(int n, Fn&& fn) const {
    std::vector<std::size_t> idx(n);
    recurse(0, n, 0, idx, fn);
  }

  template <class Fn>
  void for_each_tuple_below(int n, long bound, Fn&& fn) const {
    std::vector<std::size_t> idx(n);
    recurse_bounded(0, n, 0, bound, idx, fn);
  }

  std::vector<std::vector<std::size_t>> tuples(int n) const {
    std::vector<std::vector<std::size_t>> out;
    for_each_tuple(n, [&](const std::vector<std::size_t>& t) { out.push_back(t); });
    return out;
  }

  // lambda1, lambda2 in W and lambda1 - lambda2 in Lambda imply the
  // difference is in W.
  bool certify_monoid_like() const {
    for (const auto& a : points_)
      for (const auto& b : points_) {
        MVector d = a - b;
        if (cone_.in_lambda(d) && !contains(d)) return false;
      }
    return true;
  }

  // W cap Lambda(R) is full in W: (L0 + Lambda) cap W = L0.
  bool certify_full(const MVector& R) const {
    for (const auto& l0 : points_) {
      if (!cone_.geq(l0, R)) continue;
      for (const auto& l : points_)
        if (cone_.in_lambda(l - l0) && !cone_.geq(l, R)) return false;
    }
    return true;
  }

 private:
  void enumerate() {
    const int r = cone_.rank;
    std::vector<long> lo(r, 0), hi(r, 0);
    for (const auto& g : cone_.dual) {
      long hg = pair(h_, g);
      for (int i = 0; i < r; ++i) {
        mpz_class num = H_ * g[i], fl, ce;
        mpz_fdiv_q_ui(fl.get_mpz_t(), num.get_mpz_t(), hg);
        mpz_cdiv_q_ui(ce.get_mpz_t(), num.get_mpz_t(), hg);
        lo[i] = std::min(lo[i], fl.get_si());
        hi[i] = std::max(hi[i], ce.get_si());
      }
    }
    MVector m = MVector::zero(r);
    std::function<void(int)> rec = [&](int i) {
      if (i == r) {
        if (cone_.in_lambda(m) && height(m) <= H_) points_.push_back(m);
        return;
      }
      for (long x = lo[i]; x <= hi[i]; ++x) {
        m[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
    std::sort(points_.begin(), points_.end(), [&](const MVector& a, const MVector& b) {
      long ha = height(a), hb = height(b);
      return ha != hb ? ha < hb : a < b;
    });
    for (std::size_t i = 0; i < points_.size(); ++i) index_[points_[i]] = i;
    // points_ is sorted by height, so heights_ is nondecreasing
    for (const auto& p : points_) heights_.push_back(height(p));
  }

  template <class Fn>
  void recurse(int pos, int n, long used, std::vector<std::size_t>& idx, Fn& fn) const {
    recurse_bounded(pos, n, used, H_, idx, fn);
  }

  template <class Fn>
  void recurse_bounded(int pos, int n, long used, long bound, std::vector<std::size_t>& idx,
                       Fn& fn) const {
    if (pos == n) {
      fn(static_cast<const std::vector<std::size_t>&>(idx));
      return;
    }
    for (std::size_t i = 0; i < points_.size() && used + heights_[i] <= bound; ++i) {
      idx[pos] = i;
      recurse_bounded(pos + 1, n, used + heights_[i], bound, idx, fn);
    }
  }

  Cone cone_;
  long H_;
  NVector h_;
  std::vector<MVector> points_;
  std::vector<long> heights_;
  std::unordered_map<MVector, std::size_t, LatticeVectorHash> index_;
};

inline Window make_window(const Cone& cone, long H, std::optional<NVector> height = std::nullopt,
                          const std::vector<MVector>& degrees = {}) {
  Window w(cone, H, height);
  if (!w.certify_monoid_like()) throw UncertifiedError("window is not monoid-like");
  for (const auto& R : degrees)
    if (!w.certify_full(R)) throw UncertifiedError("window part above " + R.str() + " is not full");
  return w;
}

// ---------------------------------------------------------------------------
// Cochains: rational functions of n lattice points. An empty optional means
// the value depends on data outside the window, so the tuple is uncertified.

using Args = std::span<const MVector>;
using CochainFn = std::function<std::optional<Q>(Args)>;

struct Cochain {
  int arity = 1;
  int hodge = 0;  // 0 when untagged
  std::optional<MVector> degree;
  CochainFn fn;

  std::optional<Q> operator()(Args a) const { return fn(a); }
  std::optional<Q> operator()(std::initializer_list<MVector> a) const {
    return fn(Args(a.begin(), a.size()));
  }
  Q at(std::initializer_list<MVector> a) const {
    auto v = (*this)(a);
    if (!v) throw UncertifiedError("cochain value outside the certified window");
    return *v;
  }
};

inline Cochain zero_cochain(int arity) {
  return {arity, 0, std::nullopt, [](Args) -> std::optional<Q> { return Q(0); }};
}

// Cochain given by an exact formula on all of M^n.
inline Cochain formula_cochain(int arity, std::function<Q(Args)> f, std::optional<MVector> degree = std::nullopt) {
  return {arity, 0, degree, [f = std::move(f)](Args a) -> std::optional<Q> { return f(a); }};
}

// Table on S_n(W): zero off Lambda, uncertified at points of Lambda outside W.
class CochainTable {
 public:
  CochainTable(const Window& w, int arity) : w_(&w), arity_(arity) {}

  void set(const std::vector<std::size_t>& idx, Q v) { values_[key(idx)] = std::move(v); }
  Q get(const std::vector<std::size_t>& idx) const {
    auto it = values_.find(key(idx));
    return it == values_.end() ? Q(0) : it->second;
  }

  Cochain cochain() const {
    const CochainTable* self = this;
    return {arity_, 0, std::nullopt, [self](Args a) -> std::optional<Q> { return self->lookup(a); }};
  }

  std::optional<Q> lookup(Args a) const {
    std::vector<std::size_t> idx;
    long total = 0;
    for (const auto& m : a) {
      if (!w_->cone().in_lambda(m)) return Q(0);
      auto i = w_->index(m);
      if (!i) return std::nullopt;
      idx.push_back(*i);
      total += w_->height(m);
    }
    if (total > w_->bound()) return std::nullopt;
    return get(idx);
  }

 private:
  std::uint64_t key(const std::vector<std::size_t>& idx) const {
    std::uint64_t k = 0;
    for (auto i : idx) k = k * (w_->size() + 1) + i;
    return k;
  }
  const Window* w_;
  int arity_;
  std::unordered_map<std::uint64_t, Q> values_;
};

inline MVector sum_of(Args a) {
  MVector s = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i];
  return s;
}

// d phi(l1..l_{n+1}) = phi(l2..) + sum_i (-1)^i phi(.., l_i + l_{i+1}, ..) + (-1)^{n+1} phi(l1..l_n)
inline Cochain differential(const Cochain& phi) {
  const int n = phi.arity;
  Cochain out;
  out.arity = n + 1;
  out.hodge = phi.hodge;
  out.degree = phi.degree;
  out.fn = [phi, n](Args a) -> std::optional<Q> {
    std::vector<MVector> buf(n);
    Q total = 0;
    auto first = phi(Args(a.data() + 1, n));
    if (!first) return std::nullopt;
    total += *first;
    for (int i = 1; i <= n; ++i) {
      for (int k = 0, s = 0; k <= n; ++k) {
        if (k == i) continue;
        buf[s++] = (k == i - 1) ? a[k] + a[k + 1] : a[k];
      }
      auto v = phi(Args(buf.data(), n));
      if (!v) return std::nullopt;
      total += (i % 2 ? -1 : 1) * *v;
    }
    auto last = phi(Args(a.data(), n));
    if (!last) return std::nullopt;
    total += ((n + 1) % 2 ? -1 : 1) * *last;
    return total;
  };
  return out;
}

// Gerstenhaber bracket of 2-cochains of degrees R (f) and S (g):
// [f,g](l1,l2,l3) = f(-S+l12,l3) g(l1,l2) - f(l1,-S+l23) g(l2,l3)
//                 + g(-R+l12,l3) f(l1,l2) - g(l1,-R+l23) f(l2,l3),
// where a shifted argument outside Lambda contributes zero.
inline Cochain bracket(const Cochain& f, const Cochain& g, const Cone& cone, const MVector& R, const MVector& S) {
  Cochain out;
  out.arity = 3;
  out.degree = R + S;
  out.fn = [f, g, cone, R, S](Args a) -> std::optional<Q> {
    const MVector &l1 = a[0], &l2 = a[1], &l3 = a[2];
    Q total = 0;
    auto term = [&](const Cochain& outer, const MVector& shift, const Cochain& inner, bool left, int sign) -> bool {
      MVector x = left ? l1 + l2 - shift : l2 + l3 - shift;
      if (!cone.in_lambda(x)) return true;
      auto in = left ? inner({l1, l2}) : inner({l2, l3});
      if (!in) return false;
      if (*in == 0) return true;
      auto ou = left ? outer({x, l3}) : outer({l1, x});
      if (!ou) return false;
      total += sign * *ou * *in;
      return true;
    };
    if (!term(f, S, g, true, 1) || !term(f, S, g, false, -1) || !term(g, R, f, true, 1) ||
        !term(g, R, f, false, -1))
      return std::nullopt;
    return total;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Shuffle operators and Hodge projectors for n = 2, 3. The Hodge piece i is
// the eigenspace of phi -> phi o s_n with eigenvalue 2^i - 2.

inline Cochain shuffle_sum(const Cochain& phi) {
  Cochain out = phi;
  if (phi.arity == 2) {
    out.fn = [phi](Args a) -> std::optional<Q> {
      auto x = phi({a[0], a[1]}), y = phi({a[1], a[0]});
      if (!x || !y) return std::nullopt;
      return *x - *y;
    };
  } else if (phi.arity == 3) {
    // s_{1,2} + s_{2,1}
    out.fn = [phi](Args a) -> std::optional<Q> {
      const MVector &x = a[0], &y = a[1], &z = a[2];
      auto abc = phi({x, y, z}), bac = phi({y, x, z}), bca = phi({y, z, x});
      auto acb = phi({x, z, y}), cab = phi({z, x, y});
      if (!abc || !bac || !bca || !acb || !cab) return std::nullopt;
      return (*abc - *bac + *bca) + (*abc - *acb + *cab);
    };
  } else {
    throw DomainError("shuffle operators implemented for arity 2 and 3");
  }
  return out;
}

inline Q hodge_eigenvalue(int i) { return Q((1 << i) - 2); }

inline Cochain linear_combination(const std::vector<std::pair<Q, Cochain>>& terms) {
  Cochain out = terms.front().second;
  out.fn = [terms](Args a) -> std::optional<Q> {
    Q total = 0;
    for (const auto& [c, phi] : terms) {
      if (c == 0) continue;
      auto v = phi(a);
      if (!v) return std::nullopt;
      total += c * *v;
    }
    return total;
  };
  return out;
}

// e_n(i) as a polynomial in T = (. o s_n) vanishing on the other eigenvalues.
inline Cochain hodge_project(const Cochain& phi, int i) {
  const int n = phi.arity;
  if (n != 2 && n != 3) throw DomainError("Hodge projection implemented for arity 2 and 3");
  if (i < 1 || i > n) throw DomainError("Hodge index out of range");
  Cochain cur = phi;
  Q scale = 1;
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    Q ev = hodge_eigenvalue(k);
    Cochain t = shuffle_sum(cur);
    cur = linear_combination({{Q(1), t}, {-ev, cur}});
    scale *= hodge_eigenvalue(i) - ev;
  }
  Cochain out = linear_combination({{1 / scale, cur}});
  out.hodge = i;
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise verification over certified tuples.

struct VerifyReport {
  std::size_t checked = 0;      // certified tuples compared
  std::size_t uncertified = 0;  // tuples skipped for lack of window data
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few counterexamples

  bool ok() const { return violations == 0; }
  void merge(const VerifyReport& o) {
    checked += o.checked;
    uncertified += o.uncertified;
    violations += o.violations;
    for (const auto& e : o.examples)
      if (examples.size() < 5) examples.push_back(e);
  }
};

inline std::string tuple_string(Args a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + a[i].str();
  return s;
}

template <class Filter>
VerifyReport verify_pointwise(const Cochain& lhs, const Cochain& rhs, const Window& w, Filter&& keep) {
  VerifyReport rep;
  std::vector<MVector> args(lhs.arity);
  w.for_each_tuple(lhs.arity, [&](const std::vector<std::size_t>& idx) {
    for (int k = 0; k < lhs.arity; ++k) args[k] = w[idx[k]];
    Args a(args.data(), args.size());
    if (!keep(a)) return;
    auto x = lhs(a), y = rhs(a);
    if (!x || !y) {
      ++rep.uncertified;
      return;
    }
    ++rep.checked;
    if (*x != *y) {
      ++rep.violations;
      if (rep.examples.size() < 5)
        rep.examples.push_back(tuple_string(a) + ": " + to_string(*x) + " vs " + to_string(*y));
    }
  });
  return rep;
}

inline VerifyReport verify_pointwise(const Cochain& lhs, const Cochain& rhs, const Window& w) {
  return verify_pointwise(lhs, rhs, w, [](Args) { return true; });
}

// Same comparison over an explicit list of tuples.
inline VerifyReport verify_on(const Cochain& lhs, const Cochain& rhs, const std::vector<std::vector<MVector>>& tuples) {
  VerifyReport rep;
  for (const auto& t : tuples) {
    Args a(t.data(), t.size());
    auto x = lhs(a), y = rhs(a);
    if (!x || !y) {
      ++rep.uncertified;
      continue;
    }
    ++rep.checked;
    if (*x != *y) {
      ++rep.violations;
      if (rep.examples.size() < 5)
        rep.examples.push_back(tuple_string(a) + ": " + to_string(*x) + " vs " + to_string(*y));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Relative truncated complex C^n(W, W minus Lambda(R)): cochains on S_n(W)
// vanishing on tuples whose sum is not >= R.

class TruncatedComplex {
 public:
  TruncatedComplex(const Window& w, MVector R) : w_(&w), R_(std::move(R)) {}

  const Window& window() const { return *w_; }
  const MVector& degree() const { return R_; }

  // Basis tuples of C^n: n-tuples of S_n(W) with sum >= R.
  std::vector<std::vector<std::size_t>> basis(int n) const {
    std::vector<std::vector<std::size_t>> out;
    w_->for_each_tuple(n, [&](const std::vector<std::size_t>& t) {
      if (w_->cone().geq(sum_idx(t), R_)) out.push_back(t);
    });
    return out;
  }

  // Sparse matrix of d: C^n -> C^{n+1}; rows indexed by basis(n+1).
  std::vector<std::map<std::size_t, Q>> differential_matrix(int n) const {
    auto src = basis(n), dst = basis(n + 1);
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t i = 0; i < src.size(); ++i) pos[src[i]] = i;
    std::vector<std::map<std::size_t, Q>> rows(dst.size());
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (const auto& [t, c] : face_terms(dst[r])) {
        auto it = pos.find(t);
        if (it != pos.end()) rows[r][it->second] += c;
      }
    return rows;
  }

  struct Result {
    bool exact = false;
    bool boundary_flag = false;  // preimage uses values on the outermost height shell
    std::map<std::vector<std::size_t>, Q> preimage;
    std::size_t equations = 0;
    std::size_t uncertified = 0;
  };

  // Solve d psi = phi on certified tuples of S_n(W).
  Result is_coboundary(const Cochain& phi) const {
    const int n = phi.arity;
    if (n < 2) throw DomainError("is_coboundary needs arity >= 2");
    auto vars = basis(n - 1);
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = i;
    SparseSystem sys(vars.size());
    Result res;
    std::vector<MVector> args(n);
    w_->for_each_tuple(n, [&](const std::vector<std::size_t>& t) {
      for (int k = 0; k < n; ++k) args[k] = (*w_)[t[k]];
      auto v = phi(Args(args.data(), n));
      if (!v) {
        ++res.uncertified;
        return;
      }
      SparseSystem::Row row;
      for (const auto& [ft, c] : face_terms(t)) {
        auto it = pos.find(ft);
        if (it != pos.end()) row.emplace_back(it->second, c);
      }
      ++res.equations;
      sys.add(std::move(row), *v);
    });
    res.exact = sys.consistent();
    if (res.exact) {
      QVec x = sys.solve();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (x[i] == 0) continue;
        res.preimage[vars[i]] = x[i];
        long h = 0;
        for (auto k : vars[i]) h += w_->height((*w_)[k]);
        if (h == w_->bound()) res.boundary_flag = true;
      }
    }
    return res;
  }

 private:
  MVector sum_idx(const std::vector<std::size_t>& t) const {
    MVector s = MVector::zero(w_->cone().rank);
    for (auto i : t) s += (*w_)[i];
    return s;
  }

  // Terms of d applied to the indicator of a (n-1)-tuple, read backwards:
  // the (n-1)-tuples appearing in d(.)(t) with their signs.
  std::vector<std::pair<std::vector<std::size_t>, Q>> face_terms(const std::vector<std::size_t>& t) const {
    const std::size_t n = t.size();
    std::vector<std::pair<std::vector<std::size_t>, Q>> out;
    out.emplace_back(std::vector<std::size_t>(t.begin() + 1, t.end()), Q(1));
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::size_t> f;
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        if (k == i - 1) {
          auto j = w_->index((*w_)[t[k]] + (*w_)[t[k + 1]]);
          if (!j) {
            ok = false;
            break;
          }
          f.push_back(*j);
        } else {
          f.push_back(t[k]);
        }
      }
      if (ok) out.emplace_back(std::move(f), Q(i % 2 ? -1 : 1));
    }
    out.emplace_back(std::vector<std::size_t>(t.begin(), t.end() - 1), Q(n % 2 ? -1 : 1));
    return out;
  }

  const Window* w_;
  MVector R_;
};

}  // namespace toricdef
