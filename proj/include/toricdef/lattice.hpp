#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricdef/rational.hpp"

namespace toricdef {

inline constexpr int kMaxRank = 3;

// Integer vector of rank 2 or 3. The tag keeps M (characters) and N
// (one-parameter subgroups) apart at compile time.
template <class Tag>
struct LatticeVector {
  std::array<long, kMaxRank> c{};
  int n = 0;

  LatticeVector() = default;
  LatticeVector(std::initializer_list<long> xs) {
    if (xs.size() > kMaxRank) throw DimensionError("lattice rank above 3");
    for (long x : xs) c[n++] = x;
  }
  explicit LatticeVector(const std::vector<long>& xs) {
    if (xs.size() > kMaxRank) throw DimensionError("lattice rank above 3");
    for (long x : xs) c[n++] = x;
  }
  static LatticeVector zero(int rank) {
    LatticeVector v;
    v.n = rank;
    return v;
  }

  int dim() const { return n; }
  long operator[](int i) const { return c[i]; }
  long& operator[](int i) { return c[i]; }

  LatticeVector& operator+=(const LatticeVector& o) {
    check(o);
    for (int i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check(o);
    for (int i = 0; i < n; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) {
    for (int i = 0; i < a.n; ++i) a.c[i] = -a.c[i];
    return a;
  }
  friend LatticeVector operator*(long k, LatticeVector a) {
    for (int i = 0; i < a.n; ++i) a.c[i] *= k;
    return a;
  }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (auto r = a.n <=> b.n; r != 0) return r;
    for (int i = 0; i < a.n; ++i)
      if (auto r = a.c[i] <=> b.c[i]; r != 0) return r;
    return std::strong_ordering::equal;
  }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }
  QVec to_q() const { return QVec(c.begin(), c.begin() + n); }
  std::vector<long> to_vector() const { return {c.begin(), c.begin() + n}; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }

 private:
  void check(const LatticeVector& o) const {
    if (o.n != n) throw DimensionError("lattice vector rank mismatch");
  }
};

struct MTag {};
struct NTag {};
using MVector = LatticeVector<MTag>;
using NVector = LatticeVector<NTag>;

struct LatticeVectorHash {
  template <class Tag>
  std::size_t operator()(const LatticeVector<Tag>& v) const {
    std::size_t h = static_cast<std::size_t>(v.n);
    for (int i = 0; i < v.n; ++i) h = h * 1000003u ^ std::hash<long>{}(v.c[i]);
    return h;
  }
};

inline long pair(const NVector& a, const MVector& r) {
  if (a.n != r.n) throw DimensionError("pairing of vectors with different rank");
  long s = 0;
  for (int i = 0; i < a.n; ++i) s += a.c[i] * r.c[i];
  return s;
}

inline Q pair(const QVec& a, const MVector& r) {
  if (static_cast<int>(a.size()) != r.n) throw DimensionError("pairing of vectors with different rank");
  Q s = 0;
  for (int i = 0; i < r.n; ++i) s += a[i] * r.c[i];
  return s;
}

template <class Tag>
long lattice_length(const LatticeVector<Tag>& d) {
  long g = 0;
  for (int i = 0; i < d.n; ++i) g = std::gcd(g, std::labs(d.c[i]));
  return g;
}

template <class Tag>
LatticeVector<Tag> primitive(LatticeVector<Tag> v) {
  long g = lattice_length(v);
  if (g > 1)
    for (int i = 0; i < v.n; ++i) v.c[i] /= g;
  return v;
}

template <class Out, class In>
Out retag(const In& v) {
  Out o;
  o.n = v.n;
  o.c = v.c;
  return o;
}

// Rank 3 cross product; a x b pairs to zero with a and b.
template <class Out, class In>
Out cross(const In& a, const In& b) {
  if (a.n != 3 || b.n != 3) throw DimensionError("cross product needs rank 3");
  return Out{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// ---------------------------------------------------------------------------
// Dense exact linear algebra

struct Echelon {
  QMat rows;                     // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;
};

inline Echelon rref(QMat m, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][col];
    for (std::size_t j = col; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      Q f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

inline std::size_t rank(const QMat& m, std::size_t cols) { return rref(m, cols).rows.size(); }

// Subspace of Q^n stored by its canonical reduced echelon basis.
class RatSubspace {
 public:
  RatSubspace() = default;
  explicit RatSubspace(std::size_t ambient) : ambient_(ambient) {}

  static RatSubspace span(const QMat& vectors, std::size_t ambient) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw DimensionError("spanning vector of wrong length");
    RatSubspace s(ambient);
    auto e = rref(vectors, ambient);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static RatSubspace full(std::size_t ambient) {
    QMat id(ambient, zero_vec(ambient));
    for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
    return span(id, ambient);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const QMat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduce v against the basis; the result vanishes on pivot columns.
  QVec reduce(QVec v) const {
    if (v.size() != ambient_) throw DimensionError("vector of wrong length");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Q f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[i][j];
    }
    return v;
  }
  bool contains(const QVec& v) const { return is_zero(reduce(v)); }

  // Coordinates of a member in the echelon basis (read off pivot entries).
  QVec coords(const QVec& v) const {
    if (!contains(v)) throw DomainError("vector is not in the subspace");
    QVec c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  bool contains(const RatSubspace& o) const {
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  RatSubspace operator+(const RatSubspace& o) const {
    QMat all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(all, ambient_);
  }

  friend bool operator==(const RatSubspace&, const RatSubspace&) = default;

 private:
  std::size_t ambient_ = 0;
  QMat basis_;
  std::vector<std::size_t> pivots_;
};

inline RatSubspace kernel_basis(const QMat& mat, std::size_t cols) {
  auto e = rref(mat, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMat ker;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v = zero_vec(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    ker.push_back(std::move(v));
  }
  return RatSubspace::span(ker, cols);
}

inline RatSubspace image_basis(const QMat& mat, std::size_t cols) {
  return RatSubspace::span(transpose(mat, cols), mat.size());
}

// Annihilator of a subspace of Q^n, as a subspace of the dual Q^n.
inline RatSubspace annihilator(const RatSubspace& s) { return kernel_basis(s.basis(), s.ambient()); }

struct QuotientCoords {
  QVec residue;  // representative vanishing on the modulus pivot columns
  QVec coords;   // residue entries at the non-pivot columns
  bool is_zero() const { return toricdef::is_zero(residue); }
  friend bool operator==(const QuotientCoords&, const QuotientCoords&) = default;
};

inline QuotientCoords quotient_coords(const QVec& v, const RatSubspace& modulus) {
  QuotientCoords q;
  q.residue = modulus.reduce(v);
  std::vector<bool> is_pivot(modulus.ambient(), false);
  for (auto p : modulus.pivots()) is_pivot[p] = true;
  for (std::size_t j = 0; j < q.residue.size(); ++j)
    if (!is_pivot[j]) q.coords.push_back(q.residue[j]);
  return q;
}

// Particular solution of A x = b with free variables set to zero.
inline std::optional<QVec> solve(const QMat& a, const QVec& b, std::size_t cols) {
  if (a.size() != b.size()) throw DimensionError("right-hand side of wrong length");
  QMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw DimensionError("matrix row of wrong length");
    aug[i].push_back(b[i]);
  }
  auto e = rref(aug, cols + 1);
  QVec x = zero_vec(cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][cols];
  }
  return x;
}

// Sparse system solved by elimination on the largest variable index. When
// variables are numbered by increasing height, each stored equation expresses
// its top variable through lower ones, so back-substitution runs upward.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<std::size_t, Q>>;

  explicit SparseSystem(std::size_t nvars) : piv_(nvars) {}

  std::size_t variables() const { return piv_.size(); }
  std::size_t rank() const { return rank_; }
  std::size_t free_count() const { return piv_.size() - rank_; }
  bool consistent() const { return consistent_; }
  bool is_pivot(std::size_t v) const { return piv_[v].has_value(); }

  // Returns false when the equation contradicts the ones already added.
  bool add(Row row, Q rhs) {
    normalize(row);
    while (!row.empty()) {
      std::size_t top = row.back().first;
      if (top >= piv_.size()) throw DimensionError("variable index out of range");
      if (!piv_[top]) {
        Q inv = 1 / row.back().second;
        for (auto& [v, c] : row) c *= inv;
        rhs *= inv;
        piv_[top] = Eq{std::move(row), std::move(rhs)};
        ++rank_;
        return true;
      }
      const Eq& p = *piv_[top];
      Q f = row.back().second;
      row = axpy(row, p.row, -f);
      rhs -= f * p.rhs;
    }
    if (rhs != 0) consistent_ = false;
    return rhs == 0;
  }

  QVec solve() const {
    QVec x = zero_vec(piv_.size());
    for (std::size_t v = 0; v < piv_.size(); ++v) {
      if (!piv_[v]) continue;
      Q acc = piv_[v]->rhs;
      for (const auto& [k, c] : piv_[v]->row)
        if (k != v) acc -= c * x[k];
      x[v] = acc;
    }
    return x;
  }

 private:
  struct Eq {
    Row row;  // ascending variables, last entry is the pivot with coefficient 1
    Q rhs;
  };

  static void normalize(Row& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    for (auto& [v, c] : row) {
      if (!out.empty() && out.back().first == v)
        out.back().second += c;
      else
        out.emplace_back(v, c);
      if (out.back().second == 0) out.pop_back();
    }
    row = std::move(out);
  }

  static Row axpy(const Row& a, const Row& b, const Q& f) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f * b[j].second);
        ++j;
      } else {
        Q c = a[i].second + f * b[j].second;
        if (c != 0) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<std::optional<Eq>> piv_;
  std::size_t rank_ = 0;
  bool consistent_ = true;
};

}  // namespace toricdef
