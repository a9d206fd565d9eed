#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace toricdef {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : DomainError {
  using DomainError::DomainError;
};

// A window or stabilization bound was too small to certify an answer.
struct UncertifiedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdentityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Always "p/q" with q > 0, so integers print as "3/1".
inline std::string to_string(const Q& x) {
  Q c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

inline Q parse_rational(const std::string& text) {
  Q x;
  if (text.empty() || x.set_str(text, 10) != 0 || x.get_den() == 0)
    throw InputError("not a rational number: '" + text + "'");
  x.canonicalize();
  return x;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline QVec zero_vec(std::size_t n) { return QVec(n, Q(0)); }

inline QVec operator+(QVec a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline QVec operator-(QVec a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline QVec operator*(const Q& c, QVec a) {
  for (auto& x : a) x *= c;
  return a;
}

inline Q dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

inline QMat mat_mul(const QMat& a, const QMat& b, std::size_t b_cols) {
  QMat out(a.size(), zero_vec(b_cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline QMat transpose(const QMat& m, std::size_t cols) {
  QMat t(cols, zero_vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace toricdef
