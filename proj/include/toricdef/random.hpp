#pragma once

#include <random>

#include "toricdef/oracle.hpp"

namespace toricdef {

// Small random rationals p/q with |p| <= span, 1 <= q <= den.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long span = 5, long den = 3) : rng_(seed), span_(span), den_(den) {}

  Q next() {
    std::uniform_int_distribution<long> num(-span_, span_), dn(1, den_);
    Q x(num(rng_), dn(rng_));
    x.canonicalize();
    return x;
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  QVec vec(std::size_t n) {
    QVec v(n);
    for (auto& x : v) x = next();
    return v;
  }
  // Random element of a subspace as a combination of its basis.
  QVec in(const RatSubspace& U) {
    QVec v = zero_vec(U.ambient());
    for (const auto& b : U.basis()) v = v + next() * b;
    return v;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long span_, den_;
};

// Random table on S_n(W).
inline CochainTable random_table(const Window& w, int arity, RationalSampler& rs) {
  CochainTable t(w, arity);
  w.for_each_tuple(arity, [&](const std::vector<std::size_t>& idx) { t.set(idx, rs.next()); });
  return t;
}

}  // namespace toricdef
