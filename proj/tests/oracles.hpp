// Slow reference implementations used to cross-check the library. They
// share nothing with src/ beyond the Rule/Table types.

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "liftforge/corefn.hpp"

namespace oracle {

inline bool bit(std::uint64_t x, int i) { return (x >> i) & 1U; }

/// F(x)_i = f(x_i .. x_{i+k-1}) mod n, one output bit at a time.
inline std::uint64_t apply(const liftforge::Rule& r, int n, std::uint64_t x) {
  std::uint64_t y = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t w = 0;
    for (int j = 0; j < r.k(); ++j) w |= static_cast<std::uint64_t>(bit(x, (i + j) % n)) << j;
    if (r(w)) y |= std::uint64_t{1} << i;
  }
  return y;
}

inline bool bijective(const liftforge::Rule& r, int n) {
  std::vector<char> seen(std::size_t{1} << n, 0);
  for (std::uint64_t x = 0; x < seen.size(); ++x) {
    const std::uint64_t y = apply(r, n, x);
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

/// σ^t with σ(x)_i = x_{i-1}.
inline std::uint64_t rot(std::uint64_t x, int n, int t) {
  t = ((t % n) + n) % n;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  if (t == 0) return x;
  return ((x << t) | (x >> (n - t))) & mask;
}

/// Naive ANF coefficient of monomial m: XOR of f over the subsets of m.
inline bool anf_coefficient(const liftforge::Table& t, std::uint64_t m) {
  bool c = false;
  for (std::uint64_t u = m;; u = (u - 1) & m) {
    c ^= t.get(u);
    if (u == 0) break;
  }
  return c;
}

inline liftforge::Table random_table(std::mt19937_64& rng, int k) {
  liftforge::Table t(k);
  for (std::uint64_t v = 0; v < t.size(); ++v) t.set(v, rng() & 1U);
  return t;
}

/// A random rule of diameter exactly k (retries until both ends matter).
inline liftforge::Rule random_rule(std::mt19937_64& rng, int k) {
  for (;;) {
    liftforge::Table t = random_table(rng, k);
    if (t.depends_on(0) && t.depends_on(k - 1)) return liftforge::rule_from_table(t);
  }
}

/// Primitive-period words of length p (brute force over all rotations).
inline std::vector<std::uint32_t> primitive_words(int p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < (1U << p); ++u) {
    bool primitive = true;
    for (int d = 1; d < p && primitive; ++d) {
      if (p % d) continue;
      bool periodic = true;
      for (int i = 0; i < p; ++i) periodic = periodic && (bit(u, i) == bit(u, (i + d) % p));
      primitive = !periodic;
    }
    if (primitive) out.push_back(u);
  }
  return out;
}

}  // namespace oracle
