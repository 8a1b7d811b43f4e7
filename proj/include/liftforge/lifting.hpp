// Induced circular maps, bijectivity scans, the exact properness decision
// on the full shift, rule composition and expansion.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftforge/corefn.hpp"

namespace liftforge {

/// Default cap on the circular length for materialized scans.
inline constexpr int kDefaultLengthCap = 24;

/// Rotation by one position towards higher indices: σ(x)_i = x_{i-1}.
inline std::uint64_t rotate(std::uint64_t x, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return ((x << 1) | (x >> (n - 1))) & mask;
}

/// F(x)_i = f(x_i, ..., x_{i+k-1}) with indices mod n (offset-0 convention).
class InducedMap {
 public:
  InducedMap(Rule rule, int n);

  const Rule& rule() const { return rule_; }
  int length() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  std::uint64_t operator()(std::uint64_t x) const;
  /// Full image table; computed on first use.
  const std::vector<std::uint32_t>& table() const;

 private:
  Rule rule_;
  int n_;
  mutable std::vector<std::uint32_t> table_;
};

InducedMap induce(const Rule& r, int n);

/// True iff the induced map on n-bit circular states is a bijection.
bool is_lifting(const Rule& r, int n, int length_cap = kDefaultLengthCap);

enum class ProperMethod { PairGraph, FiniteScan };

/// Two distinct configurations with equal image, each written as
/// (left)^∞ middle (right)^∞. For finite scans, `length` is the circular
/// length of the collision and `middle_*` hold the two states.
struct CollisionWitness {
  std::string left_a, middle_a, right_a;
  std::string left_b, middle_b, right_b;
  int length = 0;
};

struct PropernessVerdict {
  bool proper = false;
  ProperMethod method = ProperMethod::PairGraph;
  std::optional<CollisionWitness> witness;
  /// For finite scans: the largest n that was checked.
  int scanned_to = 0;
};

struct ProperOptions {
  ProperMethod method = ProperMethod::PairGraph;
  int max_diameter = 16;
  /// Range for the finite-scan heuristic.
  int scan_to = 16;
};

PropernessVerdict decide_proper(const Rule& r, const ProperOptions& options = {});

/// Replays a witness: the two configurations differ and have equal images.
bool witness_replays(const Rule& r, const CollisionWitness& w);

/// The rule of G∘F over k_f + k_g - 1 variables, normalized; shifts add.
Rule compose(const Rule& g, const Rule& f);

/// f_s(x_1..x_{(k-1)s+1}) = f(x_1, x_{s+1}, ..., x_{(k-1)s+1}).
Rule expand(const Rule& f, int stride);

struct IterateOrder {
  enum class Status { Found, NotWithin, Unknown };
  Status status = Status::NotWithin;
  int order = 0;
  /// Accumulated rotation of F^order, when found.
  int shift = 0;
};

/// Smallest m <= max_power with F^m a pure shift, decided on the rule level.
/// Reports Unknown when an intermediate composition exceeds `arity_cap`.
IterateOrder iterate_order(const Rule& r, int max_power, int arity_cap = kMaxArity);

/// m-fold self-composition (throws RuleError on arity overflow).
Rule power(const Rule& r, int m);

/// Checks is_lifting(r, n) => is_lifting(r, m) for m | n, m >= k.
bool divisor_check(const Rule& r, int n, int m, int length_cap = kDefaultLengthCap);

std::string to_json(const PropernessVerdict& v);

}  // namespace liftforge
