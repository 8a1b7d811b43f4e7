// Exhaustive determination of the diameter-6 rules whose offset-s induced
// map F(x)_i = f(x_{i-s+1}, ..., x_{i-s+6}) is an involution.
//
// The search first fixes f on the 44 windows that occur in sequences of
// period at most 5 (an involution permutes the rotation classes of each
// primitive period), then extends over the remaining 20 windows with
// constraint propagation on the 11-variable identity f∘f = x_{2s-1}.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liftforge/corefn.hpp"

namespace liftforge {

/// b_p = sum over d | p of mu(d) 2^(p/d).
std::uint64_t count_primitive_sequences(int p);
/// sum_i C(r, 2i) (2i-1)!! p^i, times 2^(r-2i) for even p, with r = b_p / p.
std::uint64_t count_period_mappings(int p);

struct NecklaceClass {
  int p = 0;
  /// Least rotation, bit i = position i.
  std::uint32_t representative = 0;
  std::vector<std::uint32_t> members;
};

std::vector<NecklaceClass> necklace_classes(int p);

/// A partial 6-bit-window map: `defined` and `values` are indexed by the
/// window value (x1 = bit 0).
struct WindowMap {
  std::uint64_t defined = 0;
  std::uint64_t values = 0;

  bool compatible(const WindowMap& o) const { return ((defined & o.defined) & (values ^ o.values)) == 0; }
  WindowMap merged(const WindowMap& o) const { return {defined | o.defined, values | o.values}; }
};

/// One involutive way of permuting the classes of primitive period p.
struct PeriodMapping {
  int p = 0;
  /// Per class: partner class index (itself for a self-map) and rotation
  /// t, meaning F(rep) = rotation of the partner's representative by t.
  std::vector<int> partner;
  std::vector<int> rotation;
  WindowMap windows;
};

/// All involutive class mappings for primitive period p at offset s.
/// With `zero_fixed`, p = 1 only keeps f(000000) = 0.
std::vector<PeriodMapping> period_mappings(int p, int s, bool zero_fixed = true);

struct PeriodicAssignment {
  std::array<int, 5> choice{};  // index into period_mappings(p) for p = 1..5
  WindowMap windows;
};

struct CollisionStats {
  std::uint64_t combinations = 0;
  std::uint64_t survivors = 0;
  /// First period pair (p < q) whose mappings collide, per rejected combination.
  std::array<std::array<std::uint64_t, 6>, 6> first_collision{};
};

/// The 44 windows with first j bits equal to the last j bits for some j in {1,2,3}.
std::uint64_t periodic_window_mask();

std::vector<PeriodicAssignment> enumerate_periodic_assignments(int s, CollisionStats* stats = nullptr,
                                                               bool zero_fixed = true);

struct Involution6 {
  Rule rule;
  int s = 0;
  EquivClassId class_id;
};

struct SearchStats {
  std::uint64_t assignments = 0;
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;      // full tables satisfying the identity
  std::uint64_t tight = 0;          // ... of which have diameter exactly 6
};

struct SearchOptions {
  int jobs = 1;
  bool zero_fixed = true;
  /// Seed from the periodic assignments (true) or search all 64 windows
  /// directly with only f(0) = 0 fixed (false). Both give the same set.
  bool periodic_seed = true;
};

std::vector<Involution6> complete_search(int s, const SearchOptions& options = {}, SearchStats* stats = nullptr);

/// f(f(x1..x6), ..., f(x6..x11)) = x_{2s-1} for all 2^11 inputs; false
/// unless r has diameter exactly 6.
bool involution_rule_check(const Rule& r, int s);
bool involution_table_check(const Table& t, int s);

std::string to_json_line(const Involution6& inv);

}  // namespace liftforge
