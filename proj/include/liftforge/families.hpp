// Two parametric constructions of proper liftings of any diameter:
//
//   symmetric: f = x_j ^ (x_{k+1-j} ^ 1) prod_{l in S} x_l
//   chain:     the 2r-variable rule whose induced map has order dividing r
//
// Both carry an order claim that is checked on the composed local rule.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "liftforge/corefn.hpp"

namespace liftforge {

enum class FamilyViolation {
  DiameterRange,   // k outside [4, 24]
  PositionRange,   // min(j, k+1-j) outside [2, k/2]
  SetRange,        // element of S outside [1, k]
  Asymmetric,      // l in S but k+1-l not in S
  MissingOne,      // 1 not in S
  PositionInSet,   // j in S
  NoCongruentT,    // no t in S with t = j (mod Xi)
  ChainRange,      // r < 2 or 2r above the arity cap
};

std::string to_string(FamilyViolation v);

class FamilyError : public std::invalid_argument {
 public:
  FamilyError(FamilyViolation v, const std::string& what) : std::invalid_argument(what), violation_(v) {}
  FamilyViolation violation() const { return violation_; }

 private:
  FamilyViolation violation_;
};

struct SymmetricFamilyParams {
  int k = 0;
  int j = 0;
  std::vector<int> set;  // sorted
  int xi = 0;
  /// Smallest member of S above j' congruent to j' mod Xi, where j' is j
  /// or, for the mirrored case j > k/2, k+1-j.
  int t = 0;
  int r_exp = 0;
  bool mirrored = false;
};

/// Validates and fills the derived fields. Throws FamilyError.
SymmetricFamilyParams symmetric_params(int k, int j, std::vector<int> set);

Rule build_symmetric(const SymmetricFamilyParams& p);
/// The formula for any k, j, S with j and k+1-j inside [1, k], unchecked.
Rule symmetric_formula(int k, int j, const std::vector<int>& set);

/// All valid parameter sets with k in [k_from, k_to], j over both halves.
std::vector<SymmetricFamilyParams> enumerate_symmetric(int k_from, int k_to, bool include_mirrored = false);

struct ChainFamilyParams {
  int r = 0;
};

Rule build_chain(const ChainFamilyParams& p);

struct OrderClaim {
  enum class Kind { PowerOfTwo, Exact };
  Kind kind = Kind::Exact;
  /// F^(2^value) = I or F^(value) = I.
  int value = 0;

  static OrderClaim power_of_two(int e) { return {Kind::PowerOfTwo, e}; }
  static OrderClaim exact(int r) { return {Kind::Exact, r}; }
};

/// Composes the rule with itself and compares the result against a pure
/// shift. Throws RuleError if an intermediate overflows the arity cap.
bool verify_order_claim(const Rule& r, const OrderClaim& claim);

}  // namespace liftforge
