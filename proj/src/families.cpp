#include "liftforge/families.hpp"

#include <algorithm>
#include <set>

#include "liftforge/lifting.hpp"

namespace liftforge {

std::string to_string(FamilyViolation v) {
  switch (v) {
    case FamilyViolation::DiameterRange: return "diameter-range";
    case FamilyViolation::PositionRange: return "position-range";
    case FamilyViolation::SetRange: return "set-range";
    case FamilyViolation::Asymmetric: return "asymmetric-set";
    case FamilyViolation::MissingOne: return "one-not-in-set";
    case FamilyViolation::PositionInSet: return "position-in-set";
    case FamilyViolation::NoCongruentT: return "no-congruent-t";
    case FamilyViolation::ChainRange: return "chain-range";
  }
  return "unknown";
}

SymmetricFamilyParams symmetric_params(int k, int j, std::vector<int> set) {
  if (k < 4 || k > kMaxArity) {
    throw FamilyError(FamilyViolation::DiameterRange, "k=" + std::to_string(k) + " outside [4, 24]");
  }
  const int jj = std::min(j, k + 1 - j);
  if (j < 1 || j > k || jj < 2 || jj > k / 2) {
    throw FamilyError(FamilyViolation::PositionRange,
                      "j=" + std::to_string(j) + " needs 2 <= min(j, k+1-j) <= k/2 for k=" + std::to_string(k));
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (int l : set) {
    if (l < 1 || l > k) throw FamilyError(FamilyViolation::SetRange, "element " + std::to_string(l) + " outside [1, k]");
  }
  const std::set<int> members(set.begin(), set.end());
  for (int l : set) {
    if (!members.count(k + 1 - l)) {
      throw FamilyError(FamilyViolation::Asymmetric,
                        "S not symmetric: " + std::to_string(l) + " in S but " + std::to_string(k + 1 - l) + " is not");
    }
  }
  if (!members.count(1)) throw FamilyError(FamilyViolation::MissingOne, "1 not in S");
  if (members.count(j)) throw FamilyError(FamilyViolation::PositionInSet, "j=" + std::to_string(j) + " in S");

  SymmetricFamilyParams p;
  p.k = k;
  p.j = j;
  p.set = set;
  p.mirrored = j != jj;
  p.xi = k + 1 - 2 * jj;
  for (int t : set) {
    if (t > jj && (t - jj) % p.xi == 0) {
      p.t = t;
      break;
    }
  }
  if (p.t == 0) {
    throw FamilyError(FamilyViolation::NoCongruentT, "no t in S with t = " + std::to_string(jj) + " (mod " +
                                                         std::to_string(p.xi) + ")");
  }
  // r = ceil(log2((t - j)/Xi + 1))
  const int q = (p.t - jj) / p.xi + 1;
  while ((1 << p.r_exp) < q) ++p.r_exp;
  return p;
}

Rule symmetric_formula(int k, int j, const std::vector<int>& set) {
  std::uint64_t mask = 0;
  for (int l : set) mask |= std::uint64_t{1} << (l - 1);
  const int a = j - 1;
  const int b = k - j;
  const Table t = Table::from_function(k, [&](std::uint64_t v) {
    return (((v >> a) & 1U) != 0) != ((((v >> b) & 1U) == 0) && (v & mask) == mask);
  });
  return rule_from_table(t);
}

Rule build_symmetric(const SymmetricFamilyParams& p) { return symmetric_formula(p.k, p.j, p.set); }

std::vector<SymmetricFamilyParams> enumerate_symmetric(int k_from, int k_to, bool include_mirrored) {
  std::vector<SymmetricFamilyParams> out;
  for (int k = std::max(k_from, 4); k <= k_to; ++k) {
    // Symmetric subsets are unions of the pairs {l, k+1-l}, l <= ceil(k/2).
    const int pairs = (k + 1) / 2;
    for (int j = 2; j <= k - 1; ++j) {
      if (!include_mirrored && j > k / 2) break;
      for (std::uint32_t choice = 0; choice < (1U << pairs); ++choice) {
        std::vector<int> set;
        for (int l = 1; l <= pairs; ++l) {
          if ((choice >> (l - 1)) & 1U) {
            set.push_back(l);
            if (k + 1 - l != l) set.push_back(k + 1 - l);
          }
        }
        try {
          out.push_back(symmetric_params(k, j, std::move(set)));
        } catch (const FamilyError&) {
        }
      }
    }
  }
  return out;
}

Rule build_chain(const ChainFamilyParams& p) {
  const int r = p.r;
  if (r < 2 || 2 * r > kMaxArity) {
    throw FamilyError(FamilyViolation::ChainRange, "r=" + std::to_string(r) + " outside [2, 12]");
  }
  const int k = 2 * r;
  const Table t = Table::from_function(k, [&](std::uint64_t v) {
    auto x = [&](int i) { return ((v >> (i - 1)) & 1U) != 0; };
    bool f = x(r);
    for (int j = 1; j <= r - 1; ++j) {
      bool term = !x(j) && !x(r + j + 1);
      for (int m = 1; m <= j && term; ++m) term = x(r + m);
      if (!term) continue;
      bool all_zero = true, all_one = true;
      for (int m = j + 1; m <= r; ++m) {
        all_zero = all_zero && !x(m);
        all_one = all_one && x(m);
      }
      if (all_zero != all_one) f = !f;
    }
    return f;
  });
  return rule_from_table(t);
}

bool verify_order_claim(const Rule& r, const OrderClaim& claim) {
  if (claim.value < 0 || (claim.kind == OrderClaim::Kind::Exact && claim.value < 1)) return false;
  if (claim.kind == OrderClaim::Kind::Exact) return is_pure_shift(power(r, claim.value));
  Rule h = r;
  for (int i = 0; i < claim.value; ++i) h = compose(h, h);
  return is_pure_shift(h);
}

}  // namespace liftforge
