// Differential uniformity of induced maps.
//
// DU(F) = max over a != 0 and b of #{x : F(x ^ a) ^ F(x) = b}. Tables report
// 2^(9-n) DU(F), which is a dyadic rational for n > 9; values are kept
// exact as numerator over a power of two.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftforge/corefn.hpp"
#include "liftforge/exprlang.hpp"

namespace liftforge {

inline constexpr int kDefaultDuCap = 14;

/// num / 2^den_log2 in lowest terms.
struct Dyadic {
  std::uint64_t num = 0;
  int den_log2 = 0;

  static Dyadic make(std::uint64_t num, int den_log2);
  bool is_integer() const { return den_log2 == 0; }
  /// "117", "116.5", "58.25".
  std::string to_string() const;
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
};

struct DdtMax {
  std::uint64_t du_raw = 0;
  std::uint64_t a = 0;  // argmax input difference
  std::uint64_t b = 0;  // argmax output difference
};

struct DdtOptions {
  int length_cap = kDefaultDuCap;
  /// Restrict a to rotation-class representatives (the DDT rows of a and
  /// of any rotation of a are permutations of each other).
  bool necklace_reduction = true;
  int jobs = 1;
};

DdtMax ddt_max(const Rule& r, int n, const DdtOptions& options = {});

/// 2^(9-n) * du_raw.
Dyadic scaled_du(std::uint64_t du_raw, int n);

struct DuEntry {
  int n = 0;
  DdtMax ddt;
  Dyadic scaled;
};

struct DuReport {
  std::string rule_id;
  std::vector<DuEntry> entries;
  /// max over the computed n of 2^-n du_raw.
  Dyadic running_max;
  int running_max_at = 0;
  /// 2^-n du_raw equal over the last three computed lengths. Diagnostic only.
  bool stabilized = false;
};

DuReport du_profile(const Rule& r, int n_from, int n_to, const DdtOptions& options = {});

struct DuTableRow {
  std::string label;
  int k = 0;
  int degree = 0;
  /// One entry per n in [n_from, n_to]; absent (n < k) entries are empty.
  std::vector<std::optional<Dyadic>> scaled;
  std::vector<std::optional<std::uint64_t>> raw;
};

struct DuTable {
  int n_from = 0;
  int n_to = 0;
  std::vector<DuTableRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json() const;
};

DuTable du_scaled_table(const std::vector<LiftExpr>& rows, int n_from, int n_to, const DdtOptions& options = {});

}  // namespace liftforge
