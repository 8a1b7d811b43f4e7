// The bundled list of 120 diameter-6 proper liftings as landscape
// compositions, its verifier, a closure search over compositions of
// conserved landscapes, and the degree-2 composition probe.
//
// File format, one entry per line (lines starting with '#' are comments):
//   expr <TAB> degree <TAB> du6,du7,...,du12 <TAB> highlight
// with "-" for absent DU rows and "highlight" or "-" in the last column.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftforge/corefn.hpp"
#include "liftforge/exprlang.hpp"

namespace liftforge {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kCatalogSize = 120;
inline constexpr int kCatalogDuFrom = 6;
inline constexpr int kCatalogDuTo = 12;
/// FNV-1a 64 of the bundled data/catalog.tsv.
inline constexpr std::uint64_t kCatalogContentHash = 0x6c0f181b97d7544cULL;

std::uint64_t fnv1a64(std::string_view bytes);

struct CatalogEntry {
  std::string text;
  LiftExpr expr;
  int stated_degree = 0;
  std::optional<std::array<std::uint64_t, 7>> stated_du;  // n = 6..12
  bool highlight = false;
  int line = 0;
};

struct Catalog {
  std::string path;
  std::uint64_t content_hash = 0;
  std::vector<CatalogEntry> entries;
};

/// LIFTFORGE_CATALOG if set, else the path compiled into the library.
std::string default_catalog_path();

/// Throws CatalogError on I/O or syntax problems, on an entry count other
/// than 120, or (with check_hash) on a content hash mismatch.
Catalog load_catalog(const std::string& path = default_catalog_path(), bool check_hash = true);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// The six landscape/ANF correspondences, the two set-of-landscapes
/// correspondences and the diameter-5 composition example.
std::vector<IdentityCheck> check_identities();

struct CatalogVerifyOptions {
  bool check_du = false;
  int du_to = kCatalogDuTo;
  bool check_search6 = true;
  int lifting_from = 6;
  int lifting_to = 14;
  int jobs = 1;
};

struct CatalogIssue {
  std::size_t index = 0;
  std::string expr;
  std::string what;
};

struct CatalogReport {
  std::size_t entries = 0;
  std::map<int, std::size_t> per_degree;
  std::size_t distinct_classes = 0;
  /// Orbit members with f(0) = 0, summed over the classes.
  std::size_t constant_free_functions = 0;
  std::size_t du_checked = 0;
  std::size_t stabilized = 0;
  std::size_t search6_classes = 0;
  std::size_t search6_contained = 0;
  std::vector<IdentityCheck> identities;
  std::vector<CatalogIssue> issues;

  bool ok() const;
  std::string to_text() const;
  std::string to_json() const;
};

CatalogReport verify_catalog(const Catalog& catalog, const CatalogVerifyOptions& options = {});

std::vector<EquivClassId> catalog_classes(const Catalog& catalog);

struct ClosureOptions {
  int max_diameter = 8;  // D, intermediate cap
  /// Total distinct classes (any diameter) kept before giving up.
  std::size_t state_budget = 200'000;
  int jobs = 1;
  /// Re-run decide_proper on every collected class.
  bool verify_proper = false;
};

/// Fixpoint (or budget stop) for one intermediate cap.
struct ClosureLevel {
  int max_diameter = 0;
  int generations = 0;
  std::size_t states = 0;
  std::size_t classes = 0;
  bool exhausted_budget = false;
};

struct ClosureResult {
  int max_diameter = 0;
  bool exhausted_budget = false;
  std::size_t generators = 0;
  std::size_t states = 0;
  /// One entry per cap 6, 7, ..., D; each level starts from the previous one.
  std::vector<ClosureLevel> levels;
  /// Classes of diameter <= 6 and degree >= 2 reached.
  std::vector<EquivClassId> classes;
  std::map<int, std::size_t> per_diameter;
  std::size_t diameter6_in_catalog = 0;
  std::size_t diameter6_outside_catalog = 0;
  std::size_t involution_classes_found = 0;
  std::size_t involution_classes_total = 0;
  std::size_t improper = 0;

  bool monotone() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Closure of the conserved landscapes of diameter <= 6 under composition
/// on either side, memoized by class. Caps 6..D are run in turn, each
/// seeded with everything found under the previous cap, so the class
/// counts never decrease with D even when the budget runs out. The result
/// is a lower bound. Catalog and involution tallies are filled when those
/// sets are supplied.
ClosureResult closure_search(const ClosureOptions& options, const std::vector<EquivClassId>& catalog = {},
                             const std::vector<EquivClassId>& involutions = {});

struct Degree2Report {
  std::string universe;
  std::size_t universe_rules = 0;
  std::size_t compositions = 0;
  std::map<int, std::size_t> per_degree;
  std::vector<std::string> degree2;  // "lhs o rhs" as hex pairs

  std::string to_text() const;
  std::string to_json() const;
};

/// All compositions g o f with g a class representative and f any rule of
/// the universe: the catalog orbits plus the conserved landscapes of
/// diameter <= 6. Up to the simultaneous symmetry this covers every pair.
Degree2Report degree2_probe(const Catalog& catalog, int jobs = 1);

}  // namespace liftforge
