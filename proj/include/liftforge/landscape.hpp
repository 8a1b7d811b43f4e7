// Landscape notation: a pattern over {0, 1, -} with a single star marking
// the bit that flips when every fixed symbol matches.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftforge/corefn.hpp"

namespace liftforge {

class LandscapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Landscape {
 public:
  /// Symbols in ASCII form: '0', '1', '-' and '*' for the star.
  static Landscape from_symbols(std::string symbols);

  int k() const { return static_cast<int>(symbols_.size()); }
  /// 1-based star position.
  int s() const { return star_ + 1; }
  /// Symbol at offset i from the star ('\0' outside the string, '*' at 0).
  char epsilon(int i) const;
  const std::string& symbols() const { return symbols_; }

  /// Unicode star by default; `ascii` prints '*'.
  std::string to_string(bool ascii = false) const;

  Landscape reversed() const;
  Landscape complemented() const;

  friend bool operator==(const Landscape&, const Landscape&) = default;
  friend auto operator<=>(const Landscape& a, const Landscape& b) { return a.symbols_ <=> b.symbols_; }

 private:
  Landscape(std::string symbols, int star) : symbols_(std::move(symbols)), star_(star) {}
  std::string symbols_;
  int star_ = 0;
};

/// Accepts '★' or '*' for the star.
Landscape parse_landscape(std::string_view text);

/// x_s xor prod over fixed symbols of (x_{s+i} xor eps_i xor 1).
Rule compile(const Landscape& l);

/// Every fixed offset d1 has some d2 with {eps_{d2}, eps_{d1+d2}} = {0, 1}.
bool is_conserved(const Landscape& l);

/// Smallest j (1-based) for which f xor x_j is free of x_j and every
/// product (f xor x_j)(shifted by t) vanishes; absent if none qualifies.
std::optional<int> check_shift_product(const Rule& r);

/// Flips the star bit when at least one member matches (members are aligned
/// at their stars).
Rule compile_set(const std::vector<Landscape>& set);

enum class ClassCountMethod {
  /// Orbit representatives of the landscape strings under reversal and
  /// 0/1 exchange; equal to the rule-level count because compile is
  /// injective and commutes with both operations.
  StringOrbits,
  /// canonicalize() on every compiled rule.
  RuleCanonical,
};

struct EnumerateOptions {
  bool collect = false;
  ClassCountMethod method = ClassCountMethod::StringOrbits;
  int jobs = 1;
};

struct ConservedEnumeration {
  int k = 0;
  std::uint64_t count = 0;
  std::uint64_t classes = 0;
  std::vector<Landscape> landscapes;  // filled when collect is set
};

ConservedEnumeration enumerate_conserved(int k, const EnumerateOptions& options = {});

/// All conserved landscapes with diameter in [k_from, k_to], in enumeration order.
std::vector<Landscape> conserved_pool(int k_from, int k_to);

}  // namespace liftforge
