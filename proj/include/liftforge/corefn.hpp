// Truth tables, algebraic normal form and elementary equivalence for
// Boolean local rules of small arity.
//
// Bit convention: entry v of a table holds f(x1..xk) with x_{i+1} = bit i
// of v, so x1 is the least-significant bit of the index.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liftforge {

/// Largest arity a materialized table may have (2^24 bits = 2 MiB).
inline constexpr int kMaxArity = 24;

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw (not necessarily normalized) truth table over k variables.
class Table {
 public:
  Table() = default;
  explicit Table(int k);

  static Table from_bits(int k, std::span<const std::uint8_t> bits);
  static Table from_function(int k, auto&& fn) {
    Table t(k);
    for (std::uint64_t v = 0; v < t.size(); ++v) t.set(v, fn(v));
    return t;
  }

  int arity() const { return k_; }
  std::uint64_t size() const { return std::uint64_t{1} << k_; }
  bool get(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  bool operator[](std::uint64_t v) const { return get(v); }
  void set(std::uint64_t v, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (value) {
      words_[v >> 6] |= bit;
    } else {
      words_[v >> 6] &= ~bit;
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// True iff the function changes when variable `var` (0-based) flips.
  bool depends_on(int var) const;
  std::uint64_t count_ones() const;

  friend bool operator==(const Table&, const Table&) = default;
  /// Orders by arity, then by the table read as a binary number with entry
  /// 2^k-1 most significant (the same order as the hex serialization).
  friend std::strong_ordering operator<=>(const Table& a, const Table& b);

 private:
  int k_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A normalized local rule: depends on its first and last variable.
///
/// `shift` records the slide applied during normalization, 1 - i where i is
/// the first essential variable of the source table. For a source rule f and
/// its normalization g, F_f(x)_m = F_g(x)_{m - shift}. Shifts add up under
/// composition.
class Rule {
 public:
  int k() const { return table_.arity(); }
  int shift() const { return shift_; }
  const Table& table() const { return table_; }
  bool operator()(std::uint64_t v) const { return table_.get(v); }

  /// Same table with a different recorded shift.
  Rule with_shift(int shift) const;

  /// Rules compare by table only; the shift is bookkeeping.
  friend bool operator==(const Rule& a, const Rule& b) { return a.table_ == b.table_; }

 private:
  friend Rule rule_from_table(const Table& table, int base_shift);
  Rule(Table table, int shift) : table_(std::move(table)), shift_(shift) {}

  Table table_;
  int shift_ = 0;
};

/// Trims non-essential leading and trailing variables. Throws RuleError on
/// constant tables. `base_shift` is added to the trim offset.
Rule rule_from_table(const Table& table, int base_shift = 0);
Rule rule_from_bits(int k, std::span<const std::uint8_t> bits);

/// The one-variable identity rule x1 (a pure shift when carrying an offset).
Rule identity_rule();
bool is_pure_shift(const Rule& r);

/// Set of monomials; monomial m is a bitmask over variables (bit i = x_{i+1}),
/// the empty monomial is the constant 1. The transform is kept as a table of
/// coefficients indexed by monomial mask.
class Anf {
 public:
  explicit Anf(Table coefficients) : coeffs_(std::move(coefficients)) {}
  int arity() const { return coeffs_.arity(); }
  const Table& coefficients() const { return coeffs_; }
  std::vector<std::uint64_t> monomials() const;
  int degree() const;
  /// "x2 ^ x1*x3*x4 ^ x1*x4"; the constant monomial prints as "1", zero as "0".
  std::string to_string() const;

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  Table coeffs_;
};

/// In-place Möbius transform; it is an involution.
void moebius_transform(Table& t);
Anf to_anf(const Rule& r);
Anf to_anf(const Table& t);
Rule from_anf(const Anf& a);

int degree(const Rule& r);
bool is_balanced(const Rule& r);

/// f'(x1..xk) = f(xk..x1).
Table reverse(const Table& t);
/// f'(x) = f(complement of x) xor 1.
Table complement(const Table& t);
Rule reverse(const Rule& r);
Rule complement(const Rule& r);

struct EquivClassId {
  Table canon;
  int k() const { return canon.arity(); }
  friend bool operator==(const EquivClassId&, const EquivClassId&) = default;
  friend auto operator<=>(const EquivClassId& a, const EquivClassId& b) { return a.canon <=> b.canon; }
};

/// The four images of r under {id, reverse, complement, both}, deduplicated.
std::vector<Rule> orbit(const Rule& r);
EquivClassId canonicalize(const Rule& r);

/// "k:HEX", most-significant nibble first.
std::string to_hex(const Table& t);
std::string to_hex(const Rule& r);
std::string to_hex(const EquivClassId& id);
Table table_from_hex(std::string_view text);
Rule rule_from_hex(std::string_view text);

/// Parses ANF-style text: x1..xk, '^' for XOR, '*' or juxtaposition for AND,
/// parentheses, constants 0/1, optional "(+)" and unicode ⊕ for XOR.
/// Arity is the largest variable index mentioned unless `arity` is given.
Table parse_anf_text(std::string_view text, int arity = 0);

}  // namespace liftforge
