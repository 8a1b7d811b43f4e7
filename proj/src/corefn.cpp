#include "liftforge/corefn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace liftforge {

namespace {

// Masks selecting the entries with bit i of the index clear, for i < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::uint64_t used_mask(int k) {
  return k >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1U << k)) - 1;
}

std::size_t word_count(int k) { return k >= 6 ? std::size_t{1} << (k - 6) : 1; }

void check_arity(int k) {
  if (k < 0 || k > kMaxArity) {
    throw RuleError("arity " + std::to_string(k) + " outside [0, " + std::to_string(kMaxArity) + "]");
  }
}

}  // namespace

Table::Table(int k) : k_(k) {
  check_arity(k);
  words_.assign(word_count(k), 0);
}

Table Table::from_bits(int k, std::span<const std::uint8_t> bits) {
  if (k < 0 || k > kMaxArity || bits.size() != (std::size_t{1} << k)) {
    throw RuleError("table length " + std::to_string(bits.size()) + " does not match arity " + std::to_string(k));
  }
  Table t(k);
  for (std::size_t v = 0; v < bits.size(); ++v) t.set(v, bits[v] != 0);
  return t;
}

bool Table::depends_on(int var) const {
  if (var < 0 || var >= k_) return false;
  if (var < 6) {
    const int step = 1 << var;
    for (std::uint64_t w : words_) {
      if (((w >> step) ^ w) & kLowHalf[var] & used_mask(k_)) return true;
    }
    return false;
  }
  const std::size_t stride = std::size_t{1} << (var - 6);
  for (std::size_t base = 0; base < words_.size(); base += 2 * stride) {
    for (std::size_t i = 0; i < stride; ++i) {
      if (words_[base + i] != words_[base + stride + i]) return true;
    }
  }
  return false;
}

std::uint64_t Table::count_ones() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::strong_ordering operator<=>(const Table& a, const Table& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Rule Rule::with_shift(int shift) const { return Rule(table_, shift); }

Rule rule_from_table(const Table& table, int base_shift) {
  const int k = table.arity();
  int lo = 0;
  while (lo < k && !table.depends_on(lo)) ++lo;
  if (lo == k) throw RuleError("constant table has no diameter");
  int hi = k - 1;
  while (!table.depends_on(hi)) --hi;
  if (lo == 0 && hi == k - 1) return Rule(table, base_shift);

  Table trimmed(hi - lo + 1);
  for (std::uint64_t u = 0; u < trimmed.size(); ++u) trimmed.set(u, table.get(u << lo));
  return Rule(std::move(trimmed), base_shift - lo);
}

Rule rule_from_bits(int k, std::span<const std::uint8_t> bits) {
  if (k < 1) throw RuleError("arity must be at least 1");
  return rule_from_table(Table::from_bits(k, bits));
}

Rule identity_rule() {
  const std::uint8_t bits[] = {0, 1};
  return rule_from_bits(1, bits);
}

bool is_pure_shift(const Rule& r) { return r.k() == 1 && !r(0) && r(1); }

void moebius_transform(Table& t) {
  auto words = t.words();
  const int k = t.arity();
  for (int i = 0; i < std::min(k, 6); ++i) {
    const int step = 1 << i;
    for (std::uint64_t& w : words) w ^= (w & kLowHalf[i]) << step;
  }
  for (int i = 6; i < k; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
      for (std::size_t j = 0; j < stride; ++j) words[base + stride + j] ^= words[base + j];
    }
  }
}

std::vector<std::uint64_t> Anf::monomials() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_.get(m)) out.push_back(m);
  }
  return out;
}

int Anf::degree() const {
  int d = 0;
  bool any = false;
  for (std::uint64_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_.get(m)) {
      any = true;
      d = std::max(d, std::popcount(m));
    }
  }
  return any ? d : 0;
}

std::string Anf::to_string() const {
  auto monos = monomials();
  if (monos.empty()) return "0";
  // Lower degree first, then lexicographically by variable indices.
  auto vars = [](std::uint64_t m) {
    std::vector<int> out;
    for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  };
  std::sort(monos.begin(), monos.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return vars(a) < vars(b);
  });
  std::string out;
  for (std::uint64_t m : monos) {
    if (!out.empty()) out += " ^ ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int i = 0; i < arity(); ++i) {
      if ((m >> i) & 1U) {
        if (!first) out += "*";
        out += "x" + std::to_string(i + 1);
        first = false;
      }
    }
  }
  return out;
}

Anf to_anf(const Table& t) {
  Table c = t;
  moebius_transform(c);
  return Anf(std::move(c));
}

Anf to_anf(const Rule& r) { return to_anf(r.table()); }

Rule from_anf(const Anf& a) {
  Table t = a.coefficients();
  moebius_transform(t);
  return rule_from_table(t);
}

int degree(const Rule& r) { return to_anf(r).degree(); }

bool is_balanced(const Rule& r) { return 2 * r.table().count_ones() == r.table().size(); }

Table reverse(const Table& t) {
  const int k = t.arity();
  Table out(k);
  for (std::uint64_t v = 0; v < t.size(); ++v) {
    std::uint64_t rv = 0;
    for (int i = 0; i < k; ++i) rv |= ((v >> i) & 1U) << (k - 1 - i);
    out.set(rv, t.get(v));
  }
  return out;
}

Table complement(const Table& t) {
  Table out(t.arity());
  const std::uint64_t mask = t.size() - 1;
  for (std::uint64_t v = 0; v < t.size(); ++v) out.set(v, !t.get(~v & mask));
  return out;
}

// Reversal mirrors the window, so the recorded shift is kept as-is; only
// the table matters for equivalence.
Rule reverse(const Rule& r) { return rule_from_table(reverse(r.table()), r.shift()); }
Rule complement(const Rule& r) { return rule_from_table(complement(r.table()), r.shift()); }

std::vector<Rule> orbit(const Rule& r) {
  std::vector<Rule> out;
  const Rule rev = reverse(r);
  for (const Rule& cand : {r, rev, complement(r), complement(rev)}) {
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  }
  return out;
}

EquivClassId canonicalize(const Rule& r) {
  const Table rev = reverse(r.table());
  const Table* best = &r.table();
  const Table candidates[] = {rev, complement(r.table()), complement(rev)};
  for (const Table& c : candidates) {
    if (c < *best) best = &c;
  }
  return EquivClassId{*best};
}

std::string to_hex(const Table& t) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::uint64_t nibbles = t.arity() >= 2 ? t.size() / 4 : 1;
  std::string out = std::to_string(t.arity()) + ":";
  for (std::uint64_t i = nibbles; i-- > 0;) {
    const std::uint64_t word = t.words()[(4 * i) >> 6];
    out += kDigits[(word >> ((4 * i) & 63)) & 0xF];
  }
  return out;
}

std::string to_hex(const Rule& r) { return to_hex(r.table()); }
std::string to_hex(const EquivClassId& id) { return to_hex(id.canon); }

Table table_from_hex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) throw RuleError("expected k:HEX, got '" + std::string(text) + "'");
  int k = 0;
  for (char c : text.substr(0, colon)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw RuleError("bad arity in '" + std::string(text) + "'");
    k = 10 * k + (c - '0');
    if (k > kMaxArity) throw RuleError("arity too large in '" + std::string(text) + "'");
  }
  Table t(k);
  const std::string_view hex = text.substr(colon + 1);
  const std::uint64_t nibbles = k >= 2 ? t.size() / 4 : 1;
  if (hex.size() != nibbles) {
    throw RuleError("expected " + std::to_string(nibbles) + " hex digits for arity " + std::to_string(k));
  }
  for (std::uint64_t i = 0; i < nibbles; ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(hex[nibbles - 1 - i])));
    int val;
    if (c >= '0' && c <= '9') {
      val = c - '0';
    } else if (c >= 'A' && c <= 'F') {
      val = c - 'A' + 10;
    } else {
      throw RuleError("bad hex digit in '" + std::string(text) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t v = 4 * i + b;
      if ((val >> b) & 1) {
        if (v >= t.size()) throw RuleError("hex value exceeds table size in '" + std::string(text) + "'");
        t.set(v, true);
      }
    }
  }
  return t;
}

Rule rule_from_hex(std::string_view text) { return rule_from_table(table_from_hex(text)); }

namespace {

// Recursive-descent evaluator producing truth tables directly.
class AnfTextParser {
 public:
  AnfTextParser(std::string_view text, int arity) : text_(text), arity_(arity) {}

  Table parse() {
    if (arity_ == 0) arity_ = scan_arity();
    if (arity_ < 1 || arity_ > kMaxArity) throw RuleError("ANF text needs an arity in [1, 24]");
    Table t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return t;
  }

 private:
  int scan_arity() const {
    int best = 0;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == 'x') {
        int n = 0;
        std::size_t j = i + 1;
        while (j < text_.size() && (text_[j] == '_' || std::isdigit(static_cast<unsigned char>(text_[j])))) {
          if (text_[j] != '_') n = 10 * n + (text_[j] - '0');
          ++j;
        }
        best = std::max(best, n);
      }
    }
    return best;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw RuleError("ANF parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat_xor() {
    skip_ws();
    if (text_.substr(pos_, 1) == "^" || text_.substr(pos_, 1) == "+") {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "⊕") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool at_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == '(' || c == '0' || c == '1' || c == '*';
  }

  Table expr() {
    Table acc = term();
    while (eat_xor()) {
      Table rhs = term();
      auto a = acc.words();
      auto b = rhs.words();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    }
    return acc;
  }

  Table term() {
    Table acc = factor();
    while (at_factor()) {
      if (text_[pos_] == '*') ++pos_;
      Table rhs = factor();
      auto a = acc.words();
      auto b = rhs.words();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
    }
    return acc;
  }

  Table factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Table inner = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Table::from_function(arity_, [&](std::uint64_t) { return c == '1'; });
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
      int n = 0;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = 10 * n + (text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == start || n < 1 || n > arity_) fail("bad variable index");
      return Table::from_function(arity_, [n](std::uint64_t v) { return ((v >> (n - 1)) & 1U) != 0; });
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Table parse_anf_text(std::string_view text, int arity) { return AnfTextParser(text, arity).parse(); }

}  // namespace liftforge
