#include "liftforge/landscape.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "liftforge/parallel.hpp"

namespace liftforge {

namespace {

constexpr std::string_view kStarUtf8 = "★";

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint32_t reverse_bits(std::uint32_t m, int k) {
  std::uint32_t r = 0;
  for (int i = 0; i < k; ++i) r |= ((m >> i) & 1U) << (k - 1 - i);
  return r;
}

// Conserved criterion on position masks: m0/m1 mark the fixed 0s and 1s,
// `star` is the 0-based star position.
bool conserved_masks(std::uint32_t m0, std::uint32_t m1, int star, int k) {
  const std::uint32_t fixed = m0 | m1;
  for (int d = 1; d < k; ++d) {
    const bool right = star + d < k && ((fixed >> (star + d)) & 1U);
    const bool left = star - d >= 0 && ((fixed >> (star - d)) & 1U);
    if (!right && !left) continue;
    if (((m0 & (m1 >> d)) | (m1 & (m0 >> d))) == 0) return false;
  }
  return true;
}

}  // namespace

Landscape Landscape::from_symbols(std::string symbols) {
  if (symbols.empty()) throw LandscapeError("empty landscape");
  int star = -1;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const char c = symbols[i];
    if (c == '*') {
      if (star >= 0) throw LandscapeError("landscape '" + symbols + "' has more than one star");
      star = static_cast<int>(i);
    } else if (c != '0' && c != '1' && c != '-') {
      throw LandscapeError(std::string("invalid landscape symbol '") + c + "'");
    }
  }
  if (star < 0) throw LandscapeError("landscape '" + symbols + "' has no star");
  const char first = symbols.front(), last = symbols.back();
  if (first == '*' || last == '*') throw LandscapeError("landscape '" + symbols + "' has its star at an end");
  if (first == '-' || last == '-') throw LandscapeError("landscape '" + symbols + "' has a dash at an end");
  if (symbols.size() > static_cast<std::size_t>(kMaxArity)) throw LandscapeError("landscape longer than 24 symbols");
  return Landscape(std::move(symbols), star);
}

char Landscape::epsilon(int i) const {
  const int pos = star_ + i;
  if (pos < 0 || pos >= k()) return '\0';
  return symbols_[static_cast<std::size_t>(pos)];
}

std::string Landscape::to_string(bool ascii) const {
  if (ascii) return symbols_;
  std::string out;
  for (char c : symbols_) {
    if (c == '*') {
      out += kStarUtf8;
    } else {
      out += c;
    }
  }
  return out;
}

Landscape Landscape::reversed() const {
  std::string r(symbols_.rbegin(), symbols_.rend());
  return Landscape(std::move(r), k() - 1 - star_);
}

Landscape Landscape::complemented() const {
  std::string c = symbols_;
  for (char& ch : c) {
    if (ch == '0') {
      ch = '1';
    } else if (ch == '1') {
      ch = '0';
    }
  }
  return Landscape(std::move(c), star_);
}

Landscape parse_landscape(std::string_view text) {
  std::string ascii;
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kStarUtf8.size()) == kStarUtf8) {
      ascii += '*';
      i += kStarUtf8.size();
    } else {
      ascii += text[i];
      ++i;
    }
  }
  return Landscape::from_symbols(std::move(ascii));
}

Rule compile(const Landscape& l) {
  std::uint64_t care = 0, want = 0;
  for (int i = 0; i < l.k(); ++i) {
    const char c = l.symbols()[static_cast<std::size_t>(i)];
    if (c == '0' || c == '1') care |= bit(i);
    if (c == '1') want |= bit(i);
  }
  const int star = l.s() - 1;
  const Table t = Table::from_function(l.k(), [&](std::uint64_t v) {
    return (((v >> star) & 1U) != 0) != ((v & care) == want);
  });
  return rule_from_table(t);
}

bool is_conserved(const Landscape& l) {
  auto fixed = [&](int i) {
    const char c = l.epsilon(i);
    return c == '0' || c == '1';
  };
  for (int d1 = 1 - l.s(); d1 <= l.k() - l.s(); ++d1) {
    if (!fixed(d1)) continue;
    bool found = false;
    for (int d2 = 1 - l.s(); d2 <= l.k() - l.s() && !found; ++d2) {
      if (fixed(d2) && fixed(d1 + d2) && l.epsilon(d2) != l.epsilon(d1 + d2)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<int> check_shift_product(const Rule& r) {
  const int k = r.k();
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  for (int j = 1; j <= k; ++j) {
    const Table h = Table::from_function(k, [&](std::uint64_t v) { return r(v) != (((v >> (j - 1)) & 1U) != 0); });
    if (h.depends_on(j - 1)) continue;
    bool ok = true;
    for (int t = 1 - j; t <= k - j && ok; ++t) {
      if (t == 0 || !h.depends_on(j - 1 + t)) continue;
      const int span = k + (t > 0 ? t : -t);
      if (span > 32) throw RuleError("shift-product check over more than 32 variables");
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << span) && ok; ++v) {
        const std::uint64_t w1 = t >= 0 ? (v & mask) : ((v >> -t) & mask);
        const std::uint64_t w2 = t >= 0 ? ((v >> t) & mask) : (v & mask);
        if (h[w1] && h[w2]) ok = false;
      }
    }
    if (ok) return j;
  }
  return std::nullopt;
}

Rule compile_set(const std::vector<Landscape>& set) {
  if (set.empty()) throw LandscapeError("empty landscape set");
  int left = 0, right = 0;  // extent around the star
  for (const Landscape& l : set) {
    left = std::max(left, l.s() - 1);
    right = std::max(right, l.k() - l.s());
  }
  const int k = left + right + 1;
  if (k > kMaxArity) throw LandscapeError("aligned landscape set wider than 24");
  struct Pattern {
    std::uint64_t care = 0, want = 0;
  };
  std::vector<Pattern> patterns;
  for (const Landscape& l : set) {
    Pattern p;
    const int offset = left - (l.s() - 1);
    for (int i = 0; i < l.k(); ++i) {
      const char c = l.symbols()[static_cast<std::size_t>(i)];
      if (c == '0' || c == '1') p.care |= bit(offset + i);
      if (c == '1') p.want |= bit(offset + i);
    }
    patterns.push_back(p);
  }
  const Table t = Table::from_function(k, [&](std::uint64_t v) {
    bool hit = false;
    for (const Pattern& p : patterns) hit = hit || (v & p.care) == p.want;
    return (((v >> left) & 1U) != 0) != hit;
  });
  return rule_from_table(t);
}

namespace {

struct ShardResult {
  std::uint64_t count = 0;
  std::uint64_t classes = 0;
  std::vector<Landscape> landscapes;
  std::set<EquivClassId> rule_classes;
};

class ConservedScan {
 public:
  ConservedScan(int k, int star, int first, const EnumerateOptions& options, ShardResult& out)
      : k_(k), star_(star), first_(first), options_(options), out_(out) {}

  void run() {
    std::uint32_t m0 = 0, m1 = 0;
    if (first_ == 0) {
      m0 |= 1U;
    } else {
      m1 |= 1U;
    }
    recurse(1, m0, m1);
  }

 private:
  void recurse(int pos, std::uint32_t m0, std::uint32_t m1) {
    if (pos == star_) {
      recurse(pos + 1, m0, m1);
      return;
    }
    if (pos == k_) {
      leaf(m0, m1);
      return;
    }
    recurse(pos + 1, m0 | (1U << pos), m1);
    recurse(pos + 1, m0, m1 | (1U << pos));
    if (pos != k_ - 1) recurse(pos + 1, m0, m1);
  }

  void leaf(std::uint32_t m0, std::uint32_t m1) {
    if (!conserved_masks(m0, m1, star_, k_)) return;
    ++out_.count;
    if (options_.method == ClassCountMethod::StringOrbits) {
      const auto key = std::tuple(star_, m0, m1);
      const int rs = k_ - 1 - star_;
      const std::uint32_t r0 = reverse_bits(m0, k_), r1 = reverse_bits(m1, k_);
      if (key <= std::tuple(star_, m1, m0) && key <= std::tuple(rs, r0, r1) && key <= std::tuple(rs, r1, r0)) {
        ++out_.classes;
      }
    }
    if (options_.collect || options_.method == ClassCountMethod::RuleCanonical) {
      std::string symbols(static_cast<std::size_t>(k_), '-');
      for (int i = 0; i < k_; ++i) {
        if ((m0 >> i) & 1U) symbols[static_cast<std::size_t>(i)] = '0';
        if ((m1 >> i) & 1U) symbols[static_cast<std::size_t>(i)] = '1';
      }
      symbols[static_cast<std::size_t>(star_)] = '*';
      Landscape l = Landscape::from_symbols(std::move(symbols));
      if (options_.method == ClassCountMethod::RuleCanonical) out_.rule_classes.insert(canonicalize(compile(l)));
      if (options_.collect) out_.landscapes.push_back(std::move(l));
    }
  }

  int k_, star_, first_;
  const EnumerateOptions& options_;
  ShardResult& out_;
};

}  // namespace

ConservedEnumeration enumerate_conserved(int k, const EnumerateOptions& options) {
  if (k < 3 || k > 24) throw LandscapeError("enumeration needs 3 <= k <= 24");
  // Shards: star position (1..k-2) times the first symbol.
  const std::size_t shards = static_cast<std::size_t>(2 * (k - 2));
  std::vector<ShardResult> results(shards);
  parallel_for(shards, options.jobs, [&](std::size_t i) {
    const int star = 1 + static_cast<int>(i / 2);
    ConservedScan(k, star, static_cast<int>(i % 2), options, results[i]).run();
  });

  ConservedEnumeration out;
  out.k = k;
  std::set<EquivClassId> classes;
  for (ShardResult& r : results) {
    out.count += r.count;
    out.classes += r.classes;
    classes.merge(r.rule_classes);
    for (Landscape& l : r.landscapes) out.landscapes.push_back(std::move(l));
  }
  if (options.method == ClassCountMethod::RuleCanonical) out.classes = classes.size();
  return out;
}

std::vector<Landscape> conserved_pool(int k_from, int k_to) {
  std::vector<Landscape> pool;
  EnumerateOptions options;
  options.collect = true;
  for (int k = k_from; k <= k_to; ++k) {
    auto e = enumerate_conserved(k, options);
    for (Landscape& l : e.landscapes) pool.push_back(std::move(l));
  }
  return pool;
}

}  // namespace liftforge
