#include "liftforge/lifting.hpp"

#include <algorithm>

#include <json.hpp>

namespace liftforge {

namespace {

std::uint64_t low_mask(int bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

void check_length(const Rule& r, int n, int cap) {
  if (n < r.k()) {
    throw RuleError("length " + std::to_string(n) + " is below the diameter " + std::to_string(r.k()));
  }
  if (n > cap || n > 32) {
    throw RuleError("length " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
}

std::string state_bits(std::uint64_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = ((x >> i) & 1U) ? '1' : '0';
  return s;
}

}  // namespace

InducedMap::InducedMap(Rule rule, int n) : rule_(std::move(rule)), n_(n) { check_length(rule_, n, 32); }

std::uint64_t InducedMap::operator()(std::uint64_t x) const {
  const std::uint64_t ext = x | (x << n_);
  const std::uint64_t mask = low_mask(rule_.k());
  std::uint64_t y = 0;
  for (int i = 0; i < n_; ++i) y |= static_cast<std::uint64_t>(rule_((ext >> i) & mask)) << i;
  return y;
}

const std::vector<std::uint32_t>& InducedMap::table() const {
  if (table_.empty()) {
    std::vector<std::uint32_t> t(size());
    for (std::uint64_t x = 0; x < size(); ++x) t[x] = static_cast<std::uint32_t>((*this)(x));
    table_ = std::move(t);
  }
  return table_;
}

InducedMap induce(const Rule& r, int n) { return InducedMap(r, n); }

namespace {

// Returns the first pair of distinct states with equal image, if any.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_collision(const Rule& r, int n) {
  const InducedMap map(r, n);
  std::vector<std::uint64_t> seen((map.size() + 63) / 64, 0);
  for (std::uint64_t x = 0; x < map.size(); ++x) {
    const std::uint64_t y = map(x);
    std::uint64_t& word = seen[y >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (y & 63);
    if (word & bit) {
      for (std::uint64_t z = 0; z < x; ++z) {
        if (map(z) == y) return std::pair{z, x};
      }
    }
    word |= bit;
  }
  return std::nullopt;
}

}  // namespace

bool is_lifting(const Rule& r, int n, int length_cap) {
  check_length(r, n, length_cap);
  const InducedMap map(r, n);
  std::vector<std::uint64_t> seen((map.size() + 63) / 64, 0);
  for (std::uint64_t x = 0; x < map.size(); ++x) {
    const std::uint64_t y = map(x);
    std::uint64_t& word = seen[y >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (y & 63);
    if (word & bit) return false;
    word |= bit;
  }
  return true;
}

namespace {

// Pair graph on (k-1)-bit word pairs. Node id = u | v << (k-1). An edge
// appends bits a, b to u, v when the two k-windows have equal output.
class PairGraph {
 public:
  explicit PairGraph(const Rule& r) : rule_(r), width_(r.k() - 1), words_(std::uint64_t{1} << width_) {}

  std::uint64_t node_count() const { return words_ * words_; }
  std::uint64_t node(std::uint64_t u, std::uint64_t v) const { return u | (v << width_); }
  std::uint64_t u_of(std::uint64_t id) const { return id & (words_ - 1); }
  std::uint64_t v_of(std::uint64_t id) const { return id >> width_; }

  template <typename Fn>
  void for_each_successor(std::uint64_t id, Fn&& fn) const {
    const std::uint64_t u = u_of(id), v = v_of(id);
    for (std::uint64_t a = 0; a < 2; ++a) {
      const std::uint64_t wu = u | (a << width_);
      const bool out = rule_(wu);
      for (std::uint64_t b = 0; b < 2; ++b) {
        const std::uint64_t wv = v | (b << width_);
        if (rule_(wv) == out) fn(node(wu >> 1, wv >> 1), a, b);
      }
    }
  }

  template <typename Fn>
  void for_each_predecessor(std::uint64_t id, Fn&& fn) const {
    const std::uint64_t u = u_of(id), v = v_of(id);
    for (std::uint64_t c = 0; c < 2; ++c) {
      const std::uint64_t wu = (u << 1) | c;
      const bool out = rule_(wu);
      for (std::uint64_t d = 0; d < 2; ++d) {
        const std::uint64_t wv = (v << 1) | d;
        if (rule_(wv) == out) fn(node(wu & (words_ - 1), wv & (words_ - 1)));
      }
    }
  }

  /// Removes nodes without a predecessor or successor until none remain;
  /// the survivors are exactly the nodes on bi-infinite paths.
  std::vector<bool> bi_infinite_core() const {
    const std::uint64_t count = node_count();
    std::vector<std::uint8_t> in_deg(count, 0), out_deg(count, 0);
    for (std::uint64_t id = 0; id < count; ++id) {
      for_each_successor(id, [&](std::uint64_t next, std::uint64_t, std::uint64_t) {
        ++out_deg[id];
        ++in_deg[next];
      });
    }
    std::vector<bool> alive(count, true);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t id = 0; id < count; ++id) {
      if (in_deg[id] == 0 || out_deg[id] == 0) stack.push_back(id);
    }
    while (!stack.empty()) {
      const std::uint64_t id = stack.back();
      stack.pop_back();
      if (!alive[id]) continue;
      alive[id] = false;
      for_each_successor(id, [&](std::uint64_t next, std::uint64_t, std::uint64_t) {
        if (alive[next] && --in_deg[next] == 0) stack.push_back(next);
      });
      for_each_predecessor(id, [&](std::uint64_t prev) {
        if (alive[prev] && --out_deg[prev] == 0) stack.push_back(prev);
      });
    }
    return alive;
  }

  /// Bits of the k-1 word of node `id` for configuration side `which`.
  std::uint64_t word(std::uint64_t id, int which) const { return which == 0 ? u_of(id) : v_of(id); }
  int width() const { return width_; }

 private:
  const Rule& rule_;
  int width_;
  std::uint64_t words_;
};

CollisionWitness build_witness(const PairGraph& g, const std::vector<bool>& alive, std::uint64_t start) {
  // Walk forward inside the core until a node repeats.
  std::vector<std::uint64_t> fwd{start};
  std::size_t fwd_cycle_at = 0;
  for (;;) {
    std::uint64_t next = 0;
    bool found = false;
    g.for_each_successor(fwd.back(), [&](std::uint64_t n, std::uint64_t, std::uint64_t) {
      if (!found && alive[n]) {
        next = n;
        found = true;
      }
    });
    auto it = std::find(fwd.begin(), fwd.end(), next);
    if (it != fwd.end()) {
      fwd_cycle_at = static_cast<std::size_t>(it - fwd.begin());
      break;
    }
    fwd.push_back(next);
  }
  // Walk backward likewise.
  std::vector<std::uint64_t> bwd{start};
  std::size_t bwd_cycle_at = 0;
  for (;;) {
    std::uint64_t prev = 0;
    bool found = false;
    g.for_each_predecessor(bwd.back(), [&](std::uint64_t p) {
      if (!found && alive[p]) {
        prev = p;
        found = true;
      }
    });
    auto it = std::find(bwd.begin(), bwd.end(), prev);
    if (it != bwd.end()) {
      bwd_cycle_at = static_cast<std::size_t>(it - bwd.begin());
      // The cycle closes from bwd.back() back to *it; record the closing node.
      bwd.push_back(prev);
      break;
    }
    bwd.push_back(prev);
  }

  // Forward-ordered node sequence: left cycle entry C0 = bwd[bwd_cycle_at],
  // around the left cycle back to C0, then down to start, then the forward
  // path to the right cycle entry, then around the right cycle.
  const std::uint64_t top = std::uint64_t{1} << (g.width() - 1);
  auto appended = [&](std::uint64_t to, int which) -> char {
    return (g.width() == 0) ? '0' : ((g.word(to, which) & top) ? '1' : '0');
  };

  CollisionWitness w;
  // bwd = [start, p1, p2, ..., p_m] where p_m == bwd[bwd_cycle_at] closes the
  // cycle bwd[bwd_cycle_at] <- ... <- p_{m-1}. In forward direction the left
  // cycle runs bwd[bwd_cycle_at] -> bwd[m-1] -> ... -> bwd[bwd_cycle_at].
  const std::size_t m = bwd.size() - 1;
  for (int which = 0; which < 2; ++which) {
    std::string left, middle, right;
    // Left cycle in forward order: from C0 = bwd[bwd_cycle_at] the next
    // nodes are bwd[m-1], ..., bwd[bwd_cycle_at].
    for (std::size_t i = m; i-- > bwd_cycle_at;) left += appended(bwd[i], which);
    // Path from C0 towards start: bwd[bwd_cycle_at-1], ..., bwd[0].
    for (std::size_t i = bwd_cycle_at; i-- > 0;) middle += appended(bwd[i], which);
    // Forward path from start to the right cycle entry fwd[fwd_cycle_at].
    for (std::size_t i = 1; i <= fwd_cycle_at; ++i) middle += appended(fwd[i], which);
    // Right cycle: fwd[fwd_cycle_at] -> ... -> fwd.back() -> fwd[fwd_cycle_at].
    for (std::size_t i = fwd_cycle_at + 1; i < fwd.size(); ++i) right += appended(fwd[i], which);
    right += appended(fwd[fwd_cycle_at], which);
    if (which == 0) {
      w.left_a = left, w.middle_a = middle, w.right_a = right;
    } else {
      w.left_b = left, w.middle_b = middle, w.right_b = right;
    }
  }
  return w;
}

std::string unroll(const std::string& left, const std::string& middle, const std::string& right, int reps) {
  std::string s;
  for (int i = 0; i < reps; ++i) s += left;
  s += middle;
  for (int i = 0; i < reps; ++i) s += right;
  return s;
}

}  // namespace

bool witness_replays(const Rule& r, const CollisionWitness& w) {
  const int k = r.k();
  if (w.left_a.empty()) {
    // Circular collision of length w.length.
    const int n = w.length;
    if (n < k || w.middle_a.size() != static_cast<std::size_t>(n) || w.middle_b.size() != w.middle_a.size()) {
      return false;
    }
    auto parse = [](const std::string& s) {
      std::uint64_t x = 0;
      for (std::size_t i = 0; i < s.size(); ++i) x |= static_cast<std::uint64_t>(s[i] == '1') << i;
      return x;
    };
    const std::uint64_t a = parse(w.middle_a), b = parse(w.middle_b);
    const InducedMap map(r, n);
    return a != b && map(a) == map(b);
  }
  if (w.left_a.size() != w.left_b.size() || w.right_a.size() != w.right_b.size() ||
      w.middle_a.size() != w.middle_b.size() || w.right_a.empty()) {
    return false;
  }
  const int reps = k + 2;
  const std::string a = unroll(w.left_a, w.middle_a, w.right_a, reps);
  const std::string b = unroll(w.left_b, w.middle_b, w.right_b, reps);
  if (a == b) return false;
  const std::uint64_t mask = low_mask(k);
  auto window = [&](const std::string& s, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < k; ++i) v |= static_cast<std::uint64_t>(s[at + static_cast<std::size_t>(i)] == '1') << i;
    return v & mask;
  };
  for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= a.size(); ++i) {
    if (r(window(a, i)) != r(window(b, i))) return false;
  }
  return true;
}

PropernessVerdict decide_proper(const Rule& r, const ProperOptions& options) {
  PropernessVerdict verdict;
  verdict.method = options.method;
  if (options.method == ProperMethod::FiniteScan) {
    for (int n = r.k(); n <= options.scan_to; ++n) {
      verdict.scanned_to = n;
      if (auto hit = find_collision(r, n)) {
        CollisionWitness w;
        w.length = n;
        w.middle_a = state_bits(hit->first, n);
        w.middle_b = state_bits(hit->second, n);
        verdict.witness = std::move(w);
        return verdict;
      }
    }
    verdict.proper = true;
    return verdict;
  }

  if (r.k() > options.max_diameter) {
    throw RuleError("diameter " + std::to_string(r.k()) + " exceeds the pair-graph cap " +
                    std::to_string(options.max_diameter));
  }
  if (r.k() == 1) {
    // x1 and its complement are both bijective.
    verdict.proper = true;
    return verdict;
  }
  const PairGraph graph(r);
  const std::vector<bool> alive = graph.bi_infinite_core();
  for (std::uint64_t id = 0; id < graph.node_count(); ++id) {
    if (alive[id] && graph.u_of(id) != graph.v_of(id)) {
      verdict.witness = build_witness(graph, alive, id);
      return verdict;
    }
  }
  verdict.proper = true;
  return verdict;
}

Rule compose(const Rule& g, const Rule& f) {
  const int kf = f.k(), kg = g.k();
  const int total = kf + kg - 1;
  if (total > kMaxArity) {
    throw RuleError("composition arity " + std::to_string(total) + " exceeds " + std::to_string(kMaxArity));
  }
  const std::uint64_t mask_f = low_mask(kf);
  Table out(total);
  auto words = out.words();
  const std::uint64_t size = out.size();
  const auto gw = g.table().words();
  auto g_at = [&](std::uint64_t y) { return (gw[y >> 6] >> (y & 63)) & 1U; };
  if (kf <= 16) {
    std::vector<std::uint8_t> fb(std::uint64_t{1} << kf);
    for (std::uint64_t u = 0; u < fb.size(); ++u) fb[u] = f(u) ? 1 : 0;
    for (std::uint64_t v = 0; v < size; ++v) {
      std::uint64_t y = 0;
      for (int j = 0; j < kg; ++j) y |= static_cast<std::uint64_t>(fb[(v >> j) & mask_f]) << j;
      words[v >> 6] |= g_at(y) << (v & 63);
    }
  } else {
    for (std::uint64_t v = 0; v < size; ++v) {
      std::uint64_t y = 0;
      for (int j = 0; j < kg; ++j) y |= static_cast<std::uint64_t>(f((v >> j) & mask_f)) << j;
      words[v >> 6] |= g_at(y) << (v & 63);
    }
  }
  return rule_from_table(out, g.shift() + f.shift());
}

Rule expand(const Rule& f, int stride) {
  if (stride < 1) throw RuleError("stride must be positive");
  if (stride == 1) return f;
  const long total = static_cast<long>(f.k() - 1) * stride + 1;
  if (total > kMaxArity) throw RuleError("expanded arity " + std::to_string(total) + " exceeds the cap");
  const int k = f.k();
  Table out(static_cast<int>(total));
  for (std::uint64_t v = 0; v < out.size(); ++v) {
    std::uint64_t w = 0;
    for (int i = 0; i < k; ++i) w |= ((v >> (i * stride)) & 1U) << i;
    out.set(v, f(w));
  }
  return rule_from_table(out, f.shift());
}

Rule power(const Rule& r, int m) {
  if (m < 1) throw RuleError("power must be positive");
  Rule h = r;
  for (int i = 1; i < m; ++i) h = compose(h, r);
  return h;
}

IterateOrder iterate_order(const Rule& r, int max_power, int arity_cap) {
  IterateOrder result;
  Rule h = r;
  for (int m = 1; m <= max_power; ++m) {
    if (is_pure_shift(h)) {
      result.status = IterateOrder::Status::Found;
      result.order = m;
      result.shift = h.shift();
      return result;
    }
    if (m == max_power) break;
    if (h.k() + r.k() - 1 > std::min(arity_cap, kMaxArity)) {
      result.status = IterateOrder::Status::Unknown;
      return result;
    }
    h = compose(h, r);
  }
  result.status = IterateOrder::Status::NotWithin;
  return result;
}

bool divisor_check(const Rule& r, int n, int m, int length_cap) {
  if (m < r.k() || m <= 0 || n % m != 0) {
    throw RuleError("divisor check needs m | n and m >= k (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  return !is_lifting(r, n, length_cap) || is_lifting(r, m, length_cap);
}

std::string to_json(const PropernessVerdict& v) {
  nlohmann::ordered_json j;
  j["decision"] = v.proper ? "proper" : "not-proper";
  j["method"] = v.method == ProperMethod::PairGraph ? "pair-graph" : "finite-scan";
  if (v.method == ProperMethod::FiniteScan) j["scanned_to"] = v.scanned_to;
  if (v.witness) {
    const auto& w = *v.witness;
    if (w.left_a.empty()) {
      j["witness"] = {{"length", w.length}, {"a", w.middle_a}, {"b", w.middle_b}};
    } else {
      j["witness"] = {
          {"a", {{"left", w.left_a}, {"middle", w.middle_a}, {"right", w.right_a}}},
          {"b", {{"left", w.left_b}, {"middle", w.middle_b}, {"right", w.right_b}}},
      };
    }
  }
  return j.dump();
}

}  // namespace liftforge
