#include "liftforge/search6.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <json.hpp>

#include "liftforge/parallel.hpp"

namespace liftforge {

namespace {

int moebius_mu(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t double_factorial_odd(std::uint64_t i) {  // (2i-1)!!
  std::uint64_t r = 1;
  for (std::uint64_t m = 1; m + 1 <= 2 * i; m += 2) r *= m;
  return r;
}

std::uint32_t rotate_word(std::uint32_t u, int t, int p) {
  // y_i = u_{(i+t) mod p}
  t = ((t % p) + p) % p;
  const std::uint32_t mask = (1U << p) - 1;
  return ((u >> t) | (u << (p - t))) & mask;
}

// 6-bit window of the p-periodic word u read at F-position i for offset s:
// bit j holds u_{(i-s+1+j) mod p}.
std::uint32_t window_at(std::uint32_t u, int p, int i, int s) {
  std::uint32_t w = 0;
  for (int j = 0; j < 6; ++j) {
    const int pos = (((i - s + 1 + j) % p) + p) % p;
    w |= ((u >> pos) & 1U) << j;
  }
  return w;
}

// Records F(u) = y on the windows of u. Returns false on an internal clash.
bool record(WindowMap& m, std::uint32_t u, std::uint32_t y, int p, int s) {
  for (int i = 0; i < p; ++i) {
    const std::uint32_t w = window_at(u, p, i, s);
    const std::uint64_t bit = std::uint64_t{1} << w;
    const bool value = (y >> i) & 1U;
    if (m.defined & bit) {
      if (((m.values & bit) != 0) != value) return false;
      continue;
    }
    m.defined |= bit;
    if (value) m.values |= bit;
  }
  return true;
}

}  // namespace

std::uint64_t count_primitive_sequences(int p) {
  if (p < 1 || p > 62) throw std::invalid_argument("period out of range");
  std::int64_t total = 0;
  for (int d = 1; d <= p; ++d) {
    if (p % d == 0) total += moebius_mu(d) * (std::int64_t{1} << (p / d));
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_period_mappings(int p) {
  const std::uint64_t r = count_primitive_sequences(p) / static_cast<std::uint64_t>(p);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; 2 * i <= r; ++i) {
    std::uint64_t term = binomial(r, 2 * i) * double_factorial_odd(i);
    for (std::uint64_t j = 0; j < i; ++j) term *= static_cast<std::uint64_t>(p);
    if (p % 2 == 0) term <<= (r - 2 * i);
    total += term;
  }
  return total;
}

std::vector<NecklaceClass> necklace_classes(int p) {
  std::vector<NecklaceClass> out;
  const std::uint32_t size = 1U << p;
  for (std::uint32_t u = 0; u < size; ++u) {
    std::vector<std::uint32_t> rots;
    bool least = true, primitive = true;
    for (int t = 1; t < p; ++t) {
      const std::uint32_t r = rotate_word(u, t, p);
      if (r < u) least = false;
      if (r == u) primitive = false;
    }
    if (!least || !primitive) continue;
    NecklaceClass c;
    c.p = p;
    c.representative = u;
    for (int t = 0; t < p; ++t) c.members.push_back(rotate_word(u, t, p));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PeriodMapping> period_mappings(int p, int s, bool zero_fixed) {
  const std::vector<NecklaceClass> classes = necklace_classes(p);
  const int r = static_cast<int>(classes.size());
  std::vector<PeriodMapping> out;
  PeriodMapping current;
  current.p = p;
  current.partner.assign(static_cast<std::size_t>(r), -1);
  current.rotation.assign(static_cast<std::size_t>(r), 0);

  auto emit = [&] {
    PeriodMapping m = current;
    for (int c = 0; c < r; ++c) {
      const int d = m.partner[static_cast<std::size_t>(c)];
      const std::uint32_t y = rotate_word(classes[static_cast<std::size_t>(d)].representative,
                                          m.rotation[static_cast<std::size_t>(c)], p);
      if (!record(m.windows, classes[static_cast<std::size_t>(c)].representative, y, p, s)) {
        throw std::logic_error("inconsistent period mapping");
      }
    }
    if (zero_fixed && (m.windows.defined & 1U) && (m.windows.values & 1U)) return;
    out.push_back(std::move(m));
  };

  auto recurse = [&](auto&& self, int c) -> void {
    while (c < r && current.partner[static_cast<std::size_t>(c)] >= 0) ++c;
    if (c == r) {
      emit();
      return;
    }
    const auto cu = static_cast<std::size_t>(c);
    // Self-map: F(x) = x, or x rotated by half a period for even p.
    for (int t = 0; t < p; t += (p % 2 == 0 ? p / 2 : p)) {
      current.partner[cu] = c;
      current.rotation[cu] = t;
      self(self, c + 1);
    }
    current.partner[cu] = -1;
    current.rotation[cu] = 0;
    for (int d = c + 1; d < r; ++d) {
      const auto du = static_cast<std::size_t>(d);
      if (current.partner[du] >= 0) continue;
      for (int t = 0; t < p; ++t) {
        current.partner[cu] = d;
        current.rotation[cu] = t;
        current.partner[du] = c;
        current.rotation[du] = (p - t) % p;
        self(self, c + 1);
      }
      current.partner[du] = -1;
      current.rotation[du] = 0;
    }
    current.partner[cu] = -1;
    current.rotation[cu] = 0;
  };
  recurse(recurse, 0);
  return out;
}

std::uint64_t periodic_window_mask() {
  std::uint64_t mask = 0;
  for (std::uint32_t w = 0; w < 64; ++w) {
    for (int j = 1; j <= 3; ++j) {
      const std::uint32_t low = w & ((1U << j) - 1);
      const std::uint32_t high = w >> (6 - j);
      if (low == high) {
        mask |= std::uint64_t{1} << w;
        break;
      }
    }
  }
  return mask;
}

std::vector<PeriodicAssignment> enumerate_periodic_assignments(int s, CollisionStats* stats, bool zero_fixed) {
  std::array<std::vector<PeriodMapping>, 6> options;
  for (int p = 1; p <= 5; ++p) options[static_cast<std::size_t>(p)] = period_mappings(p, s, zero_fixed);

  std::vector<PeriodicAssignment> out;
  CollisionStats local;
  std::array<int, 6> idx{};
  auto recurse = [&](auto&& self, int p) -> void {
    if (p == 6) {
      ++local.combinations;
      for (int a = 1; a <= 5; ++a) {
        for (int b = a + 1; b <= 5; ++b) {
          const auto& ma = options[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])].windows;
          const auto& mb = options[static_cast<std::size_t>(b)][static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])].windows;
          if (!ma.compatible(mb)) {
            ++local.first_collision[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            return;
          }
        }
      }
      ++local.survivors;
      PeriodicAssignment pa;
      for (int q = 1; q <= 5; ++q) {
        const auto qi = static_cast<std::size_t>(q);
        pa.choice[qi - 1] = idx[qi];
        pa.windows = pa.windows.merged(options[qi][static_cast<std::size_t>(idx[qi])].windows);
      }
      out.push_back(pa);
      return;
    }
    const auto pu = static_cast<std::size_t>(p);
    for (std::size_t i = 0; i < options[pu].size(); ++i) {
      idx[pu] = static_cast<int>(i);
      self(self, p + 1);
    }
  };
  recurse(recurse, 1);
  if (stats) *stats = local;
  return out;
}

namespace {

// Backtracking over the 64 window values with propagation of the identity
// f(f(w_0), ..., f(w_5)) = x_{2s-1}, where w_j = bits j..j+5 of an 11-bit x.
class InvolutionSolver {
 public:
  explicit InvolutionSolver(int s) : target_bit_(2 * s - 2) {
    for (std::uint32_t x = 0; x < 2048; ++x) {
      for (int j = 0; j < 6; ++j) occurrences_[(x >> j) & 63].push_back(static_cast<std::uint16_t>(x));
    }
  }

  template <typename Sink>
  void solve(const WindowMap& seed, std::uint64_t& nodes, Sink&& sink) {
    value_.fill(-1);
    std::fill(pending_.begin(), pending_.end(), static_cast<std::uint8_t>(6));
    trail_.clear();
    queue_.clear();
    bool ok = true;
    for (std::uint32_t w = 0; w < 64 && ok; ++w) {
      if ((seed.defined >> w) & 1U) ok = assign(w, ((seed.values >> w) & 1U) != 0);
    }
    if (!ok) return;
    search(nodes, sink);
  }

 private:
  bool assign(std::uint32_t w, bool v) {
    if (value_[w] >= 0) return value_[w] == static_cast<std::int8_t>(v);
    value_[w] = static_cast<std::int8_t>(v);
    trail_.push_back(w);
    for (std::uint16_t x : occurrences_[w]) {
      if (--pending_[x] == 0) queue_.push_back(x);
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const std::uint16_t x = queue_.back();
      queue_.pop_back();
      std::uint32_t y = 0;
      for (int j = 0; j < 6; ++j) y |= static_cast<std::uint32_t>(value_[(x >> j) & 63]) << j;
      if (!assign(y, ((x >> target_bit_) & 1U) != 0)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t w = trail_.back();
      trail_.pop_back();
      for (std::uint16_t x : occurrences_[w]) ++pending_[x];
      value_[w] = -1;
    }
  }

  template <typename Sink>
  void search(std::uint64_t& nodes, Sink&& sink) {
    ++nodes;
    if (!propagate()) return;
    std::uint32_t free_window = 64;
    for (std::uint32_t w = 0; w < 64; ++w) {
      if (value_[w] < 0) {
        free_window = w;
        break;
      }
    }
    if (free_window == 64) {
      Table t(6);
      for (std::uint32_t w = 0; w < 64; ++w) t.set(w, value_[w] == 1);
      sink(t);
      return;
    }
    for (int v = 0; v < 2; ++v) {
      const std::size_t mark = trail_.size();
      assign(free_window, v == 1);
      search(nodes, sink);
      undo(mark);
    }
  }

  int target_bit_;
  std::array<std::vector<std::uint16_t>, 64> occurrences_;
  std::array<std::int8_t, 64> value_{};
  std::array<std::uint8_t, 2048> pending_{};
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint16_t> queue_;
};

}  // namespace

bool involution_table_check(const Table& t, int s) {
  if (t.arity() != 6 || s < 1 || s > 6) return false;
  for (std::uint32_t x = 0; x < 2048; ++x) {
    std::uint32_t y = 0;
    for (int j = 0; j < 6; ++j) y |= static_cast<std::uint32_t>(t.get((x >> j) & 63)) << j;
    if (t.get(y) != (((x >> (2 * s - 2)) & 1U) != 0)) return false;
  }
  return true;
}

bool involution_rule_check(const Rule& r, int s) { return r.k() == 6 && involution_table_check(r.table(), s); }

std::vector<Involution6> complete_search(int s, const SearchOptions& options, SearchStats* stats) {
  if (s < 1 || s > 6) throw std::invalid_argument("offset s must lie in 1..6");
  std::vector<WindowMap> seeds;
  if (options.periodic_seed) {
    for (const PeriodicAssignment& a : enumerate_periodic_assignments(s, nullptr, options.zero_fixed)) {
      seeds.push_back(a.windows);
    }
  } else {
    seeds.push_back(options.zero_fixed ? WindowMap{1, 0} : WindowMap{});
  }

  struct Shard {
    std::vector<Table> tables;
    std::uint64_t nodes = 0;
  };
  std::vector<Shard> shards(seeds.size());
  parallel_for(seeds.size(), options.jobs, [&](std::size_t i) {
    InvolutionSolver solver(s);
    solver.solve(seeds[i], shards[i].nodes, [&](const Table& t) { shards[i].tables.push_back(t); });
  });

  SearchStats local;
  local.assignments = seeds.size();
  std::set<Table> unique;
  for (Shard& sh : shards) {
    local.nodes += sh.nodes;
    for (Table& t : sh.tables) {
      ++local.solutions;
      if (t.depends_on(0) && t.depends_on(5)) unique.insert(std::move(t));
    }
  }
  std::vector<Involution6> out;
  for (const Table& t : unique) {
    Rule r = rule_from_table(t);
    EquivClassId id = canonicalize(r);
    out.push_back(Involution6{std::move(r), s, std::move(id)});
  }
  local.tight = out.size();
  if (stats) *stats = local;
  return out;
}

std::string to_json_line(const Involution6& inv) {
  nlohmann::ordered_json j;
  j["s"] = inv.s;
  j["rule"] = to_hex(inv.rule);
  j["class"] = to_hex(inv.class_id);
  j["anf"] = to_anf(inv.rule).to_string();
  return j.dump();
}

}  // namespace liftforge
