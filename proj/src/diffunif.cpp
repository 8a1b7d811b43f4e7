#include "liftforge/diffunif.hpp"

#include <algorithm>
#include <iomanip>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "liftforge/lifting.hpp"
#include "liftforge/parallel.hpp"

namespace liftforge {

Dyadic Dyadic::make(std::uint64_t num, int den_log2) {
  while (den_log2 > 0 && (num & 1U) == 0) {
    num >>= 1;
    --den_log2;
  }
  if (num == 0) den_log2 = 0;
  return Dyadic{num, den_log2};
}

std::string Dyadic::to_string() const {
  if (den_log2 == 0) return std::to_string(num);
  const std::uint64_t whole = num >> den_log2;
  std::uint64_t frac = num & ((std::uint64_t{1} << den_log2) - 1);
  // frac / 2^d has exactly d decimal digits: frac * 5^d / 10^d.
  std::string digits;
  for (int i = 0; i < den_log2; ++i) frac *= 5;
  digits = std::to_string(frac);
  digits.insert(0, static_cast<std::size_t>(den_log2) - digits.size(), '0');
  return std::to_string(whole) + "." + digits;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int d = std::max(a.den_log2, b.den_log2);
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num) << (d - a.den_log2);
  const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num) << (d - b.den_log2);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic scaled_du(std::uint64_t du_raw, int n) {
  if (n <= 9) return Dyadic::make(du_raw << (9 - n), 0);
  return Dyadic::make(du_raw, n - 9);
}

namespace {

std::vector<std::uint64_t> rotation_representatives(int n) {
  std::vector<std::uint64_t> reps;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < size; ++a) {
    std::uint64_t r = a;
    bool least = true;
    for (int i = 1; i < n && least; ++i) {
      r = rotate(r, n);
      if (r < a) least = false;
    }
    if (least) reps.push_back(a);
  }
  return reps;
}

}  // namespace

DdtMax ddt_max(const Rule& r, int n, const DdtOptions& options) {
  if (n < r.k()) throw RuleError("length " + std::to_string(n) + " is below the diameter " + std::to_string(r.k()));
  if (n > options.length_cap) {
    throw RuleError("length " + std::to_string(n) + " exceeds the DU cap " + std::to_string(options.length_cap));
  }
  const InducedMap map(r, n);
  const std::vector<std::uint32_t>& image = map.table();
  const std::uint64_t size = map.size();

  std::vector<std::uint64_t> inputs;
  if (options.necklace_reduction) {
    inputs = rotation_representatives(n);
  } else {
    for (std::uint64_t a = 1; a < size; ++a) inputs.push_back(a);
  }

  // Chunk the input differences; each chunk keeps its own count array.
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(inputs.size(), 4 * static_cast<std::size_t>(std::max(options.jobs, 1))));
  std::vector<DdtMax> best(chunks);
  parallel_for(chunks, options.jobs, [&](std::size_t c) {
    std::vector<std::uint32_t> counts(size);
    DdtMax local;
    for (std::size_t i = c; i < inputs.size(); i += chunks) {
      const std::uint64_t a = inputs[i];
      std::fill(counts.begin(), counts.end(), 0U);
      for (std::uint64_t x = 0; x < size; ++x) ++counts[image[x ^ a] ^ image[x]];
      for (std::uint64_t b = 0; b < size; ++b) {
        if (counts[b] > local.du_raw) local = DdtMax{counts[b], a, b};
      }
    }
    best[c] = local;
  });
  DdtMax out;
  for (const DdtMax& m : best) {
    if (m.du_raw > out.du_raw || (m.du_raw == out.du_raw && m.du_raw != 0 && m.a < out.a)) out = m;
  }
  return out;
}

DuReport du_profile(const Rule& r, int n_from, int n_to, const DdtOptions& options) {
  DuReport report;
  report.rule_id = to_hex(r);
  for (int n = std::max(n_from, r.k()); n <= n_to; ++n) {
    DuEntry e;
    e.n = n;
    e.ddt = ddt_max(r, n, options);
    e.scaled = scaled_du(e.ddt.du_raw, n);
    const Dyadic ratio = Dyadic::make(e.ddt.du_raw, n);
    if (report.entries.empty() || ratio > report.running_max) {
      report.running_max = ratio;
      report.running_max_at = n;
    }
    report.entries.push_back(e);
  }
  if (report.entries.size() >= 3) {
    const auto tail = report.entries.end() - 3;
    const Dyadic r0 = Dyadic::make(tail[0].ddt.du_raw, tail[0].n);
    report.stabilized = r0 == Dyadic::make(tail[1].ddt.du_raw, tail[1].n) &&
                        r0 == Dyadic::make(tail[2].ddt.du_raw, tail[2].n);
  }
  return report;
}

DuTable du_scaled_table(const std::vector<LiftExpr>& rows, int n_from, int n_to, const DdtOptions& options) {
  DuTable table;
  table.n_from = n_from;
  table.n_to = n_to;
  for (const LiftExpr& e : rows) {
    const Rule r = eval_expr(e);
    DuTableRow row;
    row.label = print_expr(e);
    row.k = r.k();
    row.degree = degree(r);
    for (int n = n_from; n <= n_to; ++n) {
      if (n < r.k()) {
        row.scaled.emplace_back();
        row.raw.emplace_back();
        continue;
      }
      const DdtMax m = ddt_max(r, n, options);
      row.scaled.emplace_back(scaled_du(m.du_raw, n));
      row.raw.emplace_back(m.du_raw);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string DuTable::to_text() const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"Function", "k", "deg"};
  for (int n = n_from; n <= n_to; ++n) header.push_back(n == n_from ? "n=" + std::to_string(n) : std::to_string(n));
  cells.push_back(header);
  for (const DuTableRow& row : rows) {
    std::vector<std::string> line{row.label, std::to_string(row.k), std::to_string(row.degree)};
    for (const auto& v : row.scaled) line.push_back(v ? v->to_string() : "-");
    cells.push_back(std::move(line));
  }
  // Column widths by display length (the star and circle are 3-byte UTF-8).
  auto display_width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], display_width(line[i]));
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const std::size_t pad = widths[i] - display_width(line[i]);
      if (i == 0) {
        out << line[i] << std::string(pad, ' ');
      } else {
        out << "  " << std::string(pad, ' ') << line[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string DuTable::to_csv() const {
  std::ostringstream out;
  out << "function,k,deg";
  for (int n = n_from; n <= n_to; ++n) out << ",n" << n;
  out << '\n';
  for (const DuTableRow& row : rows) {
    out << '"' << row.label << "\"," << row.k << ',' << row.degree;
    for (const auto& v : row.scaled) out << ',' << (v ? v->to_string() : "-");
    out << '\n';
  }
  return out.str();
}

std::string DuTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const DuTableRow& row : rows) {
    nlohmann::ordered_json r;
    r["function"] = row.label;
    r["k"] = row.k;
    r["deg"] = row.degree;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (int n = n_from; n <= n_to; ++n) {
      const auto i = static_cast<std::size_t>(n - n_from);
      if (row.raw[i]) values[std::to_string(n)] = {{"raw", *row.raw[i]}, {"scaled", row.scaled[i]->to_string()}};
    }
    r["du"] = std::move(values);
    j.push_back(std::move(r));
  }
  return j.dump();
}

}  // namespace liftforge
