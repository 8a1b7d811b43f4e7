#include "liftforge/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "liftforge/diffunif.hpp"
#include "liftforge/landscape.hpp"
#include "liftforge/lifting.hpp"
#include "liftforge/parallel.hpp"
#include "liftforge/search6.hpp"

#ifndef LIFTFORGE_CATALOG_PATH
#define LIFTFORGE_CATALOG_PATH "data/catalog.tsv"
#endif

namespace liftforge {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("LIFTFORGE_CATALOG"); env && *env) return env;
  return LIFTFORGE_CATALOG_PATH;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

}  // namespace

Catalog load_catalog(const std::string& path, bool check_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot open catalog " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  Catalog cat;
  cat.path = path;
  cat.content_hash = fnv1a64(bytes);
  if (check_hash && cat.content_hash != kCatalogContentHash) {
    throw CatalogError("catalog hash " + hex64(cat.content_hash) + " differs from pinned " + hex64(kCatalogContentHash));
  }

  std::istringstream lines(bytes);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, '\t');
    auto fail = [&](const std::string& what) {
      throw CatalogError(path + ":" + std::to_string(lineno) + ": " + what);
    };
    if (cols.size() < 3 || cols.size() > 4) fail("expected 3 or 4 tab-separated columns");
    CatalogEntry e{cols[0], LiftExpr(parse_landscape("0*10")), 0, std::nullopt, false, lineno};
    try {
      e.expr = parse_expr(cols[0]);
    } catch (const ExprSyntaxError& err) {
      fail(std::string("bad expression: ") + err.what());
    }
    try {
      std::size_t used = 0;
      e.stated_degree = std::stoi(cols[1], &used);
      if (used != cols[1].size()) fail("bad degree");
    } catch (const std::logic_error&) {
      fail("bad degree");
    }
    if (cols[2] != "-") {
      const std::vector<std::string> du = split(cols[2], ',');
      if (du.size() != 7) fail("expected seven DU values");
      std::array<std::uint64_t, 7> values{};
      for (std::size_t i = 0; i < 7; ++i) {
        try {
          std::size_t used = 0;
          values[i] = std::stoull(du[i], &used);
          if (used != du[i].size()) fail("bad DU value");
        } catch (const std::logic_error&) {
          fail("bad DU value");
        }
      }
      e.stated_du = values;
    }
    if (cols.size() == 4) {
      if (cols[3] == "highlight") {
        e.highlight = true;
      } else if (cols[3] != "-") {
        fail("last column must be 'highlight' or '-'");
      }
    }
    cat.entries.push_back(std::move(e));
  }
  if (cat.entries.size() != kCatalogSize) {
    throw CatalogError("catalog has " + std::to_string(cat.entries.size()) + " entries, expected " +
                       std::to_string(kCatalogSize));
  }
  return cat;
}

std::vector<IdentityCheck> check_identities() {
  std::vector<IdentityCheck> out;
  auto expr_rule = [](const std::string& text) { return eval_expr(parse_expr(text)); };

  const std::vector<std::pair<std::string, std::string>> listed = {
      {"x2 ^ x1*(x3^1)*x4", "1★01"},
      {"x2 ^ x1*x3*(x4^1)*(x5^1)", "1★100"},
      {"x2 ^ x1*(x3^1)*(x4^1)*x5", "1★001"},
      {"x2 ^ x1*(x4*(x3^1) ^ (x4^1)*x5*(x2^x3^1))", "(1★001)∘(1★01)"},
      {"x3 ^ x1*x2*(x4^1)*x5", "11★01"},
      {"x3 ^ x1*(x2^1)*x4*(x5^1)", "10★10"},
  };
  for (const auto& [anf, expr] : listed) {
    IdentityCheck c;
    c.name = anf + " = " + expr;
    const Rule lhs = rule_from_table(parse_anf_text(anf));
    const Rule rhs = expr_rule(expr);
    c.holds = lhs == rhs;
    c.detail = to_hex(lhs) + " vs " + to_hex(rhs);
    out.push_back(std::move(c));
  }

  const std::vector<std::pair<std::vector<std::string>, std::string>> sets = {
      {{"0★110", "10★10"}, "(0★110)∘(10★10)"},
      {{"0★10", "0--★10", "0----★10"}, "(0-1-1★10)∘(0-1★10)∘(0★10)"},
  };
  for (const auto& [members, expr] : sets) {
    IdentityCheck c;
    std::vector<Landscape> ls;
    std::string name;
    for (const std::string& m : members) {
      ls.push_back(parse_landscape(m));
      name += (name.empty() ? "" : " | ") + m;
    }
    c.name = name + " = " + expr;
    const Rule lhs = compile_set(ls);
    const Rule rhs = expr_rule(expr);
    c.holds = lhs == rhs;
    c.detail = to_hex(lhs) + " vs " + to_hex(rhs);
    out.push_back(std::move(c));
  }

  {
    // g(f(x1..x4), ..., f(x5..x8)) trims to a diameter-5 rule.
    IdentityCheck c;
    const Rule f = rule_from_table(parse_anf_text("x2 ^ x1*(x3^1)*x4"));
    const Rule g = rule_from_table(parse_anf_text("x2 ^ x1*(x3^1)*(x4^1)*x5"));
    const Rule h = compose(g, f);
    const Rule unshifted = rule_from_table(parse_anf_text("x3 ^ x2*(x5*(x4^1) ^ (x5^1)*x6*(x3^x4^1))", 8));
    const Rule printed = rule_from_table(parse_anf_text("x2 ^ x1*(x4*(x3^1) ^ (x4^1)*x5*(x2^x3^1))"));
    c.name = "g∘f for f = 1★01, g = 1★001 has diameter 5";
    c.holds = h.k() == 5 && h == printed && h == unshifted;
    c.detail = to_anf(h).to_string();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<EquivClassId> catalog_classes(const Catalog& catalog) {
  std::set<EquivClassId> ids;
  for (const CatalogEntry& e : catalog.entries) ids.insert(canonicalize(eval_expr(e.expr)));
  return {ids.begin(), ids.end()};
}

bool CatalogReport::ok() const {
  if (!issues.empty() || entries != kCatalogSize) return false;
  for (const IdentityCheck& c : identities) {
    if (!c.holds) return false;
  }
  return search6_contained == search6_classes;
}

std::string CatalogReport::to_text() const {
  std::ostringstream out;
  out << "entries=" << entries << " classes=" << distinct_classes << " constant_free=" << constant_free_functions
      << '\n';
  out << "per_degree";
  for (const auto& [d, c] : per_degree) out << ' ' << d << ':' << c;
  out << '\n';
  if (du_checked) out << "du_checked=" << du_checked << " stabilized=" << stabilized << '\n';
  if (search6_classes) out << "search6_contained=" << search6_contained << '/' << search6_classes << '\n';
  for (const IdentityCheck& c : identities) out << (c.holds ? "ok   " : "FAIL ") << c.name << '\n';
  for (const CatalogIssue& i : issues) out << "issue #" << i.index << ' ' << i.expr << ": " << i.what << '\n';
  out << (ok() ? "catalog verified" : "catalog MISMATCH") << '\n';
  return out.str();
}

std::string CatalogReport::to_json() const {
  nlohmann::ordered_json j;
  j["entries"] = entries;
  j["classes"] = distinct_classes;
  j["constant_free"] = constant_free_functions;
  nlohmann::ordered_json deg = nlohmann::ordered_json::object();
  for (const auto& [d, c] : per_degree) deg[std::to_string(d)] = c;
  j["per_degree"] = deg;
  j["du_checked"] = du_checked;
  j["stabilized"] = stabilized;
  j["search6_classes"] = search6_classes;
  j["search6_contained"] = search6_contained;
  j["identities"] = nlohmann::ordered_json::array();
  for (const IdentityCheck& c : identities) j["identities"].push_back({{"name", c.name}, {"holds", c.holds}});
  j["issues"] = nlohmann::ordered_json::array();
  for (const CatalogIssue& i : issues) {
    j["issues"].push_back({{"index", i.index}, {"expr", i.expr}, {"what", i.what}});
  }
  j["ok"] = ok();
  return j.dump();
}

CatalogReport verify_catalog(const Catalog& catalog, const CatalogVerifyOptions& options) {
  CatalogReport report;
  report.entries = catalog.entries.size();

  struct EntryResult {
    std::optional<Rule> rule;
    std::vector<std::string> problems;
    bool du_checked = false;
    bool stabilized = false;
  };
  std::vector<EntryResult> results(catalog.entries.size());
  parallel_for(catalog.entries.size(), options.jobs, [&](std::size_t i) {
    const CatalogEntry& e = catalog.entries[i];
    EntryResult& res = results[i];
    Rule r = eval_expr(e.expr);
    res.rule = r;
    if (r.k() != 6) res.problems.push_back("diameter " + std::to_string(r.k()) + ", expected 6");
    const int deg = degree(r);
    if (deg != e.stated_degree) {
      res.problems.push_back("degree " + std::to_string(deg) + ", stated " + std::to_string(e.stated_degree));
    }
    if (!is_balanced(r)) res.problems.push_back("not balanced");
    const PropernessVerdict v = decide_proper(r);
    if (!v.proper) res.problems.push_back("not proper");
    for (int n = std::max(options.lifting_from, r.k()); n <= options.lifting_to; ++n) {
      if (!is_lifting(r, n)) res.problems.push_back("not bijective at n=" + std::to_string(n));
    }
    if (options.check_du && e.stated_du) {
      const int to = std::min(options.du_to, kCatalogDuTo);
      const DuReport du = du_profile(r, kCatalogDuFrom, to);
      res.du_checked = true;
      res.stabilized = du.stabilized;
      for (const DuEntry& d : du.entries) {
        const std::uint64_t stated = (*e.stated_du)[static_cast<std::size_t>(d.n - kCatalogDuFrom)];
        if (d.ddt.du_raw != stated) {
          res.problems.push_back("DU at n=" + std::to_string(d.n) + " is " + std::to_string(d.ddt.du_raw) +
                                 ", stated " + std::to_string(stated));
        }
      }
    }
  });

  std::map<EquivClassId, std::size_t> first_seen;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const EntryResult& res = results[i];
    const CatalogEntry& e = catalog.entries[i];
    ++report.per_degree[e.stated_degree];
    for (const std::string& p : res.problems) report.issues.push_back({i, e.text, p});
    if (res.du_checked) ++report.du_checked;
    if (res.stabilized) ++report.stabilized;
    const EquivClassId id = canonicalize(*res.rule);
    const auto [it, inserted] = first_seen.emplace(id, i);
    if (!inserted) {
      report.issues.push_back({i, e.text, "equivalent to entry #" + std::to_string(it->second)});
      continue;
    }
    for (const Rule& o : orbit(*res.rule)) {
      if (!o(0)) ++report.constant_free_functions;
    }
  }
  report.distinct_classes = first_seen.size();

  if (options.check_search6) {
    std::set<EquivClassId> inv;
    SearchOptions so;
    so.jobs = options.jobs;
    for (int s : {2, 3}) {
      for (const Involution6& r : complete_search(s, so)) inv.insert(r.class_id);
    }
    report.search6_classes = inv.size();
    for (const EquivClassId& id : inv) {
      if (first_seen.count(id)) {
        ++report.search6_contained;
      } else {
        report.issues.push_back({catalog.entries.size(), "", "involution class " + to_hex(id) + " missing"});
      }
    }
  }
  report.identities = check_identities();
  return report;
}

bool ClosureResult::monotone() const {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].classes < levels[i - 1].classes) return false;
  }
  return true;
}

std::string ClosureResult::to_text() const {
  std::ostringstream out;
  out << "closure generators=" << generators << " (lower bound)\n";
  for (const ClosureLevel& l : levels) {
    out << "D=" << l.max_diameter << " generations=" << l.generations << " states=" << l.states
        << " classes=" << l.classes << (l.exhausted_budget ? " (budget exhausted, partial)" : "") << '\n';
  }
  out << "classes=" << classes.size();
  for (const auto& [k, c] : per_diameter) out << " k" << k << ':' << c;
  out << '\n';
  out << "diameter6 in_catalog=" << diameter6_in_catalog << " outside_catalog=" << diameter6_outside_catalog << '\n';
  if (involution_classes_total) {
    out << "involution_classes=" << involution_classes_found << '/' << involution_classes_total << '\n';
  }
  if (improper) out << "IMPROPER classes=" << improper << '\n';
  return out.str();
}

std::string ClosureResult::to_json() const {
  nlohmann::ordered_json j;
  j["max_diameter"] = max_diameter;
  j["generators"] = generators;
  j["states"] = states;
  j["exhausted_budget"] = exhausted_budget;
  j["levels"] = nlohmann::ordered_json::array();
  for (const ClosureLevel& l : levels) {
    j["levels"].push_back({{"max_diameter", l.max_diameter},
                           {"generations", l.generations},
                           {"states", l.states},
                           {"classes", l.classes},
                           {"exhausted_budget", l.exhausted_budget}});
  }
  j["classes"] = classes.size();
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto& [k, c] : per_diameter) per[std::to_string(k)] = c;
  j["per_diameter"] = per;
  j["diameter6_in_catalog"] = diameter6_in_catalog;
  j["diameter6_outside_catalog"] = diameter6_outside_catalog;
  j["involution_classes_found"] = involution_classes_found;
  j["involution_classes_total"] = involution_classes_total;
  j["improper"] = improper;
  return j.dump();
}

namespace {

bool smaller_first(const EquivClassId& a, const EquivClassId& b) {
  if (a.k() != b.k()) return a.k() < b.k();
  return a < b;
}

}  // namespace

ClosureResult closure_search(const ClosureOptions& options, const std::vector<EquivClassId>& catalog,
                             const std::vector<EquivClassId>& involutions) {
  if (options.max_diameter < 6 || options.max_diameter > 11) {
    throw std::invalid_argument("intermediate diameter cap must lie in 6..11");
  }
  ClosureResult result;
  result.max_diameter = options.max_diameter;

  std::vector<Rule> generators;
  for (const Landscape& l : conserved_pool(4, 6)) generators.push_back(compile(l));
  result.generators = generators.size();

  std::set<EquivClassId> seen;
  std::set<EquivClassId> collected;  // diameter <= 6, degree >= 2
  auto admit = [&](const EquivClassId& id) {
    if (!seen.insert(id).second) return false;
    if (id.k() <= 6 && degree(rule_from_table(id.canon)) >= 2) collected.insert(id);
    return true;
  };
  for (const Rule& g : generators) admit(canonicalize(g));

  for (int cap = 6; cap <= options.max_diameter && !result.exhausted_budget; ++cap) {
    ClosureLevel level;
    level.max_diameter = cap;
    // Everything found so far is re-expanded under the larger cap.
    std::vector<EquivClassId> frontier_ids(seen.begin(), seen.end());
    while (!frontier_ids.empty() && !result.exhausted_budget) {
      ++level.generations;
      std::sort(frontier_ids.begin(), frontier_ids.end(), smaller_first);
      std::vector<EquivClassId> next;
      // Chunked so a budget stop never waits for a whole generation.
      constexpr std::size_t kChunk = 256;
      for (std::size_t base = 0; base < frontier_ids.size() && !result.exhausted_budget; base += kChunk) {
        const std::size_t count = std::min(kChunk, frontier_ids.size() - base);
        std::vector<std::vector<EquivClassId>> found(count);
        parallel_for(count, options.jobs, [&](std::size_t i) {
          const Rule h = rule_from_table(frontier_ids[base + i].canon);
          std::set<EquivClassId> local;
          for (const Rule& g : generators) {
            for (const Rule& r : {compose(g, h), compose(h, g)}) {
              if (r.k() <= cap) local.insert(canonicalize(r));
            }
          }
          found[i].assign(local.begin(), local.end());
        });
        for (const auto& ids : found) {
          for (const EquivClassId& id : ids) {
            if (seen.count(id)) continue;
            if (seen.size() >= options.state_budget) {
              result.exhausted_budget = true;
              break;
            }
            admit(id);
            next.push_back(id);
          }
          if (result.exhausted_budget) break;
        }
      }
      frontier_ids = std::move(next);
    }
    level.states = seen.size();
    level.classes = collected.size();
    level.exhausted_budget = result.exhausted_budget;
    result.levels.push_back(level);
  }
  result.states = seen.size();

  const std::set<EquivClassId> catalog_set(catalog.begin(), catalog.end());
  const std::set<EquivClassId> involution_set(involutions.begin(), involutions.end());
  result.classes.assign(collected.begin(), collected.end());
  for (const EquivClassId& id : result.classes) {
    ++result.per_diameter[id.k()];
    if (id.k() == 6) {
      if (catalog_set.count(id)) {
        ++result.diameter6_in_catalog;
      } else {
        ++result.diameter6_outside_catalog;
      }
    }
    if (involution_set.count(id)) ++result.involution_classes_found;
  }
  result.involution_classes_total = involution_set.size();
  if (options.verify_proper) {
    std::vector<char> bad(result.classes.size(), 0);
    parallel_for(result.classes.size(), options.jobs, [&](std::size_t i) {
      bad[i] = !decide_proper(rule_from_table(result.classes[i].canon)).proper;
    });
    for (char b : bad) result.improper += b != 0;
  }
  return result;
}

std::string Degree2Report::to_text() const {
  std::ostringstream out;
  out << "# universe: " << universe << '\n';
  out << "universe_rules=" << universe_rules << " compositions=" << compositions << '\n';
  out << "per_degree";
  for (const auto& [d, c] : per_degree) out << ' ' << d << ':' << c;
  out << '\n';
  out << "degree2=" << degree2.size() << '\n';
  for (const std::string& s : degree2) out << "  " << s << '\n';
  return out.str();
}

std::string Degree2Report::to_json() const {
  nlohmann::ordered_json j;
  j["universe"] = universe;
  j["universe_rules"] = universe_rules;
  j["compositions"] = compositions;
  nlohmann::ordered_json deg = nlohmann::ordered_json::object();
  for (const auto& [d, c] : per_degree) deg[std::to_string(d)] = c;
  j["per_degree"] = deg;
  j["degree2"] = degree2;
  return j.dump();
}

Degree2Report degree2_probe(const Catalog& catalog, int jobs) {
  Degree2Report report;
  report.universe =
      "proper liftings of diameter <= 6 at hand: the catalog classes (all orbit members) and the conserved "
      "landscapes of diameter <= 6; 'degree <= 6' read as diameter <= 6";

  std::set<Table> universe_tables;
  std::set<EquivClassId> class_ids;
  for (const CatalogEntry& e : catalog.entries) {
    for (const Rule& o : orbit(eval_expr(e.expr))) universe_tables.insert(o.table());
  }
  for (const Landscape& l : conserved_pool(4, 6)) {
    for (const Rule& o : orbit(compile(l))) universe_tables.insert(o.table());
  }
  std::vector<Rule> universe;
  for (const Table& t : universe_tables) {
    universe.push_back(rule_from_table(t));
    class_ids.insert(canonicalize(universe.back()));
  }
  std::vector<Rule> reps;
  for (const EquivClassId& id : class_ids) reps.push_back(rule_from_table(id.canon));
  report.universe_rules = universe.size();

  struct Local {
    std::map<int, std::size_t> per_degree;
    std::vector<std::string> degree2;
  };
  std::vector<Local> locals(reps.size());
  parallel_for(reps.size(), jobs, [&](std::size_t i) {
    for (const Rule& f : universe) {
      const int d = degree(compose(reps[i], f));
      ++locals[i].per_degree[d];
      if (d == 2) locals[i].degree2.push_back(to_hex(reps[i]) + " o " + to_hex(f));
    }
  });
  for (const Local& l : locals) {
    for (const auto& [d, c] : l.per_degree) {
      report.per_degree[d] += c;
      report.compositions += c;
    }
    report.degree2.insert(report.degree2.end(), l.degree2.begin(), l.degree2.end());
  }
  return report;
}

}  // namespace liftforge
