// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails. `--long` enables the slow tiers (k = 13..18, DU at
// n = 11..12 for the scaled DU table, full catalog DU).

#include <bit>
#include <chrono>
#include <cstring>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "liftforge/catalog.hpp"
#include "liftforge/diffunif.hpp"
#include "liftforge/exprlang.hpp"
#include "liftforge/families.hpp"
#include "liftforge/landscape.hpp"
#include "liftforge/lifting.hpp"
#include "liftforge/search6.hpp"
#include "properties.hpp"

using namespace liftforge;

namespace {

struct Options {
  bool long_run = false;
  int jobs = 1;
  std::size_t closure_budget = 6000;
};

/// Collects mismatches for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      problems_.push_back(s.str());
    }
  }
  bool ok() const { return problems_.empty(); }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

void criterion1(Check& c, const Options& o) {
  const std::uint64_t counts[] = {4,         14,        72,        288,        1160,       4376,     16776,
                                  60646,     219344,    775930,    2724072,    9394778,    32291160, 109326972,
                                  368586536};
  const std::uint64_t classes[] = {1,        4,        18,        73,         290,        1100,    4194,
                                   15176,    54836,    194047,    681018,     2348878,    8072790, 27332464,
                                   92146634};
  const int to = o.long_run ? 18 : 12;
  for (int k = 4; k <= to; ++k) {
    EnumerateOptions eo;
    eo.jobs = o.jobs;
    const ConservedEnumeration e = enumerate_conserved(k, eo);
    c.equal(e.count, counts[k - 4], "count k=" + std::to_string(k));
    c.equal(e.classes, classes[k - 4], "classes k=" + std::to_string(k));
  }
}

void criterion2(Check& c, const Options& o) {
  const std::uint64_t mappings[] = {2, 2, 4, 32, 3076};
  for (int p = 1; p <= 5; ++p) c.equal(count_period_mappings(p), mappings[p - 1], "mappings p=" + std::to_string(p));
  c.equal(std::popcount(periodic_window_mask()), 44, "fixed windows");
  CollisionStats s2, s3;
  enumerate_periodic_assignments(2, &s2);
  enumerate_periodic_assignments(3, &s3);
  c.equal(s2.combinations, 787456U, "combinations");
  c.equal(s2.survivors, 4296U, "survivors s=2");
  c.equal(s3.survivors, 4564U, "survivors s=3");
  const std::size_t functions[] = {0, 20, 56, 56, 20, 0};
  const std::size_t class_counts[] = {0, 10, 30, 30, 10, 0};
  std::set<EquivClassId> pooled;
  std::size_t total = 0;
  SearchOptions so;
  so.jobs = o.jobs;
  for (int s = 1; s <= 6; ++s) {
    const auto found = complete_search(s, so);
    std::set<EquivClassId> local;
    for (const Involution6& inv : found) {
      local.insert(inv.class_id);
      pooled.insert(inv.class_id);
      c.expect(involution_rule_check(inv.rule, s), "involution re-check s=" + std::to_string(s));
    }
    c.equal(found.size(), functions[s - 1], "functions s=" + std::to_string(s));
    c.equal(local.size(), class_counts[s - 1], "classes s=" + std::to_string(s));
    total += found.size();
  }
  c.equal(pooled.size(), 40U, "pooled classes");
  c.equal(total, 152U, "constant-free functions");
}

void criterion3(Check& c, const Options& o) {
  struct Row {
    const char* expr;
    int from;
    std::vector<int> scaled;
  };
  const Row rows[] = {
      {"(0★10)", 4, {192, 224, 240, 216, 216, 216, 216, 216, 216}},
      {"(0★110)∘(0★10)", 5, {128, 144, 144, 136, 132, 132, 132, 132}},
      {"(0-★100)∘(0-★110)", 6, {192, 224, 224, 216, 240, 216, 216}},
      {"(00★10)∘(0★110)∘(0★10)", 6, {144, 128, 132, 120, 117, 117, 117}},
      {"(0★10)∘(0★110)∘(01★00)", 6, {80, 104, 84, 72, 72, 72, 72}},
  };
  const int to = o.long_run ? 12 : 10;
  DdtOptions d;
  d.jobs = o.jobs;
  for (const Row& r : rows) {
    const DuReport rep = du_profile(eval_expr(parse_expr(r.expr)), r.from, to, d);
    for (const DuEntry& e : rep.entries) {
      c.equal(e.scaled.to_string(), std::to_string(r.scaled[static_cast<std::size_t>(e.n - r.from)]),
              std::string(r.expr) + " n=" + std::to_string(e.n));
    }
  }
}

void criterion4(Check& c, const Options& o) {
  struct Row {
    const char* expr;
    std::uint64_t raw[7];
  };
  const Row rows[] = {
      {"(0-★100)∘(0-★110)", {24, 56, 112, 216, 480, 864, 1728}},
      {"(0★10)∘(0★110)∘(01★00)", {10, 26, 42, 72, 144, 288, 576}},
      {"(0★110)∘(0★10)∘(10★011)", {16, 24, 46, 96, 194, 388, 776}},
  };
  DdtOptions d;
  d.jobs = o.jobs;
  for (const Row& r : rows) {
    const DuReport rep = du_profile(eval_expr(parse_expr(r.expr)), 6, 12, d);
    for (const DuEntry& e : rep.entries) {
      c.equal(e.ddt.du_raw, r.raw[e.n - 6], std::string(r.expr) + " n=" + std::to_string(e.n));
    }
  }
  if (o.long_run) {
    CatalogVerifyOptions vo;
    vo.check_du = true;
    vo.du_to = kCatalogDuTo;
    vo.check_search6 = false;
    vo.lifting_to = 6;
    vo.jobs = o.jobs;
    const CatalogReport rep = verify_catalog(load_catalog(), vo);
    c.equal(rep.du_checked, kCatalogSize, "catalog rows with DU checked");
    for (const CatalogIssue& i : rep.issues) c.expect(false, "#" + std::to_string(i.index) + " " + i.what);
  }
}

void criterion5(Check& c, const Options& o) {
  const Catalog cat = load_catalog();
  CatalogVerifyOptions vo;
  vo.jobs = o.jobs;
  const CatalogReport rep = verify_catalog(cat, vo);
  c.equal(rep.entries, 120U, "entries");
  c.equal(rep.distinct_classes, 120U, "distinct classes");
  c.equal(rep.per_degree.at(3), 1U, "degree 3 entries");
  c.equal(rep.per_degree.at(4), 42U, "degree 4 entries");
  c.equal(rep.per_degree.at(5), 77U, "degree 5 entries");
  c.equal(rep.constant_free_functions, 472U, "constant-free functions");
  c.equal(rep.search6_contained, 40U, "search6 classes contained");
  for (const CatalogIssue& i : rep.issues) c.expect(false, "#" + std::to_string(i.index) + " " + i.what);
  c.expect(rep.ok(), "report not clean");
}

void criterion6(Check& c, const Options&) {
  const auto checks = check_identities();
  c.equal(checks.size(), 9U, "identity count");
  for (const IdentityCheck& i : checks) c.expect(i.holds, i.name + ": " + i.detail);
}

void criterion7(Check& c, const Options&) {
  for (const props::Outcome& p : props::run_all(20240601, 200)) {
    c.expect(p.cases >= 200, p.name + " ran only " + std::to_string(p.cases) + " cases");
    c.expect(p.failures == 0, p.name + ": " + std::to_string(p.failures) + " failures, first " + p.first_failure);
  }
}

void criterion8(Check& c, const Options&) {
  std::size_t params = 0;
  for (const SymmetricFamilyParams& p : enumerate_symmetric(4, 8, true)) {
    ++params;
    const Rule f = build_symmetric(p);
    const std::string tag = "k=" + std::to_string(p.k) + " j=" + std::to_string(p.j);
    c.expect(f.k() == p.k, tag + " diameter");
    c.expect(decide_proper(f).proper, tag + " not proper");
    c.expect(verify_order_claim(f, OrderClaim::power_of_two(p.r_exp)), tag + " order claim");
  }
  c.expect(params > 0, "no symmetric parameters");
  for (int r = 2; r <= 4; ++r) {
    const Rule f = build_chain({r});
    c.expect(decide_proper(f).proper, "chain r=" + std::to_string(r) + " not proper");
    c.expect(verify_order_claim(f, OrderClaim::exact(r)), "chain r=" + std::to_string(r) + " order claim");
  }
}

void criterion9(Check& c, const Options& o, std::string& note) {
  const Catalog cat = load_catalog();
  std::set<EquivClassId> inv;
  for (int s : {2, 3, 4, 5}) {
    for (const Involution6& r : complete_search(s)) inv.insert(r.class_id);
  }
  ClosureOptions co;
  co.max_diameter = 8;
  co.state_budget = o.closure_budget;
  co.jobs = o.jobs;
  const ClosureResult res = closure_search(co, catalog_classes(cat), {inv.begin(), inv.end()});
  c.expect(res.involution_classes_found >= 40,
           "closure found " + std::to_string(res.involution_classes_found) + " involution classes");
  c.expect(res.monotone(), "closure class counts not monotone in D");
  c.equal(res.levels.size(), 3U, "closure levels 6..8");
  std::ostringstream n;
  n << "closure D=8 " << (res.exhausted_budget ? "stopped at budget " : "fixpoint, ") << res.states << " states;";
  for (const ClosureLevel& l : res.levels) n << " D" << l.max_diameter << ':' << l.classes;
  n << " classes, involutions " << res.involution_classes_found << '/' << res.involution_classes_total;
  const Degree2Report d2 = degree2_probe(cat, o.jobs);
  c.equal(d2.degree2.size(), 0U, "degree-2 compositions");
  n << "; degree-2 probe " << d2.compositions << " compositions, " << d2.degree2.size() << " of degree 2";
  note = n.str();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--long")) {
      o.long_run = true;
    } else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) {
      o.jobs = std::max(1, std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--closure-budget") && i + 1 < argc) {
      o.closure_budget = static_cast<std::size_t>(std::atoll(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--long] [--jobs N] [--closure-budget N]\n";
      return 2;
    }
  }

  struct Item {
    int id;
    const char* title;
    void (*run)(Check&, const Options&);
  };
  const Item items[] = {
      {1, "conserved landscape counts", criterion1}, {2, "search6 replication", criterion2},
      {3, "scaled DU table", criterion3},              {4, "raw DU spot checks", criterion4},
      {5, "catalog structure", criterion5},          {6, "identity suite", criterion6},
      {7, "property suites", criterion7},            {8, "families", criterion8},
  };

  bool all = true;
  auto report = [&](int id, const char* title, const Check& c, double secs, const std::string& note) {
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << secs << " s)";
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << '\n';
    for (const std::string& p : c.problems()) std::cout << "    " << p << '\n';
    std::cout.flush();
    all = all && c.ok();
  };
  auto timed = [](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  for (const Item& it : items) {
    Check c;
    double secs = 0;
    try {
      secs = timed([&] { it.run(c, o); });
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    report(it.id, it.title, c, secs, o.long_run && (it.id == 1 || it.id == 3 || it.id == 4) ? "long tier" : "");
  }
  {
    Check c;
    std::string note;
    double secs = 0;
    try {
      secs = timed([&] { criterion9(c, o, note); });
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    report(9, "closure and degree-2 probe", c, secs, note);
  }
  return all ? 0 : 1;
}
