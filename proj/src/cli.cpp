#include "liftforge/cli.hpp"

#include <bit>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftforge/catalog.hpp"
#include "liftforge/diffunif.hpp"
#include "liftforge/exprlang.hpp"
#include "liftforge/families.hpp"
#include "liftforge/landscape.hpp"
#include "liftforge/lifting.hpp"
#include "liftforge/search6.hpp"

namespace liftforge {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int jobs = 0;
  int n_cap = kDefaultDuCap;
  std::string format = "text";
  bool long_run = false;
  bool ascii = false;
};

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("LIFTFORGE_JOBS"); env && *env) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string("LIFTFORGE_JOBS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

json rule_json(const Rule& r) {
  json j;
  j["k"] = r.k();
  j["shift"] = r.shift();
  j["rule"] = to_hex(r);
  j["anf"] = to_anf(r).to_string();
  j["degree"] = degree(r);
  j["balanced"] = is_balanced(r);
  j["class"] = to_hex(canonicalize(r));
  return j;
}

void print_rule_text(std::ostream& out, const Rule& r) {
  out << "k=" << r.k() << " shift=" << r.shift() << " degree=" << degree(r)
      << " balanced=" << (is_balanced(r) ? "yes" : "no") << '\n';
  out << "rule  " << to_hex(r) << '\n';
  out << "anf   " << to_anf(r).to_string() << '\n';
  out << "class " << to_hex(canonicalize(r)) << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

bool looks_like_anf(const std::string& text) {
  return text.find('x') != std::string::npos;
}

}  // namespace

Rule parse_rule_arg(const std::string& text) {
  if (text.find(':') != std::string::npos) return rule_from_hex(text);
  if (looks_like_anf(text)) return rule_from_table(parse_anf_text(text));
  return eval_expr(parse_expr(text));
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("bad range '" + text + "', expected a..b or a");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int a = to_int(text.substr(0, dots));
  const int b = to_int(text.substr(dots + 2));
  if (a > b) throw UsageError("empty range '" + text + "'");
  return {a, b};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"liftforge: proper liftings, landscapes and differential uniformity"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--jobs", cfg.jobs, "worker threads (default LIFTFORGE_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--n-cap", cfg.n_cap, "cap on circular length for scans and DU")->check(CLI::Range(1, kMaxArity));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--long", cfg.long_run, "allow long-running work");
  app.add_flag("--ascii", cfg.ascii, "print * and o instead of the star and circle");

  // parse
  std::string parse_text;
  auto* parse = app.add_subcommand("parse", "parse a rule, ANF or landscape expression");
  parse->add_option("expr", parse_text, "k:HEX, ANF text or landscape expression")->required();

  // verify
  std::string verify_text;
  bool verify_exact = false, verify_scan = false;
  int verify_order = 0;
  std::string verify_lengths;
  auto* verify = app.add_subcommand("verify", "decide properness");
  verify->add_option("rule", verify_text)->required();
  verify->add_flag("--exact", verify_exact, "pair-graph decision (default)");
  verify->add_flag("--scan", verify_scan, "finite scan over n = k..n-cap instead");
  verify->add_option("--order", verify_order, "also find the iterate order up to this power");
  verify->add_option("--lengths", verify_lengths, "also test bijectivity for n in a..b");

  // compose
  std::vector<std::string> compose_rules;
  auto* composec = app.add_subcommand("compose", "compose rules, leftmost applied last");
  composec->add_option("rules", compose_rules)->required()->expected(2, -1);

  // expand
  std::string expand_text;
  int expand_stride = 2;
  auto* expandc = app.add_subcommand("expand", "stride expansion f_s");
  expandc->add_option("rule", expand_text)->required();
  expandc->add_option("--stride", expand_stride)->check(CLI::PositiveNumber);

  // landscapes
  int land_k = 0;
  bool land_classes = false, land_list = false;
  std::string land_method = "string";
  auto* landscapes = app.add_subcommand("landscapes", "enumerate conserved landscapes");
  landscapes->add_option("--k", land_k)->required()->check(CLI::Range(3, kMaxArity));
  landscapes->add_flag("--classes", land_classes, "also count equivalence classes");
  landscapes->add_flag("--list", land_list, "print every landscape");
  landscapes->add_option("--method", land_method, "class counting: string or rule")
      ->check(CLI::IsMember({"string", "rule"}));

  // search6
  std::string s6_offsets = "2,3";
  bool s6_stats = false, s6_oracle = false, s6_all_offsets = false, s6_complemented = false;
  auto* search6 = app.add_subcommand("search6", "diameter-6 involutions");
  search6->add_option("--s", s6_offsets, "offsets, comma separated");
  search6->add_flag("--all-offsets", s6_all_offsets, "scan s = 1..6 (1 and 6 expected empty)");
  search6->add_flag("--stats", s6_stats, "print period mapping and collision statistics");
  search6->add_flag("--oracle", s6_oracle, "search all 64 windows from scratch (slow, needs --long)");
  search6->add_flag("--complemented", s6_complemented, "also allow f(0) = 1");

  // families
  auto* families = app.add_subcommand("families", "parametric proper liftings");
  families->require_subcommand(1);
  int fam_k = 0, fam_j = 0, fam_r = 0, fam_scan_to = 8;
  std::string fam_set;
  bool fam_mirrored = false;
  auto* symmetric = families->add_subcommand("symmetric", "x_j ^ (x_{k+1-j} ^ 1) prod_S x_l");
  symmetric->add_option("--k", fam_k)->required();
  symmetric->add_option("--j", fam_j)->required();
  symmetric->add_option("--set", fam_set, "comma-separated S")->required();
  auto* chain = families->add_subcommand("chain", "the 2r-variable chain rule");
  chain->add_option("--r", fam_r)->required();
  auto* scan = families->add_subcommand("scan", "all valid symmetric parameters up to k");
  scan->add_option("--k", fam_scan_to, "largest k")->check(CLI::Range(4, 12));
  scan->add_flag("--mirrored", fam_mirrored, "include j > k/2");

  // du
  std::vector<std::string> du_exprs;
  std::string du_range = "6..12";
  bool du_scaled = false, du_raw = false, du_full = false;
  auto* du = app.add_subcommand("du", "differential uniformity of induced maps");
  du->add_option("rules", du_exprs)->required()->expected(1, -1);
  du->add_option("--n", du_range, "length range a..b");
  du->add_flag("--scaled", du_scaled, "print 2^(9-n) DU");
  du->add_flag("--raw", du_raw, "print raw DU (default)");
  du->add_flag("--full", du_full, "all input differences instead of rotation representatives");

  // catalog
  std::string cat_path;
  bool cat_du = false, cat_degree2 = false, cat_no_hash = false;
  auto* catalog = app.add_subcommand("catalog", "verify the bundled catalog");
  catalog->add_option("--path", cat_path, "catalog file (default: bundled)");
  catalog->add_flag("--du", cat_du, "check stated DU values (n <= 10, n <= 12 with --long)");
  catalog->add_flag("--degree2", cat_degree2, "run the degree-2 composition probe");
  catalog->add_flag("--no-hash", cat_no_hash, "skip the content hash check");

  // closure
  int clo_d = 8;
  std::size_t clo_budget = ClosureOptions{}.state_budget;
  bool clo_verify = false;
  auto* closure = app.add_subcommand("closure", "composition closure of conserved landscapes");
  closure->add_option("--D", clo_d, "intermediate diameter cap")->check(CLI::Range(6, 11));
  closure->add_option("--budget", clo_budget, "state budget");
  closure->add_flag("--verify-proper", clo_verify, "re-decide properness of every class");

  std::vector<const char*> argv{"liftforge"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const bool as_json = cfg.format == "json";
  try {
    const int jobs = resolve_jobs(cfg.jobs);

    if (*parse) {
      const Rule r = parse_rule_arg(parse_text);
      json j;
      if (!looks_like_anf(parse_text) && parse_text.find(':') == std::string::npos) {
        j["expr"] = print_expr(parse_expr(parse_text), cfg.ascii);
      }
      for (const json rj = rule_json(r); const auto& [key, v] : rj.items()) j[key] = v;
      if (as_json) {
        out << j.dump() << '\n';
      } else {
        if (j.contains("expr")) out << "expr  " << j["expr"].get<std::string>() << '\n';
        print_rule_text(out, r);
      }
      return kExitOk;
    }

    if (*verify) {
      const Rule r = parse_rule_arg(verify_text);
      if (verify_exact && verify_scan) throw UsageError("--exact and --scan are exclusive");
      ProperOptions po;
      po.method = verify_scan ? ProperMethod::FiniteScan : ProperMethod::PairGraph;
      po.scan_to = cfg.n_cap;
      const PropernessVerdict v = decide_proper(r, po);
      bool ok = v.proper;
      json j = json::parse(to_json(v));
      std::vector<std::string> extra;
      if (!verify_lengths.empty()) {
        const auto [a, b] = parse_range(verify_lengths);
        if (b > cfg.n_cap) throw UsageError("length " + std::to_string(b) + " above --n-cap " + std::to_string(cfg.n_cap));
        json lengths = json::object();
        std::string line = "bijective";
        for (int n = std::max(a, r.k()); n <= b; ++n) {
          const bool bij = is_lifting(r, n, cfg.n_cap);
          lengths[std::to_string(n)] = bij;
          line += " " + std::to_string(n) + (bij ? ":yes" : ":no");
          ok = ok && bij;
        }
        j["bijective"] = lengths;
        extra.push_back(line);
      }
      if (verify_order > 0) {
        const IterateOrder o = iterate_order(r, verify_order);
        if (o.status == IterateOrder::Status::Found) {
          j["order"] = o.order;
          extra.push_back("order " + std::to_string(o.order));
        } else {
          j["order"] = o.status == IterateOrder::Status::Unknown ? "unknown" : "none";
          extra.push_back(std::string("order ") + (o.status == IterateOrder::Status::Unknown ? "unknown" : "none") +
                          " up to " + std::to_string(verify_order));
        }
      }
      if (as_json) {
        out << j.dump() << '\n';
      } else {
        out << (v.proper ? "proper" : "not proper");
        if (v.method == ProperMethod::FiniteScan) out << " (finite scan to n=" << v.scanned_to << ", heuristic)";
        out << '\n';
        if (v.witness) {
          const CollisionWitness& w = *v.witness;
          if (w.length > 0) {
            out << "collision at n=" << w.length << ": " << w.middle_a << " " << w.middle_b << '\n';
          } else {
            out << "witness (" << w.left_a << ")^inf " << w.middle_a << " (" << w.right_a << ")^inf\n";
            out << "        (" << w.left_b << ")^inf " << w.middle_b << " (" << w.right_b << ")^inf\n";
          }
        }
        for (const std::string& e : extra) out << e << '\n';
      }
      return ok ? kExitOk : kExitMismatch;
    }

    if (*composec) {
      Rule acc = parse_rule_arg(compose_rules.back());
      for (std::size_t i = compose_rules.size() - 1; i-- > 0;) acc = compose(parse_rule_arg(compose_rules[i]), acc);
      if (as_json) {
        out << rule_json(acc).dump() << '\n';
      } else {
        print_rule_text(out, acc);
      }
      return kExitOk;
    }

    if (*expandc) {
      const Rule r = expand(parse_rule_arg(expand_text), expand_stride);
      if (as_json) {
        out << rule_json(r).dump() << '\n';
      } else {
        print_rule_text(out, r);
      }
      return kExitOk;
    }

    if (*landscapes) {
      if (land_k >= 13 && !cfg.long_run) throw UsageError("k >= 13 takes minutes; pass --long");
      EnumerateOptions eo;
      eo.collect = land_list;
      eo.jobs = jobs;
      eo.method = land_method == "rule" ? ClassCountMethod::RuleCanonical : ClassCountMethod::StringOrbits;
      if (cfg.long_run) err << "enumerating k=" << land_k << " ...\n";
      const ConservedEnumeration e = enumerate_conserved(land_k, eo);
      if (as_json) {
        json j;
        j["k"] = e.k;
        j["count"] = e.count;
        j["classes"] = e.classes;
        if (land_list) {
          j["landscapes"] = json::array();
          for (const Landscape& l : e.landscapes) j["landscapes"].push_back(l.to_string(cfg.ascii));
        }
        out << j.dump() << '\n';
      } else if (cfg.format == "csv") {
        out << "k,count,classes\n" << e.k << ',' << e.count << ',' << e.classes << '\n';
      } else {
        out << "count=" << e.count;
        if (land_classes) out << " classes=" << e.classes;
        out << '\n';
        for (const Landscape& l : e.landscapes) out << l.to_string(cfg.ascii) << '\n';
      }
      return kExitOk;
    }

    if (*search6) {
      std::vector<int> offsets = s6_all_offsets ? std::vector<int>{1, 2, 3, 4, 5, 6} : parse_int_list(s6_offsets);
      if (s6_oracle && !cfg.long_run) throw UsageError("--oracle takes minutes; pass --long");
      for (int s : offsets) {
        if (s < 1 || s > 6) throw UsageError("offset s must lie in 1..6");
      }
      const bool zero_fixed = !s6_complemented;
      if (s6_stats) {
        for (int p = 1; p <= 5; ++p) {
          const std::size_t listed = period_mappings(p, 2, zero_fixed).size();
          if (as_json) {
            out << json{{"p", p}, {"b_p", count_primitive_sequences(p)}, {"mappings", count_period_mappings(p)},
                        {"enumerated", listed}}
                       .dump()
                << '\n';
          } else {
            out << "p=" << p << " b_p=" << count_primitive_sequences(p) << " mappings=" << count_period_mappings(p)
                << " enumerated=" << listed << '\n';
          }
        }
        if (!as_json) out << "fixed_windows=" << std::popcount(periodic_window_mask()) << '\n';
      }
      std::set<Table> classes;
      std::size_t functions = 0;
      bool loud = false;
      for (int s : offsets) {
        CollisionStats cs;
        if (s6_stats) enumerate_periodic_assignments(s, &cs, zero_fixed);
        SearchOptions so;
        so.jobs = jobs;
        so.zero_fixed = zero_fixed;
        so.periodic_seed = !s6_oracle;
        SearchStats st;
        if (cfg.long_run) err << "search6 s=" << s << " ...\n";
        const std::vector<Involution6> found = complete_search(s, so, &st);
        std::set<Table> local;
        for (const Involution6& inv : found) {
          local.insert(inv.class_id.canon);
          classes.insert(inv.class_id.canon);
          if (as_json) out << to_json_line(inv) << '\n';
        }
        functions += found.size();
        if ((s == 1 || s == 6) && !found.empty()) loud = true;
        if (!as_json) {
          out << "s=" << s;
          if (s6_stats) out << " combinations=" << cs.combinations << " survivors=" << cs.survivors;
          out << " solutions=" << st.solutions << " functions=" << found.size() << " classes=" << local.size() << '\n';
          if (s6_stats) {
            for (int a = 1; a <= 5; ++a) {
              for (int b = a + 1; b <= 5; ++b) {
                const auto c = cs.first_collision[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                if (c) out << "  first collision p=" << a << ",q=" << b << ": " << c << '\n';
              }
            }
          }
        }
      }
      if (!as_json) out << "pooled classes=" << classes.size() << " functions=" << functions << '\n';
      if (loud) {
        err << "UNEXPECTED: involutions found at offset 1 or 6\n";
        return kExitMismatch;
      }
      return kExitOk;
    }

    if (*families) {
      if (*scan) {
        bool all_ok = true;
        for (const SymmetricFamilyParams& p : enumerate_symmetric(4, fam_scan_to, fam_mirrored)) {
          const Rule r = build_symmetric(p);
          std::vector<std::string> set;
          for (int l : p.set) set.push_back(std::to_string(l));
          bool order_ok = false;
          std::string order = "overflow";
          try {
            order_ok = verify_order_claim(r, OrderClaim::power_of_two(p.r_exp));
            order = order_ok ? "ok" : "FAIL";
          } catch (const RuleError&) {
          }
          const bool proper = r.k() <= 16 && decide_proper(r).proper;
          all_ok = all_ok && proper && order != "FAIL";
          if (as_json) {
            out << json{{"k", p.k}, {"j", p.j}, {"set", p.set}, {"xi", p.xi}, {"t", p.t}, {"r_exp", p.r_exp},
                        {"proper", proper}, {"order", order}}
                       .dump()
                << '\n';
          } else {
            out << "k=" << p.k << " j=" << p.j << " S={" << join(set, ",") << "} xi=" << p.xi << " t=" << p.t
                << " r=" << p.r_exp << (proper ? " proper" : " NOT-PROPER") << " order:" << order << '\n';
          }
        }
        return all_ok ? kExitOk : kExitMismatch;
      }
      Rule r = identity_rule();
      OrderClaim claim;
      json j;
      if (*symmetric) {
        const SymmetricFamilyParams p = symmetric_params(fam_k, fam_j, parse_int_list(fam_set));
        r = build_symmetric(p);
        claim = OrderClaim::power_of_two(p.r_exp);
        j = json{{"family", "symmetric"}, {"k", p.k}, {"j", p.j}, {"set", p.set}, {"xi", p.xi}, {"t", p.t},
                 {"r_exp", p.r_exp}};
      } else {
        r = build_chain({fam_r});
        claim = OrderClaim::exact(fam_r);
        j = json{{"family", "chain"}, {"r", fam_r}};
      }
      const bool proper = r.k() <= 16 && decide_proper(r).proper;
      const bool order_ok = verify_order_claim(r, claim);
      const std::string claim_text = claim.kind == OrderClaim::Kind::Exact
                                         ? "F^" + std::to_string(claim.value) + "=I"
                                         : "F^(2^" + std::to_string(claim.value) + ")=I";
      if (as_json) {
        for (const json rj = rule_json(r); const auto& [key, v] : rj.items()) j[key] = v;
        j["proper"] = proper;
        j["claim"] = claim_text;
        j["claim_holds"] = order_ok;
        out << j.dump() << '\n';
      } else {
        print_rule_text(out, r);
        out << (proper ? "proper" : "NOT proper") << '\n';
        out << claim_text << (order_ok ? " holds" : " FAILS") << '\n';
      }
      return proper && order_ok ? kExitOk : kExitMismatch;
    }

    if (*du) {
      const auto [a, b] = parse_range(du_range);
      if (du_scaled && du_raw) throw UsageError("--scaled and --raw are exclusive");
      if (b > cfg.n_cap) throw UsageError("n=" + std::to_string(b) + " above --n-cap " + std::to_string(cfg.n_cap));
      if (a < 1) throw UsageError("n must be positive");
      DdtOptions dopt;
      dopt.length_cap = cfg.n_cap;
      dopt.necklace_reduction = !du_full;
      dopt.jobs = jobs;
      if (du_exprs.size() > 1 || cfg.format == "csv") {
        std::vector<LiftExpr> rows;
        for (const std::string& e : du_exprs) rows.push_back(parse_expr(e));
        const DuTable t = du_scaled_table(rows, a, b, dopt);
        if (as_json) {
          out << t.to_json() << '\n';
        } else if (cfg.format == "csv") {
          out << t.to_csv();
        } else {
          std::string text = t.to_text();
          if (cfg.ascii) {
            for (const auto& [from, to] : {std::pair<std::string, std::string>{"★", "*"}, {"∘", "o"}}) {
              for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos)) {
                text.replace(pos, from.size(), to);
              }
            }
          }
          out << text;
        }
        return kExitOk;
      }
      const Rule r = parse_rule_arg(du_exprs.front());
      const DuReport rep = du_profile(r, a, b, dopt);
      if (as_json) {
        json j;
        j["rule"] = rep.rule_id;
        j["entries"] = json::array();
        for (const DuEntry& e : rep.entries) {
          j["entries"].push_back({{"n", e.n},
                                  {"raw", e.ddt.du_raw},
                                  {"scaled", e.scaled.to_string()},
                                  {"a", e.ddt.a},
                                  {"b", e.ddt.b}});
        }
        j["running_max"] = rep.running_max.to_string();
        j["running_max_at"] = rep.running_max_at;
        j["stabilized"] = rep.stabilized;
        out << j.dump() << '\n';
      } else {
        std::vector<std::string> values;
        for (const DuEntry& e : rep.entries) {
          values.push_back(du_scaled ? e.scaled.to_string() : std::to_string(e.ddt.du_raw));
        }
        out << join(values, " ") << '\n';
      }
      return kExitOk;
    }

    if (*catalog) {
      const Catalog cat = load_catalog(cat_path.empty() ? default_catalog_path() : cat_path, !cat_no_hash);
      CatalogVerifyOptions vo;
      vo.check_du = cat_du;
      vo.du_to = cfg.long_run ? kCatalogDuTo : 10;
      vo.jobs = jobs;
      const CatalogReport rep = verify_catalog(cat, vo);
      bool ok = rep.ok();
      if (as_json) {
        out << rep.to_json() << '\n';
      } else {
        out << rep.to_text();
      }
      if (cat_degree2) {
        const Degree2Report d2 = degree2_probe(cat, jobs);
        out << (as_json ? d2.to_json() + "\n" : d2.to_text());
        ok = ok && d2.degree2.empty();
      }
      return ok ? kExitOk : kExitMismatch;
    }

    if (*closure) {
      if (clo_d > 8 && !cfg.long_run) throw UsageError("D > 8 needs --long");
      const Catalog cat = load_catalog();
      std::set<EquivClassId> inv;
      SearchOptions so;
      so.jobs = jobs;
      for (int s : {2, 3}) {
        for (const Involution6& r : complete_search(s, so)) inv.insert(r.class_id);
      }
      ClosureOptions co;
      co.max_diameter = clo_d;
      co.state_budget = clo_budget;
      co.jobs = jobs;
      co.verify_proper = clo_verify;
      const ClosureResult res = closure_search(co, catalog_classes(cat), {inv.begin(), inv.end()});
      out << (as_json ? res.to_json() + "\n" : res.to_text());
      return res.improper == 0 ? kExitOk : kExitMismatch;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FamilyError& e) {
    err << "error: invalid parameters (" << to_string(e.violation()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace liftforge
