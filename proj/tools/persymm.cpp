// persymm: exact rank distributions of stacked persymmetric matrices over
// F2 and solution counts of the attached bilinear systems.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "persymm/cache.hpp"
#include "persymm/extension.hpp"
#include "persymm/oracle.hpp"
#include "persymm/registry.hpp"
#include "persymm/report.hpp"
#include "persymm/solcount.hpp"

using namespace persymm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::uint64_t parse_budget(const std::string& s) {
  if (s.rfind("2^", 0) == 0) {
    const int e = std::stoi(s.substr(2));
    if (e < 0 || e > 63) throw CLI::ValidationError("--budget", "exponent out of range");
    return std::uint64_t{1} << e;
  }
  return std::stoull(s);
}

// "4..10" or "7"
std::vector<int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  std::vector<int> out;
  if (dots == std::string::npos) {
    out.push_back(std::stoi(s));
    return out;
  }
  const int lo = std::stoi(s.substr(0, dots));
  const int hi = std::stoi(s.substr(dots + 2));
  if (hi < lo) throw CLI::ValidationError("range", s + " is empty");
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

RankDistribution oracle_dist(const StackedShape& shape, const EnumerationBudget& budget) {
  if (const char* cache = std::getenv("PERSYMM_CACHE"); cache && *cache)
    return cache_lookup_or_compute(shape, budget, cache);
  return enumerate_rank_distribution(shape, budget);
}

int run_verify_one(const std::string& id, const std::vector<int>& ks,
                   const std::vector<std::optional<int>>& ls, const EnumerationBudget& budget) {
  VerifyReport rep = verify_family(id, ks, ls, budget);
  for (const auto& e : rep.entries) {
    std::cout << id << " k=" << e.k;
    if (e.l) std::cout << " l=" << *e.l;
    std::cout << ": " << e.status;
    if (!e.detail.empty()) std::cout << " (" << e.detail << ")";
    std::cout << "\n";
  }
  return rep.ok() ? kExitOk : kExitMismatch;
}

struct VerifyGrid {
  std::vector<int> ks;
  std::vector<std::optional<int>> ls;
};

VerifyGrid default_grid(const std::string& id) {
  auto seq = [](int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
  };
  const Family& fam = registry().family(id);
  if (fam.builtin == Builtin::Single) {
    VerifyGrid g{seq(1, 8), {}};
    for (int s = 1; s <= 8; ++s) g.ls.emplace_back(s);
    return g;
  }
  if (fam.builtin == Builtin::Nfold) return {seq(1, 10), {}};
  if (!fam.pieces.empty() && fam.uses_l()) {
    VerifyGrid g{seq(1, 16), {}};
    const int lo = fam.l_min.value_or(0);
    for (int l = lo; l <= lo + 3; ++l) g.ls.emplace_back(l);
    return g;
  }
  if (!fam.pieces.empty()) return {seq(1, 10), {}};
  VerifyGrid g;  // table-only family: its fixed (k,l) points
  for (const auto& [key, counts] : fam.tables) {
    g.ks.push_back(key.first);
    if (key.second >= 0) g.ls.emplace_back(key.second);
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank distributions of stacked persymmetric F2 matrices"};
  app.require_subcommand(1);

  std::string shape_str, method = "oracle", family, format = "md", budget_str, smc;
  int q = 1, karg = 0, iarg = -1;
  std::optional<int> larg;
  std::string krange, lrange;
  bool symbolic = false, print_system = false, all = false, force = false, ledger = false;
  EnumerationBudget budget;

  auto add_budget_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-states", budget.max_states, "state budget for enumeration");
    cmd->add_option("--workers", budget.workers, "worker threads (0 = hardware)");
    cmd->add_flag("--force", force, "override the state budget");
  };

  auto* cdist = app.add_subcommand("dist", "rank distribution of a shape");
  cdist->add_option("--shape", shape_str, "e.g. \"[2;2+3]x4\" or \"[2;(2)]x4\"")->required();
  cdist->add_option("--method", method, "oracle | formula | extension");
  cdist->add_option("--format", format, "md | csv | json");
  add_budget_flags(cdist);

  auto* cverify = app.add_subcommand("verify", "closed forms against the enumeration oracle");
  cverify->add_option("--family", family, "family id");
  cverify->add_flag("--all", all, "verify every family on its default grid");
  cverify->add_option("--k", krange, "k or k range, e.g. 1..10");
  cverify->add_option("--l", lrange, "l or l range");
  cverify->add_option("--budget", budget_str, "state budget, e.g. 2^26");
  add_budget_flags(cverify);

  auto* csolve = app.add_subcommand("solve-count", "R_q from the rank distribution");
  csolve->add_option("--shape", shape_str)->required();
  csolve->add_option("--q", q, "number of Y unknowns")->required();
  csolve->add_option("--method", method, "oracle | formula distribution source");
  add_budget_flags(csolve);

  auto* cosolve = app.add_subcommand("oracle-solve", "R_q by enumerating polynomial tuples");
  cosolve->add_option("--shape", shape_str)->required();
  cosolve->add_option("--q", q)->required();
  cosolve->add_flag("--print-system", print_system, "print the quadratic coefficient system");
  add_budget_flags(cosolve);

  auto* ctable = app.add_subcommand("table", "print a registry family");
  ctable->add_option("--family", family)->required();
  ctable->add_option("--k", karg, "evaluate at this k");
  ctable->add_option("--l", lrange, "l value");
  ctable->add_option("--format", format, "md | csv | json");
  ctable->add_flag("--symbolic", symbolic, "print the piecewise formulas");
  ctable->add_flag("--typo-ledger", ledger, "print printed-vs-stored arbitration notes");

  auto* creduce = app.add_subcommand("reduce", "rank reduction chain for [s;s+m;s+m+l]xk");
  creduce->add_option("--smL", smc, "s,m,l")->required();
  creduce->add_option("--k", karg)->required();
  creduce->add_option("--i", iarg, "rank index")->required();

  auto* cbench = app.add_subcommand("bench", "enumeration throughput");
  cbench->add_option("--shape", shape_str)->required();
  add_budget_flags(cbench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  budget.force = force;

  try {
    if (cdist->parsed()) {
      const StackedShape shape = parse_shape(shape_str);
      RankDistribution d;
      if (method == "oracle") {
        d = oracle_dist(shape, budget);
      } else if (method == "formula") {
        auto fi = resolve_family(shape);
        if (!fi) {
          std::cerr << "no closed form known for " << canonical_string(shape) << "\n";
          return kExitUsage;
        }
        d = eval_family(fi->id, fi->k, fi->l);
      } else if (method == "extension") {
        if (shape.blocks.empty() || shape.blocks.back().kind != BlockKind::Free) {
          std::cerr << "extension method needs a trailing free block\n";
          return kExitUsage;
        }
        StackedShape base = shape;
        const int t = base.blocks.back().rows;
        base.blocks.pop_back();
        d = extend_free_rows(oracle_dist(base, budget), t, shape.cols);
        d.shape = canonical_string(shape);
        d.check(shape.free_param_count());
      } else {
        std::cerr << "unknown method \"" << method << "\"\n";
        return kExitUsage;
      }
      std::cout << emit_report(parse_format(format), {d});
      return kExitOk;
    }

    if (cverify->parsed()) {
      if (!budget_str.empty()) budget.max_states = parse_budget(budget_str);
      if (all) {
        int rc = kExitOk;
        for (const auto& id : registry().family_ids()) {
          VerifyGrid g = default_grid(id);
          rc = std::max(rc, run_verify_one(id, g.ks, g.ls, budget));
        }
        return rc;
      }
      if (family.empty()) {
        std::cerr << "verify needs --family or --all\n";
        return kExitUsage;
      }
      VerifyGrid g = krange.empty() ? default_grid(family) : VerifyGrid{};
      if (!krange.empty()) g.ks = parse_range(krange);
      if (!lrange.empty()) {
        g.ls.clear();
        for (int l : parse_range(lrange)) g.ls.emplace_back(l);
      }
      return run_verify_one(family, g.ks, g.ls, budget);
    }

    if (csolve->parsed()) {
      const StackedShape shape = parse_shape(shape_str);
      RankDistribution d;
      if (method == "formula") {
        auto fi = resolve_family(shape);
        if (!fi) {
          std::cerr << "no closed form known for " << canonical_string(shape) << "\n";
          return kExitUsage;
        }
        d = eval_family(fi->id, fi->k, fi->l);
      } else {
        d = oracle_dist(shape, budget);
      }
      std::cout << count_solutions({shape, q}, d).str() << "\n";
      return kExitOk;
    }

    if (cosolve->parsed()) {
      const StackedShape shape = parse_shape(shape_str);
      if (print_system) {
        for (const auto& eq : quadratic_system_expansion({shape, q})) std::cout << eq << "\n";
        return kExitOk;
      }
      std::cout << oracle_count_solutions({shape, q}, budget).str() << "\n";
      return kExitOk;
    }

    if (ctable->parsed()) {
      if (ledger) {
        for (const auto& [id, note] : registry().typo_ledger())
          std::cout << id << ": " << note << "\n";
        return kExitOk;
      }
      std::optional<int> l;
      if (!lrange.empty()) l = parse_range(lrange).front();
      if (symbolic || karg == 0) {
        std::cout << render_family_symbolic(family, l);
        return kExitOk;
      }
      std::cout << emit_report(parse_format(format), {eval_family(family, karg, l)});
      return kExitOk;
    }

    if (creduce->parsed()) {
      int s, m, l;
      if (std::sscanf(smc.c_str(), "%d,%d,%d", &s, &m, &l) != 3) {
        std::cerr << "--smL expects s,m,l\n";
        return kExitUsage;
      }
      int k = karg, i = iarg;
      TripleInstance cur{s, m, l, k};
      std::cout << "Gamma_" << i << " of " << canonical_string(cur.shape()) << "\n";
      long total_exp = 0;
      bool moved = true;
      while (moved) {
        moved = false;
        for (int rule = 1; rule <= 3 && !moved; ++rule) {
          auto st = try_reduction(rule, cur.s, cur.m, cur.l, cur.k, i);
          if (!st || st->j == 0) continue;
          total_exp += st->mult_exp;
          moved = true;
          cur = st->target;
          i = st->target_i;
          std::cout << "  rule " << rule << " (j=" << st->j << "): = 2^" << st->mult_exp
                    << " * Gamma_" << i << " of " << canonical_string(cur.shape()) << "\n";
        }
      }
      std::cout << "total multiplier 2^" << total_exp << "\n";
      if (auto fi = resolve_family(cur.shape()))
        std::cout << "base family: " << fi->id << " at k=" << fi->k
                  << (fi->l ? ", l=" + std::to_string(*fi->l) : "") << "\n";
      return kExitOk;
    }

    if (cbench->parsed()) {
      const StackedShape shape = parse_shape(shape_str);
      const auto t0 = std::chrono::steady_clock::now();
      enumerate_rank_distribution(shape, budget);
      const double dt =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const double states = std::ldexp(1.0, shape.free_param_count());
      std::cout << canonical_string(shape) << ": " << states / dt << " states/s ("
                << dt << " s)\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
