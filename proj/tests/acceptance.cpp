// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit nonzero if
// any criterion fails. The full 2^31 enumeration behind criterion 9 runs
// only with PERSYMM_HEAVY=1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "persymm/extension.hpp"
#include "persymm/oracle.hpp"
#include "persymm/registry.hpp"
#include "persymm/solcount.hpp"

using namespace persymm;

namespace {

int failures = 0;
std::ostringstream detail;

void report(int n, const std::string& what, bool ok) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << n << ": " << what << "\n";
  if (!ok) {
    ++failures;
    if (!detail.str().empty()) std::cout << detail.str();
  }
  detail.str("");
}

bool expect(bool ok, const std::string& what) {
  if (!ok) detail << "    " << what << "\n";
  return ok;
}

RankDistribution oracle(const std::string& shape, std::uint64_t max_states = 1ull << 28) {
  return enumerate_rank_distribution(parse_shape(shape), {max_states, 0, 8, false});
}

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

const std::vector<std::pair<const char*, std::vector<BigInt>>>& small_tables() {
  static const std::vector<std::pair<const char*, std::vector<BigInt>>> tables = {
      {"[5]x5", big({1, 3, 12, 48, 192, 256})},
      {"[2]x2", big({1, 3, 4})},
      {"[5;1]x5", big({1, 37, 138, 720, 4224, 11264})},
      {"[2;(2)]x4", big({1, 57, 910, 4536, 2688})},
      {"[2;2+3]x4", big({1, 9, 94, 600, 7488})},
      {"[2;2+3;(1)]x4", big({1, 33, 502, 5928, 124608})},
      {"[2;2;(4)]x4", big({1, 369, 54726, 3765384, 63288384})},
      {"[5;5]x4", big({1, 9, 78, 648, 64800})},
      {"[2;2;2]x6", big({1, 21, 1162, 20160, 258720, 1128960, 688128})},
      {"[2;2;2]x2", big({1, 21, 490})},
      {"[2;2;2;(3)]x4", big({1, 273, 41062, 3807048, 130369344})},
  };
  return tables;
}

}  // namespace

int main() {
  // 1: oracle reproduces every explicit small table
  {
    bool ok = true;
    for (const auto& [shape, want] : small_tables())
      ok &= expect(oracle(shape).counts == want, std::string("oracle mismatch for ") + shape);
    report(1, "oracle reproduces the published small tables", ok);
  }

  // 2: checksums sum to 2^params
  {
    bool ok = true;
    for (const auto& [shape, want] : small_tables()) {
      BigInt total = 0;
      for (const auto& c : want) total += c;
      ok &= expect(total == pow2(parse_shape(shape).free_param_count()),
                   std::string("checksum failed for ") + shape);
    }
    report(2, "table totals equal 2^(free parameter count)", ok);
  }

  // 3: solution-count formula reproduces the published values
  {
    bool ok = true;
    auto R = [&](const std::string& shape, int q) {
      StackedShape s = parse_shape(shape);
      return count_solutions({s, q}, oracle(shape));
    };
    ok &= expect(R("[5]x5", 1) == 63 && R("[5]x5", 2) == 8704, "[5]x5");
    ok &= expect(R("[2]x2", 1) == 7 && R("[2]x2", 2) == 64, "[2]x2");
    ok &= expect(R("[5;1]x5", 1) == 95 && R("[5;1]x5", 2) == 14752, "[5;1]x5");
    ok &= expect(R("[2;2;2]x2", 2) == 4720, "[2;2;2]x2 q=2");
    for (int k = 4; k <= 10; ++k) {
      auto d = eval_family("double22", k);
      StackedShape s = parse_shape(d.shape);
      ok &= expect(count_solutions({s, 1}, d) == pow2(k) + 15,
                   "[2;2]x" + std::to_string(k) + " q=1");
      // published compact q=2 value, with the first exponent read as 2k
      // (the 2k+8 print conflicts with the general line and the oracle)
      ok &= expect(count_solutions({s, 2}, d) == pow2(2 * k) + 27 * pow2(k + 1) + 192,
                   "[2;2]x" + std::to_string(k) + " q=2");
    }
    for (int l = 0; l <= 6; ++l)
      for (int k = 1; k <= 12; ++k) {
        auto d = eval_family("triple-s3", k, l);
        ok &= expect(count_solutions({parse_shape(d.shape), 1}, d) == pow2(9 + l) + pow2(k) - 1,
                     "R_1 of [3;3;3+l], k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
    report(3, "solution-count formula matches the published values", ok);
  }

  // 4: formula vs tuple-oracle equivalence on all small systems
  {
    bool ok = true;
    struct Case { const char* shape; int qmax; };
    for (const Case& c : {Case{"[2]x2", 3}, Case{"[5]x5", 2}, Case{"[2;2]x1", 2},
                          Case{"[2;2]x2", 2}, Case{"[2;2]x3", 2}, Case{"[2;2;2]x2", 2}}) {
      StackedShape s = parse_shape(c.shape);
      for (int q = 1; q <= c.qmax; ++q) {
        if (q * (s.cols + s.total_rows()) > 24) continue;
        BigInt f = count_solutions({s, q}, oracle(c.shape));
        BigInt o = oracle_count_solutions({s, q}, {1ull << 25, 0, 8, false});
        ok &= expect(f == o, std::string(c.shape) + " q=" + std::to_string(q) + ": formula " +
                                 f.str() + " vs tuples " + o.str());
      }
    }
    report(4, "solution counts agree with polynomial-tuple enumeration", ok);
  }

  // 5: closed forms vs oracle
  {
    bool ok = true;
    auto check_verify = [&](const std::string& id, std::vector<int> ks,
                            std::vector<std::optional<int>> ls, std::uint64_t budget) {
      VerifyReport rep = verify_family(id, ks, ls, {budget, 0, 8, false});
      for (const auto& e : rep.entries)
        if (e.status == "mismatch")
          expect(false, id + " k=" + std::to_string(e.k) + ": " + e.detail);
      return rep.ok();
    };
    std::vector<int> k18, k110, k17;
    for (int k = 1; k <= 10; ++k) {
      if (k <= 8) k18.push_back(k);
      if (k <= 7) k17.push_back(k);
      k110.push_back(k);
    }
    std::vector<std::optional<int>> s18;
    for (int s = 1; s <= 8; ++s) s18.emplace_back(s);
    ok &= check_verify("single", k18, s18, 1ull << 24);
    ok &= check_verify("double22", k110, {}, 1ull << 24);
    ok &= check_verify("double55", k18, {}, 1ull << 24);
    ok &= check_verify("triple222x6", {6}, {}, 1ull << 24);
    ok &= check_verify("double-2-23x4", {4}, {}, 1ull << 24);
    ok &= check_verify("double-2-23-f1x4", {4}, {}, 1ull << 24);
    ok &= check_verify("double-2-f2x4", {4}, {}, 1ull << 24);
    ok &= check_verify("double-22-f4x4", {4}, {}, 1ull << 27);
    ok &= check_verify("triple-s3", k17, {std::optional<int>(0), std::optional<int>(1)},
                       1ull << 28);
    report(5, "closed forms equal the oracle across their validity grids", ok);
  }

  // 6: invertibility fractions 1/2, 3/8, 21/64
  {
    bool ok = true;
    for (int s = 1; s <= 8; ++s) {
      auto d = oracle("[" + std::to_string(s) + "]x" + std::to_string(s));
      ok &= expect(d.counts.back() == pow2(2 * s - 2), "square single s=" + std::to_string(s));
    }
    for (int s = 1; s <= 3; ++s) {
      auto d = oracle("[" + std::to_string(s) + ";" + std::to_string(s) + "]x" +
                      std::to_string(2 * s));
      ok &= expect(d.counts.back() == 3 * pow2(6 * s - 5), "square double s=" + std::to_string(s));
    }
    for (int s = 1; s <= 2; ++s) {
      const std::string b = std::to_string(s);
      auto d = oracle("[" + b + ";" + b + ";" + b + "]x" + std::to_string(3 * s));
      ok &= expect(d.counts.back() == 21 * pow2(12 * s - 9), "square triple s=" + std::to_string(s));
    }
    report(6, "full-rank fractions 1/2, 3/8, 21/64 at square sizes", ok);
  }

  // 7: reduction rules as identities, formula-level and against the oracle
  {
    bool ok = true;
    long checked = 0;
    auto sweep = [&](const std::string& id, int s, int m, int lmin) {
      for (int l = lmin; l <= 8; ++l)
        for (int k = 3; k <= 30; ++k) {
          RankDistribution src;
          try {
            src = eval_family(id, k, l);
          } catch (const OutOfValidity&) {
            continue;
          }
          for (int i = 0; i < static_cast<int>(src.counts.size()); ++i)
            for (int rule = 1; rule <= 3; ++rule) {
              auto st = try_reduction(rule, s, m, l, k, i);
              if (!st || st->j == 0) continue;
              auto fi = resolve_family(st->target.shape());
              if (!fi) continue;
              RankDistribution tgt;
              try {
                tgt = eval_family(fi->id, fi->k, fi->l);
              } catch (const OutOfValidity&) {
                continue;
              }
              if (st->target_i >= static_cast<int>(tgt.counts.size())) continue;
              ++checked;
              ok &= expect(src.counts[i] == st->multiplier() * tgt.counts[st->target_i],
                           id + " rule " + std::to_string(rule) + " at k=" + std::to_string(k) +
                               " l=" + std::to_string(l) + " i=" + std::to_string(i));
            }
        }
    };
    sweep("triple-s3", 3, 0, 0);
    sweep("triple-2-3-l", 2, 3, 4);
    ok &= expect(checked > 1000, "too few formula-level reduction checks");

    struct Case { int s, m, l, k; };
    for (const Case& c : {Case{1, 1, 1, 5}, Case{1, 1, 1, 6}, Case{2, 1, 0, 5},
                          Case{1, 0, 2, 6}, Case{2, 0, 1, 5}, Case{1, 2, 0, 5}}) {
      TripleInstance src{c.s, c.m, c.l, c.k};
      if (src.shape().free_param_count() > 26) continue;
      auto sd = enumerate_rank_distribution(src.shape(), {1ull << 27, 0, 8, false});
      for (int i = 0; i < static_cast<int>(sd.counts.size()); ++i)
        for (int rule = 1; rule <= 3; ++rule) {
          auto st = try_reduction(rule, c.s, c.m, c.l, c.k, i);
          if (!st) continue;
          if (st->target.shape().free_param_count() > 26) continue;
          auto td = enumerate_rank_distribution(st->target.shape(), {1ull << 27, 0, 8, false});
          if (st->target_i >= static_cast<int>(td.counts.size())) continue;
          ok &= expect(sd.counts[i] == st->multiplier() * td.counts[st->target_i],
                       "oracle reduction s=" + std::to_string(c.s) + " m=" + std::to_string(c.m) +
                           " l=" + std::to_string(c.l) + " k=" + std::to_string(c.k) +
                           " i=" + std::to_string(i));
        }
    }
    report(7, "rank reduction rules hold across grids and against the oracle", ok);
  }

  // 8: extension transform vs oracle, incl. the published instances
  {
    bool ok = true;
    ok &= expect(extend_free_rows(oracle("[5]x5"), 1, 5).counts ==
                     big({1, 37, 138, 720, 4224, 11264}),
                 "[5;(1)]x5");
    ok &= expect(extend_free_rows(oracle("[2]x4"), 2, 4).counts == big({1, 57, 910, 4536, 2688}),
                 "[2;(2)]x4");
    ok &= expect(extend_free_rows(oracle("[2;2]x4"), 4, 4).counts ==
                     big({1, 369, 54726, 3765384, 63288384}),
                 "[2;2;(4)]x4");
    ok &= expect(extend_free_rows(oracle("[2;2+3]x4"), 1, 4).counts ==
                     big({1, 33, 502, 5928, 124608}),
                 "[2;2+3;(1)]x4");
    for (const char* base : {"[2]x3", "[3]x4", "[2;2]x3", "[5]x5", "[2;3]x4", "[1;1]x2"}) {
      StackedShape bs = parse_shape(base);
      auto bd = oracle(base);
      for (int t = 1; t <= 4; ++t) {
        if (bs.free_param_count() + t * bs.cols > 24) continue;
        StackedShape ext = bs;
        ext.blocks.push_back({BlockKind::Free, t});
        auto got = extend_free_rows(bd, t, bs.cols);
        auto want = enumerate_rank_distribution(ext, {1ull << 26, 0, 8, false});
        ok &= expect(got.counts == want.counts,
                     std::string(base) + " plus " + std::to_string(t) + " free rows");
      }
    }
    report(8, "free-row extension transform equals the oracle", ok);
  }

  // 9: the l-parametric double-triple family at (k=6, l=4)
  {
    bool ok = true;
    auto d = eval_family("triple-2-3-l", 6, 4);
    ok &= expect(d.counts == big({1, 21, 490, 7200, 108768, 1679616, 2145687552}),
                 "closed form at k=6, l=4");
    ok &= expect(d.total() == pow2(31), "checksum 2^31");
    if (const char* heavy = std::getenv("PERSYMM_HEAVY"); heavy && *heavy == '1') {
      auto o = enumerate_rank_distribution(parse_shape("[2;5;9]x6"), {1ull << 31, 0, 8, false});
      ok &= expect(o.counts == d.counts, "full 2^31 enumeration");
    } else {
      std::cout << "       (set PERSYMM_HEAVY=1 for the full 2^31 enumeration)\n";
    }
    report(9, "stacked [2;5;5+l] table at k=6, l=4 with checksum 2^31", ok);
  }

  // 10: throughput gate
  {
    const StackedShape shape = parse_shape("[2;5;7]x5");  // 14 rows, 5 cols, 2^26 states
    const auto t0 = std::chrono::steady_clock::now();
    enumerate_rank_distribution(shape, {1ull << 26, 1, 8, false});
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double rate = std::ldexp(1.0, 26) / dt;
    const bool ok = expect(rate >= 1e7, "rate " + std::to_string(rate) + " states/s");
    std::cout << "       measured " << static_cast<long>(rate) << " states/s on one worker\n";
    report(10, "enumeration throughput >= 1e7 states/s/worker", ok);
  }

  std::cout << (failures ? "ACCEPTANCE: FAILED (" + std::to_string(failures) + " criteria)\n"
                         : "ACCEPTANCE: all criteria passed\n");
  return failures != 0;
}
