#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "persymm/distribution.hpp"
#include "persymm/families_text.hpp"
#include "persymm/formula.hpp"
#include "persymm/oracle.hpp"
#include "persymm/shape.hpp"

// Closed-form rank distributions: piecewise symbolic tables per shape
// family, explicit boundary tables where the formulas do not apply, and
// the rank reduction rules for triple stacks.

namespace persymm {

struct OutOfValidity : std::runtime_error {
  int k, l, i;
  OutOfValidity(const std::string& id, int k_, int l_, int i_)
      : std::runtime_error("eval_family(" + id + "): no formula covers rank " +
                           std::to_string(i_) + " at k=" + std::to_string(k_) +
                           (l_ >= 0 ? ", l=" + std::to_string(l_) : std::string())),
        k(k_), l(l_), i(i_) {}
};

struct NoRuleApplies : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Builtin { None, Single, Nfold };

// One block of a family's shape template; rows may grow with l.
struct BlockTemplate {
  BlockKind kind;
  int base_rows;
  bool plus_l = false;

  int rows(int l) const { return base_rows + (plus_l ? l : 0); }
};

struct Family {
  std::string id;
  Builtin builtin = Builtin::None;
  std::vector<BlockTemplate> blocks;
  std::optional<int> l_min;
  std::vector<FormulaPiece> pieces;
  std::map<std::pair<int, int>, std::vector<BigInt>> tables;  // (k, l or -1) -> counts
  std::map<int, BigInt> topranks;                             // printed k==i boundary values
  std::vector<std::string> notes;

  bool uses_l() const {
    if (l_min) return true;
    for (const auto& b : blocks)
      if (b.plus_l) return true;
    return false;
  }

  StackedShape instance_shape(int k, int l) const {
    StackedShape s;
    s.cols = k;
    for (const auto& b : blocks) s.blocks.push_back({b.kind, b.rows(l)});
    return s;
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (true) {
    std::size_t q = s.find(sep, p);
    if (q == std::string::npos) {
      out.push_back(trim(s.substr(p)));
      break;
    }
    out.push_back(trim(s.substr(p, q - p)));
    p = q + 1;
  }
  return out;
}

inline std::vector<BlockTemplate> parse_blocks(const std::string& spec) {
  std::vector<BlockTemplate> out;
  for (const auto& tok : split(spec, ',')) {
    if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'F'))
      throw std::invalid_argument("registry: bad block template \"" + tok + "\"");
    BlockTemplate b;
    b.kind = tok[0] == 'P' ? BlockKind::Persymmetric : BlockKind::Free;
    std::size_t p = 1;
    b.base_rows = static_cast<int>(fml::parse_int(tok, p));
    if (p < tok.size()) {
      if (tok.substr(p) != "+l")
        throw std::invalid_argument("registry: bad block template \"" + tok + "\"");
      b.plus_l = true;
    }
    out.push_back(b);
  }
  return out;
}

inline FormulaPiece parse_piece_fields(const std::vector<std::string>& fields,
                                       const std::string& line) {
  FormulaPiece piece;
  // fields: [optional l-window] i-selector, k-validity, terms
  std::size_t f = 0;
  auto need = [&]() -> const std::string& {
    if (f >= fields.size())
      throw std::invalid_argument("registry: truncated piece line \"" + line + "\"");
    return fields[f];
  };
  if (need().rfind("l", 0) == 0 && need().rfind("l+", 0) != 0) {
    const std::string& w = fields[f++];
    if (w.rfind("l>=", 0) == 0) {
      piece.l_min = static_cast<int>(std::stol(w.substr(3)));
    } else if (w.rfind("l=", 0) == 0) {
      piece.l_min = piece.l_max = static_cast<int>(std::stol(w.substr(2)));
    } else {
      throw std::invalid_argument("registry: bad l-window \"" + w + "\"");
    }
  }
  {
    const std::string& sel = need();
    if (sel.rfind("i=", 0) != 0)
      throw std::invalid_argument("registry: bad rank selector \"" + sel + "\"");
    const std::string body = sel.substr(2);
    const auto dots = body.find("..");
    if (dots == std::string::npos) {
      piece.rank_lo = piece.rank_hi = fml::parse_lin(body);
    } else {
      piece.rank_lo = fml::parse_lin(body.substr(0, dots));
      piece.rank_hi = fml::parse_lin(body.substr(dots + 2));
    }
    ++f;
  }
  {
    const std::string& kv = need();
    if (kv.rfind("k>=", 0) == 0) {
      piece.k_validity = {false, fml::parse_lin(kv.substr(3))};
      // k >= b is encoded as k > b-1 semantics via the strict flag
    } else if (kv.rfind("k>", 0) == 0) {
      piece.k_validity = {true, fml::parse_lin(kv.substr(2))};
    } else {
      throw std::invalid_argument("registry: bad k-validity \"" + kv + "\"");
    }
    ++f;
  }
  piece.terms = fml::parse_terms(need());
  return piece;
}

}  // namespace detail

class Registry {
 public:
  explicit Registry(const std::string& text) { load(text); }

  const Family& family(const std::string& id) const {
    auto it = families_.find(id);
    if (it == families_.end())
      throw std::invalid_argument("registry: unknown family \"" + id + "\"");
    return it->second;
  }

  bool has_family(const std::string& id) const { return families_.count(id) > 0; }

  std::vector<std::string> family_ids() const {
    std::vector<std::string> out;
    for (const auto& [id, fam] : families_) out.push_back(id);
    return out;
  }

  // every note line: arbitration annotations for printed-vs-stored values
  std::vector<std::pair<std::string, std::string>> typo_ledger() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [id, fam] : families_)
      for (const auto& n : fam.notes) out.emplace_back(id, n);
    return out;
  }

 private:
  std::map<std::string, Family> families_;

  void load(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = detail::trim(line);
      if (line.empty() || line[0] == '#') continue;
      try {
        parse_line(line);
      } catch (const std::exception& e) {
        throw std::invalid_argument("registry line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }

  void parse_line(const std::string& line) {
    std::istringstream ls(line);
    std::string keyword, id;
    ls >> keyword >> id;
    if (keyword == "family") {
      Family fam;
      fam.id = id;
      std::string tok;
      while (ls >> tok) {
        if (tok.rfind("blocks=", 0) == 0)
          fam.blocks = detail::parse_blocks(tok.substr(7));
        else if (tok.rfind("lmin=", 0) == 0)
          fam.l_min = static_cast<int>(std::stol(tok.substr(5)));
        else if (tok == "builtin=single")
          fam.builtin = Builtin::Single;
        else if (tok == "builtin=nfold")
          fam.builtin = Builtin::Nfold;
        else
          throw std::invalid_argument("bad family attribute \"" + tok + "\"");
      }
      if (!families_.emplace(id, std::move(fam)).second)
        throw std::invalid_argument("duplicate family \"" + id + "\"");
      return;
    }

    auto it = families_.find(id);
    if (it == families_.end())
      throw std::invalid_argument("record for undeclared family \"" + id + "\"");
    Family& fam = it->second;

    const auto bar = line.find('|');
    const std::string rest = bar == std::string::npos ? "" : line.substr(bar + 1);
    if (keyword == "note") {
      fam.notes.push_back(detail::trim(rest));
    } else if (keyword == "piece") {
      fam.pieces.push_back(detail::parse_piece_fields(detail::split(rest, '|'), line));
    } else if (keyword == "toprank") {
      auto fields = detail::split(rest, '|');
      if (fields.size() != 2 || fields[0].rfind("i=", 0) != 0)
        throw std::invalid_argument("bad toprank line");
      const int i = static_cast<int>(std::stol(fields[0].substr(2)));
      BigInt v = 0;
      for (const auto& t : fml::parse_terms(fields[1])) v += t.eval(0, 0, 0);
      fam.topranks[i] = v;
    } else if (keyword == "table") {
      auto fields = detail::split(rest, '|');
      if (fields.size() != 2)
        throw std::invalid_argument("bad table line");
      int k = -1, l = -1;
      std::istringstream hs(fields[0]);
      std::string tok;
      while (hs >> tok) {
        if (tok.rfind("k=", 0) == 0)
          k = static_cast<int>(std::stol(tok.substr(2)));
        else if (tok.rfind("l=", 0) == 0)
          l = static_cast<int>(std::stol(tok.substr(2)));
        else
          throw std::invalid_argument("bad table key \"" + tok + "\"");
      }
      if (k < 1) throw std::invalid_argument("table line missing k");
      std::vector<BigInt> counts;
      std::istringstream vs(fields[1]);
      while (vs >> tok) counts.emplace_back(tok);
      if (counts.empty()) throw std::invalid_argument("empty table line");
      fam.tables[{k, l}] = std::move(counts);
    } else {
      throw std::invalid_argument("unknown keyword \"" + keyword + "\"");
    }
  }
};

inline const Registry& registry() {
  static const Registry reg(kFamiliesText);
  return reg;
}

namespace detail {

// [s]xk: 1 for rank 0, 3*4^(i-1) below the top, the checksum remainder at
// the top rank min(s,k)
inline RankDistribution eval_single(int s, int k) {
  if (s < 1 || k < 1) throw std::invalid_argument("single family needs s >= 1, k >= 1");
  const int top = std::min(s, k);
  RankDistribution d;
  d.counts.assign(static_cast<std::size_t>(top) + 1, 0);
  d.counts[0] = 1;
  for (int i = 1; i < top; ++i) d.counts[i] = 3 * pow2(2 * (i - 1));
  d.counts[top] = pow2(s + k - 1) - pow2(2 * (top - 1));
  return d;
}

// n rows of one entry each: rank 0 once, rank 1 otherwise
inline RankDistribution eval_nfold(int n) {
  if (n < 1) throw std::invalid_argument("nfold1 family needs n >= 1");
  RankDistribution d;
  d.counts = {1, pow2(n) - 1};
  return d;
}

}  // namespace detail

// Evaluate a family's closed form at (k, l). Builtin families reuse the
// argument slots: "single" takes s in the l slot, "nfold1" takes n in k.
inline RankDistribution eval_family(const std::string& id, int k, std::optional<int> l = {}) {
  const Family& fam = registry().family(id);

  RankDistribution d;
  d.source = DistSource::ClosedForm;
  if (fam.builtin == Builtin::Single) {
    if (!l) throw std::invalid_argument("eval_family(single): pass the block size s as l");
    d = detail::eval_single(*l, k);
    StackedShape sh;
    sh.cols = k;
    sh.blocks = {{BlockKind::Persymmetric, *l}};
    d.shape = canonical_string(sh);
    d.source = DistSource::ClosedForm;
    d.check(sh.free_param_count());
    return d;
  }
  if (fam.builtin == Builtin::Nfold) {
    d = detail::eval_nfold(k);
    StackedShape sh;
    sh.cols = 1;
    sh.blocks.assign(static_cast<std::size_t>(k), {BlockKind::Persymmetric, 1});
    d.shape = canonical_string(sh);
    d.source = DistSource::ClosedForm;
    d.check(sh.free_param_count());
    return d;
  }

  const bool wants_l = fam.uses_l();
  if (wants_l && !l)
    throw std::invalid_argument("eval_family(" + id + "): l required");
  const int lv = wants_l && l ? *l : -1;
  if (fam.l_min && lv < *fam.l_min)
    throw OutOfValidity(id, k, lv, 0);

  const StackedShape sh = fam.instance_shape(k, std::max(lv, 0));
  d.shape = canonical_string(sh);
  const int nparams = sh.free_param_count();

  if (auto it = fam.tables.find({k, lv}); it != fam.tables.end()) {
    d.counts = it->second;
    d.check(nparams);
    return d;
  }
  if (fam.pieces.empty()) throw OutOfValidity(id, k, lv, 0);

  const int top = sh.max_rank();
  d.counts.assign(static_cast<std::size_t>(top) + 1, 0);
  BigInt partial = 0;
  for (int i = 0; i <= top; ++i) {
    const FormulaPiece* hit = nullptr;
    for (const auto& p : fam.pieces)
      if (p.selects(k, lv, i)) {
        hit = &p;
        break;
      }
    if (hit) {
      d.counts[i] = hit->eval(k, lv, i);
    } else if (i == top) {
      // boundary column k == top rank: the formulas stop one short and the
      // checksum identity supplies the last entry
      d.counts[i] = pow2(nparams) - partial;
    } else {
      throw OutOfValidity(id, k, lv, i);
    }
    partial += d.counts[i];
  }
  d.check(nparams);
  return d;
}

// ---- rank reduction rules for triple stacks [s; s+m; s+m+l]xk ----

struct TripleInstance {
  int s, m, l, k;

  StackedShape shape() const {
    StackedShape sh;
    sh.cols = k;
    sh.blocks = {{BlockKind::Persymmetric, s},
                 {BlockKind::Persymmetric, s + m},
                 {BlockKind::Persymmetric, s + m + l}};
    return sh;
  }
};

struct ReductionStep {
  int rule;           // 1, 2, or 3
  int j;
  long mult_exp;      // multiplier is 2^mult_exp, always a power of 16
  TripleInstance target;
  int target_i;

  BigInt multiplier() const { return pow2(mult_exp); }
};

// Try one rule on Gamma_i of [s;s+m;s+m+l]xk:
//   rule 1: i = 2s+1+m+j   (0<=j<=l)   -> 16^j        * Gamma_{2s+1+m}   of (s,m,l-j),   k-j
//   rule 2: i = 2s+1+m+l+j (0<=j<=m)   -> 16^(2j+l)   * Gamma_{2s+1+m-j} of (s,m-j,0),   k-2j-l
//   rule 3: i = 2s+1+2m+l+j (0<=j<=s-1)-> 16^(2m+l+3j)* Gamma_{2(s-j)+1} of (s-j,0,0),   k-2m-l-3j
inline std::optional<ReductionStep> try_reduction(int rule, int s, int m, int l, int k, int i) {
  if (s < 1 || m < 0 || l < 0) throw std::invalid_argument("try_reduction: bad (s,m,l)");
  ReductionStep st;
  st.rule = rule;
  switch (rule) {
    case 1: {
      const int j = i - (2 * s + 1 + m);
      if (j < 0 || j > l) return std::nullopt;
      st.j = j;
      st.mult_exp = 4L * j;
      st.target = {s, m, l - j, k - j};
      st.target_i = 2 * s + 1 + m;
      break;
    }
    case 2: {
      const int j = i - (2 * s + 1 + m + l);
      if (j < 0 || j > m) return std::nullopt;
      st.j = j;
      st.mult_exp = 4L * (2 * j + l);
      st.target = {s, m - j, 0, k - 2 * j - l};
      st.target_i = 2 * s + 1 + m - j;
      break;
    }
    case 3: {
      const int j = i - (2 * s + 1 + 2 * m + l);
      if (j < 0 || j > s - 1) return std::nullopt;
      st.j = j;
      st.mult_exp = 4L * (2 * m + l + 3 * j);
      st.target = {s - j, 0, 0, k - 2 * m - l - 3 * j};
      st.target_i = 2 * (s - j) + 1;
      break;
    }
    default:
      throw std::invalid_argument("try_reduction: rule must be 1, 2, or 3");
  }
  // the identity presumes the target rank exists in the smaller shape
  if (st.target.k < st.target_i) return std::nullopt;
  if (i > std::min(k, 3 * s + 2 * m + l)) return std::nullopt;
  return st;
}

inline ReductionStep apply_reduction(int rule, int s, int m, int l, int k, int i) {
  if (auto st = try_reduction(rule, s, m, l, k, i)) return *st;
  throw NoRuleApplies("apply_reduction: rule " + std::to_string(rule) +
                      " does not cover rank " + std::to_string(i) + " of [" +
                      std::to_string(s) + ";" + std::to_string(s + m) + ";" +
                      std::to_string(s + m + l) + "]x" + std::to_string(k));
}

// ---- shape -> family resolution ----

struct FamilyInstance {
  std::string id;
  int k;
  std::optional<int> l;
};

inline std::optional<FamilyInstance> resolve_family(const StackedShape& sh) {
  const auto& b = sh.blocks;
  auto persym = [&](std::size_t i) { return b[i].kind == BlockKind::Persymmetric; };

  if (b.size() == 1 && persym(0)) return FamilyInstance{"single", sh.cols, b[0].rows};
  bool all_one = sh.cols == 1;
  for (const auto& blk : b)
    if (blk.kind != BlockKind::Persymmetric || blk.rows != 1) all_one = false;
  if (all_one) return FamilyInstance{"nfold1", static_cast<int>(b.size()), {}};

  if (b.size() == 2 && persym(0) && persym(1)) {
    if (b[0].rows == 2 && b[1].rows == 2) return FamilyInstance{"double22", sh.cols, {}};
    if (b[0].rows == 5 && b[1].rows == 5) return FamilyInstance{"double55", sh.cols, {}};
    if (b[0].rows == 2 && b[1].rows == 5 && sh.cols == 4)
      return FamilyInstance{"double-2-23x4", 4, {}};
  }
  if (b.size() == 3 && persym(0) && persym(1) && persym(2)) {
    if (b[0].rows == 2 && b[1].rows == 2 && b[2].rows == 2)
      return FamilyInstance{"triple222", sh.cols, {}};
    if (b[0].rows == 1 && b[1].rows == 1 && b[2].rows == 1)
      return FamilyInstance{"triple111", sh.cols, {}};
    if (b[0].rows == 3 && b[1].rows == 3 && b[2].rows >= 3)
      return FamilyInstance{"triple-s3", sh.cols, b[2].rows - 3};
    if (b[0].rows == 2 && b[1].rows == 5 && b[2].rows >= 9)
      return FamilyInstance{"triple-2-3-l", sh.cols, b[2].rows - 5};
  }
  const std::string c = canonical_string(sh);
  if (c == "[2;5;(1)]x4") return FamilyInstance{"double-2-23-f1x4", 4, {}};
  if (c == "[2;(2)]x4") return FamilyInstance{"double-2-f2x4", 4, {}};
  if (c == "[2;2;(4)]x4") return FamilyInstance{"double-22-f4x4", 4, {}};
  if (c == "[2;2;2;(3)]x4") return FamilyInstance{"triple-222-f3x4", 4, {}};
  return std::nullopt;
}

// ---- verification: closed form vs oracle (or reductions where too big) ----

struct VerifyEntry {
  int k;
  std::optional<int> l;
  std::string status;  // "ok", "mismatch", "skipped"
  std::string detail;
};

struct VerifyReport {
  std::string family;
  std::vector<VerifyEntry> entries;

  bool ok() const {
    for (const auto& e : entries)
      if (e.status == "mismatch") return false;
    return true;
  }
  int mismatches() const {
    int n = 0;
    for (const auto& e : entries) n += e.status == "mismatch";
    return n;
  }
};

namespace detail {

inline std::string counts_str(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

// Check every reducible rank of a triple-stack formula against the target
// family's formula times the rule multiplier. Targets without a closed
// form (rule 2 of the 2,5,5+l family lands on [2;m';m'] stacks the tables
// do not cover) are skipped.
inline void verify_by_reduction(const std::string& id, int s, int m, int k, int lv,
                                const RankDistribution& got, VerifyEntry& entry) {
  int checked = 0;
  for (int i = 0; i < static_cast<int>(got.counts.size()); ++i) {
    for (int rule = 1; rule <= 3; ++rule) {
      auto st = try_reduction(rule, s, m, lv, k, i);
      if (!st) continue;
      RankDistribution target;
      const TripleInstance& t = st->target;
      try {
        if (auto fi = resolve_family(t.shape())) {
          if (fi->id == id && t.k == k && t.l == lv && st->target_i == i) continue;
          target = eval_family(fi->id, fi->k, fi->l);
        } else {
          continue;
        }
      } catch (const OutOfValidity&) {
        continue;
      }
      if (st->target_i >= static_cast<int>(target.counts.size())) continue;
      const BigInt want = st->multiplier() * target.counts[st->target_i];
      ++checked;
      if (got.counts[i] != want) {
        entry.status = "mismatch";
        entry.detail = "rank " + std::to_string(i) + ": formula " + got.counts[i].str() +
                       " != 2^" + std::to_string(st->mult_exp) + " * Gamma_" +
                       std::to_string(st->target_i) + "(" + canonical_string(t.shape()) +
                       ") = " + want.str();
        return;
      }
    }
  }
  entry.status = "ok";
  entry.detail = "reduction-checked " + std::to_string(checked) + " ranks";
}

}  // namespace detail

inline VerifyReport verify_family(const std::string& id, std::vector<int> ks,
                                  std::vector<std::optional<int>> ls,
                                  const EnumerationBudget& budget = {}) {
  const Family& fam = registry().family(id);
  VerifyReport rep;
  rep.family = id;
  if (ls.empty()) ls.push_back(std::nullopt);

  for (auto l : ls) {
    for (int k : ks) {
      VerifyEntry entry{k, l, "ok", ""};
      RankDistribution got;
      try {
        got = eval_family(id, k, l);
      } catch (const OutOfValidity& e) {
        entry.status = "skipped";
        entry.detail = e.what();
        rep.entries.push_back(entry);
        continue;
      }
      const StackedShape sh = parse_shape(got.shape);
      const int nparams = sh.free_param_count();
      if (nparams <= 63 &&
          (std::uint64_t{1} << nparams) <= budget.max_states) {
        RankDistribution truth = enumerate_rank_distribution(sh, budget);
        if (truth.counts == got.counts) {
          entry.detail = "oracle over 2^" + std::to_string(nparams) + " states";
        } else {
          entry.status = "mismatch";
          entry.detail = "formula " + detail::counts_str(got.counts) + " != oracle " +
                         detail::counts_str(truth.counts);
        }
      } else if (id == "triple-s3") {
        detail::verify_by_reduction(id, 3, 0, k, l.value_or(0), got, entry);
      } else if (id == "triple-2-3-l") {
        detail::verify_by_reduction(id, 2, 3, k, l.value_or(0), got, entry);
      } else {
        entry.status = "skipped";
        entry.detail = "2^" + std::to_string(nparams) + " states exceeds budget";
      }
      rep.entries.push_back(entry);
    }
  }
  return rep;
}

// ---- symbolic rendering (the "table --symbolic" view) ----

namespace detail {

inline std::string lin_str(const LinExpr& e) {
  std::string out;
  auto add = [&](int mul, const char* var) {
    if (!mul) return;
    if (!out.empty()) out += mul > 0 ? "+" : "-";
    else if (mul < 0) out += "-";
    const int a = mul < 0 ? -mul : mul;
    if (a != 1 || !*var) out += std::to_string(a);
    out += var;
  };
  add(e.kMul, "k");
  add(e.lMul, "l");
  add(e.iMul, "i");
  add(e.offset, "");
  if (out.empty()) out = "0";
  return out;
}

inline std::string terms_str(const std::vector<SymTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    BigInt c = t.coef;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const bool plain = t.exp == LinExpr{};
    if (plain) {
      out += c.str();
    } else {
      if (c != 1 && c != -1) out += c.str() + "*";
      else if (c == -1) out += "-";
      out += "2^(" + lin_str(t.exp) + ")";
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_family_symbolic(const std::string& id, std::optional<int> l = {}) {
  const Family& fam = registry().family(id);
  std::ostringstream out;
  out << "family " << id << "\n";
  if (fam.builtin == Builtin::Single) {
    out << "  Gamma_0 = 1\n"
        << "  Gamma_i = 3*2^(2i-2)          (1 <= i < min(s,k))\n"
        << "  Gamma_min(s,k) = 2^(s+k-1) - 2^(2*min(s,k)-2)\n";
    return out.str();
  }
  if (fam.builtin == Builtin::Nfold) {
    out << "  Gamma_0 = 1\n  Gamma_1 = 2^n - 1\n";
    return out.str();
  }
  for (const auto& p : fam.pieces) {
    if (l) {
      if (p.l_min && *l < *p.l_min) continue;
      if (p.l_max && *l > *p.l_max) continue;
    }
    out << "  i = " << detail::lin_str(p.rank_lo);
    if (!(p.rank_hi == p.rank_lo)) out << " .. " << detail::lin_str(p.rank_hi);
    if (!l && (p.l_min || p.l_max)) {
      if (p.l_min && p.l_max && *p.l_min == *p.l_max)
        out << "  [l = " << *p.l_min << "]";
      else if (p.l_min)
        out << "  [l >= " << *p.l_min << "]";
    }
    out << ",  k " << (p.k_validity.strict ? "> " : ">= ") << detail::lin_str(p.k_validity.bound)
        << ":  " << detail::terms_str(p.terms) << "\n";
  }
  for (const auto& [key, counts] : fam.tables) {
    out << "  table k=" << key.first;
    if (key.second >= 0) out << " l=" << key.second;
    out << ": " << detail::counts_str(counts) << "\n";
  }
  return out.str();
}

}  // namespace persymm
