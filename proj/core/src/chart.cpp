#include "scopeccg/chart.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace scopeccg {

std::string_view rule_label(Rule r) {
  switch (r) {
    case Rule::Lex: return "lex";
    case Rule::FwdApply: return ">";
    case Rule::BwdApply: return "<";
    case Rule::FwdCompose: return ">B";
    case Rule::BwdCompose: return "<B";
  }
  return "?";
}

std::optional<Category> fwd_apply(const Category& f, const Category& a) {
  if (!f.is_forward()) return std::nullopt;
  auto s = unify_cat(f.arg(), a);
  if (!s) return std::nullopt;
  return apply(*s, f.result());
}

std::optional<Category> bwd_apply(const Category& a, const Category& f) {
  if (!f.is_backward()) return std::nullopt;
  auto s = unify_cat(f.arg(), a);
  if (!s) return std::nullopt;
  return apply(*s, f.result());
}

std::optional<Category> fwd_compose(const Category& f, const Category& g) {
  if (!f.is_forward() || !g.is_forward()) return std::nullopt;
  auto s = unify_cat(f.arg(), g.result());
  if (!s) return std::nullopt;
  return apply(*s, Category::slash(Dir::Forward, f.result(), g.arg()));
}

std::optional<Category> bwd_compose(const Category& g, const Category& f) {
  if (!g.is_backward() || !f.is_backward()) return std::nullopt;
  auto s = unify_cat(f.arg(), g.result());
  if (!s) return std::nullopt;
  return apply(*s, Category::slash(Dir::Backward, f.result(), g.arg()));
}

namespace {

bool binders_well_formed(const Term& t) {
  if (t.is_compound() && t.arity() == 3 && t.name().rfind("q-", 0) == 0 && !t.arg(0).is_var())
    return false;
  if (t.is_lam() && !t.lam_param().is_var()) return false;
  for (const auto& a : t.args())
    if (!binders_well_formed(a)) return false;
  return true;
}

bool binders_well_formed(const Category& c) {
  if (c.is_atomic()) return binders_well_formed(c.sem());
  return binders_well_formed(c.result()) && binders_well_formed(c.arg());
}

int max_stamp(const Term& t) {
  int m = is_set_form(t) ? t.stamp() : 0;
  for (const auto& a : t.args()) m = std::max(m, max_stamp(a));
  return m;
}

Term stamp_new(const Term& t, int stamp) {
  if (t.is_var() || t.is_atom()) return t;
  std::vector<Term> args;
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(stamp_new(a, stamp));
    changed |= !args.back().same_node(a);
  }
  Term out = t;
  if (changed) {
    out = t.is_lam() ? Term::lam(args[0], args[1])
          : t.is_up() ? Term::up(args[0])
                      : Term::compound(t.name(), std::move(args));
    if (t.stamp()) out = out.with_stamp(t.stamp());
  }
  if (is_set_form(out) && out.stamp() == 0) out = out.with_stamp(stamp);
  return out;
}

void collect_binders(const Term& t, std::set<std::uint32_t>& out) {
  if (is_quantifier(t)) out.insert(t.arg(0).var_id());
  for (const auto& a : t.args()) collect_binders(a, out);
}

void collect_set_forms(const Term& t, std::vector<Term>& out) {
  if (is_set_form(t)) out.push_back(t);
  for (const auto& a : t.args()) collect_set_forms(a, out);
}

// Set-forms in argument categories must not depend on quantifiers that
// already scope in the core.
bool split_np(const Category& c) {
  std::set<std::uint32_t> binders;
  collect_binders(c.core().sem(), binders);
  if (binders.empty()) return false;
  std::vector<Term> pending;
  for (const Category* k = &c; k->is_slash(); k = &k->result())
    k->arg().map_sems([&](const Term& t) {
      collect_set_forms(t, pending);
      return t;
    });
  for (const auto& sf : pending)
    for (const auto& v : free_vars(sf))
      if (binders.count(v.var_id())) return true;
  return false;
}

// A quantifier may bind a variable inside an up(...) clause from outside
// only if it is the sole quantifier scoping over that clause.
bool crosses_island(const Term& t, std::vector<std::uint32_t>& outer) {
  if (t.is_up() && outer.size() > 1) {
    for (const auto& v : free_vars(t.up_body()))
      if (std::find(outer.begin(), outer.end(), v.var_id()) != outer.end()) return true;
  }
  if (is_quantifier(t)) {
    outer.push_back(t.arg(0).var_id());
    bool r = crosses_island(t.arg(1), outer) || crosses_island(t.arg(2), outer);
    outer.pop_back();
    return r;
  }
  for (const auto& a : t.args())
    if (crosses_island(a, outer)) return true;
  return false;
}

}  // namespace

std::optional<Category> combine(Rule rule, const Category& left, const Category& right,
                                const ParseOptions& opts) {
  std::optional<Category> r;
  switch (rule) {
    case Rule::FwdApply: r = fwd_apply(left, right); break;
    case Rule::BwdApply: r = bwd_apply(left, right); break;
    case Rule::FwdCompose: r = fwd_compose(left, right); break;
    case Rule::BwdCompose: r = bwd_compose(left, right); break;
    case Rule::Lex: return std::nullopt;
  }
  if (!r || !binders_well_formed(*r)) return std::nullopt;

  // Stamps record the order in which set-forms reach a clause core.
  if (r->core().sort() == Sort::S) {
    const Term& core = r->core().sem();
    Term stamped = stamp_new(core, max_stamp(core) + 1);
    if (!stamped.same_node(core)) r = r->with_core_sem(stamped);
  }

  if (opts.block_split_np && split_np(*r)) return std::nullopt;
  if (opts.clause_island) {
    std::vector<std::uint32_t> outer;
    if (crosses_island(r->core().sem(), outer)) return std::nullopt;
  }
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<int>& Chart::cell(std::size_t begin, std::size_t end) const {
  return cells_.at(index(begin, end));
}

std::vector<int> Chart::full_span() const {
  if (tokens_.empty()) return {};
  return cell(0, tokens_.size());
}

std::vector<int> Chart::full_span_sentences() const {
  std::vector<int> out;
  for (int id : full_span()) {
    const Category& c = item(id).category;
    if (c.is_atomic() && c.sort() == Sort::S) out.push_back(id);
  }
  return out;
}

std::uint64_t Chart::derivation_count(int id) const {
  auto& memo = counts_;
  if (memo.size() != items_.size()) memo.assign(items_.size(), 0);
  auto idx = static_cast<std::size_t>(id);
  if (memo[idx]) return memo[idx];
  std::uint64_t total = 0;
  for (const auto& bp : items_[idx].backpointers) {
    if (bp.rule == Rule::Lex) total += 1;
    else total += derivation_count(bp.left) * derivation_count(bp.right);
  }
  memo[idx] = total;
  return total;
}

namespace {

bool straddles(const std::vector<std::pair<std::size_t, std::size_t>>& brackets, std::size_t b,
               std::size_t e) {
  for (auto [lo, hi] : brackets) {
    bool inside = lo <= b && e <= hi;
    bool covers = b <= lo && hi <= e;
    bool disjoint = e <= lo || hi <= b;
    if (!inside && !covers && !disjoint) return true;
  }
  return false;
}

}  // namespace

Chart parse(const Lexicon& lex, const std::vector<std::string>& tokens,
            const ParseOptions& opts) {
  if (tokens.size() > opts.max_tokens)
    throw ResourceError("sentence has " + std::to_string(tokens.size()) +
                        " tokens; limit is " + std::to_string(opts.max_tokens));
  Chart chart;
  std::vector<std::size_t> commas;
  for (const auto& t : tokens) {
    if (t == ",") commas.push_back(chart.tokens_.size());
    else chart.tokens_.push_back(t);
  }
  // An unpaired final comma brackets nothing.
  for (std::size_t i = 0; i + 1 < commas.size(); i += 2)
    if (commas[i] < commas[i + 1]) chart.brackets_.emplace_back(commas[i], commas[i + 1]);
  const std::size_t n = chart.tokens_.size();
  chart.cells_.assign((n + 1) * (n + 1), {});
  std::vector<std::unordered_map<std::string, int>> keys((n + 1) * (n + 1));
  VarSupply supply;

  auto add = [&](std::size_t b, std::size_t e, Category cat, Backpointer bp) {
    std::size_t ci = chart.index(b, e);
    std::string key = variant_key(cat);
    auto it = keys[ci].find(key);
    if (it != keys[ci].end()) {
      chart.items_[static_cast<std::size_t>(it->second)].backpointers.push_back(bp);
      return;
    }
    int id = static_cast<int>(chart.items_.size());
    chart.items_.push_back(ChartItem{id, b, e, std::move(cat), key, {bp}});
    keys[ci].emplace(chart.items_.back().key, id);
    chart.cells_[ci].push_back(id);
  };

  // A token inside a multiword entry need not start an entry of its own.
  std::size_t covered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto ms = lex.match(chart.tokens_, i, supply);
    if (ms.empty() && covered <= i) throw UnknownToken(chart.tokens_[i], i);
    for (auto& m : ms) {
      covered = std::max(covered, i + m.consumed);
      add(i, i + m.consumed, m.category, Backpointer{Rule::Lex, -1, -1, m.entry});
    }
  }

  static constexpr Rule kRules[] = {Rule::FwdApply, Rule::BwdApply, Rule::FwdCompose,
                                    Rule::BwdCompose};
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t b = 0; b + len <= n; ++b) {
      std::size_t e = b + len;
      if (opts.comma_brackets && straddles(chart.brackets_, b, e)) continue;
      for (std::size_t k = b + 1; k < e; ++k) {
        // Copy: `add` may grow other cells but never these two.
        const std::vector<int> lefts = chart.cells_[chart.index(b, k)];
        const std::vector<int> rights = chart.cells_[chart.index(k, e)];
        for (int l : lefts) {
          for (int r : rights) {
            for (Rule rule : kRules) {
              auto res = combine(rule, chart.items_[static_cast<std::size_t>(l)].category,
                                 chart.items_[static_cast<std::size_t>(r)].category, opts);
              if (res) add(b, e, std::move(*res), Backpointer{rule, l, r, nullptr});
            }
          }
        }
      }
    }
  }
  return chart;
}

// ---------------------------------------------------------------------------

std::vector<Rule> Derivation::steps() const {
  std::vector<Rule> out;
  std::function<void(const Derivation&)> go = [&](const Derivation& d) {
    for (const auto& c : d.children) go(c);
    if (d.rule != Rule::Lex) out.push_back(d.rule);
  };
  go(*this);
  return out;
}

namespace {

void enumerate(const Chart& chart, int id, std::size_t limit,
               std::vector<Derivation>& out) {
  const ChartItem& it = chart.item(id);
  for (const auto& bp : it.backpointers) {
    if (out.size() >= limit) return;
    if (bp.rule == Rule::Lex) {
      out.push_back(Derivation{Rule::Lex, it.begin, it.end, it.category, bp.entry->tag, {}});
      continue;
    }
    std::vector<Derivation> ls, rs;
    enumerate(chart, bp.left, limit, ls);
    enumerate(chart, bp.right, limit, rs);
    for (const auto& l : ls) {
      for (const auto& r : rs) {
        if (out.size() >= limit) return;
        out.push_back(Derivation{bp.rule, it.begin, it.end, it.category, "", {l, r}});
      }
    }
  }
}

}  // namespace

std::vector<Derivation> derivations(const Chart& chart, int item, std::size_t limit) {
  std::vector<Derivation> out;
  enumerate(chart, item, limit, out);
  return out;
}

std::optional<Category> replay(const Derivation& d, const ParseOptions& opts) {
  if (d.rule == Rule::Lex) return d.category;
  auto l = replay(d.children.at(0), opts);
  auto r = replay(d.children.at(1), opts);
  if (!l || !r) return std::nullopt;
  return combine(d.rule, *l, *r, opts);
}

std::vector<std::string> derivation_lines(const Derivation& d,
                                          const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  std::function<void(const Derivation&)> go = [&](const Derivation& x) {
    for (const auto& c : x.children) go(c);
    std::string label = x.rule == Rule::Lex ? "lex" : std::string(rule_label(x.rule));
    out.push_back(label + "\t" + join_tokens(tokens, x.begin, x.end) + "\t" +
                  to_string(variant_rename(x.category)));
  };
  go(d);
  return out;
}

std::string format_derivation(const Derivation& d, const std::vector<std::string>& tokens) {
  std::ostringstream os;
  for (const auto& line : derivation_lines(d, tokens)) os << line << '\n';
  return os.str();
}

}  // namespace scopeccg
