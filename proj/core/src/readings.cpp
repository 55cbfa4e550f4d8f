#include "scopeccg/readings.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

namespace scopeccg {

namespace {

using Path = std::vector<std::size_t>;

bool is_boundary(const Term& t) { return is_quantifier(t) || t.is_lam() || t.is_up(); }

void check_binders(const Term& t) {
  if (t.is_compound() && t.arity() == 3 && t.name().rfind("q-", 0) == 0 && !t.arg(0).is_var())
    throw NormalizeError("quantifier " + t.name() + " binds a non-variable: " + to_string(t));
}

struct Occurrence {
  Path anchor;  // position of the outermost enclosing set-form in the region
  bool direct;  // the occurrence sits at `anchor` itself
  Term sform;
};

void scan(const Term& t, Path& path, const Path* anchor, std::vector<Occurrence>& out);

// Set-forms inside a set-form's restriction, anchored at the host.
void scan_restriction(const Term& sform, const Path& anchor, std::vector<Occurrence>& out) {
  const Term& noun = sform.arg(0);
  Path scratch;
  scan(noun.is_lam() ? noun.lam_body() : noun, scratch, &anchor, out);
}

// Set-forms reachable from `t` without crossing a region boundary.
void scan(const Term& t, Path& path, const Path* anchor, std::vector<Occurrence>& out) {
  check_binders(t);
  if (is_set_form(t)) {
    const Path& a = anchor ? *anchor : path;
    out.push_back({a, anchor == nullptr, t});
    scan_restriction(t, a, out);
    return;
  }
  if (is_boundary(t) || !t.is_compound()) return;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    scan(t.arg(i), path, anchor, out);
    path.pop_back();
  }
}

bool contains(const Term& t, const Term& sub) {
  if (t == sub) return true;
  for (const auto& a : t.args())
    if (contains(a, sub)) return true;
  return false;
}

struct Group {
  Term sform;
  int stamp = 0;
  std::size_t first = 0;  // index of first occurrence, preorder
  std::vector<Path> anchors;
  std::vector<Path> direct;
  Term var;
};

// Occurrences merged by structural identity, in first-occurrence order.
std::vector<Group> group_occurrences(const std::vector<Occurrence>& occs, VarSupply& supply) {
  std::vector<Group> groups;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < occs.size(); ++i) {
    const Occurrence& o = occs[i];
    std::string key = to_string(o.sform);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, groups.size()).first;
      groups.push_back(Group{o.sform, o.sform.stamp(), i, {}, {}, supply.fresh("V")});
    }
    Group& g = groups[it->second];
    g.anchors.push_back(o.anchor);
    if (o.direct) g.direct.push_back(o.anchor);
    int s = o.sform.stamp();
    if (s && (g.stamp == 0 || s < g.stamp)) g.stamp = s;
  }
  return groups;
}

// Outer-to-inner order. A set-form nested in another's restriction goes
// outside it; otherwise earlier stamp first, unstamped after stamped, then
// leftmost first.
std::vector<const Group*> order_groups(std::vector<const Group*> gs) {
  auto before = [](const Group* a, const Group* b) {
    int sa = a->stamp ? a->stamp : INT_MAX;
    int sb = b->stamp ? b->stamp : INT_MAX;
    if (sa != sb) return sa < sb;
    return a->first < b->first;
  };
  std::vector<const Group*> out;
  while (!gs.empty()) {
    std::size_t best = gs.size();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      bool nested_in_other = false;
      for (std::size_t j = 0; j < gs.size() && !nested_in_other; ++j)
        nested_in_other = j != i && contains(gs[i]->sform.arg(0), gs[j]->sform);
      // gs[i] must wait if it hosts some remaining group.
      if (nested_in_other) continue;
      if (best == gs.size() || before(gs[i], gs[best])) best = i;
    }
    if (best == gs.size()) best = 0;  // cyclic containment cannot happen for finite terms
    out.push_back(gs[best]);
    gs.erase(gs.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Term wrap(const std::vector<std::pair<std::string, std::pair<Term, Term>>>& layers, Term body) {
  for (auto it = layers.rbegin(); it != layers.rend(); ++it)
    body = Term::compound(it->first, {it->second.first, it->second.second, std::move(body)});
  return body;
}

class Promoter {
 public:
  explicit Promoter(VarSupply& supply) : supply_(supply) {}

  Term promote(const Term& t) {
    check_binders(t);
    if (is_quantifier(t))
      return Term::compound(t.name(), {t.arg(0), promote(t.arg(1)), promote(t.arg(2))});
    if (t.is_lam()) return Term::lam(t.lam_param(), promote(t.lam_body()));
    if (t.is_up()) return Term::up(promote(t.up_body()));
    if (t.is_var() || t.is_atom()) return t;
    return promote_region(t);
  }

 private:
  struct Plan {
    std::vector<Group> groups;
    std::map<Path, const Group*> direct;
    std::map<Path, std::vector<const Group*>> targets;
    std::map<std::string, const Group*> by_key;
  };

  // Normalizes each clausal argument and moves its quantifier prefix out to
  // wrap the predicate taking it; set-forms at that predicate then scope
  // below the clause's quantifiers.
  Term lift_clauses(const Term& t) {
    if (is_boundary(t) || !t.is_compound()) return t;
    std::vector<std::pair<std::string, std::pair<Term, Term>>> prefix;
    std::vector<Term> args;
    for (const auto& a : t.args()) {
      if (!a.is_up()) {
        args.push_back(lift_clauses(a));
        continue;
      }
      Term body = promote(a.up_body());
      while (is_quantifier(body)) {
        prefix.push_back({body.name(), {body.arg(0), body.arg(1)}});
        body = body.arg(2);
      }
      args.push_back(Term::up(body));
    }
    Term out = Term::compound(t.name(), std::move(args));
    if (t.stamp()) out = out.with_stamp(t.stamp());
    return wrap(prefix, out);
  }

  Term promote_region(const Term& original) {
    Term t = lift_clauses(original);
    if (is_quantifier(t)) return promote(t);
    std::vector<Occurrence> occs;
    Path p;
    scan(t, p, nullptr, occs);
    Plan plan;
    plan.groups = group_occurrences(occs, supply_);
    for (const auto& g : plan.groups) {
      Path target;
      for (std::size_t i = 0; i < g.anchors.size(); ++i) {
        Path parent = g.anchors[i];
        if (!parent.empty()) parent.pop_back();
        if (i == 0) {
          target = parent;
        } else {
          std::size_t n = 0;
          while (n < target.size() && n < parent.size() && target[n] == parent[n]) ++n;
          target.resize(n);
        }
      }
      for (const auto& d : g.direct) plan.direct[d] = &g;
      plan.targets[target].push_back(&g);
      plan.by_key[to_string(g.sform)] = &g;
    }
    for (auto& [_, gs] : plan.targets) gs = order_groups(gs);
    Path path;
    return rebuild(t, path, plan);
  }

  Term rebuild(const Term& t, Path& path, const Plan& plan) {
    auto occ = plan.direct.find(path);
    if (occ != plan.direct.end()) return occ->second->var;
    if (is_boundary(t)) return promote(t);
    if (!t.is_compound()) return t;
    std::vector<Term> args;
    args.reserve(t.arity());
    for (std::size_t i = 0; i < t.arity(); ++i) {
      path.push_back(i);
      args.push_back(rebuild(t.arg(i), path, plan));
      path.pop_back();
    }
    std::vector<std::pair<std::string, std::pair<Term, Term>>> layers;
    auto tg = plan.targets.find(path);
    if (tg != plan.targets.end())
      for (const Group* g : tg->second)
        layers.push_back({"q-" + determiner_of(g->sform), {g->var, restriction(*g, plan)}});
    return wrap(layers, Term::compound(t.name(), std::move(args)));
  }

  Term restriction(const Group& g, const Plan& plan) {
    const Term& noun = g.sform.arg(0);
    Term r = noun;
    if (noun.is_lam() && noun.lam_param().is_var()) {
      Subst s;
      s.bind(noun.lam_param().var_id(), g.var);
      r = apply(s, noun.lam_body());
    } else if (noun.is_atom()) {
      r = Term::compound(noun.name(), {g.var});
    } else {
      throw NormalizeError("set-form restriction is not a property: " + to_string(g.sform));
    }
    return promote(replace_nested(r, plan));
  }

  Term replace_nested(const Term& t, const Plan& plan) {
    if (is_set_form(t)) {
      auto it = plan.by_key.find(to_string(t));
      if (it != plan.by_key.end()) return it->second->var;
    }
    if (is_boundary(t) || !t.is_compound()) return t;
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(replace_nested(a, plan));
    return Term::compound(t.name(), std::move(args));
  }

  VarSupply& supply_;
};

std::uint32_t max_var_id(const Term& t) {
  std::uint32_t m = 0;
  for (const auto& v : all_vars(t)) m = std::max(m, v.var_id());
  return m;
}

}  // namespace

Term normalize(const Term& t) {
  VarSupply supply(max_var_id(t) + 1);
  Promoter p(supply);
  return canonicalize(p.promote(t));
}

std::vector<Reading> readings(const Chart& chart) {
  auto ids = chart.full_span_sentences();
  if (ids.empty()) throw NoParse("no full-span sentence analysis");
  std::map<std::string, Reading> merged;
  for (int id : ids) {
    Term r = normalize(chart.item(id).category.sem());
    auto [it, inserted] = merged.try_emplace(to_string(r), Reading{r, 0});
    it->second.multiplicity += chart.derivation_count(id);
  }
  std::vector<Reading> out;
  for (auto& [_, r] : merged) out.push_back(std::move(r));
  return out;
}

std::vector<Reading> readings(const Lexicon& lex, std::string_view sentence,
                              const ParseOptions& opts) {
  return readings(parse(lex, tokenize(sentence), opts));
}

std::uint64_t sentence_derivations(const Chart& chart) {
  std::uint64_t n = 0;
  for (int id : chart.full_span_sentences()) n += chart.derivation_count(id);
  return n;
}

// ---------------------------------------------------------------------------

namespace {

// Nested quantifiers are searched too: a restriction may be wrapped by the
// quantifier of a modifying NP.
void last_unary_of(const Term& t, std::uint32_t var, std::string& out) {
  if (t.is_compound() && t.arity() == 1 && t.arg(0).is_var() && t.arg(0).var_id() == var &&
      !is_set_form(t))
    out = t.name();
  for (const auto& a : t.args()) last_unary_of(a, var, out);
}

std::string label_of(const Term& q) {
  std::string noun;
  last_unary_of(q.arg(1), q.arg(0).var_id(), noun);
  if (noun.empty()) noun = q.arg(1).is_var() ? "?" : q.arg(1).name();
  return determiner_of(q) + ":" + noun;
}

void collect_labels(const Term& t, std::vector<std::string>& out) {
  if (is_quantifier(t)) out.push_back(label_of(t));
  for (const auto& a : t.args()) collect_labels(a, out);
}

bool contains_label(const Term& t, std::string_view label) {
  if (is_quantifier(t) && label_of(t) == label) return true;
  for (const auto& a : t.args())
    if (contains_label(a, label)) return true;
  return false;
}

bool any_outscopes(const Term& t, std::string_view d1, std::string_view d2) {
  if (is_quantifier(t) && label_of(t) == d1 &&
      (contains_label(t.arg(1), d2) || contains_label(t.arg(2), d2)))
    return true;
  for (const auto& a : t.args())
    if (any_outscopes(a, d1, d2)) return true;
  return false;
}

}  // namespace

std::vector<std::string> determiner_labels(const Term& reading) {
  std::vector<std::string> out;
  collect_labels(reading, out);
  return out;
}

std::vector<std::string> distinct_labels(const Term& reading) {
  std::vector<std::string> out;
  for (auto& l : determiner_labels(reading))
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
  return out;
}

bool outscopes(const Term& reading, std::string_view d1, std::string_view d2) {
  for (auto d : {d1, d2})
    if (!contains_label(reading, d))
      throw std::invalid_argument("no determiner occurrence '" + std::string(d) + "'");
  return any_outscopes(reading, d1, d2);
}

std::vector<std::pair<std::string, std::string>> outscope_pairs(const Term& reading) {
  std::vector<std::pair<std::string, std::string>> out;
  auto labels = distinct_labels(reading);
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (a != b && any_outscopes(reading, a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace scopeccg
