#include "scopeccg/baseline.hpp"

#include <algorithm>
#include <numeric>

namespace scopeccg {

namespace {

bool is_leaf(const Term& t) { return t.is_compound() && t.name() == "q?"; }

Term strip(const Term& t, int host, std::vector<QLeaf>& leaves) {
  if (is_leaf(t)) {
    if (t.arity() != 3 || !t.arg(0).is_atom() || !t.arg(1).is_var())
      throw ParseError("leaf must be q?(det, Var, restriction): " + to_string(t), 0);
    int self = static_cast<int>(leaves.size());
    leaves.push_back(QLeaf{t.arg(0).name(), t.arg(1), t.arg(1), host});
    Term r = strip(t.arg(2), self, leaves);
    leaves[static_cast<std::size_t>(self)].restriction = r;
    return t.arg(1);
  }
  if (!t.is_compound() && !t.is_lam() && !t.is_up()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(strip(a, host, leaves));
  if (t.is_lam()) return Term::lam(args[0], args[1]);
  if (t.is_up()) return Term::up(args[0]);
  return Term::compound(t.name(), std::move(args));
}

Term quant(const QLeaf& l, Term body) {
  return Term::compound("q-" + l.det, {l.var, l.restriction, std::move(body)});
}

std::string leaf_label(const QLeaf& l) {
  return determiner_labels(quant(l, Term::atom("true"))).front();
}

}  // namespace

QSkeleton make_skeleton(const Term& marked) {
  QSkeleton sk{marked, {}};
  sk.core = strip(marked, -1, sk.leaves);
  std::set<std::uint32_t> seen;
  for (const auto& l : sk.leaves)
    if (!seen.insert(l.var.var_id()).second)
      throw ParseError("leaf variable used twice: " + l.var.name(), 0);
  return sk;
}

QSkeleton parse_skeleton(std::string_view text) { return make_skeleton(parse_term(text)); }

std::vector<ScopedForm> enumerate_orderings(const QSkeleton& sk, std::size_t max_leaves) {
  const std::size_t n = sk.leaves.size();
  if (n > max_leaves)
    throw TooManyQuantifiers(std::to_string(n) + " quantifiers; limit is " +
                             std::to_string(max_leaves));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ScopedForm> out;
  do {
    // Decide placement: inside the host's restriction when the leaf directly
    // follows its host (or a sibling already placed there).
    std::vector<int> inside(n, -1);
    for (std::size_t i = 1; i < n; ++i) {
      const QLeaf& l = sk.leaves[perm[i]];
      if (l.host < 0) continue;
      auto prev = static_cast<int>(perm[i - 1]);
      if (prev == l.host || inside[perm[i - 1]] == l.host) inside[perm[i]] = l.host;
    }
    std::vector<QLeaf> leaves = sk.leaves;
    // Innermost first so restrictions are complete before their host wraps.
    for (std::size_t i = n; i-- > 0;) {
      std::size_t k = perm[i];
      if (inside[k] < 0) continue;
      QLeaf& host = leaves[static_cast<std::size_t>(inside[k])];
      host.restriction = quant(leaves[k], host.restriction);
    }
    Term body = sk.core;
    ScopedForm f{body, {}};
    for (std::size_t i = n; i-- > 0;)
      if (inside[perm[i]] < 0) body = quant(leaves[perm[i]], body);
    f.term = body;
    for (std::size_t k : perm) f.order.push_back(leaf_label(sk.leaves[k]));
    out.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<ScopedForm> uvc_filter(const std::vector<ScopedForm>& forms) {
  std::vector<ScopedForm> out;
  for (const auto& f : forms)
    if (free_vars(f.term).empty()) out.push_back(f);
  return out;
}

ScopeProfile profile(const Term& t) {
  auto pairs = outscope_pairs(t);
  return ScopeProfile(pairs.begin(), pairs.end());
}

CompareReport compare(const std::vector<Reading>& ccg, const QSkeleton& sk) {
  CompareReport rep;
  auto all = enumerate_orderings(sk);
  auto uvc = uvc_filter(all);
  rep.baseline_total = all.size();
  rep.baseline_uvc = uvc.size();
  rep.ccg_count = ccg.size();
  std::vector<ScopeProfile> ccg_profiles;
  for (const auto& r : ccg) ccg_profiles.push_back(profile(r.term));
  std::vector<ScopeProfile> base_profiles;
  for (const auto& f : uvc) {
    base_profiles.push_back(profile(f.term));
    if (std::find(ccg_profiles.begin(), ccg_profiles.end(), base_profiles.back()) ==
        ccg_profiles.end())
      rep.gap.push_back(f);
  }
  for (std::size_t i = 0; i < ccg.size(); ++i)
    if (std::find(base_profiles.begin(), base_profiles.end(), ccg_profiles[i]) ==
        base_profiles.end())
      rep.unmatched_ccg.push_back(ccg[i]);
  return rep;
}

std::string format_order(const std::vector<std::string>& order) {
  std::string out;
  for (const auto& d : order) {
    if (!out.empty()) out += " > ";
    out += d.substr(0, d.find(':'));
  }
  return out;
}

}  // namespace scopeccg
