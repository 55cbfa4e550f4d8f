#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scopeccg/readings.hpp"
#include "scopeccg/term.hpp"

namespace scopeccg {

// A predicate-argument term whose quantified positions are marked leaves
// `q?(det, V, restriction)`. Restrictions may contain further leaves.
struct QLeaf {
  std::string det;
  Term var;
  Term restriction;  // inner leaves replaced by their variables
  int host = -1;     // index of the leaf whose restriction contains this one
};

struct QSkeleton {
  Term core;  // leaves replaced by their variables
  std::vector<QLeaf> leaves;
};

class TooManyQuantifiers : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QSkeleton parse_skeleton(std::string_view text);
QSkeleton make_skeleton(const Term& marked);

struct ScopedForm {
  Term term;
  std::vector<std::string> order;  // determiners, outermost first
};

// One form per linear order of the leaves (n! forms, n <= 8). Each
// quantifier nests at top level around the core, except that a leaf which
// directly follows its host in the order goes inside the host's restriction.
std::vector<ScopedForm> enumerate_orderings(const QSkeleton& sk, std::size_t max_leaves = 8);

// Forms without free variables.
std::vector<ScopedForm> uvc_filter(const std::vector<ScopedForm>& forms);

using ScopeProfile = std::set<std::pair<std::string, std::string>>;
ScopeProfile profile(const Term& t);

struct CompareReport {
  std::size_t baseline_total = 0;
  std::size_t baseline_uvc = 0;
  std::size_t ccg_count = 0;
  std::vector<ScopedForm> gap;  // UVC survivors with no CCG reading of the same profile
  std::vector<Reading> unmatched_ccg;  // CCG readings with no surviving baseline form
};

CompareReport compare(const std::vector<Reading>& ccg, const QSkeleton& sk);

std::string format_order(const std::vector<std::string>& order);

}  // namespace scopeccg
