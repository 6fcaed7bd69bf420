#pragma once

#include "varfn/checkers.hpp"

namespace varfn {

// The four relaxed-class families over the nested length-bounded
// domains: A/Aprime run the substitution-equation check (plain/primed),
// P/Pprime the implication check.
enum class Family { A, Aprime, P, Pprime };

std::string to_string(Family family);
Family parse_family(const std::string& text);

// Runs one family check with the length-m domain.
CheckVerdict run_family_check(const VariadicFn& f, Family family, const DomainSet& d, int bound,
                              int domain_bound, int workers = 1);

struct HierarchyProfile {
  Family family = Family::A;
  int bound = 0;
  int max_m = 0;

  std::vector<std::pair<int, CheckVerdict>> per_m;

  enum class KKind { Finite, Infinite, OutsideHierarchy };
  KKind k_kind = KKind::Infinite;
  int k = 0;  // meaningful for Finite only

  // 2^-k when k is finite, 0 for members of every observed level,
  // unset outside the hierarchy. Always bound-relative.
  std::optional<Rational> degree;
  std::vector<std::string> annotations;
};

// Membership profile across domains maxlen(0) .. maxlen(max_m) at one
// bound. k is the least level that passes while the next refutes; level
// 0 is admitted as a valid k (annotated), refutation already at level 0
// reports OutsideHierarchy, and passing every level reports degree 0.
HierarchyProfile profile(const VariadicFn& f, Family family, int bound, int max_m,
                         int workers = 1);

// Result of a first-found search for a function separating two family
// checks over the same domain at the same bound.
struct SeparationResult {
  bool found = false;
  long long candidates_tried = 0;
  std::optional<VariadicFn> separator;
  Family member_of = Family::A;
  Family refuted_in = Family::A;
  std::optional<Counterexample> witness;
};

// Candidate stream; empty optional ends the search.
using FnGenerator = std::function<std::optional<VariadicFn>()>;

// Exhaustive stream of table functions: identity on words of length <
// vary_len, every assignment of values (words of length <= out_len) on
// words of length exactly vary_len, longer inputs capped to their
// vary_len prefix. Deterministic enumeration order.
FnGenerator exhaustive_table_generator(AlphabetPtr alphabet, int vary_len, int out_len);

FnGenerator explicit_generator(std::vector<VariadicFn> fns);

SeparationResult separation_search(Family first, Family second, const DomainSet& d,
                                   const FnGenerator& generator, int bound, int workers = 1);

}  // namespace varfn
