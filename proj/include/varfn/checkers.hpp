#pragma once

#include "varfn/catalogue.hpp"
#include "varfn/domains.hpp"

#include <optional>

namespace varfn {

enum class CheckMode { Plain, Primed };

enum class CexKind { Eq1, Eq2, Cond3, Range, Idem };

std::string to_string(CexKind kind);
std::string to_string(CheckMode mode);

// A replayable refutation witness. For Eq1: lhs = F(xyz) and
// rhs = F(x F(y) z). For Eq2: F(y) = F(y') but lhs = F(xyz) differs from
// rhs = F(xy'z). For the remaining kinds, y carries the violating word
// and note says which side of the property broke. witness_d is the
// shortlex-least domain word with matching value where one exists
// (primed checks, attained-below violations).
struct Counterexample {
  CexKind kind = CexKind::Eq1;
  Word x;
  Word y;
  Word z;
  std::optional<Word> yprime;
  OutputValue lhs;
  OutputValue rhs;
  std::optional<Word> witness_d;
  std::string note;
};

// Refuted(counterexample) or PassedUpTo(bound, cases checked). A pass is
// bound-relative and never claims unbounded membership.
struct CheckVerdict {
  bool refuted = false;
  int bound = 0;
  int domain_bound = -1;  // -1 when the check takes no separate domain bound
  long long cases_checked = 0;
  std::optional<Counterexample> cex;

  bool passed() const { return !refuted; }

  static CheckVerdict pass(int bound, long long cases, int domain_bound = -1);
  static CheckVerdict refute(int bound, Counterexample ce, int domain_bound = -1);
};

// Bounded check of F(xyz) = F(x F(y) z) over all triples with
// |xyz| <= bound, canonical order (y, x, z), each component shortlex.
// Plain admits y in D; Primed admits y with F(y) in F(D up to
// domain_bound) and records the least matching d as witness_d. An
// admitted y whose value is not a word refutes the class side condition
// (range within words) and is reported with note "value-not-a-word".
// The inner argument x F(y) z may exceed the bound; F is total, so it is
// evaluated exactly. workers > 1 partitions the search; the verdict and
// witness equal the sequential ones.
CheckVerdict check_eq1(const VariadicFn& f, const DomainSet& d, CheckMode mode, int bound,
                       int domain_bound, int workers = 1);

// Bounded check of F(y) = F(y') => F(xyz) = F(xy'z) over all quadruples
// with |xyz| <= bound and |xy'z| <= bound, canonical order
// (y, y', x, z). Plain admits y and y' in D; Primed admits y in D with
// y' unrestricted.
CheckVerdict check_eq2(const VariadicFn& f, const DomainSet& d, CheckMode mode, int bound,
                       int workers = 1);

// Bounded check that values of F at lengths <= m and only those appear
// among F's values on short words: with R the set of values F takes on
// words of length <= m, every y with |y| <= bound satisfies
// F(y) in R iff |y| <= m.
CheckVerdict check_condition3(const VariadicFn& f, int m, int bound);

enum class RangeProperty { DValued, DDetermined };

// DValued: every value on words of length <= bound is a word lying in D.
// DDetermined: the value set on words of length <= bound equals the
// value set on D-words of length <= bound.
CheckVerdict check_range(const VariadicFn& f, const DomainSet& d, RangeProperty which, int bound);

// Every value attained on words of length exactly m+1 is already
// attained at some length <= m. Requires bound >= m + 1.
CheckVerdict check_m_determined(const VariadicFn& f, int m, int bound);

// For every d in D with |d| <= bound: F(d) is a word and F(F(d)) = F(d).
CheckVerdict check_idempotent_on(const VariadicFn& f, const DomainSet& d, int bound);

// Re-evaluates the witness and confirms it still exhibits the recorded
// violation. Used by tests and report verification.
bool replay(const VariadicFn& f, const Counterexample& ce);

}  // namespace varfn
