#pragma once

#include "varfn/checkers.hpp"

namespace varfn {

// Finite tabulation of a function on all words of length <= bound, in
// shortlex order. The constructive stand-in that lets quasi-inverses be
// chosen canonically instead of by choice principles.
struct FnTable {
  AlphabetPtr alphabet;
  int bound = 0;
  std::string source;                               // name of the tabulated function
  std::vector<std::pair<Word, OutputValue>> entries;  // enumeration order
  std::map<Word, OutputValue, WordLess> index;

  bool contains(const Word& w) const { return index.count(w) > 0; }

  // Throws std::out_of_range beyond the tabulated domain; callers are
  // expected to keep quantifier bounds inside it.
  const OutputValue& at(const Word& w) const;

  // The table as a function usable by the checkers. Evaluation outside
  // the tabulated domain throws; bound bookkeeping below keeps checks
  // inside it.
  VariadicFn as_fn() const;
};

FnTable tabulate(const VariadicFn& f, int bound);

// A canonical quasi-inverse of a tabulated function: for each value the
// shortlex-least preimage, preferring preimages inside D when a domain
// is supplied. By construction f(g(v)) = v on the tabulated range and
// dom(g) equals that range exactly.
struct QuasiInverse {
  enum class Flavor { Plain, RelativeToDomain };

  Flavor flavor = Flavor::Plain;
  std::string domain_name;
  std::map<OutputValue, Word, ValueLess> g;
  // Range values with no D-preimage at this bound; the domain-relative
  // requirement only concerns values attained on D, so these fall back
  // to the plain choice and are flagged rather than failed.
  std::vector<OutputValue> uncertified;
};

QuasiInverse quasi_inverse(const FnTable& table, const DomainSet* domain = nullptr);

// Verification record for one factorization; every claim is checked at
// an explicit bound and failures are recorded, never silently dropped.
struct FactorizationReport {
  bool f_injective = true;
  std::optional<std::pair<Word, Word>> injectivity_witness;  // distinct H-values, equal f-values
  long long compose_mismatches = 0;
  std::optional<Word> first_mismatch;

  int inner_growth = 0;   // max |H(w)| - |w| over the table, floored at 0
  int class_bound = 0;    // bound for the class checks: bound - inner_growth

  CheckVerdict idempotent_on_domain;            // H(H(d)) = H(d) on D (or everywhere)
  CheckVerdict idempotent_everywhere;           // H(H(w)) = H(w) on the whole table
  std::optional<bool> h_maps_domain_into_domain;
  std::optional<Word> domain_escape_witness;

  CheckVerdict class_plain;                     // relaxed equation check on H, plain
  std::optional<CheckVerdict> class_primed;     // and primed, when a domain is given

  std::optional<CheckVerdict> range_determined;  // of the source function
  std::optional<CheckVerdict> h_domain_valued;   // when range_determined passed
  std::optional<CheckVerdict> h_associative;     // ditto, full plain equation check
};

// F = f o H with H = g o F for the canonical quasi-inverse g, and f the
// restriction of F to the values of H. All tables live on words of
// length <= bound.
struct Factorization {
  FnTable h;
  std::vector<std::pair<Word, OutputValue>> f;  // keyed by H-values, first-seen order
  QuasiInverse g;
  FactorizationReport report;
};

Factorization factorize(const VariadicFn& f, int bound, const DomainSet* domain = nullptr,
                        int workers = 1);

}  // namespace varfn
