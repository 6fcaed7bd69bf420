#pragma once

#include "varfn/words.hpp"

#include <variant>

namespace varfn {

// Word subsets used to parameterize the relaxed class checks. Each
// variant is a decidable predicate plus a bounded enumerator.
//
//   Full          every word
//   MaxLen(m)     |w| <= m
//   MinLen(m)     |w| >= m
//   Repeats       w = x^n for a single letter x (includes the empty word)
//   Factor(v)     v occurs as a contiguous factor of w
//   Threshold(s)  single numeric letter with value <= s
//   Explicit(S)   finite word set
struct DomainSpec {
  struct Full {};
  struct MaxLen {
    int m = 0;
  };
  struct MinLen {
    int m = 0;
  };
  struct Repeats {};
  struct Factor {
    Word w;
  };
  struct Threshold {
    Rational s;
  };
  struct Explicit {
    std::vector<Word> words;
  };

  std::variant<Full, MaxLen, MinLen, Repeats, Factor, Threshold, Explicit> spec;

  static DomainSpec full() { return {Full{}}; }
  static DomainSpec max_len(int m) { return {MaxLen{m}}; }
  static DomainSpec min_len(int m) { return {MinLen{m}}; }
  static DomainSpec repeats() { return {Repeats{}}; }
  static DomainSpec factor(Word w) { return {Factor{std::move(w)}}; }
  static DomainSpec threshold(Rational s) { return {Threshold{s}}; }
  static DomainSpec explicit_set(std::vector<Word> words) { return {Explicit{std::move(words)}}; }
};

class DomainSet {
 public:
  // Throws ConfigError for Explicit({}) and for negative length bounds;
  // the predicate variants are nonempty by construction.
  DomainSet(DomainSpec spec, AlphabetPtr alphabet, std::string name = "");

  bool contains(const Word& w) const;

  // { w : |w| <= max_len and contains(w) } in shortlex order.
  std::vector<Word> enumerate(int max_len) const;

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const DomainSpec& spec() const { return spec_; }
  const std::string& name() const { return name_; }

  // Text form of the defining predicate, e.g. "maxlen(2)".
  std::string describe() const;

 private:
  DomainSpec spec_;
  AlphabetPtr alphabet_;
  std::string name_;
};

// True iff enumerate(d1, bound) is contained in enumerate(d2, bound).
bool subset_up_to(const DomainSet& d1, const DomainSet& d2, int bound);

}  // namespace varfn
