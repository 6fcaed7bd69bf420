#pragma once

#include "varfn/config.hpp"
#include "varfn/factorization.hpp"
#include "varfn/hierarchy.hpp"

#include <random>

namespace varfn::test {

inline AlphabetPtr ab() { return Alphabet::make({"a", "b"}); }

inline AlphabetPtr abc() { return Alphabet::make({"a", "b", "c"}); }

// Vowel classification per the usual letters: a is a vowel, b, v and c
// are consonants. The indexer needs v and c present as plain symbols.
inline AlphabetPtr abvc() { return Alphabet::make({"a", "b", "v", "c"}, {}, {"a"}); }

inline AlphabetPtr ab01() {
  return Alphabet::make({"a", "b"}, {Rational(0), Rational(1)}, {"a"});
}

inline AlphabetPtr num01() { return Alphabet::make({}, {Rational(0), Rational(1)}); }

inline Word w(const Alphabet& a, const std::string& compact) {
  return parse_word_compact(a, compact);
}

inline Word nw(std::initializer_list<long long> values) {
  Word out;
  for (long long v : values) out.push_back(Letter::numeric(Rational(v)));
  return out;
}

inline DomainSet maxlen(const AlphabetPtr& a, int m) {
  return DomainSet(DomainSpec::max_len(m), a, "maxlen(" + std::to_string(m) + ")");
}

inline DomainSet full(const AlphabetPtr& a) { return DomainSet(DomainSpec::full(), a, "full"); }

inline FnParams with_m(long long m) {
  FnParams p;
  p.m = m;
  return p;
}

// Deterministic random tables: inputs of length <= in_len over the
// alphabet, each mapped to a word of length <= out_len, longer inputs
// capped to their in_len prefix. mt19937_64 with modulo reduction keeps
// the stream identical across platforms.
class TableSampler {
 public:
  TableSampler(AlphabetPtr alphabet, int in_len, int out_len, std::uint64_t seed)
      : alphabet_(std::move(alphabet)),
        in_len_(in_len),
        inputs_(enumerate_words(*alphabet_, in_len)),
        outputs_(enumerate_words(*alphabet_, out_len)),
        rng_(seed) {}

  VariadicFn next() {
    std::map<Word, OutputValue, WordLess> table;
    for (const Word& input : inputs_) {
      const Word& out = outputs_[rng_() % outputs_.size()];
      table.emplace(input, OutputValue::from_word(out));
    }
    return make_capped_table_fn(alphabet_, "sample#" + std::to_string(counter_++),
                                std::move(table), in_len_);
  }

 private:
  AlphabetPtr alphabet_;
  int in_len_;
  std::vector<Word> inputs_;
  std::vector<Word> outputs_;
  std::mt19937_64 rng_;
  long long counter_ = 0;
};

}  // namespace varfn::test
