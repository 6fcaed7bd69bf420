#pragma once

#include "varfn/words.hpp"

#include <functional>
#include <map>
#include <optional>

namespace varfn {

// A named, pure, total function from words to values. Instances are
// immutable; eval is reentrant and deterministic, so they are safe to
// share across worker threads.
struct VariadicFn {
  std::string name;
  AlphabetPtr alphabet;
  std::map<std::string, std::string> params;  // construction record, rendered in reports
  std::function<OutputValue(const Word&)> eval;

  OutputValue operator()(const Word& w) const { return eval(w); }
};

// Parameters accepted by catalogue entries. Which fields an entry reads
// is documented per entry; unset required fields are a ConfigError.
struct FnParams {
  std::optional<long long> m;
  std::optional<Word> word;                     // factor_marker
  std::optional<Letter> letter;                 // empty_to_letter, collapse_letter
  std::map<std::string, std::string> perm;      // letterwise_perm
};

struct CatalogueEntry {
  std::string key;
  std::string summary;
  std::string params_doc;
  std::string requires_doc;
};

// The entry list in registration order, for CLI listing.
const std::vector<CatalogueEntry>& catalogue_entries();

// Builds the named entry over the given alphabet. Unknown keys and
// unsatisfied alphabet capabilities (missing v/c symbols for indexer,
// parameters out of range) raise ConfigError.
//
// Keys:
//   identity                    F(x) = x
//   sort                        letters sorted ascending in alphabet order
//   uppercase                   letterwise case_map application (identity off the map)
//   length                      opaque token "len:n" for |x| = n
//   prefix                      [m] identity up to length m, else the length-m prefix
//   indexer                     [m] prefix of length m, remaining letters classified
//                               v/c by vowel_set membership
//   prefix_with_length          [m>=1] identity below length m, else first m-1 letters
//                               plus the total length as a numeric letter
//   prefix_with_symbol_count    [m] identity below length m, else first m letters plus
//                               the count of symbolic letters as a numeric letter
//   prefix_with_gap             [m>=1] identity at lengths <= m and m+2, else the
//                               length-m prefix
//   factor_marker               [word w] w when w is a factor of the input, else the
//                               empty word
//   mean                        arithmetic mean of an all-numeric word as a single
//                               letter; opaque "mean:nonnumeric" otherwise
//   letterwise_perm             [perm] configured symbol permutation applied letterwise
//   prefix_plus_prev            [m>=1] identity up to length m, else the length-m
//                               prefix plus the next-to-last letter
//   empty_to_letter             [letter a] maps the empty word to a, identity otherwise
//   collapse_letter             [letter a] maps both the empty word and a to the empty
//                               word, identity otherwise
VariadicFn instantiate(AlphabetPtr alphabet, const std::string& key, const FnParams& params = {});

// Pointwise override: G(w) = overrides[w] when present, else F(w).
VariadicFn patch(const VariadicFn& base, std::map<Word, OutputValue, WordLess> overrides);

// (outer o inner)(w) = outer(inner(w)); a non-word inner value yields the
// in-band error value opaque("compose:nonword") so the composite stays total.
VariadicFn compose(const VariadicFn& outer, const VariadicFn& inner);

// Total function backed by a finite table on words of length <= cap_len;
// longer inputs are evaluated on their length-cap_len prefix. Used by
// generators and test tables.
VariadicFn make_capped_table_fn(AlphabetPtr alphabet, std::string name,
                                std::map<Word, OutputValue, WordLess> table, int cap_len);

}  // namespace varfn
