#pragma once

#include "varfn/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace varfn {

// Raised for invalid configuration: malformed alphabets, unknown keys,
// parameters that fail an entry's requirements, unparseable documents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LetterKind { Symbolic, Numeric };

// A letter is either a symbolic token drawn from an alphabet's symbol
// list or an exact rational value. Equality is structural and does not
// consult any alphabet.
struct Letter {
  LetterKind kind = LetterKind::Symbolic;
  std::string token;  // Symbolic only
  Rational value{0};  // Numeric only

  static Letter symbolic(std::string tok);
  static Letter numeric(Rational v);

  bool is_symbolic() const { return kind == LetterKind::Symbolic; }
  bool is_numeric() const { return kind == LetterKind::Numeric; }

  // Rendering token: the symbol itself, or the rational as "n"/"n/d".
  std::string text() const;

  bool operator==(const Letter& other) const;
  bool operator!=(const Letter& other) const { return !(*this == other); }
};

// Alphabet-independent total order on letters (symbolic first, then by
// token; numeric by value). Only used to key containers; enumeration
// order is the alphabet's business.
bool structural_less(const Letter& a, const Letter& b);

// A finite sequence of letters. The empty word is the monoid unit.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& at(std::size_t i) const { return letters.at(i); }

  void push_back(Letter l) { letters.push_back(std::move(l)); }

  // First n letters (all of them when n >= size).
  Word prefix(std::size_t n) const;

  bool operator==(const Word& other) const { return letters == other.letters; }
  bool operator!=(const Word& other) const { return !(*this == other); }
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
Word power(const Word& x, std::size_t n);

// x followed by n copies of y; n = 0 returns x unchanged.
Word concat_power(const Word& x, const Word& y, std::size_t n);

// True when `needle` occurs as a contiguous factor of `hay`. The empty
// word is a factor of everything.
bool is_factor(const Word& needle, const Word& hay);

// Alphabet-independent shortlex on structural letter order; container
// keying only.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// A finite alphabet: an ordered symbol list, an ordered list of exact
// rational sample letters, an optional vowel subset and an optional
// case-pair map. The canonical letter order -- symbols in list order,
// then numeric samples in list order -- is fixed here and drives every
// enumeration and canonical choice downstream.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> symbols,
           std::vector<Rational> numeric_samples = {},
           std::vector<std::string> vowel_set = {},
           std::map<std::string, std::string> case_map = {});

  static AlphabetPtr make(std::vector<std::string> symbols,
                          std::vector<Rational> numeric_samples = {},
                          std::vector<std::string> vowel_set = {},
                          std::map<std::string, std::string> case_map = {});

  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::vector<Rational>& numeric_samples() const { return samples_; }
  const std::vector<std::string>& vowel_list() const { return vowel_list_; }
  const std::map<std::string, std::string>& case_map() const { return case_map_; }

  // All letters in canonical order.
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t letter_count() const { return letters_.size(); }

  bool has_symbol(const std::string& token) const;
  bool is_vowel(const Letter& l) const;

  // Position in the canonical letter order; nullopt for letters outside
  // the alphabet (functions may produce those as outputs).
  std::optional<std::size_t> rank(const Letter& l) const;

  // Shortlex with the canonical letter order. Out-of-alphabet letters
  // sort after all alphabet letters, by structural order, so the
  // comparison is total on arbitrary words.
  bool shortlex_less(const Word& a, const Word& b) const;

 private:
  std::vector<std::string> symbols_;
  std::vector<Rational> samples_;
  std::vector<std::string> vowel_list_;
  std::set<std::string> vowels_;
  std::map<std::string, std::string> case_map_;
  std::vector<Letter> letters_;
  std::map<std::string, std::size_t> symbol_rank_;
  std::map<Rational, std::size_t> sample_rank_;
};

// All words of length <= max_len, exactly once each, in shortlex order.
// Count is sum_{k<=max_len} letter_count^k. Throws ConfigError for an
// alphabet with no letters at all.
std::vector<Word> enumerate_words(const Alphabet& alphabet, int max_len);

// A function value: either a word (possibly over letters outside the
// input alphabet) or an opaque token from a general codomain. Equality
// is structural and never crosses the two variants.
struct OutputValue {
  enum class Kind { Word, Opaque };

  Kind kind = Kind::Word;
  Word word;
  std::string token;

  static OutputValue from_word(Word w);
  static OutputValue opaque(std::string tok);

  bool is_word() const { return kind == Kind::Word; }

  // Compact text form used in messages and pretty output; machine
  // rendering lives in the report layer.
  std::string text() const;

  bool operator==(const OutputValue& other) const;
  bool operator!=(const OutputValue& other) const { return !(*this == other); }
};

// Structural total order on values: word values first (by WordLess),
// opaque values by token. Container keying only.
struct ValueLess {
  bool operator()(const OutputValue& a, const OutputValue& b) const;
};

// Human-readable word form: "eps" for the empty word, token
// concatenation when every token is a single character, otherwise
// space-joined tokens in brackets.
std::string word_text(const Word& w);

}  // namespace varfn
