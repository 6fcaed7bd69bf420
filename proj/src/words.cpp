#include "varfn/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace varfn {

Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw ConfigError("not a rational literal: '" + text + "'"); };
  if (text.empty()) fail();
  auto parse_int = [&](const std::string& s) -> long long {
    if (s.empty() || (s.size() == 1 && (s[0] == '-' || s[0] == '+'))) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
    }
    return std::strtoll(s.c_str(), nullptr, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ConfigError("zero denominator in rational literal: '" + text + "'");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += "/";
    s += std::to_string(r.denominator());
  }
  return s;
}

Letter Letter::symbolic(std::string tok) {
  Letter l;
  l.kind = LetterKind::Symbolic;
  l.token = std::move(tok);
  return l;
}

Letter Letter::numeric(Rational v) {
  Letter l;
  l.kind = LetterKind::Numeric;
  l.value = v;
  return l;
}

std::string Letter::text() const {
  return is_symbolic() ? token : rational_to_string(value);
}

bool Letter::operator==(const Letter& other) const {
  if (kind != other.kind) return false;
  return is_symbolic() ? token == other.token : value == other.value;
}

bool structural_less(const Letter& a, const Letter& b) {
  if (a.kind != b.kind) return a.is_symbolic();
  if (a.is_symbolic()) return a.token < b.token;
  return a.value < b.value;
}

Word Word::prefix(std::size_t n) const {
  if (n >= letters.size()) return *this;
  return Word(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<long>(n)));
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.letters.reserve(a.size() + b.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word out;
  out.letters.reserve(a.size() + b.size() + c.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
  return out;
}

Word power(const Word& x, std::size_t n) {
  Word out;
  out.letters.reserve(x.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.letters.insert(out.letters.end(), x.letters.begin(), x.letters.end());
  }
  return out;
}

Word concat_power(const Word& x, const Word& y, std::size_t n) {
  return concat(x, power(y, n));
}

bool is_factor(const Word& needle, const Word& hay) {
  if (needle.empty()) return true;
  if (needle.size() > hay.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (!(hay.letters[i + j] == needle.letters[j])) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters[i] != b.letters[i]) return structural_less(a.letters[i], b.letters[i]);
  }
  return false;
}

Alphabet::Alphabet(std::vector<std::string> symbols, std::vector<Rational> numeric_samples,
                   std::vector<std::string> vowel_set, std::map<std::string, std::string> case_map)
    : symbols_(std::move(symbols)),
      samples_(std::move(numeric_samples)),
      vowel_list_(std::move(vowel_set)),
      case_map_(std::move(case_map)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw ConfigError("alphabet symbol must be a nonempty token");
    if (!symbol_rank_.emplace(symbols_[i], i).second) {
      throw ConfigError("duplicate alphabet symbol '" + symbols_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!sample_rank_.emplace(samples_[i], i).second) {
      throw ConfigError("duplicate numeric sample '" + rational_to_string(samples_[i]) + "'");
    }
  }
  for (const auto& v : vowel_list_) {
    if (!symbol_rank_.count(v)) throw ConfigError("vowel '" + v + "' is not an alphabet symbol");
    vowels_.insert(v);
  }
  for (const auto& [from, to] : case_map_) {
    if (!symbol_rank_.count(from) || !symbol_rank_.count(to)) {
      throw ConfigError("case_map entry '" + from + "' -> '" + to + "' leaves the symbol list");
    }
    // Partial involution: wherever the image is itself mapped, it must
    // map straight back.
    auto back = case_map_.find(to);
    if (back != case_map_.end() && back->second != from) {
      throw ConfigError("case_map is not an involution at '" + from + "' -> '" + to + "'");
    }
  }
  letters_.reserve(symbols_.size() + samples_.size());
  for (const auto& s : symbols_) letters_.push_back(Letter::symbolic(s));
  for (const auto& r : samples_) letters_.push_back(Letter::numeric(r));
}

AlphabetPtr Alphabet::make(std::vector<std::string> symbols, std::vector<Rational> numeric_samples,
                           std::vector<std::string> vowel_set,
                           std::map<std::string, std::string> case_map) {
  return std::make_shared<const Alphabet>(std::move(symbols), std::move(numeric_samples),
                                          std::move(vowel_set), std::move(case_map));
}

bool Alphabet::has_symbol(const std::string& token) const { return symbol_rank_.count(token) > 0; }

bool Alphabet::is_vowel(const Letter& l) const {
  return l.is_symbolic() && vowels_.count(l.token) > 0;
}

std::optional<std::size_t> Alphabet::rank(const Letter& l) const {
  if (l.is_symbolic()) {
    auto it = symbol_rank_.find(l.token);
    if (it == symbol_rank_.end()) return std::nullopt;
    return it->second;
  }
  auto it = sample_rank_.find(l.value);
  if (it == sample_rank_.end()) return std::nullopt;
  return symbols_.size() + it->second;
}

bool Alphabet::shortlex_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Letter& la = a.letters[i];
    const Letter& lb = b.letters[i];
    if (la == lb) continue;
    auto ra = rank(la);
    auto rb = rank(lb);
    if (ra && rb) return *ra < *rb;
    if (ra != rb) return ra.has_value();  // alphabet letters before foreign ones
    return structural_less(la, lb);
  }
  return false;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, int max_len) {
  if (max_len < 0) throw ConfigError("word enumeration bound must be nonnegative");
  if (alphabet.letter_count() == 0) {
    throw ConfigError("alphabet has no letters (no symbols and no numeric samples)");
  }
  std::vector<Word> out;
  std::vector<Word> level{Word{}};
  out.push_back(Word{});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    next.reserve(level.size() * alphabet.letter_count());
    for (const Word& w : level) {
      for (const Letter& l : alphabet.letters()) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

OutputValue OutputValue::from_word(Word w) {
  OutputValue v;
  v.kind = Kind::Word;
  v.word = std::move(w);
  return v;
}

OutputValue OutputValue::opaque(std::string tok) {
  OutputValue v;
  v.kind = Kind::Opaque;
  v.token = std::move(tok);
  return v;
}

std::string OutputValue::text() const {
  return is_word() ? word_text(word) : "opaque:" + token;
}

bool OutputValue::operator==(const OutputValue& other) const {
  if (kind != other.kind) return false;
  return is_word() ? word == other.word : token == other.token;
}

bool ValueLess::operator()(const OutputValue& a, const OutputValue& b) const {
  if (a.kind != b.kind) return a.is_word();
  if (a.is_word()) return WordLess{}(a.word, b.word);
  return a.token < b.token;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "eps";
  bool compact = true;
  for (const Letter& l : w.letters) {
    if (!l.is_symbolic() || l.token.size() != 1) {
      compact = false;
      break;
    }
  }
  std::string out;
  if (compact) {
    for (const Letter& l : w.letters) out += l.token;
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w.letters[i].text();
  }
  out += "]";
  return out;
}

}  // namespace varfn
