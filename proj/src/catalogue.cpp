#include "varfn/catalogue.hpp"

#include <algorithm>
#include <set>

namespace varfn {

namespace {

long long require_m(const FnParams& p, const std::string& key, long long min_value) {
  if (!p.m) throw ConfigError("catalogue entry '" + key + "' requires parameter m");
  if (*p.m < min_value) {
    throw ConfigError("catalogue entry '" + key + "' requires m >= " + std::to_string(min_value));
  }
  return *p.m;
}

Letter require_letter(const FnParams& p, const std::string& key, const Alphabet& a) {
  if (!p.letter) throw ConfigError("catalogue entry '" + key + "' requires parameter letter");
  if (!a.rank(*p.letter)) {
    throw ConfigError("catalogue entry '" + key + "': letter '" + p.letter->text() +
                      "' is not in the alphabet");
  }
  return *p.letter;
}

std::string param_str_m(long long m) { return std::to_string(m); }

}  // namespace

const std::vector<CatalogueEntry>& catalogue_entries() {
  static const std::vector<CatalogueEntry> entries = {
      {"identity", "returns the input word unchanged", "", ""},
      {"sort", "sorts the letters ascending in alphabet order", "", ""},
      {"uppercase", "applies the alphabet case_map letterwise, identity off the map", "", ""},
      {"length", "emits the opaque token len:n for an input of length n", "", ""},
      {"prefix", "identity up to length m, the length-m prefix beyond", "m>=0", ""},
      {"indexer",
       "keeps the length-m prefix and replaces the remaining letters by v (vowel) or c "
       "(consonant)",
       "m>=0", "symbols v and c"},
      {"prefix_with_length",
       "identity below length m; otherwise the first m-1 letters plus the total length as a "
       "numeric letter",
       "m>=1", ""},
      {"prefix_with_symbol_count",
       "identity below length m; otherwise the first m letters plus the count of symbolic "
       "letters as a numeric letter",
       "m>=0", ""},
      {"prefix_with_gap",
       "identity at lengths <= m and at length m+2; the length-m prefix everywhere else",
       "m>=1", ""},
      {"factor_marker", "returns w when w occurs as a factor of the input, the empty word "
                        "otherwise",
       "word w", ""},
      {"mean",
       "arithmetic mean of an all-numeric word as a single numeric letter; "
       "opaque mean:nonnumeric on mixed input",
       "", ""},
      {"letterwise_perm", "applies a configured symbol permutation letter by letter", "perm", ""},
      {"prefix_plus_prev",
       "identity up to length m; otherwise the length-m prefix plus the next-to-last letter",
       "m>=1", ""},
      {"empty_to_letter", "maps the empty word to a fixed letter, identity otherwise", "letter",
       ""},
      {"collapse_letter", "maps the empty word and a fixed one-letter word to the empty word, "
                          "identity otherwise",
       "letter", ""},
  };
  return entries;
}

VariadicFn instantiate(AlphabetPtr alphabet, const std::string& key, const FnParams& params) {
  if (!alphabet) throw ConfigError("catalogue entry '" + key + "' requires an alphabet");
  const Alphabet& a = *alphabet;
  VariadicFn fn;
  fn.alphabet = alphabet;
  fn.name = key;

  if (key == "identity") {
    fn.eval = [](const Word& w) { return OutputValue::from_word(w); };
    return fn;
  }

  if (key == "sort") {
    fn.eval = [alphabet](const Word& w) {
      Word out = w;
      std::stable_sort(out.letters.begin(), out.letters.end(),
                       [&](const Letter& x, const Letter& y) {
                         auto rx = alphabet->rank(x);
                         auto ry = alphabet->rank(y);
                         if (rx && ry) return *rx < *ry;
                         if (rx != ry) return rx.has_value();
                         return structural_less(x, y);
                       });
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "uppercase") {
    fn.eval = [alphabet](const Word& w) {
      Word out = w;
      const auto& cm = alphabet->case_map();
      for (Letter& l : out.letters) {
        if (!l.is_symbolic()) continue;
        auto it = cm.find(l.token);
        if (it != cm.end()) l.token = it->second;
      }
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "length") {
    fn.eval = [](const Word& w) {
      return OutputValue::opaque("len:" + std::to_string(w.size()));
    };
    return fn;
  }

  if (key == "prefix") {
    auto m = require_m(params, key, 0);
    fn.name = "prefix(" + param_str_m(m) + ")";
    fn.params["m"] = param_str_m(m);
    fn.eval = [m](const Word& w) {
      if (w.size() <= static_cast<std::size_t>(m)) return OutputValue::from_word(w);
      return OutputValue::from_word(w.prefix(static_cast<std::size_t>(m)));
    };
    return fn;
  }

  if (key == "indexer") {
    auto m = require_m(params, key, 0);
    if (!a.has_symbol("v") || !a.has_symbol("c")) {
      throw ConfigError("catalogue entry 'indexer' needs symbols v and c in the alphabet");
    }
    fn.name = "indexer(" + param_str_m(m) + ")";
    fn.params["m"] = param_str_m(m);
    fn.eval = [m, alphabet](const Word& w) {
      if (w.size() <= static_cast<std::size_t>(m)) return OutputValue::from_word(w);
      Word out = w.prefix(static_cast<std::size_t>(m));
      for (std::size_t i = static_cast<std::size_t>(m); i < w.size(); ++i) {
        out.push_back(Letter::symbolic(alphabet->is_vowel(w.letters[i]) ? "v" : "c"));
      }
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "prefix_with_length") {
    auto m = require_m(params, key, 1);
    fn.name = "prefix_with_length(" + param_str_m(m) + ")";
    fn.params["m"] = param_str_m(m);
    fn.eval = [m](const Word& w) {
      if (w.size() < static_cast<std::size_t>(m)) return OutputValue::from_word(w);
      Word out = w.prefix(static_cast<std::size_t>(m - 1));
      out.push_back(Letter::numeric(Rational(static_cast<long long>(w.size()))));
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "prefix_with_symbol_count") {
    auto m = require_m(params, key, 0);
    fn.name = "prefix_with_symbol_count(" + param_str_m(m) + ")";
    fn.params["m"] = param_str_m(m);
    fn.eval = [m](const Word& w) {
      if (w.size() < static_cast<std::size_t>(m)) return OutputValue::from_word(w);
      long long symbolic = 0;
      for (const Letter& l : w.letters) {
        if (l.is_symbolic()) ++symbolic;
      }
      Word out = w.prefix(static_cast<std::size_t>(m));
      out.push_back(Letter::numeric(Rational(symbolic)));
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "prefix_with_gap") {
    auto m = require_m(params, key, 1);
    fn.name = "prefix_with_gap(" + param_str_m(m) + ")";
    fn.params["m"] = param_str_m(m);
    fn.eval = [m](const Word& w) {
      auto n = static_cast<long long>(w.size());
      if (n <= m || n == m + 2) return OutputValue::from_word(w);
      return OutputValue::from_word(w.prefix(static_cast<std::size_t>(m)));
    };
    return fn;
  }

  if (key == "factor_marker") {
    if (!params.word) throw ConfigError("catalogue entry 'factor_marker' requires parameter word");
    Word marker = *params.word;
    fn.name = "factor_marker(" + word_text(marker) + ")";
    fn.params["word"] = word_text(marker);
    fn.eval = [marker](const Word& w) {
      if (is_factor(marker, w)) return OutputValue::from_word(marker);
      return OutputValue::from_word(Word{});
    };
    return fn;
  }

  if (key == "mean") {
    fn.eval = [](const Word& w) {
      if (w.empty()) return OutputValue::from_word(Word{});
      Rational sum(0);
      for (const Letter& l : w.letters) {
        if (!l.is_numeric()) return OutputValue::opaque("mean:nonnumeric");
        sum += l.value;
      }
      Word out;
      out.push_back(Letter::numeric(sum / Rational(static_cast<long long>(w.size()))));
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "letterwise_perm") {
    if (params.perm.empty()) {
      throw ConfigError("catalogue entry 'letterwise_perm' requires a nonempty perm map");
    }
    std::set<std::string> keys;
    std::set<std::string> values;
    for (const auto& [from, to] : params.perm) {
      if (!a.has_symbol(from) || !a.has_symbol(to)) {
        throw ConfigError("letterwise_perm entry '" + from + "' -> '" + to +
                          "' leaves the symbol list");
      }
      keys.insert(from);
      if (!values.insert(to).second) {
        throw ConfigError("letterwise_perm maps two symbols to '" + to + "'");
      }
    }
    if (keys != values) {
      throw ConfigError("letterwise_perm (extended by identity) must permute the symbols: "
                        "its key set and value set differ");
    }
    auto perm = params.perm;
    std::string rendered;
    for (const auto& [from, to] : perm) {
      if (!rendered.empty()) rendered += ",";
      rendered += from + ">" + to;
    }
    fn.name = "letterwise_perm(" + rendered + ")";
    fn.params["perm"] = rendered;
    fn.eval = [perm](const Word& w) {
      Word out = w;
      for (Letter& l : out.letters) {
        if (!l.is_symbolic()) continue;
        auto it = perm.find(l.token);
        if (it != perm.end()) l.token = it->second;
      }
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "prefix_plus_prev") {
    auto m = require_m(params, key, 1);
    fn.name = "prefix_plus_prev(" + param_str_m(m) + ")";
    fn.params["m"] = param_str_m(m);
    fn.eval = [m](const Word& w) {
      if (w.size() <= static_cast<std::size_t>(m)) return OutputValue::from_word(w);
      Word out = w.prefix(static_cast<std::size_t>(m));
      out.push_back(w.letters[w.size() - 2]);
      return OutputValue::from_word(out);
    };
    return fn;
  }

  if (key == "empty_to_letter") {
    Letter l = require_letter(params, key, a);
    fn.name = "empty_to_letter(" + l.text() + ")";
    fn.params["letter"] = l.text();
    fn.eval = [l](const Word& w) {
      if (w.empty()) {
        Word out;
        out.push_back(l);
        return OutputValue::from_word(out);
      }
      return OutputValue::from_word(w);
    };
    return fn;
  }

  if (key == "collapse_letter") {
    Letter l = require_letter(params, key, a);
    fn.name = "collapse_letter(" + l.text() + ")";
    fn.params["letter"] = l.text();
    fn.eval = [l](const Word& w) {
      if (w.empty() || (w.size() == 1 && w.letters[0] == l)) {
        return OutputValue::from_word(Word{});
      }
      return OutputValue::from_word(w);
    };
    return fn;
  }

  throw ConfigError("unknown catalogue key '" + key + "'");
}

VariadicFn patch(const VariadicFn& base, std::map<Word, OutputValue, WordLess> overrides) {
  VariadicFn fn;
  fn.alphabet = base.alphabet;
  fn.name = "patch(" + base.name + ")";
  std::string rendered;
  for (const auto& [w, v] : overrides) {
    if (!rendered.empty()) rendered += ",";
    rendered += word_text(w) + ">" + v.text();
  }
  fn.params = base.params;
  fn.params["overrides"] = rendered;
  auto base_eval = base.eval;
  auto table = std::make_shared<const std::map<Word, OutputValue, WordLess>>(std::move(overrides));
  fn.eval = [base_eval, table](const Word& w) {
    auto it = table->find(w);
    if (it != table->end()) return it->second;
    return base_eval(w);
  };
  return fn;
}

VariadicFn compose(const VariadicFn& outer, const VariadicFn& inner) {
  VariadicFn fn;
  fn.alphabet = outer.alphabet ? outer.alphabet : inner.alphabet;
  fn.name = "compose(" + outer.name + "," + inner.name + ")";
  auto o = outer.eval;
  auto i = inner.eval;
  fn.eval = [o, i](const Word& w) {
    OutputValue mid = i(w);
    if (!mid.is_word()) return OutputValue::opaque("compose:nonword");
    return o(mid.word);
  };
  return fn;
}

VariadicFn make_capped_table_fn(AlphabetPtr alphabet, std::string name,
                                std::map<Word, OutputValue, WordLess> table, int cap_len) {
  VariadicFn fn;
  fn.alphabet = std::move(alphabet);
  fn.name = std::move(name);
  fn.params["cap_len"] = std::to_string(cap_len);
  auto shared = std::make_shared<const std::map<Word, OutputValue, WordLess>>(std::move(table));
  fn.eval = [shared, cap_len](const Word& w) {
    Word key = w.size() > static_cast<std::size_t>(cap_len)
                   ? w.prefix(static_cast<std::size_t>(cap_len))
                   : w;
    auto it = shared->find(key);
    if (it == shared->end()) {
      throw std::out_of_range("table function '" + word_text(key) + "' has no entry");
    }
    return it->second;
  };
  return fn;
}

}  // namespace varfn
