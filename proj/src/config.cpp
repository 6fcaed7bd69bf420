#include "varfn/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace varfn {

using nlohmann::json;

const VariadicFn& Config::fn(const std::string& name) const {
  auto it = functions.find(name);
  if (it == functions.end()) throw ConfigError("unknown function '" + name + "'");
  return it->second;
}

const DomainSet& Config::domain(const std::string& name) const {
  auto it = domains.find(name);
  if (it == domains.end()) throw ConfigError("unknown domain '" + name + "'");
  return it->second;
}

Word parse_word_tokens(const Alphabet& alphabet, const std::vector<std::string>& tokens) {
  Word w;
  for (const std::string& t : tokens) {
    if (alphabet.has_symbol(t)) {
      w.push_back(Letter::symbolic(t));
    } else {
      w.push_back(Letter::numeric(parse_rational(t)));
    }
  }
  return w;
}

Word parse_word_compact(const Alphabet& alphabet, const std::string& text) {
  Word w;
  for (char c : text) {
    std::string tok(1, c);
    if (!alphabet.has_symbol(tok)) {
      throw ConfigError("compact word '" + text + "': '" + tok + "' is not an alphabet symbol");
    }
    w.push_back(Letter::symbolic(tok));
  }
  return w;
}

namespace {

Word parse_word_json(const Alphabet& alphabet, const json& j, const std::string& where) {
  if (j.is_string()) return parse_word_compact(alphabet, j.get<std::string>());
  if (j.is_array()) {
    std::vector<std::string> tokens;
    for (const auto& t : j) {
      if (!t.is_string()) throw ConfigError(where + ": word letters must be strings");
      tokens.push_back(t.get<std::string>());
    }
    return parse_word_tokens(alphabet, tokens);
  }
  throw ConfigError(where + ": expected a word (string or array of letter tokens)");
}

OutputValue parse_value_json(const Alphabet& alphabet, const json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("opaque:", 0) == 0) return OutputValue::opaque(s.substr(7));
    return OutputValue::from_word(parse_word_compact(alphabet, s));
  }
  return OutputValue::from_word(parse_word_json(alphabet, j, where));
}

Letter parse_letter_json(const Alphabet& alphabet, const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a letter token string");
  const std::string t = j.get<std::string>();
  if (alphabet.has_symbol(t)) return Letter::symbolic(t);
  return Letter::numeric(parse_rational(t));
}

DomainSet parse_domain_json(const AlphabetPtr& alphabet, const std::string& name, const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("domain '" + name + "' needs an object with a 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const std::string where = "domain '" + name + "'";
  if (kind == "full") return DomainSet(DomainSpec::full(), alphabet, name);
  if (kind == "maxlen") {
    return DomainSet(DomainSpec::max_len(j.at("m").get<int>()), alphabet, name);
  }
  if (kind == "minlen") {
    return DomainSet(DomainSpec::min_len(j.at("m").get<int>()), alphabet, name);
  }
  if (kind == "repeats") return DomainSet(DomainSpec::repeats(), alphabet, name);
  if (kind == "factor") {
    return DomainSet(DomainSpec::factor(parse_word_json(*alphabet, j.at("word"), where)),
                     alphabet, name);
  }
  if (kind == "threshold") {
    return DomainSet(DomainSpec::threshold(parse_rational(j.at("s").get<std::string>())),
                     alphabet, name);
  }
  if (kind == "explicit") {
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(parse_word_json(*alphabet, w, where));
    return DomainSet(DomainSpec::explicit_set(std::move(words)), alphabet, name);
  }
  throw ConfigError("domain '" + name + "' has unknown kind '" + kind + "'");
}

}  // namespace

Config load_config_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");

  Config cfg;

  const json& aj = doc.contains("alphabet") ? doc.at("alphabet") : json::object();
  std::vector<std::string> symbols;
  std::vector<Rational> samples;
  std::vector<std::string> vowels;
  std::map<std::string, std::string> case_map;
  if (aj.contains("symbols")) {
    for (const auto& s : aj.at("symbols")) symbols.push_back(s.get<std::string>());
  }
  if (aj.contains("numeric_samples")) {
    for (const auto& s : aj.at("numeric_samples")) {
      samples.push_back(parse_rational(s.get<std::string>()));
    }
  }
  if (aj.contains("vowel_set")) {
    for (const auto& s : aj.at("vowel_set")) vowels.push_back(s.get<std::string>());
  }
  if (aj.contains("case_map")) {
    for (const auto& [k, v] : aj.at("case_map").items()) case_map[k] = v.get<std::string>();
  }
  cfg.alphabet = Alphabet::make(std::move(symbols), std::move(samples), std::move(vowels),
                                std::move(case_map));

  if (doc.contains("defaults")) {
    const json& dj = doc.at("defaults");
    if (dj.contains("bound")) cfg.default_bound = dj.at("bound").get<int>();
    if (dj.contains("domain_bound")) cfg.default_domain_bound = dj.at("domain_bound").get<int>();
    if (dj.contains("max_m")) cfg.default_max_m = dj.at("max_m").get<int>();
  }

  if (doc.contains("functions")) {
    for (const auto& fj : doc.at("functions")) {
      if (!fj.is_object() || !fj.contains("name")) {
        throw ConfigError("every function entry needs a 'name'");
      }
      const std::string name = fj.at("name").get<std::string>();
      if (cfg.functions.count(name)) throw ConfigError("duplicate function name '" + name + "'");
      const std::string where = "function '" + name + "'";
      VariadicFn fn;
      if (fj.contains("key")) {
        FnParams params;
        if (fj.contains("params")) {
          const json& pj = fj.at("params");
          if (pj.contains("m")) params.m = pj.at("m").get<long long>();
          if (pj.contains("word")) params.word = parse_word_json(*cfg.alphabet, pj.at("word"), where);
          if (pj.contains("letter")) {
            params.letter = parse_letter_json(*cfg.alphabet, pj.at("letter"), where);
          }
          if (pj.contains("perm")) {
            for (const auto& [k, v] : pj.at("perm").items()) params.perm[k] = v.get<std::string>();
          }
        }
        fn = instantiate(cfg.alphabet, fj.at("key").get<std::string>(), params);
      } else if (fj.contains("patch")) {
        const json& pj = fj.at("patch");
        const std::string base = pj.at("base").get<std::string>();
        if (!cfg.functions.count(base)) {
          throw ConfigError(where + ": patch base '" + base + "' is not defined earlier");
        }
        std::map<Word, OutputValue, WordLess> overrides;
        for (const auto& oj : pj.at("overrides")) {
          overrides[parse_word_json(*cfg.alphabet, oj.at("word"), where)] =
              parse_value_json(*cfg.alphabet, oj.at("value"), where);
        }
        fn = patch(cfg.functions.at(base), std::move(overrides));
      } else if (fj.contains("compose")) {
        const json& cj = fj.at("compose");
        const std::string outer = cj.at("outer").get<std::string>();
        const std::string inner = cj.at("inner").get<std::string>();
        if (!cfg.functions.count(outer) || !cfg.functions.count(inner)) {
          throw ConfigError(where + ": compose references an undefined function");
        }
        fn = compose(cfg.functions.at(outer), cfg.functions.at(inner));
      } else {
        throw ConfigError(where + ": needs one of 'key', 'patch' or 'compose'");
      }
      cfg.function_order.push_back(name);
      cfg.functions.emplace(name, std::move(fn));
    }
  }

  if (doc.contains("domains")) {
    for (const auto& [name, dj] : doc.at("domains").items()) {
      cfg.domain_order.push_back(name);
      cfg.domains.emplace(name, parse_domain_json(cfg.alphabet, name, dj));
    }
  }
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str());
}

const std::string& default_config_text() {
  static const std::string text = R"CFG({
  "alphabet": {
    "symbols": ["a", "b", "v", "c"],
    "numeric_samples": ["0", "1"],
    "vowel_set": ["a"],
    "case_map": {}
  },
  "defaults": {"bound": 4, "domain_bound": 4, "max_m": 3},
  "functions": [
    {"name": "identity", "key": "identity"},
    {"name": "sort", "key": "sort"},
    {"name": "uppercase", "key": "uppercase"},
    {"name": "length", "key": "length"},
    {"name": "prefix0", "key": "prefix", "params": {"m": 0}},
    {"name": "prefix1", "key": "prefix", "params": {"m": 1}},
    {"name": "prefix2", "key": "prefix", "params": {"m": 2}},
    {"name": "indexer0", "key": "indexer", "params": {"m": 0}},
    {"name": "indexer1", "key": "indexer", "params": {"m": 1}},
    {"name": "indexer2", "key": "indexer", "params": {"m": 2}},
    {"name": "prefix_with_length1", "key": "prefix_with_length", "params": {"m": 1}},
    {"name": "prefix_with_length2", "key": "prefix_with_length", "params": {"m": 2}},
    {"name": "prefix_with_symbol_count0", "key": "prefix_with_symbol_count", "params": {"m": 0}},
    {"name": "prefix_with_symbol_count1", "key": "prefix_with_symbol_count", "params": {"m": 1}},
    {"name": "prefix_with_symbol_count2", "key": "prefix_with_symbol_count", "params": {"m": 2}},
    {"name": "prefix_with_gap1", "key": "prefix_with_gap", "params": {"m": 1}},
    {"name": "prefix_with_gap2", "key": "prefix_with_gap", "params": {"m": 2}},
    {"name": "factor_ab", "key": "factor_marker", "params": {"word": "ab"}},
    {"name": "mean", "key": "mean"},
    {"name": "swap_ab", "key": "letterwise_perm", "params": {"perm": {"a": "b", "b": "a"}}},
    {"name": "prefix_plus_prev1", "key": "prefix_plus_prev", "params": {"m": 1}},
    {"name": "prefix_plus_prev2", "key": "prefix_plus_prev", "params": {"m": 2}},
    {"name": "empty_to_a", "key": "empty_to_letter", "params": {"letter": "a"}},
    {"name": "collapse_a", "key": "collapse_letter", "params": {"letter": "a"}},
    {"name": "empty_to_a_patch", "patch": {"base": "identity", "overrides": [
      {"word": [], "value": "a"}]}},
    {"name": "sorted_head", "compose": {"outer": "prefix1", "inner": "sort"}}
  ],
  "domains": {
    "full": {"kind": "full"},
    "D0": {"kind": "maxlen", "m": 0},
    "D1": {"kind": "maxlen", "m": 1},
    "D2": {"kind": "maxlen", "m": 2},
    "D3": {"kind": "maxlen", "m": 3},
    "D4": {"kind": "maxlen", "m": 4},
    "repeats": {"kind": "repeats"},
    "factor_ab": {"kind": "factor", "word": "ab"}
  }
})CFG";
  return text;
}

Config default_config() { return load_config_text(default_config_text()); }

std::string config_digest(const std::string& canonical_text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

}  // namespace varfn
