#pragma once

#include "varfn/catalogue.hpp"
#include "varfn/domains.hpp"

#include <map>
#include <string>
#include <vector>

namespace varfn {

// A fully resolved run configuration: one alphabet, named function
// instances (catalogue entries, patches, compositions) and named
// domains. Everything is validated at load time; checks never see an
// unresolved name.
struct Config {
  AlphabetPtr alphabet;
  std::vector<std::string> function_order;
  std::map<std::string, VariadicFn> functions;
  std::vector<std::string> domain_order;
  std::map<std::string, DomainSet> domains;
  int default_bound = 4;
  int default_domain_bound = 4;
  int default_max_m = 3;

  const VariadicFn& fn(const std::string& name) const;
  const DomainSet& domain(const std::string& name) const;
};

// Parses the JSON configuration document. Diagnostics name the
// offending key.
Config load_config_text(const std::string& json_text);
Config load_config_file(const std::string& path);

// The built-in scenario set: alphabet {a,b,v,c} with numeric samples
// {0,1}, one instance of every catalogue entry at small parameters, and
// the standard domain family.
const std::string& default_config_text();
Config default_config();

// Word / value literals shared by the config document and the report
// renderer. A word is a JSON array of letter tokens or a compact string
// of single-character symbols; a value is a word or an "opaque:TOKEN"
// string.
Word parse_word_tokens(const Alphabet& alphabet, const std::vector<std::string>& tokens);
Word parse_word_compact(const Alphabet& alphabet, const std::string& text);

// Stable digest of the canonical config rendering (FNV-1a 64).
std::string config_digest(const std::string& canonical_text);

}  // namespace varfn
