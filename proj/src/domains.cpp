#include "varfn/domains.hpp"

#include <algorithm>

namespace varfn {

namespace {

struct ContainsVisitor {
  const Word& w;

  bool operator()(const DomainSpec::Full&) const { return true; }
  bool operator()(const DomainSpec::MaxLen& s) const {
    return w.size() <= static_cast<std::size_t>(s.m);
  }
  bool operator()(const DomainSpec::MinLen& s) const {
    return w.size() >= static_cast<std::size_t>(s.m);
  }
  bool operator()(const DomainSpec::Repeats&) const {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w.letters[i] != w.letters[0]) return false;
    }
    return true;
  }
  bool operator()(const DomainSpec::Factor& s) const { return is_factor(s.w, w); }
  bool operator()(const DomainSpec::Threshold& s) const {
    return w.size() == 1 && w.letters[0].is_numeric() && w.letters[0].value <= s.s;
  }
  bool operator()(const DomainSpec::Explicit& s) const {
    return std::find(s.words.begin(), s.words.end(), w) != s.words.end();
  }
};

struct DescribeVisitor {
  std::string operator()(const DomainSpec::Full&) const { return "full"; }
  std::string operator()(const DomainSpec::MaxLen& s) const {
    return "maxlen(" + std::to_string(s.m) + ")";
  }
  std::string operator()(const DomainSpec::MinLen& s) const {
    return "minlen(" + std::to_string(s.m) + ")";
  }
  std::string operator()(const DomainSpec::Repeats&) const { return "repeats"; }
  std::string operator()(const DomainSpec::Factor& s) const {
    return "factor(" + word_text(s.w) + ")";
  }
  std::string operator()(const DomainSpec::Threshold& s) const {
    return "threshold(" + rational_to_string(s.s) + ")";
  }
  std::string operator()(const DomainSpec::Explicit& s) const {
    std::string out = "explicit{";
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      if (i) out += ",";
      out += word_text(s.words[i]);
    }
    return out + "}";
  }
};

}  // namespace

DomainSet::DomainSet(DomainSpec spec, AlphabetPtr alphabet, std::string name)
    : spec_(std::move(spec)), alphabet_(std::move(alphabet)), name_(std::move(name)) {
  if (!alphabet_) throw ConfigError("domain requires an alphabet");
  if (const auto* m = std::get_if<DomainSpec::MaxLen>(&spec_.spec)) {
    if (m->m < 0) throw ConfigError("maxlen domain bound must be nonnegative");
  }
  if (const auto* m = std::get_if<DomainSpec::MinLen>(&spec_.spec)) {
    if (m->m < 0) throw ConfigError("minlen domain bound must be nonnegative");
  }
  if (const auto* e = std::get_if<DomainSpec::Explicit>(&spec_.spec)) {
    if (e->words.empty()) throw ConfigError("explicit domain must be a nonempty word set");
  }
  if (name_.empty()) name_ = describe();
}

bool DomainSet::contains(const Word& w) const {
  return std::visit(ContainsVisitor{w}, spec_.spec);
}

std::vector<Word> DomainSet::enumerate(int max_len) const {
  std::vector<Word> out;
  for (const Word& w : enumerate_words(*alphabet_, max_len)) {
    if (contains(w)) out.push_back(w);
  }
  return out;
}

std::string DomainSet::describe() const { return std::visit(DescribeVisitor{}, spec_.spec); }

bool subset_up_to(const DomainSet& d1, const DomainSet& d2, int bound) {
  for (const Word& w : d1.enumerate(bound)) {
    if (!d2.contains(w)) return false;
  }
  return true;
}

}  // namespace varfn
