#include "varfn/hierarchy.hpp"

namespace varfn {

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::Aprime: return "Ap";
    case Family::P: return "P";
    case Family::Pprime: return "Pp";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "A") return Family::A;
  if (text == "Ap") return Family::Aprime;
  if (text == "P") return Family::P;
  if (text == "Pp") return Family::Pprime;
  throw ConfigError("unknown class '" + text + "' (expected A, Ap, P or Pp)");
}

CheckVerdict run_family_check(const VariadicFn& f, Family family, const DomainSet& d, int bound,
                              int domain_bound, int workers) {
  switch (family) {
    case Family::A:
      return check_eq1(f, d, CheckMode::Plain, bound, domain_bound, workers);
    case Family::Aprime:
      return check_eq1(f, d, CheckMode::Primed, bound, domain_bound, workers);
    case Family::P:
      return check_eq2(f, d, CheckMode::Plain, bound, workers);
    case Family::Pprime:
      return check_eq2(f, d, CheckMode::Primed, bound, workers);
  }
  throw ConfigError("unknown family");
}

HierarchyProfile profile(const VariadicFn& f, Family family, int bound, int max_m, int workers) {
  if (max_m < 0) throw ConfigError("max_m must be nonnegative");
  if (max_m > bound) throw ConfigError("max_m must not exceed the bound");
  HierarchyProfile p;
  p.family = family;
  p.bound = bound;
  p.max_m = max_m;
  for (int m = 0; m <= max_m; ++m) {
    DomainSet d(DomainSpec::max_len(m), f.alphabet, "maxlen(" + std::to_string(m) + ")");
    p.per_m.emplace_back(m, run_family_check(f, family, d, bound, bound, workers));
  }
  auto passed_at = [&](int m) { return p.per_m[static_cast<std::size_t>(m)].second.passed(); };

  if (!passed_at(0)) {
    p.k_kind = HierarchyProfile::KKind::OutsideHierarchy;
    p.degree = std::nullopt;
    p.annotations.push_back("refuted already at level 0; no degree defined");
    return p;
  }
  int k = -1;
  for (int m = 0; m < max_m; ++m) {
    if (passed_at(m) && !passed_at(m + 1)) {
      k = m;
      break;
    }
  }
  if (k < 0) {
    p.k_kind = HierarchyProfile::KKind::Infinite;
    p.degree = Rational(0);
    p.annotations.push_back("passed every level up to max_m=" + std::to_string(max_m) +
                            " at bound " + std::to_string(bound) + "; degree 0 observed at bound");
    return p;
  }
  p.k_kind = HierarchyProfile::KKind::Finite;
  p.k = k;
  p.degree = Rational(1, 1LL << k);
  p.annotations.push_back("observed at bound " + std::to_string(bound) + ", max_m " +
                          std::to_string(max_m));
  if (k == 0) {
    p.annotations.push_back("level 0 admitted as a valid k (nonnegative-level convention)");
  }
  return p;
}

FnGenerator exhaustive_table_generator(AlphabetPtr alphabet, int vary_len, int out_len) {
  if (vary_len < 1) throw ConfigError("generator vary_len must be positive");
  auto fixed = std::make_shared<std::vector<Word>>(enumerate_words(*alphabet, vary_len - 1));
  auto outputs = std::make_shared<std::vector<Word>>(enumerate_words(*alphabet, out_len));
  std::vector<Word> all = enumerate_words(*alphabet, vary_len);
  auto varying = std::make_shared<std::vector<Word>>();
  for (const Word& w : all) {
    if (w.size() == static_cast<std::size_t>(vary_len)) varying->push_back(w);
  }
  auto odometer = std::make_shared<std::vector<std::size_t>>(varying->size(), 0);
  auto done = std::make_shared<bool>(false);
  auto counter = std::make_shared<long long>(0);

  return [alphabet, fixed, outputs, varying, odometer, done, counter,
          vary_len]() -> std::optional<VariadicFn> {
    if (*done) return std::nullopt;
    std::map<Word, OutputValue, WordLess> table;
    for (const Word& w : *fixed) table.emplace(w, OutputValue::from_word(w));
    for (std::size_t i = 0; i < varying->size(); ++i) {
      table.emplace((*varying)[i], OutputValue::from_word((*outputs)[(*odometer)[i]]));
    }
    VariadicFn fn = make_capped_table_fn(alphabet, "table#" + std::to_string(*counter),
                                         std::move(table), vary_len);
    ++*counter;
    // Advance the odometer, least-significant entry last.
    for (std::size_t i = odometer->size(); i-- > 0;) {
      if (++(*odometer)[i] < outputs->size()) return fn;
      (*odometer)[i] = 0;
    }
    *done = true;
    return fn;
  };
}

FnGenerator explicit_generator(std::vector<VariadicFn> fns) {
  auto list = std::make_shared<std::vector<VariadicFn>>(std::move(fns));
  auto next = std::make_shared<std::size_t>(0);
  return [list, next]() -> std::optional<VariadicFn> {
    if (*next >= list->size()) return std::nullopt;
    return (*list)[(*next)++];
  };
}

SeparationResult separation_search(Family first, Family second, const DomainSet& d,
                                   const FnGenerator& generator, int bound, int workers) {
  SeparationResult res;
  while (auto fn = generator()) {
    ++res.candidates_tried;
    CheckVerdict v1 = run_family_check(*fn, first, d, bound, bound, workers);
    CheckVerdict v2 = run_family_check(*fn, second, d, bound, bound, workers);
    if (v1.passed() == v2.passed()) continue;
    res.found = true;
    res.separator = *fn;
    res.member_of = v1.passed() ? first : second;
    res.refuted_in = v1.passed() ? second : first;
    res.witness = v1.passed() ? v2.cex : v1.cex;
    return res;
  }
  return res;
}

}  // namespace varfn
