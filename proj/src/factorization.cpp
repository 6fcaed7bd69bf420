#include "varfn/factorization.hpp"

#include <algorithm>

namespace varfn {

const OutputValue& FnTable::at(const Word& w) const {
  auto it = index.find(w);
  if (it == index.end()) {
    throw std::out_of_range("table for '" + source + "' has no entry for " + word_text(w));
  }
  return it->second;
}

VariadicFn FnTable::as_fn() const {
  VariadicFn fn;
  fn.alphabet = alphabet;
  fn.name = source + "@<=" + std::to_string(bound);
  auto idx = std::make_shared<const std::map<Word, OutputValue, WordLess>>(index);
  auto src = source;
  auto b = bound;
  fn.eval = [idx, src, b](const Word& w) -> OutputValue {
    auto it = idx->find(w);
    if (it == idx->end()) {
      throw std::out_of_range("table for '" + src + "' evaluated beyond bound " +
                              std::to_string(b) + " at " + word_text(w));
    }
    return it->second;
  };
  return fn;
}

FnTable tabulate(const VariadicFn& f, int bound) {
  if (bound < 0) throw ConfigError("tabulation bound must be nonnegative");
  if (!f.alphabet) throw ConfigError("tabulation requires a function with an alphabet");
  FnTable t;
  t.alphabet = f.alphabet;
  t.bound = bound;
  t.source = f.name;
  for (const Word& w : enumerate_words(*f.alphabet, bound)) {
    OutputValue v = f.eval(w);
    t.index.emplace(w, v);
    t.entries.emplace_back(w, std::move(v));
  }
  return t;
}

QuasiInverse quasi_inverse(const FnTable& table, const DomainSet* domain) {
  if (table.entries.empty()) throw ConfigError("quasi-inverse of an empty table");
  QuasiInverse qi;
  // Entries are in shortlex order, so the first preimage seen per value
  // is the least one.
  std::map<OutputValue, Word, ValueLess> least_any;
  std::map<OutputValue, Word, ValueLess> least_in_domain;
  for (const auto& [w, v] : table.entries) {
    least_any.emplace(v, w);
    if (domain && domain->contains(w)) least_in_domain.emplace(v, w);
  }
  if (!domain) {
    qi.flavor = QuasiInverse::Flavor::Plain;
    qi.g = std::move(least_any);
    return qi;
  }
  qi.flavor = QuasiInverse::Flavor::RelativeToDomain;
  qi.domain_name = domain->name();
  for (const auto& [v, w] : least_any) {
    auto it = least_in_domain.find(v);
    if (it != least_in_domain.end()) {
      qi.g.emplace(v, it->second);
    } else {
      qi.g.emplace(v, w);
      qi.uncertified.push_back(v);
    }
  }
  return qi;
}

Factorization factorize(const VariadicFn& f, int bound, const DomainSet* domain, int workers) {
  Factorization out;
  FnTable tab = tabulate(f, bound);
  out.g = quasi_inverse(tab, domain);

  // H = g o F, tabulated on the same domain. Its values are chosen
  // preimages, hence words of length <= bound.
  out.h.alphabet = tab.alphabet;
  out.h.bound = bound;
  out.h.source = "h(" + f.name + ")";
  int growth = 0;
  for (const auto& [w, v] : tab.entries) {
    const Word& hw = out.g.g.find(v)->second;
    out.h.entries.emplace_back(w, OutputValue::from_word(hw));
    out.h.index.emplace(w, OutputValue::from_word(hw));
    growth = std::max(growth, static_cast<int>(hw.size()) - static_cast<int>(w.size()));
  }
  out.report.inner_growth = growth;
  out.report.class_bound = std::max(0, bound - growth);

  // f = F restricted to the values of H, keyed in first-seen order.
  std::map<Word, std::size_t, WordLess> f_seen;
  for (const auto& [w, hv] : out.h.entries) {
    const Word& hw = hv.word;
    if (f_seen.count(hw)) continue;
    f_seen.emplace(hw, out.f.size());
    out.f.emplace_back(hw, tab.at(hw));
  }

  // (a) injectivity of f on ran(H).
  std::map<OutputValue, Word, ValueLess> value_owner;
  for (const auto& [hw, fv] : out.f) {
    auto [it, fresh] = value_owner.emplace(fv, hw);
    if (!fresh) {
      out.report.f_injective = false;
      out.report.injectivity_witness = std::make_pair(it->second, hw);
      break;
    }
  }

  // (b) f o H = F letterwise on the tabulated domain.
  for (const auto& [w, hv] : out.h.entries) {
    if (tab.at(hv.word) == tab.at(w)) continue;
    ++out.report.compose_mismatches;
    if (!out.report.first_mismatch) out.report.first_mismatch = w;
  }

  VariadicFn h_fn = out.h.as_fn();
  AlphabetPtr alphabet = tab.alphabet;
  DomainSet full(DomainSpec::full(), alphabet, "full");
  const DomainSet& idem_domain = domain ? *domain : full;

  // (c) idempotence of H on the domain, plus everywhere on the table:
  // H values are tabulated words, so both compositions stay in-domain.
  out.report.idempotent_on_domain = check_idempotent_on(h_fn, idem_domain, bound);
  out.report.idempotent_everywhere = check_idempotent_on(h_fn, full, bound);

  // (d) H(D) inside D at bound.
  if (domain) {
    out.report.h_maps_domain_into_domain = true;
    for (const Word& dw : domain->enumerate(bound)) {
      const OutputValue& hv = out.h.at(dw);
      if (domain->contains(hv.word)) continue;
      out.report.h_maps_domain_into_domain = false;
      out.report.domain_escape_witness = dw;
      break;
    }
  }

  // (e) relaxed-equation checks on H at the growth-adjusted bound.
  int cb = out.report.class_bound;
  if (domain) {
    out.report.class_plain = check_eq1(h_fn, *domain, CheckMode::Plain, cb, cb, workers);
    out.report.class_primed = check_eq1(h_fn, *domain, CheckMode::Primed, cb, cb, workers);
  } else {
    out.report.class_plain = check_eq1(h_fn, full, CheckMode::Plain, cb, cb, workers);
  }

  // (f) when F has a domain-determined range at bound, H should be
  // domain-valued and pass the unrestricted equation check.
  if (domain) {
    out.report.range_determined = check_range(f, *domain, RangeProperty::DDetermined, bound);
    if (out.report.range_determined->passed()) {
      out.report.h_domain_valued = check_range(h_fn, *domain, RangeProperty::DValued, bound);
      out.report.h_associative = check_eq1(h_fn, full, CheckMode::Plain, cb, cb, workers);
    }
  }

  return out;
}

}  // namespace varfn
