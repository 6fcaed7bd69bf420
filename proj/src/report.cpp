#include "varfn/report.hpp"

namespace varfn {

ReportJson json_word(const Word& w) {
  ReportJson arr = ReportJson::array();
  for (const Letter& l : w.letters) arr.push_back(l.text());
  return arr;
}

ReportJson json_value(const OutputValue& v) {
  if (v.is_word()) return json_word(v.word);
  return ReportJson("opaque:" + v.token);
}

ReportJson json_counterexample(const Counterexample& ce) {
  ReportJson j = ReportJson::object();
  j["kind"] = to_string(ce.kind);
  j["x"] = json_word(ce.x);
  j["y"] = json_word(ce.y);
  if (ce.yprime) {
    j["yprime"] = json_word(*ce.yprime);
  } else {
    j["yprime"] = nullptr;
  }
  j["z"] = json_word(ce.z);
  j["lhs"] = json_value(ce.lhs);
  j["rhs"] = json_value(ce.rhs);
  if (ce.witness_d) {
    j["witness_d"] = json_word(*ce.witness_d);
  } else {
    j["witness_d"] = nullptr;
  }
  if (!ce.note.empty()) j["note"] = ce.note;
  return j;
}

ReportJson json_verdict(const CheckVerdict& v) {
  ReportJson j = ReportJson::object();
  j["verdict"] = v.refuted ? "refuted" : "passed_up_to";
  j["bound"] = v.bound;
  if (v.domain_bound >= 0) j["domain_bound"] = v.domain_bound;
  if (v.refuted) {
    j["counterexample"] = json_counterexample(*v.cex);
  } else {
    j["cases_checked"] = v.cases_checked;
  }
  return j;
}

ReportJson json_profile(const HierarchyProfile& p) {
  ReportJson j = ReportJson::object();
  j["family"] = to_string(p.family);
  j["bound"] = p.bound;
  j["max_m"] = p.max_m;
  ReportJson levels = ReportJson::array();
  for (const auto& [m, verdict] : p.per_m) {
    ReportJson e = ReportJson::object();
    e["m"] = m;
    e["check"] = json_verdict(verdict);
    levels.push_back(std::move(e));
  }
  j["per_m"] = std::move(levels);
  switch (p.k_kind) {
    case HierarchyProfile::KKind::Finite:
      j["k_observed"] = p.k;
      break;
    case HierarchyProfile::KKind::Infinite:
      j["k_observed"] = "infinite";
      break;
    case HierarchyProfile::KKind::OutsideHierarchy:
      j["k_observed"] = "outside_hierarchy";
      break;
  }
  if (p.degree) {
    j["degree"] = rational_to_string(*p.degree);
  } else {
    j["degree"] = nullptr;
  }
  j["annotations"] = p.annotations;
  return j;
}

ReportJson json_factorization(const Factorization& f) {
  ReportJson j = ReportJson::object();
  j["source"] = f.h.source;
  j["bound"] = f.h.bound;
  j["quasi_inverse"] = ReportJson::object();
  j["quasi_inverse"]["flavor"] =
      f.g.flavor == QuasiInverse::Flavor::Plain ? "plain" : "relative_to_domain";
  if (f.g.flavor == QuasiInverse::Flavor::RelativeToDomain) {
    j["quasi_inverse"]["domain"] = f.g.domain_name;
    ReportJson unc = ReportJson::array();
    for (const OutputValue& v : f.g.uncertified) unc.push_back(json_value(v));
    j["quasi_inverse"]["values_without_domain_preimage_at_bound"] = std::move(unc);
  }
  ReportJson g_table = ReportJson::array();
  for (const auto& [v, w] : f.g.g) {
    ReportJson row = ReportJson::array();
    row.push_back(json_value(v));
    row.push_back(json_word(w));
    g_table.push_back(std::move(row));
  }
  j["quasi_inverse"]["g"] = std::move(g_table);

  ReportJson h_table = ReportJson::array();
  for (const auto& [w, v] : f.h.entries) {
    ReportJson row = ReportJson::array();
    row.push_back(json_word(w));
    row.push_back(json_value(v));
    h_table.push_back(std::move(row));
  }
  j["h"] = std::move(h_table);

  ReportJson f_table = ReportJson::array();
  for (const auto& [w, v] : f.f) {
    ReportJson row = ReportJson::array();
    row.push_back(json_word(w));
    row.push_back(json_value(v));
    f_table.push_back(std::move(row));
  }
  j["f"] = std::move(f_table);

  const FactorizationReport& r = f.report;
  ReportJson rep = ReportJson::object();
  rep["f_injective"] = r.f_injective;
  if (r.injectivity_witness) {
    ReportJson w = ReportJson::array();
    w.push_back(json_word(r.injectivity_witness->first));
    w.push_back(json_word(r.injectivity_witness->second));
    rep["injectivity_witness"] = std::move(w);
  }
  rep["compose_mismatches"] = r.compose_mismatches;
  if (r.first_mismatch) rep["first_mismatch"] = json_word(*r.first_mismatch);
  rep["inner_growth"] = r.inner_growth;
  rep["class_bound"] = r.class_bound;
  rep["idempotent_on_domain"] = json_verdict(r.idempotent_on_domain);
  rep["idempotent_everywhere"] = json_verdict(r.idempotent_everywhere);
  if (r.h_maps_domain_into_domain.has_value()) {
    rep["h_maps_domain_into_domain"] = *r.h_maps_domain_into_domain;
    if (r.domain_escape_witness) {
      rep["domain_escape_witness"] = json_word(*r.domain_escape_witness);
    }
  }
  rep["class_plain"] = json_verdict(r.class_plain);
  if (r.class_primed) rep["class_primed"] = json_verdict(*r.class_primed);
  if (r.range_determined) {
    rep["range_determined"] = json_verdict(*r.range_determined);
    if (r.h_domain_valued) rep["h_domain_valued"] = json_verdict(*r.h_domain_valued);
    if (r.h_associative) rep["h_associative"] = json_verdict(*r.h_associative);
  }
  j["report"] = std::move(rep);
  return j;
}

ReportJson json_separation(const SeparationResult& r) {
  ReportJson j = ReportJson::object();
  j["found"] = r.found;
  j["candidates_tried"] = r.candidates_tried;
  if (r.found) {
    j["separator"] = r.separator->name;
    j["member_of"] = to_string(r.member_of);
    j["refuted_in"] = to_string(r.refuted_in);
    if (r.witness) j["witness"] = json_counterexample(*r.witness);
  }
  return j;
}

std::string pretty_verdict(const CheckVerdict& v) {
  if (!v.refuted) {
    std::string s = "passed up to bound " + std::to_string(v.bound);
    if (v.domain_bound >= 0) s += " (domain bound " + std::to_string(v.domain_bound) + ")";
    s += "; cases checked: " + std::to_string(v.cases_checked);
    return s;
  }
  const Counterexample& ce = *v.cex;
  std::string s = "refuted (" + to_string(ce.kind) + "): ";
  s += "y = " + word_text(ce.y);
  if (ce.yprime) s += ", y' = " + word_text(*ce.yprime);
  s += ", x = " + word_text(ce.x) + ", z = " + word_text(ce.z);
  s += "; lhs = " + ce.lhs.text() + ", rhs = " + ce.rhs.text();
  if (ce.witness_d) s += "; d = " + word_text(*ce.witness_d);
  if (!ce.note.empty()) s += " [" + ce.note + "]";
  return s;
}

std::string pretty_profile(const HierarchyProfile& p) {
  std::string s = "family " + to_string(p.family) + ", bound " + std::to_string(p.bound) + "\n";
  for (const auto& [m, verdict] : p.per_m) {
    s += "  m = " + std::to_string(m) + ": " +
         (verdict.passed() ? "passed" : "refuted (" + pretty_verdict(verdict) + ")") + "\n";
  }
  s += degree_line(p);
  return s;
}

std::string degree_line(const HierarchyProfile& p) {
  switch (p.k_kind) {
    case HierarchyProfile::KKind::Finite:
      return "d = 2^-" + std::to_string(p.k) + " = " + rational_to_string(*p.degree) +
             " (observed at N=" + std::to_string(p.bound) +
             ", max_m=" + std::to_string(p.max_m) + ")";
    case HierarchyProfile::KKind::Infinite:
      return "d = 0 (observed at N=" + std::to_string(p.bound) +
             ", max_m=" + std::to_string(p.max_m) + ")";
    case HierarchyProfile::KKind::OutsideHierarchy:
      return "outside hierarchy (refuted at m=0, N=" + std::to_string(p.bound) + ")";
  }
  return "";
}

}  // namespace varfn
