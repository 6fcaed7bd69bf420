#pragma once

#include "varfn/factorization.hpp"
#include "varfn/hierarchy.hpp"

#include <json.hpp>

namespace varfn {

// Machine rendering. Key order is fixed by construction (ordered_json +
// deterministic insertion), values carry no floats and no timestamps, so
// equal inputs produce byte-equal documents.
using ReportJson = nlohmann::ordered_json;

ReportJson json_word(const Word& w);
ReportJson json_value(const OutputValue& v);
ReportJson json_counterexample(const Counterexample& ce);
ReportJson json_verdict(const CheckVerdict& v);
ReportJson json_profile(const HierarchyProfile& p);
ReportJson json_factorization(const Factorization& f);
ReportJson json_separation(const SeparationResult& r);

// Human rendering used by --pretty.
std::string pretty_verdict(const CheckVerdict& v);
std::string pretty_profile(const HierarchyProfile& p);
std::string degree_line(const HierarchyProfile& p);

}  // namespace varfn
