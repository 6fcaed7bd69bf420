#include "varfn/cli.hpp"
#include "varfn/config.hpp"
#include "varfn/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace varfn;

namespace {

py::object json_to_py(const ReportJson& j) {
  switch (j.type()) {
    case ReportJson::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : j.items()) d[py::str(k)] = json_to_py(v);
      return d;
    }
    case ReportJson::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(json_to_py(v));
      return l;
    }
    case ReportJson::value_t::string:
      return py::str(j.get<std::string>());
    case ReportJson::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ReportJson::value_t::number_integer:
      return py::int_(j.get<long long>());
    case ReportJson::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case ReportJson::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

Word word_from_py(const Alphabet& a, const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_word_compact(a, obj.cast<std::string>());
  std::vector<std::string> tokens;
  for (const auto& t : obj.cast<py::iterable>()) tokens.push_back(t.cast<std::string>());
  return parse_word_tokens(a, tokens);
}

py::object value_to_py(const OutputValue& v) {
  if (!v.is_word()) return py::str("opaque:" + v.token);
  py::list l;
  for (const Letter& letter : v.word.letters) l.append(py::str(letter.text()));
  return l;
}

FnParams params_from_dict(const Alphabet& a, const py::dict& d) {
  FnParams p;
  for (const auto& item : d) {
    const std::string key = item.first.cast<std::string>();
    if (key == "m") {
      p.m = item.second.cast<long long>();
    } else if (key == "word") {
      p.word = word_from_py(a, py::reinterpret_borrow<py::object>(item.second));
    } else if (key == "letter") {
      const std::string tok = item.second.cast<std::string>();
      p.letter = a.has_symbol(tok) ? Letter::symbolic(tok) : Letter::numeric(parse_rational(tok));
    } else if (key == "perm") {
      for (const auto& kv : item.second.cast<py::dict>()) {
        p.perm[kv.first.cast<std::string>()] = kv.second.cast<std::string>();
      }
    } else {
      throw ConfigError("unknown parameter '" + key + "'");
    }
  }
  return p;
}

DomainSet domain_from_dict(AlphabetPtr alphabet, const py::dict& d) {
  ReportJson j = ReportJson::object();
  std::string kind = d["kind"].cast<std::string>();
  if (kind == "full") return DomainSet(DomainSpec::full(), alphabet);
  if (kind == "maxlen") return DomainSet(DomainSpec::max_len(d["m"].cast<int>()), alphabet);
  if (kind == "minlen") return DomainSet(DomainSpec::min_len(d["m"].cast<int>()), alphabet);
  if (kind == "repeats") return DomainSet(DomainSpec::repeats(), alphabet);
  if (kind == "factor") {
    return DomainSet(DomainSpec::factor(word_from_py(*alphabet, d["word"])), alphabet);
  }
  if (kind == "threshold") {
    return DomainSet(DomainSpec::threshold(parse_rational(d["s"].cast<std::string>())), alphabet);
  }
  if (kind == "explicit") {
    std::vector<Word> words;
    for (const auto& w : d["words"].cast<py::iterable>()) {
      words.push_back(word_from_py(*alphabet, py::reinterpret_borrow<py::object>(w)));
    }
    return DomainSet(DomainSpec::explicit_set(std::move(words)), alphabet);
  }
  throw ConfigError("unknown domain kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_varfn, m) {
  m.doc() = "bounded-exhaustive analysis of variadic string functions";

  py::register_exception<ConfigError>(m, "ConfigError");

  py::class_<Alphabet, std::shared_ptr<Alphabet>>(m, "Alphabet")
      .def(py::init([](std::vector<std::string> symbols, std::vector<std::string> numeric_samples,
                       std::vector<std::string> vowel_set,
                       std::map<std::string, std::string> case_map) {
             std::vector<Rational> samples;
             for (const auto& s : numeric_samples) samples.push_back(parse_rational(s));
             return std::make_shared<Alphabet>(std::move(symbols), std::move(samples),
                                               std::move(vowel_set), std::move(case_map));
           }),
           py::arg("symbols"), py::arg("numeric_samples") = std::vector<std::string>{},
           py::arg("vowel_set") = std::vector<std::string>{},
           py::arg("case_map") = std::map<std::string, std::string>{})
      .def_property_readonly("symbols", &Alphabet::symbols)
      .def("__repr__", [](const Alphabet& a) {
        std::string s = "Alphabet([";
        for (std::size_t i = 0; i < a.symbols().size(); ++i) {
          if (i) s += ",";
          s += a.symbols()[i];
        }
        s += "], numerics=" + std::to_string(a.numeric_samples().size()) + ")";
        return s;
      });

  py::class_<DomainSet>(m, "DomainSet")
      .def_property_readonly("name", &DomainSet::name)
      .def("describe", &DomainSet::describe)
      .def("contains",
           [](const DomainSet& d, const py::object& w) {
             return d.contains(word_from_py(d.alphabet(), w));
           })
      .def("enumerate", [](const DomainSet& d, int bound) {
        py::list out;
        for (const Word& w : d.enumerate(bound)) {
          out.append(value_to_py(OutputValue::from_word(w)));
        }
        return out;
      });

  py::class_<VariadicFn>(m, "VariadicFn")
      .def_readonly("name", &VariadicFn::name)
      .def("__call__",
           [](const VariadicFn& f, const py::object& w) {
             return value_to_py(f.eval(word_from_py(*f.alphabet, w)));
           })
      .def("__repr__", [](const VariadicFn& f) { return "VariadicFn(" + f.name + ")"; });

  m.def("make_domain", &domain_from_dict, py::arg("alphabet"), py::arg("spec"));

  m.def(
      "instantiate",
      [](AlphabetPtr alphabet, const std::string& key, const py::dict& params) {
        return instantiate(alphabet, key, params_from_dict(*alphabet, params));
      },
      py::arg("alphabet"), py::arg("key"), py::arg("params") = py::dict());

  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));

  m.def(
      "patch",
      [](const VariadicFn& base, const py::dict& overrides) {
        std::map<Word, OutputValue, WordLess> table;
        for (const auto& kv : overrides) {
          Word w = word_from_py(*base.alphabet, py::reinterpret_borrow<py::object>(kv.first));
          const py::object val = py::reinterpret_borrow<py::object>(kv.second);
          if (py::isinstance<py::str>(val)) {
            std::string s = val.cast<std::string>();
            if (s.rfind("opaque:", 0) == 0) {
              table[w] = OutputValue::opaque(s.substr(7));
              continue;
            }
          }
          table[w] = OutputValue::from_word(word_from_py(*base.alphabet, val));
        }
        return patch(base, std::move(table));
      },
      py::arg("base"), py::arg("overrides"));

  m.def(
      "check",
      [](const VariadicFn& f, const DomainSet& d, const std::string& cls, int bound,
         int domain_bound, int workers) {
        if (domain_bound < 0) domain_bound = bound;
        CheckVerdict v = run_family_check(f, parse_family(cls), d, bound, domain_bound, workers);
        return json_to_py(json_verdict(v));
      },
      py::arg("fn"), py::arg("domain"), py::arg("cls"), py::arg("bound"),
      py::arg("domain_bound") = -1, py::arg("workers") = 1);

  m.def(
      "profile",
      [](const VariadicFn& f, const std::string& family, int bound, int max_m, int workers) {
        return json_to_py(json_profile(profile(f, parse_family(family), bound, max_m, workers)));
      },
      py::arg("fn"), py::arg("family"), py::arg("bound"), py::arg("max_m"),
      py::arg("workers") = 1);

  m.def(
      "degree",
      [](const VariadicFn& f, const std::string& family, int bound, int max_m) {
        if (family != "A" && family != "P") {
          throw ConfigError("degree is defined for the plain families only: pass A or P");
        }
        HierarchyProfile p = profile(f, parse_family(family), bound, max_m);
        py::dict out = json_to_py(json_profile(p)).cast<py::dict>();
        out["degree_line"] = degree_line(p);
        return out;
      },
      py::arg("fn"), py::arg("family"), py::arg("bound"), py::arg("max_m"));

  m.def(
      "factorize",
      [](const VariadicFn& f, int bound, const DomainSet* domain, int workers) {
        return json_to_py(json_factorization(factorize(f, bound, domain, workers)));
      },
      py::arg("fn"), py::arg("bound"), py::arg("domain") = nullptr, py::arg("workers") = 1);

  m.def("catalogue", [] {
    py::list out;
    for (const CatalogueEntry& e : catalogue_entries()) {
      py::dict d;
      d["key"] = e.key;
      d["summary"] = e.summary;
      d["params"] = e.params_doc;
      d["requires"] = e.requires_doc;
      out.append(d);
    }
    return out;
  });

  m.def("default_alphabet", [] {
    return std::const_pointer_cast<Alphabet>(default_config().alphabet);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
