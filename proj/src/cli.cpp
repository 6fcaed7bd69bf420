#include "varfn/cli.hpp"

#include "varfn/config.hpp"
#include "varfn/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace varfn {

namespace {

struct CommonOpts {
  std::string config_path;
  bool pretty = false;
  bool timing = false;
  int workers = 1;
};

Config load(const CommonOpts& opts, std::string& canonical_text) {
  if (opts.config_path.empty()) {
    canonical_text = default_config_text();
    return default_config();
  }
  std::ifstream in(opts.config_path);
  if (!in) throw ConfigError("cannot open config file '" + opts.config_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  canonical_text = buf.str();
  return load_config_text(canonical_text);
}

ReportJson report_head(const std::string& command, const std::vector<std::string>& args,
                       const std::string& canonical_config) {
  ReportJson j = ReportJson::object();
  j["tool"] = "varfn";
  j["version"] = "0.1.0";
  j["command"] = command;
  j["argv"] = args;
  j["config_digest"] = config_digest(canonical_config);
  return j;
}

void emit(const ReportJson& doc, const CommonOpts& opts, const std::string& pretty_text,
          std::ostream& out) {
  if (opts.pretty) {
    out << pretty_text;
    if (!pretty_text.empty() && pretty_text.back() != '\n') out << "\n";
    return;
  }
  out << doc.dump(2) << "\n";
}

int resolved_bound(int flag_value, int fallback) { return flag_value >= 0 ? flag_value : fallback; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"analysis of variadic string functions: relaxed associativity and "
               "preassociativity checks, factorizations and hierarchy degrees"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--config", opts.config_path, "configuration document (JSON)");
  app.add_flag("--pretty", opts.pretty, "human-readable rendering instead of the JSON report");
  app.add_flag("--timing", opts.timing, "append wall-clock timing (off by default: reports stay "
                                        "byte-reproducible)");
  app.add_option("--workers", opts.workers, "worker threads for the checkers")
      ->check(CLI::PositiveNumber);

  std::string fn_name;
  std::string class_name;
  std::string domain_name;
  std::string family_name;
  std::string classes_pair;
  int bound = -1;
  int dbound = -1;
  int max_m = -1;

  CLI::App* check = app.add_subcommand("check", "run one relaxed-class check");
  check->add_option("--fn", fn_name, "function name from the config")->required();
  check->add_option("--class", class_name, "A, Ap, P or Pp")->required();
  check->add_option("--domain", domain_name, "domain name from the config")->required();
  check->add_option("--bound", bound, "quantifier bound");
  check->add_option("--domain-bound", dbound, "domain tabulation bound (primed checks)");

  CLI::App* profile_cmd = app.add_subcommand("profile", "membership profile across maxlen(m)");
  profile_cmd->add_option("--fn", fn_name)->required();
  profile_cmd->add_option("--family", family_name, "A, Ap, P or Pp")->required();
  profile_cmd->add_option("--max-m", max_m, "largest level to test");
  profile_cmd->add_option("--bound", bound, "quantifier bound");

  CLI::App* degree_cmd = app.add_subcommand("degree", "observed degree over the maxlen family");
  degree_cmd->add_option("--fn", fn_name)->required();
  degree_cmd->add_option("--family", family_name, "A or P")->required();
  degree_cmd->add_option("--max-m", max_m);
  degree_cmd->add_option("--bound", bound);

  CLI::App* fact_cmd = app.add_subcommand("factorize", "quasi-inverse factorization with "
                                                       "verification checklist");
  fact_cmd->add_option("--fn", fn_name)->required();
  fact_cmd->add_option("--domain", domain_name);
  fact_cmd->add_option("--bound", bound);

  CLI::App* cat_cmd = app.add_subcommand("catalogue", "list the built-in function entries");

  long long max_candidates = 5000;
  CLI::App* sep_cmd = app.add_subcommand("separate", "search for a function separating two "
                                                     "class checks over one domain");
  sep_cmd->add_option("--classes", classes_pair, "pair like A,Ap or P,Pp")->required();
  sep_cmd->add_option("--domain", domain_name)->required();
  sep_cmd->add_option("--bound", bound);
  sep_cmd->add_option("--max-candidates", max_candidates,
                      "stop the table search after this many candidates")
      ->check(CLI::PositiveNumber);

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<std::string> argv_copy = args;
  std::vector<const char*> argv;
  argv.push_back("varfn");
  for (const auto& a : argv_copy) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    std::string canonical;
    Config cfg = load(opts, canonical);
    ReportJson doc;
    std::string pretty;
    int status = 0;

    if (*check) {
      const VariadicFn& f = cfg.fn(fn_name);
      const DomainSet& d = cfg.domain(domain_name);
      Family family = parse_family(class_name);
      int b = resolved_bound(bound, cfg.default_bound);
      int db = resolved_bound(dbound, cfg.default_domain_bound);
      CheckVerdict v = run_family_check(f, family, d, b, db, opts.workers);
      doc = report_head("check", args, canonical);
      doc["fn"] = f.name;
      doc["class"] = to_string(family);
      doc["domain"] = d.name();
      doc["result"] = json_verdict(v);
      pretty = f.name + " / " + to_string(family) + " on " + d.describe() + ": " +
               pretty_verdict(v);
      status = v.refuted ? 1 : 0;
    } else if (*profile_cmd) {
      const VariadicFn& f = cfg.fn(fn_name);
      Family family = parse_family(family_name);
      int b = resolved_bound(bound, cfg.default_bound);
      int mm = resolved_bound(max_m, cfg.default_max_m);
      HierarchyProfile p = profile(f, family, b, mm, opts.workers);
      doc = report_head("profile", args, canonical);
      doc["fn"] = f.name;
      doc["result"] = json_profile(p);
      pretty = f.name + ": " + pretty_profile(p);
    } else if (*degree_cmd) {
      if (family_name != "A" && family_name != "P") {
        throw ConfigError("degree is defined for the plain families only: pass A or P");
      }
      const VariadicFn& f = cfg.fn(fn_name);
      Family family = parse_family(family_name);
      int b = resolved_bound(bound, cfg.default_bound);
      int mm = resolved_bound(max_m, cfg.default_max_m);
      HierarchyProfile p = profile(f, family, b, mm, opts.workers);
      doc = report_head("degree", args, canonical);
      doc["fn"] = f.name;
      doc["result"] = json_profile(p);
      doc["degree_line"] = degree_line(p);
      pretty = f.name + ": " + degree_line(p);
    } else if (*fact_cmd) {
      const VariadicFn& f = cfg.fn(fn_name);
      int b = resolved_bound(bound, cfg.default_bound);
      const DomainSet* d = nullptr;
      if (!domain_name.empty()) d = &cfg.domain(domain_name);
      Factorization fac = factorize(f, b, d, opts.workers);
      doc = report_head("factorize", args, canonical);
      doc["fn"] = f.name;
      doc["result"] = json_factorization(fac);
      pretty = f.name + ": factorized at bound " + std::to_string(b) +
               (fac.report.f_injective ? "; f injective" : "; f NOT injective") +
               "; compose mismatches: " + std::to_string(fac.report.compose_mismatches) +
               "\nclass check (plain): " + pretty_verdict(fac.report.class_plain);
    } else if (*cat_cmd) {
      doc = report_head("catalogue", args, canonical);
      ReportJson entries = ReportJson::array();
      pretty = "catalogue entries:\n";
      for (const CatalogueEntry& e : catalogue_entries()) {
        ReportJson ej = ReportJson::object();
        ej["key"] = e.key;
        ej["summary"] = e.summary;
        ej["params"] = e.params_doc;
        ej["requires"] = e.requires_doc;
        entries.push_back(std::move(ej));
        pretty += "  " + e.key + (e.params_doc.empty() ? "" : " [" + e.params_doc + "]") + ": " +
                  e.summary + "\n";
      }
      doc["result"] = std::move(entries);
    } else if (*sep_cmd) {
      auto comma = classes_pair.find(',');
      if (comma == std::string::npos) {
        throw ConfigError("--classes expects a pair like A,Ap");
      }
      Family first = parse_family(classes_pair.substr(0, comma));
      Family second = parse_family(classes_pair.substr(comma + 1));
      const DomainSet& d = cfg.domain(domain_name);
      int b = resolved_bound(bound, 3);
      // The exhaustive table space is huge for larger alphabets; the cap
      // keeps the command terminating either way.
      FnGenerator inner = exhaustive_table_generator(cfg.alphabet, 2, 2);
      long long budget = max_candidates;
      FnGenerator capped = [inner, budget, seen = std::make_shared<long long>(0)]() mutable
          -> std::optional<VariadicFn> {
        if (*seen >= budget) return std::nullopt;
        ++*seen;
        return inner();
      };
      SeparationResult r = separation_search(first, second, d, capped, b, opts.workers);
      doc = report_head("separate", args, canonical);
      doc["classes"] = classes_pair;
      doc["domain"] = d.name();
      doc["result"] = json_separation(r);
      pretty = r.found ? ("separator found after " + std::to_string(r.candidates_tried) +
                          " candidates: " + r.separator->name + " is in " +
                          to_string(r.member_of) + " and refuted in " + to_string(r.refuted_in))
                       : ("no separator among " + std::to_string(r.candidates_tried) +
                          " candidates");
    }

    if (opts.timing) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      doc["timing_ms"] = static_cast<long long>(elapsed);
    }
    emit(doc, opts, pretty, out);
    return status;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace varfn
