#include "varfn/checkers.hpp"
#include "varfn/cli.hpp"
#include "varfn/config.hpp"

#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace varfn;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check exit codes: pass, refute, config error") {
  CliRun pass = cli({"check", "--fn", "identity", "--class", "A", "--domain", "full",
                     "--bound", "4"});
  CHECK(pass.code == 0);
  CHECK(pass.err.empty());

  CliRun refuted = cli({"check", "--fn", "indexer2", "--class", "A", "--domain", "D3",
                        "--bound", "6"});
  CHECK(refuted.code == 1);
  auto doc = nlohmann::json::parse(refuted.out);
  CHECK(doc.at("result").at("verdict") == "refuted");
  auto y = doc.at("result").at("counterexample").at("y");
  CHECK(y == nlohmann::json::array({"a", "a", "a"}));

  CliRun bad_fn = cli({"check", "--fn", "nope", "--class", "A", "--domain", "full"});
  CHECK(bad_fn.code == 2);
  CHECK(bad_fn.err.find("nope") != std::string::npos);

  CliRun bad_flag = cli({"check", "--fn", "identity", "--class", "Q", "--domain", "full"});
  CHECK(bad_flag.code == 2);

  CliRun bad_usage = cli({"frobnicate"});
  CHECK(bad_usage.code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::vector<std::string>> invocations = {
      {"check", "--fn", "factor_ab", "--class", "Ap", "--domain", "factor_ab", "--bound", "4"},
      {"check", "--fn", "mean", "--class", "Pp", "--domain", "D1", "--bound", "3"},
      {"profile", "--fn", "indexer1", "--family", "A", "--bound", "4", "--max-m", "2"},
      {"degree", "--fn", "prefix2", "--family", "A", "--bound", "5", "--max-m", "3"},
      {"factorize", "--fn", "length", "--bound", "3"},
      {"catalogue"},
  };
  for (const auto& argv : invocations) {
    CliRun first = cli(argv);
    CliRun second = cli(argv);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("worker count does not change the verdict section") {
  std::vector<std::string> base = {"check", "--fn", "indexer2", "--class", "A",
                                   "--domain", "D3",  "--bound", "6"};
  CliRun one = cli(base);
  auto many = base;
  many.push_back("--workers");
  many.push_back("4");
  CliRun four = cli(many);
  CHECK(one.code == four.code);
  // The command echo differs by the flag; the verdict must not.
  CHECK(nlohmann::json::parse(one.out).at("result") ==
        nlohmann::json::parse(four.out).at("result"));
}

TEST_CASE("pretty rendering and domain-bound flag") {
  CliRun pretty = cli({"check", "--fn", "indexer2", "--class", "A", "--domain", "D3",
                       "--bound", "6", "--pretty"});
  CHECK(pretty.code == 1);
  CHECK(pretty.out.find("refuted") != std::string::npos);
  CHECK(pretty.out.find("y = aaa") != std::string::npos);
  CHECK(pretty.out.find("{") == std::string::npos);

  // A shallow domain tabulation admits fewer words; the verdict records it.
  CliRun shallow = cli({"check", "--fn", "prefix_with_gap1", "--class", "Ap", "--domain", "D1",
                        "--bound", "4", "--domain-bound", "0"});
  CHECK(shallow.code == 0);
  auto doc = nlohmann::json::parse(shallow.out);
  CHECK(doc.at("result").at("domain_bound") == 0);

  CliRun deep = cli({"check", "--fn", "prefix_with_gap1", "--class", "Ap", "--domain", "D1",
                     "--bound", "4", "--domain-bound", "4"});
  CHECK(deep.code == 1);
}

TEST_CASE("degree command output") {
  CliRun d = cli({"degree", "--fn", "indexer2", "--family", "A", "--bound", "6", "--max-m", "4"});
  CHECK(d.code == 0);
  auto doc = nlohmann::json::parse(d.out);
  CHECK(doc.at("result").at("degree") == "1/4");
  CHECK(doc.at("degree_line").get<std::string>().find("2^-2") != std::string::npos);

  CliRun bad = cli({"degree", "--fn", "indexer2", "--family", "Ap"});
  CHECK(bad.code == 2);
}

TEST_CASE("factorize report carries the tables") {
  CliRun f = cli({"factorize", "--fn", "length", "--bound", "3"});
  REQUIRE(f.code == 0);
  auto doc = nlohmann::json::parse(f.out);
  const auto& rep = doc.at("result").at("report");
  CHECK(rep.at("f_injective") == true);
  CHECK(rep.at("compose_mismatches") == 0);
  CHECK(rep.at("class_plain").at("verdict") == "passed_up_to");
  // h maps every word to the a-power of its length.
  for (const auto& row : doc.at("result").at("h")) {
    CHECK(row.at(1).size() == row.at(0).size());
    for (const auto& tok : row.at(1)) CHECK(tok == "a");
  }
}

TEST_CASE("catalogue and separate commands") {
  CliRun c = cli({"catalogue"});
  CHECK(c.code == 0);
  auto doc = nlohmann::json::parse(c.out);
  CHECK(doc.at("result").size() >= 15);

  CliRun s = cli({"separate", "--classes", "A,Ap", "--domain", "D1", "--bound", "3"});
  CHECK(s.code == 0);
  auto sep = nlohmann::json::parse(s.out);
  CHECK(sep.at("result").at("found") == true);
}

TEST_CASE("config file loading and validation") {
  CliRun missing = cli({"catalogue", "--config", "/nonexistent.json"});
  CHECK(missing.code == 2);

  // An inline config written to a temp file round-trips.
  std::string path = "/tmp/varfn_test_config.json";
  {
    std::ofstream out(path);
    out << R"({
      "alphabet": {"symbols": ["x", "y"]},
      "functions": [{"name": "f", "key": "prefix", "params": {"m": 1}}],
      "domains": {"full": {"kind": "full"}, "short": {"kind": "maxlen", "m": 1}}
    })";
  }
  CliRun ok = cli({"check", "--fn", "f", "--class", "A", "--domain", "full", "--bound", "3",
                   "--config", path});
  CHECK(ok.code == 0);

  CliRun unknown_domain = cli({"check", "--fn", "f", "--class", "A", "--domain", "D9",
                               "--config", path});
  CHECK(unknown_domain.code == 2);
  CHECK(unknown_domain.err.find("D9") != std::string::npos);
}

TEST_CASE("config covers every domain kind and numeric word literals") {
  Config cfg = load_config_text(R"({
    "alphabet": {"symbols": ["a", "b"], "numeric_samples": ["0", "1", "1/2"]},
    "functions": [
      {"name": "id", "key": "identity"},
      {"name": "m", "key": "mean"}
    ],
    "domains": {
      "everything": {"kind": "full"},
      "short": {"kind": "maxlen", "m": 1},
      "long": {"kind": "minlen", "m": 2},
      "reps": {"kind": "repeats"},
      "around": {"kind": "factor", "word": "ab"},
      "low": {"kind": "threshold", "s": "1/2"},
      "pair": {"kind": "explicit", "words": [["0"], ["a", "1/2"]]}
    }
  })");

  const Alphabet& a = *cfg.alphabet;
  Word zero = parse_word_tokens(a, {"0"});
  Word half = parse_word_tokens(a, {"1/2"});
  Word mixed = parse_word_tokens(a, {"a", "1/2"});

  CHECK(cfg.domain("low").contains(zero));
  CHECK(cfg.domain("low").contains(half));
  CHECK(!cfg.domain("low").contains(parse_word_tokens(a, {"1"})));
  CHECK(cfg.domain("pair").contains(zero));
  CHECK(cfg.domain("pair").contains(mixed));
  CHECK(!cfg.domain("pair").contains(parse_word_tokens(a, {"1"})));
  CHECK(cfg.domain("long").contains(parse_word_tokens(a, {"a", "b"})));
  CHECK(!cfg.domain("long").contains(zero));
  CHECK(cfg.domain("reps").contains(parse_word_tokens(a, {"b", "b"})));

  // Threshold domains plug into the checkers like any other.
  CHECK(check_eq2(cfg.fn("m"), cfg.domain("low"), CheckMode::Plain, 2).passed());

  CHECK_THROWS_AS(load_config_text("{\"domains\": {\"d\": {\"kind\": \"wat\"}}}"), ConfigError);
  CHECK_THROWS_AS(load_config_text(R"({"functions": [{"name": "x"}]})"), ConfigError);
  CHECK_THROWS_AS(load_config_text("not json"), ConfigError);
}

TEST_CASE("default config resolves every entry") {
  Config cfg = default_config();
  CHECK(cfg.functions.size() >= 20);
  CHECK(cfg.domains.count("D0") == 1);
  CHECK(cfg.domains.count("factor_ab") == 1);
  for (const auto& name : cfg.function_order) {
    CHECK(cfg.functions.count(name) == 1);
  }
}
