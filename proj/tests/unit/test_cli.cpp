#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tclass/commands.hpp"
#include "tclass/errors.hpp"
#include "tclass/spec_io.hpp"

using namespace tclass;

namespace {

namespace fs = std::filesystem;

std::string model(const std::string& name) { return std::string(TCLASS_MODEL_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tclass");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Report JSON from a run with --json -.
Json report_of(const Run& r) {
  const auto pos = r.out.find("\n{");
  REQUIRE(pos != std::string::npos);
  return Json::parse(r.out.substr(pos + 1));
}

Json plain(const OrderedJson& j) { return Json::parse(j.dump()); }

std::string temp_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("tclass_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("classify: valuation Z, Closed@3") {
  const std::string spec = temp_file("z.json", R"({"kind": "valuation", "group": ["Z"]})");
  const Run r = run({"classify", spec, "--ideal", R"({"level": 1, "boundary": ["3"], "side": "closed"})", "--json", "-"});
  REQUIRE(r.code == kExitPass);
  const Json j = report_of(r);
  CHECK(j["results"]["idempotent_form"]["kind"] == "Ring");
  CHECK(j["results"]["idempotent_form"]["text"] == "Ring(T[1])");
  CHECK(j["results"]["regularity"]["shift"] == Json::array({"3"}));
  CHECK(j["status"] == "pass");
  CHECK(r.out.find("text: Ring(T[1])") != std::string::npos);
}

TEST_CASE("classify: two dense components") {
  const std::string spec =
      temp_file("h3.json", R"({"kind": "pruefer_fc", "valuations": [[{"Zloc": [2]}], [{"Zloc": [3]}]]})");
  const Run r = run({"classify", spec, "--json", "-", "--ideal",
                     R"({"cuts": [{"level": 1, "boundary": ["0"], "side": "open"},
                                  {"level": 1, "boundary": ["0"], "side": "open"}]})"});
  REQUIRE(r.code == kExitPass);
  const Json j = report_of(r);
  CHECK(j["results"]["idempotent_form"]["text"] == "MaxIdeals(T[1,1], {1,2})");
  CHECK(j["results"]["idempotent_form"]["max_ideal_components"] == Json::array({1, 2}));
  CHECK(j["results"]["tmax_containing"] == Json::array({1, 2}));
}

TEST_CASE("classify: poly_ext base Q, coefficient Open@0") {
  const Run r = run({"classify", model("poly_q.json"), "--json", "-", "--ideal",
                     R"({"coeff": {"level": 1, "boundary": ["0"], "side": "open"}})"});
  REQUIRE(r.code == kExitPass);
  const Json j = report_of(r);
  CHECK(j["results"]["idempotent"]["label"] == "M[X]");
  CHECK(j["results"]["idempotent"]["kind"] == "max_class");
  CHECK(j["results"]["scope"] == "over extended classes");
}

TEST_CASE("decompose examples") {
  {
    const Run r = run({"decompose", model("poly_zzz.json"), "--json", "-"});
    REQUIRE(r.code == kExitPass);
    const Json j = report_of(r);
    CHECK(j["results"]["idempotent_count"] == 3);
    CHECK(j["results"]["strongly_discrete"] == true);
    for (const auto& g : j["results"]["idempotents"]) CHECK(g["group"]["trivial"] == true);
  }
  {
    const Run r = run({"decompose", model("poly_q.json"), "--json", "-"});
    const Json j = report_of(r);
    REQUIRE(j["results"]["idempotent_count"] == 2);
    CHECK(j["results"]["idempotents"][0]["label"] == "Ring(R)");
    CHECK(j["results"]["idempotents"][1]["label"] == "M[X]");
  }
  {
    const std::string spec = temp_file("z.json", R"({"kind": "valuation", "group": ["Z"]})");
    const Json j = report_of(run({"decompose", spec, "--json", "-"}));
    REQUIRE(j["results"]["idempotent_count"] == 1);
    CHECK(j["results"]["idempotents"][0]["group"]["trivial"] == true);
  }
  {
    const Json j = report_of(run({"decompose", model("pruefer_k2.json"), "--json", "-"}));
    // component Q: ring + prime; component (Z, Z): two rings
    CHECK(j["results"]["idempotent_count"] == 4);
  }
}

TEST_CASE("verify: shipped models pass") {
  for (const auto& entry : fs::directory_iterator(TCLASS_MODEL_DIR)) {
    const Run r = run({"verify", entry.path().string(), "--samples", "60"});
    CHECK_MESSAGE(r.code == kExitPass, entry.path().string() << "\n" << r.out << r.err);
  }
}

TEST_CASE("verify: zero samples is a vacuous pass") {
  const Run r = run({"verify", model("pruefer_k3.json"), "--samples", "0", "--json", "-"});
  CHECK(r.code == kExitPass);
  const Json j = report_of(r);
  CHECK(j["provenance"]["samples"] == 0);
  CHECK(j["status"] == "pass");
}

TEST_CASE("verify: corrupted fixtures exit 2") {
  const std::string spec = temp_file(
      "zhalf_seeds.json",
      R"({"kind": "valuation", "group": [{"Zloc": [2]}],
          "seeds": [{"level": 1, "boundary": ["1/3"], "side": "open"},
                    {"level": 1, "boundary": ["0"], "side": "open"}]})");
  const std::string good = std::string(TCLASS_FIXTURE_DIR) + "/zhalf_closure.table";
  CHECK(run({"verify", spec, "--samples", "20", "--table", good}).code == kExitPass);

  // a valid group table that disagrees with the model
  const std::string wrong = temp_file("wrong.table", "3\n0 1 2\n1 0 2\n2 2 2\n");
  const Run w = run({"verify", spec, "--samples", "20", "--table", wrong, "--json", "-"});
  CHECK(w.code == kExitVerifyFailed);
  const Json j = report_of(w);
  CHECK(j["status"] == "fail");
  CHECK(j["suites"].back()["name"] == "table_fixture");
  CHECK_FALSE(j["suites"].back()["counterexamples"].empty());

  // not associative
  const std::string broken = temp_file("broken.table", "3\n0 1 2\n1 0 0\n2 0 0\n");
  CHECK(run({"verify", spec, "--table", broken}).code == kExitVerifyFailed);
}

TEST_CASE("determinism") {
  const auto a = run({"verify", model("pruefer_k3.json"), "--samples", "40", "--seed", "9", "--json", "-"});
  const auto b = run({"verify", model("pruefer_k3.json"), "--samples", "40", "--seed", "9", "--json", "-"});
  CHECK(a.out == b.out);
  const auto c = run({"verify", model("pruefer_k3.json"), "--samples", "40", "--seed", "10", "--json", "-"});
  CHECK(report_of(c)["provenance"]["seed"] == 10);
}

TEST_CASE("report literals round-trip") {
  const DomainSpec spec = load_domain_spec(model("pruefer_k3.json"));
  const Run r = run({"classify", model("pruefer_k3.json"), "--json", "-", "--ideal",
                     R"({"cuts": [{"level": 1, "boundary": ["7/2"], "side": "open"},
                                  {"level": 1, "boundary": ["1/3"], "side": "open"},
                                  {"level": 1, "boundary": ["1/2"], "side": "closed"}]})"});
  REQUIRE(r.code == kExitPass);
  const Json j = report_of(r);
  for (const char* key : {"ideal", "class", "J"}) {
    const Ideal parsed = parse_ideal(spec, j["results"][key]);
    CHECK(plain(to_json(parsed)) == j["results"][key]);
  }
  const Ideal ideal = parse_ideal(spec, j["results"]["ideal"]);
  const auto& t = std::get<IdealTuple>(ideal);
  CHECK(t[0] == normalize(CutSpec{1, {Rational(7, 2)}, Side::Open}, t[0].group_handle()));

  for (const auto& name : {"valuation_z_q.json", "poly_z2.json"}) {
    const DomainSpec s = load_domain_spec(model(name));
    const Json d = report_of(run({"decompose", model(name), "--json", "-"}));
    for (const auto& item : d["results"]["idempotents"]) {
      const Json lit = item.contains("idempotent") ? item["idempotent"] : Json{{"coeff", item["coefficient"]}};
      CHECK(plain(to_json(parse_ideal(s, lit))) == lit);
    }
  }
}

TEST_CASE("usage and parse errors exit 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"verify", model("poly_q.json"), "--samples", "many"}).code == kExitUsage);
  CHECK(run({"verify", "/nonexistent/spec.json"}).code == kExitUsage);
  CHECK(run({"classify", model("poly_q.json")}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);

  const Run bad_kind = run({"decompose", temp_file("bad_kind.json", R"({"kind": "krull"})")});
  CHECK(bad_kind.code == kExitUsage);
  CHECK(bad_kind.err.find("spec.kind") != std::string::npos);

  const Run bad_comp =
      run({"decompose", temp_file("bad_comp.json", R"({"kind": "pruefer_fc", "valuations": [["Z"], ["R"]]})")});
  CHECK(bad_comp.code == kExitUsage);
  CHECK(bad_comp.err.find("spec.valuations[1][0]") != std::string::npos);

  const Run bad_json = run({"decompose", temp_file("bad_json.json", "{\"kind\": \n")});
  CHECK(bad_json.code == kExitUsage);
  CHECK(bad_json.err.find("line") != std::string::npos);

  const Run bad_level = run({"classify", model("poly_q.json"), "--ideal",
                             R"({"coeff": {"level": 2, "boundary": ["0", "0"], "side": "open"}})"});
  CHECK(bad_level.code == kExitUsage);
  CHECK(bad_level.err.find("ideal.coeff") != std::string::npos);

  const Run bad_side = run({"classify", model("valuation_z2.json"), "--ideal",
                            R"({"level": 1, "boundary": ["1/3"], "side": "half"})"});
  CHECK(bad_side.code == kExitUsage);
  CHECK(bad_side.err.find("ideal.side") != std::string::npos);

  const Run bad_rat = run({"classify", model("valuation_z2.json"), "--ideal",
                           R"({"level": 1, "boundary": ["1/0"], "side": "open"})"});
  CHECK(bad_rat.code == kExitUsage);
  CHECK(bad_rat.err.find("ideal.boundary[0]") != std::string::npos);

  const Run bad_zloc =
      run({"decompose", temp_file("bad_zloc.json", R"({"kind": "valuation", "group": [{"Zloc": []}]})")});
  CHECK(bad_zloc.code == kExitUsage);
}

TEST_CASE("json report file") {
  const fs::path out = fs::temp_directory_path() / "tclass_test_report.json";
  fs::remove(out);
  const Run r = run({"decompose", model("poly_zzz.json"), "--json", out.string()});
  REQUIRE(r.code == kExitPass);
  std::ifstream in(out);
  const Json j = Json::parse(in);
  CHECK(j["command"]["name"] == "decompose");
  CHECK(j["command"]["args"][1] == model("poly_zzz.json"));
  CHECK(j["provenance"]["version"] == kToolVersion);
}
