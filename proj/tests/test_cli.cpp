#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "tjurina/cli.hpp"
#include "tjurina/report.hpp"

using namespace tjurina;
using testing::aff;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("report JSON round trip") {
    const std::vector<std::pair<std::string, AffinePoint>> fixtures{
        {"x^5-y^5", {}},
        {"y^2-x^6", {}},
        {"y-x^2", {}},
        {"y-x^2", {Scalar(1, 2), Scalar(-3, 7)}},
        {"x*y*(x-y)*(x+y)^2+x^6+y^6", {}},
        {"y^2*(x-1)", {}},
    };
    for (const auto& [text, p] : fixtures) {
      const ReportDocument doc = make_report(text, analyze(aff(text), p), 12);
      const nlohmann::json j = to_json(doc);
      CHECK(report_from_json(j) == doc);
      CHECK(report_from_json(nlohmann::json::parse(j.dump())) == doc);
    }
    const ReportDocument frac = make_report("y-x^2", analyze(aff("y-x^2"), {Scalar(1, 2), 0}), 0);
    CHECK(to_json(frac)["point"] == nlohmann::json{"1/2", "0"});
  }

  TEST_CASE("report JSON keys") {
    const nlohmann::json j = to_json(make_report("x^5-y^5", analyze(aff("x^5-y^5"), {}), 3));
    for (const char* key : {"version", "curve", "point", "multiplicity", "ordinary", "tjurina", "milnor",
                            "symmetry_order", "classification", "trace_tjurina", "trace_milnor", "warnings",
                            "elapsed_ms"}) {
      CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK(j["tjurina"] == 16);
    CHECK(j["milnor"] == 16);
    CHECK(j["ordinary"] == true);
    CHECK(j["trace_tjurina"].back() == nlohmann::json{8, 16});
    CHECK_THROWS(report_from_json(nlohmann::json::object()));
  }

  TEST_CASE("analyze command") {
    Run r = run({"analyze", "--curve", "x^5-y^5", "--point", "0,0", "--json"});
    CHECK(r.code == kExitOk);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["tjurina"] == 16);
    CHECK(j["milnor"] == 16);
    CHECK(j["ordinary"] == true);

    r = run({"analyze", "--curve", "y^2-x^6", "--point", "0,0"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "A_5 (tau = 5)"));

    r = run({"analyze", "--curve", "y^2-x", "--point", "0,0"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "smooth point, tangent: "));

    r = run({"--json", "analyze", "--curve", "y^2-x^3", "--point", "1/2,-1"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["point"] == nlohmann::json{"1/2", "-1"});

    r = run({"analyze", "--curve", "y^2-x^3", "--trace"});
    CHECK(contains(r.out, "tjurina trace: alpha_1 = 1"));
  }

  TEST_CASE("exit codes") {
    CHECK(run({"analyze", "--curve", "x^-2", "--point", "0,0"}).code == kExitUsage);
    CHECK(run({"analyze", "--curve", "x^2", "--point", "0"}).code == kExitUsage);
    CHECK(run({"analyze", "--curve", "x^2", "--point", "a,b"}).code == kExitUsage);
    CHECK(run({"analyze"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);

    const Run nonisolated = run({"analyze", "--curve", "y^2*(x-1)", "--point", "0,0"});
    CHECK(nonisolated.code == kExitAnalysis);
    CHECK(contains(nonisolated.err, "not reduced"));

    CHECK(run({"classify", "--curve", "y^2-x^3", "--point", "1,0"}).code == kExitNotOnCurve);
    CHECK(run({"classify", "--curve", "y^2", "--point", "0,0"}).code == kExitAnalysis);
    CHECK(run({"global-tjurina", "--curve", "x0^2+x1"}).code == kExitUsage);
    CHECK(run({"global-tjurina", "--curve", "x^2"}).code == kExitUsage);
    CHECK(run({"family", "--a", "9", "--b", "4", "--c", "5"}).code == kExitUsage);
    CHECK(run({"family", "--a", "9"}).code == kExitUsage);
    CHECK(run({"--threads", "-3", "family", "--a", "9", "--scan"}).code == kExitUsage);
  }

  TEST_CASE("classify command") {
    CHECK(run({"classify", "--curve", "y^2-x^3"}).out == "A_2\n");
    CHECK(run({"classify", "--curve", "y^2-x^4", "--point", "0,0"}).out == "A_3\n");
    CHECK(run({"classify", "--curve", "x^5-y^5"}).out == "multiplicity >= 3 (m = 5)\n");
    CHECK(contains(run({"classify", "--curve", "y-x^2"}).out, "simple point, tangent: y = 0"));
    // Cuspidal cubic: cusp at [1:0:0], which is not in the chart x2 = 1.
    Run r = run({"classify", "--projective", "--curve", "x1^2*x0-x2^3", "--point", "1,0,0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "A_2\n");
    r = run({"classify", "--projective", "--curve", "x1^2*x0-x2^2*(x2+x0)", "--point", "2,0,0"});
    CHECK(r.out == "A_1\n");
    r = run({"classify", "--projective", "--curve", "x0^3-x1^3+x0*x1*x2", "--point", "0,0,5"});
    CHECK(r.out == "A_1\n");
    CHECK(run({"classify", "--projective", "--curve", "x0^2+x1", "--point", "0,0,1"}).code == kExitUsage);
    CHECK(run({"classify", "--projective", "--curve", "x0*x1", "--point", "0,0,0"}).code == kExitUsage);
    CHECK(run({"classify", "--projective", "--curve", "x0*x1-x2^2", "--point", "1,1,0"}).code == kExitNotOnCurve);
  }

  TEST_CASE("global-tjurina command") {
    CHECK(run({"global-tjurina", "--curve", "x1^5-x2^5"}).out == "16\n");
    CHECK(run({"global-tjurina", "--curve", "x0*x2-x1^2"}).out == "0\n");
    CHECK(run({"global-tjurina", "--curve", "x1^2*x0-x2^2*(x2+x0)"}).out == "1\n");
    const Run traced = run({"global-tjurina", "--curve", "x1^5-x2^5", "--trace"});
    CHECK(contains(traced.out, "hilbert function: 1 3 6 10 13 15 16"));
    const nlohmann::json j = nlohmann::json::parse(run({"--json", "global-tjurina", "--curve", "x1^3-x2^3"}).out);
    CHECK(j["global_tjurina"] == 4);
    // The node of the cubic is also found by the local analysis.
    CHECK(contains(run({"analyze", "--curve", "y^2-x^2*(x+1)"}).out, "tjurina: 1"));
  }

  TEST_CASE("family command") {
    Run r = run({"family", "--a", "9", "--b", "7", "--c", "3", "--verify-gb"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "case: B1"));
    CHECK(contains(r.out, "tau formula: 57"));
    CHECK(contains(r.out, "tau live: 57"));
    CHECK(contains(r.out, "gb match: yes"));

    r = run({"family", "--a", "3", "--b", "2", "--c", "2"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "tau live: 4"));

    r = run({"family", "--a", "9", "--scan"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "min tau = 55"));
    CHECK(contains(r.out, "mismatches: 0"));

    const nlohmann::json j = nlohmann::json::parse(run({"--json", "family", "--a", "9", "--b", "3", "--c", "7"}).out);
    CHECK(j["b"] == 7);
    CHECK(j["tau_live"] == 57);
  }

  TEST_CASE("scan output is deterministic across runs and thread counts") {
    const Run one = run({"--threads", "1", "family", "--scan", "--a-max", "8", "--verify-gb"});
    const Run again = run({"--threads", "1", "family", "--scan", "--a-max", "8", "--verify-gb"});
    const Run four = run({"--threads", "4", "family", "--scan", "--a-max", "8", "--verify-gb"});
    CHECK(one.code == kExitOk);
    CHECK(one.out == again.out);
    CHECK(one.out == four.out);
  }

  TEST_CASE("curves file batch mode keeps input order") {
    const std::string path = "tjurina_cli_test_curves.txt";
    {
      std::ofstream f(path);
      f << "# test batch\n\ny^2-x^3\n  x^5-y^5  # ordinary\n\ny^2-x^6\nx^-2\n";
    }
    const Run r = run({"--threads", "3", "--json", "analyze", "--curves-file", path});
    std::remove(path.c_str());
    CHECK(r.code == kExitUsage);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 4);
    CHECK(j[0]["tjurina"] == 2);
    CHECK(j[1]["tjurina"] == 16);
    CHECK(j[2]["tjurina"] == 5);
    CHECK(j[3].is_null());
    CHECK(contains(r.err, "syntax error at offset 2"));
    CHECK(run({"analyze", "--curves-file", "/nonexistent/curves.txt"}).code == kExitUsage);
  }
}
