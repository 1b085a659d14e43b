#include <sstream>

#include "doctest.h"
#include "moonshine/cli.hpp"

using namespace moonshine;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("corr examples") {
    CHECK(run({"corr", "--type", "B", "--rank", "1", "--level", "symbolic", "--insertions", "L(e1,e1);L(e1,e1)",
               "--method", "closed"})
              .out == "(1/2*r) * (z1-z2)^-4\n");
    CHECK(run({"corr", "--type", "A", "--rank", "1", "--level", "1", "--insertions", "L(e1,e1*);L(e1,e1*)", "--method",
               "direct"})
              .out == "(1/4) * (z1-z2)^-4\n");
    const Result empty = run({"corr", "--type", "C", "--insertions", ""});
    CHECK(empty.code == cli::kOk);
    CHECK(empty.out == "1\n");
  }

  TEST_CASE("corr with several methods") {
    const Result all = run({"corr", "--level", "2", "--insertions", "L(e1,e1) L(e1,e1) L(e1,e1)", "--method", "all"});
    CHECK(all.code == cli::kOk);
    CHECK(all.out.find("recursion: ") != std::string::npos);
    CHECK(all.out.find("direct: ") != std::string::npos);
    CHECK(all.out.find("agreement: true\n") != std::string::npos);

    const Result fault = run({"corr", "--insertions", "L(e1,e1);L(e1,e1)", "--method", "recursion,closed", "--inject-fault"});
    CHECK(fault.code == cli::kVerification);
    CHECK(fault.out.find("agreement: false") != std::string::npos);
    CHECK(fault.err.find("disagreement: recursion vs closed") != std::string::npos);

    CHECK(run({"corr", "--insertions", "L(e1,e1)", "--method", "direct"}).code == cli::kUsage);
    CHECK(run({"corr", "--level", "1/2", "--insertions", "L(e1,e1)", "--method", "direct"}).code == cli::kUsage);
  }

  TEST_CASE("malformed input exits with a usage error") {
    CHECK(run({"corr", "--type", "D"}).code == cli::kUsage);
    CHECK(run({"corr", "--insertions", "L(e1,e1"}).code == cli::kUsage);
    CHECK(run({"corr", "--insertions", "L(e1,e9)"}).code == cli::kUsage);
    CHECK(run({"corr", "--insertions", "L(e1,e1;2,1)"}).code == cli::kUsage);
    CHECK(run({"corr", "--type", "A", "--insertions", "L(e1*,e1)"}).code == cli::kUsage);
    CHECK(run({"corr", "--method", "guess"}).code == cli::kUsage);
    CHECK(run({"corr", "--job", "/nonexistent/job.json"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"jordan", "--type", "B"}).code == cli::kUsage);
    CHECK(run({"cocycle", "L(e1,e1)"}).code == cli::kUsage);
  }

  TEST_CASE("json output round-trips") {
    const Result j = run({"corr", "--rank", "2", "--insertions", "L(e1,e2);L(e1,e2);L(e1,e1);L(e2,e2)", "--method",
                          "closed,recursion", "--format", "json"});
    REQUIRE(j.code == cli::kOk);
    std::istringstream lines(j.out);
    std::string line;
    const InsertionList t = cli::parse_insertions(JordanType::B, 2, "L(e1,e2);L(e1,e2);L(e1,e1);L(e2,e2)");
    const CorrFn expected = corr_closed_form(t);
    int count = 0;
    while (std::getline(lines, line)) {
      const auto obj = nlohmann::json::parse(line);
      CHECK(obj["agreement"] == true);
      CHECK(corr_eq(corr_from_json(obj), expected));
      ++count;
    }
    CHECK(count == 2);
  }

  TEST_CASE("job specs") {
    cli::JobSpec job;
    job.jtype = JordanType::C;
    job.rank = 2;
    job.level = Rational(3);
    job.insertions = {"L(f1,f3)", "L(f1,f3)"};
    job.methods = {Method::closed, Method::direct};
    job.seed = 9;
    const cli::JobSpec back = cli::job_from_json(cli::job_to_json(job));
    CHECK(cli::job_to_json(back) == cli::job_to_json(job));
    std::ostringstream a, b, err;
    CHECK(cli::run_corr(job, a, err) == cli::kOk);
    CHECK(cli::run_corr(back, b, err) == cli::kOk);
    CHECK(a.str() == b.str());
    CHECK_THROWS(cli::job_from_json(nlohmann::json{{"rank", 1}}));
  }

  TEST_CASE("pair specs") {
    const auto specs = cli::parse_pair_specs("L(e1,(1/2)e1+(1/3)e2); L(e2,e2;2,1)");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].b == "(1/2)e1+(1/3)e2");
    CHECK(specs[1].m == 2);
    CHECK(specs[1].n == 1);
    CHECK_THROWS_AS(cli::parse_pair_specs("M(e1,e1)"), std::invalid_argument);
  }

  TEST_CASE("bracket, cocycle, jordan and diagrams") {
    CHECK(run({"cocycle", "--type", "B", "--rank", "1", "L(e1,e1;1,1)", "L(e1,e1;1,1)"}).out == "1/12\n");
    CHECK(run({"diagrams", "--type", "B", "--n", "3", "--count"}).out == "8\n");
    CHECK(run({"jordan", "--type", "B", "--rank", "2", "--trace", "L(e1,e2) L(e1,e2)"}).out == "2\n");
    CHECK(run({"jordan", "--type", "B", "--rank", "2", "--product", "L(e1,e2) L(e1,e2)"}).out == "[[1, 0], [0, 1]]\n");
    CHECK(run({"diagrams", "--type", "A", "--n", "2"}).out == "{a1-b2*, b1*-a2}  c=1\n");

    const Result br = run({"bracket", "--type", "B", "--rank", "1", "L(e1,e1)", "L(e1,e1)"});
    CHECK(br.code == cli::kOk);
    CHECK(br.out.find("(3) 1/2*r\n") != std::string::npos);
    CHECK(br.out.find("(2) ") == std::string::npos);
  }

  TEST_CASE("check") {
    const Result ok = run({"check", "--max-n", "2", "--types", "B"});
    CHECK(ok.code == cli::kOk);
    const auto report = nlohmann::json::parse(ok.out);
    CHECK(report["pass"] == true);
    CHECK(report["failures"].empty());

    const Result bad = run({"check", "--max-n", "2", "--types", "B", "--ranks", "1", "--inject-fault"});
    CHECK(bad.code == cli::kVerification);
    CHECK(nlohmann::json::parse(bad.out)["pass"] == false);
    CHECK(bad.err.rfind("FAIL B d=1 n=2", 0) == 0);
    CHECK(bad.err.find("closed") != std::string::npos);
  }

  TEST_CASE("bench") {
    const Result a = run({"bench", "--max-n", "4", "--seed", "3"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out.rfind("engine,n,type,millis,terms\n", 0) == 0);
    CHECK(a.out.find("diagrams,3,B,") != std::string::npos);

    // timings vary, term counts do not
    auto terms = [](const std::string& csv) {
      std::vector<std::string> out;
      std::istringstream in(csv);
      std::string line;
      while (std::getline(in, line)) {
        const auto first = line.find(','), last = line.rfind(',');
        out.push_back(line.substr(0, line.find(',', line.find(',', first + 1) + 1)) + line.substr(last));
      }
      return out;
    };
    CHECK(terms(a.out) == terms(run({"bench", "--max-n", "4", "--seed", "3"}).out));
    CHECK(run({"bench", "--max-n", "12"}).code == cli::kUsage);
  }

  TEST_CASE("determinism") {
    const std::vector<std::string> args{"corr", "--type", "C", "--rank", "2", "--insertions",
                                        "L(f1,f3);L(f2,f4);L(f1,f4);L(f2,f3)", "--method", "all", "--level", "2"};
    CHECK(run(args).out == run(args).out);
  }

  TEST_CASE("golden corpus") {
    const Result r = run({"selftest", "--corpus", MOONSHINE_TEST_CORPUS});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"selftest", "--corpus", "/nonexistent"}).code == cli::kUsage);
  }
}
