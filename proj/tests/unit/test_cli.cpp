#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "grext/cli/cli.hpp"
#include "grext/cli/problem.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace grext;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(GREXT_FIXTURE_DIR) + "/" + name + ".json"; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/grext_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("fixtures equal the embedded presets") {
    for (const auto& name : problem_preset_names()) {
      CHECK_MESSAGE(parse_problem(slurp(fixture(name))) == parse_problem(problem_preset(name)), name);
    }
  }

  TEST_CASE("schema errors point at the offending field") {
    auto witness = [](const std::string& text) {
      try {
        parse_problem(text);
      } catch (const Error& e) {
        return e.name() + " " + e.witness();
      }
      return std::string("ok");
    };
    const std::string good = problem_preset("lsqrt2");
    CHECK(witness(good) == "ok");
    auto doc = json::parse(good);
    doc["field"]["min_poly"] = {-2, 0, 2};
    CHECK(witness(doc.dump()).rfind("SchemaError /field/min_poly", 0) == 0);
    doc = json::parse(good);
    doc["field"]["root_interval"] = {"2", "1"};
    CHECK(witness(doc.dump()).rfind("SchemaError /field/root_interval", 0) == 0);
    doc = json::parse(good);
    doc["extra"] = 1;
    CHECK(witness(doc.dump()).rfind("SchemaError", 0) == 0);
    CHECK(witness("{ not json").rfind("ParseError", 0) == 0);
  }

  TEST_CASE("problem documents round-trip") {
    for (const auto& name : problem_preset_names()) {
      auto doc = parse_problem(problem_preset(name));
      CHECK(parse_problem(problem_to_json(doc)) == doc);
      CHECK(problem_to_json(parse_problem(problem_to_json(doc))) == problem_to_json(doc));
    }
  }

  TEST_CASE("report echo re-parses to the same document") {
    auto r = call({"aut-rho", "-i", fixture("lsqrt2")});
    REQUIRE(r.code == 0);
    auto report = json::parse(r.out);
    CHECK(parse_problem(report["inputs"]["problem"].dump()) == parse_problem(problem_preset("lsqrt2")));
    CHECK(report["results"]["name"] == "Z_2 x Z");
    CHECK(report["results"]["generators"] == json::array({"-1", "1+θ"}));
    CHECK(report["version"] == kVersion);
  }

  TEST_CASE("pell report") {
    auto r = call({"pell", "--d", "2"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out)["results"];
    CHECK(j["x"] == 1);
    CHECK(j["y"] == 1);
    CHECK(j["norm"] == -1);
    auto big = json::parse(call({"pell", "--d", "61"}).out)["results"];
    CHECK(big["x"] == 29718);
    auto huge = json::parse(call({"pell", "--d", "1000099"}).out)["results"];
    CHECK(huge["x"].is_string());
  }

  TEST_CASE("exit codes") {
    CHECK(call({"pell", "--d", "4"}).code == 2);
    CHECK(call({"pell"}).code == 2);
    CHECK(call({"aut-rho", "-i", "/nonexistent.json"}).code == 2);
    CHECK(call({"aut-rho", "-i", "preset:nope"}).code == 2);
    CHECK(call({"classify", "-i", "preset:lsqrt2", "-n", "preset:circle", "--mode", "weak"}).code == 2);
    CHECK(call({"carriere", "--matrix", "1,2,3"}).code == 2);
    CHECK(call({"carriere", "-i", "preset:lsqrt2"}).code == 2);
    CHECK(call({"nerve", "--group", "S3", "--action", "spin"}).code == 2);
    CHECK(call({"--format", "xml", "pell", "--d", "2"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    auto bad = write_temp("bad.json", "{\"field\": 3}");
    auto r = call({"aut-rho", "-i", bad});
    CHECK(r.code == 2);
    auto err = json::parse(r.out)["error"];
    CHECK(err["name"] == "SchemaError");
    CHECK(err["class"] == "input");
    CHECK(r.err.find("SchemaError") != std::string::npos);
  }

  TEST_CASE("nerve documents") {
    auto path = write_temp("square.json",
                           R"({"name": "square", "vertices": [0,1,2,3], "edges": [[0,1],[1,2],[2,3],[0,3]],
                               "triangles": [], "basepoint": 0})");
    auto r = call({"nerve", "-n", path});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out)["results"];
    CHECK(j["pi1_abelianization"] == "Z");
    auto holes = write_temp("holes.json", R"({"name": "x", "vertices": [0,1,2], "edges": [[0,1],[1,2]],
                                               "triangles": [[0,1,2]], "basepoint": 0})");
    auto bad = call({"nerve", "-n", holes});
    CHECK(bad.code == 2);
    CHECK(json::parse(bad.out)["error"]["name"] == "MissingEdgeOfTriangle");
  }

  TEST_CASE("reports are byte-identical across runs and thread counts") {
    const std::vector<std::vector<std::string>> commands = {
        {"aut-rho", "-i", "preset:lsqrt2"},
        {"classify", "-i", "preset:lsqrt2", "-n", "preset:torus", "--mode", "iso", "--quotient", "2"},
        {"homotopy", "-i", "preset:lsqrt2", "--g", "R", "--max", "5"},
        {"postnikov", "-i", "preset:lsqrt2", "--g", "R"},
        {"verify", "-i", "preset:lsqrt2", "--samples", "300", "--seed", "7"},
        {"carriere", "-i", "preset:carriere-211", "--word", "A V1 A^-1"},
        {"nerve", "--group", "S3"},
    };
    for (const auto& c : commands) {
      auto a = call(c);
      auto with_threads = c;
      with_threads.insert(with_threads.begin(), {"--threads", "3"});
      auto b = call(with_threads);
      auto text = c;
      text.insert(text.begin(), {"--format", "text"});
      CHECK_MESSAGE(a.code == 0, c[0]);
      CHECK_MESSAGE(a.out == call(c).out, c[0]);
      CHECK_MESSAGE(a.out == b.out, c[0]);
      CHECK(call(text).out == call(text).out);
    }
  }

  TEST_CASE("budget override from the environment") {
    setenv("GREXT_BUDGET", "10", 1);
    auto r = call({"classify", "-i", "preset:lsqrt2", "-n", "preset:torus", "--quotient", "3"});
    unsetenv("GREXT_BUDGET");
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["error"]["name"] == "SpecTooLarge");
  }

  TEST_CASE("the installed binary honours the exit-code contract") {
    auto status = [](const std::string& args) {
      int s = std::system((std::string(GREXT_BIN) + " " + args + " >/dev/null 2>&1").c_str());
      return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("pell --d 2") == 0);
    CHECK(status("pell --d 9") == 2);
    CHECK(status("frobnicate") == 2);
    CHECK(status("--version") == 0);
  }
}
