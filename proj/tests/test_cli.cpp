#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "glinv/cli.hpp"
#include "glinv/form_io.hpp"
#include "glinv/generators.hpp"
#include "glinv/perm.hpp"

using namespace glinv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("glinv_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("gen") {
  CHECK(run({"gen", "--n", "2", "tau:1"}).out == "x[1,1] + x[2,2]\n");
  CHECK(run({"gen", "--n", "2", "omega:0"}).out == "dx[1,1] + dx[2,2]\n");
  CHECK(run({"gen", "--n", "2", "omega:0,0"}).out == "0\n");
  auto structured = run({"gen", "--n", "1", "tau:2", "--format", "structured"});
  CHECK(nlohmann::json::parse(structured.out) == to_json(tau(2, 1)));
  auto bad = run({"gen", "--n", "2", "omega:1,x"});
  CHECK(bad.code == kExitInvalidInput);
  CHECK(bad.err.find("'x'") != std::string::npos);
  CHECK(run({"gen", "--n", "2", "sigma:1"}).code == kExitInvalidInput);
  CHECK(run({"gen", "--n", "9", "tau:1"}).code == kExitInvalidInput);
}

TEST_CASE("perm") {
  auto f = run({"perm", "--n", "2", "--p", "2", "--q", "1", "2 3 1", "--mode", "factor",
                "--format", "structured"});
  CHECK(f.code == kExitOk);
  auto j = nlohmann::json::parse(f.out);
  CHECK(j.at("sign") == 1);
  CHECK(j.at("factors") == nlohmann::json::parse(R"(["omega:2"])"));
  CHECK(j.at("count") == 1);

  auto id = run({"perm", "--n", "2", "--p", "2", "--q", "0", "1 2", "--mode", "factor"});
  CHECK(id.out == "sign: +1\nfactors: tau:1 tau:1\ncount: 2\nzero: false\n");

  CHECK(run({"perm", "--n", "2", "--p", "0", "--q", "2", "2 1", "--mode", "evaluate"}).out == "0\n");
  CHECK(run({"perm", "--n", "2", "--p", "2", "--q", "1", "2 3 1"}).out ==
        to_text(omega(std::vector<int>{2}, 2)) + "\n");
  CHECK(run({"perm", "--n", "2", "--p", "1", "--q", "1", "2 2"}).code == kExitInvalidInput);
  CHECK(run({"perm", "--n", "2", "--p", "1", "--q", "1", "1 2 3"}).code == kExitInvalidInput);
  CHECK(run({"perm", "--n", "2", "--p", "1", "--q", "1", "1 2", "--mode", "x"}).code ==
        kExitInvalidInput);
}

TEST_CASE("perm factor count equals the cycle count") {
  for (const auto& rho : enumerate_symmetric_group(4)) {
    auto r = run({"perm", "--n", "2", "--p", "2", "--q", "2", to_string(rho), "--mode", "factor",
                  "--format", "structured"});
    REQUIRE(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out).at("count") == cycle_decomposition(rho).size());
  }
}

TEST_CASE("dim") {
  auto both = run({"dim", "--n", "2", "--p", "2", "--q", "0", "--method", "both", "--format",
                   "structured"});
  CHECK(nlohmann::json::parse(both.out) == nlohmann::json::parse(R"({"span":2,"kernel":2,"equal":true})"));
  CHECK(run({"dim", "--n", "1", "--p", "2", "--q", "0", "--method", "span"}).out == "span: 1\n");
  CHECK(run({"dim", "--n", "2", "--p", "0", "--q", "3", "--method", "both"}).out ==
        "span: 1\nkernel: 1\nequal: true\n");
  auto capped = run({"dim", "--n", "2", "--p", "5", "--q", "5"});
  CHECK(capped.code == kExitInvalidInput);
  CHECK(capped.err.find("degree cap") != std::string::npos);
}

TEST_CASE("decompose") {
  auto sigma2 = temp_file("sigma2.txt", to_text(sigma(2, 2)));
  CHECK(run({"decompose", sigma2, "--n", "2"}).out == "tau:1*tau:1: 1/2\ntau:2: -1/2\n");

  auto x11 = temp_file("x11.txt", "x[1,1]");
  auto r = run({"decompose", x11, "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "non-invariant: witness E[1,2]\n");

  auto zero = temp_file("zero.txt", "0");
  CHECK(run({"decompose", zero, "--n", "2"}).out == "1: 0\n");
  CHECK(run({"decompose", zero, "--n", "2", "--p", "2"}).out == "tau:1*tau:1: 0\ntau:2: 0\n");

  auto structured = temp_file("sigma2.json", to_json(sigma(2, 2)).dump());
  auto j = nlohmann::json::parse(run({"decompose", structured, "--format", "structured"}).out);
  CHECK(j.at("coefficients")[0].at("c") == "1/2");
  CHECK(j.at("coefficients")[1].at("c") == "-1/2");

  auto mixed = temp_file("mixed.txt", "x[1,1] + dx[1,1]");
  CHECK(run({"decompose", mixed, "--n", "2"}).code == kExitInvalidInput);
  auto garbage = temp_file("garbage.txt", "x[1,1] +* 2");
  CHECK(run({"decompose", garbage, "--n", "2"}).code == kExitInvalidInput);
  CHECK(run({"decompose", "/nonexistent/form", "--n", "2"}).code == kExitInvalidInput);
}

TEST_CASE("gen output decomposes onto its own label") {
  // Independent families only: with dependencies the earlier products win.
  for (const char* label : {"tau:1", "tau:2", "omega:0", "omega:1", "omega:0,1", "omega:0,0,0",
                            "omega:0,0,1", "omega:2"}) {
    auto gen = run({"gen", "--n", "3", label});
    auto file = temp_file("roundtrip.txt", gen.out);
    auto dec = run({"decompose", file, "--n", "3"});
    REQUIRE(dec.code == kExitOk);
    std::istringstream lines(dec.out);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
      auto colon = line.rfind(": ");
      std::string name = line.substr(0, colon);
      std::string coeff = line.substr(colon + 2);
      CHECK(coeff == (name == label ? "1" : "0"));
      found = found || name == label;
    }
    CHECK(found);
  }
}

TEST_CASE("check-invariance") {
  auto t = temp_file("tau2.txt", to_text(tau(2, 2)));
  CHECK(run({"check-invariance", t, "--n", "2"}).out ==
        "invariant: true\nconjugation 1: fixed\nconjugation 2: fixed\n");
  auto x = temp_file("x12.txt", "x[1,2]");
  auto r = run({"check-invariance", x, "--n", "2"});
  CHECK(r.out.find("invariant: false") == 0);
  auto g = temp_file("g.json", R"({"n":2,"rows":[["2","1"],["1/3","5"]]})");
  CHECK(run({"check-invariance", t, "--n", "2", "--g", g}).out ==
        "invariant: true\nconjugation 1: fixed\n");
  auto singular = temp_file("gs.json", R"({"n":2,"rows":[["1","1"],["1","1"]]})");
  CHECK(run({"check-invariance", t, "--n", "2", "--g", singular}).code == kExitInvalidInput);
}

TEST_CASE("newton") {
  CHECK(run({"newton", "--k", "2", "--n", "3"}).out == "0\n");
  CHECK(run({"newton", "--k", "4", "--n", "3"}).code == kExitInvalidInput);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--n", "1", "--max", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("n=1 p=1 q=1 generators=1 schurweyl=1 kernel=1 pass") != std::string::npos);
  CHECK(r.out.find("all 10 cells pass") != std::string::npos);
  auto capped = run({"verify", "--n", "2", "--max", "99"});
  CHECK(capped.code == kExitInvalidInput);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(run({"verify", "--n", "2", "--max", "2"}).out == run({"verify", "--n", "2", "--max", "2"}).out);
  CHECK(run({"verify", "--n", "1", "--max", "1", "--caps", "degree=0"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"--help"}).code == kExitOk);
}
