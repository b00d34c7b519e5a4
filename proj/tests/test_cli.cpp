#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hsqm/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hsqm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hsqm::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("uncertainty row") {
  const Result r = run({"uncertainty", "--theta", "0.5"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] == "quantity,value");
  CHECK(ls[1] == "(ΔX)²,0.25");
}

TEST_CASE("spectrum shows Landau degeneracy") {
  const Result r = run({"spectrum", "--theta", "0", "--omega0", "0", "--N", "6"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 37);
  CHECK(ls[0] == "n_plus,n_minus,E");
  // Rows for n_plus = 2 share one energy.
  const std::string e = ls[13].substr(ls[13].rfind(',') + 1);
  for (int k = 13; k < 19; ++k) CHECK(ls[k].substr(ls[k].rfind(',') + 1) == e);
}

TEST_CASE("kms residual column") {
  const Result r = run({"kms", "--N", "10", "--beta", "1"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  for (std::size_t k = 1; k < ls.size(); ++k) CHECK(ls[k].substr(ls[k].rfind(',') + 1) == "true");
}

TEST_CASE("passing residual subcommands") {
  for (std::string sub : {"modular", "commutant", "husimi"}) {
    const Result r = run({sub, "--N", "8"});
    CHECK_MESSAGE(r.code == 0, sub);
  }
  // e^{z zbar'} needs enough retained levels for the 1e-12 contract.
  CHECK(run({"kernel", "--N", "32"}).code == 0);
  CHECK(run({"kernel", "--N", "8"}).code == 1);
  CHECK(run({"wigner", "--N", "12"}).code == 0);
}

TEST_CASE("resolution reports the B2 identity contracts as violated") {
  const Result r = run({"resolution", "--N", "8"});
  CHECK(r.code == 1);
  CHECK(r.out.find("hiho,") != std::string::npos);
  CHECK(r.out.find("hiho_right_rho,") != std::string::npos);
}

TEST_CASE("json mirrors csv") {
  const Result r = run({"uncertainty", "--theta", "0.5", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 8);
  CHECK(j[0]["quantity"] == "(ΔX)²");
  CHECK(j[0]["value"].get<double>() == 0.25);
}

TEST_CASE("output is deterministic and honours --out") {
  const Result a = run({"kernel", "--N", "32"});
  const Result b = run({"kernel", "--N", "32"});
  CHECK(a.out == b.out);
  const std::string path = "cli_test_out.csv";
  const Result c = run({"kernel", "--N", "32", "--out", path});
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::remove(path.c_str());
}

TEST_CASE("invalid configurations exit 2 with one JSON line") {
  for (std::vector<std::string> args : {std::vector<std::string>{"spectrum", "--N", "3"},
                                        {"wigner", "--radial-nodes", "10"},
                                        {"bogus"},
                                        {"spectrum", "--theta", "5"},
                                        {"spectrum", "--format", "xml"},
                                        {"husimi", "--theta", "0", "--omega0", "0"}}) {
    const Result r = run(args);
    CHECK(r.code == 2);
    const auto ls = lines(r.err);
    REQUIRE(ls.size() == 1);
    const auto j = nlohmann::json::parse(ls[0]);
    CHECK(j.contains("error"));
    CHECK(r.out.empty());
  }
  CHECK(run({"wigner", "--N", "4", "--radial-nodes", "4", "--angular-nodes", "9", "--allow-small"}).code == 0);
}
