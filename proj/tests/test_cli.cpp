#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "congnet/catalog.hpp"
#include "congnet/formats.hpp"

namespace fs = std::filesystem;
using congnet::cli::ExitCode;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = congnet::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  fs::path write_temp(std::string const& name, std::string const& text) {
    auto const dir = fs::temp_directory_path() / "congnet_cli_test";
    fs::create_directories(dir);
    auto const path = dir / name;
    std::ofstream(path) << text;
    return path;
  }

  std::string slurp(fs::path const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
}  // namespace

TEST_CASE("validate") {
  auto const b2 = run({"validate", "--catalog", "B2"});
  CHECK(b2.code == ExitCode::ok);
  CHECK(b2.out
        == "order=5 |E|=3 zero=yes clifford=no e_unitary=no e_reflexive=no "
           "fundamental=yes e_disjunctive=yes\n");

  auto const c2 = run({"validate", "--catalog", "C2"});
  CHECK(c2.code == ExitCode::ok);
  CHECK(c2.out.find("clifford=yes e_unitary=yes") != std::string::npos);

  auto const file = write_temp(
      "b2.isg1", congnet::emit_isg1(congnet::catalog_entry("B2").build()));
  auto const from_file = run({"validate", "--input", file.string()});
  CHECK(from_file.code == ExitCode::ok);
  CHECK(from_file.out == b2.out);

  auto const gens = write_temp("i2.pbj1", "2\n2 1\n1 -\n");
  auto const pbj =
      run({"validate", "--input", gens.string(), "--format", "pbj1"});
  CHECK(pbj.code == ExitCode::ok);
  CHECK(pbj.out.starts_with("order=7 "));
}

TEST_CASE("Exit codes") {
  auto const bad = write_temp("bad.isg1", "2\n0 1\n1\n");
  auto const parse = run({"validate", "--input", bad.string()});
  CHECK(parse.code == ExitCode::parse_error);
  CHECK(parse.err.find("line 3") != std::string::npos);

  auto const invalid = write_temp("invalid.isg1", "2\n0 0\n0 0\n");
  CHECK(run({"validate", "--input", invalid.string()}).code
        == ExitCode::validation_failed);

  CHECK(run({"network", "--catalog", "I2", "--max-level", "2"}).code
        == ExitCode::not_stabilized);
  CHECK(run({"lattice", "--catalog", "I3", "--cap", "10"}).code
        == ExitCode::lattice_too_large);
  CHECK(run({"verify", "--catalog", "Chain2", "--suites", "quotient"}).code
        == ExitCode::disagreement);
  CHECK(run({"frobnicate"}).code == ExitCode::usage_error);
  CHECK(run({"validate"}).code == ExitCode::usage_error);
  CHECK(run({"validate", "--catalog", "nope"}).code == ExitCode::usage_error);
  CHECK(run({"validate", "--input", "/nonexistent/file"}).code
        == ExitCode::usage_error);
}

TEST_CASE("network") {
  auto const b2 = run({"network", "--catalog", "B2"});
  CHECK(b2.code == ExitCode::ok);
  CHECK(b2.out.starts_with("order=5 stabilization_level=1\n"));
  CHECK(b2.out.find("1: alpha=0,0,0,0,0 beta=0,0,0,0,0 meet=0,0,0,0,0\n")
        != std::string::npos);

  auto const i2 = run({"network", "--catalog", "I2"});
  CHECK(i2.code == ExitCode::ok);
  CHECK(i2.out.find("stabilization_level=3") != std::string::npos);
  CHECK(i2.out.find("nu=0,1,2,1,1,1,1 classes=3\n") != std::string::npos);
  CHECK(i2.out == run({"network", "--catalog", "I2"}).out);

  auto const trivial = run({"network", "--catalog", "Trivial"});
  CHECK(trivial.out.starts_with("order=1 stabilization_level=1\n"));
}

TEST_CASE("lattice") {
  auto const b2 = run({"lattice", "--catalog", "B2"});
  CHECK(b2.code == ExitCode::ok);
  CHECK(b2.out
        == "order=5 congruences=2\n0: 0,1,2,3,4 classes=5\n"
           "1: 0,0,0,0,0 classes=1\ncovers 0 1\n");
  auto const one  = run({"lattice", "--catalog", "I2xC2", "--threads", "1"});
  auto const four = run({"lattice", "--catalog", "I2xC2", "--threads", "4"});
  CHECK(one.code == ExitCode::ok);
  CHECK(one.out == four.out);
}

TEST_CASE("verify") {
  auto const i2 =
      run({"verify", "--catalog", "I2", "--suites", "kercliff,boeu", "--n",
           "1..3"});
  CHECK(i2.code == ExitCode::ok);
  CHECK(i2.out.find("I2 kercliff 1 AllAgree 000000000000\n")
        != std::string::npos);
  std::istringstream lines(i2.out);
  int                count = 0;
  for (std::string line; std::getline(lines, line);) {
    ++count;
  }
  CHECK(count == 6);

  CHECK(run({"verify", "--catalog", "B2", "--suites", "minimality",
             "--family", "Aprime"})
            .code
        == ExitCode::ok);

  std::vector<std::string> all_catalog{"verify", "--suites", "coincidences"};
  for (auto const& entry : congnet::catalog()) {
    all_catalog.push_back("--catalog");
    all_catalog.push_back(entry.name);
  }
  CHECK(run(all_catalog).code == ExitCode::ok);

  auto const report = write_temp("report.txt", "");
  auto const r = run({"verify", "--catalog", "C2", "--suites", "boeu", "--n",
                      "1..1", "--report", report.string()});
  CHECK(r.code == ExitCode::ok);
  CHECK(slurp(report) == r.out);
  CHECK(r.out == "C2 boeu 1 AllAgree 11111111111\n");
}

TEST_CASE("catalog") {
  auto const list = run({"catalog", "list"});
  CHECK(list.code == ExitCode::ok);
  for (auto name : {"I2 ", "I3 ", "B2 ", "BC2_2 "}) {
    CHECK(list.out.find(std::string("\n") + name) != std::string::npos);
  }
  auto const emit = run({"catalog", "emit", "I2"});
  CHECK(emit.code == ExitCode::ok);
  std::istringstream in(emit.out);
  CHECK(congnet::parse_isg1(in).order() == 7);
  CHECK(run({"catalog", "emit", "nope"}).code == ExitCode::usage_error);
}

TEST_CASE("JSON output") {
  auto const v = nlohmann::json::parse(
      run({"validate", "--catalog", "B2", "--json"}).out);
  CHECK(v["order"] == 5);
  CHECK(v["zero"] == true);
  CHECK(v["clifford"] == false);

  auto const n = nlohmann::json::parse(
      run({"network", "--catalog", "I2", "--json"}).out);
  CHECK(n["stabilization_level"] == 3);
  CHECK(n["levels"].size() == 4);
  CHECK(n["levels"][2]["alpha"] == "0,1,2,1,1,1,1");

  auto const l = nlohmann::json::parse(
      run({"lattice", "--catalog", "B2", "--json"}).out);
  CHECK(l["congruences"].size() == 2);

  auto const r = nlohmann::json::parse(
      run({"verify", "--catalog", "I2", "--suites", "kercliff", "--n", "1..2",
           "--json"})
          .out);
  REQUIRE(r.is_array());
  CHECK(r.size() == 2);
  CHECK(r[0]["verdict"] == "AllAgree");
  CHECK(r[1]["n"] == 2);
  CHECK(r[0]["conditions"].size() == 12);
}
