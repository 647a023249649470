#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bigindec/certificate.hpp"
#include "bigindec/cli.hpp"
#include "bigindec/workspace.hpp"

using namespace bigindec;
namespace fs = std::filesystem;

namespace {

const std::string kData = BIGINDEC_TEST_DATA;

std::string data(const char* name) { return kData + "/" + name; }

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bigindec");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const char* name) {
  fs::path dir = fs::temp_directory_path() / "bigindec_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

const char* kCone = R"(ring A { char 32003; vars x y z; weights 1 1 1; ideal x*y - z^2; }
module M over A { degrees 0 0; relations { x*e1 + z*e2; z*e1 + y*e2 } }
prime P in A { x, z }
config { nmax 10; seed 7; }
)";

}  // namespace

TEST_CASE("workspace parsing") {
  auto spec = parse_spec(kCone);
  REQUIRE(spec.rings.size() == 1);
  CHECK(spec.ring("A")->krull_dim() == 2);
  CHECK(spec.module("M").module.num_generators() == 2);
  CHECK(spec.module("M").module.relations().col_degrees() == std::vector<std::int32_t>{1, 1});
  CHECK(spec.primes.size() == 1);
  CHECK(spec.config.n_max == 10);
  CHECK(spec.config.seed == 7);
  CHECK(parse_spec(kCone, 101).ring("A")->field().characteristic() == 101);

  // parse . print . parse = parse
  auto again = parse_spec(print_spec(spec));
  CHECK(print_spec(again) == print_spec(spec));

  auto error_of = [](const char* text) {
    try {
      parse_spec(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Input);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("ring A { char 32003; vars x y; weights 1 1; }\nmodule N over A { degrees 0; relations { x*e1 + y^2*e1 } }")
            .find("line 2, column") == 0);
  CHECK(error_of("ring A { char 32003; vars x y; weights 1 1; }\nmodule N over A { degrees 0; relations { x*e1 + y^2*e1 } }")
            .find("homogeneity") != std::string::npos);
  CHECK(error_of("ring A { char 15; vars x; weights 1; }").find("not a prime") != std::string::npos);
  CHECK(error_of("ring A { char 7; vars x e1; weights 1 1; }").find("line 1") == 0);
  CHECK(error_of("module N over Z { degrees 0; relations { } }").find("unknown ring") != std::string::npos);
  CHECK(error_of("ring A { char 7; vars x; weights 1; ").find("line 1") == 0);
  CHECK(error_of("ring A { char 7; vars x; weights 1; } @").find("column 39") != std::string::npos);
}

TEST_CASE("analysis subcommands") {
  auto r = cli({"check", data("a1_cone.bi")});
  CHECK(r.code == 0);
  CHECK(r.out.find("module M over A: 2 generators") != std::string::npos);
  r = cli({"resolve", data("a1_cone.bi"), "-m", "M", "-l", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F4: rank 2") != std::string::npos);
  r = cli({"ext", data("plane.bi"), "-m", "Max", "-n", "5"});
  CHECK(r.out.find("= 1\n") != std::string::npos);
  r = cli({"ext", data("plane.bi"), "-m", "K", "-n", "3", "-i", "2"});
  CHECK(r.out.find("= 1\n") != std::string::npos);
  auto csv = scratch("ext.csv");
  r = cli({"hilbert-ext", data("a1_cone.bi"), "-m", "M", "--n-max", "5", "--csv", csv.string()});
  CHECK(r.code == 0);
  CHECK(slurp(csv) == "n,length,nu_R\n1,2,2\n2,4,4\n3,6,6\n4,8,8\n5,10,10\n");
  CHECK(r.out.find("degree 1 from n = 1") != std::string::npos);
  CHECK(cli({"depth", data("a1_cone.bi"), "-m", "K"}).out == "depth K = 0\n");
  CHECK(cli({"depth", data("plane.bi"), "-m", "Max"}).out == "depth Max = 1\n");
  CHECK(cli({"rank", data("a1_cone.bi"), "-m", "M"}).out == "punctured rank 1\n");
  CHECK(cli({"rank", data("a1_cone.bi"), "-m", "M", "-t", "2"}).code == 1);
  CHECK(cli({"rank", data("a1_cone.bi"), "-m", "K"}).code == 0);
  r = cli({"seed", data("a1_cone.bi")});
  CHECK(r.code == 0);
  CHECK(r.out.find("module Seed over A") != std::string::npos);
  r = cli({"seed", data("plane.bi")});
  CHECK(r.err.find("warning: seed is free") != std::string::npos);
  r = cli({"decompose", data("a1_cone.bi"), "-m", "MM"});
  CHECK(r.out.find("# 2 indecomposable") == 0);
  // the printed summands parse back as a workspace
  auto printed = parse_spec(std::string("ring A { char 32003; vars x y z; weights 1 1 1; ideal x*y - z^2; }\n") +
                            r.out.substr(r.out.find('\n') + 1));
  CHECK(printed.modules.size() == 2);
}

TEST_CASE("construct and verify") {
  auto c1 = scratch("c1.json"), c2 = scratch("c2.json"), bad = scratch("bad.json");
  auto r = cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2", "-o", c1.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("VALID") == 0);
  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2", "-o", c2.string()}).code == 0);
  CHECK(slurp(c1) == slurp(c2));
  CHECK(slurp(c1).find("timings") == std::string::npos);
  CHECK(cli({"verify", c1.string()}).code == 0);

  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2", "--timings", "-o", c2.string()}).code == 0);
  CHECK(slurp(c2).find("timings") != std::string::npos);
  CHECK(cli({"verify", c2.string()}).code == 0);

  auto cert = Json::parse(slurp(c1));
  cert["modules"]["X"]["relations"]["entries"][0][0] = "x + z";
  std::ofstream(bad) << cert.dump(2);
  r = cli({"verify", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("modules.X") != std::string::npos);

  r = cli({"construct", data("a1_cone.bi"), "-m", "FreeModule", "-r", "2", "-o", c2.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("Ext^1 vanishes") != std::string::npos);
}

TEST_CASE("error paths and exit codes") {
  auto r = cli({"check", data("bad_homogeneity.bi")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 11, column 12") != std::string::npos);
  CHECK(cli({"check", data("bad_syntax.bi")}).code == 2);
  CHECK(cli({"check", data("bad_char.bi")}).code == 2);
  CHECK(cli({"check", data("bad_name.bi")}).code == 2);
  CHECK(cli({"check", data("bad_generator.bi")}).code == 2);
  CHECK(cli({"check", data("missing.bi")}).code == 2);
  CHECK(cli({"depth", data("plane.bi"), "-m", "Nope"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2"}).code == 2);
  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "MM", "-r", "2", "-o", scratch("x.json").string()}).code == 2);
  r = cli({"construct", data("a1_cone.bi"), "-m", "K", "-r", "2", "-o", scratch("x.json").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("depth zero") != std::string::npos);
  r = cli({"construct", data("plane.bi"), "-m", "Max", "-r", "2", "--n-max", "4", "-o", scratch("x.json").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("search exhausted") != std::string::npos);

  auto junk = scratch("junk.json");
  std::ofstream(junk) << "{ not json";
  CHECK(cli({"verify", junk.string()}).code == 2);
  auto empty = scratch("empty.json");
  std::ofstream(empty) << "{}";
  r = cli({"verify", empty.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("format") != std::string::npos);
}

TEST_CASE("environment overrides") {
  setenv("BIGINDEC_PRIME", "101", 1);
  auto r = cli({"check", data("plane.bi")});
  CHECK(r.out.find("p = 101") != std::string::npos);
  setenv("BIGINDEC_PRIME", "100", 1);
  CHECK(cli({"check", data("plane.bi")}).code == 2);
  unsetenv("BIGINDEC_PRIME");

  auto c1 = scratch("seeded1.json"), c2 = scratch("seeded2.json");
  setenv("BIGINDEC_SEED", "99", 1);
  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2", "-o", c1.string()}).code == 0);
  unsetenv("BIGINDEC_SEED");
  CHECK(Json::parse(slurp(c1))["config"]["seed"] == 99);
  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2", "--seed", "5", "-o", c2.string()}).code == 0);
  CHECK(Json::parse(slurp(c2))["config"]["seed"] == 5);
  setenv("BIGINDEC_SEED", "abc", 1);
  CHECK(cli({"construct", data("a1_cone.bi"), "-m", "M", "-r", "2", "-o", c2.string()}).code == 2);
  unsetenv("BIGINDEC_SEED");
}
