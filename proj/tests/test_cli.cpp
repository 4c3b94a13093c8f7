#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "qcoalg/cli.hpp"

using testing_support::fixture;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.rfind("@", 0) == 0) a = fixture(a.substr(1));
  std::ostringstream out, err;
  int status = qcoalg::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("worked examples match their golden reports") {
  // Each line: <golden file> <command line>, fixtures written as @name.
  std::ifstream cases(std::string(QCOALG_GOLDEN_DIR) + "/cases.txt");
  REQUIRE(cases);
  std::size_t n = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto w = words(line);
    const std::string golden = w.front();
    w.erase(w.begin());
    CAPTURE(line);
    auto got = run_cli(w);
    CHECK(got.status == 0);
    CHECK(got.err.empty());
    CHECK(got.out == qcoalg::read_file(std::string(QCOALG_GOLDEN_DIR) + "/" + golden));
    ++n;
  }
  CHECK(n >= 8);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::string> args{"localize", "--coalgebra", "@h4.coalg", "--vertices",
                                "x,y", "--classify"};
  CHECK(run_cli(args).out == run_cli(args).out);
  std::vector<std::string> self{"selftest", "--seed", "5", "--trials", "5"};
  CHECK(run_cli(self).out == run_cli(self).out);
}

TEST_CASE("documented example commands") {
  auto loc = run_cli({"localize", "--coalgebra", "@diamond.coalg", "--vertices",
                      "x1,x3,x4", "--maxlen", "2"});
  CHECK(loc.status == 0);
  CHECK(loc.out.find("\"bar_a3\"") != std::string::npos);
  CHECK(loc.out.find("\"bar_a4\"") != std::string::npos);

  auto crit = run_cli({"criterion", "--coalgebra", "@h4.coalg", "--source", "x",
                       "--sink", "y", "--maxlen", "2"});
  CHECK(crit.status == 0);
  CHECK(crit.out.find("\"size\": 3") != std::string::npos);

  auto dual = run_cli({"dualize", "--quiver", "@ladder.q", "--relations", "@all-ge2.rel",
                       "--maxlen", "4"});
  CHECK(dual.status == 0);
  CHECK(dual.out.find("\"round_trip_exact\": true") != std::string::npos);
}

TEST_CASE("dualize writes a file that reads back") {
  const std::string out =
      (std::filesystem::temp_directory_path() / "qcoalg_dualized_ladder.coalg").string();
  auto fwd = run_cli({"dualize", "--quiver", "@ladder.q", "--relations", "@all-ge2.rel",
                      "--output", out});
  REQUIRE(fwd.status == 0);
  auto back = run_cli({"dualize", "--coalgebra", out});
  CHECK(back.status == 0);
  CHECK(back.out.find("\"round_trip_exact\": true") != std::string::npos);
  CHECK(back.out.find("\"dimension\": 25") != std::string::npos);
}

TEST_CASE("text output") {
  auto r = run_cli({"--format", "text", "classify", "--coalgebra", "@path3.coalg",
                    "--vertices", "1,3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("split              true") != std::string::npos);
}

TEST_CASE("exit status 1 for domain errors") {
  auto r = run_cli({"localize", "--coalgebra", "@diamond.coalg", "--vertices", "x1,q9"});
  CHECK(r.status == 1);
  CHECK(r.err.find("localization") != std::string::npos);

  auto missing = run_cli({"paths", "--quiver", "/nonexistent.q", "--source", "a",
                          "--target", "b"});
  CHECK(missing.status == 1);
  CHECK(missing.err.find("cli") != std::string::npos);

  auto cap = run_cli({"comodule", "section", "--coalgebra", "@diamond.coalg", "--module",
                      "@diamond_local.comod", "--vertices", "x1,x3,x4", "--cap", "3"});
  CHECK(cap.status == 1);
  CHECK(cap.err.find("comodules") != std::string::npos);
}

TEST_CASE("exit status 2 for parse and usage errors") {
  auto bad = run_cli({"delta", "--quiver", "@diamond.q", "--element", "a1 + a7"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("column 6:") != std::string::npos);

  auto broken = run_cli({"comodule", "validate", "--coalgebra", "@diamond.coalg",
                         "--module", "@diamond.q"});
  CHECK(broken.status == 2);
  CHECK(broken.err.find("2:1") != std::string::npos);

  CHECK(run_cli({"localize", "--coalgebra", "@diamond.coalg"}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({}).status == 2);
}

TEST_CASE("invalid comodules are reported by validate and rejected elsewhere") {
  auto v = run_cli({"comodule", "validate", "--coalgebra", "@diamond.coalg", "--module",
                    "@broken.comod"});
  CHECK(v.status == 0);
  CHECK(v.out.find("\"valid\": false") != std::string::npos);
  auto l = run_cli({"comodule", "length", "--coalgebra", "@diamond.coalg", "--module",
                    "@broken.comod"});
  CHECK(l.status == 1);
  CHECK(l.err.find("comodules") != std::string::npos);

  auto larger = run_cli({"comodule", "validate", "--coalgebra", "@diamond_full.coalg",
                         "--module", "@diamond.comod"});
  CHECK(larger.out.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("roundtrip subcommand") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"roundtrip", "--quiver", "@ladder.q"},
        std::vector<std::string>{"roundtrip", "--coalgebra", "@h4.coalg"},
        std::vector<std::string>{"roundtrip", "--quiver", "@ladder.q", "--relations",
                                 "@all-ge2.rel"},
        std::vector<std::string>{"roundtrip", "--coalgebra", "@diamond.coalg",
                                 "--module", "@diamond.comod"}}) {
    auto r = run_cli(args);
    CAPTURE(args[1]);
    CHECK(r.status == 0);
    CHECK(r.out.find("\"identical\": true") != std::string::npos);
  }
}
