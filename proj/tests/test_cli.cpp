#include "catch_amalgamated.hpp"

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = spanlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "spanlab_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("gen writes the structure") {
  const auto path = scratch_dir() / "g.json";
  const auto r = run({"gen", "--kind", "c4e", "--n", "8", "--out", path.string()});
  REQUIRE(r.code == 0);
  const auto text = slurp(path);
  CHECK(text.find("\"n\":8") != std::string::npos);
  // 12 edges, each written as [u,v]
  std::size_t pairs = 0;
  for (std::size_t i = text.find("[["); i != std::string::npos; i = text.find('[', i + 1)) ++pairs;
  CHECK(pairs - 1 == 12);
}

TEST_CASE("enumerate prints the count") {
  auto r = run({"enumerate", "--kind", "krs", "--r", "4", "--s", "2", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "315\n");
  r = run({"enumerate", "--kind", "krs", "--r", "4", "--s", "2", "--n", "8", "--check"});
  CHECK(r.code == 0);
  // K6 has one copy, the closed form claims 15
  r = run({"enumerate", "--kind", "krs", "--r", "4", "--s", "2", "--n", "6", "--check"});
  CHECK(r.out == "1\n");
  CHECK(r.code == 1);
}

TEST_CASE("density segment claim") {
  const auto r = run({"density", "--claim", "segment", "--r", "4", "--n", "32"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"violations\": []") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "--kind", "c4e"}).code == 2);
  CHECK(run({"enumerate", "--kind", "c4e", "--n", "7"}).code == 2);
  CHECK(run({"pipeline", "--kind", "c4e", "--n", "8", "--q", "0.5"}).code == 2);
  CHECK(run({"spread", "--kind", "c4e", "--n", "8", "--q", "x/3", "--seed", "1"}).code == 2);
  CHECK(run({"density", "--claim", "bogus", "--n", "8"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("threshold") != std::string::npos);
}

TEST_CASE("budget errors name the required budget") {
  const auto r = run({"enumerate", "--kind", "c4e", "--n", "8", "--budget", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("840") != std::string::npos);
}

TEST_CASE("randomized runs are byte-identical and carry their config") {
  const auto dir = scratch_dir();
  const std::vector<std::string> base{"pipeline", "--kind", "c4e", "--n", "8", "--q", "1/2", "--seed", "5",
                                      "--runs", "3"};
  auto a = base;
  a.insert(a.end(), {"--out", (dir / "a.jsonl").string()});
  auto b = base;
  b.insert(b.end(), {"--out", (dir / "b.jsonl").string(), "--workers", "2"});
  REQUIRE(run(a).code == 0);
  REQUIRE(run(b).code == 0);
  const auto ta = slurp(dir / "a.jsonl");
  CHECK(ta == slurp(dir / "b.jsonl"));
  CHECK(ta.find("\"seed\":\"5\"") != std::string::npos);

  const std::vector<std::string> th{"threshold", "--kind", "c4e", "--n", "8", "--grid", "0.4,0.7", "--trials", "20",
                                    "--seed", "3"};
  const auto t1 = run(th);
  const auto t2 = run(th);
  CHECK(t1.code == 0);
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("# seed=3") != std::string::npos);
}

TEST_CASE("other subcommands run") {
  CHECK(run({"spread", "--kind", "c4e", "--n", "8", "--c", "250", "--exponent", "-2/3", "--seed", "1", "--samples",
             "500"})
            .code == 0);
  CHECK(run({"spread", "--kind", "c4e", "--n", "8", "--q", "0.3", "--seed", "1", "--samples", "500"}).code == 1);
  CHECK(run({"fragment", "--kind", "c4e", "--n", "8", "--report", "bad-pairs", "--w", "14", "--k", "6", "--trials",
             "20", "--seed", "1"})
            .code == 0);
  CHECK(run({"fragment", "--kind", "c4e", "--n", "8", "--report", "profile"}).code == 0);
  CHECK(run({"fragment", "--kind", "c4e", "--n", "8", "--report", "claim", "--w-prime", "8", "--k", "3", "--seed",
             "2", "--trials", "20"})
            .code == 0);
}
