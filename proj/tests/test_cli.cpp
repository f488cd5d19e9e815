#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "parityseq/cli.hpp"

using namespace parityseq;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const fs::path kFixtures = PARITYSEQ_FIXTURE_DIR;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("parityseq_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string corrupted_a061297(const fs::path& dir) {
  const auto p = dir / "b061297.txt";
  write(p, "0 1\n1 2\n2 4\n3 8\n4 15\n5 32\n6 39\n7 114\n8 166\n9 266\n10 421\n11 1608\n");
  return p.string();
}

}  // namespace

TEST_CASE("gen") {
  CHECK(run({"gen", "A061297", "--from", "0", "--count", "5"}).out == "1\n2\n4\n8\n14\n");
  CHECK(run({"gen", "A010060", "--from", "0", "--count", "4"}).out == "0\n1\n1\n0\n");
  CHECK(run({"gen", "A061297", "--count", "3", "--format", "bfile"}).out == "0 1\n1 2\n2 4\n");
  CHECK(run({"gen", "A092524", "--from", "11", "--count", "1"}).out == "1343\n");

  const auto j = run({"gen", "m", "--count", "8", "--format", "json"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["id"] == "m");
  CHECK(doc["values"] == nlohmann::json({"1", "0", "0", "0", "0", "0", "1", "0"}));
}

TEST_CASE("gen usage errors") {
  CHECK(run({"gen", "A999999"}).code == kExitUsage);
  CHECK(run({"gen", "A128975", "--from", "0"}).code == kExitUsage);
  CHECK(run({"gen", "A128975", "--count", "0"}).code == kExitUsage);
  CHECK(run({"gen", "A128975", "--format", "xml"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("parity") {
  const auto r = run({"parity", "A061297", "--count", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n0\n0\n0\n0\n0\n1\n");
}

TEST_CASE("verify") {
  const auto all = run({"verify", "all", "--format", "json"});
  CHECK(all.code == kExitOk);
  const auto doc = nlohmann::json::parse(all.out);
  CHECK(doc["records"].size() == 10);
  CHECK(doc["metadata"]["n_max_cheap"] == 4096);
  CHECK(doc["metadata"]["n_max_heavy"] == 512);
  for (const auto& rec : doc["records"]) CHECK_FALSE(rec["fitted"].is_null());

  const auto wicked = run({"verify", "A102393", "--n-max", "4096"});
  CHECK(wicked.code == kExitOk);
  CHECK(wicked.out.find("claimed: PASS") != std::string::npos);

  const auto shifted = run({"verify", "A092524"});
  CHECK(shifted.code == kExitOk);
  CHECK(shifted.out.find("claimed: FAIL, fitted: shift=-1") != std::string::npos);

  CHECK(run({"verify", "A010060", "--n-max", "64"}).code == kExitFailure);
  CHECK(run({"verify", "A999999"}).code == kExitUsage);
  CHECK(run({"verify", "all", "--format", "bfile"}).code == kExitUsage);
  CHECK(run({"verify", "all", "--n-max", "10"}).code == kExitUsage);
}

TEST_CASE("offline runs are byte-identical") {
  CHECK(run({"verify", "all", "--format", "json"}).out == run({"verify", "all", "--format", "json"}).out);
  CHECK(run({"verify", "all"}).out == run({"verify", "all"}).out);
  CHECK(run({"gen", "A104258", "--count", "100"}).out == run({"gen", "A104258", "--count", "100"}).out);
}

TEST_CASE("check-bfile") {
  TempDir tmp("check");
  const auto a128975 = run({"check-bfile", "A128975", (kFixtures / "b128975.txt").string(), "--limit", "17"});
  CHECK(a128975.code == kExitOk);

  const auto bad = run({"check-bfile", "A061297", corrupted_a061297(tmp.path), "--limit", "12"});
  CHECK(bad.code == kExitFailure);
  CHECK(bad.out == "4 expected 15 got 14\n");

  CHECK(run({"check-bfile", "A999999", "fetch", "--limit", "10"}).code == kExitUsage);
  CHECK(run({"check-bfile", "A061297", (tmp.path / "missing.txt").string()}).code == kExitUsage);

  write(tmp.path / "junk.txt", "0 1\n1 x\n");
  CHECK(run({"check-bfile", "A061297", (tmp.path / "junk.txt").string()}).code == kExitUsage);

  write(tmp.path / "shifted.txt", "1 1\n2 2\n");
  CHECK(run({"check-bfile", "A061297", (tmp.path / "shifted.txt").string()}).code == kExitFailure);
}

TEST_CASE("cache directory: flag beats environment") {
  TempDir env_dir("env");
  TempDir flag_dir("flag");
  corrupted_a061297(env_dir.path);
  ::setenv("PARITYSEQ_CACHE_DIR", env_dir.path.c_str(), 1);
  CHECK(run({"check-bfile", "A061297", "fetch"}).code == kExitFailure);
  CHECK(run({"check-bfile", "A061297", "fetch", "--cache-dir", flag_dir.path.string()}).code == kExitOk);
  CHECK(run({"--cache-dir", flag_dir.path.string(), "fetch-bfile", "A061297"}).out.rfind("0 1\n1 2\n", 0) == 0);
  ::unsetenv("PARITYSEQ_CACHE_DIR");
}

TEST_CASE("fetch-bfile") {
  TempDir tmp("fetch");
  const auto ok = run({"fetch-bfile", "A128975", "--cache-dir", tmp.path.string()});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.rfind("1 0\n2 0\n", 0) == 0);
  CHECK(run({"fetch-bfile", "A000000", "--cache-dir", tmp.path.string(), "--offline"}).code == kExitUsage);
  CHECK(run({"fetch-bfile", "m", "--cache-dir", tmp.path.string()}).code == kExitUsage);
}

TEST_CASE("installed binary honours the exit-status contract") {
  const std::string bin = PARITYSEQ_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  TempDir tmp("e2e");
  CHECK(status("gen A061297 --count 5") == 0);
  CHECK(status("gen A999999") == 2);
  CHECK(status("verify all") == 0);
  CHECK(status("verify A010060 --n-max 64") == 1);
  CHECK(status("check-bfile A128975 " + (kFixtures / "b128975.txt").string() + " --limit 17") == 0);
  CHECK(status("check-bfile A061297 " + corrupted_a061297(tmp.path) + " --limit 12") == 1);
  CHECK(status("check-bfile A999999 fetch --limit 10") == 2);
}
