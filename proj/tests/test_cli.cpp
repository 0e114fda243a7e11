#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = PERMQUBO_CLI_PATH;

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path tmp_dir() {
  static fs::path d = [] {
    fs::path p = fs::temp_directory_path() / "permqubo_cli_test";
    fs::create_directories(p);
    return p;
  }();
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("build writes a canonical instance") {
  fs::path f = tmp_dir() / "p4.json";
  RunResult r = run("build perm --n 4 -o " + f.string());
  REQUIRE(r.rc == 0);
  json j = json::parse(slurp(f));
  CHECK(j["meta"]["construction"] == "perm");
  CHECK(j["meta"]["n"] == 4);
  CHECK(j["meta"]["topology"] == "batcher");
  CHECK(j["gates"].size() == 5);  // batcher at n=4
}

TEST_CASE("verify a small perm instance") {
  fs::path f = tmp_dir() / "p3.json";
  REQUIRE(run("build perm --n 3 -o " + f.string()).rc == 0);
  RunResult r = run("verify " + f.string());
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["solutions"] == 6);
}

TEST_CASE("derangement count at n 6") {
  fs::path f = tmp_dir() / "d6.json";
  REQUIRE(run("build perm --n 6 --constraint derangement -o " + f.string()).rc == 0);
  RunResult r = run("verify " + f.string());
  CHECK(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["solutions"] == 265);
}

TEST_CASE("stats report") {
  fs::path f = tmp_dir() / "m8.json";
  REQUIRE(run("build matrix --n 8 -o " + f.string()).rc == 0);
  RunResult r = run("stats " + f.string());
  REQUIRE(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["variables"] == 64);
  CHECK(j["max_degree"] == 14);
  CHECK(j["expected"]["variables_delta"] == 0);
  CHECK(j["expected"]["max_degree_delta"] == 0);
}

TEST_CASE("perm stats match the closed form") {
  fs::path f = tmp_dir() / "p5.json";
  REQUIRE(run("build perm --n 5 --network oet -o " + f.string()).rc == 0);
  RunResult r = run("stats " + f.string());
  REQUIRE(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["expected"]["auxiliaries_delta"] == 0);
}

TEST_CASE("sampling is reproducible") {
  fs::path f = tmp_dir() / "p3s.json";
  fs::path s1 = tmp_dir() / "s1.json";
  fs::path s2 = tmp_dir() / "s2.json";
  REQUIRE(run("build perm --n 3 -o " + f.string()).rc == 0);
  REQUIRE(run("sample " + f.string() + " --reads 8 --seed 5 -o " + s1.string()).rc == 0);
  REQUIRE(run("sample " + f.string() + " --reads 8 --seed 5 -o " + s2.string()).rc == 0);
  CHECK(slurp(s1) == slurp(s2));
  json j = json::parse(slurp(s1));
  CHECK(j["samples"].size() == 8);
}

TEST_CASE("export formats") {
  fs::path f = tmp_dir() / "p3e.json";
  REQUIRE(run("build perm --n 3 -o " + f.string()).rc == 0);
  RunResult q = run("export " + f.string() + " --format qubo");
  CHECK(q.rc == 0);
  CHECK(q.out.find("p qubo 0") != std::string::npos);
  RunResult i = run("export " + f.string() + " --format ising");
  CHECK(i.rc == 0);
  CHECK(i.out.find("offset") != std::string::npos);
  CHECK(run("export " + f.string() + " --format foo").rc == 2);
}

TEST_CASE("error codes") {
  CHECK(run("nonsense").rc == 2);
  CHECK(run("build perm").rc == 2);  // missing --n
  CHECK(run("build perm --n 4 --constraint bogus:1").rc == 2);
  fs::path bad = tmp_dir() / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run("verify " + bad.string()).rc == 2);
}

TEST_CASE("tampered instances are rejected") {
  fs::path f = tmp_dir() / "pt.json";
  REQUIRE(run("build perm --n 3 -o " + f.string()).rc == 0);
  json j = json::parse(slurp(f));
  j["offset"] = j["offset"].get<long long>() + 1;
  std::ofstream(f) << j.dump(2);
  CHECK(run("verify " + f.string()).rc == 1);
}

TEST_CASE("enumeration cap trips exit code 3") {
  fs::path f = tmp_dir() / "p8.json";
  REQUIRE(run("build perm --n 8 -o " + f.string()).rc == 0);
  CHECK(run("verify " + f.string() + " --mode free").rc == 3);
}
