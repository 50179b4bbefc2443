#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "steiner4/classifier.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "steiner4");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = steiner4::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("steiner4_test_" + name);
}

}  // namespace

TEST_CASE("orbits with oracle") {
  const auto r = run({"orbits", "--q", "11", "--subgroup", "A5", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "12:1\nAGREE\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const auto r = run({"orbits", "--q", "11", "--subgroup", "a5", "--frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("frobnicate") != std::string::npos);
  CHECK(run({"orbits", "--q", "12", "--subgroup", "a5"}).code == 2);
  CHECK(run({"orbits", "--q", "13", "--subgroup", "a5"}).code == 2);
  CHECK(run({"witt", "--v", "13"}).code == 2);
  CHECK(run({"scan", "--family", "nope"}).code == 2);
  CHECK(run({"verify-design", "--file", "/nonexistent/design.txt"}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("witt emit and verify-design") {
  const auto path = temp_path("w23.txt");
  auto r = run({"witt", "--v", "23", "--emit", path.string()});
  CHECK(r.code == 0);
  r = run({"verify-design", "--file", path.string(), "--t", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::string s = text.str();
  // swap one point of the first block for another to break the design
  const auto bad = temp_path("w23_bad.txt");
  const auto nl = s.find('\n');
  const auto line_end = s.find('\n', nl + 1);
  std::istringstream first(s.substr(nl + 1, line_end - nl - 1));
  std::vector<int> block;
  for (int x; first >> x;) block.push_back(x);
  int replacement = 0;
  while (std::find(block.begin(), block.end(), replacement) != block.end()) ++replacement;
  block.back() = replacement;
  std::sort(block.begin(), block.end());
  std::string line;
  for (std::size_t i = 0; i < block.size(); ++i) line += (i ? " " : "") + std::to_string(block[i]);
  std::ofstream(bad) << s.substr(0, nl + 1) << line << s.substr(line_end);
  r = run({"verify-design", "--file", bad.string(), "--t", "4"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST_CASE("witt verify") {
  const auto r = run({"witt", "--v", "23", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("flag orbit: 1771 of 1771") != std::string::npos);
}

TEST_CASE("scan families") {
  auto r = run({"scan", "--family", "sz", "--max-e", "6"});
  CHECK(r.code == 0);
  const auto j = steiner4::classify::Json::parse(r.out);
  CHECK(j.size() == 6);
  for (const auto& e : j) CHECK(e["verdict"] == "EliminatedMechanized");

  const auto path = temp_path("psl2.json");
  r = run({"scan", "--family", "psl2", "--max-q", "120", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(path));
  CHECK(r.out.find("survivors: 0") != std::string::npos);
  std::filesystem::remove(path);

  r = run({"scan", "--family", "mathieu"});
  CHECK(r.code == 0);
}

TEST_CASE("classify with reduced limits matches") {
  const auto r = run({"classify", "--max-q", "50", "--max-v", "2000", "--max-e", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("survivor: M11 4-(11,5,1)") != std::string::npos);
  CHECK(r.out.find("survivor: M23 4-(23,7,1)") != std::string::npos);
}
