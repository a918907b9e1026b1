#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "helpers.hpp"
#include "sring/io.hpp"

using namespace sring;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("sring_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

Json last_json(const std::string& out) {
  std::istringstream in(out);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return Json::parse(last);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("repro t2 reports a nonschurian ring") {
    const Run r = run({"repro", "t2", "--p", "3"});
    CHECK(r.code == 0);
    const Json j = last_json(r.out);
    CHECK(j["schurian"] == false);
    CHECK(j["matches"] == true);
    CHECK(j["rank"] == 13);
    CHECK(run({"repro", "t2", "--p", "3", "--expect-schurian"}).code == 1);
    CHECK(run({"repro", "t9"}).code == 2);
    CHECK(run({"repro", "t2", "--p", "4"}).code == 2);
  }

  TEST_CASE("enumerate writes one line per S-ring") {
    TempDir dir;
    const std::string out = dir.path("e4.jsonl");
    const Run r = run({"enumerate", "--group", "2x2", "--out", out});
    CHECK(r.code == 0);
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    std::istringstream lines(buf.str());
    int count = 0;
    for (std::string line; std::getline(lines, line);) count += !line.empty();
    CHECK(count == 5);
    CHECK(last_json(r.out)["count"] == 5);
    std::istringstream again(buf.str());
    CHECK(read_catalog(again).entries.size() == 5);
    const Run direct = run({"enumerate", "--group", "2x2"});
    CHECK(direct.out == buf.str());
    CHECK(run({"enumerate", "--group", "2x2", "--threads", "3"}).out == buf.str());
  }

  TEST_CASE("validate rejects a non-inverse-closed partition") {
    TempDir dir;
    const std::string bad =
        dir.write("bad.json", R"({"group": "4", "classes": [["0"], ["1"], ["2", "3"]]})");
    const Run r = run({"validate", "--group", "4", "--partition", bad});
    CHECK(r.code == 2);
    CHECK(last_json(r.out)["error"] == "NotInverseClosed");
    CHECK(r.err.find("NotInverseClosed") != std::string::npos);
    const std::string good =
        dir.write("good.json", R"({"group": "4", "classes": [["0"], ["1", "3"], ["2"]]})");
    const Run ok = run({"validate", "--group", "4", "--partition", good});
    CHECK(ok.code == 0);
    CHECK(last_json(ok.out)["rank"] == 3);
    CHECK(run({"validate", "--group", "8", "--partition", good}).code == 2);
  }

  TEST_CASE("input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate", "--group", "2x"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"validate", "--partition", "/nonexistent.json"}).code == 2);
    CHECK(run({"enumerate", "--group", "4", "--threads", "0"}).code == 2);
  }

  TEST_CASE("decision verbs") {
    TempDir dir;
    const std::string c8 = dir.write(
        "c8.json", R"({"group": "8", "classes": [["0"], ["1", "3", "5", "7"], ["2", "6"], ["4"]]})");
    Run r = run({"aut", "--partition", c8});
    CHECK(r.code == 0);
    const auto st = oracle::aut_stabilizer(oracle::Group({8}), {{0}, {1, 3, 5, 7}, {2, 6}, {4}});
    CHECK(last_json(r.out)["aut_order"] == std::to_string(st.stabilizer_order * 8));
    r = run({"schurian", "--partition", c8, "--expect-schurian"});
    CHECK(r.code == 0);
    CHECK(last_json(r.out)["schurian"] == true);
    r = run({"cyclotomic", "--partition", c8});
    CHECK(last_json(r.out)["cyclotomic"] == true);
    r = run({"normal", "--partition", c8});
    CHECK(r.code == 0);
    CHECK(last_json(r.out).contains("normal"));
    r = run({"dual", "--partition", c8});
    CHECK(last_json(r.out)["classes"].size() == 4);
    r = run({"closure", "--partition",
             dir.write("p.json", R"({"group": "4", "classes": [["0"], ["1", "2"], ["3"]]})")});
    CHECK(last_json(r.out)["classes"].size() == 4);
  }

  TEST_CASE("constructions") {
    TempDir dir;
    const std::string c2 = dir.write("c2.json", R"({"group": "2", "classes": [["0"], ["1"]]})");
    const std::string c3 = dir.write("c3.json", R"({"group": "3", "classes": [["0"], ["1", "2"]]})");
    Run r = run({"tensor", "--partition", c2, "--partition", c3});
    CHECK(r.code == 0);
    CHECK(last_json(r.out)["group"] == "2x3");
    CHECK(last_json(r.out)["classes"].size() == 4);
    CHECK(run({"tensor", "--partition", c2}).code == 2);
    const std::string spec = dir.write("w.json", R"({"group": "8", "upper": ["2"], "lower": ["4"],
      "bottom": [["0"], ["2", "6"], ["4"]], "top": [["0", "4"], ["2", "6"], ["1", "3", "5", "7"]]})");
    r = run({"gwreath", "--partition", spec});
    CHECK(r.code == 0);
    CHECK(last_json(r.out)["classes"].size() == 4);
    const std::string e4c3 = dir.write(
        "t.json",
        R"({"group": "2x2x3", "classes": [["0,0,0"], ["0,0,1", "0,0,2"], ["0,1,0", "1,0,0", "1,1,0"], ["0,1,1", "0,1,2", "1,0,1", "1,0,2", "1,1,1", "1,1,2"]]})");
    r = run({"classify", "--partition", e4c3});
    CHECK(r.code == 0);
    CHECK_FALSE(last_json(r.out)["tags"].empty());
  }

  TEST_CASE("output is deterministic") {
    const Run a = run({"repro", "t3", "--p", "5"});
    const Run b = run({"repro", "t3", "--p", "5"});
    CHECK(a.out == b.out);
    CHECK(last_json(a.out)["matches"] == true);
  }
}
