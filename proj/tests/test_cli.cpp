#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ekr/cache.hpp"
#include "ekr/generators.hpp"
#include "ekr/report_json.hpp"
#include "run_tool.hpp"

using ekr::Json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ekr-lab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

Json parse(const tool::Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("ekr command") {
  const auto ladder = tool::run("ekr ladder:4 -r 3");
  CHECK(ladder.code == 0);
  CHECK(parse(ladder)["is_ekr"] == true);
  CHECK(parse(ladder)["spec"] == "ladder:4");

  const auto e4 = tool::run("ekr empty:4 -r 2");
  CHECK(e4.code == 0);
  CHECK(parse(e4)["max_family_size"] == 3);

  CHECK(tool::run("ekr bogus: -r 1").code == 1);
  CHECK(tool::run("ekr kn:3").code == 1);  // -r is required
  CHECK(tool::run("ekr kn:3 -r 0").code == 1);

  const auto claw = tool::run("ekr tree:0-1,0-2,0-3 -r 2");
  CHECK(claw.code == 2);
  CHECK(parse(claw)["is_ekr"] == false);

  const auto starved = tool::run("ekr empty:13 -r 4 --budget 1");
  CHECK(starved.code == 3);
  CHECK(parse(starved)["exact"] == false);

  const auto strict = tool::run("ekr empty:6 -r 3 --strict");
  CHECK(strict.code == 0);
  CHECK(parse(strict)["is_strict"] == false);
}

TEST_CASE("query commands") {
  const auto mu = tool::run("mu ladder:7");
  CHECK(mu.code == 0);
  CHECK(parse(mu)["mu"] == 4);

  const auto chordal = tool::run("chordal cycle:4");
  CHECK(chordal.code == 0);
  CHECK(parse(chordal)["chordal"] == false);
  CHECK(parse(tool::run("chordal mnd:1,2,2,3"))["chordal"] == true);

  const auto stars = tool::run("stars chain:3,4,5 -r 2");
  CHECK(stars.code == 0);
  const Json rows = parse(stars)["stars"];
  REQUIRE(rows.size() == 10);
  CHECK(rows[0]["center"].get<std::string>().rfind("G1:", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1]["size"] >= rows[i]["size"]);

  CHECK(parse(tool::run("alpha chain:3,4,5"))["alpha"] == 3);
  const auto maxfam = tool::run("maxfam ladder:3 -r 3");
  CHECK(maxfam.code == 0);
  CHECK(parse(maxfam)["max_family_size"] == 1);

  const auto edges = tool::run("edges path:3");
  CHECK(edges.code == 0);
  CHECK(edges.out == "3 2\n0 1\n1 2\n");

  const auto table = tool::run("mu ladder:7 --format table");
  CHECK(table.out.find("mu: 4") != std::string::npos);
  CHECK(tool::run("mu ladder:7 --format xml").code == 1);
}

TEST_CASE("scan command") {
  const auto leaf = tool::run("scan leaf-star --n 8 --r 4");
  CHECK(leaf.code == 0);
  CHECK(parse(leaf)["violation_count"] == 0);

  const auto sort = tool::run("scan degree-sort --n 10 --r 5");
  CHECK(sort.code == 0);
  CHECK(parse(sort)["violation_count"] > 0);
  CHECK(parse(sort)["unexpected"] == 0);

  const auto grid = tool::run("scan gtk-grid --tmax 8");
  CHECK(grid.code == 0);
  CHECK(parse(grid)["violation_count"] == 0);

  CHECK(tool::run("scan nonsense").code == 1);
  CHECK(tool::run("scan leaf-star --source sideways").code == 1);

  const auto minmax = tool::run("scan minmax 'union(kn:3;empty:1)' ladder:4");
  CHECK(minmax.code == 0);
  CHECK(parse(minmax)["violation_count"] == 0);
  CHECK(tool::run("scan minmax empty:13 --budget 1").code == 3);
}

TEST_CASE("scan outputs") {
  TempDir dir;
  const fs::path out = dir.path / "scan.json";
  const auto r = tool::run("scan degree-sort --n 9 --r 5 --emit-dir " + (dir.path / "emit").string() + " --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const Json j = Json::parse(in);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path / "emit")) ++files;
  CHECK(files > 0);
  CHECK(files <= j["violation_count"].get<std::size_t>());

  const fs::path corpus = dir.path / "corpus.txt";
  std::ofstream(corpus) << "# comment\nladder:3\n\nunion(kn:3;empty:1)\n";
  const auto c = tool::run("scan minmax --corpus " + corpus.string());
  CHECK(c.code == 0);
  CHECK(parse(c)["checked"] == 2);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"ekr ladder:5 -r 3 --strict", "maxfam 'union(chain:3,3;empty:1)' -r 2",
                           "scan degree-sort --n 9 --r 5", "scan leaf-star --n 8 --r 4 --source prufer",
                           "stars spider2:4 -r 3"}) {
    INFO(args);
    const auto first = tool::run(args);
    CHECK(tool::run(args).out == first.out);
    CHECK(tool::run(std::string(args) + " --jobs 4").out == first.out);
  }
  CHECK(tool::run("ekr ladder:4 -r 3 --timing").out.find("millis") != std::string::npos);
  CHECK(tool::run("ekr ladder:4 -r 3").out.find("millis") == std::string::npos);
}

TEST_CASE("cache") {
  TempDir dir;
  const std::string cache = " --cache " + dir.path.string();
  for (const char* args : {"ekr ladder:5 -r 3", "ekr empty:6 -r 3 --strict", "maxfam gtk:4,2 -r 3"}) {
    INFO(args);
    const auto plain = tool::run(args);
    const auto miss = tool::run(args + cache);
    const auto hit = tool::run(args + cache);
    CHECK(miss.out == plain.out);
    CHECK(hit.out == plain.out);
    CHECK(hit.code == plain.code);
  }
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++entries;
  CHECK(entries == 3);

  TempDir env_dir;
  const auto env = tool::run("ekr ladder:4 -r 3", "EKRLAB_CACHE=" + env_dir.path.string());
  CHECK(env.code == 0);
  CHECK_FALSE(fs::is_empty(env_dir.path));
}

TEST_CASE("cache store and load") {
  TempDir dir;
  const ekr::ResultCache cache(dir.path);
  const ekr::Graph g = ekr::make_path(4);
  const std::string key = ekr::cache_key(g, 2, "ekr", "");
  CHECK_FALSE(cache.load(key).has_value());
  const Json value = {{"a", 1}, {"b", Json::array({"0x3"})}};
  cache.store(key, value);
  REQUIRE(cache.load(key).has_value());
  CHECK(cache.load(key)->dump() == value.dump());

  CHECK(key != ekr::cache_key(g, 3, "ekr", ""));
  CHECK(key != ekr::cache_key(g, 2, "maxfam", ""));
  CHECK(key != ekr::cache_key(g, 2, "ekr", "strict"));
  CHECK(key != ekr::cache_key(g.relabeled({"a", "b", "c", "d"}), 2, "ekr", ""));

  // Entries from another solver version or with corrupt content are misses.
  for (const auto& e : fs::directory_iterator(dir.path)) {
    std::ifstream in(e.path());
    Json entry = Json::parse(in);
    in.close();
    entry["solver_version"] = "other";
    std::ofstream(e.path()) << entry.dump();
  }
  CHECK_FALSE(cache.load(key).has_value());
  for (const auto& e : fs::directory_iterator(dir.path)) std::ofstream(e.path()) << "{not json";
  CHECK_FALSE(cache.load(key).has_value());
}

TEST_CASE("table rendering") {
  const Json j = {{"scan", "x"}, {"violations", Json::array({Json{{"spec", "kn:3"}, {"r", 2}}})}, {"list", Json::array({1, 2})}};
  const std::string t = ekr::render_table(j);
  CHECK(t.find("scan: x") != std::string::npos);
  CHECK(t.find("violations:") != std::string::npos);
  CHECK(t.find("kn:3") != std::string::npos);
  CHECK(t.find("list: 1 2") != std::string::npos);
}
