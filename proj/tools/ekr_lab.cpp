// ekr-lab: command-line front end for the EKR library.
//
// Exit codes: 0 pass, 1 input error, 2 property fails, 3 inexact (budget).

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "ekr/cache.hpp"
#include "ekr/chordal.hpp"
#include "ekr/ekr.hpp"
#include "ekr/graph_spec.hpp"
#include "ekr/independence.hpp"
#include "ekr/lab.hpp"
#include "ekr/report_json.hpp"

namespace {

using ekr::Json;

enum Exit { kPass = 0, kInput = 1, kFails = 2, kInexact = 3 };

struct Common {
  unsigned r = 0;
  std::uint64_t budget = 50'000'000;
  unsigned jobs = 1;
  std::string cache_dir;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct Emitter {
  const Common& c;
  void operator()(const Json& j) const {
    const std::string text = c.format == "table" ? ekr::render_table(j) : j.dump(2) + "\n";
    if (c.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(c.out);
    if (!f) throw ekr::InputError("cannot write '" + c.out + "'");
    f << text;
  }
};

std::optional<ekr::ResultCache> open_cache(const Common& c) {
  std::string dir = c.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("EKRLAB_CACHE")) dir = env;
  if (dir.empty()) return std::nullopt;
  return ekr::ResultCache(dir);
}

void add_common(CLI::App* app, Common& c, bool with_r) {
  if (with_r) app->add_option("-r,--r", c.r, "Set size r")->required()->check(CLI::PositiveNumber);
  app->add_option("--budget", c.budget, "Search node budget")->check(CLI::PositiveNumber);
  app->add_option("--jobs", c.jobs, "Worker threads for scans")->check(CLI::PositiveNumber);
  app->add_option("--cache", c.cache_dir, "Result cache directory (default: $EKRLAB_CACHE)");
  app->add_option("--out", c.out, "Write output to a file instead of stdout");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app->add_flag("--timing", c.timing, "Include wall-clock milliseconds (makes output run-dependent)");
}

// Runs `compute` unless the cache already holds the value for this key.
Json cached(const Common& c, const std::string& key, const std::function<Json()>& compute) {
  auto cache = open_cache(c);
  if (cache && !c.timing)
    if (auto hit = cache->load(key)) return *hit;
  Json value = compute();
  if (cache && !c.timing) cache->store(key, value);
  return value;
}

int cmd_ekr(const Common& c, const std::string& spec, bool strict) {
  const ekr::Graph g = ekr::build_graph(spec);
  ekr::EkrOptions opts;
  opts.solver.node_budget = c.budget;
  opts.strict = strict;
  const std::string key = ekr::cache_key(g, c.r, "ekr", "budget=" + std::to_string(c.budget) + (strict ? ",strict" : ""));
  const Json body = cached(c, key, [&] { return ekr::report_to_json(ekr::is_r_ekr(g, c.r, opts), c.timing); });
  Emitter{c}(ekr::with_spec(spec, body));
  if (body["is_ekr"].is_null()) return kInexact;
  return body["is_ekr"].get<bool>() ? kPass : kFails;
}

int cmd_maxfam(const Common& c, const std::string& spec) {
  const ekr::Graph g = ekr::build_graph(spec);
  ekr::SolverOptions opts;
  opts.node_budget = c.budget;
  const std::string key = ekr::cache_key(g, c.r, "maxfam", "budget=" + std::to_string(c.budget));
  const Json body = cached(c, key, [&] {
    Json j;
    j["r"] = c.r;
    try {
      auto res = ekr::max_intersecting_family(g, c.r, std::nullopt, opts);
      j["max_family_size"] = res.size;
      j["witness"] = ekr::family_to_json(res.witness);
      j["nodes"] = res.nodes;
      j["exact"] = true;
      j["certificate"] = res.certificate;
    } catch (const ekr::SearchBudgetExceeded& e) {
      j["max_family_size"] = e.best.size();
      j["witness"] = ekr::family_to_json(e.best);
      j["nodes"] = e.nodes;
      j["exact"] = false;
      j["upper_bound"] = e.upper_bound;
    }
    return j;
  });
  Emitter{c}(ekr::with_spec(spec, body));
  return body["exact"].get<bool>() ? kPass : kInexact;
}

int cmd_stars(const Common& c, const std::string& spec) {
  const ekr::Graph g = ekr::build_graph(spec);
  const auto sizes = ekr::star_sizes(g, c.r);
  std::vector<ekr::Vertex> order(g.order());
  for (ekr::Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  Json j;
  j["spec"] = spec;
  j["r"] = c.r;
  Json rows = Json::array();
  for (auto v : order) rows.push_back(Json{{"center", g.label(v)}, {"vertex", v}, {"size", sizes[v]}});
  j["stars"] = rows;
  Emitter{c}(j);
  return kPass;
}

int cmd_mu(const Common& c, const std::string& spec) {
  const ekr::Graph g = ekr::build_graph(spec);
  Emitter{c}(Json{{"spec", spec}, {"mu", ekr::mu(g)}});
  return kPass;
}

int cmd_alpha(const Common& c, const std::string& spec) {
  const ekr::Graph g = ekr::build_graph(spec);
  Emitter{c}(Json{{"spec", spec}, {"alpha", ekr::alpha(g)}});
  return kPass;
}

int cmd_chordal(const Common& c, const std::string& spec) {
  const ekr::Graph g = ekr::build_graph(spec);
  const auto eo = ekr::find_elimination_order(g);
  Json j;
  j["spec"] = spec;
  j["chordal"] = eo.has_value();
  if (eo) {
    Json order = Json::array();
    for (auto v : eo->order) order.push_back(g.label(v));
    j["elimination_order"] = order;
  } else {
    j["elimination_order"] = nullptr;
  }
  Emitter{c}(j);
  return kPass;
}

int cmd_edges(const Common& c, const std::string& spec) {
  const ekr::Graph g = ekr::build_graph(spec);
  if (c.out.empty()) {
    ekr::write_edge_list(std::cout, g);
  } else {
    std::ofstream f(c.out);
    if (!f) throw ekr::InputError("cannot write '" + c.out + "'");
    ekr::write_edge_list(f, g);
  }
  return kPass;
}

struct ScanArgs {
  std::string name;
  unsigned n = 0, n_min = 1, r = 0, t_max = 0;
  std::string source = "canonical";
  bool labelled = false;
  std::string corpus_file;
  std::vector<std::string> specs;
  std::string emit_dir;
};

std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ekr::InputError("cannot read corpus '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    const auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

void emit_instances(const std::string& dir, const ekr::ScanResult& res) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < res.violations.size(); ++i) {
    const auto& v = res.violations[i];
    const auto path = std::filesystem::path(dir) / (res.scan + "-" + std::to_string(i) + ".txt");
    std::ofstream f(path);
    if (!f) throw ekr::InputError("cannot write '" + path.string() + "'");
    ekr::write_edge_list(f, ekr::build_graph(v.spec));
  }
}

int cmd_scan(const Common& c, const ScanArgs& a) {
  ekr::TreeScanOptions topts;
  topts.jobs = c.jobs;
  topts.n_min = a.n_min;
  topts.dedup = !a.labelled;
  if (a.source == "prufer") topts.source = ekr::TreeSource::prufer;
  if (a.source == "prufer-reverse") topts.source = ekr::TreeSource::prufer_reverse;
  auto pick = [](unsigned given, unsigned fallback) { return given ? given : fallback; };

  ekr::ScanResult res;
  std::size_t unexpected = 0;
  if (a.name == "leaf-star") {
    res = ekr::scan_leaf_star(pick(a.n, 9), pick(c.r, 4), topts);
    unexpected = res.violations.size();
  } else if (a.name == "degree-sort") {
    res = ekr::scan_degree_sort(pick(a.n, 10), pick(c.r, 5), topts);
    for (const auto& v : res.violations) unexpected += v.get("path") != 0;
  } else if (a.name == "gtk-grid") {
    res = ekr::scan_gtk_grid(pick(a.t_max, 8));
    unexpected = res.violations.size();
  } else if (a.name == "gtk-higher") {
    res = ekr::scan_gtk_higher(pick(a.t_max, 9), pick(c.r, 6));
    unexpected = res.violations.size();
  } else if (a.name == "minmax") {
    std::vector<std::string> corpus = a.specs;
    if (!a.corpus_file.empty()) {
      auto more = read_corpus(a.corpus_file);
      corpus.insert(corpus.end(), more.begin(), more.end());
    }
    if (corpus.empty()) corpus = ekr::default_minmax_corpus();
    ekr::EkrOptions opts;
    opts.solver.node_budget = c.budget;
    res = ekr::scan_minmax_conjecture(corpus, opts, c.jobs);
    unexpected = res.violations.size();
  } else {
    throw ekr::InputError("unknown scan '" + a.name + "'; expected leaf-star, degree-sort, gtk-grid, gtk-higher or minmax");
  }
  if (!a.emit_dir.empty()) emit_instances(a.emit_dir, res);
  Emitter{c}(ekr::scan_to_json(res, unexpected, c.timing));
  if (unexpected > 0) return kFails;
  return res.skipped > 0 ? kInexact : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdős–Ko–Rado experiments on independent sets of graphs"};
  app.require_subcommand(1);
  Common common;
  std::string spec;
  bool strict = false;
  ScanArgs scan;

  auto* ekr_cmd = app.add_subcommand("ekr", "Decide whether the graph is r-EKR");
  ekr_cmd->add_option("spec", spec, "Graph spec")->required();
  ekr_cmd->add_flag("--strict", strict, "Also decide strict r-EKR");
  add_common(ekr_cmd, common, true);

  auto* maxfam_cmd = app.add_subcommand("maxfam", "Largest intersecting family of independent r-sets");
  maxfam_cmd->add_option("spec", spec, "Graph spec")->required();
  add_common(maxfam_cmd, common, true);

  auto* stars_cmd = app.add_subcommand("stars", "Star sizes at every vertex, largest first");
  stars_cmd->add_option("spec", spec, "Graph spec")->required();
  add_common(stars_cmd, common, true);

  auto* mu_cmd = app.add_subcommand("mu", "Minimum size of a maximal independent set");
  mu_cmd->add_option("spec", spec, "Graph spec")->required();
  add_common(mu_cmd, common, false);

  auto* alpha_cmd = app.add_subcommand("alpha", "Independence number");
  alpha_cmd->add_option("spec", spec, "Graph spec")->required();
  add_common(alpha_cmd, common, false);

  auto* chordal_cmd = app.add_subcommand("chordal", "Chordality with an elimination ordering");
  chordal_cmd->add_option("spec", spec, "Graph spec")->required();
  add_common(chordal_cmd, common, false);

  auto* edges_cmd = app.add_subcommand("edges", "Print the graph as an edge list");
  edges_cmd->add_option("spec", spec, "Graph spec")->required();
  add_common(edges_cmd, common, false);

  auto* scan_cmd = app.add_subcommand("scan", "Run a conjecture scan");
  scan_cmd->add_option("name", scan.name, "leaf-star | degree-sort | gtk-grid | gtk-higher | minmax")->required();
  scan_cmd->add_option("specs", scan.specs, "Corpus graph specs (minmax)");
  scan_cmd->add_option("--n", scan.n, "Largest tree order");
  scan_cmd->add_option("--n-min", scan.n_min, "Smallest tree order");
  scan_cmd->add_option("-r,--r", common.r, "Largest r");
  scan_cmd->add_option("--tmax", scan.t_max, "Largest t for gtk scans");
  scan_cmd->add_option("--source", scan.source, "Tree source")
      ->check(CLI::IsMember({"canonical", "prufer", "prufer-reverse"}));
  scan_cmd->add_flag("--labelled", scan.labelled, "Analyse every labelled tree of a Prüfer source");
  scan_cmd->add_option("--corpus", scan.corpus_file, "File with one graph spec per line (minmax)");
  scan_cmd->add_option("--emit-dir", scan.emit_dir, "Write each violating instance as an edge list");
  add_common(scan_cmd, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*ekr_cmd) return cmd_ekr(common, spec, strict);
    if (*maxfam_cmd) return cmd_maxfam(common, spec);
    if (*stars_cmd) return cmd_stars(common, spec);
    if (*mu_cmd) return cmd_mu(common, spec);
    if (*alpha_cmd) return cmd_alpha(common, spec);
    if (*chordal_cmd) return cmd_chordal(common, spec);
    if (*edges_cmd) return cmd_edges(common, spec);
    if (*scan_cmd) return cmd_scan(common, scan);
  } catch (const ekr::InputError& e) {
    std::cerr << "ekr-lab: " << e.what() << "\n";
    return kInput;
  } catch (const ekr::CapacityError& e) {
    std::cerr << "ekr-lab: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "ekr-lab: internal error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
