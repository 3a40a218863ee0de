#include "ekr/lab.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "ekr/generators.hpp"
#include "ekr/graph_spec.hpp"
#include "ekr/independence.hpp"
#include "ekr/trees.hpp"

namespace ekr {

long long Violation::get(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  throw InputError("violation has no field '" + key + "'");
}

std::string spec_of(const Graph& g) {
  std::string body;
  for (auto [u, v] : g.edges()) {
    if (!body.empty()) body += ',';
    body += std::to_string(u) + "-" + std::to_string(v);
  }
  if (g.order() >= 2 && is_tree(g)) return "tree:" + body;
  return "edges:" + std::to_string(g.order()) + ":" + body;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Partial {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
};

using TreeCheck = std::function<void(const Graph&, Partial&)>;

// Runs `check` over instances 0..count-1 split round-robin across workers.
std::vector<Partial> run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t, Partial&)>& work) {
  jobs = std::max(1U, jobs);
  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i, parts[0]);
    return parts;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned j = 0; j < jobs; ++j)
    threads.emplace_back([&, j] {
      try {
        for (std::size_t i = j; i < count; i += jobs) work(i, parts[j]);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return parts;
}

void merge(ScanResult& out, std::vector<Partial>& parts) {
  for (auto& p : parts) {
    out.checked += p.checked;
    out.violations.insert(out.violations.end(), std::make_move_iterator(p.violations.begin()),
                          std::make_move_iterator(p.violations.end()));
  }
  std::sort(out.violations.begin(), out.violations.end());
}

std::string source_name(TreeSource s) {
  switch (s) {
    case TreeSource::canonical: return "non-isomorphic trees";
    case TreeSource::prufer: return "Prüfer-enumerated trees";
    case TreeSource::prufer_reverse: return "reverse Prüfer-enumerated trees";
  }
  return {};
}

ScanResult run_tree_scan(const std::string& name, unsigned n_max, unsigned r_max, const TreeScanOptions& opts,
                         const TreeCheck& check) {
  const auto start = Clock::now();
  if (n_max > 16) throw InputError(name + ": n is capped at 16");
  ScanResult out;
  out.scan = name;
  out.space = source_name(opts.source) + " on " + std::to_string(std::max(1U, opts.n_min)) + ".." +
              std::to_string(n_max) + " vertices, r ≤ " + std::to_string(r_max);
  if (opts.source != TreeSource::canonical && !opts.dedup) out.space += ", labelled";
  for (unsigned n = std::max(1U, opts.n_min); n <= n_max; ++n) {
    std::vector<Graph> trees;
    if (opts.source == TreeSource::canonical || n < 3) {
      trees = nonisomorphic_trees(n);
    } else if (opts.dedup) {
      std::set<std::string> forms;
      for_each_prufer_sequence(n, opts.source == TreeSource::prufer_reverse, [&](const std::vector<Vertex>& seq) {
        forms.insert(canonical_tree_form(make_tree_from_prufer(seq)));
      });
      for (const auto& f : forms) trees.push_back(tree_from_canonical_form(f));
    } else {
      auto parts = run_parallel(std::max(1U, opts.jobs), std::max(1U, opts.jobs), [&](std::size_t worker, Partial& p) {
        std::size_t idx = 0;
        const std::size_t stride = std::max(1U, opts.jobs);
        for_each_prufer_sequence(n, opts.source == TreeSource::prufer_reverse, [&](const std::vector<Vertex>& seq) {
          if (idx++ % stride == worker) check(make_tree_from_prufer(seq), p);
        });
      });
      merge(out, parts);
      continue;
    }
    auto parts = run_parallel(trees.size(), opts.jobs, [&](std::size_t i, Partial& p) { check(trees[i], p); });
    merge(out, parts);
  }
  out.millis = millis_since(start);
  return out;
}

bool is_path_graph(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

ScanResult scan_leaf_star(unsigned n_max, unsigned r_max, const TreeScanOptions& opts) {
  return run_tree_scan("leaf-star", n_max, r_max, opts, [r_max](const Graph& g, Partial& p) {
    for (unsigned r = 1; r <= r_max; ++r) {
      ++p.checked;
      const auto sizes = star_sizes(g, r);
      std::uint64_t best = 0, best_leaf = 0;
      Vertex arg = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (sizes[v] > best) {
          best = sizes[v];
          arg = v;
        }
        if (g.degree(v) <= 1) best_leaf = std::max(best_leaf, sizes[v]);
      }
      if (best_leaf < best)
        p.violations.push_back(Violation{spec_of(g), r,
                                         {{"max_leaf_star", static_cast<long long>(best_leaf)},
                                          {"max_star", static_cast<long long>(best)},
                                          {"argmax", arg}},
                                         "no leaf attains the largest star"});
    }
  });
}

ScanResult scan_degree_sort(unsigned n_max, unsigned r_max, const TreeScanOptions& opts) {
  return run_tree_scan("degree-sort", n_max, r_max, opts, [r_max](const Graph& g, Partial& p) {
    VertexSet side;
    if (!is_bipartite(g, &side)) throw InternalError("tree is not bipartite");
    const bool path = is_path_graph(g);
    for (unsigned r = 1; r <= r_max; ++r) {
      ++p.checked;
      const auto sizes = star_sizes(g, r);
      for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < g.order(); ++y) {
          if (side.contains(x) != side.contains(y)) continue;
          if (g.degree(x) < g.degree(y) && sizes[x] < sizes[y])
            p.violations.push_back(Violation{spec_of(g), r,
                                             {{"x", x},
                                              {"y", y},
                                              {"dx", g.degree(x)},
                                              {"dy", g.degree(y)},
                                              {"sx", static_cast<long long>(sizes[x])},
                                              {"sy", static_cast<long long>(sizes[y])},
                                              {"path", path ? 1 : 0}},
                                             "lower degree, smaller star"});
        }
    }
  });
}

long long check_gtk_gap(unsigned t, unsigned k) {
  if (k < 2 || t < 2 * k) throw InputError("check_gtk_gap: need t ≥ 2k ≥ 4");
  const MarkedGraph m = make_gtk(t, k);
  return static_cast<long long>(star_size(m.graph, m.y, 3)) - static_cast<long long>(star_size(m.graph, m.x, 3));
}

std::pair<std::uint64_t, std::uint64_t> check_gtk_higher_r(unsigned t, unsigned r) {
  if (!(t > r && r > 3)) throw InputError("check_gtk_higher_r: need t > r > 3");
  const MarkedGraph m = make_gtk(t, 2);
  return {star_size(m.graph, m.x, r), star_size(m.graph, m.y, r)};
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long c = 1;
  for (long long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

ScanResult scan_gtk_grid(unsigned t_max) {
  const auto start = Clock::now();
  ScanResult out;
  out.scan = "gtk-grid";
  out.space = "G_{t,k} with 2 ≤ k, 2k ≤ t ≤ " + std::to_string(t_max) + ", r = 3";
  for (unsigned k = 2; 2 * k <= t_max; ++k)
    for (unsigned t = 2 * k; t <= t_max; ++t) {
      ++out.checked;
      const long long gap = check_gtk_gap(t, k);
      const long long expected = static_cast<long long>(t) - 2 * static_cast<long long>(k) + 1;
      if (gap != expected)
        out.violations.push_back(Violation{"gtk:" + std::to_string(t) + "," + std::to_string(k), 3,
                                           {{"t", t}, {"k", k}, {"gap", gap}, {"expected", expected}},
                                           "gap differs from t - 2k + 1"});
    }
  std::sort(out.violations.begin(), out.violations.end());
  out.millis = millis_since(start);
  return out;
}

ScanResult scan_gtk_higher(unsigned t_max, unsigned r_max) {
  const auto start = Clock::now();
  ScanResult out;
  out.scan = "gtk-higher";
  out.space = "G_{t,2} with 4 ≤ r ≤ " + std::to_string(r_max) + ", r < t ≤ " + std::to_string(t_max);
  for (unsigned r = 4; r <= r_max; ++r)
    for (unsigned t = r + 1; t <= t_max; ++t) {
      ++out.checked;
      const auto [x, y] = check_gtk_higher_r(t, r);
      const long long diff = static_cast<long long>(y) - static_cast<long long>(x);
      const long long expected = binom(t - 1, r - 2);
      const bool formulas = static_cast<long long>(x) == binom(t + 1, r - 1) && diff == expected;
      if (!formulas)
        out.violations.push_back(Violation{"gtk:" + std::to_string(t) + ",2", r,
                                           {{"t", t}, {"x_size", static_cast<long long>(x)},
                                            {"y_size", static_cast<long long>(y)}, {"expected_gap", expected}},
                                           "star sizes differ from the closed forms"});
    }
  std::sort(out.violations.begin(), out.violations.end());
  out.millis = millis_since(start);
  return out;
}

ScanResult scan_minmax_conjecture(const std::vector<std::string>& corpus, const EkrOptions& opts, unsigned jobs) {
  const auto start = Clock::now();
  ScanResult out;
  out.scan = "minmax";
  out.space = std::to_string(corpus.size()) + " corpus graphs, every r ≤ mu/2";
  std::vector<Graph> graphs;
  for (const auto& s : corpus) {
    graphs.push_back(build_graph(s));
    if (graphs.back().order() > 16) throw InputError("minmax scan: '" + s + "' has more than 16 vertices");
  }
  struct Local {
    Partial p;
    std::vector<std::string> skipped;
  };
  std::vector<Local> locals(corpus.size());
  run_parallel(corpus.size(), jobs, [&](std::size_t i, Partial&) {
    const Graph& g = graphs[i];
    const unsigned m = mu(g);
    for (unsigned r = 1; 2 * r <= m; ++r) {
      const EkrReport rep = is_r_ekr(g, r, opts);
      if (!rep.is_ekr) {
        locals[i].skipped.push_back(corpus[i] + " r=" + std::to_string(r));
        continue;
      }
      ++locals[i].p.checked;
      if (!*rep.is_ekr)
        locals[i].p.violations.push_back(Violation{corpus[i], r,
                                                   {{"mu", m},
                                                    {"star_size", static_cast<long long>(rep.star_size)},
                                                    {"max_family_size", static_cast<long long>(rep.max_family_size)}},
                                                   "intersecting family larger than every star"});
    }
  });
  std::vector<Partial> parts;
  for (auto& l : locals) {
    parts.push_back(std::move(l.p));
    out.skipped += l.skipped.size();
    out.skipped_specs.insert(out.skipped_specs.end(), l.skipped.begin(), l.skipped.end());
  }
  merge(out, parts);
  out.millis = millis_since(start);
  return out;
}

std::vector<std::string> default_minmax_corpus() {
  return {
      "union(kn:3;empty:1)",        "union(kn:4;empty:2)",          "union(chain:2,2;empty:1)",
      "union(chain:3,3;empty:1)",   "union(mnd:1,1,2,2,3;empty:1)", "union(path:5;empty:1)",
      "union(pathpow:7,2;empty:1)", "cycpow:8,1",                   "cycpow:10,2",
      "cycpow:12,2",                "cycle:9",                      "modcyc:10,2,3",
      "ladder:4",                   "ladder:6",                     "path:9",
      "union(path:4;path:4)",       "multipartite:2,2,3",           "spider2:3",
      "gtk:4,2",                    "empty:7",
  };
}

std::vector<std::string> find_leaf_beaten_trees(unsigned n, unsigned r, std::uint64_t leaf_star,
                                                std::uint64_t internal_star) {
  std::vector<std::string> out;
  for (const Graph& g : nonisomorphic_trees(n)) {
    const auto sizes = star_sizes(g, r);
    const std::uint64_t best = *std::max_element(sizes.begin(), sizes.end());
    bool leaf_hit = false, internal_hit = false, internal_max = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool leaf = g.degree(v) <= 1;
      if (leaf && sizes[v] == leaf_star) leaf_hit = true;
      if (!leaf && sizes[v] == internal_star) internal_hit = true;
      if (!leaf && sizes[v] == best) internal_max = true;
    }
    if (leaf_hit && internal_hit && !internal_max) out.push_back(spec_of(g));
  }
  return out;
}

}  // namespace ekr
