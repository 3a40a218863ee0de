#include "ekr/max_family.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "bitrow.hpp"

namespace ekr {

SearchBudgetExceeded::SearchBudgetExceeded(SetFamily best_, std::size_t upper_bound_, std::uint64_t nodes_)
    : std::runtime_error("search budget of nodes exceeded after " + std::to_string(nodes_) + " nodes"),
      best(std::move(best_)),
      upper_bound(upper_bound_),
      nodes(nodes_) {}

namespace {

using detail::BitRow;

struct BudgetHit {};

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;
  void tick() {
    if (++used > limit) throw BudgetHit{};
  }
};

// Compatibility graph on J^r: i ~ j iff the sets intersect.
struct Compat {
  std::vector<VertexSet> items;
  std::vector<BitRow> rows;
  std::vector<BitRow> containing;  // per graph vertex: items containing it

  Compat(const Graph& g, std::vector<VertexSet> sets) : items(std::move(sets)) {
    const std::size_t n = items.size();
    rows.assign(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (items[i].intersects(items[j])) {
          rows[i].set(j);
          rows[j].set(i);
        }
    containing.assign(g.order(), BitRow(n));
    for (std::size_t i = 0; i < n; ++i) items[i].for_each([&](Vertex v) { containing[v].set(i); });
  }
  std::size_t size() const { return items.size(); }
};

// Greedy sequential colouring of the vertices in P; returns the vertices in
// colour order together with their colour numbers.
void color_sort(const std::vector<BitRow>& rows, BitRow uncolored, std::vector<std::size_t>& order,
                std::vector<std::size_t>& color) {
  order.clear();
  color.clear();
  std::size_t c = 0;
  while (uncolored.any()) {
    ++c;
    BitRow q = uncolored;
    while (q.any()) {
      const std::size_t v = q.first();
      uncolored.reset(v);
      q.reset(v);
      q.subtract(rows[v]);
      order.push_back(v);
      color.push_back(c);
    }
  }
}

std::size_t color_bound(const std::vector<BitRow>& rows, const BitRow& p) {
  std::vector<std::size_t> order, color;
  color_sort(rows, p, order, color);
  return color.empty() ? 0 : color.back();
}

// Coloured branch and bound on a degree-sorted copy of the compatibility graph.
class CliqueEngine {
public:
  CliqueEngine(const Compat& cg, Budget& budget) : budget_(budget) {
    const std::size_t n = cg.size();
    perm_.resize(n);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = cg.rows[i].count();
    std::stable_sort(perm_.begin(), perm_.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    pos_.resize(n);
    for (std::size_t k = 0; k < n; ++k) pos_[perm_[k]] = k;
    rows_.assign(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i) cg.rows[i].for_each([&](std::size_t j) { rows_[pos_[i]].set(pos_[j]); });
  }

  // Largest clique inside `allowed` (original indices) strictly larger than
  // `threshold`; empty result when there is none. With stop_at_first the first
  // clique beating the threshold is returned.
  std::vector<std::size_t> search(const BitRow& allowed, std::size_t threshold, bool stop_at_first) {
    BitRow p(rows_.size());
    allowed.for_each([&](std::size_t i) { p.set(pos_[i]); });
    best_size_ = threshold;
    best_.clear();
    current_.clear();
    stop_ = stop_at_first;
    done_ = false;
    expand(p);
    std::vector<std::size_t> out;
    for (auto k : best_) out.push_back(perm_[k]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Best clique recorded so far, in original indices; valid after BudgetHit.
  std::vector<std::size_t> partial() const {
    std::vector<std::size_t> out;
    for (auto k : best_) out.push_back(perm_[k]);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  void expand(BitRow p) {
    budget_.tick();
    std::vector<std::size_t> order, color;
    color_sort(rows_, p, order, color);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (done_ || current_.size() + color[i] <= best_size_) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      BitRow np = p & rows_[v];
      if (np.any()) {
        expand(std::move(np));
      } else if (current_.size() > best_size_) {
        best_size_ = current_.size();
        best_ = current_;
        if (stop_) done_ = true;
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  Budget& budget_;
  std::vector<std::size_t> perm_, pos_;
  std::vector<BitRow> rows_;
  std::vector<std::size_t> current_, best_;
  std::size_t best_size_ = 0;
  bool stop_ = false, done_ = false;
};

// Depth-first search in index order for the lexicographically least clique of
// size exactly `target`; items are in canonical order so index order is the
// canonical family order.
class LexSearch {
public:
  LexSearch(const Compat& cg, Budget& budget, std::size_t target) : cg_(cg), budget_(budget), target_(target) {}

  std::optional<std::vector<std::size_t>> run() {
    std::vector<std::size_t> chosen;
    if (rec(chosen, BitRow::full(cg_.size()))) return chosen;
    return std::nullopt;
  }

private:
  bool rec(std::vector<std::size_t>& chosen, BitRow p) {
    budget_.tick();
    if (chosen.size() == target_) return true;
    if (chosen.size() + color_bound(cg_.rows, p) < target_) return false;
    while (p.any()) {
      const std::size_t v = p.first();
      chosen.push_back(v);
      if (rec(chosen, p & cg_.rows[v])) return true;
      chosen.pop_back();
      p.reset(v);
      if (chosen.size() + p.count() < target_) return false;
    }
    return false;
  }

  const Compat& cg_;
  Budget& budget_;
  std::size_t target_;
};

SetFamily family_of(const Compat& cg, unsigned r, const std::vector<std::size_t>& idx, std::string origin) {
  std::vector<VertexSet> sets;
  sets.reserve(idx.size());
  for (auto i : idx) sets.push_back(cg.items[i]);
  return make_family(r, std::move(sets), std::move(origin));
}

struct Spectral {
  double t = 0;
  double lambda = 0;
};

Eigen::MatrixXd disjointness(const Compat& cg) {
  const auto n = static_cast<Eigen::Index>(cg.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && !cg.rows[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j))) a(i, j) = 1.0;
  return a;
}

double lambda_max(const Eigen::MatrixXd& a, double t) {
  const auto n = a.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, 1.0) + t * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(n - 1);
}

// Minimises the convex function t -> lambda_max(J + tA) over [-n, 0].
Spectral minimise_spectral(const Eigen::MatrixXd& a) {
  const double n = static_cast<double>(a.rows());
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = -n, hi = 0.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = lambda_max(a, x1), f2 = lambda_max(a, x2);
  for (int it = 0; it < 200 && hi - lo > 1e-11 * n; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = lambda_max(a, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = lambda_max(a, x2);
    }
  }
  Spectral s{(lo + hi) / 2, 0};
  s.lambda = lambda_max(a, s.t);
  for (auto [t, f] : {std::pair{x1, f1}, std::pair{x2, f2}})
    if (f < s.lambda) s = {t, f};
  return s;
}

std::size_t floor_bound(double lambda) {
  return static_cast<std::size_t>(std::floor(lambda + 1e-7 * std::max(1.0, lambda)));
}

std::size_t spectral_bound_of(const Compat& cg) {
  bool any_disjoint = false;
  for (std::size_t i = 0; i < cg.size() && !any_disjoint; ++i)
    any_disjoint = cg.rows[i].count() + 1 < cg.size();
  if (!any_disjoint) return cg.size();
  return floor_bound(minimise_spectral(disjointness(cg)).lambda);
}

}  // namespace

std::size_t spectral_bound(const Graph& g, unsigned r) {
  if (r == 0) throw InputError("r must be at least 1");
  const SetFamily j = enumerate_independent(g, r);
  if (j.empty()) return 0;
  return spectral_bound_of(Compat(g, j.sets));
}

MaxFamilyResult max_intersecting_family(const Graph& g, unsigned r, std::optional<std::size_t> lower_bound,
                                        const SolverOptions& opts) {
  if (r == 0) throw InputError("r must be at least 1");
  const SetFamily j = enumerate_independent(g, r);
  MaxFamilyResult res;
  if (j.empty()) {
    res.witness = SetFamily{r, {}, "empty"};
    res.certificate = "empty";
    return res;
  }
  const BestStar bs = best_star(g, r);
  const SetFamily best_star_family = star(g, *bs.center, r);
  const Compat cg(g, j.sets);
  Budget budget{0, opts.node_budget};

  std::size_t upper = cg.size();
  if (opts.spectral && cg.size() <= opts.spectral_limit) upper = std::min(upper, spectral_bound_of(cg));
  if (upper <= bs.size) {
    res.size = bs.size;
    res.witness = best_star_family;
    res.certificate = "spectral";
    return res;
  }

  CliqueEngine engine(cg, budget);
  const BitRow all = BitRow::full(cg.size());
  std::vector<std::size_t> found;
  std::size_t threshold = bs.size;
  try {
    if (lower_bound && *lower_bound > bs.size + 1) {
      found = engine.search(all, *lower_bound - 1, false);
      if (found.empty()) found = engine.search(all, bs.size, false);
    } else {
      found = engine.search(all, bs.size, false);
    }
  } catch (const BudgetHit&) {
    auto partial = engine.partial();
    SetFamily best = partial.size() > bs.size ? family_of(cg, r, partial, "partial") : best_star_family;
    throw SearchBudgetExceeded(std::move(best), upper, budget.used);
  }
  res.certificate = "search";
  if (found.empty()) {
    res.size = bs.size;
    res.witness = best_star_family;
    res.nodes = budget.used;
    return res;
  }
  threshold = found.size();
  res.size = threshold;
  try {
    auto lex = LexSearch(cg, budget, threshold).run();
    if (!lex) throw InternalError("lexicographic search missed a clique of known size");
    res.witness = family_of(cg, r, *lex, "lex-min");
  } catch (const BudgetHit&) {
    // Size is exact; only the canonical choice of witness is lost.
    res.witness = family_of(cg, r, found, "search");
  }
  res.nodes = budget.used;
  return res;
}

namespace {

// Every maximum family lies close to the top eigenspace of J + t*A. Pick d
// well-conditioned coordinates, enumerate their 2^d 0/1 values and recover the
// rest by linear reconstruction; each recovered vector is then checked exactly.
std::optional<StrictnessResult> spectral_strictness(const Compat& cg, unsigned r, std::size_t m) {
  constexpr std::size_t kMaxDim = 20;
  const Eigen::MatrixXd a = disjointness(cg);
  const Spectral s = minimise_spectral(a);
  if (floor_bound(s.lambda) != m) return std::nullopt;
  const auto n = a.rows();
  Eigen::MatrixXd mt = Eigen::MatrixXd::Constant(n, n, 1.0) + s.t * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mt);
  const auto& ev = es.eigenvalues();
  const double top = ev(n - 1);
  const double cluster_tol = 1e-4 * std::max(1.0, top);
  Eigen::Index d = 0;
  while (d < n && ev(n - 1 - d) >= top - cluster_tol) ++d;
  if (d == n || static_cast<std::size_t>(d) > kMaxDim) return std::nullopt;
  const double gap = top - ev(n - 1 - d);
  const double eps = std::sqrt(static_cast<double>(m) * std::max(0.0, top - static_cast<double>(m)) / gap);

  const Eigen::MatrixXd basis = es.eigenvectors().rightCols(d);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis.transpose());
  std::vector<Eigen::Index> pivots(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) pivots[static_cast<std::size_t>(k)] = qr.colsPermutation().indices()(k);
  Eigen::MatrixXd bp(d, d);
  for (Eigen::Index k = 0; k < d; ++k) bp.row(k) = basis.row(pivots[static_cast<std::size_t>(k)]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(bp);
  const double smin = svd.singularValues()(d - 1);
  if (smin <= 0) return std::nullopt;
  if (eps * (1.0 + 1.0 / smin) >= 0.45) return std::nullopt;

  const Eigen::MatrixXd w = basis * bp.inverse();  // n x d
  StrictnessResult out;
  out.method = "spectral";
  std::size_t count = 0;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  const std::uint64_t patterns = std::uint64_t{1} << d;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 0; step < patterns; ++step) {
    if (step > 0) {
      const auto bit = static_cast<Eigen::Index>(std::countr_zero(step));
      gray ^= std::uint64_t{1} << bit;
      if ((gray >> bit) & 1U)
        y += w.col(bit);
      else
        y -= w.col(bit);
    }
    bool clean = true;
    std::vector<std::size_t> members;
    for (Eigen::Index i = 0; i < n && clean; ++i) {
      if (std::abs(y(i) - 1.0) < 0.45)
        members.push_back(static_cast<std::size_t>(i));
      else if (std::abs(y(i)) >= 0.45)
        clean = false;
    }
    if (!clean || members.size() != m) continue;
    bool intersecting = true;
    for (std::size_t x = 0; x < members.size() && intersecting; ++x)
      for (std::size_t z = x + 1; z < members.size() && intersecting; ++z)
        intersecting = cg.rows[members[x]].test(members[z]);
    if (!intersecting) continue;
    ++count;
    VertexSet common = VertexSet(~std::uint64_t{0});
    for (auto i : members) common &= cg.items[i];
    if (common.empty() && !out.non_star) {
      out.strict = false;
      out.non_star = family_of(cg, r, members, "non-star");
    }
  }
  out.maximum_families = count;
  return out;
}

// Branch on a member avoiding some element of the running common intersection
// until that intersection is empty, then ask for any clique completing the
// family to size m.
class StrictSearch {
public:
  StrictSearch(const Graph& g, const Compat& cg, Budget& budget, std::size_t m)
      : g_(g), cg_(cg), budget_(budget), m_(m), engine_(cg, budget) {}

  std::optional<std::vector<std::size_t>> run() {
    std::vector<std::size_t> chosen;
    if (rec(chosen, g_.vertices(), BitRow::full(cg_.size()))) return chosen;
    return std::nullopt;
  }

private:
  bool rec(std::vector<std::size_t>& chosen, VertexSet common, BitRow p) {
    budget_.tick();
    if (chosen.size() >= m_) return common.empty();
    if (common.empty()) {
      auto rest = engine_.search(p, m_ - chosen.size() - 1, true);
      if (rest.empty()) return false;
      chosen.insert(chosen.end(), rest.begin(), rest.end());
      chosen.resize(m_);
      return true;
    }
    if (chosen.size() + color_bound(cg_.rows, p) < m_) return false;
    Vertex pivot = common.first();
    std::size_t fewest = ~std::size_t{0};
    common.for_each([&](Vertex v) {
      BitRow avoid = p;
      avoid.subtract(cg_.containing[v]);
      const std::size_t c = avoid.count();
      if (c < fewest) {
        fewest = c;
        pivot = v;
      }
    });
    BitRow avoiders = p;
    avoiders.subtract(cg_.containing[pivot]);
    bool found = false;
    avoiders.for_each([&](std::size_t q) {
      if (found) return;
      chosen.push_back(q);
      if (rec(chosen, common & cg_.items[q], p & cg_.rows[q])) {
        found = true;
        return;
      }
      chosen.pop_back();
      p.reset(q);
    });
    return found;
  }

  const Graph& g_;
  const Compat& cg_;
  Budget& budget_;
  std::size_t m_;
  CliqueEngine engine_;
};

}  // namespace

StrictnessResult check_strictness(const Graph& g, unsigned r, std::size_t max_size, const SolverOptions& opts) {
  if (r == 0) throw InputError("r must be at least 1");
  const SetFamily j = enumerate_independent(g, r);
  if (j.empty() || max_size == 0) return StrictnessResult{true, std::nullopt, std::nullopt, 0, "vacuous"};
  const Compat cg(g, j.sets);
  if (opts.strict_method != StrictMethod::search && cg.size() <= opts.spectral_limit) {
    if (auto res = spectral_strictness(cg, r, max_size)) return *res;
    if (opts.strict_method == StrictMethod::spectral)
      throw InputError("spectral certificate does not apply to this instance");
  } else if (opts.strict_method == StrictMethod::spectral) {
    throw InputError("instance too large for the spectral certificate");
  }
  Budget budget{0, opts.node_budget};
  StrictnessResult out;
  out.method = "search";
  try {
    auto found = StrictSearch(g, cg, budget, max_size).run();
    if (found) {
      out.strict = false;
      out.non_star = family_of(cg, r, *found, "non-star");
    }
  } catch (const BudgetHit&) {
    throw SearchBudgetExceeded(SetFamily{r, {}, "strictness"}, max_size, budget.used);
  }
  out.nodes = budget.used;
  return out;
}

}  // namespace ekr
