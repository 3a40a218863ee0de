#include "ekr/ekr.hpp"

#include <chrono>

namespace ekr {

EkrReport is_r_ekr(const Graph& g, unsigned r, const EkrOptions& opts) {
  if (r == 0) throw InputError("r must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  EkrReport rep;
  rep.r = r;
  const BestStar bs = best_star(g, r);
  rep.star_size = bs.size;
  rep.star_center = bs.center;
  if (bs.center) rep.star_center_label = g.label(*bs.center);
  try {
    MaxFamilyResult res = max_intersecting_family(g, r, std::nullopt, opts.solver);
    rep.max_family_size = res.size;
    rep.witness = std::move(res.witness);
    rep.nodes = res.nodes;
    rep.certificate = res.certificate;
    rep.is_ekr = res.size == bs.size;
  } catch (const SearchBudgetExceeded& e) {
    rep.exact = false;
    rep.max_family_size = e.best.size();
    rep.witness = e.best;
    rep.nodes = e.nodes;
    rep.certificate = "budget";
    // A family beating the best star settles the verdict even without a proof of optimality.
    if (e.best.size() > bs.size) rep.is_ekr = false;
  }
  if (rep.is_ekr == false) {
    rep.is_strict = false;
  } else if (rep.is_ekr == true && opts.strict) {
    try {
      const StrictnessResult s = check_strictness(g, r, rep.max_family_size, opts.solver);
      rep.is_strict = s.strict;
      rep.nodes += s.nodes;
    } catch (const SearchBudgetExceeded& e) {
      rep.exact = false;
      rep.nodes += e.nodes;
    }
  }
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool is_strict_r_ekr(const Graph& g, unsigned r, const SolverOptions& opts) {
  const MaxFamilyResult res = max_intersecting_family(g, r, std::nullopt, opts);
  const BestStar bs = best_star(g, r);
  if (res.size != bs.size) throw InputError("graph is not " + std::to_string(r) + "-EKR");
  return check_strictness(g, r, res.size, opts).strict;
}

}  // namespace ekr
