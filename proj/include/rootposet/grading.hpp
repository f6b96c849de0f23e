#ifndef ROOTPOSET_GRADING_HPP
#define ROOTPOSET_GRADING_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ideals.hpp"
#include "poset.hpp"
#include "root_set.hpp"
#include "root_system.hpp"

namespace rootposet
{

/// The Z-grading attached to a simple root alpha: Delta_alpha(i) is the set of
/// positive roots whose alpha-coefficient equals i.
struct Grading
{
  int pivot = 0;
  int top = 0;  ///< ht_alpha(theta)
  int d = 0;    ///< floor(top / 2)
  std::vector<RootSet> levels;  ///< index 0..top; level 0 holds roots without alpha
  std::vector<int> lowest;      ///< unique minimum of each level >= 1 (-1 at index 0)
  std::vector<int> highest;     ///< unique maximum of each level >= 1 (-1 at index 0)

  RootSet const &level(int i) const { return levels.at(static_cast<std::size_t>(i)); }
  bool odd() const { return top % 2 == 1; }
};

inline Grading grading(RootSystem const &rs, int alpha)
{
  if (alpha < 0 || alpha >= rs.rank())
    throw std::out_of_range("grading: simple root index out of range");
  Grading g;
  g.pivot = alpha;
  g.top = rs.root(rs.theta()).height_at(static_cast<std::size_t>(alpha));
  g.d = g.top / 2;
  std::vector<std::vector<int>> lv(static_cast<std::size_t>(g.top) + 1);
  for (std::size_t k = 0; k < rs.size(); ++k)
    lv[static_cast<std::size_t>(rs.root(static_cast<int>(k)).height_at(static_cast<std::size_t>(alpha)))].push_back(
        static_cast<int>(k));
  for (auto &v : lv)
    g.levels.emplace_back(std::move(v));
  g.lowest.assign(g.levels.size(), -1);
  g.highest.assign(g.levels.size(), -1);
  for (int i = 1; i <= g.top; ++i) {
    auto lo = min_elements(rs, g.level(i));
    auto hi = max_elements(rs, g.level(i));
    if (lo.size() != 1 || hi.size() != 1)
      throw TheoremViolation("grading level without unique minimum and maximum",
                             "alpha=" + std::to_string(alpha + 1) + " level " + std::to_string(i));
    g.lowest[static_cast<std::size_t>(i)] = lo.front();
    g.highest[static_cast<std::size_t>(i)] = hi.front();
  }
  return g;
}

struct AdditivityResult
{
  bool ok = true;
  std::map<int, int> witness;      ///< mu -> nu with mu + nu a root
  std::optional<int> failure;      ///< a mu in level i without partner
};

/// For every mu in level i, finds nu in level j with mu + nu a root.
inline AdditivityResult check_additivity(RootSystem const &rs, Grading const &g, int i, int j)
{
  if (i < 1 || j < 1 || i + j > g.top)
    throw std::invalid_argument("check_additivity: need i, j >= 1 and i + j <= ht_alpha(theta)");
  AdditivityResult r;
  for (int mu : g.level(i)) {
    std::optional<int> partner;
    for (int nu : g.level(j))
      if (rs.sum(mu, nu) >= 0) {
        partner = nu;
        break;
      }
    if (!partner) {
      r.ok = false;
      r.failure = mu;
      return r;
    }
    r.witness.emplace(mu, *partner);
  }
  return r;
}

inline AdditivityResult check_additivity(RootSystem const &rs, int alpha, int i, int j)
{ return check_additivity(rs, grading(rs, alpha), i, j); }

/// Simple roots whose coefficient in theta is odd.
inline std::vector<int> odd_roots(RootSystem const &rs)
{
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.root(rs.theta()).height_at(static_cast<std::size_t>(i)) % 2 == 1)
      out.push_back(i);
  return out;
}

struct OddIdeal
{
  RootSet ideal;  ///< union of levels d+1 .. top
  int beta = -1;  ///< the long simple root with ideal = I(beta)_max
};

/// The union of the upper half of the grading for an odd simple root, matched
/// against the maximal abelian ideals.
inline OddIdeal odd_ideal(RootSystem const &rs, Grading const &g, std::map<int, RootSet> const &maximal)
{
  if (!g.odd())
    throw std::invalid_argument("odd_ideal: ht_alpha(theta) is even for alpha_" + std::to_string(g.pivot + 1));
  OddIdeal out;
  for (int j = g.d + 1; j <= g.top; ++j)
    out.ideal = out.ideal.unite(g.level(j));
  if (!is_upper_ideal(rs, out.ideal) || !is_abelian(rs, out.ideal))
    throw TheoremViolation("odd-grading ideal is not an abelian ideal", "alpha_" + std::to_string(g.pivot + 1));
  for (auto const &[beta, I] : maximal)
    if (I == out.ideal) {
      if (out.beta >= 0)
        throw TheoremViolation("odd-grading ideal matches two maximal ideals", "alpha_" + std::to_string(g.pivot + 1));
      out.beta = beta;
    }
  if (out.beta < 0)
    throw TheoremViolation("odd-grading ideal is not a maximal abelian ideal", "alpha_" + std::to_string(g.pivot + 1));
  return out;
}

inline bool is_extreme_node(RootSystem const &rs, int i)
{ return rs.degree(i) == 1; }

/// (alpha, d_alpha, beta, ht_beta(theta)) for an odd simple root alpha.
struct OddRow
{
  int alpha = -1;
  int d = 0;
  int beta = -1;
  int beta_height = 0;
};

/// Rows for all odd simple roots with d_alpha >= 1, in Bourbaki indices.
inline std::vector<OddRow> odd_rows(RootSystem const &rs, std::map<int, RootSet> const &maximal)
{
  std::vector<OddRow> rows;
  for (int a : odd_roots(rs)) {
    auto g = grading(rs, a);
    if (g.d < 1)
      continue;
    auto oi = odd_ideal(rs, g, maximal);
    rows.push_back({a, g.d, oi.beta, rs.root(rs.theta()).height_at(static_cast<std::size_t>(oi.beta))});
  }
  return rows;
}

/// The poset between floor(theta/2) and ceil(theta/2). In type A the lower end
/// is zero, so the view is Delta+ with a formal bottom adjoined.
inline PosetView theta_interval(RootSystem const &rs)
{
  auto halves = theta_floor_ceil(rs);
  if (is_zero(halves.floor))
    return PosetView(rs, RootSet::filter(rs, [&](int k) { return leq(rs.coeffs(k), halves.ceil); }), true);
  auto lo = rs.index_of(halves.floor);
  auto hi = rs.index_of(halves.ceil);
  if (!lo || !hi)
    throw TheoremViolation("floor/ceil of theta/2 is not a root", format_coeffs(halves.floor));
  return interval(rs, *lo, *hi);
}

} // namespace rootposet

#endif // ROOTPOSET_GRADING_HPP
