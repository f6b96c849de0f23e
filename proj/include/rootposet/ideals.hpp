#ifndef ROOTPOSET_IDEALS_HPP
#define ROOTPOSET_IDEALS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"
#include "root_set.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace rootposet
{

/// I<>=gamma>: all positive roots above gamma.
inline RootSet upper_closure(RootSystem const &rs, int gamma)
{ return RootSet::filter(rs, [&](int k) { return leq(rs, gamma, k); }); }

/// Upward closure of an arbitrary set of roots.
inline RootSet upper_closure(RootSystem const &rs, RootSet const &generators)
{
  return RootSet::filter(rs, [&](int k) {
    return std::any_of(generators.begin(), generators.end(), [&](int g) { return leq(rs, g, k); });
  });
}

inline bool is_upper_ideal(RootSystem const &rs, RootSet const &s)
{
  for (int g : s)
    for (int i = 0; i < rs.rank(); ++i) {
      int up = rs.sum(g, rs.simple(i));
      if (up >= 0 && !s.contains(up))
        return false;
    }
  return true;
}

/// Some pair of members (possibly equal) sums to a root.
inline bool has_root_sum(RootSystem const &rs, RootSet const &s)
{
  for (auto a = s.begin(); a != s.end(); ++a)
    for (auto b = a; b != s.end(); ++b)
      if (rs.sum(*a, *b) >= 0)
        return true;
  return false;
}

/// Some pair of members sums to theta.
inline bool has_theta_sum(RootSystem const &rs, RootSet const &s)
{
  for (auto a = s.begin(); a != s.end(); ++a)
    for (auto b = a; b != s.end(); ++b)
      if (rs.sum(*a, *b) == rs.theta())
        return true;
  return false;
}

/// Abelian test for an upper ideal. Runs both the pairwise-sum test and the
/// theta-sum test, which must agree on upper ideals.
inline bool is_abelian(RootSystem const &rs, RootSet const &ideal)
{
  if (!is_upper_ideal(rs, ideal))
    throw std::invalid_argument("is_abelian: input is not an upper ideal");
  bool by_pairs = !has_root_sum(rs, ideal);
  bool by_theta = !has_theta_sum(rs, ideal);
  if (by_pairs != by_theta)
    throw TheoremViolation("pairwise and theta-sum abelian tests disagree",
                           "ideal of size " + std::to_string(ideal.size()));
  return by_pairs;
}

/// Delta+_com: roots whose upper closure is abelian.
inline RootSet commutative_roots(RootSystem const &rs)
{ return RootSet::filter(rs, [&](int k) { return is_abelian(rs, upper_closure(rs, k)); }); }

inline RootSet noncommutative_roots(RootSystem const &rs)
{ return RootSet::all(rs).minus(commutative_roots(rs)); }

struct ThetaHalves
{
  Coeffs floor;  ///< may be the zero vector (type A)
  Coeffs ceil;
};

/// Coefficientwise floor and ceiling of theta / 2.
inline ThetaHalves theta_floor_ceil(RootSystem const &rs)
{
  ThetaHalves h;
  for (int c : rs.coeffs(rs.theta())) {
    h.floor.push_back(c / 2);
    h.ceil.push_back(c - c / 2);
  }
  return h;
}

/// The Heisenberg ideal: roots not orthogonal to theta.
inline RootSet heisenberg(RootSystem const &rs)
{
  auto const &theta = rs.coeffs(rs.theta());
  return RootSet::filter(rs, [&](int k) { return rs.scaled_pairing(rs.coeffs(k), theta) != 0; });
}

/// Minimal elements of a set of roots.
inline RootSet min_elements(RootSystem const &rs, RootSet const &s)
{
  std::vector<int> r;
  for (int a : s)
    if (std::none_of(s.begin(), s.end(), [&](int b) { return b != a && leq(rs, b, a); }))
      r.push_back(a);
  return RootSet(std::move(r));
}

inline RootSet max_elements(RootSystem const &rs, RootSet const &s)
{
  std::vector<int> r;
  for (int a : s)
    if (std::none_of(s.begin(), s.end(), [&](int b) { return b != a && leq(rs, a, b); }))
      r.push_back(a);
  return RootSet(std::move(r));
}

/// max(Delta+ \ I).
inline RootSet max_of_complement(RootSystem const &rs, RootSet const &ideal)
{ return max_elements(rs, RootSet::all(rs).minus(ideal)); }

namespace detail
{

// Depth-first enumeration of upper ideals contained in `universe`, grown one
// maximal element of the complement at a time. With `abelian_only`, a root is
// added only when it sums to no root with the current members or itself.
inline std::vector<RootSet> enumerate_ideals(RootSystem const &rs, RootSet const &universe, bool abelian_only)
{
  std::unordered_set<RootSet, RootSetHash> seen{RootSet{}};
  std::vector<RootSet> stack{RootSet{}}, out;
  while (!stack.empty()) {
    RootSet cur = std::move(stack.back());
    stack.pop_back();
    out.push_back(cur);
    for (int g : universe) {
      if (cur.contains(g))
        continue;
      bool addable = true;
      for (int i = 0; i < rs.rank() && addable; ++i) {
        int up = rs.sum(g, rs.simple(i));
        addable = up < 0 || cur.contains(up);
      }
      if (!addable)
        continue;
      if (abelian_only) {
        if (rs.sum(g, g) >= 0)
          continue;
        if (std::any_of(cur.begin(), cur.end(), [&](int m) { return rs.sum(g, m) >= 0; }))
          continue;
      }
      RootSet next = cur.with(g);
      if (seen.insert(next).second)
        stack.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// All abelian ideals including the empty one, in canonical order. The search
/// is restricted to commutative roots, which contain every abelian ideal.
inline std::vector<RootSet> enumerate_abelian(RootSystem const &rs)
{ return detail::enumerate_ideals(rs, commutative_roots(rs), true); }

/// All upper ideals including the empty one, in canonical order.
inline std::vector<RootSet> enumerate_upper_ideals(RootSystem const &rs)
{ return detail::enumerate_ideals(rs, RootSet::all(rs), false); }

/// {theta} u {theta - gamma : gamma in N(w_mu)}, or nullopt when some
/// theta - gamma is not a positive root.
inline std::optional<RootSet> weyl_min_ideal(RootSystem const &rs, LongRootOrbit const &orbit, int mu,
                                             InversionConvention conv = kInversionConvention)
{
  auto w = minimal_word(rs, orbit, mu);
  std::vector<int> ids{rs.theta()};
  for (int g : inversion_set(rs, w, conv)) {
    auto d = rs.index_of(subtract(rs.coeffs(rs.theta()), rs.coeffs(g)));
    if (!d)
      return std::nullopt;
    ids.push_back(*d);
  }
  return RootSet(std::move(ids));
}

/// One cell Ab_mu of the partition of nonempty abelian ideals.
struct TauCell
{
  int mu = -1;
  std::vector<RootSet> members;  ///< canonical order
  RootSet min;                   ///< inclusion-minimum found among members
  RootSet max;                   ///< inclusion-maximum found among members
  RootSet formula_min;           ///< {theta} u {theta - N(w_mu)}
};

struct TauPartition
{
  std::vector<TauCell> cells;  ///< ordered by mu

  TauCell const &cell(int mu) const
  {
    for (auto const &c : cells)
      if (c.mu == mu)
        return c;
    throw std::invalid_argument("no tau cell for root " + std::to_string(mu));
  }

  /// tau(I) for a nonempty abelian ideal I.
  int tau(RootSet const &ideal) const
  {
    for (auto const &c : cells)
      if (std::find(c.members.begin(), c.members.end(), ideal) != c.members.end())
        return c.mu;
    throw std::invalid_argument("ideal is not a nonempty abelian ideal");
  }
};

namespace detail
{

inline std::string describe(RootSystem const &rs, RootSet const &s)
{
  std::string out = "{";
  bool first = true;
  for (int id : s) {
    if (!first)
      out += ",";
    first = false;
    out += format_coeffs(rs.coeffs(id));
  }
  return out + "}";
}

inline RootSet unique_extreme(RootSystem const &rs, std::vector<RootSet> const &members, bool minimum, int mu)
{
  std::vector<RootSet const *> extremes;
  for (auto const &a : members) {
    bool extreme = std::none_of(members.begin(), members.end(), [&](RootSet const &b) {
      return !(b == a) && (minimum ? b.subset_of(a) : a.subset_of(b));
    });
    if (extreme)
      extremes.push_back(&a);
  }
  if (extremes.size() != 1)
    throw TheoremViolation(std::string("tau cell without unique ") + (minimum ? "minimum" : "maximum"),
                           "mu=" + format_coeffs(rs.coeffs(mu)) + " has " + std::to_string(extremes.size()));
  return *extremes.front();
}

} // namespace detail

/// Partitions the nonempty abelian ideals by I |-> the long root mu with
/// I n h = I(mu)_min. I(mu)_min is identified as the abelian ideal inside h
/// equal to the Weyl-formula set for mu; the cell minimum must coincide.
inline TauPartition tau_partition(RootSystem const &rs, std::vector<RootSet> const &abelian)
{
  RootSet heis = heisenberg(rs);
  std::vector<RootSet> inside_h;
  for (auto const &I : abelian)
    if (!I.empty() && I.subset_of(heis))
      inside_h.push_back(I);

  LongRootOrbit orbit(rs);
  auto longs = rs.long_positive_roots();
  if (inside_h.size() != longs.size())
    throw TheoremViolation("abelian ideals inside h are not in bijection with long positive roots",
                           std::to_string(inside_h.size()) + " ideals vs " + std::to_string(longs.size()) +
                               " long roots");

  TauPartition part;
  std::map<RootSet, std::size_t> by_min;
  for (int mu : longs) {
    auto f = weyl_min_ideal(rs, orbit, mu);
    if (!f || std::find(inside_h.begin(), inside_h.end(), *f) == inside_h.end())
      throw TheoremViolation("Weyl-formula set is not an abelian ideal inside h",
                             "mu=" + format_coeffs(rs.coeffs(mu)));
    if (!by_min.emplace(*f, part.cells.size()).second)
      throw TheoremViolation("two long roots share I(mu)_min", "mu=" + format_coeffs(rs.coeffs(mu)));
    TauCell cell;
    cell.mu = mu;
    cell.formula_min = *f;
    part.cells.push_back(std::move(cell));
  }

  for (auto const &I : abelian) {
    if (I.empty())
      continue;
    auto it = by_min.find(I.intersect(heis));
    if (it == by_min.end())
      throw TheoremViolation("abelian ideal matches no tau cell", detail::describe(rs, I));
    part.cells[it->second].members.push_back(I);
  }

  for (auto &cell : part.cells) {
    std::sort(cell.members.begin(), cell.members.end());
    cell.min = detail::unique_extreme(rs, cell.members, true, cell.mu);
    cell.max = detail::unique_extreme(rs, cell.members, false, cell.mu);
    if (!(cell.min == cell.formula_min))
      throw TheoremViolation("cell minimum differs from the Weyl-formula I(mu)_min",
                             "mu=" + format_coeffs(rs.coeffs(cell.mu)));
  }
  return part;
}

inline TauPartition tau_partition(RootSystem const &rs)
{ return tau_partition(rs, enumerate_abelian(rs)); }

/// Maps each long simple index alpha to I(alpha)_max, after checking that
/// these are exactly the inclusion-maximal abelian ideals.
inline std::map<int, RootSet> maximal_abelian_ideals(RootSystem const &rs, TauPartition const &part,
                                                     std::vector<RootSet> const &abelian)
{
  std::map<int, RootSet> out;
  std::vector<RootSet> expected;
  for (int a : rs.simple_long()) {
    out.emplace(a, part.cell(rs.simple(a)).max);
    expected.push_back(out.at(a));
  }
  std::vector<RootSet> maximal;
  for (auto const &I : abelian)
    if (std::none_of(abelian.begin(), abelian.end(),
                     [&](RootSet const &J) { return !(J == I) && I.subset_of(J); }))
      maximal.push_back(I);
  std::sort(expected.begin(), expected.end());
  std::sort(maximal.begin(), maximal.end());
  if (expected != maximal)
    throw TheoremViolation("maximal abelian ideals differ from {I(alpha)_max : alpha long simple}",
                           std::to_string(maximal.size()) + " maximal vs " + std::to_string(expected.size()));
  return out;
}

inline std::map<int, RootSet> maximal_abelian_ideals(RootSystem const &rs)
{
  auto ab = enumerate_abelian(rs);
  return maximal_abelian_ideals(rs, tau_partition(rs, ab), ab);
}

/// min(I(gamma)_min) = {w_gamma^{-1}(beta) + theta : beta simple, (beta, gamma^vee) = -1}.
/// For gamma = theta no simple root qualifies; the result is then {theta}.
inline RootSet min_via_coroot_criterion(RootSystem const &rs, LongRootOrbit const &orbit, int gamma)
{
  if (!rs.is_long_root(gamma))
    throw std::invalid_argument("min_via_coroot_criterion: root is not long");
  if (gamma == rs.theta())
    return RootSet{rs.theta()};
  auto w = minimal_word(rs, orbit, gamma);
  auto const n = static_cast<std::size_t>(rs.rank());
  std::vector<int> out;
  for (int b = 0; b < rs.rank(); ++b) {
    if (coroot_pairing(rs, unit(n, b), rs.coeffs(gamma)) != Rational(-1))
      continue;
    Coeffs v = add(apply_inverse(rs, w, unit(n, b)), rs.coeffs(rs.theta()));
    auto id = rs.index_of(v);
    if (!id)
      throw TheoremViolation("w^{-1}(beta) + theta is not a positive root", format_coeffs(v));
    out.push_back(*id);
  }
  return RootSet(std::move(out));
}

/// Determines which inversion-set convention makes the Weyl formula reproduce
/// the family of abelian ideals inside h, on the given validation systems.
/// Throws unless exactly one convention is consistent.
inline InversionConvention select_inversion_convention(std::vector<RootSystemType> const &validation)
{
  std::vector<InversionConvention> ok;
  for (auto conv : {InversionConvention::maps_to_negative, InversionConvention::inverse_maps_to_negative}) {
    bool good = true;
    for (auto t : validation) {
      auto rs = build(t);
      RootSet heis = heisenberg(rs);
      std::vector<RootSet> inside_h;
      for (auto const &I : enumerate_abelian(rs))
        if (!I.empty() && I.subset_of(heis))
          inside_h.push_back(I);
      LongRootOrbit orbit(rs);
      std::vector<RootSet> produced;
      for (int mu : rs.long_positive_roots()) {
        auto f = weyl_min_ideal(rs, orbit, mu, conv);
        if (!f || static_cast<int>(f->size()) != theta_distance(rs, rs.coeffs(mu)) + 1) {
          good = false;
          break;
        }
        produced.push_back(*f);
      }
      std::sort(produced.begin(), produced.end());
      std::sort(inside_h.begin(), inside_h.end());
      if (!good || produced != inside_h) {
        good = false;
        break;
      }
    }
    if (good)
      ok.push_back(conv);
  }
  if (ok.size() != 1)
    throw TheoremViolation("inversion-set convention not uniquely determined",
                           std::to_string(ok.size()) + " conventions consistent");
  return ok.front();
}

inline std::vector<RootSystemType> default_convention_validation_types()
{
  // A2 and B2 only have simple reflections as w_mu, which cannot separate the
  // conventions; A3 and B3 can.
  return {{Family::A, 2}, {Family::B, 2}, {Family::A, 3}, {Family::B, 3}};
}

} // namespace rootposet

#endif // ROOTPOSET_IDEALS_HPP
