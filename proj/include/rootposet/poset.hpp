#ifndef ROOTPOSET_POSET_HPP
#define ROOTPOSET_POSET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"
#include "root_set.hpp"
#include "root_system.hpp"

namespace rootposet
{

/// mu <= nu iff nu - mu is a non-negative combination of simple roots.
inline bool leq(std::span<int const> mu, std::span<int const> nu)
{
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > nu[i])
      return false;
  return true;
}

inline bool leq(RootSystem const &rs, int a, int b)
{ return leq(rs.coeffs(a), rs.coeffs(b)); }

inline bool leq(Root const &mu, Root const &nu)
{ return leq(mu.coeffs(), nu.coeffs()); }

inline std::vector<int> support(std::span<int const> c)
{
  std::vector<int> s;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      s.push_back(static_cast<int>(i));
  return s;
}

inline Coeffs coeff_max(std::span<int const> a, std::span<int const> b)
{
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::max(a[i], b[i]);
  return r;
}

inline Coeffs coeff_min(std::span<int const> a, std::span<int const> b)
{
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::min(a[i], b[i]);
  return r;
}

/// Least upper bound. When supp(a) u supp(b) is connected this is the
/// coefficientwise maximum; otherwise it is a + (sum over the Dynkin chain
/// joining the two supports) + b.
inline int join(RootSystem const &rs, int a, int b)
{
  auto const &ca = rs.coeffs(a);
  auto const &cb = rs.coeffs(b);
  Coeffs candidate;
  auto sa = support(ca), sb = support(cb);
  std::vector<int> both = sa;
  both.insert(both.end(), sb.begin(), sb.end());
  if (rs.connected(both)) {
    candidate = coeff_max(ca, cb);
  } else {
    std::vector<int> best;
    bool found = false;
    for (int u : sa)
      for (int v : sb) {
        auto chain = rs.path_interior(u, v);
        if (!found || chain.size() < best.size()) {
          best = std::move(chain);
          found = true;
        }
      }
    candidate = add(ca, cb);
    for (int node : best)
      ++candidate[static_cast<std::size_t>(node)];
  }
  auto id = rs.index_of(candidate);
  if (!id)
    throw TheoremViolation("join formula produced a non-root", "pair (" + std::to_string(a) + ", " +
                                                                 std::to_string(b) + ")");
  return *id;
}

inline Root join(RootSystem const &rs, Root const &a, Root const &b)
{ return rs.root(join(rs, *rs.index_of(a.coeffs()), *rs.index_of(b.coeffs()))); }

/// Greatest lower bound: exists iff the supports meet, and is then the
/// coefficientwise minimum.
inline std::optional<int> meet(RootSystem const &rs, int a, int b)
{
  auto const &ca = rs.coeffs(a);
  auto const &cb = rs.coeffs(b);
  Coeffs m = coeff_min(ca, cb);
  if (is_zero(m))
    return std::nullopt;
  auto id = rs.index_of(m);
  if (!id)
    throw TheoremViolation("meet formula produced a non-root", "pair (" + std::to_string(a) + ", " +
                                                                 std::to_string(b) + ")");
  return id;
}

inline std::optional<Root> meet(RootSystem const &rs, Root const &a, Root const &b)
{
  auto m = meet(rs, *rs.index_of(a.coeffs()), *rs.index_of(b.coeffs()));
  if (!m)
    return std::nullopt;
  return rs.root(*m);
}

/// Brute-force least upper bound: the common upper bound below all others.
/// Shipped alongside the closed form so results can be certified.
inline std::optional<int> join_oracle(RootSystem const &rs, int a, int b)
{
  std::vector<int> ub;
  for (std::size_t k = 0; k < rs.size(); ++k)
    if (leq(rs, a, static_cast<int>(k)) && leq(rs, b, static_cast<int>(k)))
      ub.push_back(static_cast<int>(k));
  for (int c : ub) {
    bool least = true;
    for (int d : ub)
      if (!leq(rs, c, d)) {
        least = false;
        break;
      }
    if (least)
      return c;
  }
  return std::nullopt;
}

/// Brute-force greatest lower bound.
inline std::optional<int> meet_oracle(RootSystem const &rs, int a, int b)
{
  std::vector<int> lb;
  for (std::size_t k = 0; k < rs.size(); ++k)
    if (leq(rs, static_cast<int>(k), a) && leq(rs, static_cast<int>(k), b))
      lb.push_back(static_cast<int>(k));
  for (int c : lb) {
    bool greatest = true;
    for (int d : lb)
      if (!leq(rs, d, c)) {
        greatest = false;
        break;
      }
    if (greatest)
      return c;
  }
  return std::nullopt;
}

struct Covers
{
  RootSet upper;
  RootSet lower;
};

inline Covers covers(RootSystem const &rs, int id)
{
  std::vector<int> up, down;
  for (int i = 0; i < rs.rank(); ++i) {
    int s = rs.sum(id, rs.simple(i));
    if (s >= 0)
      up.push_back(s);
    Coeffs c = rs.coeffs(id);
    --c[static_cast<std::size_t>(i)];
    if (auto d = rs.index_of(c))
      down.push_back(*d);
  }
  return {RootSet(std::move(up)), RootSet(std::move(down))};
}

/// An induced subposet of the positive roots, optionally with the zero vector
/// adjoined as a formal bottom element (position 0). The referenced root
/// system must outlive the view.
class PosetView
{
public:
  PosetView(RootSystem const &rs, RootSet const &members, bool formal_bottom = false)
  : rs_(&rs), formal_bottom_(formal_bottom)
  {
    if (formal_bottom) {
      elements_.emplace_back(static_cast<std::size_t>(rs.rank()), 0);
      ids_.push_back(-1);
    }
    for (int id : members) {
      elements_.push_back(rs.coeffs(id));
      ids_.push_back(id);
    }
    std::size_t n = elements_.size();
    up_.assign(n, boost::dynamic_bitset<>(n));
    down_.assign(n, boost::dynamic_bitset<>(n));
    heights_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      heights_[a] = height(elements_[a]);
      for (std::size_t b = 0; b < n; ++b)
        if (rootposet::leq(elements_[a], elements_[b])) {
          up_[a].set(b);
          down_[b].set(a);
        }
    }
  }

  RootSystem const &system() const { return *rs_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool has_formal_bottom() const { return formal_bottom_; }
  Coeffs const &element(std::size_t k) const { return elements_.at(k); }

  /// Root id of position k, or nullopt for the formal bottom.
  std::optional<int> root_id(std::size_t k) const
  {
    int id = ids_.at(k);
    if (id < 0)
      return std::nullopt;
    return id;
  }

  int height_of(std::size_t k) const { return heights_[k]; }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  boost::dynamic_bitset<> const &up_set(std::size_t a) const { return up_[a]; }
  boost::dynamic_bitset<> const &down_set(std::size_t a) const { return down_[a]; }

  /// Cover relations of the induced order, as (lower, upper) position pairs.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const
  {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (a == b || !leq(a, b))
          continue;
        auto between = up_[a] & down_[b];
        if (between.count() == 2)
          edges.emplace_back(a, b);
      }
    return edges;
  }

private:
  RootSystem const *rs_;
  bool formal_bottom_;
  std::vector<Coeffs> elements_;
  std::vector<int> ids_;
  std::vector<int> heights_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<boost::dynamic_bitset<>> down_;
};

struct LatticeCheck
{
  enum class Outcome { modular, no_join, no_meet, not_modular };

  Outcome outcome = Outcome::modular;
  /// View positions: the offending pair, or (x, a, b) violating
  /// x v (a ^ b) = (x v a) ^ b with x <= b.
  std::vector<std::size_t> witness;

  bool ok() const { return outcome == Outcome::modular; }
  bool is_lattice() const { return outcome == Outcome::modular || outcome == Outcome::not_modular; }
};

namespace detail
{

// Extreme element of a bound set, or -1 when the bound set has no least /
// greatest member.
inline long extreme_of(PosetView const &v, boost::dynamic_bitset<> const &bounds, bool least)
{
  if (bounds.none())
    return -1;
  std::size_t best = bounds.find_first();
  for (auto k = bounds.find_next(best); k != boost::dynamic_bitset<>::npos; k = bounds.find_next(k))
    if (least ? v.height_of(k) < v.height_of(best) : v.height_of(k) > v.height_of(best))
      best = k;
  auto const &reach = least ? v.up_set(best) : v.down_set(best);
  return reach == bounds ? static_cast<long>(best) : -1;
}

} // namespace detail

/// Checks that the view is a lattice satisfying the modular law, by an
/// exhaustive sweep over all pairs and all triples.
inline LatticeCheck is_modular_lattice(PosetView const &v)
{
  std::size_t n = v.size();
  std::vector<std::uint16_t> jt(n * n), mt(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      long j = detail::extreme_of(v, v.up_set(a) & v.up_set(b), true);
      if (j < 0)
        return {LatticeCheck::Outcome::no_join, {a, b}};
      long m = detail::extreme_of(v, v.down_set(a) & v.down_set(b), false);
      if (m < 0)
        return {LatticeCheck::Outcome::no_meet, {a, b}};
      jt[a * n + b] = jt[b * n + a] = static_cast<std::uint16_t>(j);
      mt[a * n + b] = mt[b * n + a] = static_cast<std::uint16_t>(m);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < n; ++b) {
      if (!v.leq(x, b))
        continue;
      for (std::size_t a = 0; a < n; ++a)
        if (jt[x * n + mt[a * n + b]] != mt[jt[x * n + a] * n + b])
          return {LatticeCheck::Outcome::not_modular, {x, a, b}};
    }
  return {};
}

/// All positive roots between a and b inclusive.
inline PosetView interval(RootSystem const &rs, int a, int b)
{
  if (!leq(rs, a, b))
    throw std::invalid_argument("interval: lower end is not below upper end");
  return PosetView(rs, RootSet::filter(rs, [&](int k) { return leq(rs, a, k) && leq(rs, k, b); }));
}

/// Order-isomorphism test against the Boolean lattice of subsets of a k-set,
/// by exhaustive search. Supports k <= 3.
inline bool is_boolean_cube(PosetView const &v, int k)
{
  if (k < 0 || k > 3)
    throw std::invalid_argument("is_boolean_cube: only 0 <= k <= 3 is supported");
  std::size_t const n = std::size_t{1} << k;
  if (v.size() != n)
    return false;
  std::vector<long> assign(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t s, std::size_t e) {
    for (std::size_t t = 0; t < s; ++t) {
      auto et = static_cast<std::size_t>(assign[t]);
      if (v.leq(et, e) != ((t & s) == t))
        return false;
      if (v.leq(e, et) != ((t & s) == s))
        return false;
    }
    return true;
  };
  auto search = [&](auto &self, std::size_t s) -> bool {
    if (s == n)
      return true;
    for (std::size_t e = 0; e < n; ++e) {
      if (used[e] || !consistent(s, e))
        continue;
      used[e] = 1;
      assign[s] = static_cast<long>(e);
      if (self(self, s + 1))
        return true;
      used[e] = 0;
    }
    assign[s] = -1;
    return false;
  };
  return search(search, 0);
}

} // namespace rootposet

#endif // ROOTPOSET_POSET_HPP
