#ifndef ROOTPOSET_WEYL_HPP
#define ROOTPOSET_WEYL_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "root_set.hpp"
#include "root_system.hpp"

namespace rootposet
{

/// (v, alpha_i^vee) for an element v of the root lattice.
inline int coroot_coefficient(RootSystem const &rs, std::span<int const> v, int i)
{
  int s = 0;
  for (int j = 0; j < rs.rank(); ++j)
    s += v[static_cast<std::size_t>(j)] * rs.cartan(j, i);
  return s;
}

/// s_i(v) = v - (v, alpha_i^vee) alpha_i.
inline Coeffs reflect(RootSystem const &rs, int i, std::span<int const> v)
{
  if (i < 0 || i >= rs.rank())
    throw std::out_of_range("reflect: simple root index out of range");
  Coeffs r(v.begin(), v.end());
  r[static_cast<std::size_t>(i)] -= coroot_coefficient(rs, v, i);
  return r;
}

/// A word in the simple reflections. letters = [i_k, ..., i_1] denotes
/// s_{i_k} ... s_{i_1}; the rightmost letter acts first.
struct WeylWord
{
  std::vector<int> letters;
  Coeffs target;

  std::size_t length() const { return letters.size(); }
};

inline Coeffs apply(RootSystem const &rs, WeylWord const &w, std::span<int const> v)
{
  Coeffs r(v.begin(), v.end());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = reflect(rs, *it, r);
  return r;
}

inline Coeffs apply_inverse(RootSystem const &rs, WeylWord const &w, std::span<int const> v)
{
  Coeffs r(v.begin(), v.end());
  for (int i : w.letters)
    r = reflect(rs, i, r);
  return r;
}

/// A root vector is negative when its nonzero coefficients are negative.
inline bool is_negative(std::span<int const> v)
{
  for (int x : v)
    if (x != 0)
      return x < 0;
  return false;
}

/// The W-orbit of theta (all long roots, both signs) as a graph whose edges
/// are simple reflections, explored breadth-first from theta. Only this orbit
/// is materialised, never the group.
class LongRootOrbit
{
public:
  explicit LongRootOrbit(RootSystem const &rs)
  {
    nodes_.push_back(rs.coeffs(rs.theta()));
    parent_.push_back(-1);
    letter_.push_back(-1);
    dist_.push_back(0);
    index_.emplace(nodes_[0], 0);
    for (std::size_t head = 0; head < nodes_.size(); ++head)
      for (int i = 0; i < rs.rank(); ++i) {
        Coeffs next = reflect(rs, i, nodes_[head]);
        if (index_.contains(next))
          continue;
        index_.emplace(next, static_cast<int>(nodes_.size()));
        nodes_.push_back(std::move(next));
        parent_.push_back(static_cast<int>(head));
        letter_.push_back(i);
        dist_.push_back(dist_[head] + 1);
      }
  }

  std::size_t size() const { return nodes_.size(); }

  int distance(Coeffs const &mu) const { return dist_.at(node(mu)); }

  /// Letters of a minimal word w with w(theta) = mu.
  std::vector<int> word_to(Coeffs const &mu) const
  {
    std::vector<int> letters;
    for (auto k = static_cast<int>(node(mu)); parent_[static_cast<std::size_t>(k)] >= 0;
         k = parent_[static_cast<std::size_t>(k)])
      letters.push_back(letter_[static_cast<std::size_t>(k)]);
    return letters;
  }

private:
  std::size_t node(Coeffs const &mu) const
  {
    auto it = index_.find(mu);
    if (it == index_.end())
      throw std::invalid_argument("vector is not in the W-orbit of theta");
    return static_cast<std::size_t>(it->second);
  }

  std::vector<Coeffs> nodes_;
  std::vector<int> parent_, letter_, dist_;
  std::unordered_map<Coeffs, int, CoeffsHash> index_;
};

/// The minimal-length element w_mu with w_mu(theta) = mu, for a long positive
/// root mu. Its length is certified against (rho, theta^vee - mu^vee).
inline WeylWord minimal_word(RootSystem const &rs, LongRootOrbit const &orbit, int mu)
{
  if (!rs.is_long_root(mu))
    throw std::invalid_argument("minimal_word: root " + std::to_string(mu) + " is not long");
  WeylWord w{orbit.word_to(rs.coeffs(mu)), rs.coeffs(mu)};
  if (static_cast<int>(w.length()) != theta_distance(rs, rs.coeffs(mu)))
    throw std::logic_error("minimal_word: BFS length disagrees with (rho, theta^vee - mu^vee)");
  if (apply(rs, w, rs.coeffs(rs.theta())) != w.target)
    throw std::logic_error("minimal_word: word does not take theta to the target");
  return w;
}

inline WeylWord minimal_word(RootSystem const &rs, int mu)
{ return minimal_word(rs, LongRootOrbit(rs), mu); }

enum class InversionConvention
{
  maps_to_negative,          ///< {gamma > 0 : w(gamma) < 0}
  inverse_maps_to_negative,  ///< {gamma > 0 : w^{-1}(gamma) < 0}
};

/// The convention under which I(mu)_min = {theta} u {theta - gamma : gamma in N(w_mu)}.
/// select_inversion_convention() in ideals.hpp re-derives it from enumerated
/// ideals; tests assert the two agree.
inline constexpr InversionConvention kInversionConvention = InversionConvention::maps_to_negative;

inline RootSet inversion_set(RootSystem const &rs, WeylWord const &w,
                             InversionConvention conv = kInversionConvention)
{
  return RootSet::filter(rs, [&](int id) {
    auto image = conv == InversionConvention::maps_to_negative ? apply(rs, w, rs.coeffs(id))
                                                               : apply_inverse(rs, w, rs.coeffs(id));
    return is_negative(image);
  });
}

} // namespace rootposet

#endif // ROOTPOSET_WEYL_HPP
