#ifndef ROOTPOSET_ROOT_SET_HPP
#define ROOTPOSET_ROOT_SET_HPP

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "root_system.hpp"

namespace rootposet
{

/// A set of positive roots of one root system, stored as sorted root ids.
/// Because ids follow the canonical root order, iteration is canonical.
class RootSet
{
public:
  using const_iterator = std::vector<int>::const_iterator;

  RootSet() = default;

  explicit RootSet(std::vector<int> ids)
  : ids_(std::move(ids))
  {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  RootSet(std::initializer_list<int> ids)
  : RootSet(std::vector<int>(ids))
  {}

  static RootSet all(RootSystem const &rs)
  {
    std::vector<int> v(rs.size());
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = static_cast<int>(k);
    return RootSet(std::move(v));
  }

  template<typename Pred>
  static RootSet filter(RootSystem const &rs, Pred pred)
  {
    std::vector<int> v;
    for (std::size_t k = 0; k < rs.size(); ++k)
      if (pred(static_cast<int>(k)))
        v.push_back(static_cast<int>(k));
    return RootSet(std::move(v));
  }

  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::vector<int> const &ids() const { return ids_; }
  int front() const { return ids_.front(); }
  int back() const { return ids_.back(); }

  bool contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

  bool subset_of(RootSet const &other) const
  { return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end()); }

  RootSet unite(RootSet const &o) const
  {
    RootSet r;
    std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  RootSet intersect(RootSet const &o) const
  {
    RootSet r;
    std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  RootSet minus(RootSet const &o) const
  {
    RootSet r;
    std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  RootSet with(int id) const
  {
    auto v = ids_;
    v.push_back(id);
    return RootSet(std::move(v));
  }

  RootSet without(int id) const
  {
    RootSet r = *this;
    r.ids_.erase(std::remove(r.ids_.begin(), r.ids_.end(), id), r.ids_.end());
    return r;
  }

  friend bool operator==(RootSet const &, RootSet const &) = default;

  /// Canonical order of sets: by size, then lexicographically by members.
  friend bool operator<(RootSet const &a, RootSet const &b)
  {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.ids_ < b.ids_;
  }

private:
  std::vector<int> ids_;
};

struct RootSetHash
{
  std::size_t operator()(RootSet const &s) const
  { return boost::hash_range(s.begin(), s.end()); }
};

} // namespace rootposet

#endif // ROOTPOSET_ROOT_SET_HPP
