#ifndef ROOTPOSET_NUMBERING_HPP
#define ROOTPOSET_NUMBERING_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "root_system.hpp"

namespace rootposet
{

/// Display numbering of simple roots. Internal computations always use
/// Bourbaki numbering.
///
/// The "paper" numbering follows the Onishchik-Vinberg tables: for E_n the
/// nodes 1..n-1 form the long row (long arm first, branch node, then the
/// two-node arm) and node n hangs below the branch node; for F4 the order is
/// reversed relative to Bourbaki (nodes 1, 2 short, 3, 4 long). It agrees with
/// Bourbaki for A, B, C, D and G.
enum class Numbering { bourbaki, paper };

inline std::string to_string(Numbering n)
{ return n == Numbering::paper ? "paper" : "bourbaki"; }

inline Numbering parse_numbering(std::string_view s)
{
  if (s == "paper")
    return Numbering::paper;
  if (s == "bourbaki")
    return Numbering::bourbaki;
  throw std::invalid_argument("unknown numbering '" + std::string(s) + "' (expected bourbaki or paper)");
}

/// Reads ROOTPOSET_NUMBERING; defaults to Numbering::paper.
inline Numbering numbering_from_env()
{
  char const *v = std::getenv("ROOTPOSET_NUMBERING");
  if (v == nullptr || *v == '\0')
    return Numbering::paper;
  return parse_numbering(v);
}

/// perm[p] = Bourbaki index of the simple root displayed at position p.
inline std::vector<int> display_permutation(RootSystemType t, Numbering n)
{
  std::vector<int> perm(static_cast<std::size_t>(t.rank));
  for (int i = 0; i < t.rank; ++i)
    perm[static_cast<std::size_t>(i)] = i;
  if (n == Numbering::bourbaki)
    return perm;
  if (t.family == Family::E) {
    switch (t.rank) {
    case 6: return {0, 2, 3, 4, 5, 1};
    case 7: return {6, 5, 4, 3, 2, 0, 1};
    case 8: return {7, 6, 5, 4, 3, 2, 0, 1};
    default: break;
    }
  }
  if (t.family == Family::F)
    return {3, 2, 1, 0};
  return perm;
}

inline Coeffs to_display(RootSystemType t, std::span<int const> c, Numbering n)
{
  auto perm = display_permutation(t, n);
  Coeffs d(c.size());
  for (std::size_t p = 0; p < perm.size(); ++p)
    d[p] = c[static_cast<std::size_t>(perm[p])];
  return d;
}

inline Coeffs from_display(RootSystemType t, std::span<int const> d, Numbering n)
{
  auto perm = display_permutation(t, n);
  if (d.size() != perm.size())
    throw std::invalid_argument("coefficient vector has length " + std::to_string(d.size()) + ", expected " +
                                std::to_string(perm.size()));
  Coeffs c(d.size());
  for (std::size_t p = 0; p < perm.size(); ++p)
    c[static_cast<std::size_t>(perm[p])] = d[p];
  return c;
}

/// 0-based display position of Bourbaki simple index i.
inline int simple_to_display(RootSystemType t, int i, Numbering n)
{
  auto perm = display_permutation(t, n);
  for (std::size_t p = 0; p < perm.size(); ++p)
    if (perm[p] == i)
      return static_cast<int>(p);
  throw std::out_of_range("simple root index out of range");
}

inline int simple_from_display(RootSystemType t, int p, Numbering n)
{ return display_permutation(t, n).at(static_cast<std::size_t>(p)); }

} // namespace rootposet

#endif // ROOTPOSET_NUMBERING_HPP
