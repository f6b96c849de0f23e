#ifndef ROOTPOSET_ROOT_SYSTEM_HPP
#define ROOTPOSET_ROOT_SYSTEM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>
#include <boost/rational.hpp>

namespace rootposet
{

/// Coefficient vector over the simple roots. Also used for elements of the
/// root lattice that are not roots (zero, negative roots, 2*rho).
using Coeffs = std::vector<int>;
using Rational = boost::rational<long long>;

struct CoeffsHash
{
  std::size_t operator()(Coeffs const &c) const
  { return boost::hash_range(c.begin(), c.end()); }
};

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f)
{ return "ABCDEFG"[static_cast<int>(f)]; }

struct RootSystemType
{
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(RootSystemType const &, RootSystemType const &) = default;

  std::string name() const
  { return std::string(1, family_letter(family)) + std::to_string(rank); }

  bool simply_laced() const
  { return family == Family::A || family == Family::D || family == Family::E; }

  /// Empty string when admissible, otherwise the violated constraint.
  std::string admissibility_error() const
  {
    switch (family) {
    case Family::A: return rank >= 1 ? "" : "type A requires rank >= 1";
    case Family::B: return rank >= 2 ? "" : "type B requires rank >= 2";
    case Family::C: return rank >= 2 ? "" : "type C requires rank >= 2";
    case Family::D: return rank >= 4 ? "" : "type D requires rank >= 4";
    case Family::E:
      return (rank >= 6 && rank <= 8) ? "" : "type E requires rank in {6, 7, 8}";
    case Family::F: return rank == 4 ? "" : "type F requires rank 4";
    case Family::G: return rank == 2 ? "" : "type G requires rank 2";
    }
    return "unknown family";
  }

  /// Parses tokens such as "E8", "d4", "A10".
  static RootSystemType parse(std::string_view token)
  {
    if (token.size() < 2)
      throw std::invalid_argument("malformed root system type '" + std::string(token) + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (letter < 'A' || letter > 'G')
      throw std::invalid_argument("unknown root system family in '" + std::string(token) + "'");
    int rank = 0;
    for (char c : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed rank in '" + std::string(token) + "'");
      rank = rank * 10 + (c - '0');
      if (rank > 64)
        throw std::invalid_argument("rank too large in '" + std::string(token) + "'");
    }
    RootSystemType t{static_cast<Family>(letter - 'A'), rank};
    if (auto err = t.admissibility_error(); !err.empty())
      throw std::invalid_argument(err);
    return t;
  }
};

/// A positive root: non-negative, not all zero.
class Root
{
public:
  explicit Root(Coeffs c)
  : coeffs_(std::move(c))
  {
    if (coeffs_.empty())
      throw std::invalid_argument("root with empty coefficient vector");
    bool positive = false;
    for (int x : coeffs_) {
      if (x < 0)
        throw std::invalid_argument("root with a negative coefficient");
      positive = positive || x > 0;
    }
    if (!positive)
      throw std::invalid_argument("root with all coefficients zero");
  }

  Coeffs const &coeffs() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }

  int height() const
  {
    int h = 0;
    for (int x : coeffs_)
      h += x;
    return h;
  }

  int height_at(std::size_t i) const { return coeffs_.at(i); }

  std::vector<int> support() const
  {
    std::vector<int> s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0)
        s.push_back(static_cast<int>(i));
    return s;
  }

  friend bool operator==(Root const &, Root const &) = default;

private:
  Coeffs coeffs_;
};

inline int height(std::span<int const> c)
{
  int h = 0;
  for (int x : c)
    h += x;
  return h;
}

/// Canonical order: by height, then larger coefficient vectors first, so that
/// the simple roots appear as alpha_1, ..., alpha_n.
inline bool canonical_less(std::span<int const> a, std::span<int const> b)
{
  int ha = height(a), hb = height(b);
  if (ha != hb)
    return ha < hb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_nonnegative(std::span<int const> c)
{ return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }); }

inline bool is_zero(std::span<int const> c)
{ return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }); }

inline Coeffs add(std::span<int const> a, std::span<int const> b)
{
  Coeffs r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

inline Coeffs subtract(std::span<int const> a, std::span<int const> b)
{
  Coeffs r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

inline Coeffs negate(std::span<int const> a)
{
  Coeffs r(a.begin(), a.end());
  for (int &x : r)
    x = -x;
  return r;
}

inline std::string format_coeffs(std::span<int const> c)
{
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

inline Coeffs unit(std::size_t rank, int i)
{
  Coeffs r(rank, 0);
  r.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

class RootSystem;
RootSystem build(RootSystemType type);

/// A finite irreducible root system in Bourbaki numbering.
///
/// The inner product is stored as an integer Gram matrix scaled by a common
/// denominator, normalised so that long roots have squared length 2. Positive
/// roots are kept in canonical order and addressed by their position in it.
class RootSystem
{
public:
  RootSystemType type() const { return type_; }
  std::string name() const { return type_.name(); }
  int rank() const { return type_.rank; }

  std::size_t size() const { return roots_.size(); }
  std::vector<Root> const &positive_roots() const { return roots_; }
  Root const &root(int id) const { return roots_.at(static_cast<std::size_t>(id)); }
  Coeffs const &coeffs(int id) const { return root(id).coeffs(); }

  std::optional<int> index_of(std::span<int const> c) const
  {
    if (c.size() != static_cast<std::size_t>(rank()))
      return std::nullopt;
    auto it = index_.find(Coeffs(c.begin(), c.end()));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  bool is_positive_root(std::span<int const> c) const { return index_of(c).has_value(); }

  /// Id of root(a) + root(b), or -1 when the sum is not a root.
  int sum(int a, int b) const
  { return sums_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }

  int simple(int i) const { return simple_ids_.at(static_cast<std::size_t>(i)); }
  int theta() const { return theta_id_; }

  /// Integer Gram entry; (alpha_i, alpha_j) = gram(i, j) / denominator().
  int gram(int i, int j) const { return gram_[flat(i, j)]; }
  int denominator() const { return denom_; }

  /// <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  int cartan(int i, int j) const { return 2 * gram(i, j) / gram(j, j); }

  Rational norm2_simple(int i) const { return Rational(gram(i, i), denom_); }

  /// Scaled squared length v^T G v (equal to denominator() * (v, v)).
  long long scaled_norm2(std::span<int const> v) const { return scaled_pairing(v, v); }

  long long scaled_pairing(std::span<int const> u, std::span<int const> v) const
  {
    long long s = 0;
    int n = rank();
    for (int i = 0; i < n; ++i) {
      if (u[static_cast<std::size_t>(i)] == 0)
        continue;
      long long row = 0;
      for (int j = 0; j < n; ++j)
        row += static_cast<long long>(gram(i, j)) * v[static_cast<std::size_t>(j)];
      s += row * u[static_cast<std::size_t>(i)];
    }
    return s;
  }

  bool is_long(std::span<int const> v) const { return scaled_norm2(v) == 2LL * denom_; }
  bool is_long_root(int id) const { return long_[static_cast<std::size_t>(id)]; }
  bool is_long_simple(int i) const { return gram(i, i) == 2 * denom_; }

  /// Long simple roots (indices into Pi), ascending.
  std::vector<int> const &simple_long() const { return simple_long_; }
  std::vector<int> long_positive_roots() const
  {
    std::vector<int> r;
    for (std::size_t k = 0; k < size(); ++k)
      if (long_[k])
        r.push_back(static_cast<int>(k));
    return r;
  }

  /// 2 * rho in simple-root coordinates.
  Coeffs const &rho2() const { return rho2_; }
  int coxeter() const { return coxeter_; }
  int dual_coxeter() const { return dual_coxeter_; }

  bool adjacent(int i, int j) const { return i != j && gram(i, j) != 0; }
  std::vector<int> const &neighbors(int i) const { return neighbors_.at(static_cast<std::size_t>(i)); }
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

  /// True when the given set of simple indices is connected in the Dynkin diagram.
  bool connected(std::span<int const> nodes) const
  {
    if (nodes.empty())
      return true;
    std::vector<char> in(static_cast<std::size_t>(rank()), 0), seen(in.size(), 0);
    for (int v : nodes)
      in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> stack{nodes.front()};
    seen[static_cast<std::size_t>(nodes.front())] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v))
        if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == std::set<int>(nodes.begin(), nodes.end()).size();
  }

  /// Nodes strictly inside the Dynkin path from node a to node b.
  std::vector<int> path_interior(int a, int b) const
  {
    std::vector<int> parent(static_cast<std::size_t>(rank()), -2);
    std::vector<int> queue{a};
    parent[static_cast<std::size_t>(a)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : neighbors(queue[head]))
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = queue[head];
          queue.push_back(w);
        }
    std::vector<int> path;
    for (int v = parent[static_cast<std::size_t>(b)]; v != a && v >= 0; v = parent[static_cast<std::size_t>(v)])
      path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }

private:
  friend RootSystem build(RootSystemType type);

  std::size_t flat(int i, int j) const
  { return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(j); }

  RootSystemType type_;
  int denom_ = 1;
  std::vector<int> gram_;
  std::vector<Root> roots_;
  std::unordered_map<Coeffs, int, CoeffsHash> index_;
  std::vector<int> sums_;
  std::vector<int> simple_ids_;
  std::vector<char> long_;
  std::vector<int> simple_long_;
  std::vector<std::vector<int>> neighbors_;
  int theta_id_ = -1;
  Coeffs rho2_;
  int coxeter_ = 0;
  int dual_coxeter_ = 0;
};

namespace detail
{

// Scaled Gram matrix (Bourbaki numbering) and its denominator.
inline std::pair<std::vector<int>, int> gram_matrix(RootSystemType t)
{
  int n = t.rank;
  std::vector<int> g(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int & { return g[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };
  auto link = [&](int i, int j, int v) { at(i, j) = v; at(j, i) = v; };
  int denom = 1;

  switch (t.family) {
  case Family::A:
    for (int i = 1; i <= n; ++i)
      at(i, i) = 2;
    for (int i = 1; i < n; ++i)
      link(i, i + 1, -1);
    break;
  case Family::B:
    denom = 2;
    for (int i = 1; i <= n; ++i)
      at(i, i) = i < n ? 4 : 2;
    for (int i = 1; i < n; ++i)
      link(i, i + 1, -2);
    break;
  case Family::C:
    denom = 2;
    for (int i = 1; i <= n; ++i)
      at(i, i) = i < n ? 2 : 4;
    for (int i = 1; i < n - 1; ++i)
      link(i, i + 1, -1);
    link(n - 1, n, -2);
    break;
  case Family::D:
    for (int i = 1; i <= n; ++i)
      at(i, i) = 2;
    for (int i = 1; i < n - 1; ++i)
      link(i, i + 1, -1);
    link(n - 2, n, -1);
    break;
  case Family::E:
    for (int i = 1; i <= n; ++i)
      at(i, i) = 2;
    link(1, 3, -1);
    link(2, 4, -1);
    for (int i = 3; i < n; ++i)
      link(i, i + 1, -1);
    break;
  case Family::F:
    denom = 2;
    at(1, 1) = 4; at(2, 2) = 4; at(3, 3) = 2; at(4, 4) = 2;
    link(1, 2, -2);
    link(2, 3, -2);
    link(3, 4, -1);
    break;
  case Family::G:
    denom = 3;
    at(1, 1) = 2;
    at(2, 2) = 6;
    link(1, 2, -3);
    break;
  }
  return {std::move(g), denom};
}

} // namespace detail

/// Constructs the positive roots by closure under addition of simple roots,
/// using alpha-strings: beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0,
/// where q is the largest integer with beta - q alpha_i a root.
inline RootSystem build(RootSystemType type)
{
  if (auto err = type.admissibility_error(); !err.empty())
    throw std::invalid_argument("inadmissible root system " + std::string(1, family_letter(type.family)) +
                                std::to_string(type.rank) + ": " + err);

  RootSystem rs;
  rs.type_ = type;
  std::tie(rs.gram_, rs.denom_) = detail::gram_matrix(type);
  int const n = type.rank;
  auto const un = static_cast<std::size_t>(n);

  std::set<Coeffs> known;
  std::vector<Coeffs> all, layer;
  for (int i = 0; i < n; ++i)
    layer.push_back(unit(un, i));
  while (!layer.empty()) {
    known.insert(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<Coeffs> next;
    for (auto const &beta : layer)
      for (int i = 0; i < n; ++i) {
        int q = 0;
        for (Coeffs t = beta;;) {
          --t[static_cast<std::size_t>(i)];
          if (t[static_cast<std::size_t>(i)] < 0 || !known.contains(t))
            break;
          ++q;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j)
          pairing += beta[static_cast<std::size_t>(j)] * rs.cartan(j, i);
        if (q - pairing > 0) {
          Coeffs up = beta;
          ++up[static_cast<std::size_t>(i)];
          next.insert(std::move(up));
        }
      }
    layer.assign(next.begin(), next.end());
  }

  std::sort(all.begin(), all.end(), [](Coeffs const &a, Coeffs const &b) { return canonical_less(a, b); });
  for (std::size_t k = 0; k < all.size(); ++k) {
    rs.index_.emplace(all[k], static_cast<int>(k));
    rs.roots_.emplace_back(all[k]);
  }

  std::size_t const m = all.size();
  rs.sums_.assign(m * m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (auto s = rs.index_of(add(all[a], all[b])))
        rs.sums_[a * m + b] = *s;

  for (int i = 0; i < n; ++i)
    rs.simple_ids_.push_back(*rs.index_of(unit(un, i)));

  rs.long_.resize(m);
  for (std::size_t k = 0; k < m; ++k)
    rs.long_[k] = rs.is_long(all[k]) ? 1 : 0;
  for (int i = 0; i < n; ++i)
    if (rs.is_long_simple(i))
      rs.simple_long_.push_back(i);

  rs.neighbors_.resize(un);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.adjacent(i, j))
        rs.neighbors_[static_cast<std::size_t>(i)].push_back(j);

  // The highest root is the last root in canonical order; uniqueness of the
  // maximum is asserted by callers that need it.
  rs.theta_id_ = static_cast<int>(m) - 1;

  rs.rho2_.assign(un, 0);
  for (auto const &c : all)
    for (std::size_t i = 0; i < un; ++i)
      rs.rho2_[i] += c[i];

  Coeffs const &theta = all.back();
  rs.coxeter_ = height(theta) + 1;
  // (rho, theta^vee) = (2 rho, theta) / (theta, theta).
  Rational rho_theta(rs.scaled_pairing(rs.rho2_, theta), rs.scaled_norm2(theta));
  if (rho_theta.denominator() != 1)
    throw std::logic_error("(rho, theta^vee) is not an integer");
  rs.dual_coxeter_ = static_cast<int>(rho_theta.numerator()) + 1;
  return rs;
}

/// (mu, nu), exact.
inline Rational pairing(RootSystem const &rs, std::span<int const> mu, std::span<int const> nu)
{
  if (mu.size() != static_cast<std::size_t>(rs.rank()) || nu.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("pairing: coefficient vector dimension does not match rank");
  return Rational(rs.scaled_pairing(mu, nu), rs.denominator());
}

/// (mu, nu^vee) = 2 (mu, nu) / (nu, nu).
inline Rational coroot_pairing(RootSystem const &rs, std::span<int const> mu, std::span<int const> nu)
{
  if (mu.size() != static_cast<std::size_t>(rs.rank()) || nu.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("coroot_pairing: coefficient vector dimension does not match rank");
  long long nn = rs.scaled_norm2(nu);
  if (nn == 0)
    throw std::invalid_argument("coroot_pairing: zero vector has no coroot");
  return Rational(2 * rs.scaled_pairing(mu, nu), nn);
}

/// (rho, nu^vee).
inline Rational rho_coroot(RootSystem const &rs, std::span<int const> nu)
{ return coroot_pairing(rs, rs.rho2(), nu) / 2; }

/// (rho, theta^vee - mu^vee): the length of the minimal Weyl element taking
/// theta to the long root mu.
inline int theta_distance(RootSystem const &rs, std::span<int const> mu)
{
  Rational r = rho_coroot(rs, rs.coeffs(rs.theta())) - rho_coroot(rs, mu);
  if (r.denominator() != 1)
    throw std::logic_error("(rho, theta^vee - mu^vee) is not an integer");
  return static_cast<int>(r.numerator());
}

/// The unique simple root not orthogonal to theta; absent in type A_n, n >= 2.
inline std::optional<int> alpha_theta(RootSystem const &rs)
{
  Coeffs const &theta = rs.coeffs(rs.theta());
  std::optional<int> found;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.scaled_pairing(theta, unit(static_cast<std::size_t>(rs.rank()), i)) != 0) {
      if (found)
        return std::nullopt;
      found = i;
    }
  return found;
}

} // namespace rootposet

#endif // ROOTPOSET_ROOT_SYSTEM_HPP
