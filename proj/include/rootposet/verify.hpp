#ifndef ROOTPOSET_VERIFY_HPP
#define ROOTPOSET_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "grading.hpp"
#include "ideals.hpp"
#include "numbering.hpp"
#include "poset.hpp"
#include "root_set.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace rootposet::verify
{

enum class Status { pass, fail, not_applicable };

inline std::string to_string(Status s)
{
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

/// One executed check. `detail` is the witness for failures, the reason for
/// not-applicable entries and an optional note for passes.
struct CheckResult
{
  std::string name;
  Status status = Status::pass;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct CheckReport
{
  RootSystemType system;
  std::vector<CheckResult> checks;

  bool passed() const
  {
    return std::none_of(checks.begin(), checks.end(), [](CheckResult const &c) { return c.status == Status::fail; });
  }

  CheckResult const *find(std::string_view name) const
  {
    for (auto const &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
};

/// Registered checks, in execution order.
inline std::vector<std::string> const &check_names()
{
  static std::vector<std::string> const names{
      "root_system", "poset_lemmas",      "meet_theorem", "modularity", "heisenberg", "abelian_criterion",
      "tau_partition", "counts",          "nc_maximum",   "additivity", "odd_ideals", "exceptional_table",
      "main1",       "main2",             "envelope",     "ap_br",      "interval",   "sl_n_example",
  };
  return names;
}

/// A1-A7, B2-B7, C2-C7, D4-D7, E6, E7, E8, F4, G2.
inline std::vector<RootSystemType> builtin_types()
{
  std::vector<RootSystemType> t;
  for (int n = 1; n <= 7; ++n)
    t.push_back({Family::A, n});
  for (int n = 2; n <= 7; ++n)
    t.push_back({Family::B, n});
  for (int n = 2; n <= 7; ++n)
    t.push_back({Family::C, n});
  for (int n = 4; n <= 7; ++n)
    t.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n)
    t.push_back({Family::E, n});
  t.push_back({Family::F, 4});
  t.push_back({Family::G, 2});
  return t;
}

/// Classical invariants, tabulated independently of the construction.
struct ClassicalData
{
  int positive_roots;
  int coxeter;
  int dual_coxeter;
};

inline ClassicalData classical_data(RootSystemType t)
{
  int n = t.rank;
  switch (t.family) {
  case Family::A: return {n * (n + 1) / 2, n + 1, n + 1};
  case Family::B: return {n * n, 2 * n, 2 * n - 1};
  case Family::C: return {n * n, 2 * n, n + 1};
  case Family::D: return {n * (n - 1), 2 * n - 2, 2 * n - 2};
  case Family::E:
    if (n == 6)
      return {36, 12, 12};
    if (n == 7)
      return {63, 18, 18};
    return {120, 30, 30};
  case Family::F: return {24, 12, 9};
  case Family::G: return {6, 6, 4};
  }
  return {0, 0, 0};
}

/// Golden rows (alpha, d_alpha, beta, ht_beta(theta)) for odd simple roots with
/// d_alpha >= 1, 1-based, in both numberings.
struct GoldenRow
{
  int alpha_paper, d, beta_paper, beta_height;
  int alpha_bourbaki, beta_bourbaki;

  friend bool operator==(GoldenRow const &, GoldenRow const &) = default;
};

inline std::vector<GoldenRow> golden_odd_table(RootSystemType t)
{
  if (t.family == Family::E && t.rank == 6)
    return {{3, 1, 6, 2, 4, 2}};
  if (t.family == Family::E && t.rank == 7)
    return {{3, 1, 7, 2, 5, 2}, {5, 1, 6, 2, 3, 1}};
  if (t.family == Family::E && t.rank == 8)
    return {{2, 1, 1, 2, 7, 8}, {4, 2, 8, 3, 5, 2}, {8, 1, 7, 2, 2, 1}};
  if (t.family == Family::F)
    return {{3, 1, 4, 2, 2, 1}};
  if (t.family == Family::G)
    return {{1, 1, 2, 2, 1, 2}};
  return {};
}

/// Everything the checks consume, computed once per system. Checks compare
/// these values against independent recomputation, so corrupting a field
/// (see apply_mutation) must surface as a failure.
struct Context
{
  std::size_t num_positive = 0;
  int coxeter = 0;
  int dual_coxeter = 0;
  std::unordered_set<Coeffs, CoeffsHash> root_lookup;
  std::vector<int> join_table;
  std::vector<int> meet_table;  ///< -1 when absent
  std::vector<RootSet> upper_closures;
  std::vector<Grading> gradings;
  RootSet heis, com, nc;
  Coeffs theta_hat, theta_tilde;
  std::vector<RootSet> abelian;
  std::vector<RootSet> upper_ideals;
  TauPartition tau;
  std::map<int, RootSet> imin, imax;  ///< keyed by long simple index
  std::vector<int> odd;
  std::vector<int> paper_perm;
};

inline Context make_context(RootSystem const &rs)
{
  Context c;
  c.num_positive = rs.size();
  c.coxeter = rs.coxeter();
  c.dual_coxeter = rs.dual_coxeter();
  for (auto const &r : rs.positive_roots())
    c.root_lookup.insert(r.coeffs());
  std::size_t n = rs.size();
  c.join_table.assign(n * n, -1);
  c.meet_table.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      c.join_table[a * n + b] = join(rs, static_cast<int>(a), static_cast<int>(b));
      if (auto m = meet(rs, static_cast<int>(a), static_cast<int>(b)))
        c.meet_table[a * n + b] = *m;
    }
  for (std::size_t k = 0; k < n; ++k)
    c.upper_closures.push_back(upper_closure(rs, static_cast<int>(k)));
  for (int i = 0; i < rs.rank(); ++i)
    c.gradings.push_back(grading(rs, i));
  c.heis = heisenberg(rs);
  c.com = commutative_roots(rs);
  c.nc = RootSet::all(rs).minus(c.com);
  auto halves = theta_floor_ceil(rs);
  c.theta_hat = halves.floor;
  c.theta_tilde = halves.ceil;
  c.abelian = enumerate_abelian(rs);
  c.upper_ideals = enumerate_upper_ideals(rs);
  c.tau = tau_partition(rs, c.abelian);
  c.imax = maximal_abelian_ideals(rs, c.tau, c.abelian);
  for (int a : rs.simple_long())
    c.imin.emplace(a, c.tau.cell(rs.simple(a)).min);
  c.odd = odd_roots(rs);
  c.paper_perm = display_permutation(rs.type(), Numbering::paper);
  return c;
}

/// Seeded corruption aimed at one check. Returns false when the named check
/// has no corruption that applies to this system.
inline bool apply_mutation(RootSystem const &rs, Context &c, std::string_view check)
{
  std::size_t n = rs.size();
  if (check == "root_system") {
    c.dual_coxeter += 1;
    return true;
  }
  if (check == "poset_lemmas") {
    for (std::size_t g = 0; g < n; ++g)
      for (int a = 0; a < rs.rank(); ++a)
        for (int b = a + 1; b < rs.rank(); ++b) {
          int ga = rs.sum(static_cast<int>(g), rs.simple(a));
          int gb = rs.sum(static_cast<int>(g), rs.simple(b));
          if (ga >= 0 && gb >= 0) {
            c.root_lookup.erase(add(rs.coeffs(ga), unit(static_cast<std::size_t>(rs.rank()), b)));
            return true;
          }
        }
    return false;
  }
  if (check == "meet_theorem") {
    c.meet_table[static_cast<std::size_t>(rs.simple(0)) * n + static_cast<std::size_t>(rs.theta())] = rs.theta();
    return rs.simple(0) != rs.theta();
  }
  if (check == "modularity") {
    for (std::size_t g = 0; g < n; ++g)
      if (covers(rs, static_cast<int>(g)).upper.size() >= 2) {
        c.upper_closures[g] = c.upper_closures[g].without(static_cast<int>(g));
        return true;
      }
    return false;
  }
  if (check == "heisenberg") {
    for (int h : c.heis)
      if (h != rs.theta()) {
        c.heis = c.heis.without(h);
        return true;
      }
    return false;
  }
  if (check == "abelian_criterion") {
    c.abelian.back() = RootSet::all(rs);
    return true;
  }
  if (check == "tau_partition") {
    for (auto &cell : c.tau.cells)
      if (!(cell.min == cell.max)) {
        cell.min = cell.max;
        return true;
      }
    return false;
  }
  if (check == "counts") {
    c.abelian.pop_back();
    return true;
  }
  if (check == "nc_maximum") {
    if (auto t = rs.index_of(c.theta_hat)) {
      c.nc = c.nc.without(*t);
      return true;
    }
    return false;
  }
  if (check == "additivity") {
    for (auto &g : c.gradings)
      if (g.top >= 2 && !g.level(1).empty()) {
        int mu = g.level(1).front();
        RootSet lvl = g.level(1);
        for (int nu : g.level(1))
          if (rs.sum(mu, nu) >= 0)
            lvl = lvl.without(nu);
        g.levels[1] = lvl;
        return true;
      }
    return false;
  }
  if (check == "odd_ideals") {
    for (int a : c.odd) {
      auto const &g = c.gradings[static_cast<std::size_t>(a)];
      RootSet ideal;
      for (int j = g.d + 1; j <= g.top; ++j)
        ideal = ideal.unite(g.level(j));
      for (auto &[beta, I] : c.imax)
        if (I == ideal) {
          I = I.without(I.front());
          return true;
        }
    }
    return false;
  }
  if (check == "exceptional_table") {
    std::reverse(c.paper_perm.begin(), c.paper_perm.end());
    return !golden_odd_table(rs.type()).empty();
  }
  if (check == "main1") {
    if (auto t = rs.index_of(c.theta_hat)) {
      c.heis = c.heis.without(*t);
      return true;
    }
    return false;
  }
  if (check == "main2") {
    if (c.imax.empty())
      return false;
    auto &I = c.imax.begin()->second;
    I = I.without(min_elements(rs, I).front());
    return true;
  }
  if (check == "envelope") {
    auto const &longs = rs.simple_long();
    for (int a : longs)
      for (int b : longs) {
        auto inner = rs.path_interior(a, b);
        if (!inner.empty()) {
          c.imin[inner.front()] = c.imin[inner.front()].without(rs.theta());
          return true;
        }
      }
    return false;
  }
  if (check == "ap_br") {
    c.theta_hat[0] += 1;
    return true;
  }
  if (check == "interval") {
    if (c.odd.empty())
      return false;
    c.odd.pop_back();
    return true;
  }
  if (check == "sl_n_example") {
    if (rs.type().family != Family::A)
      return false;
    c.imax.begin()->second = c.imax.begin()->second.without(rs.theta());
    return true;
  }
  throw std::invalid_argument("unknown check '" + std::string(check) + "'");
}

struct Options
{
  Numbering numbering = Numbering::paper;
  std::optional<std::string> mutate;  ///< check name whose seeded corruption is applied
  bool fail_fast = false;             ///< stop after the first system with a failure
};

namespace detail
{

struct Outcome
{
  Status status = Status::pass;
  std::string detail;
};

inline Outcome pass(std::string note = {}) { return {Status::pass, std::move(note)}; }
inline Outcome fail(std::string witness) { return {Status::fail, std::move(witness)}; }
inline Outcome not_applicable(std::string reason) { return {Status::not_applicable, std::move(reason)}; }

inline std::string const kTypeAExcluded = "type A excluded by theorem hypothesis";

class Checker
{
public:
  Checker(RootSystem const &rs, Context const &ctx, Numbering numbering)
  : rs_(rs), c_(ctx), numbering_(numbering), n_(rs.size()), type_a_(rs.type().family == Family::A)
  {}

  Outcome run(std::string_view name)
  {
    if (name == "root_system") return root_system();
    if (name == "poset_lemmas") return poset_lemmas();
    if (name == "meet_theorem") return meet_theorem();
    if (name == "modularity") return modularity();
    if (name == "heisenberg") return heisenberg_check();
    if (name == "abelian_criterion") return abelian_criterion();
    if (name == "tau_partition") return tau_check();
    if (name == "counts") return counts();
    if (name == "nc_maximum") return nc_maximum();
    if (name == "additivity") return additivity();
    if (name == "odd_ideals") return odd_ideals();
    if (name == "exceptional_table") return exceptional_table();
    if (name == "main1") return main1();
    if (name == "main2") return main2();
    if (name == "envelope") return envelope_check();
    if (name == "ap_br") return ap_br();
    if (name == "interval") return interval_check();
    if (name == "sl_n_example") return sl_n_example();
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
  }

private:
  std::string V(std::span<int const> c) const { return format_coeffs(to_display(rs_.type(), c, numbering_)); }
  std::string R(int id) const { return V(rs_.coeffs(id)); }
  std::string S(RootSet const &s) const
  {
    std::string out = "{";
    for (int id : s)
      out += (out.size() > 1 ? "," : "") + R(id);
    return out + "}";
  }
  std::string A(int simple) const
  { return "alpha_" + std::to_string(simple_to_display(rs_.type(), simple, numbering_) + 1); }
  std::string Subset(std::vector<int> const &s) const
  {
    std::string out = "S={";
    for (std::size_t k = 0; k < s.size(); ++k)
      out += (k ? "," : "") + A(s[k]);
    return out + "}";
  }

  bool is_root(Coeffs const &v) const { return c_.root_lookup.contains(v); }
  int join_of(int a, int b) const { return c_.join_table[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int meet_of(int a, int b) const { return c_.meet_table[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  bool covers_rel(int upper, int lower) const
  { return leq(rs_, lower, upper) && rs_.root(upper).height() == rs_.root(lower).height() + 1; }

  std::vector<std::vector<int>> long_subsets() const
  {
    auto const &longs = rs_.simple_long();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << longs.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t k = 0; k < longs.size(); ++k)
        if (mask & (1u << k))
          s.push_back(longs[k]);
      out.push_back(std::move(s));
    }
    return out;
  }

  RootSet intersect_min(std::vector<int> const &s) const
  {
    RootSet r = c_.imin.at(s.front());
    for (int a : s)
      r = r.intersect(c_.imin.at(a));
    return r;
  }

  RootSet union_max(std::vector<int> const &s) const
  {
    RootSet r;
    for (int a : s)
      r = r.unite(c_.imax.at(a));
    return r;
  }

  /// Smallest connected set of simple roots containing s.
  std::vector<int> envelope(std::vector<int> const &s) const
  {
    std::set<int> e(s.begin(), s.end());
    for (int a : s)
      for (int b : s)
        for (int v : rs_.path_interior(a, b))
          e.insert(v);
    return {e.begin(), e.end()};
  }

  /// theta - eta maps min(n I(alpha)_min) bijectively onto max(D+ \ u I(alpha)_max).
  std::optional<std::string> bijection_failure(std::vector<int> const &s) const
  {
    RootSet mins = min_elements(rs_, intersect_min(s));
    RootSet maxs = max_of_complement(rs_, union_max(s));
    std::vector<int> images;
    for (int eta : mins) {
      auto img = rs_.index_of(subtract(rs_.coeffs(rs_.theta()), rs_.coeffs(eta)));
      if (!img)
        return Subset(s) + ": theta - " + R(eta) + " is not a root";
      if (!maxs.contains(*img))
        return Subset(s) + ": theta - " + R(eta) + " = " + R(*img) + " not in " + S(maxs);
      images.push_back(*img);
    }
    if (RootSet(images).size() != mins.size() || images.size() != maxs.size())
      return Subset(s) + ": min " + S(mins) + " vs max " + S(maxs);
    return std::nullopt;
  }

  Outcome root_system()
  {
    auto cl = classical_data(rs_.type());
    if (static_cast<int>(c_.num_positive) != cl.positive_roots)
      return fail("|D+| = " + std::to_string(c_.num_positive) + ", expected " + std::to_string(cl.positive_roots));
    if (c_.coxeter != cl.coxeter || c_.coxeter != rs_.root(rs_.theta()).height() + 1)
      return fail("h = " + std::to_string(c_.coxeter) + ", expected " + std::to_string(cl.coxeter));
    Rational hstar = rho_coroot(rs_, rs_.coeffs(rs_.theta())) + 1;
    if (c_.dual_coxeter != cl.dual_coxeter || Rational(c_.dual_coxeter) != hstar)
      return fail("h* = " + std::to_string(c_.dual_coxeter) + ", (rho, theta^vee) + 1 = " +
                  std::to_string(hstar.numerator()) + ", expected " + std::to_string(cl.dual_coxeter));
    for (std::size_t k = 0; k < n_; ++k) {
      if (!leq(rs_, static_cast<int>(k), rs_.theta()))
        return fail("theta is not above " + R(static_cast<int>(k)));
      if (!rs_.connected(rs_.root(static_cast<int>(k)).support()))
        return fail("disconnected support: " + R(static_cast<int>(k)));
    }
    auto const &theta = rs_.coeffs(rs_.theta());
    if (pairing(rs_, theta, theta) != Rational(2) || coroot_pairing(rs_, theta, theta) != Rational(2))
      return fail("(theta, theta) != 2");
    auto const &roots = rs_.positive_roots();
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        int s = rs_.sum(static_cast<int>(a), static_cast<int>(b));
        if (s != rs_.sum(static_cast<int>(b), static_cast<int>(a)))
          return fail("closure table not symmetric at " + R(static_cast<int>(a)) + ", " + R(static_cast<int>(b)));
        Coeffs v = add(roots[a].coeffs(), roots[b].coeffs());
        bool member = std::any_of(roots.begin(), roots.end(), [&](Root const &r) { return r.coeffs() == v; });
        if (member != (s >= 0))
          return fail("closure table disagrees with membership for " + V(v));
      }
    return pass();
  }

  Outcome poset_lemmas()
  {
    auto const rank = static_cast<std::size_t>(rs_.rank());
    for (std::size_t gi = 0; gi < n_; ++gi) {
      int g = static_cast<int>(gi);
      auto const &gc = rs_.coeffs(g);
      if (covers(rs_, g).upper.size() > 3)
        return fail(R(g) + " has more than three upper covers");
      for (int a = 0; a < rs_.rank(); ++a)
        for (int b = a + 1; b < rs_.rank(); ++b) {
          Coeffs ua = add(gc, unit(rank, a)), ub = add(gc, unit(rank, b));
          if (is_root(ua) && is_root(ub) && !is_root(add(ua, unit(rank, b))))
            return fail("gamma=" + R(g) + ", " + A(a) + ", " + A(b) + ": gamma+alpha+beta is not a root");
          Coeffs da = subtract(gc, unit(rank, a)), db = subtract(gc, unit(rank, b));
          if (is_root(da) && is_root(db) && !is_root(subtract(da, unit(rank, b))) &&
              !(add(unit(rank, a), unit(rank, b)) == gc && rs_.adjacent(a, b)))
            return fail("gamma=" + R(g) + ", " + A(a) + ", " + A(b) + ": gamma-alpha-beta is not a root");
        }
    }
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) {
        int x = static_cast<int>(a), y = static_cast<int>(b);
        int j = join_of(x, y), m = meet_of(x, y);
        bool top_covers = covers_rel(j, x) && covers_rel(j, y);
        bool bottom_covered = m >= 0 && covers_rel(x, m) && covers_rel(y, m);
        if (top_covers && !bottom_covered) {
          bool simple_pair = rs_.root(x).height() == 1 && rs_.root(y).height() == 1 &&
                             add(rs_.coeffs(x), rs_.coeffs(y)) == rs_.coeffs(j);
          if (!simple_pair)
            return fail("vee-and-wedge (i) fails for " + R(x) + ", " + R(y));
        }
        if (bottom_covered && !top_covers)
          return fail("vee-and-wedge (ii) fails for " + R(x) + ", " + R(y));
      }
    return pass();
  }

  Outcome meet_theorem()
  {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a; b < n_; ++b) {
        int x = static_cast<int>(a), y = static_cast<int>(b);
        auto jo = join_oracle(rs_, x, y);
        if (!jo || *jo != join_of(x, y))
          return fail("join of " + R(x) + ", " + R(y) + " differs from the brute-force bound");
        auto mo = meet_oracle(rs_, x, y);
        int m = meet_of(x, y);
        if ((mo ? *mo : -1) != m)
          return fail("meet of " + R(x) + ", " + R(y) + " differs from the brute-force bound");
        Coeffs mn = coeff_min(rs_.coeffs(x), rs_.coeffs(y));
        bool intersect = !is_zero(mn);
        if (intersect != (m >= 0))
          return fail("meet existence mismatch for " + R(x) + ", " + R(y));
        if (m >= 0) {
          if (rs_.coeffs(m) != mn)
            return fail("meet of " + R(x) + ", " + R(y) + " is not the coefficientwise minimum");
          int j = join_of(x, y);
          if (rs_.root(j).height() + rs_.root(m).height() != rs_.root(x).height() + rs_.root(y).height())
            return fail("height additivity fails for " + R(x) + ", " + R(y));
        }
      }
    return pass();
  }

  Outcome modularity()
  {
    auto describe = [&](PosetView const &v, LatticeCheck const &lc) {
      std::string w;
      for (auto k : lc.witness)
        w += (w.empty() ? "" : ", ") + V(v.element(k));
      return w;
    };
    for (std::size_t g = 0; g < n_; ++g) {
      PosetView v(rs_, c_.upper_closures[g]);
      auto lc = is_modular_lattice(v);
      if (!lc.ok())
        return fail("I<>=" + R(static_cast<int>(g)) + "> not a modular lattice: " + describe(v, lc));
    }
    for (auto const &gr : c_.gradings)
      for (int i = 1; i <= gr.top; ++i) {
        PosetView v(rs_, gr.level(i));
        auto lc = is_modular_lattice(v);
        if (!lc.ok())
          return fail("Delta_" + A(gr.pivot) + "(" + std::to_string(i) + ") not a modular lattice: " + describe(v, lc));
      }
    return pass();
  }

  Outcome heisenberg_check()
  {
    auto const &theta = rs_.coeffs(rs_.theta());
    RootSet expected = RootSet::filter(rs_, [&](int k) { return rs_.scaled_pairing(rs_.coeffs(k), theta) != 0; });
    RootSet positive = RootSet::filter(rs_, [&](int k) { return rs_.scaled_pairing(rs_.coeffs(k), theta) > 0; });
    if (!(expected == c_.heis) || !(positive == c_.heis))
      return fail("h differs from {gamma : (gamma, theta) != 0}: " + S(c_.heis));
    if (!is_upper_ideal(rs_, c_.heis))
      return fail("h is not an upper ideal");
    RootSet rest = c_.heis.without(rs_.theta());
    for (int eta : rest) {
      std::vector<int> partners;
      for (int other : rest)
        if (rs_.sum(eta, other) >= 0)
          partners.push_back(other);
      if (partners.size() != 1 || rs_.sum(eta, partners.front()) != rs_.theta() || partners.front() == eta)
        return fail("eta=" + R(eta) + " lacks a unique partner summing to theta");
    }
    auto at = alpha_theta(rs_);
    if (type_a_) {
      bool expect = rs_.rank() == 1;
      if (at.has_value() != expect)
        return fail("alpha_theta existence wrong in type A");
      return pass();
    }
    if (!at)
      return fail("no unique simple root pairs nontrivially with theta");
    auto const &g = c_.gradings[static_cast<std::size_t>(*at)];
    if (g.top != 2)
      return fail("ht_alpha_theta(theta) = " + std::to_string(g.top));
    if (!(g.level(1) == rest) || !(g.level(2) == RootSet{rs_.theta()}))
      return fail("Delta_alpha_theta(1) != h \\ {theta}");
    if (!(min_elements(rs_, c_.heis) == RootSet{rs_.simple(*at)}))
      return fail("min(h) != {alpha_theta}");
    for (int a : rest)
      for (int b : rest) {
        auto m = meet(rs_, a, b);
        if (!m || !rest.contains(*m))
          return fail("meet of " + R(a) + ", " + R(b) + " leaves h \\ {theta}");
      }
    return pass(A(*at) + " = alpha_theta");
  }

  Outcome abelian_criterion()
  {
    std::vector<RootSet> abelian;
    for (auto const &I : c_.upper_ideals) {
      bool pairs = has_root_sum(rs_, I);
      bool to_theta = has_theta_sum(rs_, I);
      bool via_h = has_root_sum(rs_, I.intersect(c_.heis));
      if (pairs != to_theta || pairs != via_h)
        return fail("abelian tests disagree on " + S(I));
      if (!pairs)
        abelian.push_back(I);
    }
    std::sort(abelian.begin(), abelian.end());
    auto listed = c_.abelian;
    std::sort(listed.begin(), listed.end());
    if (abelian != listed)
      return fail("enumerated abelian ideals differ from the upper-ideal filter (" + std::to_string(listed.size()) +
                  " vs " + std::to_string(abelian.size()) + ")");
    for (auto const &I : c_.abelian)
      if (!I.subset_of(c_.com))
        return fail("abelian ideal with a non-commutative root: " + S(I));
    if (!is_upper_ideal(rs_, c_.com))
      return fail("Delta+_com is not an upper ideal");
    return pass(std::to_string(c_.upper_ideals.size()) + " upper ideals");
  }

  Outcome tau_check()
  {
    static InversionConvention const selected = select_inversion_convention(default_convention_validation_types());
    if (selected != kInversionConvention)
      return fail("inversion-set convention selected by validation differs from the hard-wired one");
    LongRootOrbit orbit(rs_);
    auto longs = rs_.long_positive_roots();
    if (c_.tau.cells.size() != longs.size())
      return fail("number of cells " + std::to_string(c_.tau.cells.size()) + " != |D+_l| = " +
                  std::to_string(longs.size()));
    std::size_t total = 0;
    for (auto const &cell : c_.tau.cells) {
      auto w = minimal_word(rs_, orbit, cell.mu);
      if (static_cast<int>(orbit.distance(rs_.coeffs(cell.mu))) != theta_distance(rs_, rs_.coeffs(cell.mu)))
        return fail("BFS distance differs from (rho, theta^vee - mu^vee) at " + R(cell.mu));
      if (inversion_set(rs_, w).size() != w.length())
        return fail("|N(w_mu)| != l(w_mu) at " + R(cell.mu));
      auto formula = weyl_min_ideal(rs_, orbit, cell.mu);
      if (!formula || !(*formula == cell.min))
        return fail("I(mu)_min != {theta} u {theta - N(w_mu)} at mu=" + R(cell.mu) + ": " + S(cell.min));
      if (!cell.min.subset_of(c_.heis))
        return fail("I(mu)_min not inside h at mu=" + R(cell.mu));
      for (auto const &I : cell.members) {
        if (!(I.intersect(c_.heis) == cell.min))
          return fail("member with I n h != I(mu)_min at mu=" + R(cell.mu) + ": " + S(I));
        if (!cell.min.subset_of(I) || !I.subset_of(cell.max))
          return fail("cell extremes are not minimum/maximum at mu=" + R(cell.mu));
      }
      if (!(min_via_coroot_criterion(rs_, orbit, cell.mu) == min_elements(rs_, cell.min)))
        return fail("coroot criterion for min(I(mu)_min) fails at mu=" + R(cell.mu));
      total += cell.members.size();
    }
    if (total + 1 != c_.abelian.size())
      return fail("cells do not partition the nonempty abelian ideals");
    for (auto const &I : c_.abelian) {
      if (I.empty())
        continue;
      bool in_h = I.subset_of(c_.heis);
      bool is_min = std::any_of(c_.tau.cells.begin(), c_.tau.cells.end(), [&](TauCell const &cl) { return cl.min == I; });
      if (in_h != is_min)
        return fail("I subset of h does not characterise I(mu)_min: " + S(I));
    }
    std::vector<RootSet> maximal, expected;
    for (auto const &I : c_.abelian)
      if (std::none_of(c_.abelian.begin(), c_.abelian.end(),
                       [&](RootSet const &J) { return !(J == I) && I.subset_of(J); }))
        maximal.push_back(I);
    for (auto const &[a, I] : c_.imax)
      expected.push_back(I);
    std::sort(maximal.begin(), maximal.end());
    std::sort(expected.begin(), expected.end());
    if (maximal != expected)
      return fail("maximal abelian ideals differ from {I(alpha)_max : alpha in Pi_l}");
    return pass();
  }

  Outcome counts()
  {
    if (c_.abelian.size() != (std::size_t{1} << rs_.rank()))
      return fail("|Ab| = " + std::to_string(c_.abelian.size()) + ", expected 2^" + std::to_string(rs_.rank()));
    int hstar = classical_data(rs_.type()).dual_coxeter;
    if (static_cast<int>(c_.heis.size()) != 2 * hstar - 3)
      return fail("|h| = " + std::to_string(c_.heis.size()) + ", expected 2h*-3 = " + std::to_string(2 * hstar - 3));
    for (auto const &cell : c_.tau.cells)
      if (static_cast<int>(cell.min.size()) != theta_distance(rs_, rs_.coeffs(cell.mu)) + 1)
        return fail("|I(mu)_min| wrong at mu=" + R(cell.mu));
    RootSet rest = c_.heis.without(rs_.theta());
    for (auto const &[a, I] : c_.imin) {
      if (static_cast<int>(I.size()) != hstar - 1)
        return fail("|I(" + A(a) + ")_min| = " + std::to_string(I.size()) + ", expected h*-1");
      if (!I.contains(rs_.theta()) || 2 * I.intersect(rest).size() != rest.size())
        return fail("I(" + A(a) + ")_min does not hold exactly half of h \\ {theta}");
      for (int eta : rest) {
        auto partner = rs_.index_of(subtract(rs_.coeffs(rs_.theta()), rs_.coeffs(eta)));
        if (!partner || I.contains(eta) == I.contains(*partner))
          return fail("involution eta -> theta-eta not complementary on I(" + A(a) + ")_min at " + R(eta));
      }
    }
    return pass();
  }

  Outcome nc_maximum()
  {
    if (type_a_)
      return not_applicable(kTypeAExcluded);
    auto top = rs_.index_of(c_.theta_hat);
    if (!top)
      return fail("floor(theta/2) = " + V(c_.theta_hat) + " is not a root");
    RootSet below = RootSet::filter(rs_, [&](int k) { return leq(rs_.coeffs(k), c_.theta_hat); });
    if (!(below == c_.nc))
      return fail("Delta+_nc != {gamma <= floor(theta/2)}: " + S(c_.nc));
    if (!(max_elements(rs_, c_.nc) == RootSet{*top}))
      return fail("max(Delta+_nc) = " + S(max_elements(rs_, c_.nc)));
    if (!c_.heis.contains(*top))
      return fail("floor(theta/2) not in h");
    RootSet u;
    for (auto const &[a, I] : c_.imax)
      u = u.unite(I);
    if (!(u == c_.com) || !(RootSet::all(rs_).minus(c_.com) == c_.nc))
      return fail("Delta+_com != union of I(alpha)_max");
    for (int a : below)
      for (int b : below)
        if (!leq(rs_.coeffs(join_of(a, b)), c_.theta_hat))
          return fail("join of " + R(a) + ", " + R(b) + " leaves the region below floor(theta/2)");
    int acc = -1;
    for (auto const &g : c_.gradings) {
      if (g.d < 1)
        continue;
      int mu = g.lowest[static_cast<std::size_t>(g.d)];
      if (!c_.nc.contains(mu))
        return fail("lowest root of Delta_" + A(g.pivot) + "(d) is commutative: " + R(mu));
      acc = acc < 0 ? mu : join_of(acc, mu);
    }
    if (acc != *top)
      return fail("join of the mu_{d_alpha} differs from floor(theta/2)");
    return pass("floor(theta/2) = " + V(c_.theta_hat));
  }

  Outcome additivity()
  {
    for (auto const &g : c_.gradings) {
      for (int i = 1; i <= g.top; ++i)
        if (min_elements(rs_, g.level(i)).size() != 1 || max_elements(rs_, g.level(i)).size() != 1)
          return fail("Delta_" + A(g.pivot) + "(" + std::to_string(i) + ") lacks a unique min/max");
      for (int i = 1; i <= g.top; ++i)
        for (int j = 1; i + j <= g.top; ++j) {
          auto r = check_additivity(rs_, g, i, j);
          if (!r.ok)
            return fail(A(g.pivot) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ": " +
                        R(*r.failure) + " has no partner");
        }
    }
    return pass();
  }

  Outcome odd_ideals()
  {
    auto fam = rs_.type().family;
    std::size_t expected_odd = fam == Family::A ? static_cast<std::size_t>(rs_.rank())
                               : (fam == Family::D || fam == Family::E) ? 3
                                                                        : 1;
    if (c_.odd.size() != expected_odd)
      return fail(std::to_string(c_.odd.size()) + " odd simple roots, expected " + std::to_string(expected_odd));
    Coeffs diff = subtract(c_.theta_tilde, c_.theta_hat);
    Coeffs sum(static_cast<std::size_t>(rs_.rank()), 0);
    for (int a : c_.odd)
      sum[static_cast<std::size_t>(a)] += 1;
    if (diff != sum)
      return fail("ceil(theta/2) - floor(theta/2) is not the sum of odd simple roots");
    std::string note;
    for (int a : c_.odd) {
      auto const &g = c_.gradings[static_cast<std::size_t>(a)];
      OddIdeal oi;
      try {
        oi = odd_ideal(rs_, g, c_.imax);
      } catch (TheoremViolation const &e) {
        return fail(e.what());
      }
      int bh = rs_.root(rs_.theta()).height_at(static_cast<std::size_t>(oi.beta));
      if (bh != g.d + 1)
        return fail("ht_beta(theta) != d_alpha + 1 for " + A(a));
      if (g.d == 0 && oi.beta != a)
        return fail("d_alpha = 0 but beta != alpha for " + A(a));
      if ((fam == Family::D || fam == Family::E) && !is_extreme_node(rs_, oi.beta))
        return fail("beta = " + A(oi.beta) + " is not an extreme node");
      int lam = g.highest[static_cast<std::size_t>(g.d)];
      RootSet outside = RootSet::all(rs_).minus(oi.ideal);
      if (g.d >= 1 && !(max_elements(rs_, outside) == RootSet{lam}))
        return fail("highest root of level d is not the unique maximum outside the ideal for " + A(a));
      if (g.d >= 1 && !has_root_sum(rs_, oi.ideal.with(lam)))
        return fail("ideal plus lambda stays abelian for " + A(a));
      if (g.d >= 1 && !c_.nc.contains(g.lowest[static_cast<std::size_t>(g.d)]))
        return fail("mu_{d_alpha} is commutative for " + A(a));
      note += (note.empty() ? "" : "; ") + A(a) + "->" + A(oi.beta);
    }
    return pass(note);
  }

  Outcome exceptional_table()
  {
    std::vector<OddRow> rows;
    try {
      rows = odd_rows(rs_, c_.imax);
    } catch (TheoremViolation const &e) {
      return fail(e.what());
    }
    auto golden = golden_odd_table(rs_.type());
    auto to_paper = [&](int i) {
      for (std::size_t p = 0; p < c_.paper_perm.size(); ++p)
        if (c_.paper_perm[p] == i)
          return static_cast<int>(p) + 1;
      return 0;
    };
    std::vector<GoldenRow> got;
    for (auto const &r : rows)
      got.push_back({to_paper(r.alpha), r.d, to_paper(r.beta), r.beta_height, r.alpha + 1, r.beta + 1});
    std::sort(got.begin(), got.end(), [](GoldenRow const &x, GoldenRow const &y) { return x.alpha_paper < y.alpha_paper; });
    if (got != golden) {
      std::ostringstream os;
      for (auto const &r : got)
        os << "(a" << r.alpha_paper << "," << r.d << ",a" << r.beta_paper << "," << r.beta_height << ")";
      return fail("rows " + os.str() + " differ from the golden table");
    }
    return pass(std::to_string(got.size()) + " rows");
  }

  Outcome main1()
  {
    if (type_a_)
      return not_applicable(kTypeAExcluded + "; connected subsets are checked by sl_n_example");
    for (auto const &s : long_subsets()) {
      RootSet maxs = max_of_complement(rs_, union_max(s));
      for (int g : maxs)
        if (!c_.heis.contains(g))
          return fail(Subset(s) + ": " + R(g) + " maximal outside the union but not in h");
    }
    return pass();
  }

  Outcome main2()
  {
    if (type_a_) {
      std::string reason = kTypeAExcluded;
      int n = rs_.rank();
      if (n >= 3) {
        std::vector<int> s{0, n - 1};
        reason += "; counterexample " + Subset(s) + ": intersection " + S(intersect_min(s)) + ", max complement " +
                  S(max_of_complement(rs_, union_max(s)));
      }
      return not_applicable(reason);
    }
    auto subsets = long_subsets();
    for (auto const &s : subsets)
      if (auto f = bijection_failure(s))
        return fail(*f);
    return pass(std::to_string(subsets.size()) + " subsets");
  }

  Outcome envelope_check()
  {
    for (auto const &s : long_subsets()) {
      auto env = envelope(s);
      for (int v : env)
        if (!rs_.is_long_simple(v))
          return fail(Subset(s) + ": envelope leaves Pi_l");
      if (!rs_.connected(env))
        return fail(Subset(s) + ": envelope not connected");
      RootSet lhs = intersect_min(s), rhs = intersect_min(env);
      if (!(lhs == rhs))
        return fail(Subset(s) + ": intersection of I(alpha)_min differs on the envelope: " + S(lhs) + " vs " + S(rhs));
      int j = rs_.simple(s.front());
      for (int a : s)
        j = join_of(j, rs_.simple(a));
      Coeffs sum(static_cast<std::size_t>(rs_.rank()), 0);
      for (int a : env)
        sum[static_cast<std::size_t>(a)] = 1;
      if (rs_.coeffs(j) != sum)
        return fail(Subset(s) + ": join of S differs from the sum over its envelope");
      if (!(c_.tau.cell(j).min == lhs))
        return fail(Subset(s) + ": intersection differs from I(join S)_min");
      if (!type_a_ && !(union_max(s) == union_max(env)))
        return fail(Subset(s) + ": union of I(alpha)_max differs on the envelope");
    }
    return pass();
  }

  Outcome ap_br()
  {
    if (type_a_)
      return not_applicable(kTypeAExcluded);
    auto const rank = static_cast<std::size_t>(rs_.rank());
    Coeffs pl(rank, 0);
    for (int a : rs_.simple_long())
      pl[a] = 1;
    auto pl_id = rs_.index_of(pl);
    if (!pl_id || !rs_.is_long_root(*pl_id))
      return fail("|Pi_l| is not a long root");
    std::vector<int> bars;
    for (int b = 0; b < rs_.rank(); ++b)
      if (rs_.is_positive_root(add(pl, unit(rank, b))))
        bars.push_back(b);
    if (bars.size() != 1)
      return fail(std::to_string(bars.size()) + " simple roots extend |Pi_l| to a root");
    int bar = bars.front();
    auto fam = rs_.type().family;
    if (fam == Family::D || fam == Family::E) {
      if (rs_.degree(bar) != 3)
        return fail(A(bar) + " is not the branching node");
    } else {
      std::vector<int> cand;
      for (int b = 0; b < rs_.rank(); ++b)
        if (!rs_.is_long_simple(b) &&
            std::any_of(rs_.neighbors(b).begin(), rs_.neighbors(b).end(), [&](int w) { return rs_.is_long_simple(w); }))
          cand.push_back(b);
      if (cand != std::vector<int>{bar})
        return fail(A(bar) + " is not the unique short root adjacent to a long root");
    }
    if (coroot_pairing(rs_, unit(rank, bar), pl) != Rational(-1))
      return fail("(alpha_bar, |Pi_l|^vee) != -1");
    auto w = minimal_word(rs_, *pl_id);
    if (apply_inverse(rs_, w, unit(rank, bar)) != negate(c_.theta_hat))
      return fail("w^{-1}(alpha_bar) = " + V(apply_inverse(rs_, w, unit(rank, bar))) + " != -floor(theta/2) = -" +
                  V(c_.theta_hat));
    auto tilde = rs_.index_of(c_.theta_tilde);
    if (!tilde || !(min_elements(rs_, c_.tau.cell(*pl_id).min) == RootSet{*tilde}))
      return fail("min(I(|Pi_l|)_min) != {ceil(theta/2)}");
    return pass("alpha_bar = " + A(bar));
  }

  Outcome interval_check()
  {
    auto fam = rs_.type().family;
    if (type_a_) {
      PosetView v = theta_interval(rs_);
      auto lc = is_modular_lattice(v);
      if (rs_.rank() <= 2) {
        // Delta+ u {0} is a chain (A1) or the square (A2): both modular.
        if (!lc.ok())
          return fail("Delta+ u {0} unexpectedly non-modular for rank <= 2");
        return pass("rank <= 2: Delta+ u {0} is modular (too small to contain N5 or M3)");
      }
      if (lc.ok())
        return fail("Delta+ u {0} is a modular lattice");
      std::string w;
      for (auto k : lc.witness)
        w += (w.empty() ? "" : ", ") + V(v.element(k));
      return pass("not modular, witness (x, a, b) = (" + w + ")");
    }
    auto lo = rs_.index_of(c_.theta_hat);
    auto hi = rs_.index_of(c_.theta_tilde);
    if (!lo || !hi || !leq(rs_, *lo, *hi))
      return fail("floor/ceil of theta/2 do not bound an interval");
    PosetView j = interval(rs_, *lo, *hi);
    int h = rs_.coxeter();
    int ht = rs_.root(*hi).height();
    Coeffs odd_sum(static_cast<std::size_t>(rs_.rank()), 0);
    for (int a : c_.odd)
      odd_sum[static_cast<std::size_t>(a)] += 1;
    if (subtract(c_.theta_tilde, c_.theta_hat) != odd_sum)
      return fail("ceil - floor != sum of odd roots");
    if (fam == Family::D || fam == Family::E) {
      if (c_.odd.size() != 3)
        return fail(std::to_string(c_.odd.size()) + " odd roots, expected 3");
      if (j.size() != 8 || !is_boolean_cube(j, 3))
        return fail("interval has " + std::to_string(j.size()) + " elements and is not B^3");
      if (ht != h / 2 + 1)
        return fail("ht(ceil(theta/2)) = " + std::to_string(ht) + ", expected h/2+1");
      return pass("B^3, ht = " + std::to_string(ht));
    }
    if (c_.odd.size() != 1)
      return fail(std::to_string(c_.odd.size()) + " odd roots, expected 1");
    if (j.size() != 2 || !is_boolean_cube(j, 1))
      return fail("interval has " + std::to_string(j.size()) + " elements and is not a segment");
    if (ht != h / 2)
      return fail("ht(ceil(theta/2)) = " + std::to_string(ht) + ", expected h/2");
    return pass("segment, ht = " + std::to_string(ht));
  }

  Outcome sl_n_example()
  {
    if (!type_a_)
      return not_applicable("example concerns type A only");
    int n = rs_.rank();
    auto const rank = static_cast<std::size_t>(n);
    auto range_root = [&](int from, int to) {  // alpha_from + ... + alpha_to, 0-based inclusive
      Coeffs c(rank, 0);
      for (int k = from; k <= to; ++k)
        c[static_cast<std::size_t>(k)] = 1;
      return *rs_.index_of(c);
    };
    if (!is_zero(c_.theta_hat) || !c_.nc.empty())
      return fail("type A must have floor(theta/2) = 0 and no non-commutative roots");
    for (int i = 0; i < n; ++i)
      if (!(c_.imax.at(i) == upper_closure(rs_, rs_.simple(i))))
        return fail("I(" + A(i) + ")_max != I<>=" + A(i) + ">");
    if (!(c_.heis == c_.imax.at(0).unite(c_.imax.at(n - 1))))
      return fail("h != I(alpha_1)_max u I(alpha_n)_max");
    std::vector<int> first, last;
    for (int k = 0; k < n; ++k) {
      first.push_back(range_root(0, k));
      last.push_back(range_root(k, n - 1));
    }
    if (!(c_.imin.at(0) == RootSet(first)) || !(c_.imax.at(0) == RootSet(first)))
      return fail("I(alpha_1)_min/max differ from {e1 - ej}");
    if (!(c_.imin.at(n - 1) == RootSet(last)) || !(c_.imax.at(n - 1) == RootSet(last)))
      return fail("I(alpha_n)_min/max differ from {ej - e(n+1)}");
    std::string note;
    if (n >= 3) {
      std::vector<int> s{0, n - 1};
      RootSet maxs = max_of_complement(rs_, union_max(s));
      if (!(intersect_min(s) == RootSet{rs_.theta()}))
        return fail(Subset(s) + ": intersection is not {theta}");
      if (!(maxs == RootSet{range_root(1, n - 2)}) || rs_.root(maxs.front()).height() != n - 2)
        return fail(Subset(s) + ": max complement " + S(maxs) + " is not {e2 - en}");
      if (!bijection_failure(s))
        return fail(Subset(s) + ": bijection unexpectedly holds");
      note = "counterexample " + Subset(s) + ": intersection {theta}, max complement " + S(maxs);
    }
    std::vector<int> all(rank);
    for (int k = 0; k < n; ++k)
      all[static_cast<std::size_t>(k)] = k;
    if (!(intersect_min(all) == RootSet{rs_.theta()}) || !(union_max(all) == RootSet::all(rs_)))
      return fail("S = Pi: intersection/union wrong");
    int connected = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (i == 0 && j == n - 1)
          continue;
        std::vector<int> s;
        for (int k = i; k <= j; ++k)
          s.push_back(k);
        ++connected;
        RootSet maxs = max_of_complement(rs_, union_max(s));
        for (int g : maxs)
          if (!c_.heis.contains(g))
            return fail(Subset(s) + ": " + R(g) + " maximal outside the union but not in h");
        if (auto f = bijection_failure(s))
          return fail(*f);
        if (i > 0 && i < j && j < n - 1) {
          RootSet mins = min_elements(rs_, intersect_min(s));
          if (!(mins == RootSet{range_root(0, j), range_root(i, n - 1)}))
            return fail(Subset(s) + ": min of intersection " + S(mins) + " differs from {e1-e(j+1), ei-e(n+1)}");
          if (!(maxs == RootSet{range_root(0, i - 1), range_root(j + 1, n - 1)}))
            return fail(Subset(s) + ": max complement " + S(maxs) + " differs from {e1-ei, e(j+1)-e(n+1)}");
        }
      }
    return pass(std::to_string(connected) + " connected S != Pi" + (note.empty() ? "" : "; " + note));
  }

  RootSystem const &rs_;
  Context const &c_;
  Numbering numbering_;
  std::size_t n_;
  bool type_a_;
};

} // namespace detail

/// Runs every registered check on one root system.
inline CheckReport run(RootSystemType type, Options const &opts = {})
{
  using clock = std::chrono::steady_clock;
  CheckReport report{type, {}};
  RootSystem rs = build(type);
  std::optional<Context> ctx;
  std::string build_error;
  try {
    ctx = make_context(rs);
  } catch (TheoremViolation const &e) {
    build_error = e.what();
  }
  if (ctx && opts.mutate)
    apply_mutation(rs, *ctx, *opts.mutate);
  for (auto const &name : check_names()) {
    CheckResult res{name, Status::fail, build_error, 0.0};
    if (ctx) {
      auto t0 = clock::now();
      try {
        detail::Checker checker(rs, *ctx, opts.numbering);
        auto out = checker.run(name);
        res.status = out.status;
        res.detail = std::move(out.detail);
      } catch (std::exception const &e) {
        res.status = Status::fail;
        res.detail = std::string("exception: ") + e.what();
      }
      res.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }
    report.checks.push_back(std::move(res));
  }
  return report;
}

inline std::vector<CheckReport> run_all(std::vector<RootSystemType> const &types, Options const &opts = {})
{
  std::vector<CheckReport> out;
  for (auto t : types) {
    out.push_back(run(t, opts));
    if (opts.fail_fast && !out.back().passed())
      break;
  }
  return out;
}

} // namespace rootposet::verify

#endif // ROOTPOSET_VERIFY_HPP
