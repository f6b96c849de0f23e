// Acceptance run: one PASS/FAIL line per criterion over the built-in type list.

#include <iostream>
#include <string>
#include <vector>

#include <rootposet/grading.hpp>
#include <rootposet/ideals.hpp>
#include <rootposet/numbering.hpp>
#include <rootposet/poset.hpp>
#include <rootposet/verify.hpp>

using namespace rootposet;
using verify::Status;

namespace
{

struct Criterion
{
  bool ok = true;
  std::string note;

  void require(bool cond, std::string const &why)
  {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

bool is_a(RootSystemType t) { return t.family == Family::A; }

/// Every report has `check` with the given status for the selected systems.
void require_status(Criterion &c, std::vector<verify::CheckReport> const &reports, std::string const &check,
                    bool (*select)(RootSystemType), Status want)
{
  for (auto const &r : reports) {
    if (!select(r.system))
      continue;
    auto const *e = r.find(check);
    c.require(e && e->status == want, r.system.name() + " " + check + ": " + (e ? e->detail : "missing"));
  }
}

bool any_type(RootSystemType) { return true; }
bool non_a(RootSystemType t) { return !is_a(t); }
bool type_a(RootSystemType t) { return is_a(t); }

void print(int number, std::string const &title, Criterion const &c)
{
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << number << ". " << title;
  if (!c.note.empty())
    std::cout << " -- " << c.note;
  std::cout << "\n";
}

} // namespace

int main()
{
  auto types = verify::builtin_types();
  auto reports = verify::run_all(types);
  bool all_ok = true;
  auto finish = [&](int n, std::string const &title, Criterion const &c) {
    print(n, title, c);
    all_ok = all_ok && c.ok;
  };

  {
    Criterion c;
    require_status(c, reports, "counts", any_type, Status::pass);
    for (auto t : types) {
      auto rs = build(t);
      auto ab = enumerate_abelian(rs);
      c.require(ab.size() == (std::size_t{1} << t.rank), t.name() + ": |Ab| = " + std::to_string(ab.size()));
      int hstar = verify::classical_data(t).dual_coxeter;
      c.require(static_cast<int>(heisenberg(rs).size()) == 2 * hstar - 3, t.name() + ": |h| != 2h*-3");
      for (auto const &cell : tau_partition(rs, ab).cells)
        c.require(static_cast<int>(cell.min.size()) == theta_distance(rs, rs.coeffs(cell.mu)) + 1,
                  t.name() + ": |I(mu)_min| wrong");
    }
    if (c.ok)
      c.note = std::to_string(types.size()) + " systems";
    finish(1, "counts |Ab| = 2^rank, |h| = 2h*-3, |I(mu)_min| = (rho, theta^vee - mu^vee) + 1", c);
  }

  {
    Criterion c;
    require_status(c, reports, "meet_theorem", any_type, Status::pass);
    std::size_t pairs = 0;
    for (auto t : types) {
      auto n = build(t).size();
      pairs += n * (n + 1) / 2;
    }
    if (c.ok)
      c.note = std::to_string(pairs) + " unordered pairs";
    finish(2, "closed-form join/meet agree with brute-force oracles", c);
  }

  {
    Criterion c;
    require_status(c, reports, "modularity", any_type, Status::pass);
    for (int n = 3; n <= 7; ++n) {
      auto rs = build({Family::A, n});
      auto lc = is_modular_lattice(theta_interval(rs));
      c.require(lc.outcome == LatticeCheck::Outcome::not_modular && lc.witness.size() == 3,
                rs.name() + ": Delta+ u {0} passes the modular law");
    }
    for (auto const &r : reports)
      if (is_a(r.system) && r.system.rank >= 3)
        c.require(r.find("interval")->detail.find("witness") != std::string::npos,
                  r.system.name() + ": no N-witness recorded");
    finish(3, "I<>=gamma> and Delta_alpha(i) modular; A_n Delta+ u {0} fails with witness", c);
  }

  {
    Criterion c;
    require_status(c, reports, "nc_maximum", non_a, Status::pass);
    auto e8 = build({Family::E, 8});
    auto hat = to_display(e8.type(), theta_floor_ceil(e8).floor, Numbering::paper);
    c.require(hat == Coeffs{1, 1, 2, 2, 3, 2, 1, 1}, "E8 floor(theta/2) = " + format_coeffs(hat));
    finish(4, "Delta+_nc = {gamma <= floor(theta/2)}, unique maximum in h; E8 value", c);
  }

  {
    Criterion c;
    require_status(c, reports, "exceptional_table", any_type, Status::pass);
    require_status(c, reports, "odd_ideals", any_type, Status::pass);
    std::size_t rows = 0;
    for (auto t : types)
      rows += verify::golden_odd_table(t).size();
    c.require(rows == 8, std::to_string(rows) + " golden rows");
    if (c.ok)
      c.note = "8 rows";
    finish(5, "exceptional odd-root table in Onishchik-Vinberg numbering; beta extreme in D/E", c);
  }

  {
    Criterion c;
    require_status(c, reports, "main2", non_a, Status::pass);
    require_status(c, reports, "sl_n_example", type_a, Status::pass);
    for (auto const &r : reports)
      if (is_a(r.system) && r.system.rank >= 3) {
        auto const &d = r.find("sl_n_example")->detail;
        c.require(d.find("intersection {theta}") != std::string::npos, r.system.name() + ": counterexample missing");
      }
    finish(6, "main2 bijection for every S in non-A types; connected S and counterexample in A3-A7", c);
  }

  {
    Criterion c;
    require_status(c, reports, "envelope", any_type, Status::pass);
    finish(7, "connected-envelope identities for every S", c);
  }

  {
    Criterion c;
    require_status(c, reports, "ap_br", non_a, Status::pass);
    finish(8, "unique alpha_bar with |Pi_l| + alpha_bar a root; w^{-1}(alpha_bar) = -floor(theta/2)", c);
  }

  {
    Criterion c;
    require_status(c, reports, "interval", non_a, Status::pass);
    for (auto t : types) {
      if (is_a(t))
        continue;
      auto rs = build(t);
      bool de = t.family == Family::D || t.family == Family::E;
      auto j = theta_interval(rs);
      c.require(j.size() == (de ? 8u : 2u) && is_boolean_cube(j, de ? 3 : 1), t.name() + ": interval shape");
      c.require(odd_roots(rs).size() == (de ? 3u : 1u), t.name() + ": odd-root count");
    }
    finish(9, "interval is B^3 (D/E) or a 2-chain (B/C/F/G) with the stated heights", c);
  }

  {
    Criterion c;
    require_status(c, reports, "additivity", any_type, Status::pass);
    require_status(c, reports, "odd_ideals", any_type, Status::pass);
    finish(10, "Kostant additivity for all admissible (alpha, i, j); odd ideals maximal abelian", c);
  }

  {
    Criterion c;
    for (auto const &name : verify::check_names()) {
      auto target = name == "sl_n_example"        ? RootSystemType{Family::A, 4}
                    : name == "exceptional_table" ? RootSystemType{Family::E, 6}
                                                  : RootSystemType{Family::D, 4};
      verify::Options opts;
      opts.mutate = name;
      auto r = verify::run(target, opts);
      auto const *e = r.find(name);
      c.require(e && e->status == Status::fail && !e->detail.empty(), name + " corruption went undetected");
    }
    if (c.ok)
      c.note = std::to_string(verify::check_names().size()) + " seeded corruptions detected";
    finish(11, "harness self-test", c);
  }

  return all_ok ? 0 : 1;
}
