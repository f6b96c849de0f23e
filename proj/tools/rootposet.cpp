// rootposet: inspect root posets, abelian ideals and gradings, and run the
// theorem harness.
//
// Exit codes: 0 success, 1 a theorem check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <rootposet/grading.hpp>
#include <rootposet/ideals.hpp>
#include <rootposet/io.hpp>
#include <rootposet/numbering.hpp>
#include <rootposet/poset.hpp>
#include <rootposet/root_system.hpp>
#include <rootposet/verify.hpp>

using namespace rootposet;
using io::json;

namespace
{

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, dot, plain };

Format parse_format(std::string const &s)
{
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "dot") return Format::dot;
  if (s == "plain") return Format::plain;
  throw UsageError("unknown format '" + s + "'");
}

struct Session
{
  Numbering numbering = Numbering::paper;
  Format format = Format::plain;
  std::ostringstream out;

  std::string header(RootSystem const &rs) const
  { return "# system=" + rs.name() + " numbering=" + to_string(numbering) + "\n"; }

  std::vector<int> display(RootSystem const &rs, int id) const { return to_display(rs.type(), rs.coeffs(id), numbering); }
  std::string bracket(RootSystem const &rs, int id) const { return io::display_string(rs, id, numbering); }

  void require_not_dot() const
  {
    if (format == Format::dot)
      throw UsageError("--format dot is only valid for hasse");
  }

  std::string csv_header(RootSystem const &rs) const
  {
    std::string h;
    for (int i = 1; i <= rs.rank(); ++i)
      h += (i > 1 ? "," : "") + std::string("c") + std::to_string(i);
    return h + "\n";
  }

  std::string csv_row(RootSystem const &rs, int id) const
  {
    std::string row;
    auto d = display(rs, id);
    for (std::size_t k = 0; k < d.size(); ++k)
      row += (k ? "," : "") + std::to_string(d[k]);
    return row + "\n";
  }
};

RootSystem build_type(std::string const &token)
{
  try {
    return build(RootSystemType::parse(token));
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
}

int parse_root_token(RootSystem const &rs, std::string const &token, Numbering numbering)
{
  try {
    return io::parse_root(rs, token, numbering);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
}

/// A simple-root argument: a bare display index ("2") or a root token ("a2").
int parse_simple_token(RootSystem const &rs, std::string const &token, Numbering numbering)
{
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
    int k = std::stoi(token);
    if (k < 1 || k > rs.rank())
      throw UsageError("simple root index " + token + " out of range");
    return simple_from_display(rs.type(), k - 1, numbering);
  }
  int id = parse_root_token(rs, token, numbering);
  if (rs.root(id).height() != 1)
    throw UsageError("'" + token + "' is not a simple root");
  return rs.root(id).support().front();
}

void emit_root_list(Session &s, RootSystem const &rs, RootSet const &roots)
{
  s.require_not_dot();
  switch (s.format) {
  case Format::json: s.out << io::envelope(rs.type(), s.numbering, io::root_set_json(rs, roots, s.numbering)).dump(2) << "\n"; break;
  case Format::csv:
    s.out << s.csv_header(rs);
    for (int id : roots)
      s.out << s.csv_row(rs, id);
    break;
  default:
    s.out << s.header(rs);
    for (int id : roots)
      s.out << io::plain_coeffs(s.display(rs, id)) << "\n";
  }
}

void emit_vector(Session &s, RootSystem const &rs, Coeffs const &c)
{
  s.require_not_dot();
  auto d = to_display(rs.type(), c, s.numbering);
  switch (s.format) {
  case Format::json: s.out << io::envelope(rs.type(), s.numbering, json(d)).dump(2) << "\n"; break;
  case Format::csv: {
    s.out << s.csv_header(rs);
    for (std::size_t k = 0; k < d.size(); ++k)
      s.out << (k ? "," : "") << d[k];
    s.out << "\n";
    break;
  }
  default: s.out << s.header(rs) << io::plain_coeffs(d) << "\n";
  }
}

int simple_label(RootSystem const &rs, int simple, Numbering numbering)
{ return simple_to_display(rs.type(), simple, numbering) + 1; }

void emit_gradings(Session &s, RootSystem const &rs)
{
  s.require_not_dot();
  std::vector<Grading> gs;
  for (int p = 0; p < rs.rank(); ++p)
    gs.push_back(grading(rs, simple_from_display(rs.type(), p, s.numbering)));
  switch (s.format) {
  case Format::json: {
    json data = json::array();
    for (auto const &g : gs) {
      json sizes = json::array();
      for (auto const &l : g.levels)
        sizes.push_back(l.size());
      data.push_back({{"alpha", simple_label(rs, g.pivot, s.numbering)},
                      {"ht_alpha_theta", g.top},
                      {"d", g.d},
                      {"odd", g.odd()},
                      {"level_sizes", sizes}});
    }
    s.out << io::envelope(rs.type(), s.numbering, data).dump(2) << "\n";
    break;
  }
  case Format::csv:
    s.out << "alpha,ht_alpha_theta,d,odd,level_sizes\n";
    for (auto const &g : gs) {
      std::string sizes;
      for (auto const &l : g.levels)
        sizes += (sizes.empty() ? "" : " ") + std::to_string(l.size());
      s.out << simple_label(rs, g.pivot, s.numbering) << "," << g.top << "," << g.d << "," << (g.odd() ? 1 : 0) << ","
            << sizes << "\n";
    }
    break;
  default:
    s.out << s.header(rs);
    for (auto const &g : gs) {
      s.out << "alpha_" << simple_label(rs, g.pivot, s.numbering) << " ht=" << g.top << " d=" << g.d
            << (g.odd() ? " odd" : " even") << " sizes=";
      for (std::size_t i = 0; i < g.levels.size(); ++i)
        s.out << (i ? "," : "") << g.levels[i].size();
      s.out << "\n";
    }
  }
}

void emit_odd_table(Session &s, RootSystem const &rs)
{
  s.require_not_dot();
  auto rows = odd_rows(rs, maximal_abelian_ideals(rs));
  auto paper = [&](int i) { return simple_to_display(rs.type(), i, Numbering::paper) + 1; };
  std::sort(rows.begin(), rows.end(), [&](OddRow const &a, OddRow const &b) { return paper(a.alpha) < paper(b.alpha); });
  switch (s.format) {
  case Format::json: {
    json data = json::array();
    for (auto const &r : rows)
      data.push_back({{"alpha_paper", paper(r.alpha)},
                      {"alpha_bourbaki", r.alpha + 1},
                      {"d", r.d},
                      {"beta_paper", paper(r.beta)},
                      {"beta_bourbaki", r.beta + 1},
                      {"ht_beta_theta", r.beta_height}});
    s.out << io::envelope(rs.type(), s.numbering, data).dump(2) << "\n";
    break;
  }
  case Format::csv:
    s.out << "alpha_paper,alpha_bourbaki,d,beta_paper,beta_bourbaki,ht_beta_theta\n";
    for (auto const &r : rows)
      s.out << paper(r.alpha) << "," << r.alpha + 1 << "," << r.d << "," << paper(r.beta) << "," << r.beta + 1 << ","
            << r.beta_height << "\n";
    break;
  default:
    s.out << s.header(rs) << "# columns: alpha d beta ht_beta(theta); paper (bourbaki)\n";
    for (auto const &r : rows)
      s.out << "a" << paper(r.alpha) << " (a" << r.alpha + 1 << ")  " << r.d << "  a" << paper(r.beta) << " (a"
            << r.beta + 1 << ")  " << r.beta_height << "\n";
  }
}

void emit_ideals(Session &s, RootSystem const &rs, std::vector<RootSet> const &ideals,
                 std::vector<std::string> const &labels, bool count_only)
{
  s.require_not_dot();
  if (count_only) {
    switch (s.format) {
    case Format::json: s.out << io::envelope(rs.type(), s.numbering, json{{"count", ideals.size()}}).dump(2) << "\n"; break;
    case Format::csv: s.out << "count\n" << ideals.size() << "\n"; break;
    default: s.out << s.header(rs) << ideals.size() << "\n";
    }
    return;
  }
  switch (s.format) {
  case Format::json: {
    json data = json::array();
    for (auto const &I : ideals)
      data.push_back(io::root_set_json(rs, I, s.numbering));
    s.out << io::envelope(rs.type(), s.numbering, data).dump(2) << "\n";
    break;
  }
  case Format::csv:
    s.out << "ideal,label,size,roots\n";
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      std::string roots;
      for (int id : ideals[k])
        roots += (roots.empty() ? "" : " ") + s.bracket(rs, id);
      s.out << k << "," << (labels.empty() ? "" : labels[k]) << "," << ideals[k].size() << "," << io::csv_field(roots)
            << "\n";
    }
    break;
  default:
    s.out << s.header(rs);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      if (!labels.empty())
        s.out << labels[k] << ": ";
      if (ideals[k].empty())
        s.out << "{}";
      for (int id : ideals[k])
        s.out << (id == ideals[k].front() ? "" : " ") << s.bracket(rs, id);
      s.out << "\n";
    }
  }
}

void emit_hasse(Session &s, PosetView const &view)
{
  auto const &rs = view.system();
  switch (s.format) {
  case Format::json: {
    json nodes = json::array(), edges = json::array();
    for (std::size_t k = 0; k < view.size(); ++k)
      nodes.push_back(to_display(rs.type(), view.element(k), s.numbering));
    for (auto [lo, hi] : view.cover_edges())
      edges.push_back({lo, hi});
    s.out << io::envelope(rs.type(), s.numbering, json{{"nodes", nodes}, {"edges", edges}}).dump(2) << "\n";
    break;
  }
  case Format::csv:
    s.out << "lower,upper\n";
    for (auto [lo, hi] : view.cover_edges())
      s.out << io::plain_coeffs(to_display(rs.type(), view.element(lo), s.numbering)) << ","
            << io::plain_coeffs(to_display(rs.type(), view.element(hi), s.numbering)) << "\n";
    break;
  case Format::plain:
    s.out << s.header(rs) << "# nodes=" << view.size() << " edges=" << view.cover_edges().size() << "\n";
    for (auto [lo, hi] : view.cover_edges())
      s.out << format_coeffs(to_display(rs.type(), view.element(lo), s.numbering)) << " -> "
            << format_coeffs(to_display(rs.type(), view.element(hi), s.numbering)) << "\n";
    break;
  case Format::dot: s.out << io::hasse_dot(view, s.numbering); break;
  }
}

int emit_verify(Session &s, std::vector<verify::CheckReport> const &reports, bool timing)
{
  s.require_not_dot();
  switch (s.format) {
  case Format::json: {
    json arr = json::array();
    for (auto const &r : reports)
      arr.push_back(io::envelope(r.system, s.numbering, io::report_json(r, timing)));
    s.out << arr.dump(2) << "\n";
    break;
  }
  case Format::csv:
    s.out << "system,check,status,detail" << (timing ? ",elapsed_ms" : "") << "\n";
    for (auto const &r : reports)
      for (auto const &c : r.checks) {
        s.out << r.system.name() << "," << c.name << "," << verify::to_string(c.status) << "," << io::csv_field(c.detail);
        if (timing)
          s.out << "," << c.elapsed_ms;
        s.out << "\n";
      }
    break;
  default:
    s.out << "# numbering=" << to_string(s.numbering) << "\n";
    for (auto const &r : reports) {
      s.out << r.system.name() << " " << (r.passed() ? "PASS" : "FAIL") << "\n";
      for (auto const &c : r.checks) {
        s.out << "  " << c.name << " " << verify::to_string(c.status);
        if (!c.detail.empty())
          s.out << ": " << c.detail;
        s.out << "\n";
      }
    }
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](verify::CheckReport const &r) { return r.passed(); });
  return ok ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Root posets, abelian ideals and gradings of simple Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_opt, out_path;
  app.add_option("--format", format_opt, "Output format: json, csv, dot or plain");
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  std::string type_token;

  auto *show = app.add_subcommand("show", "Print roots, theta, the Heisenberg ideal and related sets");
  std::string what;
  show->add_option("--type", type_token, "Root system, e.g. E8")->required();
  show->add_option("what", what, "roots|theta|theta-half|heisenberg|com|nc|gradings")
      ->required()
      ->check(CLI::IsMember({"roots", "theta", "theta-half", "heisenberg", "com", "nc", "gradings"}));

  auto *ideals = app.add_subcommand("ideals", "Enumerate abelian ideals");
  std::string cell_token;
  bool want_maximal = false, want_count = false, want_abelian = false;
  ideals->add_option("--type", type_token, "Root system")->required();
  auto *abelian_flag = ideals->add_flag("--abelian", want_abelian, "All abelian ideals (default)");
  auto *cell_opt = ideals->add_option("--cell", cell_token, "Only the tau-cell of a long positive root");
  auto *max_flag = ideals->add_flag("--maximal", want_maximal, "Maximal abelian ideals I(alpha)_max");
  abelian_flag->excludes(cell_opt)->excludes(max_flag);
  cell_opt->excludes(max_flag);
  ideals->add_flag("--count", want_count, "Print only the number of ideals");

  auto *grad = app.add_subcommand("gradings", "Gradings by simple roots and the odd-root table");
  bool want_table = false;
  grad->add_option("--type", type_token, "Root system")->required();
  grad->add_flag("--table", want_table, "Odd-root table (alpha, d, beta, ht_beta(theta)) in both numberings");

  auto *ver = app.add_subcommand("verify", "Run the theorem harness");
  std::vector<std::string> verify_types;
  bool verify_all = false, fail_fast = false, no_timing = false;
  std::string mutate;
  ver->add_option("--type", verify_types, "Root systems (repeatable or comma separated)")->delimiter(',');
  ver->add_flag("--all", verify_all, "A1-A7, B2-B7, C2-C7, D4-D7, E6, E7, E8, F4, G2");
  ver->add_flag("--fail-fast", fail_fast, "Stop after the first system with a failing check");
  ver->add_flag("--no-timing", no_timing, "Omit elapsed times from the report");
  ver->add_option("--mutate", mutate, "Corrupt the data behind one check (self-test)")
      ->check(CLI::IsMember(verify::check_names()));

  auto *hasse = app.add_subcommand("hasse", "Hasse diagram of a subposet");
  std::vector<std::string> interval_tokens, level_tokens;
  std::string ideal_token;
  hasse->add_option("--type", type_token, "Root system")->required();
  auto *iv = hasse->add_option("--interval", interval_tokens, "Interval [a, b]")->expected(2);
  auto *id = hasse->add_option("--ideal", ideal_token, "Upper closure of a root");
  auto *lv = hasse->add_option("--level", level_tokens, "Level i of the grading by a simple root")->expected(2);
  iv->excludes(id)->excludes(lv);
  id->excludes(lv);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Session s;
  try {
    s.numbering = numbering_from_env();
    if (!format_opt.empty())
      s.format = parse_format(format_opt);
    else if (hasse->parsed())
      s.format = Format::dot;

    int rc = 0;
    if (show->parsed()) {
      RootSystem rs = build_type(type_token);
      if (what == "roots")
        emit_root_list(s, rs, RootSet::all(rs));
      else if (what == "theta")
        emit_vector(s, rs, rs.coeffs(rs.theta()));
      else if (what == "theta-half")
        emit_vector(s, rs, theta_floor_ceil(rs).floor);
      else if (what == "heisenberg")
        emit_root_list(s, rs, heisenberg(rs));
      else if (what == "com")
        emit_root_list(s, rs, commutative_roots(rs));
      else if (what == "nc")
        emit_root_list(s, rs, noncommutative_roots(rs));
      else
        emit_gradings(s, rs);
    } else if (ideals->parsed()) {
      RootSystem rs = build_type(type_token);
      std::vector<RootSet> list;
      std::vector<std::string> labels;
      if (!cell_token.empty()) {
        int mu = parse_root_token(rs, cell_token, s.numbering);
        if (!rs.is_long_root(mu))
          throw UsageError("'" + cell_token + "' is not a long positive root");
        list = tau_partition(rs).cell(mu).members;
      } else if (want_maximal) {
        for (auto const &[a, I] : maximal_abelian_ideals(rs)) {
          list.push_back(I);
          labels.push_back("alpha_" + std::to_string(simple_label(rs, a, s.numbering)));
        }
      } else {
        list = enumerate_abelian(rs);
      }
      emit_ideals(s, rs, list, labels, want_count);
    } else if (grad->parsed()) {
      RootSystem rs = build_type(type_token);
      if (want_table)
        emit_odd_table(s, rs);
      else
        emit_gradings(s, rs);
    } else if (ver->parsed()) {
      std::vector<RootSystemType> types;
      if (verify_all)
        types = verify::builtin_types();
      for (auto const &t : verify_types)
        types.push_back(build_type(t).type());
      if (types.empty())
        throw UsageError("verify needs --type or --all");
      verify::Options opts;
      opts.numbering = s.numbering;
      opts.fail_fast = fail_fast;
      if (!mutate.empty())
        opts.mutate = mutate;
      rc = emit_verify(s, verify::run_all(types, opts), !no_timing);
    } else if (hasse->parsed()) {
      RootSystem rs = build_type(type_token);
      std::optional<PosetView> view;
      if (!interval_tokens.empty()) {
        Coeffs lo_c;
        try {
          lo_c = io::parse_coeffs(rs, interval_tokens[0], s.numbering);
        } catch (std::invalid_argument const &e) {
          throw UsageError(e.what());
        }
        int hi = parse_root_token(rs, interval_tokens[1], s.numbering);
        if (is_zero(lo_c)) {
          view.emplace(rs, RootSet::filter(rs, [&](int k) { return leq(rs, k, hi); }), true);
        } else {
          int lo = parse_root_token(rs, interval_tokens[0], s.numbering);
          if (!leq(rs, lo, hi))
            throw UsageError("interval bounds are not comparable: " + interval_tokens[0] + " is not below " +
                             interval_tokens[1]);
          view.emplace(interval(rs, lo, hi));
        }
      } else if (!ideal_token.empty()) {
        view.emplace(rs, upper_closure(rs, parse_root_token(rs, ideal_token, s.numbering)));
      } else if (!level_tokens.empty()) {
        int alpha = parse_simple_token(rs, level_tokens[0], s.numbering);
        int i = 0;
        try {
          i = std::stoi(level_tokens[1]);
        } catch (std::exception const &) {
          throw UsageError("level must be an integer");
        }
        auto g = grading(rs, alpha);
        if (i < 0 || i > g.top)
          throw UsageError("level " + level_tokens[1] + " out of range 0.." + std::to_string(g.top));
        view.emplace(rs, g.level(i));
      } else {
        view.emplace(rs, RootSet::all(rs));
      }
      emit_hasse(s, *view);
    }

    if (out_path.empty()) {
      std::cout << s.out.str();
    } else {
      std::ofstream f(out_path);
      if (!f)
        throw UsageError("cannot open " + out_path);
      f << s.out.str();
    }
    return rc;
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (TheoremViolation const &e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitFailure;
  }
}
