#ifndef ROOTPOSET_IO_HPP
#define ROOTPOSET_IO_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ideals.hpp"
#include "numbering.hpp"
#include "poset.hpp"
#include "root_set.hpp"
#include "root_system.hpp"
#include "verify.hpp"

namespace rootposet::io
{

using nlohmann::json;

/// {"system": ..., "numbering": ..., "data": ...}
inline json envelope(RootSystemType type, Numbering numbering, json data)
{
  return json{{"system", type.name()}, {"numbering", to_string(numbering)}, {"data", std::move(data)}};
}

inline json coeffs_json(RootSystem const &rs, std::span<int const> c, Numbering numbering)
{ return json(to_display(rs.type(), c, numbering)); }

inline json root_set_json(RootSystem const &rs, RootSet const &s, Numbering numbering)
{
  json arr = json::array();
  for (int id : s)
    arr.push_back(coeffs_json(rs, rs.coeffs(id), numbering));
  return arr;
}

/// Inverse of root_set_json. Throws std::invalid_argument if an entry is not a
/// positive root of rs.
inline RootSet root_set_from_json(RootSystem const &rs, json const &arr, Numbering numbering)
{
  if (!arr.is_array())
    throw std::invalid_argument("expected a JSON array of coefficient vectors");
  std::vector<int> ids;
  for (auto const &entry : arr) {
    auto display = entry.get<Coeffs>();
    auto id = rs.index_of(from_display(rs.type(), display, numbering));
    if (!id)
      throw std::invalid_argument("not a positive root: " + entry.dump());
    ids.push_back(*id);
  }
  return RootSet(std::move(ids));
}

inline std::string plain_coeffs(std::vector<int> const &v)
{
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

inline std::string display_string(RootSystem const &rs, int id, Numbering numbering)
{ return format_coeffs(to_display(rs.type(), rs.coeffs(id), numbering)); }

namespace detail
{

inline std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline int parse_int(std::string_view s, std::string_view token)
{
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw std::invalid_argument("malformed root token '" + std::string(token) + "'");
  return std::stoi(std::string(s));
}

} // namespace detail

/// Parses a root token into Bourbaki coefficients. Accepted forms, with simple
/// indices in the given display numbering:
///   "a1+2a2", "alpha1", "α1" (sums of simple roots),
///   "1,2" or "[1,2]" (coefficient vectors),
///   "theta", "theta-hat", "theta-tilde".
inline Coeffs parse_coeffs(RootSystem const &rs, std::string_view token, Numbering numbering)
{
  std::string t = detail::trim(token);
  if (t == "theta")
    return rs.coeffs(rs.theta());
  if (t == "theta-hat" || t == "theta-tilde") {
    auto h = theta_floor_ceil(rs);
    return t == "theta-hat" ? h.floor : h.ceil;
  }
  auto const rank = static_cast<std::size_t>(rs.rank());
  if (!t.empty() && (std::isdigit(static_cast<unsigned char>(t.front())) || t.front() == '[') &&
      t.find(',') != std::string::npos) {
    if (t.front() == '[') {
      if (t.back() != ']')
        throw std::invalid_argument("malformed root token '" + t + "'");
      t = t.substr(1, t.size() - 2);
    }
    Coeffs v;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ','))
      v.push_back(detail::parse_int(detail::trim(part), token));
    if (v.size() != rank)
      throw std::invalid_argument("root token '" + std::string(token) + "' has " + std::to_string(v.size()) +
                                  " coefficients, expected " + std::to_string(rank));
    return from_display(rs.type(), v, numbering);
  }
  if (t.empty() || t.back() == '+')
    throw std::invalid_argument("malformed root token '" + std::string(token) + "'");
  Coeffs display(rank, 0);
  std::stringstream ss(t);
  std::string term;
  bool any = false;
  while (std::getline(ss, term, '+')) {
    term = detail::trim(term);
    std::size_t pos = 0;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
      ++pos;
    int mult = pos ? detail::parse_int(term.substr(0, pos), token) : 1;
    std::string_view rest = std::string_view(term).substr(pos);
    for (std::string_view prefix : {"alpha", "α", "a"})
      if (rest.starts_with(prefix)) {
        rest.remove_prefix(prefix.size());
        break;
      }
    if (rest.size() == std::string_view(term).substr(pos).size())
      throw std::invalid_argument("malformed root token '" + std::string(token) + "'");
    rest = rest.starts_with('_') ? rest.substr(1) : rest;
    int index = detail::parse_int(rest, token);
    if (index < 1 || index > rs.rank())
      throw std::invalid_argument("simple root index out of range in '" + std::string(token) + "'");
    display[static_cast<std::size_t>(index - 1)] += mult;
    any = true;
  }
  if (!any)
    throw std::invalid_argument("empty root token");
  return from_display(rs.type(), display, numbering);
}

/// Like parse_coeffs but requires a positive root; returns its id.
inline int parse_root(RootSystem const &rs, std::string_view token, Numbering numbering)
{
  auto c = parse_coeffs(rs, token, numbering);
  auto id = rs.index_of(c);
  if (!id)
    throw std::invalid_argument("'" + std::string(token) + "' is not a positive root of " + rs.name());
  return *id;
}

/// Hasse diagram in DOT: one node per element labelled by its coefficient
/// vector, one edge per cover relation oriented from lower to higher.
inline std::string hasse_dot(PosetView const &view, Numbering numbering, std::string_view graph_name = "hasse")
{
  auto const &rs = view.system();
  std::ostringstream os;
  os << "// system=" << rs.name() << " numbering=" << to_string(numbering) << "\n";
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < view.size(); ++k)
    os << "  n" << k << " [label=\"" << format_coeffs(to_display(rs.type(), view.element(k), numbering)) << "\"];\n";
  for (auto [lo, hi] : view.cover_edges())
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s)
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

/// The coefficient vector as a CSV field, e.g. "1 2 1".
inline std::string csv_coeffs(RootSystem const &rs, int id, Numbering numbering)
{ return plain_coeffs(to_display(rs.type(), rs.coeffs(id), numbering)); }

inline json report_json(verify::CheckReport const &r, bool with_elapsed = true)
{
  json checks = json::array();
  for (auto const &c : r.checks) {
    json entry{{"name", c.name}, {"status", verify::to_string(c.status)}};
    if (c.status == verify::Status::fail)
      entry["witness"] = c.detail;
    else if (c.status == verify::Status::not_applicable)
      entry["reason"] = c.detail;
    else if (!c.detail.empty())
      entry["note"] = c.detail;
    if (with_elapsed)
      entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  return json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

} // namespace rootposet::io

#endif // ROOTPOSET_IO_HPP
