#include <gtest/gtest.h>

#include <rootposet/ideals.hpp>
#include <rootposet/numbering.hpp>

using namespace rootposet;

namespace
{

RootSystem sys(char const *name) { return build(RootSystemType::parse(name)); }

int id(RootSystem const &rs, Coeffs c) { return rs.index_of(c).value(); }

RootSet ids(RootSystem const &rs, std::vector<Coeffs> const &cs)
{
  std::vector<int> v;
  for (auto const &c : cs)
    v.push_back(id(rs, c));
  return RootSet(v);
}

Coeffs paper(RootSystem const &rs, Coeffs const &c) { return to_display(rs.type(), c, Numbering::paper); }

} // namespace

TEST(UpperClosure, Examples)
{
  auto e6 = sys("E6");
  EXPECT_EQ(upper_closure(e6, e6.theta()), (RootSet{e6.theta()}));
  auto b2 = sys("B2");
  EXPECT_EQ(upper_closure(b2, b2.simple(1)), ids(b2, {{0, 1}, {1, 1}, {1, 2}}));
  auto a2 = sys("A2");
  EXPECT_EQ(upper_closure(a2, a2.simple(0)), ids(a2, {{1, 0}, {1, 1}}));
  EXPECT_TRUE(is_upper_ideal(a2, upper_closure(a2, RootSet{a2.simple(0), a2.simple(1)})));
  EXPECT_FALSE(is_upper_ideal(a2, RootSet{a2.simple(0)}));
}

TEST(Abelian, Examples)
{
  auto g2 = sys("G2");
  EXPECT_TRUE(is_abelian(g2, RootSet{g2.theta()}));
  EXPECT_FALSE(is_abelian(g2, upper_closure(g2, id(g2, {1, 1}))));
  auto b2 = sys("B2");
  EXPECT_TRUE(is_abelian(b2, upper_closure(b2, b2.simple(0))));
  EXPECT_THROW(is_abelian(b2, RootSet{b2.simple(0)}), std::invalid_argument);
}

TEST(Commutative, Examples)
{
  for (char const *name : {"A1", "A4", "A7"}) {
    auto rs = sys(name);
    EXPECT_EQ(commutative_roots(rs), RootSet::all(rs)) << name;
    EXPECT_TRUE(noncommutative_roots(rs).empty());
  }
  auto g2 = sys("G2");
  EXPECT_EQ(noncommutative_roots(g2), ids(g2, {{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(max_elements(g2, noncommutative_roots(g2)), ids(g2, {{1, 1}}));
  auto b2 = sys("B2");
  EXPECT_EQ(noncommutative_roots(b2), ids(b2, {{0, 1}}));
}

TEST(ThetaHalves, Examples)
{
  auto e8 = sys("E8");
  auto h = theta_floor_ceil(e8);
  EXPECT_EQ(paper(e8, h.floor), (Coeffs{1, 1, 2, 2, 3, 2, 1, 1}));
  EXPECT_EQ(paper(e8, h.ceil), (Coeffs{1, 2, 2, 3, 3, 2, 1, 2}));
  for (char const *name : {"A1", "A3", "A6"})
    EXPECT_TRUE(is_zero(theta_floor_ceil(sys(name)).floor)) << name;
  auto d4 = sys("D4");
  EXPECT_EQ(theta_floor_ceil(d4).floor, (Coeffs{0, 1, 0, 0}));
  EXPECT_EQ(theta_floor_ceil(d4).ceil, (Coeffs{1, 1, 1, 1}));
}

TEST(Heisenberg, Examples)
{
  auto a2 = sys("A2");
  EXPECT_EQ(heisenberg(a2), RootSet::all(a2));
  EXPECT_EQ(heisenberg(sys("G2")).size(), 5u);
  EXPECT_EQ(heisenberg(sys("E8")).size(), 57u);
  for (char const *name : {"B5", "C4", "D6", "E7", "F4"}) {
    auto rs = sys(name);
    EXPECT_EQ(static_cast<int>(heisenberg(rs).size()), 2 * rs.dual_coxeter() - 3) << name;
  }
}

TEST(EnumerateAbelian, Counts)
{
  auto a2 = sys("A2");
  auto ab = enumerate_abelian(a2);
  std::sort(ab.begin(), ab.end());
  std::vector<RootSet> expected{RootSet{}, RootSet{a2.theta()}, ids(a2, {{1, 0}, {1, 1}}), ids(a2, {{0, 1}, {1, 1}})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(ab, expected);
  EXPECT_EQ(enumerate_abelian(sys("G2")).size(), 4u);
  EXPECT_EQ(enumerate_abelian(sys("E8")).size(), 256u);
  for (char const *name : {"B4", "C5", "D5", "F4"}) {
    auto rs = sys(name);
    EXPECT_EQ(enumerate_abelian(rs).size(), std::size_t{1} << rs.rank()) << name;
  }
}

TEST(EnumerateUpperIdeals, CatalanCountsInTypeA)
{
  // Upper ideals of the type A_n root poset are counted by Catalan numbers.
  EXPECT_EQ(enumerate_upper_ideals(sys("A3")).size(), 14u);
  EXPECT_EQ(enumerate_upper_ideals(sys("A4")).size(), 42u);
  EXPECT_EQ(enumerate_upper_ideals(sys("B3")).size(), 20u);
}

TEST(TauPartition, Examples)
{
  for (char const *name : {"A3", "B3", "G2", "E6"}) {
    auto rs = sys(name);
    auto part = tau_partition(rs);
    EXPECT_EQ(part.tau(RootSet{rs.theta()}), rs.theta()) << name;
    EXPECT_EQ(part.cells.size(), rs.long_positive_roots().size()) << name;
    std::size_t total = 0;
    for (auto const &c : part.cells) {
      total += c.members.size();
      EXPECT_EQ(c.min, c.formula_min);
      EXPECT_EQ(static_cast<int>(c.min.size()), theta_distance(rs, rs.coeffs(c.mu)) + 1);
    }
    EXPECT_EQ(total + 1, std::size_t{1} << rs.rank()) << name;
  }
  auto a2 = sys("A2");
  auto part = tau_partition(a2);
  EXPECT_EQ(part.tau(ids(a2, {{1, 0}, {1, 1}})), a2.simple(0));
  EXPECT_THROW(part.tau(RootSet{}), std::invalid_argument);
}

TEST(MaximalAbelian, Examples)
{
  auto a4 = sys("A4");
  for (auto const &[a, I] : maximal_abelian_ideals(a4))
    EXPECT_EQ(I, upper_closure(a4, a4.simple(a)));

  auto b2 = sys("B2");
  auto mb = maximal_abelian_ideals(b2);
  ASSERT_EQ(mb.size(), 1u);
  EXPECT_EQ(mb.begin()->second, ids(b2, {{1, 0}, {1, 1}, {1, 2}}));
  EXPECT_EQ(max_of_complement(b2, mb.begin()->second), ids(b2, {{0, 1}}));

  auto g2 = sys("G2");
  auto mg = maximal_abelian_ideals(g2);
  ASSERT_EQ(mg.size(), 1u);
  std::vector<Coeffs> got;
  for (int r : mg.begin()->second)
    got.push_back(paper(g2, g2.coeffs(r)));
  EXPECT_EQ(got, (std::vector<Coeffs>{{2, 1}, {3, 1}, {3, 2}}));
}

TEST(Extremes, Examples)
{
  auto d4 = sys("D4");
  RootSet top{d4.theta()};
  EXPECT_EQ(min_elements(d4, top), top);
  EXPECT_EQ(max_of_complement(d4, top), covers(d4, d4.theta()).lower);
  EXPECT_EQ(max_of_complement(d4, commutative_roots(d4)), ids(d4, {{0, 1, 0, 0}}));
}

TEST(CorootCriterion, Examples)
{
  auto a2 = sys("A2");
  LongRootOrbit oa(a2);
  EXPECT_EQ(min_via_coroot_criterion(a2, oa, a2.theta()), (RootSet{a2.theta()}));
  EXPECT_EQ(min_via_coroot_criterion(a2, oa, a2.simple(0)), (RootSet{a2.simple(0)}));

  auto d4 = sys("D4");
  LongRootOrbit od(d4);
  EXPECT_EQ(min_via_coroot_criterion(d4, od, id(d4, {1, 1, 1, 1})), ids(d4, {{1, 1, 1, 1}}));
}

TEST(CorootCriterion, AgreesWithCellMinimaEverywhere)
{
  for (char const *name : {"B4", "C3", "D5", "E6", "F4", "G2"}) {
    auto rs = sys(name);
    LongRootOrbit orbit(rs);
    auto part = tau_partition(rs);
    for (auto const &c : part.cells)
      EXPECT_EQ(min_via_coroot_criterion(rs, orbit, c.mu), min_elements(rs, c.min)) << name;
  }
}
