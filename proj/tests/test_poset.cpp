#include <gtest/gtest.h>

#include <rootposet/grading.hpp>
#include <rootposet/ideals.hpp>
#include <rootposet/poset.hpp>
#include <rootposet/root_system.hpp>

using namespace rootposet;

namespace
{

RootSystem sys(char const *name) { return build(RootSystemType::parse(name)); }

int id(RootSystem const &rs, Coeffs c)
{
  auto r = rs.index_of(c);
  if (!r)
    throw std::invalid_argument("not a root: " + format_coeffs(c));
  return *r;
}

} // namespace

TEST(Order, Examples)
{
  for (char const *name : {"A1", "B3", "E6", "G2"}) {
    auto rs = sys(name);
    EXPECT_TRUE(leq(rs, rs.simple(0), rs.theta())) << name;
  }
  auto a3 = sys("A3");
  EXPECT_FALSE(leq(a3, id(a3, {1, 1, 0}), id(a3, {0, 1, 1})));
  auto b2 = sys("B2");
  EXPECT_TRUE(leq(b2, id(b2, {1, 1}), id(b2, {1, 2})));
}

TEST(Join, Examples)
{
  auto a3 = sys("A3");
  EXPECT_EQ(join(a3, id(a3, {1, 1, 0}), id(a3, {0, 1, 1})), id(a3, {1, 1, 1}));
  EXPECT_EQ(join(a3, id(a3, {1, 0, 0}), id(a3, {0, 0, 1})), id(a3, {1, 1, 1}));
  for (std::size_t k = 0; k < a3.size(); ++k)
    EXPECT_EQ(join(a3, static_cast<int>(k), static_cast<int>(k)), static_cast<int>(k));
}

TEST(Meet, Examples)
{
  auto a3 = sys("A3");
  EXPECT_EQ(meet(a3, id(a3, {1, 1, 0}), id(a3, {0, 1, 1})), id(a3, {0, 1, 0}));
  EXPECT_FALSE(meet(a3, id(a3, {1, 0, 0}), id(a3, {0, 0, 1})).has_value());
  auto e7 = sys("E7");
  for (std::size_t k = 0; k < e7.size(); ++k)
    EXPECT_EQ(meet(e7, static_cast<int>(k), e7.theta()), static_cast<int>(k));
}

TEST(JoinMeet, ClosedFormMatchesOracleOnF4)
{
  auto rs = sys("F4");
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      int x = static_cast<int>(a), y = static_cast<int>(b);
      EXPECT_EQ(join_oracle(rs, x, y), join(rs, x, y));
      EXPECT_EQ(meet_oracle(rs, x, y), meet(rs, x, y));
    }
}

TEST(JoinMeet, RootOverloads)
{
  auto b2 = sys("B2");
  Root a(Coeffs{1, 0}), b(Coeffs{0, 1});
  EXPECT_EQ(join(b2, a, b).coeffs(), (Coeffs{1, 1}));
  EXPECT_FALSE(meet(b2, a, b).has_value());
}

TEST(Covers, Examples)
{
  auto a2 = sys("A2");
  EXPECT_TRUE(covers(a2, a2.theta()).upper.empty());
  EXPECT_EQ(covers(a2, a2.theta()).lower, (RootSet{a2.simple(0), a2.simple(1)}));
  auto e8 = sys("E8");
  for (std::size_t k = 0; k < e8.size(); ++k)
    EXPECT_LE(covers(e8, static_cast<int>(k)).upper.size(), 3u);
}

TEST(Modularity, UpperClosuresAndLevels)
{
  for (char const *name : {"A4", "B3", "D5", "E6", "G2"}) {
    auto rs = sys(name);
    for (std::size_t k = 0; k < rs.size(); ++k)
      EXPECT_TRUE(is_modular_lattice(PosetView(rs, upper_closure(rs, static_cast<int>(k)))).ok()) << name;
    for (int a = 0; a < rs.rank(); ++a) {
      auto g = grading(rs, a);
      for (int i = 1; i <= g.top; ++i)
        EXPECT_TRUE(is_modular_lattice(PosetView(rs, g.level(i))).ok()) << name;
    }
  }
}

TEST(Modularity, TypeAWithFormalBottomIsNotModular)
{
  auto a3 = sys("A3");
  PosetView v(a3, RootSet::all(a3), true);
  EXPECT_EQ(v.size(), 7u);
  auto lc = is_modular_lattice(v);
  EXPECT_TRUE(lc.is_lattice());
  ASSERT_EQ(lc.outcome, LatticeCheck::Outcome::not_modular);
  ASSERT_EQ(lc.witness.size(), 3u);
  auto x = lc.witness[0], b = lc.witness[2];
  EXPECT_TRUE(v.leq(x, b));
}

TEST(Modularity, SmallTypeAWithBottomIsModular)
{
  for (char const *name : {"A1", "A2"}) {
    auto rs = sys(name);
    EXPECT_TRUE(is_modular_lattice(PosetView(rs, RootSet::all(rs), true)).ok()) << name;
  }
}

TEST(Modularity, PosetWithoutMeetIsNotALattice)
{
  auto a2 = sys("A2");
  auto lc = is_modular_lattice(PosetView(a2, RootSet::all(a2)));
  EXPECT_EQ(lc.outcome, LatticeCheck::Outcome::no_meet);
  EXPECT_FALSE(lc.is_lattice());
}

TEST(Interval, Examples)
{
  auto d4 = sys("D4");
  auto j = interval(d4, id(d4, {0, 1, 0, 0}), id(d4, {1, 1, 1, 1}));
  EXPECT_EQ(j.size(), 8u);
  EXPECT_EQ(j.cover_edges().size(), 12u);
  EXPECT_TRUE(is_boolean_cube(j, 3));
  EXPECT_FALSE(is_boolean_cube(j, 2));

  auto b3 = sys("B3");
  auto seg = interval(b3, id(b3, {0, 1, 1}), id(b3, {1, 1, 1}));
  EXPECT_EQ(seg.size(), 2u);
  EXPECT_TRUE(is_boolean_cube(seg, 1));

  auto single = interval(b3, b3.theta(), b3.theta());
  EXPECT_EQ(single.size(), 1u);
  EXPECT_TRUE(is_boolean_cube(single, 0));

  EXPECT_THROW(interval(d4, d4.theta(), d4.simple(0)), std::invalid_argument);
  EXPECT_THROW(is_boolean_cube(j, 4), std::invalid_argument);
}

TEST(Interval, ChainOfThreeIsNotACube)
{
  auto a3 = sys("A3");
  auto chain = interval(a3, id(a3, {1, 0, 0}), id(a3, {1, 1, 1}));
  EXPECT_EQ(chain.size(), 3u);
  EXPECT_FALSE(is_boolean_cube(chain, 1));
  EXPECT_FALSE(is_boolean_cube(chain, 2));
}

TEST(PosetView, CoverEdgesPointUpward)
{
  auto e6 = sys("E6");
  PosetView v(e6, RootSet::all(e6));
  for (auto [lo, hi] : v.cover_edges()) {
    EXPECT_TRUE(v.leq(lo, hi));
    EXPECT_EQ(v.height_of(hi), v.height_of(lo) + 1);
  }
}
