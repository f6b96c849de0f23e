#include <gtest/gtest.h>

#include <rootposet/ideals.hpp>
#include <rootposet/weyl.hpp>

using namespace rootposet;

namespace
{

RootSystem sys(char const *name) { return build(RootSystemType::parse(name)); }

} // namespace

TEST(Reflect, Examples)
{
  for (char const *name : {"A3", "B2", "G2"}) {
    auto rs = sys(name);
    for (int i = 0; i < rs.rank(); ++i)
      EXPECT_EQ(reflect(rs, i, rs.coeffs(rs.simple(i))), negate(rs.coeffs(rs.simple(i)))) << name;
  }
  auto a2 = sys("A2");
  EXPECT_EQ(reflect(a2, 1, a2.coeffs(a2.theta())), (Coeffs{1, 0}));
  auto b2 = sys("B2");
  EXPECT_EQ(reflect(b2, 1, b2.coeffs(b2.theta())), (Coeffs{1, 0}));
  EXPECT_THROW(reflect(b2, 2, b2.coeffs(0)), std::out_of_range);
}

TEST(Reflect, IsAnInvolutionPreservingTheRootSet)
{
  auto rs = sys("F4");
  for (std::size_t k = 0; k < rs.size(); ++k)
    for (int i = 0; i < rs.rank(); ++i) {
      auto const &c = rs.coeffs(static_cast<int>(k));
      auto r = reflect(rs, i, c);
      EXPECT_EQ(reflect(rs, i, r), c);
      EXPECT_TRUE(rs.is_positive_root(r) || rs.is_positive_root(negate(r)));
    }
}

TEST(MinimalWord, Examples)
{
  auto a2 = sys("A2");
  EXPECT_EQ(minimal_word(a2, a2.theta()).length(), 0u);
  auto w = minimal_word(a2, a2.simple(0));
  EXPECT_EQ(w.letters, (std::vector<int>{1}));

  auto b2 = sys("B2");
  auto wb = minimal_word(b2, b2.simple(0));
  EXPECT_EQ(wb.letters, (std::vector<int>{1}));
  EXPECT_THROW(minimal_word(b2, b2.simple(1)), std::invalid_argument);
}

TEST(MinimalWord, LengthMatchesRhoPairingForAllLongRoots)
{
  for (char const *name : {"B4", "C4", "D5", "E7", "F4", "G2"}) {
    auto rs = sys(name);
    LongRootOrbit orbit(rs);
    for (int mu : rs.long_positive_roots()) {
      auto w = minimal_word(rs, orbit, mu);
      EXPECT_EQ(static_cast<int>(w.length()), theta_distance(rs, rs.coeffs(mu))) << name;
      EXPECT_EQ(apply(rs, w, rs.coeffs(rs.theta())), rs.coeffs(mu));
      EXPECT_EQ(apply_inverse(rs, w, rs.coeffs(mu)), rs.coeffs(rs.theta()));
      EXPECT_EQ(inversion_set(rs, w).size(), w.length()) << name;
    }
  }
}

TEST(InversionSet, Examples)
{
  auto a2 = sys("A2");
  EXPECT_TRUE(inversion_set(a2, WeylWord{}).empty());
  auto w = minimal_word(a2, a2.simple(0));
  EXPECT_EQ(inversion_set(a2, w), (RootSet{a2.simple(1)}));
}

TEST(InversionSet, ConventionsDifferOnA3)
{
  // w_{alpha_1} = s2 s3 in A3, which is not an involution.
  auto a3 = sys("A3");
  auto w = minimal_word(a3, a3.simple(0));
  EXPECT_EQ(w.letters, (std::vector<int>{1, 2}));
  EXPECT_NE(inversion_set(a3, w, InversionConvention::maps_to_negative),
            inversion_set(a3, w, InversionConvention::inverse_maps_to_negative));
}

TEST(InversionSet, ValidatedConventionIsTheHardWiredOne)
{
  EXPECT_EQ(select_inversion_convention(default_convention_validation_types()), kInversionConvention);
}

TEST(LongRootOrbit, SizeIsTwiceTheNumberOfLongPositiveRoots)
{
  for (char const *name : {"A5", "B3", "C3", "E6", "F4", "G2"}) {
    auto rs = sys(name);
    EXPECT_EQ(LongRootOrbit(rs).size(), 2 * rs.long_positive_roots().size()) << name;
  }
}
