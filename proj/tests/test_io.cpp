#include <random>

#include <gtest/gtest.h>

#include <rootposet/io.hpp>

using namespace rootposet;

namespace
{

RootSystem sys(char const *name) { return build(RootSystemType::parse(name)); }

} // namespace

TEST(RootTokens, SumSyntax)
{
  auto b2 = sys("B2");
  EXPECT_EQ(io::parse_coeffs(b2, "a1+2a2", Numbering::paper), (Coeffs{1, 2}));
  EXPECT_EQ(io::parse_coeffs(b2, "alpha1 + alpha2", Numbering::paper), (Coeffs{1, 1}));
  EXPECT_EQ(io::parse_coeffs(b2, "α2", Numbering::paper), (Coeffs{0, 1}));
  EXPECT_EQ(io::parse_coeffs(b2, "a_1", Numbering::paper), (Coeffs{1, 0}));
}

TEST(RootTokens, VectorSyntaxAndKeywords)
{
  auto d4 = sys("D4");
  EXPECT_EQ(io::parse_coeffs(d4, "1,2,1,1", Numbering::paper), (Coeffs{1, 2, 1, 1}));
  EXPECT_EQ(io::parse_coeffs(d4, "[0,1,0,0]", Numbering::paper), (Coeffs{0, 1, 0, 0}));
  EXPECT_EQ(io::parse_root(d4, "theta", Numbering::paper), d4.theta());
  EXPECT_EQ(io::parse_coeffs(d4, "theta-hat", Numbering::paper), (Coeffs{0, 1, 0, 0}));
  EXPECT_EQ(io::parse_coeffs(d4, "theta-tilde", Numbering::paper), (Coeffs{1, 1, 1, 1}));
}

TEST(RootTokens, NumberingIsApplied)
{
  auto e8 = sys("E8");
  auto paper = io::parse_coeffs(e8, "2,3,4,5,6,4,2,3", Numbering::paper);
  EXPECT_EQ(paper, e8.coeffs(e8.theta()));
  EXPECT_EQ(io::parse_coeffs(e8, "a1", Numbering::paper), unit(8, 7));
  EXPECT_EQ(io::parse_coeffs(e8, "a1", Numbering::bourbaki), unit(8, 0));
}

TEST(RootTokens, Malformed)
{
  auto a3 = sys("A3");
  for (char const *bad : {"", "a1+", "+a1", "b1", "a4", "a0", "1,2", "1,x,0", "[1,0,0", "a1++a2"})
    EXPECT_THROW(io::parse_coeffs(a3, bad, Numbering::paper), std::invalid_argument) << bad;
  EXPECT_THROW(io::parse_root(a3, "a1+a3", Numbering::paper), std::invalid_argument);
  EXPECT_THROW(io::parse_root(a3, "theta-hat", Numbering::paper), std::invalid_argument);
}

TEST(Json, EnvelopeShape)
{
  auto g2 = sys("G2");
  auto j = io::envelope(g2.type(), Numbering::paper, io::root_set_json(g2, RootSet{g2.theta()}, Numbering::paper));
  EXPECT_EQ(j["system"], "G2");
  EXPECT_EQ(j["numbering"], "paper");
  EXPECT_EQ(j["data"], io::json::parse("[[3,2]]"));
}

TEST(Json, RootSetRoundTripOverAllAbelianIdeals)
{
  for (char const *name : {"E6", "F4", "C4"}) {
    auto rs = sys(name);
    for (auto numbering : {Numbering::paper, Numbering::bourbaki})
      for (auto const &I : enumerate_abelian(rs)) {
        auto text = io::root_set_json(rs, I, numbering).dump();
        EXPECT_EQ(io::root_set_from_json(rs, io::json::parse(text), numbering), I) << name;
      }
  }
}

TEST(Json, RootSetRoundTripOnRandomSubsets)
{
  auto rs = sys("E8");
  std::mt19937 gen(20261016);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = RootSet::filter(rs, [&](int) { return coin(gen); });
    auto back = io::root_set_from_json(rs, io::json::parse(io::root_set_json(rs, s, Numbering::paper).dump()),
                                       Numbering::paper);
    EXPECT_EQ(back, s);
  }
}

TEST(Json, RejectsNonRoots)
{
  auto a2 = sys("A2");
  EXPECT_THROW(io::root_set_from_json(a2, io::json::parse("[[2,0]]"), Numbering::paper), std::invalid_argument);
  EXPECT_THROW(io::root_set_from_json(a2, io::json::parse("{}"), Numbering::paper), std::invalid_argument);
}

TEST(Dot, HasseOfTheD4Cube)
{
  auto d4 = sys("D4");
  auto view = interval(d4, d4.index_of(Coeffs{0, 1, 0, 0}).value(), d4.index_of(Coeffs{1, 1, 1, 1}).value());
  auto dot = io::hasse_dot(view, Numbering::paper);
  EXPECT_EQ(dot.rfind("// system=D4 numbering=paper", 0), 0u);
  auto count = [&](std::string const &needle) {
    std::size_t n = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1))
      ++n;
    return n;
  };
  EXPECT_EQ(count("[label="), 8u);
  EXPECT_EQ(count(" -> "), 12u);
  EXPECT_NE(dot.find("n0 [label=\"[0,1,0,0]\"]"), std::string::npos);
}

TEST(Csv, FieldQuoting)
{
  EXPECT_EQ(io::csv_field("plain"), "plain");
  EXPECT_EQ(io::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(io::csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}
