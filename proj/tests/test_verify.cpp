#include <gtest/gtest.h>

#include <rootposet/io.hpp>
#include <rootposet/verify.hpp>

using namespace rootposet;
using verify::Status;

namespace
{

RootSystemType type(char const *name) { return RootSystemType::parse(name); }

/// A system on which the named check's corruption is live.
RootSystemType mutation_target(std::string const &check)
{
  if (check == "sl_n_example")
    return type("A4");
  if (check == "exceptional_table")
    return type("E6");
  return type("D4");
}

} // namespace

TEST(Verify, EveryCheckAppearsOncePerSystem)
{
  auto r = verify::run(type("B3"));
  ASSERT_EQ(r.checks.size(), verify::check_names().size());
  for (std::size_t k = 0; k < r.checks.size(); ++k)
    EXPECT_EQ(r.checks[k].name, verify::check_names()[k]);
}

TEST(Verify, A2PassesWithTypeAExclusionsMarked)
{
  auto r = verify::run(type("A2"));
  EXPECT_TRUE(r.passed());
  for (char const *name : {"nc_maximum", "main1", "main2", "ap_br"}) {
    auto const *c = r.find(name);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::not_applicable) << name;
    EXPECT_NE(c->detail.find("type A excluded"), std::string::npos);
  }
  EXPECT_EQ(r.find("sl_n_example")->status, Status::pass);
}

TEST(Verify, A3RecordsTheCounterexample)
{
  auto r = verify::run(type("A3"));
  EXPECT_TRUE(r.passed());
  auto const *m2 = r.find("main2");
  EXPECT_EQ(m2->status, Status::not_applicable);
  EXPECT_NE(m2->detail.find("S={alpha_1,alpha_3}"), std::string::npos) << m2->detail;
  EXPECT_NE(m2->detail.find("max complement {[0,1,0]}"), std::string::npos) << m2->detail;
  EXPECT_EQ(r.find("interval")->status, Status::pass);
  EXPECT_NE(r.find("interval")->detail.find("witness"), std::string::npos);
}

TEST(Verify, E8Main2CoversEveryNonemptySubset)
{
  auto r = verify::run(type("E8"));
  EXPECT_TRUE(r.passed());
  auto const *m2 = r.find("main2");
  EXPECT_EQ(m2->status, Status::pass);
  EXPECT_EQ(m2->detail, "255 subsets");
  EXPECT_EQ(r.find("sl_n_example")->status, Status::not_applicable);
}

TEST(Verify, NonATypesHaveNoNotApplicableExceptTheSlNExample)
{
  for (char const *name : {"B4", "C3", "D5", "F4", "G2"}) {
    auto r = verify::run(type(name));
    EXPECT_TRUE(r.passed()) << name;
    for (auto const &c : r.checks)
      EXPECT_TRUE(c.name == "sl_n_example" || c.status == Status::pass) << name << " " << c.name;
  }
}

TEST(Verify, ReportsAreDeterministicApartFromTiming)
{
  auto a = verify::run_all({type("D5"), type("G2")});
  auto b = verify::run_all({type("D5"), type("G2")});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    EXPECT_EQ(io::report_json(a[k], false).dump(), io::report_json(b[k], false).dump());
}

TEST(Verify, FailFastStopsAfterTheFirstFailingSystem)
{
  verify::Options opts;
  opts.mutate = "root_system";
  opts.fail_fast = true;
  auto reports = verify::run_all({type("A2"), type("B2"), type("G2")}, opts);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].passed());
}

TEST(Verify, UnknownMutationIsRejected)
{
  verify::Options opts;
  opts.mutate = "no_such_check";
  EXPECT_THROW(verify::run(type("A2"), opts), std::invalid_argument);
}

class MutationSelfTest : public ::testing::TestWithParam<std::string>
{};

TEST_P(MutationSelfTest, CorruptionIsDetectedWithAWitness)
{
  verify::Options opts;
  opts.mutate = GetParam();
  auto r = verify::run(mutation_target(GetParam()), opts);
  auto const *c = r.find(GetParam());
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::fail);
  EXPECT_FALSE(c->detail.empty());
}

INSTANTIATE_TEST_SUITE_P(AllChecks, MutationSelfTest, ::testing::ValuesIn(verify::check_names()),
                         [](auto const &info) { return info.param; });

TEST(Verify, GoldenTableStoresBothNumberings)
{
  for (auto const &row : verify::golden_odd_table(type("E8"))) {
    auto rs = build(type("E8"));
    EXPECT_EQ(simple_to_display(rs.type(), row.alpha_bourbaki - 1, Numbering::paper) + 1, row.alpha_paper);
    EXPECT_EQ(simple_to_display(rs.type(), row.beta_bourbaki - 1, Numbering::paper) + 1, row.beta_paper);
  }
}
