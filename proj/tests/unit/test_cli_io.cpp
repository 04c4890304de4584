#include <gtest/gtest.h>

#include "report.hpp"
#include "trigonal/verify.hpp"

using namespace trigonal;

TEST(CliIo, ParsesComplexLiterals) {
  EXPECT_EQ(io::parse_complex("1.5"), cplx(1.5L, 0));
  EXPECT_EQ(io::parse_complex("0.1,-0.25"), cplx(0.1, -0.25));
  EXPECT_EQ(io::parse_complex("1e-3"), cplx(1e-3, 0));
  EXPECT_THROW(io::parse_complex("1,2,3"), NumericError);
  EXPECT_THROW(io::parse_complex("abc"), NumericError);
}

TEST(CliIo, ParsesGridAndVector) {
  const auto g = io::parse_grid("1e-1,1e-2,1e-3");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[2], cplx(1e-3, 0));
  const CVec v = io::parse_vector("0.1,0.2;0.3;-1,0");
  ASSERT_EQ(v.size(), 3);
  EXPECT_EQ(v[0], cplx(0.1, 0.2));
}

TEST(CliIo, ObservableKeys) {
  EXPECT_EQ(io::observable_key("omega'_13"), "omega_p_13");
  EXPECT_EQ(io::observable_key("det omega'"), "det_omega_p");
  EXPECT_EQ(io::observable_key("omega'' block"), "omega_pp_block");
}

TEST(CliIo, JsonRoundTripIsByteStable) {
  const PeriodData pd = compute_periods(FamilyParams{2, 3, 0.1L});
  const std::string first = io::to_json(pd).dump(2);
  const std::string second = io::ordered_json::parse(first).dump(2);
  EXPECT_EQ(first, second);
}

TEST(CliIo, CheckRowsCarryForm) {
  CheckList rows{{"s", "a", 1e-3L, 1e-8L, true}, {"s", "b", 1e-12L, 1e-8L, false}};
  const auto j = io::to_json(rows);
  EXPECT_EQ(j[0]["form"], "displayed");
  EXPECT_EQ(j[1]["pass"], true);
  EXPECT_TRUE(all_pass(rows));
}
