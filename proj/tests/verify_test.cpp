#include <gtest/gtest.h>

#include "htour/verify.hpp"

using namespace htour;

TEST(Verify, CensusCheckCatchesBrokenClassifier) {
  EXPECT_TRUE(verify::census_check([](const HoleyHT& A) { return four_type(A); }).passed);
  // Calls every structure C4.
  EXPECT_FALSE(verify::census_check([](const HoleyHT&) { return FourType::C4; }).passed);
  // Swaps the O4 and H4 labels.
  const auto swapped = verify::census_check([](const HoleyHT& A) {
    const FourType t = four_type(A);
    return t == FourType::O4 ? FourType::H4 : t == FourType::H4 ? FourType::O4 : t;
  });
  EXPECT_FALSE(swapped.passed);
  EXPECT_FALSE(swapped.failures.empty());
}

TEST(Verify, FastCriteriaPass) {
  const auto plan = verify::Plan::standard();
  for (int id : {1, 2, 6}) {
    const auto r = verify::run_criterion(id, plan);
    EXPECT_TRUE(r.passed) << verify::summary_line(r);
  }
}

TEST(Verify, PlansAndErrors) {
  EXPECT_EQ(verify::plan_for("quick").lemma_sizes, (std::vector<int>{6, 7}));
  EXPECT_EQ(verify::plan_for("full").obstruction_sizes, (std::vector<int>{6, 7, 8, 9}));
  EXPECT_THROW(verify::plan_for("thorough"), InputError);
  EXPECT_THROW(verify::run_criterion(8, verify::Plan::quick()), InputError);
}

TEST(Verify, SummaryAndJson) {
  verify::CriterionResult r{3, "example", true, {}, {}, 12.7, 1000};
  EXPECT_EQ(verify::summary_line(r), "PASS  [3] example  (12 ms)");
  r.check(false, "broken");
  EXPECT_EQ(verify::summary_line(r).substr(0, 4), "FAIL");
  const Json j = verify::results_json({r}, false);
  EXPECT_TRUE(j[0]["elapsed_ms"].is_null());
  EXPECT_EQ(j[0]["failures"], Json::array({"broken"}));
}
