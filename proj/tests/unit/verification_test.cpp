#include <gtest/gtest.h>

#include "biotcube/verification.hpp"

namespace biotcube {
namespace {

class VerificationSuite : public ::testing::TestWithParam<double> {};

TEST_P(VerificationSuite, AllChecksPass) {
  const auto results = run_verification(StiffnessRatio(GetParam()), {});
  EXPECT_GE(results.size(), 20u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.module << '.' << r.name << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Ratios, VerificationSuite, ::testing::Values(0.7, 1.0, 2.0, 10.0));

TEST(Verification, QuickIsDeterministic) {
  const auto a = run_verification(StiffnessRatio(1.0), {7, true, 1e-9});
  const auto b = run_verification(StiffnessRatio(1.0), {7, true, 1e-9});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}

}  // namespace
}  // namespace biotcube
