/*
   Copyright 2026 The norlund authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "norlund/verify.hpp"

#include <gtest/gtest.h>

namespace {

using norlund::CheckResult;
using norlund::VerifyOptions;
using norlund::run_verification;

TEST(Verify, AllSuitesPassAtSmallBounds) {
    const auto results = run_verification(VerifyOptions{3, 4, 4, false});
    ASSERT_FALSE(results.empty());
    for (const auto& result : results) {
        EXPECT_TRUE(result.pass) << result.suite << ": " << result.detail;
    }
}

TEST(Verify, DegenerateBoundsStillPass) {
    for (const auto& result : run_verification(VerifyOptions{1, 1, 1, false})) {
        EXPECT_TRUE(result.pass) << result.suite << ": " << result.detail;
    }
}

TEST(Verify, CorruptedTriangleFailsExactlyTheTriangleSuite) {
    const auto results = run_verification(VerifyOptions{3, 4, 4, true});
    bool found = false;
    for (const auto& result : results) {
        if (result.suite == "dilcher-triangle-mp") {
            found = true;
            EXPECT_FALSE(result.pass);
            EXPECT_NE(result.detail.find("N=5"), std::string::npos) << result.detail;
            EXPECT_NE(result.detail.find("expected"), std::string::npos) << result.detail;
        } else {
            EXPECT_TRUE(result.pass) << result.suite << " should not be affected";
        }
    }
    EXPECT_TRUE(found);
}

TEST(Verify, DeterministicSuiteOrder) {
    const auto first = run_verification(VerifyOptions{2, 2, 2, false});
    const auto second = run_verification(VerifyOptions{2, 2, 2, false});
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(first[i].suite, second[i].suite);
    }
}

TEST(Verify, RejectsNonPositiveBounds) {
    EXPECT_THROW(run_verification(VerifyOptions{0, 1, 1, false}), norlund::DomainError);
    EXPECT_THROW(run_verification(VerifyOptions{1, 0, 1, false}), norlund::DomainError);
    EXPECT_THROW(run_verification(VerifyOptions{1, 1, -2, false}), norlund::DomainError);
}

}  // namespace
