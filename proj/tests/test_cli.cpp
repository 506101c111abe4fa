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

// End-to-end tests against the installed binary: every subcommand, the three
// output formats, and the exit-code contract (0 ok, 1 verification failure,
// 2 usage/domain error).

#include <string>

#include <gtest/gtest.h>

#include "norlund/rational.hpp"
#include "subprocess.hpp"

namespace {

using testutil::CommandResult;

CommandResult run_cli(const std::string& args) {
    return testutil::run_command(std::string(NORLUND_CLI_PATH) + " " + args);
}

TEST(Cli, Bern) {
    EXPECT_EQ(run_cli("bern 1").output, "-1/2\n");
    EXPECT_EQ(run_cli("bern 0").output, "1\n");
    EXPECT_EQ(run_cli("bern 4").output, "-1/30\n");
    EXPECT_EQ(run_cli("bern 4").exit_code, 0);
}

TEST(Cli, Genbern) {
    EXPECT_EQ(run_cli("genbern 3 2").output, "-1/2\n");
    EXPECT_EQ(run_cli("genbern 0 9").output, "1\n");
    EXPECT_EQ(run_cli("genbern 1 3 --method stirling").output, "-3/2\n");
    for (const char* method : {"gf", "lucas", "recurrence", "auto"}) {
        EXPECT_EQ(run_cli("genbern 3 2 --method " + std::string(method)).output, "-1/2\n")
            << method;
    }
}

TEST(Cli, GenbernDomainErrorNamesTheRange) {
    const CommandResult result = run_cli("genbern 2 5 --method lucas");
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.output.find("lucas requires n >= p"), std::string::npos) << result.output;
}

TEST(Cli, Dilcher) {
    EXPECT_EQ(run_cli("dilcher 3 2").output, "2/5\n");
    EXPECT_EQ(run_cli("dilcher 1 3").output, "1/42\n");
    EXPECT_EQ(run_cli("dilcher 3 1").output, "1/2\n");
    for (const char* method : {"auto", "brute", "prop1", "prop2", "hyper", "mp", "coeff"}) {
        EXPECT_EQ(run_cli("dilcher 3 2 --method " + std::string(method)).output, "2/5\n")
            << method;
    }
}

TEST(Cli, DilcherDomainErrorNamesTheRange) {
    const CommandResult result = run_cli("dilcher 2 1 --method prop2");
    EXPECT_EQ(result.exit_code, 2);
    EXPECT_NE(result.output.find("prop2 requires 2n > N"), std::string::npos) << result.output;
}

TEST(Cli, NorlundTable) {
    EXPECT_EQ(run_cli("norlund 3").output, "[0, 0, 1/8, -1/8]\n");
    EXPECT_EQ(run_cli("norlund 0").output, "[1]\n");
}

TEST(Cli, StirlingTable) {
    EXPECT_EQ(run_cli("stirling1 3").output, "[2, -3, 1]\n");
    EXPECT_EQ(run_cli("stirling1 1").output, "[1]\n");
}

TEST(Cli, MpTable) {
    EXPECT_EQ(run_cli("mp 2").output, "[-1, 0, 2]\n");
    EXPECT_EQ(run_cli("mp 3").output, "[0, -8/3, 0, 4/3]\n");
}

TEST(Cli, DilcherTable) {
    EXPECT_EQ(run_cli("dilcher-table 1").output, "1\n");
    EXPECT_EQ(run_cli("dilcher-table 3").output, "1\n-1\n1/2 1/4\n");
}

TEST(Cli, JsonFormat) {
    EXPECT_EQ(run_cli("genbern 3 2 --format json").output,
              "{\"quantity\":\"genbern\",\"indices\":[3,2],\"method\":\"recurrence\","
              "\"num\":\"-1\",\"den\":\"2\"}\n");
    EXPECT_EQ(run_cli("dilcher-table 2 --format json").output,
              "{\"quantity\":\"dilcher_table\",\"indices\":[1,0],\"method\":\"recurrence\","
              "\"num\":\"1\",\"den\":\"1\"}\n"
              "{\"quantity\":\"dilcher_table\",\"indices\":[2,0],\"method\":\"recurrence\","
              "\"num\":\"-1\",\"den\":\"1\"}\n");
}

TEST(Cli, JsonResolvesAutoMethod) {
    const CommandResult small = run_cli("dilcher 3 1 --format json");
    EXPECT_NE(small.output.find("\"method\":\"small\""), std::string::npos) << small.output;
    const CommandResult boundary = run_cli("dilcher 2 1 --format json");
    EXPECT_NE(boundary.output.find("\"method\":\"prop1\""), std::string::npos) << boundary.output;
    const CommandResult coeff = run_cli("dilcher 2 2 --format json");
    EXPECT_NE(coeff.output.find("\"method\":\"coeff\""), std::string::npos) << coeff.output;
}

TEST(Cli, CsvFormat) {
    EXPECT_EQ(run_cli("bern 4 --format csv").output,
              "quantity,n,method,value\nbernoulli,4,egf,-1/30\n");
    EXPECT_EQ(run_cli("norlund 2 --format csv").output,
              "quantity,n,k,method,value\n"
              "norlund,2,0,lagrange,0\n"
              "norlund,2,1,lagrange,-1/12\n"
              "norlund,2,2,lagrange,1/4\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("unknown-command").exit_code, 2);
    EXPECT_EQ(run_cli("bern").exit_code, 2);
    EXPECT_EQ(run_cli("bern 2 --format xml").exit_code, 2);
    EXPECT_EQ(run_cli("genbern 3 2 --method newton").exit_code, 2);
    EXPECT_EQ(run_cli("bern -3").exit_code, 2);
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run_cli("--help").exit_code, 0);
    EXPECT_EQ(run_cli("dilcher --help").exit_code, 0);
}

TEST(Cli, VerifySmallBoundsPasses) {
    const CommandResult result = run_cli("verify --max-N 3 --max-n 4 --max-p 4");
    EXPECT_EQ(result.exit_code, 0) << result.output;
    EXPECT_NE(result.output.find("PASS dilcher-grand-crosscheck"), std::string::npos);
    EXPECT_EQ(result.output.find("FAIL"), std::string::npos) << result.output;
}

TEST(Cli, VerifyDegenerateBoundsPass) {
    EXPECT_EQ(run_cli("verify --max-N 1 --max-n 1 --max-p 1").exit_code, 0);
}

TEST(Cli, VerifyFaultInjectionFailsTriangleSuite) {
    const CommandResult result =
        run_cli("verify --max-N 2 --max-n 2 --max-p 2 --corrupt-triangle");
    EXPECT_EQ(result.exit_code, 1);
    EXPECT_NE(result.output.find("FAIL dilcher-triangle-mp"), std::string::npos) << result.output;
    EXPECT_NE(result.output.find("expected"), std::string::npos) << result.output;
}

TEST(Cli, PrintedRationalsRoundTrip) {
    const std::string printed = run_cli("genbern 40 15").output;
    ASSERT_FALSE(printed.empty());
    EXPECT_EQ(norlund::to_string(norlund::parse_rational(
                  printed.substr(0, printed.size() - 1))) + "\n",
              printed);
}

}  // namespace
