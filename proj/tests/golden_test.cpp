// Copyright 2026 The atrbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cstdlib>

#include "golden_cases.hpp"

namespace atrbench {
namespace {

const std::string kSource = ATRBENCH_SOURCE_DIR;

class GoldenTest : public testing::TestWithParam<golden::Case> {};

// Two runs agree byte for byte and match the stored output. With
// ATRBENCH_UPDATE_GOLDEN set, the stored output is rewritten instead.
TEST_P(GoldenTest, JsonOutput) {
  const golden::Case& c = GetParam();
  std::string first, second;
  int code = golden::RunCase(c, kSource + "/tests/data", &first);
  EXPECT_EQ(code, c.code) << first;
  EXPECT_EQ(golden::RunCase(c, kSource + "/tests/data", &second), code);
  EXPECT_EQ(first, second);
  std::string path = kSource + "/tests/golden/" + c.name + ".json";
  if (std::getenv("ATRBENCH_UPDATE_GOLDEN")) {
    std::ofstream(path) << first;
    return;
  }
  EXPECT_EQ(first, golden::ReadText(path)) << path;
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest, testing::ValuesIn(golden::Cases()),
                         [](const testing::TestParamInfo<golden::Case>& info) {
                           std::string n = info.param.name;
                           for (char& ch : n)
                             if (ch == '-') ch = '_';
                           return n;
                         });

}  // namespace
}  // namespace atrbench
