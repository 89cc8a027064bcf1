//  Copyright 2026 The treelab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


#include <gtest/gtest.h>

#include <chrono>
#include <sstream>
#include <thread>

#include "treelab/acceptance.hpp"

namespace treelab::acceptance {
namespace {

TEST(Runner, QuickSuitePasses) {
  std::ostringstream out;
  const auto results = run_suite(quick_suite(), &out);
  ASSERT_EQ(results.size(), 8U);
  EXPECT_EQ(first_failure(results), nullptr) << out.str();
  EXPECT_NE(out.str().find("criterion q1 [maximal antichain counts to depth 3]: PASS"), std::string::npos) << out.str();
}

TEST(Runner, InjectedFailureIsNamed) {
  auto suite = quick_suite();
  suite.insert(suite.begin() + 2, Criterion{"x1", "injected", 1, [] { return Result{false, "planted"}; }});
  std::ostringstream out;
  const auto results = run_suite(suite, &out);
  const auto* f = first_failure(results);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->id, "x1");
  EXPECT_EQ(f->detail, "planted");
  EXPECT_NE(out.str().find("criterion x1 [injected]: FAIL"), std::string::npos);
}

TEST(Runner, ExceptionsAndTimeLimitsFail) {
  const auto thrown = run_one({"t", "throws", 1, []() -> Result { throw ResourceError("too big"); }});
  EXPECT_FALSE(thrown.pass);
  EXPECT_EQ(thrown.detail, "exception: too big");
  const auto slow = run_one({"s", "slow", 0.001, [] {
                               std::this_thread::sleep_for(std::chrono::milliseconds(20));
                               return Result{true, ""};
                             }});
  EXPECT_FALSE(slow.pass);
  EXPECT_EQ(slow.detail, "exceeded time limit");
}

TEST(Runner, LineFormat) {
  const Outcome o{"7", "map transports", true, 1.5, 40, "ok"};
  EXPECT_EQ(format_line(o), "criterion 7 [map transports]: PASS (1.50 s, limit 40.00 s) ok");
}

TEST(Runner, FullSuiteIds) {
  const auto suite = full_suite();
  ASSERT_EQ(suite.size(), 13U);
  for (std::size_t i = 0; i < suite.size(); ++i) EXPECT_EQ(suite[i].id, std::to_string(i + 1));
}

}  // namespace
}  // namespace treelab::acceptance
