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

#include "treelab/gen.hpp"
#include "treelab/similarity.hpp"
#include "treelab/witness.hpp"

namespace treelab {
namespace {

TEST(Gen, SeedFixesEveryDraw) {
  gen::Rng a(42), b(42), c(43);
  std::vector<Node> xs, ys, zs;
  for (int i = 0; i < 50; ++i) {
    xs.push_back(gen::random_node(a, 0, 6));
    ys.push_back(gen::random_node(b, 0, 6));
    zs.push_back(gen::random_node(c, 0, 6));
  }
  EXPECT_EQ(xs, ys);
  EXPECT_NE(xs, zs);
  const auto p = gen::random_gamma_pair(a);
  const auto q = gen::random_gamma_pair(b);
  EXPECT_EQ(p.eta, q.eta);
  EXPECT_EQ(p.nu, q.nu);
  const auto s = gen::random_tail_swap(a);
  const auto t = gen::random_tail_swap(b);
  EXPECT_EQ(s.sigma, t.sigma);
  EXPECT_EQ(s.theta, t.theta);
  EXPECT_EQ(s.eta, t.eta);
}

TEST(Gen, NodesRespectBounds) {
  gen::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto n = gen::random_node(rng, 2, 5, 3);
    EXPECT_GE(n.length(), 2U);
    EXPECT_LE(n.length(), 5U);
    EXPECT_EQ(n.branching(), 3U);
    for (auto s : n.symbols()) EXPECT_LT(s, 3U);
  }
}

TEST(Gen, GammaPairsAreGammaEquivalent) {
  gen::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const auto p = gen::random_gamma_pair(rng);
    ASSERT_EQ(p.eta.size(), p.nu.size());
    EXPECT_TRUE(is_meet_closed(p.eta));
    EXPECT_TRUE(is_meet_closed(p.nu));
    EXPECT_TRUE(graded_equiv(SimilarityLevel::GAMMA, p.eta, p.nu)) << i;
  }
}

TEST(Gen, TailSwapInstancesSatisfyHypothesis) {
  gen::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto t = gen::random_tail_swap(rng);
    EXPECT_LE(t.eta.length(), 6U);
    EXPECT_LE(t.nu.length(), 6U);
    EXPECT_FALSE(t.theta.empty());
    const auto v = check_tail_swap(t.sigma, t.sigma_last, t.eta, t.nu, t.theta);
    EXPECT_TRUE(v.hypothesis) << v.failed_hypothesis;
  }
}

TEST(Gen, NoiselessSolutionOracleIsLeafChains) {
  gen::Rng rng(10);
  const auto o = gen::random_solution_oracle(rng, 4, 3, 0.0);
  EXPECT_EQ(o.universe(), 27U);
  EXPECT_TRUE(check_property(o, PropertyKind::TP1, 4).pass);
  const auto noisy = gen::random_solution_oracle(rng, 4, 3, 0.5);
  EXPECT_FALSE(check_property(noisy, PropertyKind::TP1, 4).pass);
}

}  // namespace
}  // namespace treelab
