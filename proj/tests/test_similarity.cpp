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

#include <random>

#include "support.hpp"
#include "treelab/gen.hpp"
#include "treelab/reference.hpp"
#include "treelab/similarity.hpp"

namespace treelab {
namespace {

using testing::N;
using testing::Ns;

TEST(Similarity, StrSimilarBasicCases) {
  EXPECT_TRUE(str_similar(Ns({"0", "1"}), Ns({"010", "0110"})));
  EXPECT_FALSE(str_similar(Ns({"0", "1"}), Ns({"1", "0"})));
  EXPECT_FALSE(str_similar(Ns({"0", "01"}), Ns({"0", "1"})));
  // Same relations and order, but the meet of the pair coincides with a generator on one side only.
  EXPECT_FALSE(str_similar(Ns({"0", "00", "01"}), Ns({"0", "000", "001"})));
  EXPECT_THROW(str_similar(Ns({"0"}), Ns({"0", "1"})), InputError);
}

TEST(Similarity, StrSimilarHandlesWideBranching) {
  const std::vector<Node> a{Node({0}, 3), Node({2}, 3)};
  const std::vector<Node> b{Node({0, 1}, 3), Node({1}, 3)};
  EXPECT_TRUE(str_similar(a, b));
}

TEST(Similarity, ProfileMeetTableUsesFirstIndex) {
  const auto p = type_profile(Ns({"00", "01"}));
  ASSERT_EQ(p.closure.size(), 4U);
  EXPECT_EQ(p.closure[1], N("0"));
  EXPECT_EQ(p.meet_table[0][3], 1U);
  EXPECT_EQ(p.meet_table[3][0], 1U);
  EXPECT_EQ(p.meet_table[0][0], 0U);
}

TEST(Similarity, KnownGammaPair) {
  const auto eta = Ns({"00", "01", "0"});
  const auto nu = Ns({"0100", "0101", "010"});
  EXPECT_TRUE(graded_equiv(SimilarityLevel::GAMMA, eta, nu));
  EXPECT_TRUE(check_gamma_consequences(eta, nu).pass);
}

TEST(Similarity, BetaButNotGamma) {
  // 0 -> 01 keeps immediate 1-successors but not the last symbol.
  const auto eta = Ns({"e", "0"});
  const auto nu = Ns({"e", "01"});
  EXPECT_TRUE(graded_equiv(SimilarityLevel::BETA, eta, nu));
  const auto v = graded_equiv_diagnose(SimilarityLevel::GAMMA, eta, nu);
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.failure, EquivFailure::PatternMismatch);
}

TEST(Similarity, AlphaButNotBeta) {
  const auto eta = Ns({"e", "1"});
  const auto nu = Ns({"e", "10"});
  EXPECT_TRUE(graded_equiv(SimilarityLevel::ALPHA, eta, nu));
  const auto v = graded_equiv_diagnose(SimilarityLevel::BETA, eta, nu);
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.clause, "iv");
}

TEST(Similarity, MeetClosureIsRequiredFirst) {
  const auto v = graded_equiv_diagnose(SimilarityLevel::ALPHA, Ns({"00", "01"}), Ns({"00", "01"}));
  EXPECT_FALSE(v.equivalent);
  EXPECT_EQ(v.failure, EquivFailure::NotMeetClosed);
  EXPECT_EQ(v.clause, "i");
}

TEST(Similarity, GradedEquivalenceRejectsWideNodes) {
  const std::vector<Node> a{Node({2}, 3)};
  EXPECT_THROW(graded_equiv(SimilarityLevel::ALPHA, a, a), InputError);
}

TEST(Similarity, GammaConsequencesNeedGammaPair) {
  EXPECT_THROW(check_gamma_consequences(Ns({"e", "0"}), Ns({"e", "01"})), InputError);
}

TEST(SimilarityProperty, StrSimilarAgreesWithTermEnumerationArityTwo) {
  const auto nodes = tree_nodes(4);
  for (const auto& a0 : nodes) {
    for (const auto& a1 : nodes) {
      const std::vector<Node> a{a0, a1};
      for (const auto& b0 : tree_nodes(3)) {
        for (const auto& b1 : tree_nodes(3)) {
          const std::vector<Node> b{b0, b1};
          ASSERT_EQ(str_similar(a, b), reference::str_similar_by_terms(a, b))
              << to_string(a0) << "," << to_string(a1) << " / " << to_string(b0) << "," << to_string(b1);
        }
      }
    }
  }
}

TEST(SimilarityProperty, StrSimilarAgreesWithTermEnumerationArityThree) {
  std::mt19937_64 rng(21);
  int similar = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    std::vector<Node> a;
    std::vector<Node> b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(gen::random_node(rng, 0, 3));
      b.push_back(gen::random_node(rng, 0, 3));
    }
    const bool got = str_similar(a, b);
    similar += got;
    ASSERT_EQ(got, reference::str_similar_by_terms(a, b));
  }
  EXPECT_GT(similar, 0);
}

TEST(SimilarityProperty, GradedLevelsAreNested) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 3000; ++iter) {
    std::vector<Node> seeds_a{gen::random_node(rng, 0, 3), gen::random_node(rng, 0, 3)};
    std::vector<Node> seeds_b{gen::random_node(rng, 0, 3), gen::random_node(rng, 0, 3)};
    auto a = meet_closure(seeds_a);
    auto b = meet_closure(seeds_b);
    if (a.size() != b.size()) continue;
    const bool g = graded_equiv(SimilarityLevel::GAMMA, a, b);
    const bool be = graded_equiv(SimilarityLevel::BETA, a, b);
    const bool al = graded_equiv(SimilarityLevel::ALPHA, a, b);
    EXPECT_TRUE(!g || be);
    EXPECT_TRUE(!be || al);
  }
}

TEST(SimilarityProperty, GeneratedGammaPairsSatisfyConsequences) {
  gen::Rng rng(23);
  for (int iter = 0; iter < 500; ++iter) {
    const auto p = gen::random_gamma_pair(rng);
    ASSERT_TRUE(graded_equiv(SimilarityLevel::GAMMA, p.eta, p.nu));
    const auto r = check_gamma_consequences(p.eta, p.nu);
    ASSERT_TRUE(r.pass) << to_string(r);
  }
}

TEST(SimilarityProperty, EquivalenceIsReflexiveAndSymmetric) {
  gen::Rng rng(24);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = gen::random_gamma_pair(rng);
    for (auto level : {SimilarityLevel::ALPHA, SimilarityLevel::BETA, SimilarityLevel::GAMMA}) {
      EXPECT_TRUE(graded_equiv(level, p.eta, p.eta));
      EXPECT_EQ(graded_equiv(level, p.eta, p.nu), graded_equiv(level, p.nu, p.eta));
    }
  }
}

}  // namespace
}  // namespace treelab
