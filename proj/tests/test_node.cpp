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
#include <set>

#include "support.hpp"
#include "treelab/node.hpp"

namespace treelab {
namespace {

using testing::bits;
using testing::from_string;
using testing::N;
using testing::Ns;

TEST(Node, MeetIsLongestCommonPrefix) {
  EXPECT_EQ(meet(N("0110"), N("0101")), N("01"));
  EXPECT_EQ(meet(N("1"), N("0")), N("e"));
  EXPECT_EQ(meet(N("011"), N("01")), N("01"));
}

TEST(Node, RelateCoversAllFourCases) {
  EXPECT_EQ(relate(N("01"), N("01")), Relation::Equal);
  EXPECT_EQ(relate(N("0"), N("01")), Relation::Prefix);
  EXPECT_EQ(relate(N("011"), N("01")), Relation::Extension);
  EXPECT_EQ(relate(N("00"), N("01")), Relation::Incomparable);
}

TEST(Node, LexOrderPutsPrefixesFirst) {
  EXPECT_TRUE(lex_less(N("e"), N("0")));
  EXPECT_TRUE(lex_less(N("0"), N("00")));
  EXPECT_TRUE(lex_less(N("011"), N("1")));
  EXPECT_FALSE(lex_less(N("1"), N("1")));
}

TEST(Node, MismatchedBranchingThrows) {
  const Node a({0, 1}, 2);
  const Node b({0, 2}, 3);
  EXPECT_THROW(meet(a, b), InputError);
  EXPECT_THROW(relate(a, b), InputError);
  EXPECT_THROW(lex_less(a, b), InputError);
  EXPECT_THROW(Node({3}, 3), InputError);
}

TEST(Node, BranchingIsNotIdentity) {
  EXPECT_EQ(Node({0, 1}, 2), Node({0, 1}, 5));
  EXPECT_EQ(Node({0, 1}), Node({0, 1}, 2));
}

TEST(Node, ParseAndPrintRoundTrip) {
  for (const char* t : {"e", "0", "0110", "1"}) EXPECT_EQ(to_string(parse_node(t)), t);
  const Node wide = parse_node("[2,0,1]", 3);
  EXPECT_EQ(wide, Node({2, 0, 1}));
  EXPECT_EQ(to_string(wide), "[2,0,1]");
  EXPECT_THROW(parse_node(""), InputError);
  EXPECT_THROW(parse_node("012"), InputError);
  EXPECT_THROW(parse_node("[1,x]"), InputError);
}

TEST(Node, ParentOfRootThrows) { EXPECT_THROW(N("e").parent(), InputError); }

TEST(Node, ClosureTupleKeepsPositions) {
  const auto t = Ns({"00", "01", "1"});
  const auto cl = closure_tuple(t);
  ASSERT_EQ(cl.size(), 9U);
  EXPECT_EQ(cl[1], N("0"));
  EXPECT_EQ(cl[2], N("e"));
  EXPECT_EQ(cl[4], N("01"));
  EXPECT_EQ(meet_closure(t), Ns({"e", "0", "00", "01", "1"}));
  EXPECT_THROW(meet_closure(std::vector<Node>{}), InputError);
}

TEST(Node, TreeEnumerationIsPreorder) {
  EXPECT_EQ(tree_nodes(3), Ns({"e", "0", "00", "01", "1", "10", "11"}));
  EXPECT_EQ(tree_size(4, 3), 1U + 3 + 9 + 27);
  EXPECT_EQ(tree_level(2), Ns({"00", "01", "10", "11"}));
}

TEST(Node, TreeIndexRoundTrip) {
  TreeIndex idx(4, 2);
  const auto x = Ns({"0", "101", "11"});
  EXPECT_EQ(idx.nodes_of(idx.mask_of(x)), x);
  EXPECT_THROW(idx.index_of(N("0000")), InputError);
  EXPECT_THROW(TreeIndex(7, 2).require_mask_capacity(), ResourceError);
}

TEST(Node, NodeSetIsSortedAndUnique) {
  NodeSet s(Ns({"1", "0", "1", "e"}));
  EXPECT_EQ(s.nodes(), Ns({"e", "0", "1"}));
  EXPECT_TRUE(s.contains(N("0")));
  EXPECT_EQ(to_string(s), "{e,0,1}");
}

// Property tests against string-based oracles.

TEST(NodeProperty, AlgebraMatchesStringOracle) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto a = testing::random_bits(rng, 7);
    const auto b = testing::random_bits(rng, 7);
    const Node x = from_string(a);
    const Node y = from_string(b);
    EXPECT_EQ(bits(meet(x, y)), testing::common_prefix(a, b));
    EXPECT_EQ(x.is_prefix_of(y), testing::starts_with(b, a));
    EXPECT_EQ(lex_less(x, y), a < b);
    EXPECT_EQ(incomparable(x, y), !testing::starts_with(a, b) && !testing::starts_with(b, a));
  }
}

TEST(NodeProperty, MeetIsAssociativeCommutativeIdempotent) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 1000; ++iter) {
    const Node a = from_string(testing::random_bits(rng, 6));
    const Node b = from_string(testing::random_bits(rng, 6));
    const Node c = from_string(testing::random_bits(rng, 6));
    EXPECT_EQ(meet(a, b), meet(b, a));
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
    EXPECT_TRUE(meet(a, b).is_prefix_of(a));
  }
}

TEST(NodeProperty, MeetClosureIsClosedAndMinimal) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Node> t;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) t.push_back(from_string(testing::random_bits(rng, 6)));
    const auto cl = meet_closure(t);
    EXPECT_TRUE(is_meet_closed(cl));
    for (const auto& x : t) EXPECT_NE(std::find(cl.begin(), cl.end(), x), cl.end());
    // Every member is a pairwise meet: nothing beyond what closure requires.
    std::set<Node> pairwise;
    for (const auto& a : t) {
      for (const auto& b : t) pairwise.insert(meet(a, b));
    }
    EXPECT_EQ(std::set<Node>(cl.begin(), cl.end()), pairwise);
  }
}

}  // namespace
}  // namespace treelab
