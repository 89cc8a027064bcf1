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

#include <vector>

#include "support.hpp"
#include "treelab/modelc.hpp"

namespace treelab {
namespace {

using testing::N;
using testing::Ns;

std::uint64_t mask(unsigned depth, std::initializer_list<const char*> bits) {
  const auto nodes = Ns(bits);
  return TreeIndex(depth, 2).mask_of(nodes);
}

TEST(Structure, SolverCountsFollowCatalog) {
  const std::vector<std::size_t> counts{1, 2, 5, 26, 677};
  for (unsigned n = 1; n <= 5; ++n) {
    const auto s = build_structure(n);
    EXPECT_EQ(s.solver_count(), counts[n - 1]);
    EXPECT_EQ(s.param_count(), (std::size_t{1} << n) - 1);
    EXPECT_EQ(s.universe_size(), s.solver_count() + s.param_count());
  }
  EXPECT_THROW(build_structure(0), InputError);
  EXPECT_THROW(build_structure(6), ResourceError);
}

TEST(Structure, IncidenceIsMembership) {
  const auto s = build_structure(3);
  for (std::size_t l = 0; l < s.solver_count(); ++l) {
    const auto x = s.solver_nodes(l);
    EXPECT_TRUE(is_maximal_antichain(x, 3));
    for (std::size_t p = 0; p < s.param_count(); ++p) EXPECT_EQ(s.R(l, p), x.contains(s.param(p)));
  }
  EXPECT_FALSE(s.R(ElementRef::b(0), ElementRef::a(0)));
  EXPECT_FALSE(s.common_neighbour(ElementRef::a(0), ElementRef::b(0)));
  EXPECT_EQ(s.element_name(ElementRef::b(s.param_index(N("01")))), "b:01");
  EXPECT_EQ(s.element_name(ElementRef::a(2)), "a:2");
}

TEST(Structure, FromAntichainsValidates) {
  const std::vector<NodeSet> good{NodeSet(Ns({"0", "1"})), NodeSet(Ns({"e"}))};
  EXPECT_EQ(IncidenceStructure::from_antichains(2, good).solver_count(), 2U);
  const std::vector<NodeSet> not_maximal{NodeSet(Ns({"0"}))};
  EXPECT_THROW(IncidenceStructure::from_antichains(2, not_maximal), InputError);
  const std::vector<NodeSet> twice{NodeSet(Ns({"e"})), NodeSet(Ns({"e"}))};
  EXPECT_THROW(IncidenceStructure::from_antichains(2, twice), InputError);
  EXPECT_THROW(IncidenceStructure::from_incidence(2, {std::uint64_t{1} << 3}), InputError);
  EXPECT_THROW(IncidenceStructure::from_incidence(7, {}), InputError);
}

TEST(Structure, EmbeddingChain) {
  EXPECT_TRUE(verify_embedding_chain(5).pass);
  const std::vector<IncidenceStructure> moved{IncidenceStructure::from_incidence(2, {mask(2, {"0", "1"})}),
                                              IncidenceStructure::from_incidence(3, {mask(3, {"00", "01", "1"})})};
  const auto r = verify_embedding_chain(moved);
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.clause(), "edge");
  EXPECT_EQ(r.counterexample->nodes, Ns({"0"}));
  const std::vector<IncidenceStructure> shrinking{build_structure(3), build_structure(2)};
  EXPECT_EQ(verify_embedding_chain(shrinking).clause(), "size");
}

TEST(Structure, AntichainTree) {
  for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(verify_antichain_tree(build_structure(n), CheckMode::FULL).pass) << n;
  EXPECT_TRUE(verify_antichain_tree(build_structure(5), CheckMode::REDUCED).pass);
  const auto broken = IncidenceStructure::from_incidence(2, {mask(2, {"0", "1"}), mask(2, {"e", "0"})});
  EXPECT_FALSE(verify_antichain_tree(broken, CheckMode::FULL).pass);
  EXPECT_FALSE(verify_antichain_tree(broken, CheckMode::REDUCED).pass);
}

TEST(Structure, CrossingPairs) {
  for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(verify_no_crossing_pairs(build_structure(n)).pass) << n;
  const auto two_blocks = IncidenceStructure::from_incidence(3, {mask(3, {"00", "01"}), mask(3, {"10", "11"})});
  const auto r = verify_no_crossing_pairs(two_blocks);
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.clause(), "crossing-pairs");
  EXPECT_EQ(r.counterexample->nodes, Ns({"00", "01", "10", "11"}));
}

TEST(Structure, PairwiseImpliesJoint) {
  for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(verify_pairwise_implies_joint(build_structure(n), 4).pass) << n;
  const auto triangle = IncidenceStructure::from_incidence(
      2, {mask(2, {"e", "0"}), mask(2, {"0", "1"}), mask(2, {"e", "1"})});
  const auto r = verify_pairwise_implies_joint(triangle, 3);
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.counterexample->nodes, Ns({"e", "0", "1"}));
  EXPECT_THROW(verify_pairwise_implies_joint(build_structure(5), 8, 1000), ResourceError);
}

TEST(Phi, LiteralReadingReducesToComparability) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto s = build_structure(n);
    for (std::size_t v = 0; v < s.param_count(); ++v) {
      for (std::size_t e = 0; e < s.param_count(); ++e) {
        const bool want = v != e && comparable(s.param(v), s.param(e));
        EXPECT_EQ(eval_phi_pred(s, ElementRef::b(v), ElementRef::b(e)), want) << s.param(v) << " " << s.param(e);
      }
    }
  }
}

TEST(Phi, DistinctWitnessReadingIsProperPrefix) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto s = build_structure(n);
    for (std::size_t v = 0; v < s.param_count(); ++v) {
      for (std::size_t e = 0; e < s.param_count(); ++e) {
        const bool want = s.param(e).is_proper_prefix_of(s.param(v));
        EXPECT_EQ(eval_phi_pred(s, ElementRef::b(v), ElementRef::b(e), PhiReading::DISTINCT_WITNESS), want);
      }
    }
  }
}

TEST(Phi, SemanticsChecks) {
  const auto s = build_structure(4);
  const auto literal = verify_phi_semantics(s);
  ASSERT_FALSE(literal.pass);
  EXPECT_EQ(literal.clause(), "parameter-pair");
  EXPECT_EQ(literal.counterexample->nodes, Ns({"e", "0"}));
  EXPECT_TRUE(verify_phi_semantics(s, PhiReading::DISTINCT_WITNESS).pass);
  // A solver in the second place.
  const ElementRef root = ElementRef::b(s.param_index(N("e")));
  EXPECT_TRUE(eval_phi_pred(s, root, ElementRef::a(0)));
  EXPECT_FALSE(eval_phi_pred(s, root, ElementRef::a(0), PhiReading::DISTINCT_WITNESS));
  EXPECT_TRUE(eval_phi_pred(s, ElementRef::b(s.param_index(N("1"))), ElementRef::a(0), PhiReading::DISTINCT_WITNESS));
  EXPECT_FALSE(eval_phi_pred(s, ElementRef::a(0), root));
}

TEST(Phi, SopPattern) {
  const auto s = build_structure(4);
  EXPECT_TRUE(verify_phi_sop2(s, 3, PhiReading::DISTINCT_WITNESS).pass);
  const auto literal = verify_phi_sop2(s, 3);
  ASSERT_FALSE(literal.pass);
  EXPECT_EQ(literal.clause(), "incomparable-pair");
  EXPECT_THROW(verify_phi_sop2(s, 4), InputError);
  EXPECT_THROW(verify_phi_sop2(s, 0), InputError);
}

TEST(Conjunction, SingleConjunctHasNoPattern) {
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = search_conjunction_sop2(build_structure(n), 1);
    EXPECT_EQ(r.outcome, SearchOutcome::NONE) << n;
    EXPECT_TRUE(r.witness.empty());
  }
}

TEST(Conjunction, TwoConjunctsFindFrozenWitness) {
  const auto s = build_structure(4);
  const auto r = search_conjunction_sop2(s, 2);
  ASSERT_EQ(r.outcome, SearchOutcome::FOUND);
  EXPECT_EQ(r.tuple_count, 120U);
  // Positions e, 0, 00, 01, 1, 10, 11.
  const std::vector<std::vector<Node>> frozen{Ns({"0", "0"}),    Ns({"0", "10"}),   Ns({"10", "11"}), Ns({"10", "110"}),
                                              Ns({"0", "100"}),  Ns({"100", "11"}), Ns({"100", "110"})};
  EXPECT_EQ(r.witness, frozen);
  ASSERT_EQ(r.witness.size(), 7U);
  // Independent check: consistent iff antichain in this structure.
  auto joint = [](std::vector<Node> a, const std::vector<Node>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return is_antichain(NodeSet(std::move(a)));
  };
  const auto pos = pattern_positions();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (incomparable(pos[i], pos[j])) {
        EXPECT_FALSE(joint(r.witness[i], r.witness[j])) << pos[i] << " " << pos[j];
      }
    }
    if (pos[i].length() == 2) {
      std::vector<Node> chain;
      for (std::size_t a = 0; a <= 2; ++a) {
        const auto& t = r.witness[static_cast<std::size_t>(std::find(pos.begin(), pos.end(), pos[i].prefix(a)) - pos.begin())];
        chain.insert(chain.end(), t.begin(), t.end());
      }
      EXPECT_TRUE(is_antichain(NodeSet(chain))) << pos[i];
    }
  }
}

TEST(Conjunction, BudgetAndArguments) {
  const auto s = build_structure(3);
  EXPECT_EQ(search_conjunction_sop2(s, 1, 10).outcome, SearchOutcome::BUDGET_EXHAUSTED);
  EXPECT_THROW(search_conjunction_sop2(s, 0), InputError);
}

}  // namespace
}  // namespace treelab
