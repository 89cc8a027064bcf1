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

#include <filesystem>
#include <fstream>
#include <random>

#include "support.hpp"
#include "treelab/gen.hpp"
#include "treelab/io.hpp"

namespace treelab {
namespace {

using testing::N;
using testing::Ns;
using io::json;

// Same verdict on every subset of at most three nodes of the tree.
void expect_same_oracle(const ConsistencyOracle& a, const ConsistencyOracle& b) {
  ASSERT_EQ(a.depth(), b.depth());
  ASSERT_EQ(a.branching(), b.branching());
  const auto nodes = tree_nodes(a.depth(), a.branching());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i; j < nodes.size(); ++j) {
      for (std::size_t k = j; k < nodes.size(); ++k) {
        const std::vector<Node> x{nodes[i], nodes[j], nodes[k]};
        ASSERT_EQ(a.consistent(x), b.consistent(x));
      }
    }
  }
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("treelab_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

TEST(Io, NodesAcceptArraysAndCompactText) {
  EXPECT_EQ(io::node_to_json(N("01")), json::parse("[0,1]"));
  EXPECT_EQ(io::node_from_json(json::parse("[1,0,1]")), N("101"));
  EXPECT_EQ(io::node_from_json(json("0011")), N("0011"));
  EXPECT_EQ(io::node_from_json(json("e")), N("e"));
  EXPECT_EQ(io::node_from_json(json::parse("[2,0]"), 3), parse_node("[2,0]", 3));
  EXPECT_THROW(io::node_from_json(json::parse("[-1]")), InputError);
  EXPECT_THROW(io::node_from_json(json::parse("{}")), InputError);
}

TEST(Io, OracleRoundTrips) {
  gen::Rng rng(4);
  const auto sol = gen::random_solution_oracle(rng, 3, 2, 0.2);
  expect_same_oracle(sol, io::oracle_from_json(io::oracle_to_json(sol)));
  const auto synth = ConsistencyOracle::synthetic(SyntheticRule::FREE, 3, 3);
  expect_same_oracle(synth, io::oracle_from_json(io::oracle_to_json(synth)));
  const auto pulled = pull_back(ConsistencyOracle::synthetic(SyntheticRule::ATP, 12), MapName::SOP1_FROM_AT);
  const auto back = io::oracle_from_json(io::oracle_to_json(pulled));
  EXPECT_EQ(back.kind(), ConsistencyOracle::Kind::Pullback);
  EXPECT_EQ(back.map().name, MapName::SOP1_FROM_AT);
  expect_same_oracle(pulled, back);
  EXPECT_EQ(io::oracle_to_json(pulled).dump(), io::oracle_to_json(back).dump());
}

TEST(Io, OracleErrors) {
  auto bad = [](const char* text) { return io::oracle_from_json(json::parse(text)); };
  EXPECT_THROW(bad("[]"), InputError);
  EXPECT_THROW(bad(R"({"format":2,"kind":"synthetic","rule":"atp","depth":3})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"synthetic","rule":"dense","depth":3})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"synthetic","rule":"atp"})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"synthetic","rule":"atp","depth":"three"})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"mystery"})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"solution_set","depth":2,"solutions":{"00":[0]}})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"solution_set","depth":2,"solutions":{"0":["x"]}})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"solution_set","depth":2,"solutions":[]})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"pullback","map":"at_embed"})"), InputError);
  EXPECT_THROW(bad(R"({"kind":"pullback","map":"nope","inner":{"kind":"synthetic","rule":"atp","depth":9}})"),
               InputError);
}

TEST(Io, StructureRoundTrip) {
  const auto s = build_structure(4);
  const auto j = io::structure_to_json(s);
  EXPECT_EQ(j.at("format"), io::kFormat);
  const auto back = io::structure_from_json(j);
  EXPECT_EQ(back.depth(), s.depth());
  EXPECT_EQ(back.solver_masks(), s.solver_masks());
  EXPECT_THROW(io::structure_from_json(json::parse(R"({"depth":2,"antichains":[["0"]]})")), InputError);
  EXPECT_THROW(io::structure_from_json(json::parse(R"({"depth":2})")), InputError);
  EXPECT_THROW(io::structure_from_json(json::parse(R"({"depth":2,"antichains":[5]})")), InputError);
}

TEST(Io, ColoringRoundTrip) {
  Coloring c(3, 3, 4);
  c.set(parse_node("[2,1]", 3), 1);
  c.set(N("e").with_branching(3), 0);
  const auto back = io::coloring_from_json(io::coloring_to_json(c));
  EXPECT_EQ(back.depth(), 3U);
  EXPECT_EQ(back.branching(), 3U);
  EXPECT_EQ(back.default_color(), 4);
  for (const auto& n : tree_nodes(3, 3)) EXPECT_EQ(back.color(n), c.color(n)) << n;
  EXPECT_THROW(io::coloring_from_json(json::parse(R"({"depth":2,"colors":{"0":"red"}})")), InputError);
  EXPECT_THROW(io::coloring_from_json(json::parse(R"({"depth":2,"colors":{"000":1}})")), InputError);
}

TEST(Io, TableRoundTrip) {
  const auto t = make_table(MapName::AT_EMBED, 2);
  const auto j = io::table_to_json(t, "at_embed", 2);
  EXPECT_EQ(j.at("table").at("00"), json::parse("[1,0,0,1,0,0,1]"));
  EXPECT_EQ(io::table_from_json(j), t);
  EXPECT_THROW(io::table_from_json(json::parse(R"({"table":[]})")), InputError);
}

TEST(Io, ReportEncoding) {
  const auto ok = io::report_to_json(CheckReport::ok(12, "full"));
  EXPECT_EQ(ok.dump(), R"({"format":1,"pass":true,"examined":12,"note":"full"})");
  const auto bad = io::report_to_json(CheckReport::fail("chain", Ns({"e", "0"}), "inconsistent", 3));
  EXPECT_EQ(bad.at("counterexample").at("clause"), "chain");
  EXPECT_EQ(bad.at("counterexample").at("nodes"), json::parse("[[],[0]]"));
}

TEST_F(TempDir, AtomicWriteReplacesTarget) {
  const auto target = path("out.json");
  io::write_file_atomic(target, "first");
  io::write_file_atomic(target, "second");
  std::ifstream in(target);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "second");
  EXPECT_FALSE(std::filesystem::exists(target + ".tmp"));
  EXPECT_THROW(io::write_file_atomic(path("missing/dir/out.json"), "x"), std::runtime_error);
}

TEST_F(TempDir, ReadJsonFileErrors) {
  EXPECT_THROW(io::read_json_file(path("absent.json")), InputError);
  io::write_file_atomic(path("broken.json"), "{\"depth\": ");
  EXPECT_THROW(io::read_json_file(path("broken.json")), InputError);
  io::write_file_atomic(path("good.json"), R"({"kind":"synthetic","rule":"chain","depth":3})");
  EXPECT_EQ(io::oracle_from_json(io::read_json_file(path("good.json"))).rule(), SyntheticRule::CHAIN);
}

}  // namespace
}  // namespace treelab
