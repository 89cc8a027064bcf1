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

// JSON encodings. Nodes are arrays of symbols; object keys that name nodes
// use the compact text form ("e", bitstrings, "[2,0]"). Every document
// written here carries "format": 1.

#ifndef TREELAB_IO_HPP_
#define TREELAB_IO_HPP_

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "treelab/errors.hpp"
#include "treelab/modelc.hpp"
#include "treelab/node.hpp"
#include "treelab/oracle.hpp"
#include "treelab/ramsey.hpp"
#include "treelab/report.hpp"
#include "treelab/treemaps.hpp"

namespace treelab::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormat = 1;

inline json node_to_json(const Node& n) {
  json a = json::array();
  for (auto s : n.symbols()) a.push_back(s);
  return a;
}

inline Node node_from_json(const json& j, std::optional<Node::Symbol> branching = std::nullopt) {
  if (j.is_string()) return parse_node(j.get<std::string>(), branching);
  if (!j.is_array()) throw InputError("node must be an array of symbols or a compact string");
  std::vector<Node::Symbol> s;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw InputError("node symbols must be nonnegative integers");
    s.push_back(x.get<Node::Symbol>());
  }
  return Node(std::move(s), branching);
}

inline json nodes_to_json(std::span<const Node> nodes) {
  json a = json::array();
  for (const auto& n : nodes) a.push_back(node_to_json(n));
  return a;
}

inline json report_to_json(const CheckReport& r) {
  json j{{"format", kFormat}, {"pass", r.pass}, {"examined", r.examined}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.counterexample) {
    j["counterexample"] = {{"clause", r.counterexample->clause},
                           {"nodes", nodes_to_json(r.counterexample->nodes)},
                           {"detail", r.counterexample->detail}};
  }
  return j;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

inline void check_format(const json& j) {
  if (!j.is_object()) throw InputError("document must be a JSON object");
  if (j.contains("format") && j.at("format") != kFormat) throw InputError("unsupported format version");
}

inline json oracle_to_json(const ConsistencyOracle& o) {
  json j{{"format", kFormat}};
  switch (o.kind()) {
    case ConsistencyOracle::Kind::SolutionSet: {
      j["kind"] = "solution_set";
      j["depth"] = o.depth();
      j["branching"] = o.branching();
      json sol = json::object();
      for (const auto& [n, s] : o.solutions()) sol[to_string(n)] = s.members();
      j["solutions"] = sol;
      break;
    }
    case ConsistencyOracle::Kind::Synthetic:
      j["kind"] = "synthetic";
      j["rule"] = to_string(o.rule());
      j["depth"] = o.depth();
      if (o.branching() != 2) j["branching"] = o.branching();
      break;
    case ConsistencyOracle::Kind::Pullback:
      j["kind"] = "pullback";
      j["map"] = to_string(o.map().name);
      j["depth"] = o.depth();
      j["inner"] = oracle_to_json(*o.inner());
      j["inner"].erase("format");
      break;
  }
  return j;
}

inline ConsistencyOracle oracle_from_json(const json& j) {
  check_format(j);
  const auto kind = field<std::string>(j, "kind");
  if (kind == "solution_set") {
    const auto depth = field<unsigned>(j, "depth");
    const auto branching = j.contains("branching") ? field<unsigned>(j, "branching") : 2U;
    std::map<Node, std::vector<std::uint32_t>> sol;
    const auto& s = j.at("solutions");
    if (!s.is_object()) throw InputError("'solutions' must be an object keyed by node");
    for (auto it = s.begin(); it != s.end(); ++it) {
      Node n = parse_node(it.key(), branching);
      try {
        sol[n] = it.value().get<std::vector<std::uint32_t>>();
      } catch (const json::exception&) {
        throw InputError("solutions of " + it.key() + " must be a list of nonnegative integers");
      }
    }
    return ConsistencyOracle::solution_set(depth, branching, sol);
  }
  if (kind == "synthetic") {
    const auto rule = field<std::string>(j, "rule");
    SyntheticRule r;
    if (rule == "atp") r = SyntheticRule::ATP;
    else if (rule == "chain") r = SyntheticRule::CHAIN;
    else if (rule == "free") r = SyntheticRule::FREE;
    else throw InputError("unknown synthetic rule '" + rule + "'");
    const auto branching = j.contains("branching") ? field<unsigned>(j, "branching") : 2U;
    return ConsistencyOracle::synthetic(r, field<unsigned>(j, "depth"), branching);
  }
  if (kind == "pullback") {
    if (!j.contains("inner")) throw InputError("pullback oracle needs 'inner'");
    auto inner = oracle_from_json(j.at("inner"));
    NamedTreeMap map(parse_map_name(field<std::string>(j, "map")));
    std::optional<unsigned> depth;
    if (j.contains("depth")) depth = field<unsigned>(j, "depth");
    return pull_back(inner, map, depth);
  }
  throw InputError("unknown oracle kind '" + kind + "'");
}

inline json structure_to_json(const IncidenceStructure& s) {
  json a = json::array();
  for (std::size_t l = 0; l < s.solver_count(); ++l) a.push_back(nodes_to_json(s.solver_nodes(l).span()));
  return json{{"format", kFormat}, {"depth", s.depth()}, {"antichains", a}};
}

inline IncidenceStructure structure_from_json(const json& j) {
  check_format(j);
  const auto depth = field<unsigned>(j, "depth");
  if (!j.contains("antichains") || !j.at("antichains").is_array()) throw InputError("'antichains' must be an array");
  std::vector<NodeSet> sets;
  for (const auto& entry : j.at("antichains")) {
    if (!entry.is_array()) throw InputError("each antichain must be an array of nodes");
    std::vector<Node> nodes;
    for (const auto& n : entry) nodes.push_back(node_from_json(n, 2));
    sets.emplace_back(std::move(nodes));
  }
  return IncidenceStructure::from_antichains(depth, sets);
}

inline json coloring_to_json(const Coloring& c) {
  json colors = json::object();
  for (const auto& [n, col] : c.colors()) colors[to_string(n)] = col;
  return json{{"format", kFormat},
              {"depth", c.depth()},
              {"branching", c.branching()},
              {"default", c.default_color()},
              {"colors", colors}};
}

inline Coloring coloring_from_json(const json& j) {
  check_format(j);
  const auto depth = field<unsigned>(j, "depth");
  const auto branching = j.contains("branching") ? field<unsigned>(j, "branching") : 2U;
  const int def = j.contains("default") ? field<int>(j, "default") : 0;
  Coloring c(depth, branching, def);
  if (j.contains("colors")) {
    const auto& cols = j.at("colors");
    if (!cols.is_object()) throw InputError("'colors' must be an object keyed by node");
    for (auto it = cols.begin(); it != cols.end(); ++it) {
      if (!it.value().is_number_integer()) throw InputError("color of " + it.key() + " must be an integer");
      c.set(parse_node(it.key(), branching), it.value().get<int>());
    }
  }
  return c;
}

inline json table_to_json(const MapTable& t, const std::string& map_name, unsigned depth) {
  json table = json::object();
  for (const auto& [k, v] : t) table[to_string(k)] = node_to_json(v);
  return json{{"format", kFormat}, {"map", map_name}, {"depth", depth}, {"table", table}};
}

inline MapTable table_from_json(const json& j) {
  check_format(j);
  if (!j.contains("table") || !j.at("table").is_object()) throw InputError("'table' must be an object keyed by node");
  MapTable t;
  const auto& tab = j.at("table");
  for (auto it = tab.begin(); it != tab.end(); ++it) t[parse_node(it.key())] = node_from_json(it.value());
  return t;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Writes through a sibling temporary file and a rename.
inline void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into '" + path + "'");
  }
}

}  // namespace treelab::io

#endif  // TREELAB_IO_HPP_
