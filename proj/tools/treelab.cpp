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

// Batch command surface. Exit codes: 0 pass or found, 1 fail or not found,
// 2 usage error, 3 invalid input, 4 resource or budget exceeded.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treelab/acceptance.hpp"
#include "treelab/io.hpp"
#include "treelab/treelab.hpp"

namespace {

using treelab::io::json;

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2, kInput = 3, kResource = 4 };

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
};

/// Output goes to --out atomically when given, else to stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    treelab::io::write_file_atomic(out_path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

/// Splits a node list on commas outside brackets.
std::vector<treelab::Node> parse_node_list(const std::string& text, std::optional<treelab::Node::Symbol> b = {}) {
  std::vector<treelab::Node> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(treelab::parse_node(cur, b));
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(treelab::parse_node(cur, b));
  return out;
}

int report_exit(const treelab::CheckReport& r, const Globals& g, const std::string& label) {
  if (g.json) {
    std::cout << dump(treelab::io::report_to_json(r));
  } else {
    std::cout << label << ": " << to_string(r) << "\n";
  }
  return r.pass ? kPass : kFail;
}

CLI::App* sub(CLI::App& parent, const std::string& name, const std::string& desc) {
  auto* s = parent.add_subcommand(name, desc);
  s->fallthrough();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace treelab;
  CLI::App app{"treelab: finite tree-pattern toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "emit JSON on stdout");
  app.add_option("--seed", g.seed, "seed for randomized suites")->default_val(0);

  std::function<int()> action;

  // antichains
  unsigned ac_depth = 0;
  bool ac_count = false;
  auto* ac = sub(app, "antichains", "enumerate maximal antichains in catalog order");
  ac->add_option("--depth", ac_depth, "tree depth (nodes of length < depth)")->required();
  ac->add_flag("--count", ac_count, "print only the count");
  ac->callback([&] {
    action = [&] {
      if (ac_count) {
        const auto n = ac_depth <= kMaxCatalogDepth ? enumerate_maximal_antichains(ac_depth).size()
                                                    : maximal_antichain_count(ac_depth);
        if (g.json) std::cout << dump(json{{"format", io::kFormat}, {"depth", ac_depth}, {"count", n}});
        else std::cout << n << "\n";
        return int{kPass};
      }
      const auto cat = enumerate_maximal_antichains(ac_depth);
      if (g.json) {
        json a = json::array();
        for (std::size_t l = 0; l < cat.size(); ++l) {
          a.push_back({{"index", l}, {"birthday", cat.birthday(l)}, {"nodes", io::nodes_to_json(cat.entry(l).span())}});
        }
        std::cout << dump(json{{"format", io::kFormat}, {"depth", ac_depth}, {"count", cat.size()}, {"antichains", a}});
      } else {
        for (std::size_t l = 0; l < cat.size(); ++l) std::cout << l << " " << to_string(cat.entry(l)) << "\n";
      }
      return int{kPass};
    };
  });

  // structure
  auto* st = sub(app, "structure", "incidence structures over maximal antichains");
  st->require_subcommand(1);
  unsigned st_depth = 0;
  std::string st_out;
  auto* st_build = sub(*st, "build", "build the structure of a given depth");
  st_build->add_option("--depth", st_depth)->required();
  st_build->add_option("--out", st_out, "output file (stdout if absent)");
  st_build->callback([&] {
    action = [&] {
      emit(dump(io::structure_to_json(build_structure(st_depth))), st_out);
      return int{kPass};
    };
  });
  std::string st_in;
  std::string st_checks = "antichain-tree,crossing,pairwise,phi";
  std::string st_mode = "full";
  std::string st_reading = "literal";
  unsigned st_max_size = 4;
  auto* st_verify = sub(*st, "verify", "run structural checks");
  st_verify->add_option("--in", st_in)->required();
  st_verify->add_option("--checks", st_checks, "comma list of antichain-tree, crossing, pairwise, phi, embedding");
  st_verify->add_option("--mode", st_mode)->check(CLI::IsMember({"full", "reduced"}));
  st_verify->add_option("--max-size", st_max_size, "largest subset for the pairwise check");
  st_verify->add_option("--phi-reading", st_reading)->check(CLI::IsMember({"literal", "distinct-witness"}));
  st_verify->callback([&] {
    action = [&] {
      const auto s = io::structure_from_json(io::read_json_file(st_in));
      const auto reading = st_reading == "literal" ? PhiReading::LITERAL : PhiReading::DISTINCT_WITNESS;
      const auto mode = st_mode == "full" ? CheckMode::FULL : CheckMode::REDUCED;
      std::vector<std::pair<std::string, CheckReport>> results;
      std::stringstream list(st_checks);
      std::string name;
      while (std::getline(list, name, ',')) {
        if (name == "antichain-tree") {
          results.emplace_back(name, verify_antichain_tree(s, mode));
        } else if (name == "crossing") {
          results.emplace_back(name, verify_no_crossing_pairs(s));
        } else if (name == "pairwise") {
          results.emplace_back(name, verify_pairwise_implies_joint(s, st_max_size));
        } else if (name == "phi") {
          results.emplace_back("phi-semantics", verify_phi_semantics(s, reading));
          if (s.depth() >= 2) results.emplace_back("phi-pattern", verify_phi_sop2(s, s.depth() - 1, reading));
        } else if (name == "embedding") {
          results.emplace_back(name, verify_embedding_chain(s.depth()));
        } else {
          throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
        }
      }
      bool pass = true;
      json arr = json::array();
      for (const auto& [n, r] : results) {
        pass = pass && r.pass;
        auto j = io::report_to_json(r);
        j.erase("format");
        arr.push_back({{"check", n}, {"report", j}});
        if (!g.json) std::cout << n << ": " << to_string(r) << "\n";
      }
      if (g.json) std::cout << dump(json{{"format", io::kFormat}, {"pass", pass}, {"checks", arr}});
      return pass ? int{kPass} : int{kFail};
    };
  });
  unsigned st_conj = 1;
  std::uint64_t st_budget = kDefaultConjunctionBudget;
  auto* st_search = sub(*st, "search-sop2", "search for a height-two pattern of a conjunction");
  st_search->add_option("--in", st_in)->required();
  st_search->add_option("--conj", st_conj, "number of conjuncts")->default_val(1);
  st_search->add_option("--budget", st_budget, "candidate placements before giving up");
  st_search->callback([&] {
    action = [&] {
      const auto s = io::structure_from_json(io::read_json_file(st_in));
      const auto r = search_conjunction_sop2(s, st_conj, st_budget);
      if (g.json) {
        json w = json::array();
        for (const auto& t : r.witness) w.push_back(io::nodes_to_json(t));
        std::cout << dump(json{{"format", io::kFormat},
                               {"outcome", to_string(r.outcome)},
                               {"assignments", r.assignments},
                               {"tuple_count", r.tuple_count},
                               {"strategy", r.strategy},
                               {"witness", w}});
      } else {
        std::cout << to_string(r.outcome) << " after " << r.assignments << " placements over " << r.tuple_count
                  << " tuples\n";
        const auto pos = pattern_positions();
        for (std::size_t q = 0; q < r.witness.size(); ++q) {
          std::cout << "  " << to_string(pos[q]) << " ->";
          for (const auto& n : r.witness[q]) std::cout << " " << to_string(n);
          std::cout << "\n";
        }
      }
      switch (r.outcome) {
        case SearchOutcome::FOUND: return int{kPass};
        case SearchOutcome::NONE: return int{kFail};
        case SearchOutcome::BUDGET_EXHAUSTED: return int{kResource};
      }
      return int{kFail};
    };
  });

  // check
  std::string ck_oracle;
  std::string ck_property;
  std::optional<unsigned> ck_depth;
  std::string ck_mode = "full";
  unsigned ck_k = 2;
  std::vector<std::string> ck_tuples;
  std::string ck_antichain = "00,01,10";
  unsigned ck_size = 3;
  auto* ck = sub(app, "check", "check a witness pattern against an oracle");
  ck->add_option("--oracle", ck_oracle, "oracle JSON file")->required();
  ck->add_option("--property", ck_property, "sop1 sop2 ssop1 atp tp1 k-tp1 weak-k-tp1 astr-sop2 astr-tp1 tp2")
      ->required();
  ck->add_option("--depth", ck_depth, "pattern depth (defaults to the oracle depth)");
  ck->add_option("--mode", ck_mode)->check(CLI::IsMember({"full", "reduced"}));
  ck->add_option("--k", ck_k, "arity for the k-ary properties");
  ck->add_option("--tuple", ck_tuples, "pattern tuple for astr properties, e.g. 0,1 (repeatable)");
  ck->add_option("--antichain", ck_antichain, "grid rows for tp2");
  ck->add_option("--size", ck_size, "grid size for tp2");
  ck->callback([&] {
    action = [&] {
      const auto o = io::oracle_from_json(io::read_json_file(ck_oracle));
      if (ck_property == "tp2") {
        NamedTreeMap map(MapName::TP2_FROM_AT, parse_node_list(ck_antichain, 2));
        return report_exit(check_tp2(pull_back_grid(o, map, ck_size)), g, "tp2");
      }
      Property p(parse_property(ck_property), ck_k);
      for (const auto& t : ck_tuples) p.tuples.push_back(parse_node_list(t));
      const auto mode = ck_mode == "full" ? CheckMode::FULL : CheckMode::REDUCED;
      return report_exit(check_property(o, p, ck_depth.value_or(o.depth()), mode), g, to_string(p.kind));
    };
  });

  // map
  auto* mp = sub(app, "map", "named tree maps");
  mp->require_subcommand(1);
  std::string mp_name;
  std::string mp_node;
  std::string mp_antichain = "00,01,10";
  auto* mp_apply = sub(*mp, "apply", "apply a map to a node (or a grid cell i,j for tp2_from_at)");
  mp_apply->add_option("--name", mp_name)->required();
  mp_apply->add_option("--node", mp_node)->required();
  mp_apply->add_option("--antichain", mp_antichain, "grid rows for tp2_from_at");
  mp_apply->callback([&] {
    action = [&] {
      NamedTreeMap map(parse_map_name(mp_name));
      Node image;
      if (map.is_grid()) {
        map.antichain = parse_node_list(mp_antichain, 2);
        const auto comma = mp_node.find(',');
        if (comma == std::string::npos) throw InputError("tp2_from_at takes a cell i,j");
        GridCell cell{static_cast<unsigned>(std::stoul(mp_node.substr(0, comma))),
                      static_cast<unsigned>(std::stoul(mp_node.substr(comma + 1)))};
        image = apply_grid(map, cell, static_cast<unsigned>(map.antichain.size()));
      } else {
        image = apply_map(map, parse_node(mp_node, 2));
      }
      if (g.json) std::cout << dump(json{{"format", io::kFormat}, {"image", io::node_to_json(image)}});
      else std::cout << to_string(image) << "\n";
      return int{kPass};
    };
  });
  unsigned mp_depth = 0;
  std::string mp_out;
  auto* mp_table = sub(*mp, "table", "tabulate a map on nodes of length <= depth");
  mp_table->add_option("--name", mp_name)->required();
  mp_table->add_option("--depth", mp_depth)->required();
  mp_table->add_option("--out", mp_out);
  mp_table->callback([&] {
    action = [&] {
      const auto name = parse_map_name(mp_name);
      emit(dump(io::table_to_json(make_table(name, mp_depth), to_string(name), mp_depth)), mp_out);
      return int{kPass};
    };
  });
  std::string mp_in;
  auto* mp_validate = sub(*mp, "validate", "check that a table respects immediate successors");
  mp_validate->add_option("--in", mp_in, "table JSON");
  mp_validate->add_option("--name", mp_name, "tabulate a named map instead of reading a file");
  mp_validate->add_option("--depth", mp_depth, "validate nodes of length < depth")->required();
  mp_validate->callback([&] {
    action = [&] {
      if (mp_in.empty() == mp_name.empty()) throw CLI::ValidationError("give exactly one of --in and --name");
      const MapTable t = mp_in.empty() ? make_table(parse_map_name(mp_name), mp_depth)
                                       : io::table_from_json(io::read_json_file(mp_in));
      return report_exit(validate_successor_preserving(t, mp_depth), g, "successor-preserving");
    };
  });

  // levelsets
  unsigned ls_i = 0;
  unsigned ls_k = 0;
  std::string ls_prefix = "e";
  std::string ls_map = "at_embed";
  bool ls_verify = false;
  auto* ls = sub(app, "levelsets", "the set system L_i, M_i^k, m_i^k around a map");
  ls->add_option("--i", ls_i, "level (or largest level with --verify)");
  ls->add_option("--k", ls_k, "tail length (or largest tail with --verify)");
  ls->add_option("--prefix", ls_prefix, "shift every set by this node");
  ls->add_option("--map", ls_map, "at_embed or at_from_ssop1");
  ls->add_flag("--verify", ls_verify, "check the facts for all levels <= i and tails <= k");
  ls->callback([&] {
    action = [&] {
      const NamedTreeMap map(parse_map_name(ls_map));
      if (ls_verify) return report_exit(verify_levelset_facts(ls_i, ls_k, level_set_generator(map)), g, "levelsets");
      const auto s = gen_level_sets(ls_i, ls_k, parse_node(ls_prefix, 2), map);
      if (g.json) {
        std::cout << dump(json{{"format", io::kFormat},
                               {"i", s.i},
                               {"k", s.k},
                               {"L", io::nodes_to_json(s.L_i.span())},
                               {"xi", io::node_to_json(s.xi)},
                               {"ones", io::nodes_to_json(s.one_xi_k.span())},
                               {"M", io::nodes_to_json(s.M_i_k.span())},
                               {"m", io::node_to_json(s.m_i_k)}});
      } else {
        std::cout << "L    " << to_string(s.L_i) << "\nxi   " << to_string(s.xi) << "\nones " << to_string(s.one_xi_k)
                  << "\nM    " << to_string(s.M_i_k) << "\nm    " << to_string(s.m_i_k) << "\n";
      }
      return int{kPass};
    };
  });

  // mono
  auto* mo = sub(app, "mono", "monochromatic searches in colored trees");
  mo->require_subcommand(1);
  std::string mo_coloring;
  unsigned mo_height = 2;
  unsigned mo_branching = 2;
  std::uint64_t mo_budget = kDefaultEmbeddingBudget;
  auto* mo_embed = sub(*mo, "embed", "successor-respecting embedding with one-colored range");
  mo_embed->add_option("--coloring", mo_coloring)->required();
  mo_embed->add_option("--height", mo_height);
  mo_embed->add_option("--branching", mo_branching, "branching of the embedded tree");
  mo_embed->add_option("--budget", mo_budget);
  mo_embed->callback([&] {
    action = [&] {
      const auto c = io::coloring_from_json(io::read_json_file(mo_coloring));
      const auto h = find_mono_embedding(c, mo_height, mo_branching, mo_budget);
      if (g.json) {
        json j{{"format", io::kFormat}, {"found", h.has_value()}};
        if (h) {
          json t = json::object();
          for (const auto& [k, v] : *h) t[to_string(k)] = io::node_to_json(v);
          j["color"] = c.color(h->begin()->second);
          j["table"] = t;
        }
        std::cout << dump(j);
      } else if (h) {
        std::cout << "found, color " << c.color(h->begin()->second) << "\n";
        for (const auto& [k, v] : *h) std::cout << "  " << to_string(k) << " -> " << to_string(v) << "\n";
      } else {
        std::cout << "none\n";
      }
      return h ? int{kPass} : int{kFail};
    };
  });
  unsigned mo_margin = 0;
  auto* mo_dense = sub(*mo, "dense", "least node and color dense above it");
  mo_dense->add_option("--coloring", mo_coloring)->required();
  mo_dense->add_option("--margin", mo_margin);
  mo_dense->callback([&] {
    action = [&] {
      const auto c = io::coloring_from_json(io::read_json_file(mo_coloring));
      const auto d = find_dense_color(c, mo_margin);
      if (g.json) {
        json j{{"format", io::kFormat}, {"found", d.has_value()}};
        if (d) {
          j["node"] = io::node_to_json(d->node);
          j["color"] = d->color;
        }
        std::cout << dump(j);
      } else if (d) {
        std::cout << to_string(d->node) << " " << d->color << "\n";
      } else {
        std::cout << "none\n";
      }
      return d ? int{kPass} : int{kFail};
    };
  });

  // classify
  std::string cl_nodes;
  auto* cl = sub(app, "classify", "chain, bad pair, or neither");
  cl->add_option("--nodes", cl_nodes, "comma list of binary nodes")->required();
  cl->callback([&] {
    action = [&] {
      const auto c = classify_subset(NodeSet(parse_node_list(cl_nodes, 2)));
      if (g.json) std::cout << dump(json{{"format", io::kFormat}, {"class", to_string(c)}});
      else std::cout << to_string(c) << "\n";
      return int{kPass};
    };
  });

  // selftest
  bool sf_quick = false;
  bool sf_full = false;
  std::vector<std::string> sf_only;
  auto* sf = sub(app, "selftest", "run the built-in acceptance suites");
  auto* q = sf->add_flag("--quick", sf_quick, "invariants and depth <= 3 exhaustive checks");
  auto* f = sf->add_flag("--full", sf_full, "the complete acceptance table");
  q->excludes(f);
  sf->add_option("--only", sf_only, "run only these criterion ids");
  sf->callback([&] {
    action = [&] {
      auto suite = sf_full ? acceptance::full_suite(g.seed) : acceptance::quick_suite(g.seed);
      if (!sf_only.empty()) {
        std::vector<acceptance::Criterion> picked;
        for (const auto& c : suite) {
          if (std::find(sf_only.begin(), sf_only.end(), c.id) != sf_only.end()) picked.push_back(c);
        }
        if (picked.empty()) throw CLI::ValidationError("--only", "no criterion matches");
        suite = std::move(picked);
      }
      const auto results = acceptance::run_suite(suite, g.json ? nullptr : &std::cout);
      const auto* bad = acceptance::first_failure(results);
      if (g.json) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        json j{{"format", io::kFormat}, {"pass", bad == nullptr}, {"criteria", arr}};
        if (bad) j["first_failure"] = bad->id;
        std::cout << dump(j);
      } else if (bad) {
        std::cout << "first failing criterion: " << bad->id << " [" << bad->name << "]\n";
      } else {
        std::cout << "all " << results.size() << " criteria passed\n";
      }
      return bad ? int{kFail} : int{kPass};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? int{kPass} : int{kUsage};
  }
  try {
    return action ? action() : int{kUsage};
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  }
}
