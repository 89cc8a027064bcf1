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

#ifndef TREELAB_TREEMAPS_HPP_
#define TREELAB_TREEMAPS_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treelab/errors.hpp"
#include "treelab/node.hpp"
#include "treelab/report.hpp"
#include "treelab/similarity.hpp"

namespace treelab {

enum class MapName { IDENTITY, SOP1_FROM_AT, TP2_FROM_AT, BETA_FROM_GAMMA, AT_EMBED, SSOP1_FROM_AT, AT_FROM_SSOP1 };

inline constexpr std::array<std::pair<MapName, std::string_view>, 7> kMapNames{{
    {MapName::IDENTITY, "identity"},
    {MapName::SOP1_FROM_AT, "sop1_from_at"},
    {MapName::TP2_FROM_AT, "tp2_from_at"},
    {MapName::BETA_FROM_GAMMA, "beta_from_gamma"},
    {MapName::AT_EMBED, "at_embed"},
    {MapName::SSOP1_FROM_AT, "ssop1_from_at"},
    {MapName::AT_FROM_SSOP1, "at_from_ssop1"},
}};

inline std::string to_string(MapName name) {
  for (const auto& [n, s] : kMapNames) {
    if (n == name) return std::string(s);
  }
  return "?";
}

inline MapName parse_map_name(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& [n, s] : kMapNames) {
    if (s == lower) return n;
  }
  throw InputError("unknown map name '" + std::string(text) + "'");
}

/// One of the recursive node maps, or the grid map TP2_FROM_AT, which is
/// parametrized by an antichain and acts on grid cells rather than nodes.
struct NamedTreeMap {
  MapName name = MapName::IDENTITY;
  std::vector<Node> antichain;

  NamedTreeMap() = default;
  NamedTreeMap(MapName n) : name(n) {}  // NOLINT(google-explicit-constructor)
  NamedTreeMap(MapName n, std::vector<Node> chain) : name(n), antichain(std::move(chain)) {}

  bool is_grid() const { return name == MapName::TP2_FROM_AT; }
};

namespace detail {

inline void append(std::vector<Node::Symbol>& out, std::initializer_list<Node::Symbol> tail) {
  out.insert(out.end(), tail.begin(), tail.end());
}

}  // namespace detail

/// Total map on binary nodes. Results carry branching 2.
inline Node apply_map(const NamedTreeMap& map, const Node& eta) {
  if (!eta.is_binary()) throw InputError("maps act on binary nodes; got " + to_string(eta));
  if (map.is_grid()) throw InputError("tp2_from_at acts on grid cells; use apply_grid");
  auto s = eta.symbols();
  std::vector<Node::Symbol> out;
  using detail::append;
  switch (map.name) {
    case MapName::IDENTITY:
      out.assign(s.begin(), s.end());
      break;
    case MapName::SOP1_FROM_AT:
      // Read left to right: a leading 0 emits 011, a leading 1 emits 0, the end emits 1.
      for (auto c : s) {
        if (c == 0) append(out, {0, 1, 1});
        else append(out, {0});
      }
      out.push_back(1);
      break;
    case MapName::BETA_FROM_GAMMA:
      for (auto c : s) {
        if (c == 0) append(out, {0, 1});
        else append(out, {1});
      }
      break;
    case MapName::AT_EMBED:
      out = {1};
      for (auto c : s) {
        if (c == 0) append(out, {0, 0, 1});
        else append(out, {0, 1, 1});
      }
      break;
    case MapName::SSOP1_FROM_AT:
      out = {0};
      for (auto c : s) {
        out.pop_back();
        if (c == 0) append(out, {1, 0, 0, 0});
        else append(out, {1, 0});
      }
      break;
    case MapName::AT_FROM_SSOP1:
      out = {1};
      for (auto c : s) {
        out.pop_back();
        if (c == 0) append(out, {0, 0, 1});
        else append(out, {0, 1, 1});
      }
      break;
    case MapName::TP2_FROM_AT:
      break;
  }
  return Node(std::move(out), 2);
}

struct GridCell {
  unsigned row = 0;
  unsigned col = 0;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// (i, j) -> eta_i ^ 0^j, for j < size.
inline Node apply_grid(const NamedTreeMap& map, GridCell cell, unsigned size) {
  if (!map.is_grid()) throw InputError("apply_grid needs tp2_from_at");
  if (cell.row >= map.antichain.size() || cell.col >= size) {
    throw InputError("grid cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ") out of range");
  }
  return map.antichain[cell.row].concat(Node::zeros(cell.col, map.antichain[cell.row].branching()));
}

/// The stagewise family h_n on nodes of length <= n, defined by recursion on n.
inline Node sop1_stagewise(unsigned n, const Node& eta) {
  if (eta.length() > n) throw InputError("node longer than stage");
  if (eta.is_root()) return Node({1}, 2);
  std::vector<Node::Symbol> tail(eta.symbols().begin() + 1, eta.symbols().end());
  Node rest = sop1_stagewise(n - 1, Node(std::move(tail), 2));
  return (eta[0] == 0 ? Node({0, 1, 1}, 2) : Node({0}, 2)).concat(rest);
}

using MapTable = std::map<Node, Node>;

/// The map restricted to nodes of length <= depth.
inline MapTable make_table(const NamedTreeMap& map, unsigned depth) {
  MapTable t;
  for (const auto& n : tree_nodes(depth + 1)) t.emplace(n, apply_map(map, n));
  return t;
}

/// Checks h(eta)^d <= h(eta^d) on nodes of length <= depth; when that
/// holds, also that h reflects the prefix order and commutes with meets.
inline CheckReport validate_successor_preserving(const MapTable& table, unsigned depth) {
  const auto domain = tree_nodes(depth + 1);
  for (const auto& n : domain) {
    if (!table.count(n)) throw InputError("table is not total: missing " + to_string(n));
  }
  std::uint64_t examined = 0;
  auto h = [&](const Node& n) -> const Node& { return table.at(n); };
  for (const auto& eta : domain) {
    if (eta.length() >= depth) continue;
    for (Node::Symbol d = 0; d < 2; ++d) {
      ++examined;
      Node succ = eta.child(d);
      if (!h(eta).with_branching(2).child(d).is_prefix_of(h(succ))) {
        return CheckReport::fail("premise", {eta, succ, h(eta), h(succ)},
                                 "h(" + to_string(eta) + ")^" + std::to_string(d) + " is not a prefix of h(" +
                                     to_string(succ) + ")",
                                 examined);
      }
    }
  }
  for (const auto& eta : domain) {
    for (const auto& nu : domain) {
      ++examined;
      if (h(eta).is_prefix_of(h(nu)) != eta.is_prefix_of(nu)) {
        return CheckReport::fail("conclusion-i", {eta, nu}, "prefix order not preserved and reflected", examined);
      }
      if (meet(h(eta), h(nu)) != h(meet(eta, nu))) {
        return CheckReport::fail("conclusion-ii", {eta, nu}, "h does not commute with meet", examined);
      }
    }
  }
  return CheckReport::ok(examined);
}

struct TailSwapVerdict {
  bool hypothesis = false;
  std::string failed_hypothesis;  // "i", "ii" or "iii" when the hypothesis fails
  CheckReport report;
};

/// Hypothesis: some l <= 1 has sigma_last^l below eta and nu, no sigma_i
/// extends it, and sigma_last^1 is neither eta nor nu. Conclusion: the
/// positional closures with tails eta^theta_i and nu^theta_i are
/// beta-equivalent.
inline TailSwapVerdict check_tail_swap(std::span<const Node> sigma, const Node& sigma_last, const Node& eta,
                                      const Node& nu, std::span<const Node> theta) {
  TailSwapVerdict v;
  if (theta.empty()) throw InputError("theta must be nonempty");
  std::optional<Node::Symbol> level;
  for (Node::Symbol l = 0; l < 2; ++l) {
    Node s = sigma_last.child(l);
    if (s.is_prefix_of(eta) && s.is_prefix_of(nu)) level = l;
  }
  if (!level) {
    v.failed_hypothesis = "i";
    return v;
  }
  const Node step = sigma_last.child(*level);
  if (std::any_of(sigma.begin(), sigma.end(), [&](const Node& s) { return step.is_prefix_of(s); })) {
    v.failed_hypothesis = "ii";
    return v;
  }
  const Node one = sigma_last.child(1);
  if (one == eta || one == nu) {
    v.failed_hypothesis = "iii";
    return v;
  }
  v.hypothesis = true;
  std::vector<Node> left(sigma.begin(), sigma.end());
  left.push_back(sigma_last);
  std::vector<Node> right = left;
  for (const auto& t : theta) {
    left.push_back(eta.concat(t));
    right.push_back(nu.concat(t));
  }
  auto cl_left = closure_tuple(left);
  auto cl_right = closure_tuple(right);
  auto verdict = graded_equiv_diagnose(SimilarityLevel::BETA, cl_left, cl_right);
  if (verdict) {
    v.report = CheckReport::ok(cl_left.size());
  } else {
    v.report = CheckReport::fail(verdict.clause, {cl_left[verdict.i], cl_left[verdict.j], cl_right[verdict.i],
                                                  cl_right[verdict.j]},
                                 "closures not beta-equivalent", cl_left.size());
  }
  return v;
}

/// The finite set system around a map h: L_i = h[nodes of length i],
/// xi = h(0^i), one_xi_k = {xi^1^d : d <= k}, M_i_k = L_i + one_xi_k,
/// m_i_k = xi^1^k, all shifted by `prefix`.
struct LevelSets {
  unsigned i = 0;
  unsigned k = 0;
  Node prefix;
  NodeSet L_i;
  Node xi;
  NodeSet one_xi_k;
  NodeSet M_i_k;
  Node m_i_k;
};

inline LevelSets gen_level_sets(unsigned i, unsigned k, const Node& prefix = Node::root(2),
                                const NamedTreeMap& map = MapName::AT_EMBED) {
  LevelSets s;
  s.i = i;
  s.k = k;
  s.prefix = prefix.with_branching(2);
  auto shift = [&](const Node& n) { return s.prefix.concat(n); };
  std::vector<Node> level;
  for (const auto& nu : tree_level(i)) level.push_back(shift(apply_map(map, nu)));
  s.L_i = NodeSet(level);
  const Node xi = apply_map(map, Node::zeros(i, 2));
  s.xi = shift(xi);
  std::vector<Node> ones;
  for (unsigned d = 0; d <= k; ++d) ones.push_back(shift(xi.concat(Node::ones(d, 2))));
  s.one_xi_k = NodeSet(ones);
  std::vector<Node> all = level;
  all.insert(all.end(), ones.begin(), ones.end());
  s.M_i_k = NodeSet(all);
  s.m_i_k = ones.back();
  return s;
}

using LevelSetGenerator = std::function<LevelSets(unsigned i, unsigned k, const Node& prefix)>;

inline LevelSetGenerator level_set_generator(const NamedTreeMap& map = MapName::AT_EMBED) {
  return [map](unsigned i, unsigned k, const Node& prefix) { return gen_level_sets(i, k, prefix, map); };
}

/// Facts about the set system for all i <= i_max, k <= k_max. Clause names:
/// L0, M0-shift, m-member, m-longest, last-one, meet, nesting.
inline CheckReport verify_levelset_facts(unsigned i_max, unsigned k_max,
                                         const LevelSetGenerator& gen = level_set_generator()) {
  std::uint64_t examined = 0;
  const Node root = Node::root(2);
  {
    auto s = gen(0, 0, root);
    ++examined;
    if (s.L_i != NodeSet{Node({1}, 2)}) return CheckReport::fail("L0", s.L_i.nodes(), "L_0 is not {1}", examined);
  }
  for (unsigned k = 0; k <= k_max; ++k) {
    for (const auto& eta : tree_nodes(3)) {
      ++examined;
      auto s = gen(0, k, eta);
      for (const auto& x : s.M_i_k) {
        bool in_ones = eta.is_prefix_of(x);
        for (std::size_t p = eta.length(); in_ones && p < x.length(); ++p) in_ones = x[p] == 1;
        if (!in_ones) return CheckReport::fail("M0-shift", {eta, x}, "M_0(eta) not inside 1_eta", examined);
      }
    }
  }
  for (unsigned i = 0; i <= i_max; ++i) {
    for (unsigned k = 0; k <= k_max; ++k) {
      ++examined;
      auto s = gen(i, k, root);
      const std::string where = " (i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")";
      if (!s.M_i_k.contains(s.m_i_k)) return CheckReport::fail("m-member", {s.m_i_k}, "m not in M" + where, examined);
      for (const auto& x : s.M_i_k) {
        if (x.length() > s.m_i_k.length()) {
          return CheckReport::fail("m-longest", {s.m_i_k, x}, "element longer than m" + where, examined);
        }
      }
      for (const auto& x : s.M_i_k) {
        if (!x.ends_with(1)) return CheckReport::fail("last-one", {x}, "element not ending in 1" + where, examined);
      }
      Node all = s.M_i_k[0];
      for (const auto& x : s.M_i_k) all = meet(all, x);
      const Node expected = i > 0 ? Node({0}, 2) : Node({1}, 2);
      if (all != expected) {
        return CheckReport::fail("meet", {all, expected}, "meet of M is " + to_string(all) + where, examined);
      }
      if (i < i_max) {
        auto next = gen(i + 1, k, root);
        auto left = gen(i, k, Node({0, 0}, 2));
        auto right = gen(i, k, Node({0, 1}, 2));
        for (const auto& x : next.M_i_k) {
          if (!left.M_i_k.contains(x) && !right.M_i_k.contains(x)) {
            return CheckReport::fail("nesting", {x}, "M_{i+1} element outside M_i(00) + M_i(01)" + where, examined);
          }
        }
      }
    }
  }
  return CheckReport::ok(examined);
}

}  // namespace treelab

#endif  // TREELAB_TREEMAPS_HPP_
