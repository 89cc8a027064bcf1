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

#ifndef TREELAB_ORACLE_HPP_
#define TREELAB_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treelab/antichain.hpp"
#include "treelab/errors.hpp"
#include "treelab/node.hpp"
#include "treelab/treemaps.hpp"

namespace treelab {

/// {xi^1, tau} with tau extending xi^0; tau may equal xi^0.
inline bool is_bad_pair(const Node& a, const Node& b) {
  auto check = [](const Node& one, const Node& other) {
    if (!one.ends_with(1)) return false;
    Node zero = one.parent().child(0);
    return zero.is_prefix_of(other);
  };
  return check(a, b) || check(b, a);
}

inline bool has_bad_pair(std::span<const Node> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (is_bad_pair(x[i], x[j])) return true;
    }
  }
  return false;
}

enum class SyntheticRule { ATP, CHAIN, FREE };

inline std::string to_string(SyntheticRule r) {
  switch (r) {
    case SyntheticRule::ATP: return "atp";
    case SyntheticRule::CHAIN: return "chain";
    case SyntheticRule::FREE: return "free";
  }
  return "?";
}

/// Bitset over solver identifiers.
class SolverSet {
 public:
  SolverSet() = default;
  explicit SolverSet(std::size_t universe, bool full = false)
      : words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0), universe_(universe) {
    if (full && universe % 64) words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }

  void set(std::size_t i) { words_.at(i / 64) |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return words_.at(i / 64) >> (i % 64) & 1U; }
  std::size_t universe() const { return universe_; }

  SolverSet& operator&=(const SolverSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }

  bool intersects(const SolverSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < universe_; ++i) {
      if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

/// A predicate on finite node sets standing for joint satisfiability of
/// one formula instance per node. Nodes range over the tree of nodes of
/// length < depth with the given branching.
class ConsistencyOracle {
 public:
  enum class Kind { SolutionSet, Synthetic, Pullback };

  static ConsistencyOracle solution_set(unsigned depth, unsigned branching,
                                        const std::map<Node, std::vector<std::uint32_t>>& solutions) {
    ConsistencyOracle o(Kind::SolutionSet, depth, branching);
    std::uint32_t universe = 0;
    for (const auto& [node, ids] : solutions) {
      o.require_in_range(node);
      for (auto id : ids) universe = std::max(universe, id + 1);
    }
    o.universe_ = universe;
    for (const auto& [node, ids] : solutions) {
      SolverSet s(universe);
      for (auto id : ids) s.set(id);
      o.solutions_.emplace(node.with_branching(branching), std::move(s));
    }
    return o;
  }

  static ConsistencyOracle synthetic(SyntheticRule rule, unsigned depth, unsigned branching = 2) {
    ConsistencyOracle o(Kind::Synthetic, depth, branching);
    o.rule_ = rule;
    return o;
  }

  /// consistent(X) := inner.consistent(map[X]) on the pattern tree of the given depth.
  static ConsistencyOracle pullback(std::shared_ptr<const ConsistencyOracle> inner, NamedTreeMap map,
                                    unsigned depth) {
    if (map.is_grid()) throw InputError("grid maps pull back to grid oracles");
    if (inner->branching() != 2) throw InputError("pullback needs a binary inner oracle");
    ConsistencyOracle o(Kind::Pullback, depth, 2);
    o.inner_ = std::move(inner);
    o.map_ = std::move(map);
    return o;
  }

  Kind kind() const { return kind_; }
  unsigned depth() const { return depth_; }
  unsigned branching() const { return branching_; }
  SyntheticRule rule() const { return rule_; }
  const ConsistencyOracle* inner() const { return inner_.get(); }
  const NamedTreeMap& map() const { return map_; }
  std::size_t universe() const { return universe_; }
  const std::map<Node, SolverSet>& solutions() const { return solutions_; }

  bool in_range(const Node& n) const {
    if (n.length() >= depth_) return false;
    return std::all_of(n.symbols().begin(), n.symbols().end(), [&](Node::Symbol s) { return s < branching_; });
  }

  void require_in_range(const Node& n) const {
    if (!in_range(n)) {
      throw InputError("node " + to_string(n) + " outside oracle tree (depth " + std::to_string(depth_) +
                       ", branching " + std::to_string(branching_) + ")");
    }
  }

  bool consistent(std::span<const Node> x) const {
    for (const auto& n : x) require_in_range(n);
    return consistent_unchecked(x);
  }

  bool consistent(const NodeSet& x) const { return consistent(x.span()); }
  bool consistent(std::initializer_list<Node> x) const { return consistent(std::span<const Node>(x.begin(), x.size())); }

  /// Common solver set of the nodes; only for solution-set oracles.
  SolverSet common_solvers(std::span<const Node> x) const {
    if (kind_ != Kind::SolutionSet) throw InputError("common_solvers needs a solution-set oracle");
    SolverSet acc(universe_, true);
    for (const auto& n : x) {
      auto it = solutions_.find(n);
      if (it == solutions_.end()) return SolverSet(universe_);
      acc &= it->second;
    }
    return acc;
  }

 private:
  ConsistencyOracle(Kind kind, unsigned depth, unsigned branching)
      : kind_(kind), depth_(depth), branching_(branching) {
    if (branching == 0) throw InputError("branching must be positive");
  }

  bool consistent_unchecked(std::span<const Node> x) const {
    switch (kind_) {
      case Kind::SolutionSet:
        if (x.empty()) return true;
        return common_solvers(x).any();
      case Kind::Synthetic: {
        NodeSet set(std::vector<Node>(x.begin(), x.end()));
        switch (rule_) {
          case SyntheticRule::ATP: return is_antichain(set);
          case SyntheticRule::CHAIN: return is_chain(set);
          case SyntheticRule::FREE: return !has_bad_pair(set.span());
        }
        return false;
      }
      case Kind::Pullback: {
        std::vector<Node> image;
        image.reserve(x.size());
        for (const auto& n : x) image.push_back(apply_map(map_, n));
        return inner_->consistent(image);
      }
    }
    return false;
  }

  Kind kind_;
  unsigned depth_;
  unsigned branching_;
  SyntheticRule rule_ = SyntheticRule::ATP;
  std::size_t universe_ = 0;
  std::map<Node, SolverSet> solutions_;
  std::shared_ptr<const ConsistencyOracle> inner_;
  NamedTreeMap map_;
};

/// Longest image of a node of length < depth.
inline std::size_t max_image_length(const NamedTreeMap& map, unsigned depth) {
  std::size_t m = 0;
  for (const auto& n : tree_nodes(depth)) m = std::max(m, apply_map(map, n).length());
  return m;
}

inline constexpr unsigned kMaxPullbackDepth = 12;

/// Pattern depth defaults to the largest one (up to 12) whose image fits
/// the inner tree.
inline ConsistencyOracle pull_back(const ConsistencyOracle& inner, const NamedTreeMap& map,
                                   std::optional<unsigned> depth = std::nullopt) {
  auto shared = std::make_shared<const ConsistencyOracle>(inner);
  if (depth) {
    const std::size_t need = *depth == 0 ? 0 : max_image_length(map, *depth) + 1;
    if (need > inner.depth()) {
      throw InputError("image of depth " + std::to_string(*depth) + " under " + to_string(map.name) +
                       " needs inner depth " + std::to_string(need) + ", have " + std::to_string(inner.depth()));
    }
    return ConsistencyOracle::pullback(shared, map, *depth);
  }
  unsigned d = 0;
  while (d < kMaxPullbackDepth && max_image_length(map, d + 1) < inner.depth()) ++d;
  if (d == 0) throw InputError("inner oracle too shallow for any image under " + to_string(map.name));
  return ConsistencyOracle::pullback(shared, map, d);
}

/// An m-by-m array of parameters with a consistency predicate on cell sets.
struct GridOracle {
  unsigned m = 0;
  std::function<bool(std::span<const GridCell>)> consistent;
};

inline GridOracle pull_back_grid(const ConsistencyOracle& inner, const NamedTreeMap& map, unsigned m) {
  if (!map.is_grid()) throw InputError("pull_back_grid needs tp2_from_at");
  if (map.antichain.size() < m) throw InputError("antichain has fewer than m rows");
  for (unsigned i = 0; i < m; ++i) inner.require_in_range(apply_grid(map, {i, m - 1}, m));
  auto shared = std::make_shared<const ConsistencyOracle>(inner);
  return GridOracle{m, [shared, map, m](std::span<const GridCell> cells) {
                      std::vector<Node> image;
                      for (const auto& c : cells) image.push_back(apply_grid(map, c, m));
                      return shared->consistent(NodeSet(std::move(image)));
                    }};
}

/// Mask-indexed view of an oracle with a memo table, for small trees.
class MaskedOracle {
 public:
  explicit MaskedOracle(const ConsistencyOracle& o) : oracle_(o), index_(o.depth(), o.branching()) {
    index_.require_mask_capacity();
  }

  const TreeIndex& index() const { return index_; }

  bool consistent(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    bool v = oracle_.consistent(index_.nodes_of(mask));
    cache_.emplace(mask, v);
    return v;
  }

 private:
  const ConsistencyOracle& oracle_;
  TreeIndex index_;
  std::map<std::uint64_t, bool> cache_;
};

}  // namespace treelab

#endif  // TREELAB_ORACLE_HPP_
