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

#ifndef TREELAB_RAMSEY_HPP_
#define TREELAB_RAMSEY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treelab/errors.hpp"
#include "treelab/node.hpp"
#include "treelab/treemaps.hpp"

namespace treelab {

/// A coloring of the nodes of length < depth over `branching` symbols.
/// Unlisted nodes take the default color.
class Coloring {
 public:
  Coloring(unsigned depth, unsigned branching, int default_color = 0, std::map<Node, int> colors = {})
      : depth_(depth), branching_(branching), default_(default_color) {
    if (branching == 0) throw InputError("branching must be positive");
    for (auto& [n, c] : colors) set(n, c);
  }

  static Coloring from_function(unsigned depth, unsigned branching, const std::function<int(const Node&)>& f) {
    Coloring c(depth, branching);
    for (const auto& n : tree_nodes(depth, branching)) c.set(n, f(n));
    return c;
  }

  unsigned depth() const { return depth_; }
  unsigned branching() const { return branching_; }
  int default_color() const { return default_; }
  const std::map<Node, int>& colors() const { return colors_; }

  void set(const Node& n, int color) {
    require_in_range(n);
    colors_[n.with_branching(branching_)] = color;
  }

  int color(const Node& n) const {
    auto it = colors_.find(n);
    return it == colors_.end() ? default_ : it->second;
  }

  bool in_range(const Node& n) const {
    if (n.length() >= depth_) return false;
    for (auto s : n.symbols()) {
      if (s >= branching_) return false;
    }
    return true;
  }

  void require_in_range(const Node& n) const {
    if (!in_range(n)) throw InputError("node " + to_string(n) + " outside the colored tree");
  }

 private:
  unsigned depth_;
  unsigned branching_;
  int default_;
  std::map<Node, int> colors_;
};

struct DenseColor {
  Node node;
  int color = 0;
  friend bool operator==(const DenseColor&, const DenseColor&) = default;
};

/// Least (nu*, j), nodes in lexicographic order then colors ascending, such
/// that every nu extending nu* with length <= depth - 1 - margin has an
/// extension in the tree colored j.
inline std::optional<DenseColor> find_dense_color(const Coloring& c, unsigned margin = 0) {
  if (margin + 1 > c.depth()) return std::nullopt;
  const unsigned limit = c.depth() - 1 - margin;
  // Colors present below each node, built bottom-up over the lexicographic preorder.
  const auto nodes = tree_nodes(c.depth(), c.branching());
  std::map<Node, std::set<int>> below;
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    std::set<int> s{c.color(*it)};
    if (it->length() + 1 < c.depth()) {
      for (Node::Symbol d = 0; d < c.branching(); ++d) {
        const auto& child = below.at(it->child(d));
        s.insert(child.begin(), child.end());
      }
    }
    below.emplace(*it, std::move(s));
  }
  std::set<int> palette;
  for (const auto& n : nodes) palette.insert(c.color(n));
  // Colors below a node shrink along extensions, so only length `limit` matters.
  const auto frontier = tree_level(limit, c.branching());
  for (const auto& star : tree_nodes(limit + 1, c.branching())) {
    for (int j : palette) {
      bool dense = true;
      for (const auto& nu : frontier) {
        if (star.is_prefix_of(nu) && !below.at(nu).count(j)) {
          dense = false;
          break;
        }
      }
      if (dense) return DenseColor{star, j};
    }
  }
  return std::nullopt;
}

inline constexpr std::uint64_t kDefaultEmbeddingBudget = 10'000'000;

/// Depth-first search for h from the nodes of length < height over k
/// symbols into the colored tree with h(eta)^i a prefix of h(eta^i) and a
/// one-colored range. Candidates are tried in lexicographic order; one unit
/// of budget is one candidate placement.
inline std::optional<MapTable> find_mono_embedding(const Coloring& c, unsigned height, unsigned k,
                                                   std::uint64_t budget = kDefaultEmbeddingBudget) {
  if (height < 1) throw InputError("height must be at least 1");
  if (k < 1 || k > c.branching()) throw InputError("target branching must lie in 1..branching of the coloring");
  const auto domain = tree_nodes(height, k);
  const auto range = tree_nodes(c.depth(), c.branching());
  MapTable h;
  std::uint64_t steps = 0;
  int target = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t q) {
    if (q == domain.size()) return true;
    const Node& eta = domain[q];
    const Node base = eta.parent();
    const Node floor = h.at(base).child(*eta.last());
    for (const auto& cand : range) {
      if (!floor.is_prefix_of(cand) || c.color(cand) != target) continue;
      if (++steps > budget) throw ResourceError("embedding search exceeded budget " + std::to_string(budget));
      h[eta] = cand;
      if (place(q + 1)) return true;
    }
    h.erase(eta);
    return false;
  };
  for (const auto& root : range) {
    if (++steps > budget) throw ResourceError("embedding search exceeded budget " + std::to_string(budget));
    target = c.color(root);
    h.clear();
    h[domain[0]] = root;
    if (place(1)) return h;
  }
  return std::nullopt;
}

}  // namespace treelab

#endif  // TREELAB_RAMSEY_HPP_
