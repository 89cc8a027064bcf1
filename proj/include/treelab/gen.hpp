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

// Seeded random instances for property tests. All draws go through one
// std::mt19937_64, so a seed fixes every instance.

#ifndef TREELAB_GEN_HPP_
#define TREELAB_GEN_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "treelab/node.hpp"
#include "treelab/oracle.hpp"
#include "treelab/treemaps.hpp"

namespace treelab::gen {

using Rng = std::mt19937_64;

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

/// Uniform length in [min_len, max_len], then uniform symbols.
inline Node random_node(Rng& rng, unsigned min_len, unsigned max_len, unsigned branching = 2) {
  const unsigned len = uniform(rng, min_len, max_len);
  std::vector<Node::Symbol> s(len);
  for (auto& x : s) x = uniform(rng, 0, branching - 1);
  return Node(std::move(s), branching);
}

struct GammaPair {
  std::vector<Node> eta;
  std::vector<Node> nu;
};

/// eta is a shuffled meet closure of a few random nodes; nu is its image
/// under a random successor-preserving h with h(x^d) = h(x)^d^w, where w
/// is empty or ends in d, and empty whenever x and x^d both occur in eta.
/// Such h keeps last symbols and immediate successors, so the pair is
/// gamma-equivalent.
inline GammaPair random_gamma_pair(Rng& rng, unsigned max_len = 4, unsigned max_seeds = 4) {
  std::vector<Node> seeds;
  const unsigned count = uniform(rng, 1, max_seeds);
  for (unsigned i = 0; i < count; ++i) seeds.push_back(random_node(rng, 0, max_len));
  GammaPair p;
  p.eta = meet_closure(seeds);
  std::shuffle(p.eta.begin(), p.eta.end(), rng);
  const NodeSet present(p.eta);

  std::map<Node, Node> h;
  const Node root = Node::root(2);
  h[root] = present.contains(root) ? root : random_node(rng, 0, 2);
  for (const auto& x : tree_nodes(max_len + 1, 2)) {
    if (x.is_root()) continue;
    const Node parent = x.parent();
    const Node::Symbol d = *x.last();
    Node image = h.at(parent).child(d);
    if (!(present.contains(parent) && present.contains(x)) && uniform(rng, 0, 1) == 1) {
      image = image.concat(random_node(rng, 0, 2)).child(d);
    }
    h[x] = image;
  }
  for (const auto& x : p.eta) p.nu.push_back(h.at(x));
  return p;
}

struct TailSwapInstance {
  std::vector<Node> sigma;
  Node sigma_last;
  Node eta;
  Node nu;
  std::vector<Node> theta;
};

/// Instances with every node of length <= 6 that satisfy the hypothesis of
/// check_tail_swap by construction.
inline TailSwapInstance random_tail_swap(Rng& rng) {
  for (;;) {
    TailSwapInstance t;
    t.sigma_last = random_node(rng, 0, 1);
    const Node step = t.sigma_last.child(uniform(rng, 0, 1));
    t.eta = step.concat(random_node(rng, 0, 2));
    t.nu = step.concat(random_node(rng, 0, 2));
    const Node one = t.sigma_last.child(1);
    if (t.eta == one || t.nu == one) continue;
    const unsigned n_sigma = uniform(rng, 0, 3);
    while (t.sigma.size() < n_sigma) {
      Node s = random_node(rng, 0, 4);
      if (!step.is_prefix_of(s)) t.sigma.push_back(std::move(s));
    }
    const unsigned n_theta = uniform(rng, 1, 3);
    for (unsigned i = 0; i < n_theta; ++i) t.theta.push_back(random_node(rng, 0, 2));
    return t;
  }
}

/// A solution-set oracle whose solvers are the leaf chains of the tree,
/// with each (node, solver) incidence flipped with probability `noise`.
/// Low noise keeps most chains consistent, so both verdicts occur.
inline ConsistencyOracle random_solution_oracle(Rng& rng, unsigned depth, unsigned branching, double noise = 0.1) {
  const auto nodes = tree_nodes(depth, branching);
  const auto leaves = tree_level(depth - 1, branching);
  std::bernoulli_distribution flip(noise);
  std::map<Node, std::vector<std::uint32_t>> sol;
  for (const auto& n : nodes) sol[n];
  for (std::uint32_t l = 0; l < leaves.size(); ++l) {
    for (const auto& n : nodes) {
      const bool on_chain = n.is_prefix_of(leaves[l]);
      if (on_chain != flip(rng)) sol[n].push_back(l);
    }
  }
  return ConsistencyOracle::solution_set(depth, branching, sol);
}

}  // namespace treelab::gen

#endif  // TREELAB_GEN_HPP_
