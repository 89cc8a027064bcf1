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

// Slow, definition-level reference computations. They share no code with
// the fast paths they are compared against beyond the basic node algebra.

#ifndef TREELAB_REFERENCE_HPP_
#define TREELAB_REFERENCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "treelab/node.hpp"

namespace treelab::reference {

/// Maximal antichains counted by brute force: every subset of the tree that
/// is pairwise incomparable and admits no further incomparable node.
inline std::uint64_t count_maximal_antichains(unsigned depth) {
  const auto nodes = tree_nodes(depth, 2);
  const std::size_t n = nodes.size();
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    bool antichain = true;
    for (std::size_t i = 0; i < n && antichain; ++i) {
      for (std::size_t j = i + 1; j < n && antichain; ++j) {
        if ((m >> i & 1U) && (m >> j & 1U) && comparable(nodes[i], nodes[j])) antichain = false;
      }
    }
    if (!antichain) continue;
    bool extendable = false;
    for (std::size_t k = 0; k < n && !extendable; ++k) {
      if (m >> k & 1U) continue;
      bool fits = true;
      for (std::size_t i = 0; i < n && fits; ++i) {
        if ((m >> i & 1U) && comparable(nodes[i], nodes[k])) fits = false;
      }
      extendable = fits;
    }
    if (!extendable) ++count;
  }
  return count;
}

/// A meet-term over tuple variables: a variable, or the meet of two terms.
struct Term {
  int var = -1;  // variable index for leaves
  int left = -1;
  int right = -1;
};

/// All meet-terms of nesting depth <= depth over `arity` variables.
inline std::vector<Term> meet_terms(std::size_t arity, unsigned depth) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < arity; ++i) terms.push_back({static_cast<int>(i), -1, -1});
  std::size_t prev = terms.size();
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t upto = terms.size();
    for (std::size_t a = 0; a < upto; ++a) {
      for (std::size_t b = 0; b < upto; ++b) {
        if (a < prev && b < prev && d > 0) continue;  // only genuinely new terms
        terms.push_back({-1, static_cast<int>(a), static_cast<int>(b)});
      }
    }
    prev = upto;
  }
  return terms;
}

inline std::vector<Node> evaluate_terms(const std::vector<Term>& terms, std::span<const Node> tuple) {
  std::vector<Node> v;
  v.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.var >= 0) v.push_back(tuple[t.var]);
    else v.push_back(meet(v[t.left], v[t.right]));
  }
  return v;
}

/// Truth values of every atomic formula t = s, t <= s (prefix), t <lex s.
inline std::vector<bool> atomic_diagram(const std::vector<Term>& terms, std::span<const Node> tuple) {
  const auto v = evaluate_terms(terms, tuple);
  std::vector<bool> out;
  out.reserve(v.size() * v.size() * 3);
  for (const auto& a : v) {
    for (const auto& b : v) {
      out.push_back(a == b);
      out.push_back(a.is_prefix_of(b));
      out.push_back(a < b);
    }
  }
  return out;
}

/// Quantifier-free type equality, decided on all atomic formulas over meet-terms of depth <= 2.
inline bool str_similar_by_terms(std::span<const Node> a, std::span<const Node> b) {
  if (a.size() != b.size()) return false;
  const auto terms = meet_terms(a.size(), 2);
  return atomic_diagram(terms, a) == atomic_diagram(terms, b);
}

}  // namespace treelab::reference

#endif  // TREELAB_REFERENCE_HPP_
