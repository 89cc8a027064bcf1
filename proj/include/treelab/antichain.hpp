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

#ifndef TREELAB_ANTICHAIN_HPP_
#define TREELAB_ANTICHAIN_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "treelab/errors.hpp"
#include "treelab/node.hpp"

namespace treelab {

inline bool is_antichain(const NodeSet& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (comparable(x[i], x[j])) return false;
    }
  }
  return true;
}

inline bool is_chain(const NodeSet& x) {
  // Sorted lexicographically, a chain is exactly a sequence of successive prefixes.
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!x[i - 1].is_prefix_of(x[i])) return false;
  }
  return true;
}

/// Maximality is relative to the binary tree of nodes of length < depth.
inline bool is_maximal_antichain(const NodeSet& x, unsigned depth) {
  if (depth == 0) throw InputError("depth must be at least 1");
  for (const auto& n : x) {
    if (n.length() >= depth) {
      throw InputError("node " + to_string(n) + " outside depth " + std::to_string(depth));
    }
    if (!n.is_binary()) throw InputError("node " + to_string(n) + " is not binary");
  }
  if (!is_antichain(x)) return false;
  // Every leaf of the tree must lie above or below some member; interior
  // nodes are then covered too, since each is a prefix of some leaf.
  for (const auto& leaf : tree_level(depth - 1)) {
    bool covered = std::any_of(x.begin(), x.end(), [&](const Node& m) { return comparable(m, leaf); });
    if (!covered) return false;
  }
  return !x.empty();
}

inline constexpr unsigned kMaxCatalogDepth = 6;

/// All maximal antichains of the binary tree of nodes of length < depth,
/// ordered by birthday (1 + longest member length), then by the
/// lexicographic order of their sorted member lists. Under this order the
/// catalog at a smaller depth is a prefix of every deeper catalog.
///
/// Entries are stored as masks over the lexicographic index of the tree.
class AntichainCatalog {
 public:
  AntichainCatalog(unsigned depth, std::vector<std::uint64_t> masks, std::vector<unsigned> birthdays)
      : index_(std::make_shared<TreeIndex>(depth, 2)),
        masks_(std::move(masks)),
        birthdays_(std::move(birthdays)) {}

  unsigned depth() const { return index_->depth(); }
  std::size_t size() const { return masks_.size(); }
  std::uint64_t mask(std::size_t l) const { return masks_.at(l); }
  unsigned birthday(std::size_t l) const { return birthdays_.at(l); }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  const TreeIndex& index() const { return *index_; }

  NodeSet entry(std::size_t l) const { return NodeSet(index_->nodes_of(masks_.at(l))); }

  bool contains(std::size_t l, const Node& n) const { return masks_.at(l) >> index_->index_of(n) & 1U; }

 private:
  std::shared_ptr<const TreeIndex> index_;
  std::vector<std::uint64_t> masks_;
  std::vector<unsigned> birthdays_;
};

namespace detail {

/// Lexicographic comparison of the ascending index sequences encoded by two masks.
inline bool index_sequence_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  int p = std::countr_zero(diff);
  std::uint64_t above = p == 63 ? 0 : ~std::uint64_t{0} << (p + 1);
  bool a_has = a >> p & 1U;
  const std::uint64_t other = a_has ? b : a;
  // The sequence lacking p is a proper prefix of the other iff it has nothing beyond p.
  bool other_ends = (other & above) == 0;
  return a_has ? !other_ends : other_ends;
}

}  // namespace detail

inline AntichainCatalog enumerate_maximal_antichains(unsigned depth, unsigned bound = kMaxCatalogDepth) {
  if (depth < 1) throw InputError("catalog depth must be at least 1");
  if (depth > bound || depth > kMaxCatalogDepth) {
    throw ResourceError("catalog depth " + std::to_string(depth) + " exceeds bound " +
                        std::to_string(std::min(bound, kMaxCatalogDepth)));
  }
  struct Entry {
    std::uint64_t mask;
    unsigned birthday;
  };
  std::vector<Entry> level{{1, 1}};
  for (unsigned d = 2; d <= depth; ++d) {
    const unsigned right_shift = 1U << (d - 1);
    std::vector<Entry> next;
    next.reserve(level.size() * level.size() + 1);
    next.push_back({1, 1});
    for (const auto& left : level) {
      for (const auto& right : level) {
        next.push_back({left.mask << 1 | right.mask << right_shift, 1 + std::max(left.birthday, right.birthday)});
      }
    }
    std::sort(next.begin(), next.end(), [](const Entry& a, const Entry& b) {
      if (a.birthday != b.birthday) return a.birthday < b.birthday;
      return detail::index_sequence_less(a.mask, b.mask);
    });
    level = std::move(next);
  }
  std::vector<std::uint64_t> masks;
  std::vector<unsigned> birthdays;
  masks.reserve(level.size());
  birthdays.reserve(level.size());
  for (const auto& e : level) {
    masks.push_back(e.mask);
    birthdays.push_back(e.birthday);
  }
  return AntichainCatalog(depth, std::move(masks), std::move(birthdays));
}

/// Count of maximal antichains by the child-subtree recursion.
inline std::uint64_t maximal_antichain_count(unsigned depth) {
  std::uint64_t c = 1;
  for (unsigned d = 2; d <= depth; ++d) c = c * c + 1;
  return c;
}

/// {eta ^ 0^beta : beta < count}.
inline NodeSet gen_O(const Node& eta, unsigned count) {
  std::vector<Node> out;
  Node cur = eta;
  for (unsigned beta = 0; beta < count; ++beta) {
    out.push_back(cur);
    cur = cur.child(0);
  }
  return NodeSet(std::move(out));
}

/// {eta ^ nu ^ 0^beta : nu of length width over k symbols, beta < count}.
inline NodeSet gen_K(const Node& eta, unsigned k, unsigned width, unsigned count) {
  if (k < 1) throw InputError("gen_K needs k >= 1");
  std::vector<Node> out;
  for (const auto& nu : tree_level(width, k)) {
    std::vector<Node::Symbol> symbols(eta.symbols().begin(), eta.symbols().end());
    symbols.insert(symbols.end(), nu.symbols().begin(), nu.symbols().end());
    Node base(std::move(symbols), std::max<Node::Symbol>(eta.branching().value_or(k), k));
    for (auto& n : gen_O(base, count)) out.push_back(n);
  }
  return NodeSet(std::move(out));
}

}  // namespace treelab

#endif  // TREELAB_ANTICHAIN_HPP_
