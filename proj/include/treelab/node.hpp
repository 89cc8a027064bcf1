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

#ifndef TREELAB_NODE_HPP_
#define TREELAB_NODE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treelab/errors.hpp"

namespace treelab {

/// A node of a finitely branching tree, stored as the finite string of
/// symbols leading to it from the root. The empty string is the root.
///
/// The optional branching bound is metadata: two nodes with equal symbol
/// strings compare equal regardless of it, but binary operations refuse to
/// mix nodes whose bounds are both present and differ.
///
/// The built-in ordering is the lexicographic tree order: a proper prefix
/// sorts before its extensions, otherwise the first differing symbol
/// decides. This is a strict total order on distinct nodes.
class Node {
 public:
  using Symbol = std::uint32_t;

  Node() = default;

  Node(std::initializer_list<Symbol> symbols, std::optional<Symbol> branching = std::nullopt)
      : symbols_(symbols), branching_(branching) {
    validate();
  }

  explicit Node(std::vector<Symbol> symbols, std::optional<Symbol> branching = std::nullopt)
      : symbols_(std::move(symbols)), branching_(branching) {
    validate();
  }

  static Node root(std::optional<Symbol> branching = std::nullopt) { return Node({}, branching); }

  static Node repeat(Symbol symbol, std::size_t count, std::optional<Symbol> branching = std::nullopt) {
    return Node(std::vector<Symbol>(count, symbol), branching);
  }

  static Node zeros(std::size_t count, std::optional<Symbol> branching = std::nullopt) {
    return repeat(0, count, branching);
  }

  static Node ones(std::size_t count, std::optional<Symbol> branching = std::nullopt) {
    return repeat(1, count, branching);
  }

  /// Parses a compact bitstring such as "0110"; "e" (or "") is the root.
  static Node from_bits(std::string_view bits) {
    std::vector<Symbol> out;
    if (bits == "e") return Node({}, 2);
    out.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') throw InputError("not a bitstring node: '" + std::string(bits) + "'");
      out.push_back(static_cast<Symbol>(c - '0'));
    }
    return Node(std::move(out), 2);
  }

  std::size_t length() const { return symbols_.size(); }
  bool is_root() const { return symbols_.empty(); }
  std::span<const Symbol> symbols() const { return symbols_; }
  const std::vector<Symbol>& symbol_vector() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_.at(i); }
  std::optional<Symbol> branching() const { return branching_; }

  Node with_branching(std::optional<Symbol> branching) const { return Node(symbols_, branching); }

  /// Last symbol, or nothing for the root.
  std::optional<Symbol> last() const {
    if (symbols_.empty()) return std::nullopt;
    return symbols_.back();
  }

  /// The node with its last symbol dropped. The root has no parent.
  Node parent() const {
    if (symbols_.empty()) throw InputError("the root has no parent");
    Node out = *this;
    out.symbols_.pop_back();
    return out;
  }

  Node child(Symbol d) const {
    Node out = *this;
    out.symbols_.push_back(d);
    out.validate();
    return out;
  }

  Node concat(const Node& tail) const {
    Node out = *this;
    out.branching_ = merged_branching(branching_, tail.branching_);
    out.symbols_.insert(out.symbols_.end(), tail.symbols_.begin(), tail.symbols_.end());
    out.validate();
    return out;
  }

  Node concat(std::initializer_list<Symbol> tail) const { return concat(Node(tail, branching_)); }

  /// Restriction to the first `len` symbols.
  Node prefix(std::size_t len) const {
    if (len > symbols_.size()) throw InputError("prefix length exceeds node length");
    return Node(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(len)),
                branching_);
  }

  /// Non-strict initial-segment order.
  bool is_prefix_of(const Node& other) const {
    return symbols_.size() <= other.symbols_.size() &&
           std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
  }

  bool is_proper_prefix_of(const Node& other) const {
    return symbols_.size() < other.symbols_.size() && is_prefix_of(other);
  }

  bool ends_with(Symbol d) const { return !symbols_.empty() && symbols_.back() == d; }

  bool is_binary() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s < 2; });
  }

  friend bool operator==(const Node& a, const Node& b) { return a.symbols_ == b.symbols_; }
  friend std::strong_ordering operator<=>(const Node& a, const Node& b) {
    return a.symbols_ <=> b.symbols_;
  }

  static std::optional<Symbol> merged_branching(std::optional<Symbol> a, std::optional<Symbol> b) {
    if (a && b && *a != *b) {
      throw InputError("mismatched branching bounds " + std::to_string(*a) + " and " + std::to_string(*b));
    }
    return a ? a : b;
  }

 private:
  void validate() const {
    if (!branching_) return;
    if (*branching_ == 0) throw InputError("branching bound must be positive");
    for (Symbol s : symbols_) {
      if (s >= *branching_) {
        throw InputError("symbol " + std::to_string(s) + " out of branching bound " +
                         std::to_string(*branching_));
      }
    }
  }

  std::vector<Symbol> symbols_;
  std::optional<Symbol> branching_;
};

/// Compact textual form: a bitstring for binary nodes ("e" for the root),
/// a bracketed comma list otherwise.
inline std::string to_string(const Node& node) {
  const bool bits = node.branching() ? *node.branching() <= 2 : node.is_binary();
  if (bits) {
    if (node.is_root()) return "e";
    std::string out;
    out.reserve(node.length());
    for (auto s : node.symbols()) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  std::string out = "[";
  for (std::size_t i = 0; i < node.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(node[i]);
  }
  return out + "]";
}

/// Accepts "e", a bitstring, or a bracketed list "[2,0,1]".
inline Node parse_node(std::string_view text, std::optional<Node::Symbol> branching = std::nullopt) {
  if (text.empty()) throw InputError("empty node text; use 'e' for the root");
  if (text.front() == '[') {
    if (text.back() != ']') throw InputError("unterminated bracketed node: '" + std::string(text) + "'");
    std::vector<Node::Symbol> symbols;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto piece = body.substr(0, comma);
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InputError("bad symbol in node '" + std::string(text) + "'");
      }
      symbols.push_back(static_cast<Node::Symbol>(std::stoul(std::string(piece))));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return Node(std::move(symbols), branching);
  }
  Node bits = Node::from_bits(text);
  return bits.with_branching(branching ? branching : std::optional<Node::Symbol>(2));
}

inline std::ostream& operator<<(std::ostream& os, const Node& node) { return os << to_string(node); }

enum class Relation { Equal, Prefix, Extension, Incomparable };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "EQ";
    case Relation::Prefix: return "PREFIX";
    case Relation::Extension: return "EXTENSION";
    case Relation::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

/// Prefix is reported when `a` is a proper initial segment of `b`.
inline Relation relate(const Node& a, const Node& b) {
  Node::merged_branching(a.branching(), b.branching());
  if (a == b) return Relation::Equal;
  if (a.is_prefix_of(b)) return Relation::Prefix;
  if (b.is_prefix_of(a)) return Relation::Extension;
  return Relation::Incomparable;
}

inline bool comparable(const Node& a, const Node& b) { return a.is_prefix_of(b) || b.is_prefix_of(a); }
inline bool incomparable(const Node& a, const Node& b) { return !comparable(a, b); }

/// Longest common initial segment.
inline Node meet(const Node& a, const Node& b) {
  auto branching = Node::merged_branching(a.branching(), b.branching());
  auto sa = a.symbols();
  auto sb = b.symbols();
  auto [ia, ib] = std::mismatch(sa.begin(), sa.end(), sb.begin(), sb.end());
  return Node(std::vector<Node::Symbol>(sa.begin(), ia), branching);
}

inline bool lex_less(const Node& a, const Node& b) {
  Node::merged_branching(a.branching(), b.branching());
  return a < b;
}

/// Deduplicated set of pairwise meets, ascending in lexicographic order.
inline std::vector<Node> meet_closure(std::span<const Node> tuple) {
  if (tuple.empty()) throw InputError("meet closure of an empty tuple");
  std::vector<Node> out;
  out.reserve(tuple.size() * (tuple.size() + 1) / 2);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i; j < tuple.size(); ++j) out.push_back(meet(tuple[i], tuple[j]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Positional closure: <t0^t0, ..., t0^tn, t1^t0, ..., tn^tn>, repetitions
/// kept, so that closures of two equal-arity tuples line up index by index.
inline std::vector<Node> closure_tuple(std::span<const Node> tuple) {
  std::vector<Node> out;
  out.reserve(tuple.size() * tuple.size());
  for (const auto& a : tuple) {
    for (const auto& b : tuple) out.push_back(meet(a, b));
  }
  return out;
}

inline bool is_meet_closed(std::span<const Node> tuple) {
  for (const auto& a : tuple) {
    for (const auto& b : tuple) {
      if (std::find(tuple.begin(), tuple.end(), meet(a, b)) == tuple.end()) return false;
    }
  }
  return true;
}

/// A finite set of nodes kept in canonical (lexicographic) order.
class NodeSet {
 public:
  using const_iterator = std::vector<Node>::const_iterator;

  NodeSet() = default;
  NodeSet(std::initializer_list<Node> nodes) : nodes_(nodes) { normalize(); }
  explicit NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) { normalize(); }

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const_iterator begin() const { return nodes_.begin(); }
  const_iterator end() const { return nodes_.end(); }
  const Node& operator[](std::size_t i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::span<const Node> span() const { return nodes_; }

  bool contains(const Node& n) const { return std::binary_search(nodes_.begin(), nodes_.end(), n); }

  void insert(Node n) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
    if (it == nodes_.end() || *it != n) nodes_.insert(it, std::move(n));
  }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& n : nodes_) m = std::max(m, n.length());
    return m;
  }

  friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.nodes_ == b.nodes_; }
  friend std::strong_ordering operator<=>(const NodeSet& a, const NodeSet& b) {
    return a.nodes_ <=> b.nodes_;
  }

 private:
  void normalize() {
    std::optional<Node::Symbol> b;
    for (const auto& n : nodes_) b = Node::merged_branching(b, n.branching());
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  }

  std::vector<Node> nodes_;
};

inline std::string to_string(const NodeSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += to_string(set[i]);
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const NodeSet& set) { return os << to_string(set); }

/// Number of nodes of length < depth in a tree of the given branching.
inline std::size_t tree_size(unsigned depth, unsigned branching) {
  std::size_t total = 0, level = 1;
  for (unsigned d = 0; d < depth; ++d) {
    total += level;
    level *= branching;
  }
  return total;
}

/// All nodes of length < depth, in lexicographic (preorder) order.
inline std::vector<Node> tree_nodes(unsigned depth, unsigned branching = 2) {
  std::vector<Node> out;
  out.reserve(tree_size(depth, branching));
  std::vector<Node::Symbol> path;
  std::function<void()> walk = [&] {
    out.emplace_back(path, branching);
    if (path.size() + 1 >= depth) return;
    for (Node::Symbol s = 0; s < branching; ++s) {
      path.push_back(s);
      walk();
      path.pop_back();
    }
  };
  if (depth > 0) walk();
  return out;
}

/// All nodes of exactly the given length.
inline std::vector<Node> tree_level(unsigned length, unsigned branching = 2) {
  std::vector<Node> out;
  for (auto& n : tree_nodes(length + 1, branching)) {
    if (n.length() == length) out.push_back(std::move(n));
  }
  return out;
}

/// Dense indexing of the nodes of a finite tree, in lexicographic order,
/// so that subsets fit in bit masks when the tree has at most 64 nodes.
class TreeIndex {
 public:
  TreeIndex(unsigned depth, unsigned branching) : depth_(depth), branching_(branching) {
    nodes_ = tree_nodes(depth, branching);
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
  }

  unsigned depth() const { return depth_; }
  unsigned branching() const { return branching_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const { return nodes_; }

  bool contains(const Node& n) const { return index_.count(n) != 0; }

  std::size_t index_of(const Node& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) {
      throw InputError("node " + to_string(n) + " outside tree of depth " + std::to_string(depth_) +
                       " and branching " + std::to_string(branching_));
    }
    return it->second;
  }

  std::uint64_t mask_of(std::span<const Node> nodes) const {
    require_mask_capacity();
    std::uint64_t m = 0;
    for (const auto& n : nodes) m |= std::uint64_t{1} << index_of(n);
    return m;
  }

  std::vector<Node> nodes_of(std::uint64_t mask) const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < nodes_.size() && i < 64; ++i) {
      if (mask >> i & 1U) out.push_back(nodes_[i]);
    }
    return out;
  }

  void require_mask_capacity() const {
    if (nodes_.size() > 64) throw ResourceError("tree has more than 64 nodes; mask indexing unavailable");
  }

 private:
  unsigned depth_;
  unsigned branching_;
  std::vector<Node> nodes_;
  std::map<Node, std::size_t> index_;
};

}  // namespace treelab

template <>
struct std::hash<treelab::Node> {
  std::size_t operator()(const treelab::Node& n) const noexcept {
    std::size_t h = n.length();
    for (auto s : n.symbols()) h = h * 1000003U ^ (s + 0x9e3779b9U);
    return h;
  }
};

#endif  // TREELAB_NODE_HPP_
