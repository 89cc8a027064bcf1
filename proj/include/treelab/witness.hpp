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

#ifndef TREELAB_WITNESS_HPP_
#define TREELAB_WITNESS_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "treelab/antichain.hpp"
#include "treelab/errors.hpp"
#include "treelab/node.hpp"
#include "treelab/oracle.hpp"
#include "treelab/report.hpp"
#include "treelab/similarity.hpp"

namespace treelab {

enum class PropertyKind { SOP2, SOP1, SSOP1, ATP, TP1, K_TP1, WEAK_K_TP1, ASTR_SOP2, ASTR_TP1 };

inline constexpr std::array<std::pair<PropertyKind, std::string_view>, 9> kPropertyNames{{
    {PropertyKind::SOP2, "sop2"},
    {PropertyKind::SOP1, "sop1"},
    {PropertyKind::SSOP1, "ssop1"},
    {PropertyKind::ATP, "atp"},
    {PropertyKind::TP1, "tp1"},
    {PropertyKind::K_TP1, "k-tp1"},
    {PropertyKind::WEAK_K_TP1, "weak-k-tp1"},
    {PropertyKind::ASTR_SOP2, "astr-sop2"},
    {PropertyKind::ASTR_TP1, "astr-tp1"},
}};

inline std::string to_string(PropertyKind k) {
  for (const auto& [p, s] : kPropertyNames) {
    if (p == k) return std::string(s);
  }
  return "?";
}

inline PropertyKind parse_property(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  std::replace(lower.begin(), lower.end(), '_', '-');
  for (const auto& [p, s] : kPropertyNames) {
    if (s == lower) return p;
  }
  throw InputError("unknown property '" + std::string(text) + "'");
}

/// `k` is the arity for the k-ary TP1 variants; `tuples` is the pattern
/// family for the strong-similarity variants.
struct Property {
  Property() = default;
  Property(PropertyKind kind_, unsigned k_ = 2, std::vector<std::vector<Node>> tuples_ = {})
      : kind(kind_), k(k_), tuples(std::move(tuples_)) {}

  PropertyKind kind = PropertyKind::SOP2;
  unsigned k = 2;
  std::vector<std::vector<Node>> tuples;
};

enum class CheckMode { FULL, REDUCED };

inline constexpr std::uint64_t kFullSubsetBound = std::uint64_t{1} << 15;
inline constexpr std::size_t kMaxPatternArity = 4;

namespace detail {

inline std::string names(std::span<const Node> x) {
  std::string out;
  for (const auto& n : x) out += (out.empty() ? "" : ",") + to_string(n);
  return "{" + out + "}";
}

/// Leaf chains {leaf restricted to a : a <= len} for every leaf of the tree.
inline CheckReport check_chains(const ConsistencyOracle& o, unsigned depth, unsigned branching, CheckMode mode,
                                std::uint64_t& examined) {
  for (const auto& leaf : tree_level(depth - 1, branching)) {
    std::vector<Node> chain;
    for (std::size_t a = 0; a <= leaf.length(); ++a) chain.push_back(leaf.prefix(a));
    ++examined;
    if (!o.consistent(chain)) return CheckReport::fail("chain", chain, "leaf chain inconsistent", examined);
    if (mode == CheckMode::FULL) {
      const std::uint32_t n = static_cast<std::uint32_t>(chain.size());
      for (std::uint32_t m = 1; m < (1U << n); ++m) {
        std::vector<Node> sub;
        for (std::uint32_t b = 0; b < n; ++b) {
          if (m >> b & 1U) sub.push_back(chain[b]);
        }
        ++examined;
        if (!o.consistent(sub)) return CheckReport::fail("chain", sub, "sub-chain inconsistent", examined);
      }
    }
  }
  return CheckReport::ok();
}

/// Calls f on every k-subset (ascending positions) of `pool`; stops when f returns false.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls f on every ordered repetition-free k-tuple from `pool`.
inline void for_each_ordered_tuple(std::size_t n, std::size_t k,
                                   const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    if (idx.size() == k) {
      if (!f(idx)) stop = true;
      return;
    }
    for (std::size_t i = 0; i < n && !stop; ++i) {
      if (used[i]) continue;
      used[i] = true;
      idx.push_back(i);
      rec();
      idx.pop_back();
      used[i] = false;
    }
  };
  rec();
}

inline std::vector<Node> pick(const std::vector<Node>& pool, const std::vector<std::size_t>& idx) {
  std::vector<Node> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pool[i]);
  return out;
}

/// Profile key identifying a quantifier-free type in {prefix, meet, lex}.
using TypeKey = std::tuple<std::vector<std::vector<Relation>>, std::vector<std::vector<bool>>,
                           std::vector<std::vector<std::size_t>>>;

inline TypeKey type_key(std::span<const Node> t) {
  auto p = type_profile(t);
  return {std::move(p.relate_matrix), std::move(p.lex_matrix), std::move(p.meet_table)};
}

/// Maximal independent sets of a graph on at most 64 vertices.
inline void maximal_independent_sets(const std::vector<std::uint64_t>& adjacent,
                                     const std::function<bool(std::uint64_t)>& f) {
  // Bron-Kerbosch with pivoting on the complement graph.
  const std::size_t n = adjacent.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> non_adj(n);
  for (std::size_t v = 0; v < n; ++v) non_adj[v] = ~adjacent[v] & all & ~(std::uint64_t{1} << v);
  bool stop = false;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk = [&](std::uint64_t r, std::uint64_t p,
                                                                          std::uint64_t x) {
    if (stop) return;
    if (!p && !x) {
      if (!f(r)) stop = true;
      return;
    }
    const std::uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    std::uint64_t best = 0;
    for (std::uint64_t s = px; s; s &= s - 1) {
      int u = std::countr_zero(s);
      auto c = std::popcount(p & non_adj[u]);
      if (c >= std::popcount(best)) {
        best = p & non_adj[u];
        pivot = u;
      }
    }
    for (std::uint64_t cand = p & ~non_adj[pivot]; cand && !stop; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      const std::uint64_t bit = std::uint64_t{1} << v;
      bk(r | bit, p & non_adj[v], x & non_adj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  bk(0, all, 0);
}

}  // namespace detail

/// Finite truncation of a witness pattern over nodes of length < depth.
/// SOP1, SOP2, SSOP1 and ATP use the binary subtree; the TP1 family uses
/// the oracle's branching.
inline CheckReport check_property(const ConsistencyOracle& o, const Property& prop, unsigned depth,
                                  CheckMode mode = CheckMode::FULL) {
  using detail::names;
  if (depth < 1) throw InputError("depth must be at least 1");
  if (depth > o.depth()) {
    throw InputError("check depth " + std::to_string(depth) + " exceeds oracle depth " + std::to_string(o.depth()));
  }
  if (o.branching() < 2) throw InputError("oracle branching must be at least 2");
  std::uint64_t examined = 0;
  const auto binary = tree_nodes(depth, 2);
  const auto wide = tree_nodes(depth, o.branching());
  const bool tp_family = prop.kind == PropertyKind::TP1 || prop.kind == PropertyKind::K_TP1 ||
                         prop.kind == PropertyKind::WEAK_K_TP1 || prop.kind == PropertyKind::ASTR_TP1;
  const auto& pool = tp_family ? wide : binary;

  auto finish = [&](CheckReport r) {
    r.examined = examined;
    return r;
  };
  auto must_be_inconsistent = [&](const std::vector<Node>& x, const char* clause) -> std::optional<CheckReport> {
    ++examined;
    if (o.consistent(x)) return CheckReport::fail(clause, x, names(x) + " is consistent", examined);
    return std::nullopt;
  };

  switch (prop.kind) {
    case PropertyKind::ATP:
    case PropertyKind::SSOP1: {
      const bool atp = prop.kind == PropertyKind::ATP;
      auto predicted = [&](std::span<const Node> x) {
        return atp ? is_antichain(NodeSet(std::vector<Node>(x.begin(), x.end()))) : !has_bad_pair(x);
      };
      if (mode == CheckMode::FULL) {
        if (binary.size() >= 64 || (std::uint64_t{1} << binary.size()) > kFullSubsetBound) {
          throw ResourceError("full subset quantification over " + std::to_string(binary.size()) +
                              " nodes exceeds 2^15 subsets; use reduced mode");
        }
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << binary.size()); ++m) {
          std::vector<Node> x;
          for (std::size_t b = 0; b < binary.size(); ++b) {
            if (m >> b & 1U) x.push_back(binary[b]);
          }
          ++examined;
          const bool want = predicted(x);
          if (o.consistent(x) != want) {
            return finish(CheckReport::fail(atp ? "antichain-iff-consistent" : "free-iff-consistent", x,
                                            names(x) + (want ? " should be consistent" : " should be inconsistent")));
          }
        }
        return CheckReport::ok(examined, "full");
      }
      // Reduced: the maximal consistent-by-definition sets are consistent and
      // the minimal forbidden sets (pairs) are inconsistent.
      for (std::size_t i = 0; i < binary.size(); ++i) {
        for (std::size_t j = i + 1; j < binary.size(); ++j) {
          const bool forbidden = atp ? comparable(binary[i], binary[j]) : is_bad_pair(binary[i], binary[j]);
          if (forbidden) {
            if (auto r = must_be_inconsistent({binary[i], binary[j]}, atp ? "comparable-pair" : "bad-pair")) return *r;
          }
        }
      }
      if (atp) {
        const auto catalog = enumerate_maximal_antichains(depth);
        for (std::size_t l = 0; l < catalog.size(); ++l) {
          auto x = catalog.entry(l);
          ++examined;
          if (!o.consistent(x)) {
            return finish(CheckReport::fail("maximal-antichain", x.nodes(), "maximal antichain inconsistent"));
          }
        }
      } else {
        if (binary.size() > 64) throw ResourceError("reduced free-set enumeration limited to 64 nodes");
        std::vector<std::uint64_t> adjacent(binary.size(), 0);
        for (std::size_t i = 0; i < binary.size(); ++i) {
          for (std::size_t j = 0; j < binary.size(); ++j) {
            if (i != j && is_bad_pair(binary[i], binary[j])) adjacent[i] |= std::uint64_t{1} << j;
          }
        }
        std::optional<CheckReport> failure;
        detail::maximal_independent_sets(adjacent, [&](std::uint64_t m) {
          std::vector<Node> x;
          for (std::size_t b = 0; b < binary.size(); ++b) {
            if (m >> b & 1U) x.push_back(binary[b]);
          }
          ++examined;
          if (!o.consistent(x)) {
            failure = CheckReport::fail("maximal-free-set", x, "maximal bad-pair-free set inconsistent", examined);
            return false;
          }
          return true;
        });
        if (failure) return *failure;
      }
      return CheckReport::ok(examined, "reduced");
    }
    default:
      break;
  }

  // Remaining kinds: leaf chains consistent plus a family of forbidden sets.
  {
    auto chains = detail::check_chains(o, depth, tp_family ? o.branching() : 2, mode, examined);
    if (!chains) return finish(chains);
  }
  std::optional<CheckReport> failure;
  switch (prop.kind) {
    case PropertyKind::SOP2:
    case PropertyKind::TP1:
      for (std::size_t i = 0; i < pool.size() && !failure; ++i) {
        for (std::size_t j = i + 1; j < pool.size() && !failure; ++j) {
          if (incomparable(pool[i], pool[j])) failure = must_be_inconsistent({pool[i], pool[j]}, "incomparable-pair");
        }
      }
      break;
    case PropertyKind::SOP1:
      for (std::size_t i = 0; i < pool.size() && !failure; ++i) {
        for (std::size_t j = i + 1; j < pool.size() && !failure; ++j) {
          if (is_bad_pair(pool[i], pool[j])) failure = must_be_inconsistent({pool[i], pool[j]}, "bad-pair");
        }
      }
      break;
    case PropertyKind::K_TP1:
    case PropertyKind::WEAK_K_TP1: {
      if (prop.k < 2) throw InputError("k must be at least 2");
      const bool weak = prop.kind == PropertyKind::WEAK_K_TP1;
      detail::for_each_subset(pool.size(), prop.k, [&](const std::vector<std::size_t>& idx) {
        auto x = detail::pick(pool, idx);
        bool selected = true;
        if (weak) {
          // Common meet eta with pairwise distinct successors of eta below each member.
          const Node eta = meet(x[0], x[1]);
          std::set<Node::Symbol> next;
          for (const auto& v : x) {
            if (!eta.is_proper_prefix_of(v)) {
              selected = false;
              break;
            }
            next.insert(v[eta.length()]);
          }
          selected = selected && next.size() == x.size();
        } else {
          selected = is_antichain(NodeSet(x));
        }
        if (selected) failure = must_be_inconsistent(x, weak ? "weak-k-antichain" : "k-antichain");
        return !failure;
      });
      break;
    }
    case PropertyKind::ASTR_SOP2:
    case PropertyKind::ASTR_TP1: {
      if (prop.tuples.empty()) throw InputError("pattern family is empty");
      std::map<std::size_t, std::set<detail::TypeKey>> keys;
      for (const auto& t : prop.tuples) {
        if (t.empty()) throw InputError("pattern tuple is empty");
        if (t.size() > kMaxPatternArity) {
          throw ResourceError("pattern arity " + std::to_string(t.size()) + " exceeds cap " +
                              std::to_string(kMaxPatternArity));
        }
        keys[t.size()].insert(detail::type_key(t));
      }
      for (const auto& [arity, family] : keys) {
        if (failure) break;
        detail::for_each_ordered_tuple(pool.size(), arity, [&](const std::vector<std::size_t>& idx) {
          auto x = detail::pick(pool, idx);
          if (family.count(detail::type_key(x))) failure = must_be_inconsistent(x, "similar-tuple");
          return !failure;
        });
      }
      break;
    }
    default:
      break;
  }
  if (failure) return *failure;
  return CheckReport::ok(examined, mode == CheckMode::FULL ? "full" : "reduced");
}

inline constexpr unsigned kMaxGridSize = 5;

/// Rows pairwise inconsistent; every transversal {(i, f(i))} consistent.
inline CheckReport check_tp2(const GridOracle& grid, unsigned max_size = kMaxGridSize) {
  const unsigned m = grid.m;
  if (m == 0) throw InputError("grid size must be positive");
  if (m > max_size) throw ResourceError("grid size " + std::to_string(m) + " exceeds bound " + std::to_string(max_size));
  std::uint64_t examined = 0;
  auto cell_detail = [](std::span<const GridCell> cells) {
    std::string out;
    for (const auto& c : cells) out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    return out;
  };
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned a = 0; a < m; ++a) {
      for (unsigned b = a + 1; b < m; ++b) {
        std::array<GridCell, 2> pair{GridCell{i, a}, GridCell{i, b}};
        ++examined;
        if (grid.consistent(pair)) return CheckReport::fail("row", {}, "row cells " + cell_detail(pair) + " consistent", examined);
      }
    }
  }
  std::vector<GridCell> path(m);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) total *= m;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      path[i] = GridCell{i, static_cast<unsigned>(c % m)};
      c /= m;
    }
    ++examined;
    if (!grid.consistent(path)) {
      return CheckReport::fail("transversal", {}, "transversal " + cell_detail(path) + " inconsistent", examined);
    }
  }
  return CheckReport::ok(examined);
}

enum class SubsetClass { CHAIN, BAD_PAIR, NEITHER };

inline const char* to_string(SubsetClass c) {
  switch (c) {
    case SubsetClass::CHAIN: return "CHAIN";
    case SubsetClass::BAD_PAIR: return "BAD_PAIR";
    case SubsetClass::NEITHER: return "NEITHER";
  }
  return "?";
}

inline SubsetClass classify_subset(const NodeSet& x) {
  for (const auto& n : x) {
    if (!n.is_binary()) throw InputError("classification is defined on binary nodes; got " + to_string(n));
  }
  if (is_chain(x)) return SubsetClass::CHAIN;
  if (has_bad_pair(x.span())) return SubsetClass::BAD_PAIR;
  return SubsetClass::NEITHER;
}

enum class PatternShape { SOP2_SHAPE, ANTICHAIN_SHAPE };

inline constexpr std::size_t kMaxPatternNodes = 63;

/// Positions of the height-2 binary pattern, in lexicographic order.
inline std::vector<Node> pattern_positions() { return tree_nodes(3, 2); }

/// First assignment (lexicographic in the position order) of the seven
/// pattern positions to oracle nodes realising the shape.
inline std::optional<std::vector<Node>> find_pattern_depth2(const ConsistencyOracle& o, PatternShape shape,
                                                           std::size_t node_bound = kMaxPatternNodes) {
  if (o.depth() < 2) throw InputError("oracle depth must be at least 2");
  const std::size_t count = tree_size(o.depth(), o.branching());
  if (count > node_bound || count > 64) {
    throw ResourceError("oracle tree has " + std::to_string(count) + " nodes; bound is " + std::to_string(node_bound));
  }
  MaskedOracle cache(o);
  const auto positions = pattern_positions();
  const std::size_t p = positions.size();
  const std::size_t candidates = cache.index().size();
  std::vector<std::size_t> assigned(p);
  auto bit = [&](std::size_t pos) { return std::uint64_t{1} << assigned[pos]; };

  // Constraints that become decidable once position `q` is assigned.
  auto acceptable = [&](std::size_t q) {
    if (shape == PatternShape::SOP2_SHAPE) {
      for (std::size_t r = 0; r < q; ++r) {
        if (incomparable(positions[r], positions[q]) && cache.consistent(bit(r) | bit(q))) return false;
      }
      if (positions[q].length() == 2) {
        std::uint64_t chain = 0;
        for (std::size_t r = 0; r <= q; ++r) {
          if (positions[r].is_prefix_of(positions[q])) chain |= bit(r);
        }
        if (!cache.consistent(chain)) return false;
      }
      return true;
    }
    for (std::uint32_t sub = 0; sub < (1U << q); ++sub) {
      std::vector<Node> ys{positions[q]};
      std::uint64_t mask = bit(q);
      for (std::size_t r = 0; r < q; ++r) {
        if (sub >> r & 1U) {
          ys.push_back(positions[r]);
          mask |= bit(r);
        }
      }
      if (cache.consistent(mask) != is_antichain(NodeSet(ys))) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t q) {
    if (q == p) return true;
    for (std::size_t c = 0; c < candidates; ++c) {
      assigned[q] = c;
      if (acceptable(q) && search(q + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  std::vector<Node> out;
  for (auto a : assigned) out.push_back(cache.index().node(a));
  return out;
}

}  // namespace treelab

#endif  // TREELAB_WITNESS_HPP_
