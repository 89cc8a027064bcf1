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

#ifndef TREELAB_MODELC_HPP_
#define TREELAB_MODELC_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "treelab/antichain.hpp"
#include "treelab/errors.hpp"
#include "treelab/node.hpp"
#include "treelab/oracle.hpp"
#include "treelab/report.hpp"
#include "treelab/witness.hpp"

namespace treelab {

/// An element of the two-sorted universe: a solver a_l or a parameter b_eta.
struct ElementRef {
  bool solver = false;
  std::size_t index = 0;  // solver number, or parameter position in lexicographic order

  static ElementRef a(std::size_t l) { return {true, l}; }
  static ElementRef b(std::size_t param) { return {false, param}; }
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

inline constexpr unsigned kMaxStructureDepth = 5;

/// Bipartite incidence structure: solvers on one side, the nodes of the
/// binary tree of length < depth on the other, R(a_l, b_eta) iff eta lies
/// in the l-th solver's node set. R never has a parameter as first
/// argument.
class IncidenceStructure {
 public:
  /// Solvers are the maximal antichains, in catalog order.
  static IncidenceStructure from_catalog(const AntichainCatalog& catalog) {
    return IncidenceStructure(catalog.depth(), catalog.masks());
  }

  /// Arbitrary incidence, one parameter mask per solver. Used for test
  /// doubles and for structures loaded from files.
  static IncidenceStructure from_incidence(unsigned depth, std::vector<std::uint64_t> solver_masks) {
    return IncidenceStructure(depth, std::move(solver_masks));
  }

  /// Solvers given as node sets; each must be a maximal antichain.
  static IncidenceStructure from_antichains(unsigned depth, const std::vector<NodeSet>& antichains) {
    if (depth < 1 || depth > kMaxCatalogDepth) throw InputError("structure depth out of range");
    TreeIndex index(depth, 2);
    std::vector<std::uint64_t> masks;
    std::set<std::uint64_t> seen;
    for (const auto& x : antichains) {
      if (!is_maximal_antichain(x, depth)) throw InputError("solver set " + to_string(x) + " is not a maximal antichain");
      auto m = index.mask_of(x.span());
      if (!seen.insert(m).second) throw InputError("duplicate solver set " + to_string(x));
      masks.push_back(m);
    }
    return IncidenceStructure(depth, std::move(masks));
  }

  unsigned depth() const { return depth_; }
  std::size_t solver_count() const { return solver_masks_.size(); }
  std::size_t param_count() const { return index_->size(); }
  std::size_t universe_size() const { return solver_count() + param_count(); }
  const TreeIndex& index() const { return *index_; }
  const Node& param(std::size_t i) const { return index_->node(i); }
  std::size_t param_index(const Node& n) const { return index_->index_of(n); }
  std::uint64_t solver_mask(std::size_t l) const { return solver_masks_.at(l); }
  const std::vector<std::uint64_t>& solver_masks() const { return solver_masks_; }
  const SolverSet& solvers_of(std::size_t param) const { return param_solvers_.at(param); }

  NodeSet solver_nodes(std::size_t l) const { return NodeSet(index_->nodes_of(solver_masks_.at(l))); }

  bool R(std::size_t l, std::size_t param) const { return solver_masks_.at(l) >> param & 1U; }

  bool R(const ElementRef& w, const ElementRef& v) const { return w.solver && !v.solver && R(w.index, v.index); }

  /// Exists w with R(w,u) and R(w,v).
  bool common_neighbour(const ElementRef& u, const ElementRef& v) const {
    if (u.solver || v.solver) return false;
    return param_solvers_[u.index].intersects(param_solvers_[v.index]);
  }

  ElementRef element(std::size_t universe_position) const {
    if (universe_position < solver_count()) return ElementRef::a(universe_position);
    return ElementRef::b(universe_position - solver_count());
  }

  std::string element_name(const ElementRef& e) const {
    return e.solver ? "a:" + std::to_string(e.index) : "b:" + to_string(param(e.index));
  }

 private:
  IncidenceStructure(unsigned depth, std::vector<std::uint64_t> masks)
      : depth_(depth), index_(std::make_shared<TreeIndex>(depth, 2)), solver_masks_(std::move(masks)) {
    if (depth < 1 || depth > kMaxCatalogDepth) throw InputError("structure depth out of range");
    const std::uint64_t valid = index_->size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << index_->size()) - 1;
    for (auto m : solver_masks_) {
      if (m & ~valid) throw InputError("solver incidence mentions a node outside the tree");
    }
    param_solvers_.assign(index_->size(), SolverSet(solver_masks_.size()));
    for (std::size_t l = 0; l < solver_masks_.size(); ++l) {
      for (std::uint64_t m = solver_masks_[l]; m; m &= m - 1) param_solvers_[std::countr_zero(m)].set(l);
    }
  }

  unsigned depth_;
  std::shared_ptr<const TreeIndex> index_;
  std::vector<std::uint64_t> solver_masks_;
  std::vector<SolverSet> param_solvers_;
};

inline IncidenceStructure build_structure(unsigned n, unsigned bound = kMaxStructureDepth) {
  if (n < 1) throw InputError("structure depth must be at least 1");
  if (n > bound) throw ResourceError("structure depth " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  return IncidenceStructure::from_catalog(enumerate_maximal_antichains(n, std::max(bound, n)));
}

/// Identity on solver numbers and nodes embeds each smaller structure in
/// each larger one: edges are preserved and reflected.
inline CheckReport verify_embedding_chain(std::span<const IncidenceStructure> chain) {
  std::uint64_t examined = 0;
  for (std::size_t s = 0; s < chain.size(); ++s) {
    for (std::size_t t = s + 1; t < chain.size(); ++t) {
      const auto& small = chain[s];
      const auto& big = chain[t];
      if (small.solver_count() > big.solver_count() || small.depth() > big.depth()) {
        return CheckReport::fail("size", {}, "structure " + std::to_string(s) + " does not fit in " + std::to_string(t),
                                 examined);
      }
      for (std::size_t l = 0; l < small.solver_count(); ++l) {
        for (std::size_t p = 0; p < small.param_count(); ++p) {
          ++examined;
          const Node& eta = small.param(p);
          if (small.R(l, p) != big.R(l, big.param_index(eta))) {
            return CheckReport::fail("edge", {eta},
                                     "R(a_" + std::to_string(l) + ", b_" + to_string(eta) + ") differs between depths " +
                                         std::to_string(small.depth()) + " and " + std::to_string(big.depth()),
                                     examined);
          }
        }
      }
    }
  }
  return CheckReport::ok(examined);
}

inline CheckReport verify_embedding_chain(unsigned n_max, unsigned bound = kMaxStructureDepth) {
  std::vector<IncidenceStructure> chain;
  for (unsigned n = 1; n <= n_max; ++n) chain.push_back(build_structure(n, bound));
  return verify_embedding_chain(chain);
}

inline ConsistencyOracle solution_oracle(const IncidenceStructure& s) {
  std::map<Node, std::vector<std::uint32_t>> solutions;
  for (std::size_t p = 0; p < s.param_count(); ++p) {
    std::vector<std::uint32_t> ids;
    for (std::size_t l = 0; l < s.solver_count(); ++l) {
      if (s.R(l, p)) ids.push_back(static_cast<std::uint32_t>(l));
    }
    solutions.emplace(s.param(p), std::move(ids));
  }
  return ConsistencyOracle::solution_set(s.depth(), 2, solutions);
}

/// Consistent iff antichain, over every subset (FULL) or via maximal
/// antichains and comparable pairs (REDUCED).
inline CheckReport verify_antichain_tree(const IncidenceStructure& s, CheckMode mode) {
  return check_property(solution_oracle(s), Property{PropertyKind::ATP}, s.depth(), mode);
}

/// No c0 != c1, c2 != c3 in B with {c0,c1} and {c2,c3} sharing solvers
/// while no cross pair does. Solvers never have a common neighbour with
/// anything, so they cannot occupy any position of the pattern.
inline CheckReport verify_no_crossing_pairs(const IncidenceStructure& s) {
  const std::size_t n = s.param_count();
  std::vector<std::vector<bool>> cn(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cn[i][j] = s.common_neighbour(ElementRef::b(i), ElementRef::b(j));
  }
  std::uint64_t examined = 0;
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    for (std::size_t c1 = 0; c1 < n; ++c1) {
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        for (std::size_t c3 = 0; c3 < n; ++c3) {
          ++examined;
          if (c0 != c1 && c2 != c3 && cn[c0][c1] && cn[c2][c3] && !cn[c0][c2] && !cn[c0][c3] && !cn[c1][c2] &&
              !cn[c1][c3]) {
            return CheckReport::fail("crossing-pairs", {s.param(c0), s.param(c1), s.param(c2), s.param(c3)},
                                     "forbidden four-element pattern", examined);
          }
        }
      }
    }
  }
  return CheckReport::ok(examined);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

/// Every parameter set of size <= max_size that is pairwise consistent is
/// jointly consistent.
inline CheckReport verify_pairwise_implies_joint(const IncidenceStructure& s, unsigned max_size,
                                                 std::uint64_t budget = kDefaultSubsetBudget) {
  const std::size_t n = s.param_count();
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= max_size && k <= n; ++k) total += binomial(n, k);
  if (total > budget) {
    throw ResourceError(std::to_string(total) + " subsets exceed budget " + std::to_string(budget));
  }
  std::uint64_t examined = 0;
  std::optional<CheckReport> failure;
  for (unsigned k = 1; k <= max_size && k <= n && !failure; ++k) {
    detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
      ++examined;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          if (!s.common_neighbour(ElementRef::b(idx[a]), ElementRef::b(idx[b]))) return true;
        }
      }
      SolverSet acc(s.solver_count(), true);
      for (auto p : idx) acc &= s.solvers_of(p);
      if (!acc.any()) {
        std::vector<Node> nodes;
        for (auto p : idx) nodes.push_back(s.param(p));
        failure = CheckReport::fail("pairwise-joint", nodes, "pairwise consistent but jointly inconsistent", examined);
        return false;
      }
      return true;
    });
  }
  if (failure) return *failure;
  return CheckReport::ok(examined);
}

/// How the inner witness z of phi may be chosen. LITERAL lets z range over
/// the whole universe, including z = x; then z = x witnesses the last
/// conjunct for every parameter x, and phi(b_nu, b_eta) reduces to "nu and
/// eta are distinct and comparable". DISTINCT_WITNESS requires z != x,
/// under which phi(b_nu, b_eta) holds iff eta is a proper prefix of nu.
enum class PhiReading { LITERAL, DISTINCT_WITNESS };

inline const char* to_string(PhiReading r) {
  return r == PhiReading::LITERAL ? "literal" : "distinct-witness";
}

/// x != y, x and y share no solver, and some z shares a solver with x but
/// not with y. Quantifiers range over the whole universe; a witness w for
/// R(w, .) can only be a solver, so each inner existential is a solver-set
/// intersection.
inline bool eval_phi_pred(const IncidenceStructure& s, const ElementRef& x, const ElementRef& y,
                          PhiReading reading = PhiReading::LITERAL) {
  if (x == y) return false;
  if (s.common_neighbour(x, y)) return false;
  for (std::size_t u = 0; u < s.universe_size(); ++u) {
    const ElementRef z = s.element(u);
    if (reading == PhiReading::DISTINCT_WITNESS && z == x) continue;
    if (s.common_neighbour(x, z) && !s.common_neighbour(y, z)) return true;
  }
  return false;
}

/// Checks the intended semantics: phi(b_nu, b_eta) iff eta is a proper
/// prefix of nu. A solver in the first place never satisfies phi, since
/// it has no common neighbour with anything. A solver y in the second
/// place leaves only the z-conjunct, which holds for b_nu iff some z
/// allowed by the reading shares a solver with b_nu: always under LITERAL,
/// and iff nu is not the root under DISTINCT_WITNESS.
inline CheckReport verify_phi_semantics(const IncidenceStructure& s, PhiReading reading = PhiReading::LITERAL) {
  std::uint64_t examined = 0;
  for (std::size_t v = 0; v < s.param_count(); ++v) {
    for (std::size_t e = 0; e < s.param_count(); ++e) {
      ++examined;
      const bool got = eval_phi_pred(s, ElementRef::b(v), ElementRef::b(e), reading);
      const bool want = s.param(e).is_proper_prefix_of(s.param(v));
      if (got != want) {
        return CheckReport::fail("parameter-pair", {s.param(v), s.param(e)},
                                 std::string("phi evaluates to ") + (got ? "true" : "false"), examined);
      }
    }
  }
  for (std::size_t l = 0; l < s.solver_count(); ++l) {
    for (std::size_t u = 0; u < s.universe_size(); ++u) {
      ++examined;
      const ElementRef other = s.element(u);
      if (eval_phi_pred(s, ElementRef::a(l), other, reading)) {
        return CheckReport::fail("solver-first", {}, "phi(" + s.element_name(ElementRef::a(l)) + ", " +
                                                         s.element_name(other) + ") holds",
                                 examined);
      }
      if (other.solver) continue;
      const bool want = reading == PhiReading::LITERAL || !s.param(other.index).is_root();
      if (eval_phi_pred(s, other, ElementRef::a(l), reading) != want) {
        return CheckReport::fail("solver-second", {s.param(other.index)},
                                 "phi(" + s.element_name(other) + ", " + s.element_name(ElementRef::a(l)) + ") is " +
                                     (want ? "false" : "true"),
                                 examined);
      }
    }
  }
  return CheckReport::ok(examined);
}

/// With solution sets {u : phi(u, b_eta)}: every leaf chain of the binary
/// tree of depth d has a common solution, every incomparable pair none.
inline CheckReport verify_phi_sop2(const IncidenceStructure& s, unsigned d,
                                   PhiReading reading = PhiReading::LITERAL) {
  if (d < 1 || d + 1 > s.depth()) {
    throw InputError("phi pattern depth " + std::to_string(d) + " needs structure depth at least " +
                     std::to_string(d + 1) + ", have " + std::to_string(s.depth()));
  }
  const auto nodes = tree_nodes(d, 2);
  std::map<Node, SolverSet> sol;
  for (const auto& eta : nodes) {
    SolverSet set(s.universe_size());
    const ElementRef y = ElementRef::b(s.param_index(eta));
    for (std::size_t u = 0; u < s.universe_size(); ++u) {
      if (eval_phi_pred(s, s.element(u), y, reading)) set.set(u);
    }
    sol.emplace(eta, std::move(set));
  }
  std::uint64_t examined = 0;
  for (const auto& leaf : tree_level(d - 1, 2)) {
    ++examined;
    SolverSet acc(s.universe_size(), true);
    std::vector<Node> chain;
    for (std::size_t a = 0; a <= leaf.length(); ++a) {
      chain.push_back(leaf.prefix(a));
      acc &= sol.at(chain.back());
    }
    if (!acc.any()) return CheckReport::fail("chain", chain, "no common solution", examined);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!incomparable(nodes[i], nodes[j])) continue;
      ++examined;
      if (sol.at(nodes[i]).intersects(sol.at(nodes[j]))) {
        return CheckReport::fail("incomparable-pair", {nodes[i], nodes[j]}, "common solution", examined);
      }
    }
  }
  return CheckReport::ok(examined);
}

enum class SearchOutcome { FOUND, NONE, BUDGET_EXHAUSTED };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::FOUND: return "FOUND";
    case SearchOutcome::NONE: return "NONE";
    case SearchOutcome::BUDGET_EXHAUSTED: return "BUDGET_EXHAUSTED";
  }
  return "?";
}

struct ConjunctionSearchResult {
  SearchOutcome outcome = SearchOutcome::NONE;
  /// Seven parameter tuples, for positions e, 0, 00, 01, 1, 10, 11.
  std::vector<std::vector<Node>> witness;
  std::uint64_t assignments = 0;
  std::size_t tuple_count = 0;
  std::string strategy;
};

inline constexpr std::uint64_t kDefaultConjunctionBudget = 100'000'000;

/// Search for a height-2 binary pattern for the conjunction of n_conj
/// copies of R(x, y_i): leaf chains jointly consistent, incomparable
/// positions inconsistent. Parameter tuples are multisets of size n_conj.
/// One unit of budget is one candidate tuple placed at one position.
inline ConjunctionSearchResult search_conjunction_sop2(const IncidenceStructure& s, unsigned n_conj,
                                                       std::uint64_t budget = kDefaultConjunctionBudget) {
  if (n_conj < 1) throw InputError("n_conj must be at least 1");
  const std::size_t params = s.param_count();
  std::vector<std::vector<std::size_t>> tuples;
  {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> gen = [&](std::size_t from) {
      if (cur.size() == n_conj) {
        tuples.push_back(cur);
        return;
      }
      for (std::size_t p = from; p < params; ++p) {
        cur.push_back(p);
        gen(p);
        cur.pop_back();
      }
    };
    gen(0);
  }
  const std::size_t t = tuples.size();
  std::vector<SolverSet> sol;
  sol.reserve(t);
  for (const auto& tup : tuples) {
    SolverSet acc(s.solver_count(), true);
    for (auto p : tup) acc &= s.solvers_of(p);
    sol.push_back(std::move(acc));
  }
  // Pair table over tuples; a tuple without solvers can never sit on a chain.
  std::vector<std::vector<bool>> pair(t, std::vector<bool>(t));
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a; b < t; ++b) pair[a][b] = pair[b][a] = sol[a].intersects(sol[b]);
  }

  const auto positions = pattern_positions();
  const std::size_t npos = positions.size();
  std::vector<std::vector<std::size_t>> incomparable_before(npos);
  std::vector<std::vector<std::size_t>> chain_of(npos);
  for (std::size_t q = 0; q < npos; ++q) {
    for (std::size_t r = 0; r < q; ++r) {
      if (incomparable(positions[r], positions[q])) incomparable_before[q].push_back(r);
      if (positions[r].is_prefix_of(positions[q])) chain_of[q].push_back(r);
    }
  }

  ConjunctionSearchResult result;
  result.tuple_count = t;
  result.strategy = "lexicographic backtracking over " + std::to_string(t) +
                    " tuples per position; pair table for incomparable positions; chain intersection at leaves";
  std::vector<std::size_t> assigned(npos);
  bool exhausted = false;
  std::function<bool(std::size_t)> search = [&](std::size_t q) {
    if (q == npos) return true;
    for (std::size_t c = 0; c < t; ++c) {
      if (result.assignments >= budget) {
        exhausted = true;
        return false;
      }
      ++result.assignments;
      if (!pair[c][c]) continue;
      bool ok = true;
      for (auto r : incomparable_before[q]) {
        if (pair[assigned[r]][c]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // Every assigned ancestor shares a solver with c: necessary for the chain.
      for (auto r : chain_of[q]) {
        if (!pair[assigned[r]][c]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (positions[q].length() == 2) {
        SolverSet acc = sol[c];
        for (auto r : chain_of[q]) acc &= sol[assigned[r]];
        if (!acc.any()) continue;
      }
      assigned[q] = c;
      if (search(q + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  };
  if (search(0)) {
    result.outcome = SearchOutcome::FOUND;
    for (auto a : assigned) {
      std::vector<Node> tup;
      for (auto p : tuples[a]) tup.push_back(s.param(p));
      result.witness.push_back(std::move(tup));
    }
  } else {
    result.outcome = exhausted ? SearchOutcome::BUDGET_EXHAUSTED : SearchOutcome::NONE;
  }
  return result;
}

}  // namespace treelab

#endif  // TREELAB_MODELC_HPP_
