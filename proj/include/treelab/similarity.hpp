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

#ifndef TREELAB_SIMILARITY_HPP_
#define TREELAB_SIMILARITY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treelab/errors.hpp"
#include "treelab/node.hpp"
#include "treelab/report.hpp"

namespace treelab {

enum class SimilarityLevel { STR, ALPHA, BETA, GAMMA };

inline const char* to_string(SimilarityLevel l) {
  switch (l) {
    case SimilarityLevel::STR: return "STR";
    case SimilarityLevel::ALPHA: return "ALPHA";
    case SimilarityLevel::BETA: return "BETA";
    case SimilarityLevel::GAMMA: return "GAMMA";
  }
  return "?";
}

/// Finite relational picture of a tuple in the language {prefix, meet, lex}.
/// `closure` is the positional closure (all n*n pairwise meets, repeats
/// kept), so closure[i*n+i] is the i-th generator. Every meet of two
/// closure entries is again an entry; `meet_table` records the least such
/// index, making the table a function of the type alone.
struct TypeProfile {
  std::size_t arity = 0;
  std::vector<Node> closure;
  std::vector<std::vector<Relation>> relate_matrix;
  std::vector<std::vector<bool>> lex_matrix;
  std::vector<std::vector<std::size_t>> meet_table;
  // succ01[d][i][j]: closure[i] ^ <d> is a prefix of closure[j].
  std::vector<std::vector<std::vector<bool>>> succ01;
  // immediate_succ[d][i][j]: closure[i] ^ <d> == closure[j].
  std::vector<std::vector<std::vector<bool>>> immediate_succ;
  std::vector<std::optional<Node::Symbol>> last_symbol;
};

inline std::size_t first_index_of(const std::vector<Node>& v, const Node& n) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == n) return k;
  }
  throw InputError("meet closure is not closed under meet");
}

inline TypeProfile type_profile(std::span<const Node> tuple) {
  TypeProfile p;
  p.arity = tuple.size();
  p.closure = closure_tuple(tuple);
  const std::size_t m = p.closure.size();
  p.relate_matrix.assign(m, std::vector<Relation>(m));
  p.lex_matrix.assign(m, std::vector<bool>(m));
  p.meet_table.assign(m, std::vector<std::size_t>(m));
  p.succ01.assign(2, std::vector<std::vector<bool>>(m, std::vector<bool>(m)));
  p.immediate_succ = p.succ01;
  p.last_symbol.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Node& a = p.closure[i];
    p.last_symbol[i] = a.last();
    for (std::size_t j = 0; j < m; ++j) {
      const Node& b = p.closure[j];
      p.relate_matrix[i][j] = relate(a, b);
      p.lex_matrix[i][j] = lex_less(a, b);
      p.meet_table[i][j] = first_index_of(p.closure, meet(a, b));
      for (Node::Symbol d = 0; d < 2; ++d) {
        Node ad = Node(std::vector<Node::Symbol>(a.symbols().begin(), a.symbols().end())).child(d);
        p.succ01[d][i][j] = ad.is_prefix_of(b);
        p.immediate_succ[d][i][j] = ad == b;
      }
    }
  }
  return p;
}

inline void require_same_arity(std::span<const Node> a, std::span<const Node> b) {
  if (a.size() != b.size()) {
    throw InputError("arity mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

/// Equality of quantifier-free types in {prefix, meet, lex}. Branching is
/// unrestricted; lex uses the natural symbol order.
inline bool str_similar(std::span<const Node> eta, std::span<const Node> nu) {
  require_same_arity(eta, nu);
  if (eta.empty()) return true;
  TypeProfile a = type_profile(eta);
  TypeProfile b = type_profile(nu);
  return a.relate_matrix == b.relate_matrix && a.lex_matrix == b.lex_matrix && a.meet_table == b.meet_table;
}

enum class EquivFailure { None, NotMeetClosed, PatternMismatch };

struct EquivVerdict {
  bool equivalent = true;
  EquivFailure failure = EquivFailure::None;
  std::string clause;  // "i".."vii" on failure
  std::size_t i = 0;
  std::size_t j = 0;

  explicit operator bool() const { return equivalent; }
};

namespace detail {

inline Node extend(const Node& n, Node::Symbol d) {
  return Node(std::vector<Node::Symbol>(n.symbols().begin(), n.symbols().end())).child(d);
}

inline void require_binary(std::span<const Node> t) {
  for (const auto& n : t) {
    if (!n.is_binary()) throw InputError("graded equivalence is defined on binary nodes only; got " + to_string(n));
  }
}

}  // namespace detail

/// Cumulative clauses (i)..(iii) for ALPHA, (iv) for BETA, (v)..(vii) for
/// GAMMA. Returns the first failing clause.
inline EquivVerdict graded_equiv_diagnose(SimilarityLevel level, std::span<const Node> eta,
                                          std::span<const Node> nu) {
  require_same_arity(eta, nu);
  detail::require_binary(eta);
  detail::require_binary(nu);
  if (level == SimilarityLevel::STR) {
    return str_similar(eta, nu) ? EquivVerdict{} : EquivVerdict{false, EquivFailure::PatternMismatch, "str"};
  }
  auto fail = [](const char* clause, std::size_t i, std::size_t j) {
    return EquivVerdict{false, EquivFailure::PatternMismatch, clause, i, j};
  };
  if (!is_meet_closed(eta) || !is_meet_closed(nu)) return EquivVerdict{false, EquivFailure::NotMeetClosed, "i"};
  const std::size_t n = eta.size();
  using detail::extend;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (eta[i].is_prefix_of(eta[j]) != nu[i].is_prefix_of(nu[j])) return fail("ii", i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (Node::Symbol d = 0; d < 2; ++d) {
        if (extend(eta[i], d).is_prefix_of(eta[j]) != extend(nu[i], d).is_prefix_of(nu[j])) return fail("iii", i, j);
      }
    }
  }
  if (level == SimilarityLevel::ALPHA) return {};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((extend(eta[i], 1) == eta[j]) != (extend(nu[i], 1) == nu[j])) return fail("iv", i, j);
    }
  }
  if (level == SimilarityLevel::BETA) return {};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((extend(eta[i], 0) == eta[j]) != (extend(nu[i], 0) == nu[j])) return fail("v", i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (eta[i].ends_with(0) != nu[i].ends_with(0)) return fail("vi", i, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (eta[i].ends_with(1) != nu[i].ends_with(1)) return fail("vii", i, i);
  }
  return {};
}

inline bool graded_equiv(SimilarityLevel level, std::span<const Node> eta, std::span<const Node> nu) {
  return graded_equiv_diagnose(level, eta, nu).equivalent;
}

/// Consequences of gamma-equivalence. Clauses mentioning the parent of a
/// node range over non-root positions; gamma-equivalence makes the root
/// positions of the two tuples coincide.
inline CheckReport check_gamma_consequences(std::span<const Node> eta, std::span<const Node> nu) {
  auto pre = graded_equiv_diagnose(SimilarityLevel::GAMMA, eta, nu);
  if (!pre) throw InputError("tuples are not gamma-equivalent (clause " + pre.clause + ")");
  const std::size_t n = eta.size();
  using detail::extend;
  std::uint64_t examined = 0;
  auto nodes = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Node> out;
    for (auto k : idx) out.push_back(eta[k]);
    for (auto k : idx) out.push_back(nu[k]);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++examined;
        if ((meet(eta[i], eta[j]) == eta[k]) != (meet(nu[i], nu[j]) == nu[k])) {
          return CheckReport::fail("i", nodes({i, j, k}), "meet correspondence", examined);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++examined;
      const bool eta_inc = incomparable(eta[i], eta[j]);
      if (eta_inc && !eta[i].is_root() && !eta[j].is_root() &&
          meet(eta[i].parent(), eta[j].parent()) != meet(eta[i], eta[j])) {
        return CheckReport::fail("iii", nodes({i, j}), "parents of incomparable nodes meet lower", examined);
      }
      if (incomparable(nu[i], nu[j]) && !nu[i].is_root() && !nu[j].is_root() &&
          meet(nu[i].parent(), nu[j].parent()) != meet(nu[i], nu[j])) {
        return CheckReport::fail("iii", nodes({i, j}), "parents of incomparable nodes meet lower", examined);
      }
      if (eta[j].is_root() || nu[j].is_root()) continue;
      const Node ej = eta[j].parent();
      const Node nj = nu[j].parent();
      for (Node::Symbol d = 0; d < 2; ++d) {
        if (extend(eta[i], d).is_prefix_of(ej) != extend(nu[i], d).is_prefix_of(nj)) {
          return CheckReport::fail("iv", nodes({i, j}), "successor below parent, d=" + std::to_string(d), examined);
        }
      }
      if (eta[i].is_root() || nu[i].is_root()) continue;
      const Node ei = eta[i].parent();
      const Node ni = nu[i].parent();
      if (ei.is_prefix_of(ej) != ni.is_prefix_of(nj)) {
        return CheckReport::fail("ii", nodes({i, j}), "parent order correspondence", examined);
      }
      for (Node::Symbol d = 0; d < 2; ++d) {
        if (extend(ei, d).is_prefix_of(ej) != extend(ni, d).is_prefix_of(nj)) {
          return CheckReport::fail("v", nodes({i, j}), "parent successor correspondence, d=" + std::to_string(d),
                                   examined);
        }
      }
    }
  }
  return CheckReport::ok(examined);
}

}  // namespace treelab

#endif  // TREELAB_SIMILARITY_HPP_
