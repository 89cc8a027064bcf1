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

// The acceptance suite: numbered criteria, each with a wall-clock limit.
// A criterion passes only if its check passes inside the limit. Suites
// are plain vectors so callers can substitute entries.

#ifndef TREELAB_ACCEPTANCE_HPP_
#define TREELAB_ACCEPTANCE_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "treelab/antichain.hpp"
#include "treelab/gen.hpp"
#include "treelab/modelc.hpp"
#include "treelab/oracle.hpp"
#include "treelab/ramsey.hpp"
#include "treelab/reference.hpp"
#include "treelab/similarity.hpp"
#include "treelab/treemaps.hpp"
#include "treelab/witness.hpp"

namespace treelab::acceptance {

struct Result {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds = 0;
  std::function<Result()> run;
};

struct Outcome {
  std::string id;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Accumulates sub-checks; the first failure is kept as the detail.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      detail_ = what;
    }
  }
  void expect(const CheckReport& r, const std::string& what) { expect(r.pass, what + ": " + to_string(r)); }

  /// Runs f and fails if it takes longer than limit seconds.
  template <typename F>
  void within(double limit, const std::string& what, F&& f) {
    const auto t0 = Clock::now();
    f();
    const double s = seconds_since(t0);
    expect(s <= limit, what + " took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s");
  }

  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }

  Result result() const { return {pass_, pass_ ? notes_ : detail_}; }

 private:
  bool pass_ = true;
  std::string detail_;
  std::string notes_;
};

inline std::vector<std::vector<Node>> all_tuples(unsigned depth, std::size_t arity) {
  const auto nodes = tree_nodes(depth, 2);
  std::vector<std::vector<Node>> out{{}};
  for (std::size_t a = 0; a < arity; ++a) {
    std::vector<std::vector<Node>> next;
    for (const auto& t : out) {
      for (const auto& n : nodes) {
        auto u = t;
        u.push_back(n);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// The range of h is one color and h respects immediate successors.
inline bool embedding_valid(const Coloring& c, const MapTable& h, unsigned height, unsigned k) {
  if (h.empty()) return false;
  const int color = c.color(h.begin()->second);
  for (const auto& [eta, image] : h) {
    if (!c.in_range(image) || c.color(image) != color) return false;
    if (eta.length() + 1 < height) {
      for (Node::Symbol i = 0; i < k; ++i) {
        if (!h.at(eta).child(i).is_prefix_of(h.at(eta.child(i)))) return false;
      }
    }
  }
  return h.size() == tree_size(height, k);
}

}  // namespace detail

inline Result maximal_antichain_counts(unsigned n_max, unsigned brute_max) {
  detail::Tally t;
  const std::uint64_t want[] = {1, 2, 5, 26, 677, 458330};
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto got = enumerate_maximal_antichains(n).size();
    t.expect(got == want[n - 1], "depth " + std::to_string(n) + ": catalog has " + std::to_string(got));
    t.expect(maximal_antichain_count(n) == want[n - 1], "recursion count at depth " + std::to_string(n));
    if (n > 1) {
      const auto prev = maximal_antichain_count(n - 1);
      t.expect(maximal_antichain_count(n) == prev * prev + 1, "count(n) != count(n-1)^2 + 1");
    }
  }
  for (unsigned n = 1; n <= brute_max; ++n) {
    t.expect(reference::count_maximal_antichains(n) == want[n - 1],
             "brute-force count at depth " + std::to_string(n));
  }
  t.note("counts match through depth " + std::to_string(n_max));
  return t.result();
}

inline Result antichain_tree(unsigned full_depth, unsigned reduced_depth, double full_limit, double reduced_limit) {
  detail::Tally t;
  t.within(full_limit, "full check", [&] {
    t.expect(verify_antichain_tree(build_structure(full_depth), CheckMode::FULL),
             "full check at depth " + std::to_string(full_depth));
  });
  t.within(reduced_limit, "reduced check", [&] {
    t.expect(verify_antichain_tree(build_structure(reduced_depth), CheckMode::REDUCED),
             "reduced check at depth " + std::to_string(reduced_depth));
  });
  return t.result();
}

inline Result no_crossing_pairs(unsigned depth) {
  detail::Tally t;
  auto r = verify_no_crossing_pairs(build_structure(depth));
  t.expect(r, "crossing pairs");
  t.note(std::to_string(r.examined) + " tuples");
  return t.result();
}

inline Result pairwise_implies_joint(unsigned depth, unsigned max_size) {
  detail::Tally t;
  auto r = verify_pairwise_implies_joint(build_structure(depth), max_size);
  t.expect(r, "pairwise consistency");
  t.note(std::to_string(r.examined) + " subsets");
  return t.result();
}

inline Result phi_checks(unsigned depth, PhiReading reading = PhiReading::LITERAL) {
  detail::Tally t;
  const auto s = build_structure(depth);
  t.expect(verify_phi_semantics(s, reading), "phi semantics");
  t.expect(verify_phi_sop2(s, depth - 1, reading), "phi pattern");
  return t.result();
}

/// Under the literal reading phi(b_nu, b_eta) holds iff nu and eta are
/// distinct and comparable.
inline Result phi_literal_reduction(unsigned depth) {
  detail::Tally t;
  const auto s = build_structure(depth);
  for (std::size_t v = 0; v < s.param_count(); ++v) {
    for (std::size_t e = 0; e < s.param_count(); ++e) {
      const bool want = v != e && comparable(s.param(v), s.param(e));
      if (eval_phi_pred(s, ElementRef::b(v), ElementRef::b(e)) != want) {
        t.expect(false, "literal phi on (" + to_string(s.param(v)) + ", " + to_string(s.param(e)) + ")");
      }
    }
  }
  return t.result();
}

inline Result conjunction_search(unsigned depth, std::uint64_t budget_two, double single_limit) {
  detail::Tally t;
  const auto s = build_structure(depth);
  t.within(single_limit, "single-conjunct search", [&] {
    auto r = search_conjunction_sop2(s, 1);
    t.expect(r.outcome == SearchOutcome::NONE,
             std::string("single conjunct: ") + to_string(r.outcome) + " after " + std::to_string(r.assignments));
    t.note("n=1 " + std::string(to_string(r.outcome)) + " after " + std::to_string(r.assignments) + " placements");
  });
  auto r2 = search_conjunction_sop2(s, 2, budget_two);
  std::string where;
  for (const auto& tup : r2.witness) {
    where += "(";
    for (const auto& n : tup) where += to_string(n) + " ";
    where += ")";
  }
  t.expect(r2.outcome != SearchOutcome::FOUND, "two conjuncts: witness found " + where);
  t.note("n=2 " + std::string(to_string(r2.outcome)) + " after " + std::to_string(r2.assignments) + " placements");
  return t.result();
}

inline NamedTreeMap tp2_grid_map() {
  return {MapName::TP2_FROM_AT, {Node::from_bits("00"), Node::from_bits("01"), Node::from_bits("10")}};
}

inline Result map_transports(double each_limit) {
  detail::Tally t;
  const auto atp = ConsistencyOracle::synthetic(SyntheticRule::ATP, kMaxPullbackDepth);
  const auto free = ConsistencyOracle::synthetic(SyntheticRule::FREE, kMaxPullbackDepth + 4);
  t.within(each_limit, "sop1 transport", [&] {
    t.expect(check_property(pull_back(atp, MapName::SOP1_FROM_AT, 3), Property{PropertyKind::SOP1}, 3),
             "sop1 from antichain tree");
  });
  t.within(each_limit, "tp2 transport", [&] {
    t.expect(check_tp2(pull_back_grid(atp, tp2_grid_map(), 3)), "tp2 from antichain tree");
  });
  t.within(each_limit, "atp transport", [&] {
    t.expect(check_property(pull_back(free, MapName::AT_FROM_SSOP1, 3), Property{PropertyKind::ATP}, 3),
             "antichain tree from ssop1");
  });
  t.within(each_limit, "ssop1 transport", [&] {
    t.expect(check_property(pull_back(atp, MapName::SSOP1_FROM_AT, 3), Property{PropertyKind::SSOP1}, 3),
             "ssop1 from antichain tree");
  });
  return t.result();
}

inline Result pattern_searches(unsigned depth) {
  detail::Tally t;
  const auto atp = ConsistencyOracle::synthetic(SyntheticRule::ATP, depth);
  const auto chain = ConsistencyOracle::synthetic(SyntheticRule::CHAIN, depth);
  t.expect(!find_pattern_depth2(atp, PatternShape::SOP2_SHAPE), "sop2 shape found in antichain oracle");
  t.expect(!find_pattern_depth2(chain, PatternShape::ANTICHAIN_SHAPE), "antichain shape found in chain oracle");
  t.expect(find_pattern_depth2(chain, PatternShape::SOP2_SHAPE).has_value(), "sop2 shape missing in chain oracle");
  t.expect(find_pattern_depth2(atp, PatternShape::ANTICHAIN_SHAPE).has_value(),
           "antichain shape missing in antichain oracle");
  return t.result();
}

inline Result similarity(unsigned depth, unsigned random_pairs, std::uint64_t seed) {
  detail::Tally t;
  const auto tuples = detail::all_tuples(depth, 2);
  std::uint64_t gamma = 0;
  for (const auto& a : tuples) {
    for (const auto& b : tuples) {
      const bool g = graded_equiv(SimilarityLevel::GAMMA, a, b);
      const bool be = graded_equiv(SimilarityLevel::BETA, a, b);
      const bool al = graded_equiv(SimilarityLevel::ALPHA, a, b);
      gamma += g;
      if ((g && !be) || (be && !al)) {
        t.expect(false, "graded implication fails on " + to_string(NodeSet(a)) + " / " + to_string(NodeSet(b)));
      }
      if (str_similar(a, b) != reference::str_similar_by_terms(a, b)) {
        t.expect(false, "str_similar disagrees with term enumeration on (" + to_string(a[0]) + "," + to_string(a[1]) +
                            ") / (" + to_string(b[0]) + "," + to_string(b[1]) + ")");
      }
    }
  }
  gen::Rng rng(seed);
  for (unsigned i = 0; i < random_pairs; ++i) {
    auto p = gen::random_gamma_pair(rng);
    if (!graded_equiv(SimilarityLevel::GAMMA, p.eta, p.nu)) {
      t.expect(false, "generated pair " + std::to_string(i) + " is not gamma-equivalent");
      break;
    }
    t.expect(check_gamma_consequences(p.eta, p.nu), "gamma consequences, pair " + std::to_string(i));
  }
  t.note(std::to_string(tuples.size() * tuples.size()) + " tuple pairs, " + std::to_string(gamma) +
         " gamma-equivalent");
  return t.result();
}

inline Result successor_maps(unsigned instances, std::uint64_t seed) {
  detail::Tally t;
  t.expect(validate_successor_preserving(make_table(MapName::BETA_FROM_GAMMA, 4), 4), "beta_from_gamma");
  auto bad = validate_successor_preserving(make_table(MapName::AT_EMBED, 4), 4);
  t.expect(!bad.pass && bad.clause() == "premise", "at_embed premise failure not reported: " + to_string(bad));
  gen::Rng rng(seed);
  for (unsigned i = 0; i < instances; ++i) {
    auto x = gen::random_tail_swap(rng);
    auto v = check_tail_swap(x.sigma, x.sigma_last, x.eta, x.nu, x.theta);
    t.expect(v.hypothesis, "instance " + std::to_string(i) + " violates hypothesis " + v.failed_hypothesis);
    t.expect(v.report, "tail swap instance " + std::to_string(i));
  }
  return t.result();
}

inline Result level_sets(unsigned i_max, unsigned k_max) {
  detail::Tally t;
  t.expect(verify_levelset_facts(i_max, k_max), "level-set facts");
  const auto m = gen_level_sets(2, 3).m_i_k;
  t.expect(m == Node::from_bits("1001001111"), "m_2^3 = " + to_string(m) + ", expected 1001001111");
  return t.result();
}

inline Result checker_equivalences(unsigned oracles, std::uint64_t seed) {
  detail::Tally t;
  gen::Rng rng(seed);
  const Property astr_sop2{PropertyKind::ASTR_SOP2, 2, {{Node::from_bits("0"), Node::from_bits("1")}}};
  const Property astr_tp1{PropertyKind::ASTR_TP1, 2, {{Node::from_bits("0"), Node::from_bits("1")}}};
  const Property weak{PropertyKind::WEAK_K_TP1, 2, {}};
  unsigned sop2_pass = 0;
  unsigned tp1_pass = 0;
  for (unsigned i = 0; i < oracles; ++i) {
    auto o = gen::random_solution_oracle(rng, 3, 3, i % 2 == 0 ? 0.0 : 0.08);
    const bool a = check_property(o, Property{PropertyKind::SOP2}, 3).pass;
    const bool b = check_property(o, astr_sop2, 3).pass;
    const bool c = check_property(o, weak, 3).pass;
    const bool d = check_property(o, astr_tp1, 3).pass;
    t.expect(a == b, "oracle " + std::to_string(i) + ": sop2 and strong-similarity sop2 verdicts differ");
    t.expect(c == d, "oracle " + std::to_string(i) + ": weak 2-tp1 and strong-similarity tp1 verdicts differ");
    sop2_pass += a;
    tp1_pass += c;
  }
  t.note("sop2 held on " + std::to_string(sop2_pass) + "/" + std::to_string(oracles) + ", weak 2-tp1 on " +
         std::to_string(tp1_pass) + "/" + std::to_string(oracles));
  return t.result();
}

inline Result ramsey() {
  detail::Tally t;
  auto found = [&](const Coloring& c, unsigned n, unsigned k, const std::string& what) {
    auto h = find_mono_embedding(c, n, k);
    t.expect(h.has_value(), what + ": no embedding");
    if (!h) return;
    t.expect(validate_successor_preserving(*h, n - 1), what + ": not successor preserving");
    t.expect(detail::embedding_valid(c, *h, n, k), what + ": range not monochromatic");
  };
  found(Coloring(4, 2, 7), 3, 2, "constant coloring");
  found(Coloring::from_function(4, 2, [](const Node& n) { return static_cast<int>(n.length() % 2); }), 2, 2,
        "parity coloring");
  found(Coloring::from_function(4, 2, [](const Node& n) { return n.is_root() ? 2 : static_cast<int>(n[0]); }), 2, 2,
        "first-symbol coloring");
  Coloring three(2, 2, 0, {{Node::from_bits("e"), 0}, {Node::from_bits("0"), 1}, {Node::from_bits("1"), 2}});
  t.expect(!find_mono_embedding(three, 2, 2).has_value(), "three-color refutation case returned an embedding");
  return t.result();
}

inline std::vector<Criterion> full_suite(std::uint64_t seed = 0) {
  return {
      {"1", "maximal antichain counts", 5, [] { return maximal_antichain_counts(5, 3); }},
      {"2", "antichain tree on incidence structures", 90, [] { return antichain_tree(4, 5, 60, 30); }},
      {"3", "no crossing pairs", 30, [] { return no_crossing_pairs(4); }},
      {"4", "pairwise consistency implies joint", 60, [] { return pairwise_implies_joint(4, 4); }},
      {"5", "phi semantics and pattern", 60, [] { return phi_checks(5); }},
      {"6", "conjunction pattern search", 1200, [] { return conjunction_search(4, 100'000'000, 600); }},
      {"7", "map transports", 40, [] { return map_transports(10); }},
      {"8", "height-two pattern searches", 30, [] { return pattern_searches(4); }},
      {"9", "similarity", 60, [seed] { return similarity(3, 1000, seed); }},
      {"10", "successor-preserving maps and tail swap", 60, [seed] { return successor_maps(1000, seed); }},
      {"11", "level-set facts", 5, [] { return level_sets(4, 4); }},
      {"12", "checker equivalences", 60, [seed] { return checker_equivalences(20, seed); }},
      {"13", "monochromatic embeddings", 30, [] { return ramsey(); }},
  };
}

/// Invariants plus exhaustive checks at depth <= 3; a few seconds in total.
inline std::vector<Criterion> quick_suite(std::uint64_t seed = 0) {
  return {
      {"q1", "maximal antichain counts to depth 3", 2, [] { return maximal_antichain_counts(3, 3); }},
      {"q2", "antichain tree at depth 3", 2, [] { return antichain_tree(3, 3, 1, 1); }},
      {"q3", "incidence facts at depth 3", 2,
       [] {
         detail::Tally t;
         const auto s = build_structure(3);
         t.expect(verify_no_crossing_pairs(s), "crossing pairs");
         t.expect(verify_pairwise_implies_joint(s, 4), "pairwise consistency");
         t.expect(verify_embedding_chain(3), "embedding chain");
         return t.result();
       }},
      {"q4", "phi at depth 3", 2,
       [] {
         auto r = phi_checks(3, PhiReading::DISTINCT_WITNESS);
         if (!r.pass) return r;
         return phi_literal_reduction(3);
       }},
      {"q5", "map transports", 4, [] { return map_transports(1); }},
      {"q6", "map unfolding", 1,
       [] {
         detail::Tally t;
         t.expect(apply_map(MapName::AT_EMBED, Node::from_bits("00")) == Node::from_bits("1001001"), "at_embed(00)");
         for (const auto& eta : tree_nodes(4)) {
           t.expect(apply_map(MapName::SOP1_FROM_AT, eta) == sop1_stagewise(3, eta), "sop1 stagewise at " + to_string(eta));
         }
         t.expect(validate_successor_preserving(make_table(MapName::BETA_FROM_GAMMA, 3), 3), "beta_from_gamma");
         return t.result();
       }},
      {"q7", "similarity at depth 2", 2, [seed] { return similarity(2, 100, seed); }},
      {"q8", "monochromatic embeddings", 2, [] { return ramsey(); }},
  };
}

inline Outcome run_one(const Criterion& c) {
  Outcome o{c.id, c.name, false, 0, c.limit_seconds, {}};
  const auto t0 = detail::Clock::now();
  try {
    auto r = c.run();
    o.pass = r.pass;
    o.detail = r.detail;
  } catch (const std::exception& e) {
    o.detail = std::string("exception: ") + e.what();
  }
  o.seconds = detail::seconds_since(t0);
  if (o.pass && o.seconds > c.limit_seconds) {
    o.pass = false;
    o.detail = "exceeded time limit";
  }
  return o;
}

inline std::string format_line(const Outcome& o) {
  std::ostringstream s;
  s << "criterion " << o.id << " [" << o.name << "]: " << (o.pass ? "PASS" : "FAIL");
  s.setf(std::ios::fixed);
  s.precision(2);
  s << " (" << o.seconds << " s, limit " << o.limit_seconds << " s)";
  if (!o.detail.empty()) s << " " << o.detail;
  return s.str();
}

/// Runs every criterion, printing one line each.
inline std::vector<Outcome> run_suite(const std::vector<Criterion>& suite, std::ostream* out = nullptr) {
  std::vector<Outcome> results;
  for (const auto& c : suite) {
    results.push_back(run_one(c));
    if (out) *out << format_line(results.back()) << std::endl;
  }
  return results;
}

inline const Outcome* first_failure(const std::vector<Outcome>& results) {
  for (const auto& r : results) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

}  // namespace treelab::acceptance

#endif  // TREELAB_ACCEPTANCE_HPP_
