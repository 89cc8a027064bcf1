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

#ifndef TREELAB_REPORT_HPP_
#define TREELAB_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "treelab/node.hpp"

namespace treelab {

struct Counterexample {
  std::string clause;
  std::vector<Node> nodes;
  std::string detail;
};

/// Verdict of a finite check. A failing report always carries a
/// counterexample naming the violated clause.
struct CheckReport {
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t examined = 0;
  std::string note;

  static CheckReport ok(std::uint64_t examined = 0, std::string note = {}) {
    return CheckReport{true, std::nullopt, examined, std::move(note)};
  }

  static CheckReport fail(std::string clause, std::vector<Node> nodes, std::string detail = {},
                          std::uint64_t examined = 0) {
    return CheckReport{false, Counterexample{std::move(clause), std::move(nodes), std::move(detail)}, examined, {}};
  }

  explicit operator bool() const { return pass; }

  std::string clause() const { return counterexample ? counterexample->clause : std::string{}; }
};

inline std::string to_string(const CheckReport& r) {
  std::string out = r.pass ? "PASS" : "FAIL";
  if (r.counterexample) {
    out += " [" + r.counterexample->clause + "]";
    if (!r.counterexample->nodes.empty()) {
      out += " at";
      for (const auto& n : r.counterexample->nodes) out += " " + to_string(n);
    }
    if (!r.counterexample->detail.empty()) out += ": " + r.counterexample->detail;
  }
  out += " (examined " + std::to_string(r.examined) + ")";
  if (!r.note.empty()) out += " " + r.note;
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const CheckReport& r) { return os << to_string(r); }

}  // namespace treelab

#endif  // TREELAB_REPORT_HPP_
