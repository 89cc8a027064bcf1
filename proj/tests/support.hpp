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

// Test-side helpers: bitstring shorthands and string-based oracles that
// avoid the library's own node algebra.

#ifndef TREELAB_TESTS_SUPPORT_HPP_
#define TREELAB_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "treelab/node.hpp"

namespace treelab::testing {

inline Node N(const char* bits) { return Node::from_bits(bits); }

inline std::vector<Node> Ns(std::initializer_list<const char*> bits) {
  std::vector<Node> out;
  for (auto b : bits) out.push_back(N(b));
  return out;
}

/// Bitstring of a binary node, "" for the root.
inline std::string bits(const Node& n) {
  std::string s;
  for (auto x : n.symbols()) s.push_back(static_cast<char>('0' + x));
  return s;
}

inline std::string common_prefix(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return a.substr(0, i);
}

inline bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

/// All bitstrings of length < depth.
inline std::vector<std::string> all_bitstrings(unsigned depth) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() + 1 < depth) {
      out.push_back(out[i] + "0");
      out.push_back(out[i] + "1");
    }
  }
  return out;
}

inline std::string random_bits(std::mt19937_64& rng, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string s(len(rng), '0');
  for (auto& c : s) c = static_cast<char>('0' + bit(rng));
  return s;
}

inline Node from_string(const std::string& s) { return s.empty() ? N("e") : N(s.c_str()); }

}  // namespace treelab::testing

#endif  // TREELAB_TESTS_SUPPORT_HPP_
