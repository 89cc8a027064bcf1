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

#ifndef TREELAB_ERRORS_HPP_
#define TREELAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace treelab {

/// Malformed or out-of-contract arguments (mismatched branching, nodes out
/// of depth, arity mismatches, violated preconditions).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation refused because it would exceed a configured size or
/// search budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treelab

#endif  // TREELAB_ERRORS_HPP_
