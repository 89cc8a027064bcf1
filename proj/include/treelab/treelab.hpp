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

#ifndef TREELAB_TREELAB_HPP_
#define TREELAB_TREELAB_HPP_

#include "treelab/antichain.hpp"
#include "treelab/errors.hpp"
#include "treelab/modelc.hpp"
#include "treelab/node.hpp"
#include "treelab/oracle.hpp"
#include "treelab/ramsey.hpp"
#include "treelab/report.hpp"
#include "treelab/similarity.hpp"
#include "treelab/treemaps.hpp"
#include "treelab/witness.hpp"

#endif  // TREELAB_TREELAB_HPP_
