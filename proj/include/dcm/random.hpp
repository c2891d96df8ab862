// Copyright 2026 The dcmkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCM_RANDOM_HPP
#define DCM_RANDOM_HPP

#include <random>

#include "dcm/graph.hpp"

namespace dcm {

/// Erdos-Renyi G(n, p): every ordered (directed) or unordered (undirected)
/// pair of distinct nodes is an arc with probability p.
Graph random_graph(std::size_t n, double p, Orientation orientation, std::mt19937_64& rng);

}  // namespace dcm

#endif  // DCM_RANDOM_HPP
