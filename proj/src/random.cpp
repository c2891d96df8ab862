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

#include "dcm/random.hpp"

#include "dcm/error.hpp"

namespace dcm {

Graph random_graph(std::size_t n, double p, Orientation orientation, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  std::bernoulli_distribution coin(p);
  Graph g(n, orientation);
  for (Node x = 0; x < n; ++x) {
    for (Node y = orientation == Orientation::directed ? 0 : x + 1; y < n; ++y) {
      if (x != y && coin(rng)) g.add_arc(x, y);
    }
  }
  return g;
}

}  // namespace dcm
