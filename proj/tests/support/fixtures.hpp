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

#ifndef DCM_TESTS_FIXTURES_HPP
#define DCM_TESTS_FIXTURES_HPP

#include <vector>

#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"

namespace dcm::testing {

// The 8-node, 15-arc strongly connected example graph.
inline Graph example_graph() {
  Graph g(8, Orientation::directed);
  const std::pair<Node, Node> arcs[] = {{0, 3}, {0, 4}, {3, 4}, {4, 0}, {4, 6},
                                        {6, 7}, {7, 1}, {7, 2}, {2, 7}, {1, 6},
                                        {6, 5}, {5, 3}, {3, 2}, {2, 4}, {1, 0}};
  for (auto [x, y] : arcs) g.add_arc(x, y);
  return g;
}

// Its published distance-count matrix, rows bound to node ids.
inline DcMatrix example_dcm() {
  return DcMatrix(std::vector<std::vector<Count>>{
      {1, 2, 3, 2, 0, 0, 0, 0},
      {1, 1, 2, 2, 2, 0, 0, 0},
      {1, 2, 3, 2, 0, 0, 0, 0},
      {1, 2, 3, 2, 0, 0, 0, 0},
      {1, 3, 3, 1, 0, 0, 0, 0},
      {1, 1, 2, 4, 0, 0, 0, 0},
      {1, 2, 4, 1, 0, 0, 0, 0},
      {1, 2, 3, 2, 0, 0, 0, 0},
  });
}

// And its published cumulative matrix.
inline CdcMatrix example_cdcm() {
  return CdcMatrix(std::vector<std::vector<Count>>{
      {1, 3, 6, 8, 8, 8, 8, 8},
      {1, 2, 4, 6, 8, 8, 8, 8},
      {1, 3, 6, 8, 8, 8, 8, 8},
      {1, 3, 6, 8, 8, 8, 8, 8},
      {1, 4, 7, 8, 8, 8, 8, 8},
      {1, 2, 4, 8, 8, 8, 8, 8},
      {1, 3, 7, 8, 8, 8, 8, 8},
      {1, 3, 6, 8, 8, 8, 8, 8},
  });
}

inline Graph path_graph(std::size_t n) {
  Graph g(n, Orientation::undirected);
  for (Node x = 0; x + 1 < n; ++x) g.add_arc(x, x + 1);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n, Orientation::undirected);
  for (Node x = 0; x < n; ++x) {
    for (Node y = x + 1; y < n; ++y) g.add_arc(x, y);
  }
  return g;
}

}  // namespace dcm::testing

#endif  // DCM_TESTS_FIXTURES_HPP
