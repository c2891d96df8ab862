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

#ifndef DCM_TESTS_ORACLES_HPP
#define DCM_TESTS_ORACLES_HPP

// Brute-force reference computations. None of these call into the code
// paths they are used to check (BFS, prefix sums, the solvers).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"

namespace dcm::testing {

constexpr std::uint32_t kNoPath = 0xffffffffU;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size(), false));
  for (auto [x, y] : g.arcs()) adj[x][y] = true;
  return adj;
}

// Shortest x -> y length by enumerating every simple path. Exponential;
// keep n <= 6.
inline std::uint32_t path_enumeration_distance(const Graph& g, Node from, Node to) {
  const auto adj = adjacency(g);
  std::vector<bool> on_path(g.size(), false);
  std::uint32_t best = kNoPath;
  std::function<void(Node, std::uint32_t)> walk = [&](Node x, std::uint32_t len) {
    if (x == to) {
      best = std::min(best, len);
      return;
    }
    on_path[x] = true;
    for (Node y = 0; y < g.size(); ++y) {
      if (adj[x][y] && !on_path[y]) walk(y, len + 1);
    }
    on_path[x] = false;
  };
  walk(from, 0);
  return best;
}

// d[x][y] = distance from x to y, Floyd-Warshall.
inline std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.size();
  const std::uint64_t inf = std::uint64_t{1} << 40;
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
  for (std::size_t x = 0; x < n; ++x) d[x][x] = 0;
  for (auto [x, y] : g.arcs()) d[x][y] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& v : row) {
      if (v >= inf) v = kNoPath;
    }
  }
  return d;
}

// Distance-count matrix from Floyd-Warshall, rows counted directly.
inline std::vector<std::vector<Count>> oracle_dcm(const Graph& g) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.size();
  std::vector<std::vector<Count>> out(n, std::vector<Count>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t y = 0; y < n; ++y) {
      if (d[y][i] != kNoPath) ++out[i][d[y][i]];
    }
  }
  return out;
}

// Cumulative counts by direct "distance <= k" counting.
inline std::vector<std::vector<Count>> oracle_cdcm(const Graph& g) {
  const auto d = floyd_warshall(g);
  const std::size_t n = g.size();
  std::vector<std::vector<Count>> out(n, std::vector<Count>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t y = 0; y < n; ++y) {
        if (d[y][i] != kNoPath && d[y][i] <= k) ++out[i][k];
      }
    }
  }
  return out;
}

// Graph number `code` among all 2^(pairs) graphs on n labelled nodes.
inline Graph graph_from_code(std::size_t n, std::uint64_t code, Orientation orientation) {
  Graph g(n, orientation);
  std::size_t b = 0;
  for (Node x = 0; x < n; ++x) {
    for (Node y = orientation == Orientation::directed ? 0 : x + 1; y < n; ++y) {
      if (x == y) continue;
      if (code >> b & 1U) g.add_arc(x, y);
      ++b;
    }
  }
  return g;
}

inline std::size_t pair_count(std::size_t n, Orientation orientation) {
  return orientation == Orientation::directed ? n * (n - 1) : n * (n - 1) / 2;
}

// Every degree sequence (sorted nonincreasing) of an undirected graph on p
// labelled nodes.
inline std::set<std::vector<Count>> realizable_degree_sequences(std::size_t p) {
  std::set<std::vector<Count>> out;
  const std::size_t pairs = pair_count(p, Orientation::undirected);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    std::vector<Count> deg(p, 0);
    std::size_t b = 0;
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t y = x + 1; y < p; ++y, ++b) {
        if (code >> b & 1U) {
          ++deg[x];
          ++deg[y];
        }
      }
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    out.insert(deg);
  }
  return out;
}

// Three-partition by trying every ordering of the entries and cutting it
// into consecutive triples.
inline bool permutation_tpp(std::vector<std::int64_t> a) {
  const std::size_t m = a.size() / 3;
  const std::int64_t s = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  if (m == 0 || s % static_cast<std::int64_t>(m) != 0) return false;
  const std::int64_t t = s / static_cast<std::int64_t>(m);
  std::sort(a.begin(), a.end());
  do {
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) ok = a[3 * j] + a[3 * j + 1] + a[3 * j + 2] == t;
    if (ok) return true;
  } while (std::next_permutation(a.begin(), a.end()));
  return false;
}

// All good sequences of the given length.
inline std::vector<std::vector<Count>> all_good_sequences(std::size_t length) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> prefix{1};
  std::function<void()> grow = [&]() {
    // Close with a plateau at the current last value, if allowed.
    if (prefix.back() <= length) {
      auto seq = prefix;
      seq.resize(length, prefix.back());
      out.push_back(seq);
    }
    if (prefix.size() == length) return;
    for (Count next = prefix.back() + 1; next <= length; ++next) {
      prefix.push_back(next);
      grow();
      prefix.pop_back();
    }
  };
  if (length > 0) grow();
  return out;
}

}  // namespace dcm::testing

#endif  // DCM_TESTS_ORACLES_HPP
