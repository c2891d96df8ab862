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

#ifndef DCM_GRAPH_HPP
#define DCM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcm {

using Node = std::uint32_t;
using Distance = std::uint32_t;

/// Sentinel for "no path". Compares greater than every finite distance.
inline constexpr Distance kInfinite = std::numeric_limits<Distance>::max();

enum class Orientation { directed, undirected };

/// A finite graph on nodes 0..n-1 with a set of arcs (no self-loops, no
/// multi-arcs). An undirected graph stores every edge as two opposite arcs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, Orientation orientation = Orientation::directed);

  /// Adds tail -> head (and head -> tail when undirected). Throws DomainError
  /// on an out-of-range id, a self-loop, or an arc already present.
  void add_arc(Node tail, Node head);

  std::size_t size() const noexcept { return out_.size(); }
  Orientation orientation() const noexcept { return orientation_; }
  bool is_directed() const noexcept { return orientation_ == Orientation::directed; }

  bool has_arc(Node tail, Node head) const;

  /// Sorted successor / predecessor lists.
  std::span<const Node> successors(Node x) const { return out_.at(x); }
  std::span<const Node> predecessors(Node x) const { return in_.at(x); }

  std::size_t in_degree(Node x) const { return in_.at(x).size(); }
  std::size_t out_degree(Node x) const { return out_.at(x).size(); }

  /// Number of stored arcs; an undirected edge counts twice.
  std::size_t arc_count() const noexcept { return arc_count_; }

  /// All arcs in lexicographic (tail, head) order.
  std::vector<std::pair<Node, Node>> arcs() const;

  /// For undirected graphs, each edge once as (lo, hi); for directed, arcs().
  std::vector<std::pair<Node, Node>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(Node x) const;

  Orientation orientation_ = Orientation::directed;
  std::vector<std::vector<Node>> out_;
  std::vector<std::vector<Node>> in_;
  std::size_t arc_count_ = 0;
};

/// dist[y] = d(y, target); distances are measured towards the target.
struct DistanceRow {
  Node target = 0;
  std::vector<Distance> dist;
};

DistanceRow distances_to(const Graph& g, Node target);

/// Largest finite d(y, i); unreachable nodes are ignored.
Distance eccentricity(const Graph& g, Node i);

/// Largest eccentricity over all nodes (0 for the empty graph).
Distance diameter(const Graph& g);

bool is_strongly_connected(const Graph& g);

/// Nodes y with d(y, i) <= radius for some i in `sources`, sorted ascending.
std::vector<Node> neighborhood_set(const Graph& g, std::span<const Node> sources,
                                   Distance radius);

/// Undirected graph with an edge i -- j iff d(i, j) == k. Requires an
/// undirected input and k >= 1.
Graph graph_power(const Graph& g, Distance k);

/// Number of weakly connected components.
std::size_t connected_components(const Graph& g);

/// Graph text format: header `D <n>` or `U <n>`, then one `<tail> <head>`
/// per line; `#` starts a comment line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Writes the graph in the text format. Each entry of `comments` becomes a
/// `# ...` line after the header.
void write_graph(std::ostream& out, const Graph& g,
                 std::span<const std::string> comments = {});
std::string to_string(const Graph& g);

}  // namespace dcm

#endif  // DCM_GRAPH_HPP
