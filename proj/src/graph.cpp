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

#include "dcm/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "dcm/error.hpp"
#include "text_util.hpp"

namespace dcm {

Graph::Graph(std::size_t n, Orientation orientation)
    : orientation_(orientation), out_(n), in_(n) {}

void Graph::check_node(Node x) const {
  if (x >= out_.size()) {
    throw DomainError("node " + std::to_string(x) + " out of range [0, " +
                      std::to_string(out_.size()) + ")");
  }
}

namespace {

bool insert_sorted(std::vector<Node>& list, Node x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it != list.end() && *it == x) return false;
  list.insert(it, x);
  return true;
}

}  // namespace

void Graph::add_arc(Node tail, Node head) {
  check_node(tail);
  check_node(head);
  if (tail == head) {
    throw DomainError("self-loop at node " + std::to_string(tail));
  }
  if (has_arc(tail, head)) {
    throw DomainError("duplicate arc " + std::to_string(tail) + " -> " +
                      std::to_string(head));
  }
  insert_sorted(out_[tail], head);
  insert_sorted(in_[head], tail);
  ++arc_count_;
  if (orientation_ == Orientation::undirected) {
    insert_sorted(out_[head], tail);
    insert_sorted(in_[tail], head);
    ++arc_count_;
  }
}

bool Graph::has_arc(Node tail, Node head) const {
  check_node(tail);
  check_node(head);
  return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

std::vector<std::pair<Node, Node>> Graph::arcs() const {
  std::vector<std::pair<Node, Node>> result;
  result.reserve(arc_count_);
  for (Node x = 0; x < out_.size(); ++x) {
    for (Node y : out_[x]) result.emplace_back(x, y);
  }
  return result;
}

std::vector<std::pair<Node, Node>> Graph::edges() const {
  if (is_directed()) return arcs();
  std::vector<std::pair<Node, Node>> result;
  result.reserve(arc_count_ / 2);
  for (Node x = 0; x < out_.size(); ++x) {
    for (Node y : out_[x]) {
      if (x < y) result.emplace_back(x, y);
    }
  }
  return result;
}

DistanceRow distances_to(const Graph& g, Node target) {
  if (target >= g.size()) {
    throw DomainError("node " + std::to_string(target) + " out of range [0, " +
                      std::to_string(g.size()) + ")");
  }
  DistanceRow row{target, std::vector<Distance>(g.size(), kInfinite)};
  std::vector<Node> frontier{target};
  std::vector<Node> next;
  row.dist[target] = 0;
  for (Distance level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (Node x : frontier) {
      for (Node y : g.predecessors(x)) {
        if (row.dist[y] == kInfinite) {
          row.dist[y] = level;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  return row;
}

Distance eccentricity(const Graph& g, Node i) {
  Distance ecc = 0;
  for (Distance d : distances_to(g, i).dist) {
    if (d != kInfinite) ecc = std::max(ecc, d);
  }
  return ecc;
}

Distance diameter(const Graph& g) {
  Distance result = 0;
  for (Node i = 0; i < g.size(); ++i) result = std::max(result, eccentricity(g, i));
  return result;
}

bool is_strongly_connected(const Graph& g) {
  if (g.size() == 0) return true;
  // Every node reaches 0 and 0 reaches every node.
  const auto to_zero = distances_to(g, 0).dist;
  if (std::find(to_zero.begin(), to_zero.end(), kInfinite) != to_zero.end()) {
    return false;
  }
  std::vector<bool> seen(g.size(), false);
  std::vector<Node> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    for (Node y : g.successors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.size();
}

std::vector<Node> neighborhood_set(const Graph& g, std::span<const Node> sources,
                                   Distance radius) {
  std::vector<bool> in_set(g.size(), false);
  std::vector<Node> frontier;
  for (Node x : sources) {
    if (x >= g.size()) {
      throw DomainError("node " + std::to_string(x) + " out of range [0, " +
                        std::to_string(g.size()) + ")");
    }
    if (!in_set[x]) {
      in_set[x] = true;
      frontier.push_back(x);
    }
  }
  std::vector<Node> next;
  for (Distance level = 0; level < radius && !frontier.empty(); ++level) {
    next.clear();
    for (Node x : frontier) {
      for (Node y : g.predecessors(x)) {
        if (!in_set[y]) {
          in_set[y] = true;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  std::vector<Node> result;
  for (Node x = 0; x < g.size(); ++x) {
    if (in_set[x]) result.push_back(x);
  }
  return result;
}

Graph graph_power(const Graph& g, Distance k) {
  if (g.is_directed()) throw ModeError("graph_power requires an undirected graph");
  if (k == 0) throw DomainError("graph_power requires k >= 1");
  Graph power(g.size(), Orientation::undirected);
  for (Node i = 0; i < g.size(); ++i) {
    const auto row = distances_to(g, i);
    for (Node j = i + 1; j < g.size(); ++j) {
      if (row.dist[j] == k) power.add_arc(i, j);
    }
  }
  return power;
}

std::size_t connected_components(const Graph& g) {
  std::vector<bool> seen(g.size(), false);
  std::size_t components = 0;
  std::vector<Node> stack;
  for (Node start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      Node x = stack.back();
      stack.pop_back();
      for (auto list : {g.successors(x), g.predecessors(x)}) {
        for (Node y : list) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
  }
  return components;
}

Graph parse_graph(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError("missing graph header", 0);
  if (tokens.size() != 2 || (tokens[0] != "D" && tokens[0] != "U")) {
    throw ParseError("expected header `D <n>` or `U <n>`", reader.line());
  }
  const auto orientation =
      tokens[0] == "D" ? Orientation::directed : Orientation::undirected;
  const auto n = detail::parse_natural(tokens[1], reader.line());
  Graph g(n, orientation);
  while (reader.next(tokens)) {
    if (tokens.size() != 2) {
      throw ParseError("expected `<tail> <head>`", reader.line());
    }
    const auto tail = detail::parse_natural(tokens[0], reader.line());
    const auto head = detail::parse_natural(tokens[1], reader.line());
    if (tail >= n || head >= n) throw ParseError("node id out of range", reader.line());
    if (tail == head) throw ParseError("self-loop", reader.line());
    if (g.has_arc(static_cast<Node>(tail), static_cast<Node>(head))) {
      throw ParseError("duplicate arc", reader.line());
    }
    g.add_arc(static_cast<Node>(tail), static_cast<Node>(head));
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  out << (g.is_directed() ? 'D' : 'U') << ' ' << g.size() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (auto [x, y] : g.edges()) out << x << ' ' << y << '\n';
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace dcm
