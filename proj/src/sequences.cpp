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

#include "dcm/sequences.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>

#include "text_util.hpp"

namespace dcm {

DegreeSequence::DegreeSequence(std::vector<Count> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[i - 1]) {
      throw DomainError("degree sequence increases at position " + std::to_string(i));
    }
  }
}

DegreeSequence DegreeSequence::sorted(std::vector<Count> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return DegreeSequence(std::move(values));
}

bool erdos_gallai_check(const DegreeSequence& d) {
  const auto values = d.values();
  const std::size_t p = values.size();
  const std::int64_t total = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  if (total % 2 != 0) return false;
  // The prefix r = p is included: for p == 1 it is the only test that
  // rules out a lone positive degree.
  std::int64_t prefix = 0;
  for (std::size_t r = 1; r <= p; ++r) {
    prefix += values[r - 1];
    std::int64_t bound = static_cast<std::int64_t>(r) * static_cast<std::int64_t>(r - 1);
    for (std::size_t k = r; k < p; ++k) {
      bound += std::min<std::int64_t>(static_cast<std::int64_t>(r), values[k]);
    }
    if (prefix > bound) return false;
  }
  return true;
}

HavelHakimiResult havel_hakimi(const DegreeSequence& d) {
  const std::size_t p = d.size();
  HavelHakimiResult result;
  for (std::size_t i = 0; i < p; ++i) {
    if (d[i] + std::size_t{1} > p) {
      result.reason = "degree " + std::to_string(d[i]) + " of node " + std::to_string(i) +
                      " exceeds p - 1 = " + std::to_string(p == 0 ? 0 : p - 1);
      return result;
    }
  }

  Graph g(p, Orientation::undirected);
  std::vector<std::int64_t> residual(d.values().begin(), d.values().end());
  std::vector<bool> active(p, true);
  std::vector<Node> order;
  // Largest residual first, ties by smallest id.
  auto by_residual = [&residual](Node a, Node b) {
    return residual[a] != residual[b] ? residual[a] > residual[b] : a < b;
  };

  for (std::size_t step = 1;; ++step) {
    order.clear();
    for (Node x = 0; x < p; ++x) {
      if (active[x]) order.push_back(x);
    }
    if (order.empty()) break;
    std::sort(order.begin(), order.end(), by_residual);
    const Node hub = order.front();
    const auto need = residual[hub];
    if (need == 0) break;
    active[hub] = false;
    residual[hub] = 0;
    if (static_cast<std::size_t>(need) > order.size() - 1) {
      result.failed_step = step;
      result.reason = "node " + std::to_string(hub) + " needs " + std::to_string(need) +
                      " partners but only " + std::to_string(order.size() - 1) + " remain";
      return result;
    }
    for (std::size_t k = 1; k <= static_cast<std::size_t>(need); ++k) {
      const Node partner = order[k];
      if (residual[partner] == 0) {
        result.failed_step = step;
        result.reason = "residual degree of node " + std::to_string(partner) +
                        " would become negative";
        return result;
      }
      --residual[partner];
      g.add_arc(hub, partner);
    }
  }
  result.graph = std::move(g);
  return result;
}

Graph indegree_realize(const DegreeSequence& d) {
  const std::size_t p = d.size();
  Graph g(p, Orientation::directed);
  for (Node head = 0; head < p; ++head) {
    if (d[head] >= p) {
      throw DomainError("in-degree " + std::to_string(d[head]) + " of node " +
                        std::to_string(head) + " needs a self-loop (p = " + std::to_string(p) +
                        ")");
    }
    Count added = 0;
    for (Node tail = 0; added < d[head]; ++tail) {
      if (tail == head) continue;
      g.add_arc(tail, head);
      ++added;
    }
  }
  return g;
}

GoodSequence::GoodSequence(std::vector<Count> values) : values_(std::move(values)) {
  if (!goodness(values_).is_good) throw DomainError("sequence is not good");
}

Graph realize_good_sequence(const GoodSequence& a) {
  const auto values = a.values();
  Graph g(values.size(), Orientation::undirected);
  Node hub = 0;
  Node next = 1;
  for (std::size_t level = 1; level < values.size(); ++level) {
    const Count width = values[level] - values[level - 1];
    if (width == 0) break;
    for (Count u = 0; u < width; ++u) g.add_arc(hub, next + u);
    hub = next;
    next += width;
  }
  return g;
}

std::vector<std::int64_t> parse_sequence(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError("missing sequence line", 0);
  std::vector<std::int64_t> values;
  values.reserve(tokens.size());
  for (const auto& tok : tokens) values.push_back(detail::parse_integer(tok, reader.line()));
  std::vector<std::string> extra;
  if (reader.next(extra)) throw ParseError("sequence must be on a single line", reader.line());
  return values;
}

std::vector<std::int64_t> parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

}  // namespace dcm
